"""ASCII drawing of a Dyck path.

Rows run from the highest level down to level 1.  An up step from level
``y`` to ``y + 1`` puts ``/`` in row ``y + 1``; a down step from level
``y`` puts ``\\`` in row ``y``.  Each step owns one column.  Trailing
spaces are stripped from every row.
"""

from __future__ import annotations

from dyckpath.core import UP, DyckWord, level_profile


def render(w: DyckWord) -> str:
    levels = level_profile(w)
    height = max(levels)
    rows = [[" "] * len(w) for _ in range(height)]
    for col, step in enumerate(w.steps):
        if step is UP:
            rows[height - levels[col] - 1][col] = "/"
        else:
            rows[height - levels[col]][col] = "\\"
    return "\n".join("".join(row).rstrip() for row in rows)
