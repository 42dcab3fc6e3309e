import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dyckpath import enumerate_words  # noqa: E402

SAMPLE_WORD = "uduuudduuddd"


@pytest.fixture(scope="session")
def words_upto_10():
    return [w for n in range(11) for w in enumerate_words(n)]


@pytest.fixture(scope="session")
def words_upto_8(words_upto_10):
    return [w for w in words_upto_10 if w.semilength <= 8]
