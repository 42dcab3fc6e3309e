import io
import json
import subprocess
import sys

import pytest

from conftest import SAMPLE_WORD
from dyckpath.cli import envelope, format_points, main, parse_points


@pytest.fixture
def run(capsys, monkeypatch):
    def _run(*argv, stdin=None):
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        try:
            code = main(list(argv))
        except SystemExit as exc:
            code = exc.code
        out, err = capsys.readouterr()
        return code, out, err

    return _run


class TestValidate:
    def test_ok(self, run):
        code, out, _ = run("validate", SAMPLE_WORD)
        assert code == 0
        assert "6" in out

    def test_json(self, run):
        code, out, _ = run("validate", "--json", SAMPLE_WORD)
        assert json.loads(out) == {"word": SAMPLE_WORD, "semilength": 6}

    @pytest.mark.parametrize(
        "word, name, where",
        [("uud", "Unbalanced", None), ("uxd", "InvalidSymbol", "position 1"), ("du", "PrefixUnderflow", "position 0")],
    )
    def test_invalid(self, run, word, name, where):
        code, out, err = run("validate", word)
        assert code == 1
        assert out == ""
        assert name in err
        if where:
            assert where in err

    def test_alphabet(self, run):
        code, out, _ = run("peaks", "--alphabet", "()", "()(())")
        assert (code, out) == (0, "1,1;4,2\n")

    def test_bad_alphabet_is_usage_error(self, run):
        code, _, _ = run("validate", "--alphabet", "uu", "ud")
        assert code == 2


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["peaks", SAMPLE_WORD], "1,1;5,3;9,3"),
        (["valleys", SAMPLE_WORD], "2,0;7,1;12,0"),
        (["valleys", "--no-terminal", SAMPLE_WORD], "2,0;7,1"),
        (["modify", "--what=peaks", SAMPLE_WORD], "0,1;1,3;3,3"),
        (["modify", "--what=valleys", SAMPLE_WORD], "1,0;3,1;6,0"),
        (["factorize", "uuuddd"], "uuuddd"),
        (["factorize", SAMPLE_WORD], "ud-uuudd-uuddd"),
        (["encode", SAMPLE_WORD], "2,13,24"),
        (["from-peaks", "1,1;5,3;9,3"], SAMPLE_WORD),
        (["from-valleys", "2,0;7,1;12,0"], SAMPLE_WORD),
        (["from-valleys", " 2,0 ; 7,1 ; 12,0; "], SAMPLE_WORD),
        (["count", "6"], "132"),
        (["enumerate", "1"], "ud"),
        (["enumerate", "3", "--limit", "2"], "uuuddd\nuududd"),
        (["render", "uudd"], " /\\\n/  \\"),
        (["peaks", ""], ""),
    ],
)
def test_text_output(run, argv, expected):
    code, out, err = run(*argv)
    assert code == 0, err
    assert out == expected + "\n"


def test_enumerate_three_lines(run):
    _, out, _ = run("enumerate", "3")
    assert len(out.splitlines()) == 5


def test_factorize_json(run):
    _, out, _ = run("factorize", "--json", SAMPLE_WORD)
    assert json.loads(out)["fragments"] == ["ud", "uuudd", "uuddd"]


@pytest.mark.parametrize(
    "argv, key",
    [
        (["peaks", "--json", SAMPLE_WORD], "peaks"),
        (["valleys", "--json", SAMPLE_WORD], "valleys"),
        (["modify", "--json", SAMPLE_WORD], "modified"),
        (["encode", "--json", SAMPLE_WORD], "codes"),
        (["factorize", "--json", SAMPLE_WORD], "fragments"),
        (["from-peaks", "--json", "1,1;5,3;9,3"], "peaks"),
    ],
)
def test_envelope_is_canonical(run, argv, key):
    code, out, _ = run(*argv)
    assert code == 0
    text = out.rstrip("\n")
    obj = json.loads(text)
    assert list(obj)[:2] == ["word", "semilength"]
    assert key in obj
    assert json.dumps(obj, separators=(",", ":")) == text


def test_envelope_key_order():
    text = envelope(codes=[1], peaks=[(1, 1)], word="ud", semilength=1)
    assert text == '{"word":"ud","semilength":1,"peaks":[[1,1]],"codes":[1]}'
    with pytest.raises(KeyError):
        envelope(bogus=1)


class TestPointSetText:
    def test_round_trip(self):
        pts = [(1, 1), (5, 3), (9, 3)]
        assert parse_points(format_points(pts)) == pts
        assert format_points([]) == ""
        assert parse_points("") == []

    @pytest.mark.parametrize("bad", ["1,1;;5,3", "1;2", "a,b", "1,2,3"])
    def test_malformed(self, bad):
        with pytest.raises(ValueError):
            parse_points(bad)


class TestExitCodes:
    @pytest.mark.parametrize("cmd", ["validate", "factorize", "peaks", "valleys", "modify", "encode", "render"])
    def test_word_commands(self, run, cmd):
        assert run(cmd, "ud")[0] == 0
        assert run(cmd, "uud")[0] == 1
        assert run(cmd)[0] == 2

    @pytest.mark.parametrize("cmd", ["from-peaks", "from-valleys"])
    def test_point_commands(self, run, cmd):
        good = "1,1" if cmd == "from-peaks" else "2,0"
        assert run(cmd, good)[0] == 0
        assert run(cmd, "1,1;9,1")[0] == 1
        assert run(cmd, "1,x")[0] == 1
        assert run(cmd)[0] == 2

    @pytest.mark.parametrize("cmd", ["enumerate", "count"])
    def test_number_commands(self, run, cmd):
        assert run(cmd, "2")[0] == 0
        assert run(cmd, "-1")[0] == 2
        assert run(cmd, "two")[0] == 2

    def test_enumerate_bound(self, run):
        code, _, err = run("enumerate", "17")
        assert code == 1
        assert "bound" in err

    def test_no_command(self, run):
        assert run()[0] == 2
        assert run("frobnicate")[0] == 2


def test_from_peaks_reports_valley_below_axis(run):
    code, out, err = run("from-peaks", "1,1;9,1")
    assert code == 1
    assert "valley-below-axis" in err
    assert "a = 2 < b = 8" in err


def test_stdin(run):
    assert run("peaks", "-", stdin=SAMPLE_WORD + "\n")[1] == "1,1;5,3;9,3\n"
    assert run("from-valleys", "-", stdin="2,0;7,1;12,0\n")[1] == SAMPLE_WORD + "\n"


def test_pipeline_round_trip(run, words_upto_8):
    for w in words_upto_8:
        text = str(w)
        _, peaks_out, _ = run("peaks", text)
        _, word_out, _ = run("from-peaks", "-", stdin=peaks_out)
        assert word_out == text + "\n"
        _, valleys_out, _ = run("valleys", text)
        _, word_out, _ = run("from-valleys", valleys_out.strip())
        assert word_out == text + "\n"


def _dyck(*args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "dyckpath", *args], input=stdin, capture_output=True, text=True
    )


def test_real_shell_pipeline():
    peaks_out = _dyck("peaks", SAMPLE_WORD).stdout
    assert _dyck("from-peaks", "-", stdin=peaks_out).stdout == SAMPLE_WORD + "\n"
    proc = _dyck("validate", "du")
    assert proc.returncode == 1
    assert _dyck("count").returncode == 2
