import io
import itertools
import random
import subprocess
import sys

import pytest

from frab import Frab, parse_frab_text, render_frab_text
from frab.cli import main
from oracle import random_int_dict, random_tokens


def run(args, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main([str(a) for a in args])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def tables(tmp_path):
    x = tmp_path / "x.frab"
    y = tmp_path / "y.frab"
    x.write_text("a\t3\nb\t1\nc\t1\nd\t2\n")
    y.write_text("a\t2\nb\t1\nd\t3\ne\t1\n")
    return x, y


def test_add_app_b_counts(tables, capsys):
    code, out, _ = run(["add", *tables], capsys)
    assert code == 0
    assert out == "a\t5\nb\t2\nc\t1\nd\t5\ne\t1\n"


def test_add_many_and_single(tables, capsys):
    x, y = tables
    assert run(["add", x, y, x], capsys)[1] == "a\t8\nb\t3\nc\t2\nd\t7\ne\t1\n"
    assert run(["add", x], capsys)[1] == x.read_text()


def test_sub(tables, capsys):
    x, y = tables
    code, out, _ = run(["sub", x, y], capsys)
    assert code == 0
    assert out == "a\t1\nc\t1\nd\t-1\ne\t-1\n"
    assert run(["sub", x, x], capsys)[1] == ""


def test_scale(tables, capsys):
    x, _ = tables
    assert run(["scale", "2", x], capsys)[1] == "a\t6\nb\t2\nc\t2\nd\t4\n"
    assert run(["scale", "0.5", x], capsys)[1] == "a\t1.5\nb\t0.5\nc\t0.5\nd\t1\n"
    assert run(["scale", "--", "-1", x], capsys)[1] == "a\t-3\nb\t-1\nc\t-1\nd\t-2\n"


def test_scale_rejects_bad_factor(tables, capsys):
    with pytest.raises(SystemExit) as info:
        main(["scale", "nan", str(tables[0])])
    assert info.value.code == 2


def test_zap(tmp_path, capsys):
    f = tmp_path / "f.frab"
    f.write_text("a\t4\np\t1.7763568394002505e-15\n")
    assert run(["zap", "--tol", "1e-12", f], capsys)[1] == "a\t4\n"
    code, _, err = run(["zap", "--tol", "-1", f], capsys)
    assert code == 2 and err.count("\n") == 1


def test_show(tables, capsys):
    code, out, _ = run(["show", tables[0]], capsys)
    assert code == 0
    assert out == "A frab object with entries\na b c d \n3 1 1 2 \n"


def test_eq_exit_codes(tables, tmp_path, capsys):
    x, y = tables
    assert run(["eq", x, x], capsys)[0] == 0
    assert run(["eq", x, y], capsys)[0] == 1
    shuffled = tmp_path / "x2.frab"
    shuffled.write_text("d\t1\nb\t1\na\t3\nc\t1\nd\t1\nq\t0\n")
    assert run(["eq", x, shuffled], capsys)[0] == 0


def test_tabulate_and_reconstruct(tmp_path, capsys):
    tok = tmp_path / "xl.txt"
    tok.write_text("a a b\nc  d\td a\n")
    assert run(["tabulate", tok], capsys)[1] == "a\t3\nb\t1\nc\t1\nd\t2\n"
    counts = tmp_path / "x.frab"
    counts.write_text("a\t3\nb\t1\nc\t1\nd\t2\n")
    assert run(["reconstruct", counts], capsys)[1] == "a\na\na\nb\nc\nd\nd\n"


def test_tabulate_empty_file(tmp_path, capsys):
    tok = tmp_path / "empty.txt"
    tok.write_text("")
    assert run(["tabulate", tok], capsys) == (0, "", "")


def test_reconstruct_negative(tmp_path, capsys):
    f = tmp_path / "neg.frab"
    f.write_text("a\t-1\n")
    code, out, err = run(["reconstruct", f], capsys)
    assert code == 2
    assert out == ""
    assert "negative" in err and err.count("\n") == 1


def test_reconstruct_non_integral(tmp_path, capsys):
    f = tmp_path / "half.frab"
    f.write_text("a\t1.5\n")
    code, _, err = run(["reconstruct", f], capsys)
    assert code == 2 and "non-integral" in err


@pytest.mark.parametrize(
    "content, needle",
    [("x 2\n", "line 1"), ("x\t1\ny\tNaN\n", "line 2"), ("\t1\n", "empty symbol")],
)
def test_parse_failures_exit_2(tmp_path, capsys, content, needle):
    f = tmp_path / "bad.frab"
    f.write_text(content)
    code, out, err = run(["show", f], capsys)
    assert code == 2 and out == ""
    assert needle in err and err.count("\n") == 1


def test_missing_file_exit_2(tmp_path, capsys):
    code, _, err = run(["show", tmp_path / "nope.frab"], capsys)
    assert code == 2 and err


def test_stdin_dash(tables, capsys, monkeypatch):
    x, _ = tables
    code, out, _ = run(["add", "-", x], capsys, stdin="a\t1\nz\t1\n", monkeypatch=monkeypatch)
    assert code == 0
    assert out == "a\t4\nb\t1\nc\t1\nd\t2\nz\t1\n"
    code, out, _ = run(["tabulate", "-"], capsys, stdin="q q r", monkeypatch=monkeypatch)
    assert out == "q\t2\nr\t1\n"


def test_add_order_insensitive_randomized(tmp_path, capsys):
    rng = random.Random(5)
    for trial in range(20):
        paths = []
        for j in range(3):
            p = tmp_path / f"f{trial}_{j}.frab"
            p.write_text(render_frab_text(Frab(random_int_dict(rng, max_symbols=15, bound=1000))))
            paths.append(p)
        outputs = {run(["add", *perm], capsys)[1] for perm in itertools.permutations(paths)}
        assert len(outputs) == 1


def test_pipeline_equivalence_randomized(tmp_path, capsys):
    rng = random.Random(9)
    for trial in range(20):
        a, b = random_tokens(rng, 8, 300), random_tokens(rng, 8, 300)
        fa, fb, fab = (tmp_path / f"{trial}{n}.txt" for n in ("a", "b", "ab"))
        fa.write_text(" ".join(a))
        fb.write_text("\n".join(b))
        fab.write_text(" ".join(a) + "\n" + " ".join(b))
        ta, tb = tmp_path / f"{trial}a.frab", tmp_path / f"{trial}b.frab"
        ta.write_text(run(["tabulate", fa], capsys)[1])
        tb.write_text(run(["tabulate", fb], capsys)[1])
        merged = run(["add", ta, tb], capsys)[1]
        assert merged == run(["tabulate", fab], capsys)[1]
        assert render_frab_text(parse_frab_text(merged)) == merged


def test_console_script_and_module(tables):
    x, y = tables
    for cmd in (["frab"], [sys.executable, "-m", "frab"]):
        proc = subprocess.run(cmd + ["add", str(x), str(y)], capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "a\t5\nb\t2\nc\t1\nd\t5\ne\t1\n"
    proc = subprocess.run(["frab", "eq", str(x), str(y)], capture_output=True, text=True)
    assert proc.returncode == 1
    proc = subprocess.run(["frab", "bogus"], capture_output=True, text=True)
    assert proc.returncode == 2
