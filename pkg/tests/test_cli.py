"""Command line round trips, formats, and exit codes."""

import json
import shutil
import subprocess
import sys

import pytest

from centroinv.cli import BIJECTIONS, main
from centroinv.verify import THEOREMS


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_tsv(capsys):
    code, out, _ = run(
        capsys, "enumerate", "--class", "cinv321-even", "--size", "4"
    )
    assert code == 0
    assert out.splitlines() == ["1 2 3 4", "2 1 4 3", "1 3 2 4", "3 4 1 2"]


def test_enumerate_json(capsys):
    code, out, _ = run(
        capsys,
        "enumerate", "--class", "subsets", "--size", "2", "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {
        "class": "subsets",
        "size": 2,
        "objects": ["", "1", "2", "1,2"],
    }


def test_stats_tsv(capsys):
    code, out, _ = run(
        capsys,
        "stats", "--class", "cinv321-even", "--size", "6", "--stat", "des+",
    )
    assert code == 0
    assert out.splitlines() == [
        "exponent\tcoefficient",
        "0\t1",
        "1\t6",
        "2\t1",
    ]


def test_stats_json_and_jobs(capsys):
    code, serial, _ = run(
        capsys,
        "stats", "--class", "cinv321-odd", "--size", "9", "--stat", "maj+",
        "--format", "json",
    )
    assert code == 0
    doc = json.loads(serial)
    assert doc["class"] == "cinv321-odd"
    assert doc["size"] == 9
    assert doc["stat"] == "maj+"
    assert doc["poly"] == [1, 1, 2, 1, 1]
    assert doc["count"] == 6
    code, parallel, _ = run(
        capsys,
        "stats", "--class", "cinv321-odd", "--size", "9", "--stat", "maj+",
        "--format", "json", "--jobs", "2",
    )
    assert code == 0
    assert json.loads(parallel) == doc


BIJECTION_CASES = (
    ("excedance-subset", "2 1 4 3", None, "1"),
    ("subset-involution", "1", "2", "2 1 4 3"),
    ("subset-matching", "1", "2", "1-2,3-4"),
    ("involution-matching", "2 1 4 3", None, "1-2,3-4"),
    ("matching-involution", "1-2,3-4", "4", "2 1 4 3"),
    ("subset-path", "1", "2", "NE"),
    ("g", "NENE", None, "EENN"),
    ("g-inverse", "EENN", None, "NENE"),
    ("theta", "2 4 8 6 3 1 5 7", None, "-2 -4 1 3"),
    ("theta-inverse", "-4 3 2 -1", None, "5 3 2 8 1 7 6 4"),
    ("rsk-path", "2 1 4 3", None, "NENE"),
    ("theta-rect", "2 1 4 3", "2,2", "EENN"),
    ("theta-rect-inverse", "EENN", "2,2", "2 1 4 3"),
)


def test_every_bijection_has_a_case():
    assert {name for name, *_ in BIJECTION_CASES} == set(BIJECTIONS)


@pytest.mark.parametrize("name,text,size,expected", BIJECTION_CASES)
def test_bijection_cases(capsys, name, text, size, expected):
    argv = ["bijection", "--name", name, "--apply", text]
    if size is not None:
        argv += ["--size", size]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out.strip() == expected


def test_bijection_json(capsys):
    code, out, _ = run(
        capsys,
        "bijection", "--name", "g", "--apply", "NENE", "--format", "json",
    )
    assert code == 0
    assert json.loads(out) == {"name": "g", "input": "NENE", "output": "EENN"}


def test_usage_errors_exit_2(capsys):
    # missing context size
    code, _, err = run(
        capsys, "bijection", "--name", "subset-involution", "--apply", "1"
    )
    assert code == 2
    assert "error:" in err
    # malformed object
    code, _, err = run(
        capsys, "bijection", "--name", "theta", "--apply", "1 1"
    )
    assert code == 2
    # size with the wrong parity for the class
    code, _, err = run(
        capsys, "stats", "--class", "cinv321-even", "--size", "5",
        "--stat", "des",
    )
    assert code == 2
    # argparse rejections also land on 2
    with pytest.raises(SystemExit) as exc:
        main(["bijection", "--name", "nope", "--apply", "x"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_verify_tsv(capsys):
    code, out, _ = run(capsys, "verify", "--name", "T-recr", "--max-n", "4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n\tstatus\tcounterexample"
    assert lines[1] == "0\tpass\t"
    assert lines[-1] == "4\tpass\t"


def test_verify_json(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--name", "T-despoly", "--max-n", "5", "--format", "json",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["theorem"] == "T-despoly"
    assert all(r["status"] == "pass" for r in doc["results"])
    assert "duration_s" in doc


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--name", "all", "--max-n", "2")
    assert code == 0
    for name in THEOREMS:
        assert f"# {name}" in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    monkeypatch.setitem(THEOREMS, "T-fake", ("always fails", 1, lambda n: "boom"))
    code, out, _ = run(capsys, "verify", "--name", "T-fake")
    assert code == 1
    assert "fail\tboom" in out


def test_module_entry_point():
    proc = subprocess.run(
        [
            sys.executable, "-m", "centroinv.cli",
            "stats", "--class", "subsets", "--size", "3", "--stat", "des+",
        ],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "exponent\tcoefficient"


def test_console_script():
    exe = shutil.which("centroinv")
    if exe is None:
        pytest.skip("console script not on PATH")
    proc = subprocess.run(
        [exe, "bijection", "--name", "g", "--apply", "NENE"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "EENN"
