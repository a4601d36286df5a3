"""Command-line verbs, exit codes and determinism."""

import shutil
import subprocess
import sys

import pytest

from conftest import DATA
from groupoids.cli import main, render_human


def run(argv, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def d(name):
    return str(DATA / name)


def test_validate(capsys):
    assert run(["validate", d("pair2.g")], capsys)[:2] == (0, "valid objects=2 elements=4\n")
    code, out, _ = run(["validate", d("broken.g")], capsys)
    assert code == 1 and out.startswith("InverseError element=e7")


def test_tiling_corners_then_skeleton(capsys, tmp_path):
    code, out, _ = run(["tiling", "corners", "--m", "2", "--n", "2"], capsys)
    assert code == 0
    f = tmp_path / "corners.g"
    f.write_text(out)
    code, out, _ = run(["skeleton", str(f)], capsys)
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[0].endswith("size=1 isotropy=D4")
    assert all(l.endswith("size=4 isotropy=Z2") for l in lines[1:])


def test_equiv(capsys):
    code, out, _ = run(["equiv", d("pair2.g"), d("triv.g")], capsys)
    assert code == 0
    assert out.splitlines() == [
        "verdict equivalent",
        "match a pt isotropy=trivial sizes=2,1",
        "functor-pair found",
    ]
    assert run(["equiv", d("z2.g"), d("triv.g")], capsys)[0] == 1


def test_orbits_isotropy_decompose(capsys, tmp_path):
    code, out, _ = run(["orbits", d("swap3.g")], capsys)
    assert out.splitlines() == ["orbit p size=2 members=p,q", "orbit r size=1 members=r"]
    code, out, _ = run(["isotropy", d("swap3.g"), "r"], capsys)
    assert code == 0 and out.splitlines()[0] == "isotropy r order=2 class=Z2"
    code, _, err = run(["isotropy", d("swap3.g"), "zz"], capsys)
    assert code == 2 and "'zz'" in err
    code, out, _ = run(["decompose", d("swap3.g"), "--write", str(tmp_path)], capsys)
    assert code == 0 and len(out.splitlines()) == 2
    assert run(["validate", str(tmp_path / "component_1.g")], capsys)[1] == "valid objects=1 elements=2\n"


def test_convolve_and_matrix(capsys):
    code, out, _ = run(["convolve", d("pair2.g"), d("pair2_a.alg"), d("pair2_b.alg")], capsys)
    assert code == 0 and out == "coef e1 19/1\ncoef e2 22/1\ncoef e3 43/1\ncoef e4 50/1\n"
    code, sym, _ = run(
        ["convolve", "--formula", "symmetric", d("pair2.g"), d("pair2_a.alg"), d("pair2_b.alg")], capsys
    )
    assert sym == out
    code, out, _ = run(["matrix", d("pair2.g"), d("pair2_a.alg")], capsys)
    assert out == "2\n1/1 2/1\n3/1 4/1\n"
    code, out, _ = run(["matrix", d("z2.g"), d("z2_x.alg")], capsys)
    assert code == 1 and out.startswith("NotAPairGroupoid")


def test_morphism_and_homotopy_checks(capsys):
    assert run(["morphism-check", d("swap3_z2.mor")], capsys)[0] == 0
    code, out, _ = run(["morphism-check", d("swap3_bad.mor")], capsys)
    assert code == 1 and "law=composition" in out
    code, out, _ = run(["homotopy-check", d("swap3_homotopy.hom")], capsys)
    assert (code, out) == (0, "homotopy valid\n")
    code, out, _ = run(["homotopy-check", d("swap3_search.hom")], capsys)
    assert code == 0 and out.splitlines() == ["homotopy found", "h: p -> e", "h: q -> s", "h: r -> e"]
    code, out, _ = run(["homotopy-check", d("swap3_nonhomotopic.hom")], capsys)
    assert code == 1 and out.startswith("NotHomotopic")


def test_tiling_restricted_and_census(capsys, tmp_path):
    code, out, _ = run(["tiling", "census", "--m", "2", "--n", "2", "--samples", d("census_2x2.pts")], capsys)
    assert code == 0 and [l.split()[1] for l in out.splitlines()] == ["O1", "O2", "O3", "O4", "O5", "O6"]
    _, default, _ = run(["tiling", "census", "--m", "2", "--n", "2"], capsys)
    assert default == out
    code, out, _ = run(["tiling", "restricted", "--m", "2", "--n", "2", "--samples", d("restricted_2x2.pts")], capsys)
    f = tmp_path / "r.g"
    f.write_text(out)
    _, sk, _ = run(["skeleton", str(f)], capsys)
    assert "size=2 isotropy=Z2×Z2" in sk


def test_stdin_input(capsys, monkeypatch):
    text = (DATA / "pair2.g").read_text()
    assert run(["validate", "-"], capsys, stdin=text, monkeypatch=monkeypatch)[0] == 0


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["validate"], ["tiling", "corners", "--m", "0", "--n", "2"],
     ["tiling", "bad", "--m", "1", "--n", "1"], ["validate", "/nonexistent/file.g"]],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_format_error_exit_1(capsys, tmp_path):
    f = tmp_path / "bad.g"
    f.write_text("objects:\nx\nelements:\ne x\n")
    code, out, _ = run(["validate", str(f)], capsys)
    assert code == 1 and out == "FormatError expected 'id alpha beta inverse' line=4\n"


def test_human_tables_derive_from_machine_lines(capsys):
    _, machine, _ = run(["orbits", d("swap3.g")], capsys)
    _, human, _ = run(["--human", "orbits", d("swap3.g")], capsys)
    assert human.splitlines() == render_human(machine.splitlines())
    assert human.splitlines()[0].split() == ["orbit", "size", "members"]


def test_output_is_byte_identical_across_processes():
    exe = [sys.executable, "-m", "groupoids"]
    argv = ["tiling", "corners", "--m", "3", "--n", "2"]
    first = subprocess.run(exe + argv, capture_output=True, check=True).stdout
    second = subprocess.run(exe + argv, capture_output=True, check=True, env={"PYTHONHASHSEED": "123", "PATH": ""}).stdout
    assert first == second


@pytest.mark.skipif(shutil.which("groupoids") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["groupoids", "validate", d("triv.g")], capture_output=True, text=True)
    assert out.returncode == 0
