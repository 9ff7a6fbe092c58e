import io
import json
import re

import pytest

from virtcover import parse
from virtcover.cli import main
from virtcover.realize import realize

from .conftest import T3, VT, VTX


def run(argv, capsys=None):
    buf = io.StringIO()
    rc = main(argv, out=buf)
    return rc, buf.getvalue()


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {"t3": T3, "vt": VT, "vtx": VTX, "one": "O1+ O2+ # U1+ U2+", "bad": "O1+ U1", "odd": "O1+ U1-"}.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text + "\n")
        paths[name] = str(p)
    return paths


def test_parse_echoes_normalized(files):
    assert run(["parse", files["vtx"]]) == (0, VTX + "\n")


def test_syntax_and_io_errors_exit_2(files, tmp_path, capsys):
    assert run(["parse", files["bad"]])[0] == 2
    assert "missing sign" in capsys.readouterr().err
    assert run(["parse", files["odd"]])[0] == 2
    assert run(["parse", str(tmp_path / "absent.txt")])[0] == 2


def test_check_one_cut_point_is_a_report(files):
    rc, out = run(["check", files["one"]])
    assert rc == 0
    assert "is_cut_system: false" in out


def test_cover_of_trefoil(files, tmp_path):
    rc, out = run(["cover", files["t3"], "--cut", "canonical"])
    assert rc == 0 and len(out.strip().splitlines()) == 2
    target = tmp_path / "cover.txt"
    assert run(["cover", files["t3"], "--cut", "canonical", "--out", str(target)]) == (0, "")
    assert target.read_text() == out
    rc, report = run(["check", str(target)])
    assert "normal: true" in report and "components: 2" in report


def test_cover_output_always_normal(files, tmp_path):
    for key in ("t3", "vtx"):
        target = tmp_path / f"{key}.cover"
        run(["cover", files[key], "--out", str(target)])
        assert "normal: true" in run(["check", str(target)])[1]


def test_cover_domain_error_exit_1(files):
    assert run(["cover", files["one"], "--cut", "inline"])[0] == 1
    assert run(["cover", files["vt"]])[0] == 1


def test_invariants_json(files):
    rc, out = run(["invariants", files["vtx"], "--json"])
    d = json.loads(out)
    assert rc == 0
    assert (d["odd_writhe"], d["lk_N"], d["normal"]) == (2, 2, False)
    assert d["f_polynomial"] == "-A^-10 + A^-6 + A^-4"


def test_invariants_text_and_figure(files, tmp_path):
    fig = tmp_path / "report.svg"
    rc, out = run(["invariants", files["vtx"], "--figure", str(fig)])
    assert rc == 0 and "lk_N: 2" in out
    svg = fig.read_text()
    assert len(re.findall(r'id="cut-\d+"', svg)) == 2
    assert len(re.findall(r'id="chord-', svg)) == 2 + 4


def test_realize_svg_token_counts(files, tmp_path):
    svg_path = tmp_path / "vt.svg"
    rc, out = run(["realize", files["vt"], "--seed", "2", "--svg", str(svg_path)])
    code = parse(out)
    assert rc == 0 and code == realize(parse(VT), 2).code
    svg = svg_path.read_text()
    assert len(re.findall(r'id="classical-', svg)) == 2
    assert len(re.findall(r'id="virtual-', svg)) == len(code.virtual_ids()) >= 1


def test_walk_is_deterministic(files, capsys):
    _, realized = run(["realize", files["t3"]])
    first = run(["walk", files["t3"], "--moves", "6", "--seed", "4"])
    err1 = capsys.readouterr().err
    second = run(["walk", files["t3"], "--moves", "6", "--seed", "4"])
    err2 = capsys.readouterr().err
    assert first == second and err1 == err2 and first[0] == 0
    assert run(["walk", files["vtx"], "--moves", "5", "--seed", "1", "--cut-moves"])[0] == 0
    assert run(["walk", files["vtx"], "--moves", "5", "--seed", "1"])[0] == 1


def test_selftest_small(capsys):
    rc, out = run(["selftest", "--cases", "3", "--seed", "5"])
    assert rc == 0
    assert out.strip().splitlines()[-1] == "passed 10/10"
    assert run(["selftest", "--cases", "3", "--seed", "5"])[1] == out


def test_usage_error():
    assert run(["frobnicate"])[0] == 2
