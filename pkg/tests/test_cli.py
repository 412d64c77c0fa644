import json
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from alcovefold.cli import main
from alcovefold.render import RenderError, render_svg
from alcovefold.root_system import construct

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def strip_clock(reports):
    for r in reports:
        r.pop("wall_clock", None)
    return reports


@pytest.mark.parametrize("name,argv", [
    ("verify_A1", ["verify", "--kind", "A1", "--lambda", "2"]),
    ("verify_A2", ["verify", "--kind", "A2", "--lambda", "1,1"]),
    ("verify_A2_counterexample", ["verify", "--kind", "A2", "--lambda", "3,3", "--check-counterexample", "4,2-in-alpha"]),
    ("oracle_A1", ["oracle", "--kind", "A1", "--lambda", "2"]),
    ("oracle_A2", ["oracle", "--kind", "A2", "--lambda", "1,1"]),
])
def test_golden_reports(capsys, name, argv):
    code, report = run(capsys, *argv)
    assert code == 0
    assert strip_clock(report) == json.loads((GOLDEN / f"{name}.json").read_text())


def test_report_schema(capsys):
    code, report = run(capsys, "verify", "--kind", "A2", "--lambda", "1,1")
    assert list(report[0])[:8] == ["kind", "lambda", "type_length", "endpoint_set_size",
                                   "a_type_set_size", "verdict", "mismatch_witnesses", "wall_clock"]
    assert report[0]["verdict"] == "match" and report[0]["endpoint_set_size"] == 7


def test_lambda_in_root_coordinates(capsys):
    code, report = run(capsys, "verify", "--kind", "A1", "--lambda", "1-in-alpha")
    assert code == 0 and report[0]["endpoint_set_size"] == 3


def test_bad_lambda_is_a_usage_error(capsys):
    assert main(["verify", "--kind", "A1", "--lambda", "1"]) == 2
    assert "root lattice" in capsys.readouterr().err
    assert main(["verify", "--kind", "A2", "--lambda", "1,1,1"]) == 2
    assert main(["verify", "--kind", "E9"]) == 2


def test_oracle_zero(capsys):
    for kind, lam in [("A1", "0"), ("G2", "0,0"), ("A3", "0,0,0")]:
        code, report = run(capsys, "oracle", "--kind", kind, "--lambda", lam)
        assert code == 0 and report[0]["dimension"] == 1


def test_json_file_written(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, report = run(capsys, "oracle", "--kind", "A2", "--lambda", "1,1", "--json", str(path))
    assert code == 0 and json.loads(path.read_text()) == report


def test_grid_verify_and_all_types(capsys):
    code, report = run(capsys, "verify", "--kind", "A2,B2", "--max-height", "2", "--all-minimal-types", "--check-unfold")
    assert code == 0
    assert all(r["verdict"] == "match" for r in report)
    # label sum <= 2 and lambda in the root lattice; lambdas are printed as root coefficients
    cells = [(r["kind"], tuple(r["lambda"])) for r in report]
    b2 = construct("B2")
    expect = [("A2", (0, 0)), ("A2", (1, 1))] + [
        ("B2", b2.from_dynkin_labels(lab)) for lab in [(0, 0), (0, 2), (1, 0), (2, 0)]]
    assert cells == expect


@pytest.mark.parametrize("name,argv", [("dump_A1.txt", ["A1", "2"]), ("dump_A2.txt", ["A2", "1,1"])])
def test_dump_golden(capsys, tmp_path, name, argv):
    out = tmp_path / "d.txt"
    code, report = run(capsys, "dump-galleries", "--kind", argv[0], "--lambda", argv[1], "-o", str(out))
    assert code == 0
    assert out.read_text() == (GOLDEN / name).read_text()
    assert report["galleries"] == len(out.read_text().splitlines())


def test_dump_zero_and_threads(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "dump-galleries", "--kind", "A2", "--lambda", "0,0", "-o", str(a))
    assert a.read_text().splitlines() == ["A2 | src=0,0 | start=- | moves= | end=0,0"]
    run(capsys, "dump-galleries", "--kind", "B2", "--lambda", "2,2", "-o", str(a))
    run(capsys, "dump-galleries", "--kind", "B2", "--lambda", "2,2", "-o", str(b), "--threads", "4")
    assert a.read_bytes() == b.read_bytes()


def test_dump_io_error(capsys, tmp_path):
    assert main(["dump-galleries", "--kind", "A1", "--lambda", "2", "-o", str(tmp_path / "no" / "x.txt")]) == 2
    assert "No such file" in capsys.readouterr().err


def test_verify_is_deterministic(capsys):
    a = strip_clock(run(capsys, "verify", "--kind", "G2", "--lambda", "0,2")[1])
    b = strip_clock(run(capsys, "verify", "--kind", "G2", "--lambda", "0,2", "--threads", "3")[1])
    assert a == b


def svg_groups(text):
    root = ET.fromstring(text)
    ns = "{http://www.w3.org/2000/svg}"
    return {g.get("id"): g for g in root.iter(ns + "g")}


def test_render_counterexample(capsys, tmp_path):
    out = tmp_path / "a2.svg"
    code, _ = run(capsys, "render", "--kind", "A2", "--lambda", "3,3", "--mark", "4,2-in-alpha", "--gallery", "0", "-o", str(out))
    assert code == 0
    groups = svg_groups(out.read_text())
    assert len(groups["orbit"]) == 6
    assert len(groups["endpoints"]) == 37
    assert groups["marks"].find("{http://www.w3.org/2000/svg}text").text == "not in dual hull"
    assert "gallery" in groups


def test_render_g2_and_zero(capsys, tmp_path):
    out = tmp_path / "g2.svg"
    assert main(["render", "--kind", "G2", "--lambda", "1,0", "-o", str(out)]) == 0
    assert len(svg_groups(out.read_text())["tiling"]) > 12
    rs = construct("A2")
    groups = svg_groups(render_svg(rs, (0, 0), [(0, 0)]))
    assert len(groups["orbit"]) == 1 and "orbit-hull" not in groups


def test_render_rank_error():
    with pytest.raises(RenderError):
        render_svg(construct("A3"), (1, 0, 1))
