import json
import xml.etree.ElementTree as ET

import pytest

from triops.cli import main, parse_complex, parse_triangle
from triops.errors import ParseError
from triops.geometry import area, make_triple, triple_from_csv


def test_parse_complex_forms():
    assert parse_complex("1/3") == pytest.approx(complex(1 / 3, 0))
    assert parse_complex("-0.25") == -0.25
    assert parse_complex("0.7+0.8i") == complex(0.7, 0.8)
    assert parse_complex("2-i") == complex(2, -1)
    assert parse_complex("i") == 1j
    assert parse_complex("-i") == -1j
    assert parse_complex("1+2j") == complex(1, 2)
    assert parse_complex("-1/3+2/5i") == pytest.approx(complex(-1 / 3, 2 / 5))
    assert parse_complex("1e-3") == 0.001


def test_parse_complex_errors():
    for bad in ("", "x", "1+2", "i+i", "1+1+1i", "1//3"):
        with pytest.raises(ParseError):
            parse_complex(bad)


def test_parse_triangle():
    t = parse_triangle("0,0,1,0,0.7,0.8")
    assert t.vertices == (0.0, 1.0, complex(0.7, 0.8))
    t = parse_triangle("0,0,1,0,1/2,3/2")
    assert t.c == complex(0.5, 1.5)
    with pytest.raises(ParseError):
        parse_triangle("1,2,3")


def test_apply_command(capsys):
    code = main(["apply", "--p", "1/3", "--q", "2/3", "--triangle", "0,0,1,0,0.7,0.8"])
    assert code == 0
    out = capsys.readouterr().out.strip()
    image = triple_from_csv(out)
    src = make_triple(0.0, 1.0, complex(0.7, 0.8))
    assert area(image) == pytest.approx(area(src) / 7.0, rel=1e-12)


def test_apply_degenerate_note(capsys):
    code = main(["apply", "--eta", "0", "--etap", "0", "--triangle", "0,0,1,0,0.7,0.8"])
    assert code == 0
    captured = capsys.readouterr()
    assert "degenerate" in captured.err
    fields = captured.out.strip().split(",")
    assert len(fields) == 6


def test_classify_command(capsys):
    code = main(["classify", "--p", "1/3", "--q", "2/3"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["regular"] is True
    assert report["normal"] is True
    assert report["area_preserving"] is False
    assert report["p"]["re"] == pytest.approx(1 / 3)


def test_classify_infinite_chart(capsys):
    code = main(["classify", "--eta", "1", "--etap", "0"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["xi"] == "inf"


def test_usage_errors(capsys):
    assert main(["apply", "--p", "1/3"]) == 2
    assert main(["apply", "--p", "1/3", "--q", "3", "--eta", "1", "--etap", "1"]) == 2
    assert main(["apply"]) == 2
    assert main(["apply", "--p", "bogus", "--q", "1"]) == 2
    assert main(["verify", "nonsense"]) == 2
    capsys.readouterr()


def test_domain_errors(capsys):
    assert main(["apply", "--p", "2", "--q", "1/2"]) == 3  # pq = 1
    assert main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5", "--theta-yp", "1/2"]) == 3
    assert main(["division-points", "0"]) == 3
    capsys.readouterr()


def test_orbit_csv_output(capsys):
    code = main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5", "--steps", "4"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "n,re_a,im_a,re_b,im_b,re_c,im_c"
    assert len(lines) == 6  # header + steps 0..4
    base = triple_from_csv(lines[1].split(",", 1)[1])
    for row in lines[1:]:
        n, rest = row.split(",", 1)
        t = triple_from_csv(rest)
        assert area(t) == pytest.approx(area(base), rel=1e-9)


def test_orbit_default_steps_is_period(capsys):
    code = main(["orbit", "--theta-y", "1/5", "--theta-yp", "19/20"])
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 22  # header + steps 0..20
    first = triple_from_csv(lines[1].split(",", 1)[1])
    last = triple_from_csv(lines[-1].split(",", 1)[1])
    assert max(abs(x - y) for x, y in zip(first.vertices, last.vertices)) <= 1e-9


def test_orbit_files(tmp_path, capsys):
    csv_path = tmp_path / "orbit.csv"
    svg_path = tmp_path / "orbit.svg"
    assert main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5",
                 "--steps", "5", "--csv", str(csv_path)]) == 0
    assert main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5",
                 "--steps", "5", "--svg", str(svg_path)]) == 0
    capsys.readouterr()
    assert csv_path.read_text().startswith("n,re_a")
    root = ET.fromstring(svg_path.read_bytes())
    assert root.tag.endswith("svg")
    polygons = [el for el in root if el.tag.endswith("polygon")]
    assert len(polygons) == 6
    for el in polygons:
        assert el.get("fill") == "none"
    # deterministic output: rendering twice gives identical bytes
    first = svg_path.read_bytes()
    assert main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5",
                 "--steps", "5", "--svg", str(svg_path)]) == 0
    capsys.readouterr()
    assert svg_path.read_bytes() == first


def test_orbit_csv_and_svg_together(tmp_path, capsys):
    csv_path = tmp_path / "orbit.csv"
    svg_path = tmp_path / "orbit.svg"
    assert main(["orbit", "--theta-x", "1/4", "--theta-y", "1/5",
                 "--steps", "3", "--csv", str(csv_path),
                 "--svg", str(svg_path)]) == 0
    capsys.readouterr()
    rows = csv_path.read_text().strip().splitlines()
    assert rows[0].startswith("n,re_a") and len(rows) == 5
    assert svg_path.read_bytes().count(b"<polygon") == 4


def test_division_points_command(capsys):
    assert main(["division-points", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 3
    assert lines[0] == "0"
    assert float(lines[1]) == pytest.approx(1.0)
    assert lines[2] == "inf"


def test_verify_command(capsys):
    assert main(["verify", "routh"]) == 0
    out = capsys.readouterr().out
    assert "PASS routh_ratio" in out
    assert "1/1 checks passed" in out


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()
