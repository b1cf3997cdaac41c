import json
from fractions import Fraction

import pytest

from matchnet.cli import main
from matchnet.export import curve_csv, format_decimal, hasse_dot, parse_grid
from matchnet.polynomials import compose_rel
from matchnet.posets import build_poset
from matchnet.words import Word


def test_parse_grid():
    assert parse_grid("0:1:1/2") == [Fraction(0), Fraction(1, 2), Fraction(1)]
    assert parse_grid("0:1:0.25") == [Fraction(k, 4) for k in range(5)]
    with pytest.raises(ValueError):
        parse_grid("0:1")
    with pytest.raises(ValueError):
        parse_grid("1:0:0.1")
    with pytest.raises(ValueError):
        parse_grid("0:1:0")


def test_format_decimal_truncates_exactly():
    assert format_decimal(Fraction(1, 3), 5) == "0.33333"
    assert format_decimal(Fraction(2, 3), 5) == "0.66666"  # truncated, not rounded
    assert format_decimal(Fraction(-1, 8)) == "-0.125"
    assert format_decimal(Fraction(0)) == "0"
    assert format_decimal(Fraction(5)) == "5"


def test_curve_csv_deterministic():
    polys = {"01": compose_rel(Word((0, 1)))}
    grid = parse_grid("0:1:1/2")
    out1 = curve_csv(polys, grid)
    out2 = curve_csv(polys, grid)
    assert out1 == out2
    assert out1.splitlines()[0] == "p,01"
    assert out1.splitlines()[2] == "0.5,0.5625"


def test_hasse_dot():
    dot = hasse_dot(build_poset(2))
    assert dot.startswith("digraph hasse {")
    assert 'label="00\\nrank 0"' in dot
    # m=2 is the chain 00 < 10 < 01 < 11
    assert dot.count("->") == 3


def test_cli_rel_word(capsys):
    assert main(["rel", "--word", "01"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["polynomial"]["coeffs"] == ["0", "0", "4", "-4", "1"]
    assert data["nform"]["counts"] == ["0", "0", "4", "4", "1"]


def test_cli_rel_brute_force_agrees(capsys):
    main(["rel", "--word", "011"])
    fast = capsys.readouterr().out
    main(["rel", "--word", "011", "--brute-force"])
    brute = capsys.readouterr().out
    assert fast == brute


def test_cli_rel_network_file(tmp_path, capsys):
    path = tmp_path / "net.json"
    path.write_text(json.dumps({"w": 2, "l": 2, "matchsticks": [[1]]}))
    assert main(["rel", "--network", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["nform"]["counts"] == ["0", "0", "4", "4", "1"]


def test_cli_compare(capsys):
    assert main(["compare", "00001", "11000"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdict"] == "INCOMPARABLE"
    assert len(data["witnesses"]) == 2


def test_cli_poset_json(capsys):
    assert main(["poset", "-m", "2"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["elements"] == ["00", "01", "10", "11"]


def test_cli_curve(capsys):
    assert main(["curve", "--word", "0", "--grid", "0:1:1/2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["p,0", "0,0", "0.5,0.25", "1,1"]


def test_cli_verify_single_suite(capsys):
    assert main(["verify", "oracle"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["passed"] and data["reports"][0]["suite"] == "oracle"


def test_cli_exit_codes(capsys):
    assert main(["rel", "--word", "2x"]) == 2
    assert main(["rel", "--word", "0" * 13]) == 3
    assert main(["rel", "--network", "/nonexistent.json"]) == 2
    assert main(["curve", "--grid", "0:1:1/2"]) == 2
    assert main(["verify", "bogus-suite"]) == 2
    capsys.readouterr()
