import json

import pytest

import main as cli
from src.tetragap.config import EXIT_DEGENERATE, EXIT_INPUT, EXIT_OK

CLOCKWISE = """
x = 0, 0
y = 0, 3
z = 4, 0
c = 1, 1
r = 1/2
"""

SUPERCRITICAL = """
x = 0, 0
y = 4, 0
z = 0, 3
c = 1, 1
r = 3/2
"""


@pytest.fixture
def write_config(tmp_path):
    def write(text, name="case.cfg"):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return write


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    monkeypatch.setattr("src.tetragap.exporter.OUTPUT_DIR", tmp_path / "output")
    return tmp_path / "output"


def test_construct(config_dir, capsys):
    assert cli.main(["construct", str(config_dir / "example1.cfg")]) == EXIT_OK
    out = capsys.readouterr().out
    assert "215490/2309, 339416/6927, 49280/2309" in out
    assert "✗" not in out


def test_gap_json(config_dir, capsys):
    assert cli.main(["gap", str(config_dir / "example1.cfg"), "--json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['gap'] == "198873308525/145467"
    assert data['rhs'] == data['gap']
    assert data['v1'] == "-7868399616"
    assert data['satisfied'] is True and data['equality'] is False
    assert data['check: lhs = rhs'] is True
    assert data['ok'] is True


def test_gap_approx(config_dir, capsys):
    assert cli.main(["gap", str(config_dir / "example3.cfg"), "--approx"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "7/81   (~0.0864197530864)" in out


def test_gap_at_circumcenter_adds_note(config_dir, capsys):
    assert cli.main(["gap", str(config_dir / "example2.cfg")]) == EXIT_OK
    assert "⚠ tangent point is the circumcenter" in capsys.readouterr().out


def test_clockwise_base_is_an_input_error(write_config, capsys):
    assert cli.main(["gap", write_config(CLOCKWISE)]) == EXIT_INPUT
    err = capsys.readouterr().err
    assert err.startswith("✗ Erro:") and "clockwise" in err


def test_supercritical_radius_is_degenerate(write_config, capsys):
    assert cli.main(["construct", write_config(SUPERCRITICAL)]) == EXIT_DEGENERATE
    assert "supercritical" in capsys.readouterr().err


def test_bad_literal_is_an_input_error(write_config):
    path = write_config(SUPERCRITICAL.replace("r = 3/2", "r = 3/0"))
    assert cli.main(["gap", path]) == EXIT_INPUT


def test_missing_file_is_an_input_error(tmp_path):
    assert cli.main(["gap", str(tmp_path / "absent.cfg")]) == EXIT_INPUT


@pytest.mark.parametrize("n", ["1", "2", "3"])
def test_examples(n, capsys):
    assert cli.main(["example", n]) == EXIT_OK
    assert "✗" not in capsys.readouterr().out


def test_examples_export(output_dir):
    assert cli.main(["example", "--export"]) == EXIT_OK
    assert (output_dir / "examples.xlsx").exists()


def test_fuzz(output_dir, capsys):
    assert cli.main(["fuzz", "--trials", "5", "--seed", "42", "--export"]) == EXIT_OK
    assert "5/5 ok" in capsys.readouterr().out
    assert (output_dir / "fuzz_trials.csv").exists()


def test_planar(capsys):
    assert cli.main(["planar", "--p", "2/5"]) == EXIT_OK
    assert "r_crit^2 = 6/25" in capsys.readouterr().out


def test_planar_large_prime_denominator(capsys):
    assert cli.main(["planar", "--p", "1/1000000000039"]) == EXIT_OK
    assert "r_crit^2 = 1000000000038/1000000000078000000001521" in capsys.readouterr().out


def test_planar_out_of_range():
    assert cli.main(["planar", "--p", "3/2"]) == EXIT_INPUT


def test_malformed_argument_literal():
    with pytest.raises(SystemExit) as exc:
        cli.main(["planar", "--p", "two fifths"])
    assert exc.value.code == EXIT_INPUT


def test_pech(capsys):
    assert cli.main(["pech", "--trials", "5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "✓ SOS identity (symbolic)" in out
    assert "R = 2r for sides 2, 2, 2" not in out


def test_equilateral(capsys):
    assert cli.main(["equilateral", "--l2", "4", "--r", "1/2"]) == EXIT_OK
    assert "G = 0, regime: r_reg < r < r_crit" in capsys.readouterr().out


def test_equilateral_below_regular(capsys):
    assert cli.main(["equilateral", "--l2", "4", "--r", "1/3"]) == EXIT_OK
    assert "regime: r < r_reg" in capsys.readouterr().out


def test_equilateral_supercritical():
    assert cli.main(["equilateral", "--l2", "4", "--r", "3/5"]) == EXIT_DEGENERATE


def test_equilateral_domain_error():
    assert cli.main(["equilateral", "--l2", "0", "--r", "1/2"]) == EXIT_INPUT
