from fractions import Fraction as F

import pytest

from src.tetragap.base import Point2
from src.tetragap.errors import LiteralError, PreconditionError
from src.tetragap.fixtures import example1_config, example2_config, example3_config
from src.tetragap.parsers import format_config, parse_config, parse_config_file
from src.tetragap.scalar import QuadExt

EXAMPLE1_TEXT = """
# Heronian tetrahedron
x = 0, 0
y = 154, 0
z = 55, 132   # apex side
c = 90, 48
r = 10
"""


def test_parse_rational_config():
    cfg = parse_config(EXAMPLE1_TEXT)
    assert cfg == example1_config()
    assert cfg.z == Point2(F(55), F(132))


def test_parse_config_files(config_dir):
    assert parse_config_file(config_dir / "example1.cfg") == example1_config()
    assert parse_config_file(config_dir / "example2.cfg") == example2_config()
    assert parse_config_file(config_dir / "example3.cfg") == example3_config(F(1, 3))


def test_quadext_field_promotes_rationals(config_dir):
    cfg = parse_config_file(config_dir / "example2.cfg")
    assert isinstance(cfg.x.x1, QuadExt)
    assert isinstance(cfg.r, QuadExt)
    assert cfg.r == F(1, 2)


def test_format_config_reads_back():
    for cfg in (example1_config(), example2_config(), example3_config(F(1, 4))):
        assert parse_config(format_config(cfg)) == cfg


def test_sqrt_literal_needs_field_line():
    text = EXAMPLE1_TEXT.replace("c = 90, 48", "c = 90, 48+0*sqrt(2)")
    with pytest.raises(PreconditionError, match="quadext 2"):
        parse_config(text)


def test_sqrt_literal_in_other_field():
    text = "field = quadext 3\n" + EXAMPLE1_TEXT.replace("r = 10", "r = 1+1*sqrt(2)")
    with pytest.raises(PreconditionError, match="sqrt"):
        parse_config(text)


@pytest.mark.parametrize("text,message", [
    (EXAMPLE1_TEXT.replace("r = 10", ""), "missing config keys: r"),
    (EXAMPLE1_TEXT + "r = 11\n", "duplicate key 'r'"),
    (EXAMPLE1_TEXT + "w = 1, 2\n", "unknown key 'w'"),
    (EXAMPLE1_TEXT + "just words\n", "expected 'key = value'"),
    (EXAMPLE1_TEXT.replace("x = 0, 0", "x = 0"), "two comma-separated"),
    ("field = complex\n" + EXAMPLE1_TEXT, "unknown field"),
])
def test_malformed_config(text, message):
    with pytest.raises(PreconditionError, match=message):
        parse_config(text)


def test_bad_literal_in_config():
    with pytest.raises(LiteralError, match="zero denominator"):
        parse_config(EXAMPLE1_TEXT.replace("r = 10", "r = 1/0"))


def test_bad_field_radicand():
    with pytest.raises(LiteralError, match="square-free"):
        parse_config("field = quadext 4\n" + EXAMPLE1_TEXT)


def test_missing_file(tmp_path):
    with pytest.raises(PreconditionError, match="cannot read"):
        parse_config_file(tmp_path / "absent.cfg")
