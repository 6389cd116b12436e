"""
Parser for configuration files - one basic triangle, tangent point and inradius.

Line-oriented `key = value` pairs, '#' starts a comment:

    field = quadext 3
    x = -1, 0
    y = 1, 0
    z = 0, 0+1*sqrt(3)
    c = 0, 0+1/3*sqrt(3)
    r = 1/2

`field` is `rational` (the default) or `quadext k`. Points are two scalar
literals separated by a comma. Geometry is not validated here; the
construction reports violated preconditions by name.
"""
import re
from pathlib import Path
from typing import Dict, Optional, Union

from ..base import BaseConfig, Point2
from ..config import CONFIG_POINT_KEYS, CONFIG_REQUIRED_KEYS
from ..errors import LiteralError, PreconditionError
from ..scalar import common_radicand, format_scalar, is_squarefree, parse_scalar, promote

_FIELD_RE = re.compile(r'^(rational|quadext\s+(?P<k>\d+))$')


def _parse_field(value: str) -> Optional[int]:
    match = _FIELD_RE.match(value.strip())
    if not match:
        raise PreconditionError(f"unknown field {value!r}: expected 'rational' or 'quadext k'")
    if match['k'] is None:
        return None
    k = int(match['k'])
    if k < 2 or not is_squarefree(k):
        raise LiteralError(f"field radicand must be a square-free integer > 1, got {k}")
    return k


def _parse_point(key: str, value: str) -> Point2:
    parts = value.split(',')
    if len(parts) != 2:
        raise PreconditionError(f"point {key} needs two comma-separated coordinates: {value!r}")
    return Point2(parse_scalar(parts[0]), parse_scalar(parts[1]))


def _into_field(cfg: BaseConfig, k: Optional[int]) -> BaseConfig:
    found = common_radicand(cfg.scalars())
    if k is None and found is not None:
        raise PreconditionError(
            f"sqrt({found}) literal in a rational config; declare 'field = quadext {found}'"
        )
    if k is not None and found is not None and found != k:
        raise PreconditionError(f"sqrt({found}) literal in a config declared over sqrt({k})")

    def lift(s):
        return promote(s, k)

    return BaseConfig(*(Point2(lift(p.x1), lift(p.x2)) for p in (cfg.x, cfg.y, cfg.z, cfg.c)),
                      lift(cfg.r))


def parse_config(text: str) -> BaseConfig:
    """
    Parse configuration text into a BaseConfig.

    Args:
        text: file contents

    Returns:
        BaseConfig with every scalar in the declared field

    Raises:
        PreconditionError: unknown, missing or duplicated keys, bad field line
        LiteralError: malformed scalar literal
    """
    values: Dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep:
            raise PreconditionError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        if key not in CONFIG_REQUIRED_KEYS and key != 'field':
            raise PreconditionError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise PreconditionError(f"line {lineno}: duplicate key {key!r}")
        values[key] = value.strip()

    missing = [key for key in CONFIG_REQUIRED_KEYS if key not in values]
    if missing:
        raise PreconditionError(f"missing config keys: {', '.join(missing)}")

    k = _parse_field(values.get('field', 'rational'))
    points = {key: _parse_point(key, values[key]) for key in CONFIG_POINT_KEYS}
    cfg = BaseConfig(points['x'], points['y'], points['z'], points['c'],
                     parse_scalar(values['r']))
    return _into_field(cfg, k)


def parse_config_file(path: Union[str, Path]) -> BaseConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise PreconditionError(f"cannot read config file {path}: {e}") from e
    return parse_config(text)


def format_config(cfg: BaseConfig) -> str:
    """Render a config in the file format; parse_config reads it back unchanged."""
    k = common_radicand(cfg.scalars())
    lines = [f"field = {'rational' if k is None else f'quadext {k}'}"]
    for key, p in zip(CONFIG_POINT_KEYS, (cfg.x, cfg.y, cfg.z, cfg.c)):
        lines.append(f"{key} = {format_scalar(p.x1)}, {format_scalar(p.x2)}")
    lines.append(f"r = {format_scalar(cfg.r)}")
    return '\n'.join(lines) + '\n'
