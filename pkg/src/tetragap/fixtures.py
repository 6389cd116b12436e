"""
Built-in worked examples with their published values.

1. Heronian tetrahedron over rationals.
2. Equality case in Q(sqrt 3): equilateral base touched at its center.
3. Critical inradius 1/sqrt(2) in Q(sqrt 2).
"""
from dataclasses import dataclass, field
from fractions import Fraction as F
from typing import Any, Callable, Dict, List

from .base import BaseConfig, Point2, area_set, big_A_B, critical_inradius_sq
from .certificate import certificate
from .construct import (Point3, are_parallel, build_tetrahedron, criticality_coplanarity,
                        lateral_edge_directions, tangent_points)
from .errors import PreconditionError
from .metrics import gd_verdict, metrics
from .scalar import QuadExt


def _q(a, b, k) -> QuadExt:
    return QuadExt(F(a), F(b), k)


def example1_config() -> BaseConfig:
    return BaseConfig(x=Point2(F(0), F(0)), y=Point2(F(154), F(0)), z=Point2(F(55), F(132)),
                      c=Point2(F(90), F(48)), r=F(10))


def example2_config() -> BaseConfig:
    k = 3
    return BaseConfig(x=Point2(_q(-1, 0, k), _q(0, 0, k)),
                      y=Point2(_q(1, 0, k), _q(0, 0, k)),
                      z=Point2(_q(0, 0, k), _q(0, 1, k)),
                      c=Point2(_q(0, 0, k), _q(0, F(1, 3), k)),
                      r=_q(F(1, 2), 0, k))


def example3_config(r=None) -> BaseConfig:
    """Example 3 base; r defaults to the critical inradius 1/sqrt(2)."""
    k = 2
    if r is None:
        r = _q(0, F(1, 2), k)
    return BaseConfig(x=Point2(_q(0, -1, k), _q(-1, 0, k)),
                      y=Point2(_q(0, 1, k), _q(-1, 0, k)),
                      z=Point2(_q(0, 0, k), _q(1, 0, k)),
                      c=Point2(_q(0, 0, k), _q(0, 0, k)),
                      r=r if isinstance(r, QuadExt) else _q(r, 0, k))


EXAMPLE1_EXPECTED: Dict[str, Any] = {
    'w': (F(215490, 2309), F(339416, 6927), F(49280, 2309)),
    'o': (F(77), F(363, 8), F(-15818598389, 93098880)),
    'R2': F(319462309835987155321, 8667401457254400),
    'd2': F(282073185661355308921, 8667401457254400),
    'gap': F(198873308525, 145467),
    'a0': F(20328),
    'ax': F(3696),
    'ay': F(9240),
    'az': F(7392),
    'A': F(252444487680),
    'B': F(158802336),
    'u1': F(1057056),
    'v1': F(-7868399616),
    'u2': F(213444),
    'v2': F(-2363251968),
}

EXAMPLE2_EXPECTED: Dict[str, Any] = {
    'w': (F(0), _q(0, F(1, 3), 3), F(4)),
    'o': (F(0), _q(0, F(1, 3), 3), F(11, 6)),
    'ax': _q(0, F(2, 3), 3),
    'ay': _q(0, F(2, 3), 3),
    'az': _q(0, F(2, 3), 3),
    'A': _q(0, F(8, 9), 3),
    'B': _q(0, F(8, 3), 3),
    'R2': F(169, 36),
    'd2': F(16, 9),
    'gap': F(0),
    'satisfied': True,
    'equality': True,
}

EXAMPLE3_EXPECTED: Dict[str, Any] = {
    'A/B': F(1, 2),
    'X': (_q(0, F(2, 5), 2), F(2, 5), _q(0, F(2, 5), 2)),
    'Y': (_q(0, F(-2, 5), 2), F(2, 5), _q(0, F(2, 5), 2)),
    'Z': (F(0), F(-2, 3), _q(0, F(2, 3), 2)),
    'coplanarity': F(0),
    'edges parallel to (0, 1, 2*sqrt(2))': True,
    'gap at r=1/4': F(7, 128),
    'gap at r=1/3': F(7, 81),
    'gap at r=2/5': F(68, 625),
}

# Radii where the gap is compared against r^2 (1 - 2 r^2)
EXAMPLE3_RADII = (F(1, 4), F(1, 3), F(2, 5))


@dataclass
class ExampleRow:
    name: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        if isinstance(self.expected, tuple):
            return (isinstance(self.actual, tuple) and len(self.actual) == len(self.expected)
                    and all(a == e for a, e in zip(self.actual, self.expected)))
        return self.actual == self.expected


@dataclass
class ExampleResult:
    number: int
    title: str
    rows: List[ExampleRow] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    @property
    def mismatches(self) -> List[ExampleRow]:
        return [row for row in self.rows if not row.ok]


def _coords(p: Point3) -> tuple:
    return (p.x1, p.x2, p.x3)


def _collect(expected: Dict[str, Any], actual: Dict[str, Any]) -> List[ExampleRow]:
    return [ExampleRow(name, value, actual[name]) for name, value in expected.items()]


def _run_example1() -> ExampleResult:
    cfg = example1_config()
    tet = build_tetrahedron(cfg)
    m = metrics(tet)
    cert = certificate(cfg)
    areas = area_set(cfg)
    A, B = big_A_B(cfg)
    actual = {
        'w': _coords(tet.w), 'o': _coords(m.o), 'R2': m.R2, 'd2': m.d2, 'gap': cert.lhs,
        'a0': areas.a0, 'ax': areas.ax, 'ay': areas.ay, 'az': areas.az, 'A': A, 'B': B,
        'u1': cert.u1, 'v1': cert.v1, 'u2': cert.u2, 'v2': cert.v2,
    }
    rows = _collect(EXAMPLE1_EXPECTED, actual)
    rows.append(ExampleRow('gap = certificate rhs', cert.lhs, cert.rhs))
    return ExampleResult(1, "Heronian tetrahedron", rows)


def _run_example2() -> ExampleResult:
    cfg = example2_config()
    tet = build_tetrahedron(cfg)
    m = metrics(tet)
    verdict = gd_verdict(m)
    areas = area_set(cfg)
    A, B = big_A_B(cfg)
    actual = {
        'w': _coords(tet.w), 'o': _coords(m.o), 'ax': areas.ax, 'ay': areas.ay,
        'az': areas.az, 'A': A, 'B': B, 'R2': m.R2, 'd2': m.d2,
        'gap': verdict.squared_gap, 'satisfied': verdict.satisfied,
        'equality': verdict.equality,
    }
    return ExampleResult(2, "Equality case for a non-regular tetrahedron", _collect(EXAMPLE2_EXPECTED, actual))


def _run_example3() -> ExampleResult:
    cfg = example3_config()
    tp = tangent_points(cfg)
    direction = Point3(F(0), F(1), _q(0, 2, 2))
    edges = lateral_edge_directions(cfg)
    actual = {
        'A/B': critical_inradius_sq(cfg),
        'X': _coords(tp.X), 'Y': _coords(tp.Y), 'Z': _coords(tp.Z),
        'coplanarity': criticality_coplanarity(cfg),
        'edges parallel to (0, 1, 2*sqrt(2))': all(are_parallel(e, direction) for e in edges),
    }
    for r in EXAMPLE3_RADII:
        actual[f'gap at r={r}'] = certificate(example3_config(r)).lhs
    rows = _collect(EXAMPLE3_EXPECTED, actual)
    for r in EXAMPLE3_RADII:
        rows.append(ExampleRow(f'r^2 (1 - 2r^2) at r={r}', r * r * (1 - 2 * r * r),
                               actual[f'gap at r={r}']))
    return ExampleResult(3, "Critical inradius 1/sqrt(2)", rows)


EXAMPLES: Dict[int, Callable[[], ExampleResult]] = {
    1: _run_example1,
    2: _run_example2,
    3: _run_example3,
}


def run_example(n: int) -> ExampleResult:
    """
    Run a built-in example and compare every published value exactly.

    Raises:
        PreconditionError: n is not 1, 2 or 3
    """
    if n not in EXAMPLES:
        raise PreconditionError(f"unknown example {n}: choose 1, 2 or 3")
    return EXAMPLES[n]()
