"""
Circumsphere metrics and the exact Grace-Danielsson verdict.

Only squared quantities are computed (R^2, d^2), so everything stays in the
field. d is the distance from the circumcenter to the insphere center
(c1, c2, r), not to the base tangent point.
"""
from dataclasses import dataclass

from .base import circumcenter2
from .construct import Point3, Tetrahedron
from .errors import PreconditionError, VerificationError
from .scalar import Scalar, sign, sign_radical


@dataclass(frozen=True)
class Metrics:
    o: Point3
    R2: Scalar
    d2: Scalar
    r: Scalar


@dataclass(frozen=True)
class Verdict:
    squared_gap: Scalar
    linear_side_sign: int
    satisfied: bool
    equality: bool


def circumcenter3(tet: Tetrahedron) -> Point3:
    """
    Circumcenter of the tetrahedron.

    Its projection is the base circumcenter; o3 solves |o - x|^2 = |o - w|^2,
    which is linear in o3.
    """
    if tet.w.x3 == 0:
        raise PreconditionError("degenerate tetrahedron: apex lies in the base plane")
    base_o = circumcenter2(tet.x.horizontal(), tet.y.horizontal(), tet.z.horizontal())
    flat = Point3.lift(base_o)
    to_x = (flat - tet.x).norm2()
    to_w = (flat - Point3(tet.w.x1, tet.w.x2, 0)).norm2()
    o3 = (to_w + tet.w.x3 * tet.w.x3 - to_x) / (2 * tet.w.x3)
    o = Point3(base_o.x1, base_o.x2, o3)

    R2 = (o - tet.x).norm2()
    for vertex in (tet.y, tet.z, tet.w):
        if (o - vertex).norm2() != R2:
            raise VerificationError("circumcenter is not equidistant from all vertices")
    return o


def metrics(tet: Tetrahedron) -> Metrics:
    o = circumcenter3(tet)
    return Metrics(o=o, R2=(o - tet.x).norm2(), d2=(o - tet.inc).norm2(), r=tet.r)


def linear_side(m: Metrics) -> Scalar:
    """R^2 - d^2 - 3 r^2, which must dominate 2 r R."""
    return m.R2 - m.d2 - 3 * m.r * m.r


def squared_gap(m: Metrics) -> Scalar:
    """(R^2 - d^2 - 3r^2)^2 - 4 r^2 R^2, the left side of the two-term identity."""
    L = linear_side(m)
    return L * L - 4 * m.r * m.r * m.R2


def gd_verdict(m: Metrics) -> Verdict:
    """
    Exact verdict on d^2 <= (R + r)(R - 3r).

    The squared gap factors as ((R+r)(R-3r) - d^2)((R-r)(R+3r) - d^2); with a
    nonnegative linear side the second factor is positive, so the inequality
    holds exactly when both the linear side and the squared gap are >= 0.
    """
    if sign(m.r) <= 0:
        raise PreconditionError("inradius must be positive: r <= 0")
    gap = squared_gap(m)
    side = sign(linear_side(m))
    satisfied = side >= 0 and sign(gap) >= 0

    if satisfied != pythagorean_form(m):
        raise VerificationError("squared and Pythagorean forms of the verdict disagree")

    return Verdict(squared_gap=gap, linear_side_sign=side, satisfied=satisfied,
                   equality=satisfied and gap == 0)


def pythagorean_form(m: Metrics) -> bool:
    """
    d^2 + 4 r^2 <= (R - r)^2, decided without extracting R.

    Equivalent to (R^2 - d^2 - 3r^2) - 2 r sqrt(R^2) >= 0, whose sign is
    settled by the radical case split.
    """
    return sign_radical(linear_side(m), -2 * m.r, m.R2) >= 0
