"""
Special cases of the gap: tangent point at the circumcenter or the incenter,
the equilateral base, the planar analogue and Pech's proof of R >= 2r.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import sympy as sp

from .base import (BaseConfig, Point2, big_A_B, circumcenter2, incenter2,
                   twice_area, validate)
from .certificate import apex_drift_v, edge_weighted_v, u_pair, v_pair
from .construct import build_tetrahedron
from .errors import DegeneracyError, PreconditionError, VerificationError
from .linalg import solve2
from .metrics import metrics, squared_gap
from .scalar import Scalar, sign, sqrt_in_extension


# ----------------------------------------------------------------------
# Tangent point at the circumcenter / incenter
# ----------------------------------------------------------------------

def squared_side_product(cfg: BaseConfig) -> Scalar:
    """|x - y|^2 |y - z|^2 |z - x|^2."""
    return ((cfg.x - cfg.y).norm2() * (cfg.y - cfg.z).norm2()
            * (cfg.z - cfg.x).norm2())


def g_pair(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """
    Cubics g1, g2 with v_i = |x-y|^2 |y-z|^2 |z-x|^2 g_i / (8 a0^2) when c = o.

    The third summand of g1 carries (y2 - x2), completing the cyclic pattern.
    """
    x1, x2 = cfg.x.x1, cfg.x.x2
    y1, y2 = cfg.y.x1, cfg.y.x2
    z1, z2 = cfg.z.x1, cfg.z.x2
    g1 = ((x1 ** 2 + 3 * x2 ** 2) * (z2 - y2) + (y1 ** 2 + 3 * y2 ** 2) * (x2 - z2)
          + (z1 ** 2 + 3 * z2 ** 2) * (y2 - x2)
          + 2 * x1 * x2 * (z1 - y1) + 2 * y1 * y2 * (x1 - z1) + 2 * z1 * z2 * (y1 - x1))
    g2 = ((x2 ** 2 + 3 * x1 ** 2) * (y1 - z1) + (y2 ** 2 + 3 * y1 ** 2) * (z1 - x1)
          + (z2 ** 2 + 3 * z1 ** 2) * (x1 - y1)
          + 2 * x1 * x2 * (y2 - z2) + 2 * y1 * y2 * (z2 - x2) + 2 * z1 * z2 * (x2 - y2))
    return g1, g2


def _pipeline_gap(cfg: BaseConfig) -> Scalar:
    return squared_gap(metrics(build_tetrahedron(cfg)))


def special_case_a(cfg: BaseConfig) -> Scalar:
    """
    Gap for c at the base circumcenter, where u vanishes.

        r^2 |x-y|^4 |y-z|^4 |z-x|^4 (g1^2 + g2^2) / (64 a0^5 (A - B r^2))

    Raises:
        PreconditionError: c is not the circumcenter, or the circumcenter is
            not interior (obtuse or right base)
        VerificationError: factorization of v or the pipeline gap disagree
    """
    areas = validate(cfg)
    if cfg.c != circumcenter2(cfg.x, cfg.y, cfg.z):
        raise PreconditionError("tangent point is not the circumcenter of the basic triangle")

    a0 = areas.a0
    A, B = big_A_B(cfg)
    r2 = cfg.r * cfg.r
    g1, g2 = g_pair(cfg)
    product = squared_side_product(cfg)

    for v, route in ((apex_drift_v(cfg), 'apex drift'), (edge_weighted_v(cfg), 'edge weights')):
        if v[0] * 8 * a0 * a0 != product * g1 or v[1] * 8 * a0 * a0 != product * g2:
            raise VerificationError(f"v from {route} does not factor through g1, g2")

    value = r2 * product * product * (g1 * g1 + g2 * g2) / (64 * a0 ** 5 * (A - B * r2))
    if value != _pipeline_gap(cfg):
        raise VerificationError("circumcenter closed form differs from the pipeline gap")
    return value


def special_case_b(cfg: BaseConfig) -> Scalar:
    """
    Gap for c at the base incenter, where v vanishes.

        16 a0 r^6 |c - o|^2 / (A - B r^2)

    Raises:
        PreconditionError: c is not the incenter (or side lengths leave the field)
        VerificationError: v does not vanish or the pipeline gap disagrees
    """
    areas = validate(cfg)
    if cfg.c != incenter2(cfg.x, cfg.y, cfg.z):
        raise PreconditionError("tangent point is not the incenter of the basic triangle")

    routes = [edge_weighted_v(cfg), apex_drift_v(cfg)]
    # an equilateral base puts the incenter on the circumcenter, where v_pair is undefined
    if any(u != 0 for u in u_pair(cfg)):
        routes.append(v_pair(cfg)[:2])
    if any(v != (0, 0) for v in routes):
        raise VerificationError("v does not vanish at the incenter")

    A, B = big_A_B(cfg)
    r = cfg.r
    o = circumcenter2(cfg.x, cfg.y, cfg.z)
    value = 16 * areas.a0 * r ** 6 * (cfg.c - o).norm2() / (A - B * r * r)
    if value != _pipeline_gap(cfg):
        raise VerificationError("incenter closed form differs from the pipeline gap")
    return value


# ----------------------------------------------------------------------
# Symbolic checks (sympy)
# ----------------------------------------------------------------------

def g_polynomials(printed: bool = False):
    """
    g1, g2 as sympy expressions in x1, x2, y1, y2, z1, z2.

    Args:
        printed: use (y2 - z2) in the third summand of g1 instead of (y2 - x2)
    """
    x1, x2, y1, y2, z1, z2 = sp.symbols('x1 x2 y1 y2 z1 z2')
    third = (y2 - z2) if printed else (y2 - x2)
    g1 = ((x1 ** 2 + 3 * x2 ** 2) * (z2 - y2) + (y1 ** 2 + 3 * y2 ** 2) * (x2 - z2)
          + (z1 ** 2 + 3 * z2 ** 2) * third
          + 2 * x1 * x2 * (z1 - y1) + 2 * y1 * y2 * (x1 - z1) + 2 * z1 * z2 * (y1 - x1))
    g2 = ((x2 ** 2 + 3 * x1 ** 2) * (y1 - z1) + (y2 ** 2 + 3 * y1 ** 2) * (z1 - x1)
          + (z2 ** 2 + 3 * z1 ** 2) * (x1 - y1)
          + 2 * x1 * x2 * (y2 - z2) + 2 * y1 * y2 * (z2 - x2) + 2 * z1 * z2 * (x2 - y2))
    return (x1, x2, y1, y2, z1, z2), g1, g2


def regular_g_vanish(printed: bool = False) -> bool:
    """
    Substitute the third vertex of a regular triangle over the edge xy and
    check that g1 and g2 expand to zero.
    """
    (x1, x2, y1, y2, z1, z2), g1, g2 = g_polynomials(printed)
    s3 = sp.sqrt(3)
    regular = {
        z1: (x1 + y1 + s3 * (y2 - x2)) / 2,
        z2: (x2 + y2 + s3 * (x1 - y1)) / 2,
    }
    return all(sp.expand(g.subs(regular)) == 0 for g in (g1, g2))


def pech_polynomial(a, b, c):
    """Criterion polynomial: R >= 2r iff it is nonnegative."""
    return (a ** 3 - a ** 2 * b - a * b ** 2 + b ** 3 - a ** 2 * c + 3 * a * b * c
            - b ** 2 * c - a * c ** 2 - b * c ** 2 + c ** 3)


def pech_sos(a, b, c):
    """Weighted sum of squares form of the criterion polynomial."""
    return ((a + b - c) * (a - b) ** 2 + (b + c - a) * (b - c) ** 2
            + (c + a - b) * (c - a) ** 2) / 2


def pech_symbolic_identity() -> bool:
    a, b, c = sp.symbols('a b c')
    return sp.expand(pech_polynomial(a, b, c) - pech_sos(a, b, c)) == 0


# ----------------------------------------------------------------------
# Pech / Euler on triangles
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PechReport:
    sides: Tuple[Fraction, Fraction, Fraction]
    P: Fraction
    identity_ok: bool
    heronian: bool
    K: Optional[Scalar] = None
    r: Optional[Scalar] = None
    R: Optional[Scalar] = None
    d2: Optional[Scalar] = None
    R_ge_2r: Optional[bool] = None
    euler_ok: Optional[bool] = None
    equality: Optional[bool] = None

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.R_ge_2r is not False and self.euler_ok is not False


def triangle_from_sides(a, b, c, K) -> Tuple[Point2, Point2, Point2]:
    """Counterclockwise vertices with |y-z| = a, |z-x| = b, |x-y| = c and area K."""
    x = Point2(Fraction(0), Fraction(0))
    y = Point2(c, Fraction(0))
    z = Point2((b * b + c * c - a * a) / (2 * c), 2 * K / c)
    return x, y, z


def pech_euler(a, b, c, numeric: bool = True) -> PechReport:
    """
    Pech's criterion and Euler's relation for the triangle with sides a, b, c.

    The SOS identity is always checked. With numeric=True the area K is
    taken from Heron's formula (in Q(sqrt k) when it is irrational), and
    r, R, d^2 are computed from coordinates.

    Raises:
        PreconditionError: nonpositive side or a violated strict triangle inequality
    """
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if min(a, b, c) <= 0:
        raise PreconditionError("triangle sides must be positive")
    if a + b <= c or b + c <= a or c + a <= b:
        raise PreconditionError("degenerate triangle: strict triangle inequality fails")

    P = pech_polynomial(a, b, c)
    identity_ok = P == pech_sos(a, b, c)
    heron = (a + b + c) * (a + b - c) * (a - b + c) * (-a + b + c)
    K = sqrt_in_extension(heron) / 4
    heronian = isinstance(K, Fraction)
    if not numeric:
        return PechReport(sides=(a, b, c), P=P, identity_ok=identity_ok, heronian=heronian)

    r = 2 * K / (a + b + c)
    R = a * b * c / (4 * K)
    x, y, z = triangle_from_sides(a, b, c, K)
    if twice_area(x, y, z) != 2 * K:
        raise VerificationError("triangle placed from its sides has the wrong area")
    d2 = (circumcenter2(x, y, z) - incenter2(x, y, z)).norm2()
    return PechReport(
        sides=(a, b, c), P=P, identity_ok=identity_ok, heronian=heronian,
        K=K, r=r, R=R, d2=d2,
        R_ge_2r=sign(R - 2 * r) >= 0,
        euler_ok=d2 == R * (R - 2 * r),
        equality=R == 2 * r,
    )


# ----------------------------------------------------------------------
# Equilateral base, c at the center
# ----------------------------------------------------------------------

REGIME_BELOW = "r < r_reg"
REGIME_REGULAR = "r = r_reg"
REGIME_ABOVE = "r_reg < r < r_crit"


@dataclass(frozen=True)
class EquilateralReport:
    l2: Scalar
    r: Scalar
    w3: Scalar
    R: Scalar
    d2: Scalar
    G: Scalar
    squared_gap: Scalar
    linear_side_sign: int
    rel1: bool
    rel2: bool
    regime: str


def equilateral_gap(l2, r) -> EquilateralReport:
    """
    Gap for an equilateral base of squared side l2 touched at its center.

    R is rational in l2 and r here, so the gap G = R^2 - d^2 - 3r^2 - 2rR is
    evaluated directly as well as in squared form.

    Raises:
        PreconditionError: l2 <= 0 or r <= 0
        DegeneracyError: r^2 >= l2/12
    """
    if sign(l2) <= 0:
        raise PreconditionError("squared side length must be positive: l2 <= 0")
    if sign(r) <= 0:
        raise PreconditionError("inradius must be positive: r <= 0")
    r2 = r * r
    if sign(l2 - 12 * r2) <= 0:
        raise DegeneracyError(
            "r^2 >= l2/12: the equilateral tetrahedron is critical (prism) or supercritical"
        )

    w3 = 2 * l2 * r / (l2 - 12 * r2)
    R = (w3 * w3 + l2 / 3) / (2 * w3)
    signed_d = R + r - w3
    d2 = signed_d * signed_d

    rel1 = w3 - 2 * r == 12 * r2 * w3 / l2
    rel2 = w3 * (2 * R - w3) == l2 / 3

    linear = R * R - d2 - 3 * r2
    gap_sq = linear * linear - 4 * r2 * R * R
    G = linear - 2 * r * R

    position = sign(24 * r2 - l2)
    regime = {-1: REGIME_BELOW, 0: REGIME_REGULAR, 1: REGIME_ABOVE}[position]
    # d = R + r - w3 below r_reg, w3 - R - r above
    if sign(signed_d) != -position:
        raise VerificationError(f"sign of R + r - w3 contradicts the regime {regime}")
    if not (rel1 and rel2) or G != 0 or gap_sq != 0:
        raise VerificationError("equilateral relations fail: the gap is not zero")

    return EquilateralReport(l2=l2, r=r, w3=w3, R=R, d2=d2, G=G, squared_gap=gap_sq,
                             linear_side_sign=sign(linear), rel1=rel1, rel2=rel2,
                             regime=regime)


# ----------------------------------------------------------------------
# Planar analogue: incircle touching [0, 1] at p
# ----------------------------------------------------------------------

def _check_p(p) -> Fraction:
    if not isinstance(p, (int, Fraction)):
        raise PreconditionError(f"touching point p must be rational, got {p}")
    p = Fraction(p)
    if not 0 < p < 1:
        raise PreconditionError(f"touching point must satisfy 0 < p < 1, got {p}")
    return p


def _tangent_system(p, r):
    """Rows and right side of A + t dA = B + s dB for the second tangents from A and B."""
    q = 1 - p
    dA = (p * p - r * r, 2 * p * r)
    dB = (r * r - q * q, 2 * q * r)
    return [[dA[0], -dB[0]], [dA[1], -dB[1]]], [1, 0], dA


def planar_apex(p, r) -> Point2:
    """
    Third vertex of the triangle on [0, 1] with incircle centered (p, r).

    Raises:
        DegeneracyError: r^2 = p(1 - p) (parallel tangent lines)
    """
    p = _check_p(p)
    if sign(r) <= 0:
        raise PreconditionError("inradius must be positive: r <= 0")
    rows, rhs, dA = _tangent_system(p, r)
    solution = solve2(rows, rhs)
    if solution is None:
        raise DegeneracyError("tangent lines from A and B are parallel: r^2 = p(1 - p)")
    t = solution[0]
    return Point2(t * dA[0], t * dA[1])


def planar_apex_height(p, r) -> Scalar:
    """Apex height by line intersection, checked against 2 r p(1-p) / (p(1-p) - r^2)."""
    apex_point = planar_apex(p, r)
    pq = Fraction(p) * (1 - Fraction(p))
    closed = 2 * r * pq / (pq - r * r)
    if apex_point.x2 != closed:
        raise VerificationError("planar apex height differs from its closed form")
    return apex_point.x2


def planar_tangent_determinant(p, r2) -> Scalar:
    """
    Determinant of the tangent system divided by 2r, as a polynomial in r^2.

    Zero exactly when the second tangents from A and B are parallel; rational
    whenever p and r^2 are, so no square root of r^2 is taken.
    """
    p = Fraction(p)
    q = 1 - p
    return p * (r2 - q * q) - q * (p * p - r2)


def planar_critical(p) -> Fraction:
    """
    r_crit^2 = p(1 - p), confirmed by the tangent lines turning parallel there.

    Raises:
        PreconditionError: p outside (0, 1)
        VerificationError: the tangent system is regular at r_crit
    """
    p = _check_p(p)
    critical = p * (1 - p)
    if planar_tangent_determinant(p, critical) != 0:
        raise VerificationError("tangent lines are not parallel at the critical radius")
    return critical
