"""
Two-term gap certificate.

    (R^2 - d^2 - 3r^2)^2 - (2rR)^2
        = r^2 ((u1 r^2 + v1)^2 + (u2 r^2 + v2)^2) / (a0 (A - B r^2))

u comes straight from the base circumcenter. v is recovered from the quartic
N(r) = gap * a0 (A - B r^2) / r^2 = alpha r^4 + beta r^2 + gamma, whose
coefficients are interpolated from exact pipeline evaluations at three
subcritical probe radii. The symmetric polynomial form, the apex drift and
the edge-weighted closed form are independent routes to the same v.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import floor, isqrt
from typing import Dict, List, Optional, Sequence, Tuple

from .base import (BaseConfig, area_set, big_A_B, circumcenter2,
                   validate, validate_base)
from .config import PROBE_PRIMARY, PROBE_CHECK
from .construct import apex, build_tetrahedron
from .errors import DegeneracyError, PreconditionError, VerificationError
from .metrics import metrics, squared_gap
from .scalar import Scalar, exact_sqrt, rational_lower_bound, sign


@dataclass(frozen=True)
class GapCertificate:
    u1: Scalar
    u2: Scalar
    v1: Scalar
    v2: Scalar
    a0: Scalar
    A: Scalar
    B: Scalar
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    dis: Scalar
    lhs: Scalar
    rhs: Scalar
    r: Scalar


def u_pair(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """u1 = 4 a0 (c1 - o1), u2 = 4 a0 (c2 - o2); independent of r."""
    areas = validate_base(cfg)
    o = circumcenter2(cfg.x, cfg.y, cfg.z)
    return 4 * areas.a0 * (cfg.c.x1 - o.x1), 4 * areas.a0 * (cfg.c.x2 - o.x2)


def critical_radius_bound(cfg: BaseConfig) -> Fraction:
    """A rational rho > 0 with rho^2 <= A/B, certified exactly."""
    A, B = big_A_B(cfg)
    bound = rational_lower_bound(A / B)
    if bound > 0:
        # dyadic floor of sqrt(bound), small denominators keep probes cheap
        for bits in (16, 32, 64):
            scale = 1 << bits
            rho = Fraction(isqrt(floor(bound * scale * scale)), scale)
            if rho > 0:
                return rho
    # A/B is tiny: halve until the square fits
    rho = Fraction(1)
    while sign(A - B * rho * rho) <= 0:
        rho /= 2
    return rho


def probe_radii(cfg: BaseConfig, indices: Sequence[int]) -> List[Fraction]:
    """Radii rho * k / (k + 3); all strictly subcritical since rho^2 <= A/B."""
    rho = critical_radius_bound(cfg)
    return [rho * k / (k + 3) for k in indices]


def gap_numerator(cfg: BaseConfig, r) -> Scalar:
    """N(r) = gap(r) a0 (A - B r^2) / r^2 through construction and metrics."""
    probe = cfg.with_radius(r)
    tet = build_tetrahedron(probe)
    gap = squared_gap(metrics(tet))
    a0 = area_set(probe).a0
    A, B = big_A_B(probe)
    return gap * a0 * (A - B * r * r) / (r * r)


def interpolate_quadratic(points: Sequence[Tuple]) -> Tuple[Scalar, Scalar, Scalar]:
    """Coefficients (alpha, beta, gamma) of alpha t^2 + beta t + gamma through three points."""
    (t0, n0), (t1, n1), (t2, n2) = points
    if t0 == t1 or t1 == t2 or t0 == t2:
        raise PreconditionError("interpolation needs three distinct probe values")
    # Newton divided differences
    d01 = (n1 - n0) / (t1 - t0)
    d12 = (n2 - n1) / (t2 - t1)
    alpha = (d12 - d01) / (t2 - t0)
    beta = d01 - alpha * (t0 + t1)
    gamma = n0 - alpha * t0 * t0 - beta * t0
    return alpha, beta, gamma


def quartic_coefficients(cfg: BaseConfig,
                         indices: Sequence[int] = PROBE_PRIMARY) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Interpolate N(r) = alpha r^4 + beta r^2 + gamma from three probe radii.

    Args:
        cfg: base triangle and tangent point (cfg.r is not used)
        indices: probe indices k, radius rho * k / (k + 3)

    Returns:
        Tuple of (alpha, beta, gamma)
    """
    validate_base(cfg)
    radii = probe_radii(cfg, indices)
    if len(set(radii)) < 3:
        raise PreconditionError("fewer than three distinct subcritical probe radii")
    points = [(r * r, gap_numerator(cfg, r)) for r in radii[:3]]
    return interpolate_quadratic(points)


def apex_drift_v(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """
    v = (c - w_h) (A - B r^2) / r^2 from the apex of the constructed tetrahedron.

    The horizontal drift of the apex away from c is -r^2 v / (A - B r^2), so
    the result does not depend on r.
    """
    w = apex(cfg)
    A, B = big_A_B(cfg)
    r2 = cfg.r * cfg.r
    scale = (A - B * r2) / r2
    return (cfg.c.x1 - w.x1) * scale, (cfg.c.x2 - w.x2) * scale


def edge_weighted_v(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """v = (1/a0) sum over vertices of |opposite edge|^2 * (other two areas) * (vertex - c)."""
    areas = validate_base(cfg)
    terms = (
        (cfg.x, (cfg.y - cfg.z).norm2() * areas.ay * areas.az),
        (cfg.y, (cfg.z - cfg.x).norm2() * areas.ax * areas.az),
        (cfg.z, (cfg.x - cfg.y).norm2() * areas.ax * areas.ay),
    )
    v1 = sum(((p.x1 - cfg.c.x1) * weight for p, weight in terms), 0)
    v2 = sum(((p.x2 - cfg.c.x2) * weight for p, weight in terms), 0)
    return v1 / areas.a0, v2 / areas.a0


def v_pair(cfg: BaseConfig, coefficients: Optional[Tuple] = None) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Recover v1, v2 from u and the quartic coefficients.

    v1 = (u1 beta + s u2 dis) / (2 alpha), v2 = (u2 beta - s u1 dis) / (2 alpha)
    with dis = sqrt(4 alpha gamma - beta^2). Both signs s fit the quartic; the
    one taken has s * dis = 2 (u2 v1 - u1 v2) with the sign read off the apex
    drift.

    Args:
        cfg: valid subcritical config
        coefficients: (alpha, beta, gamma) when already interpolated

    Returns:
        Tuple of (v1, v2, dis) with dis >= 0

    Raises:
        PreconditionError: alpha = 0 (c is the circumcenter)
        VerificationError: the discriminant is not a square in the field
    """
    validate(cfg)
    u1, u2 = u_pair(cfg)
    alpha, beta, gamma = coefficients or quartic_coefficients(cfg)
    if alpha != u1 * u1 + u2 * u2:
        raise VerificationError("leading quartic coefficient differs from u1^2 + u2^2")
    if alpha == 0:
        raise PreconditionError(
            "u vanishes (tangent point is the circumcenter): v is not determined "
            "by the quartic, use the special case for c = circumcenter"
        )

    dis = exact_sqrt(4 * alpha * gamma - beta * beta)
    if dis is None:
        raise VerificationError(
            "discriminant 4 alpha gamma - beta^2 is not a perfect square in the field"
        )

    drift1, drift2 = apex_drift_v(cfg)
    s = -1 if sign(u2 * drift1 - u1 * drift2) < 0 else 1
    v1 = (u1 * beta + s * u2 * dis) / (2 * alpha)
    v2 = (u2 * beta - s * u1 * dis) / (2 * alpha)

    check_r = probe_radii(cfg, [PROBE_CHECK])[0]
    t = check_r * check_r
    lhs = (u1 * t + v1) ** 2 + (u2 * t + v2) ** 2
    if lhs != alpha * t * t + beta * t + gamma:
        raise VerificationError("recovered v does not reproduce the quartic")
    return v1, v2, dis


def expanded_v(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """
    Direct evaluation of the symmetric sum-of-products form of v1, v2.

    Read with '+' joining every line of v2 and with 3 c1 multiplying the
    whole three-term sum on the last line of v1.
    """
    areas = validate_base(cfg)
    a0 = areas.a0
    o = circumcenter2(cfg.x, cfg.y, cfg.z)
    x1, x2 = cfg.x.x1, cfg.x.x2
    y1, y2 = cfg.y.x1, cfg.y.x2
    z1, z2 = cfg.z.x1, cfg.z.x2
    c1, c2 = cfg.c.x1, cfg.c.x2

    v1 = (c1 * (c1 ** 2 + c2 ** 2) * a0 - 2 * c1 ** 2 * a0 * o.x1
          + y1 * z1 * (y2 - z2) * (c1 ** 2 - x1 ** 2 - (c2 - x2) ** 2)
          + z1 * x1 * (z2 - x2) * (c1 ** 2 - y1 ** 2 - (c2 - y2) ** 2)
          + x1 * y1 * (x2 - y2) * (c1 ** 2 - z1 ** 2 - (c2 - z2) ** 2)
          + c1 ** 2 * (x2 ** 2 * (z2 - y2) + y2 ** 2 * (x2 - z2) + z2 ** 2 * (y2 - x2))
          + c2 ** 2 * (x1 ** 2 * (z2 - y2) + y1 ** 2 * (x2 - z2) + z1 ** 2 * (y2 - x2))
          + x1 ** 2 * (y2 - z2) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y2 * z2)
          + y1 ** 2 * (z2 - x2) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z2 * x2)
          + z1 ** 2 * (x2 - y2) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x2 * y2)
          + 2 * c1 * c2 * (x1 * x2 * (y2 - z2) + y1 * y2 * (z2 - x2) + z1 * z2 * (x2 - y2))
          + 2 * c1 * c2 * (x1 * (z2 ** 2 - y2 ** 2) + y1 * (x2 ** 2 - z2 ** 2)
                           + z1 * (y2 ** 2 - x2 ** 2))
          + c1 * (x1 * x2 * (z2 ** 2 - y2 ** 2) + y1 * y2 * (x2 ** 2 - z2 ** 2)
                  + z1 * z2 * (y2 ** 2 - x2 ** 2))
          + 3 * c1 * (x1 * y2 * z2 * (y2 - z2) + x2 * y1 * z2 * (z2 - x2)
                      + x2 * y2 * z1 * (x2 - y2)))

    v2 = (c2 * (c1 ** 2 + c2 ** 2) * a0 - 2 * c2 ** 2 * a0 * o.x2
          + y2 * z2 * (y1 - z1) * ((c1 - x1) ** 2 - c2 ** 2 + x2 ** 2)
          + x2 * z2 * (z1 - x1) * ((c1 - y1) ** 2 - c2 ** 2 + y2 ** 2)
          + x2 * y2 * (x1 - y1) * ((c1 - z1) ** 2 - c2 ** 2 + z2 ** 2)
          + c1 ** 2 * (x2 ** 2 * (y1 - z1) + y2 ** 2 * (z1 - x1) + z2 ** 2 * (x1 - y1))
          + c2 ** 2 * (x1 ** 2 * (y1 - z1) + y1 ** 2 * (z1 - x1) + z1 ** 2 * (x1 - y1))
          + x2 ** 2 * (z1 - y1) * (c1 * (y1 + z1) + c2 * (y2 + z2) - y1 * z1)
          + y2 ** 2 * (x1 - z1) * (c1 * (z1 + x1) + c2 * (z2 + x2) - z1 * x1)
          + z2 ** 2 * (y1 - x1) * (c1 * (x1 + y1) + c2 * (x2 + y2) - x1 * y1)
          + 2 * c1 * c2 * (x1 * x2 * (z1 - y1) + y1 * y2 * (x1 - z1) + z1 * z2 * (y1 - x1))
          + 2 * c1 * c2 * (x2 * (y1 ** 2 - z1 ** 2) + y2 * (z1 ** 2 - x1 ** 2)
                           + z2 * (x1 ** 2 - y1 ** 2))
          + c2 * (x1 * x2 * (y1 ** 2 - z1 ** 2) + y1 * y2 * (z1 ** 2 - x1 ** 2)
                  + z1 * z2 * (x1 ** 2 - y1 ** 2))
          + 3 * c2 * (x1 ** 2 * (y2 * z1 - y1 * z2) + y1 ** 2 * (x1 * z2 - x2 * z1)
                      + z1 ** 2 * (x2 * y1 - x1 * y2)))
    return v1, v2


def certificate_rhs(cfg: BaseConfig, u: Tuple, v: Tuple) -> Scalar:
    """r^2 ((u1 r^2 + v1)^2 + (u2 r^2 + v2)^2) / (a0 (A - B r^2))."""
    a0 = area_set(cfg).a0
    A, B = big_A_B(cfg)
    r2 = cfg.r * cfg.r
    denominator = a0 * (A - B * r2)
    if denominator == 0:
        raise DegeneracyError("certificate denominator vanishes at r^2 = A/B")
    return r2 * ((u[0] * r2 + v[0]) ** 2 + (u[1] * r2 + v[1]) ** 2) / denominator


def certificate(cfg: BaseConfig) -> GapCertificate:
    """
    Evaluate both sides of the two-term identity.

    The left side goes through construction and circumsphere metrics; the
    right side only uses u, v, A, B and a0 of the basic triangle. Equality is
    reported, not enforced; see certificate_checks.
    """
    areas = validate(cfg)
    A, B = big_A_B(cfg)
    lhs = squared_gap(metrics(build_tetrahedron(cfg)))

    u1, u2 = u_pair(cfg)
    alpha, beta, gamma = quartic_coefficients(cfg)
    if alpha == 0:
        # the quartic fixes only |v|; take v from the apex
        v1, v2 = apex_drift_v(cfg)
        dis = exact_sqrt(4 * alpha * gamma - beta * beta)
    else:
        v1, v2, dis = v_pair(cfg, (alpha, beta, gamma))
    if dis is None:
        raise VerificationError("discriminant is not a perfect square in the field")

    rhs = certificate_rhs(cfg, (u1, u2), (v1, v2))
    return GapCertificate(u1=u1, u2=u2, v1=v1, v2=v2, a0=areas.a0, A=A, B=B,
                          alpha=alpha, beta=beta, gamma=gamma, dis=dis,
                          lhs=lhs, rhs=rhs, r=cfg.r)


def certificate_checks(cert: GapCertificate) -> Dict[str, bool]:
    """Exact invariants of a certificate, by name."""
    r2 = cert.r * cert.r
    return {
        'lhs = rhs': cert.lhs == cert.rhs,
        'alpha = u1^2 + u2^2': cert.alpha == cert.u1 ** 2 + cert.u2 ** 2,
        'dis^2 = 4 alpha gamma - beta^2':
            cert.dis * cert.dis == 4 * cert.alpha * cert.gamma - cert.beta ** 2,
        'denominator > 0': sign(cert.a0 * (cert.A - cert.B * r2)) > 0,
        'rhs >= 0': sign(cert.rhs) >= 0,
        'B > 0': sign(cert.B) > 0,
    }


def scaling_ratio(cfg: BaseConfig, s) -> Tuple[Scalar, Scalar]:
    """Ratios lhs(s cfg) / lhs(cfg) and rhs(s cfg) / rhs(cfg); both equal s^4."""
    base = certificate(cfg)
    scaled = certificate(cfg.scaled(s))
    if base.lhs == 0 or base.rhs == 0:
        raise PreconditionError("scaling ratio undefined for a zero gap")
    return scaled.lhs / base.lhs, scaled.rhs / base.rhs
