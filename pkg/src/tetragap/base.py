"""
Planar quantities of the basic triangle.

Signed twice-areas, the A/B pair, the critical inradius and the 2-D
circumcenter / incenter. The basic triangle lies in the plane x3 = 0 and is
oriented counterclockwise; c is the point where the insphere touches it.
"""
from dataclasses import dataclass, replace
from typing import Tuple

from .errors import PreconditionError, DegeneracyError
from .scalar import Scalar, exact_sqrt, format_scalar, sign


@dataclass(frozen=True)
class Point2:
    """Point of the base plane."""

    x1: Scalar
    x2: Scalar

    def __add__(self, other: 'Point2') -> 'Point2':
        return Point2(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: 'Point2') -> 'Point2':
        return Point2(self.x1 - other.x1, self.x2 - other.x2)

    def scaled(self, s) -> 'Point2':
        return Point2(self.x1 * s, self.x2 * s)

    def dot(self, other: 'Point2') -> Scalar:
        return self.x1 * other.x1 + self.x2 * other.x2

    def norm2(self) -> Scalar:
        return self.dot(self)

    def __str__(self):
        return f"({format_scalar(self.x1)}, {format_scalar(self.x2)})"


@dataclass(frozen=True)
class BaseConfig:
    """Full input of the construction: vertices x, y, z, tangent point c, inradius r."""

    x: Point2
    y: Point2
    z: Point2
    c: Point2
    r: Scalar

    def with_radius(self, r) -> 'BaseConfig':
        return replace(self, r=r)

    def translated(self, h: Point2) -> 'BaseConfig':
        return BaseConfig(self.x + h, self.y + h, self.z + h, self.c + h, self.r)

    def scaled(self, s) -> 'BaseConfig':
        return BaseConfig(self.x.scaled(s), self.y.scaled(s), self.z.scaled(s),
                          self.c.scaled(s), self.r * s)

    def scalars(self) -> Tuple:
        return (self.x.x1, self.x.x2, self.y.x1, self.y.x2, self.z.x1, self.z.x2,
                self.c.x1, self.c.x2, self.r)


@dataclass(frozen=True)
class AreaSet:
    """Twice the signed areas of xyz, cyz, xcz and xyc."""

    a0: Scalar
    ax: Scalar
    ay: Scalar
    az: Scalar


def twice_area(p: Point2, q: Point2, s: Point2) -> Scalar:
    """Twice the signed area of the triangle pqs; positive iff counterclockwise."""
    return (p.x1 * q.x2 + q.x1 * s.x2 + s.x1 * p.x2
            - q.x1 * p.x2 - s.x1 * q.x2 - p.x1 * s.x2)


def area_set(cfg: BaseConfig) -> AreaSet:
    return AreaSet(
        a0=twice_area(cfg.x, cfg.y, cfg.z),
        ax=twice_area(cfg.c, cfg.y, cfg.z),
        ay=twice_area(cfg.x, cfg.c, cfg.z),
        az=twice_area(cfg.x, cfg.y, cfg.c),
    )


def validate_base(cfg: BaseConfig) -> AreaSet:
    """
    Check orientation, nondegeneracy and interiority of c.

    Returns:
        The area set of the configuration

    Raises:
        PreconditionError: naming the violated check
    """
    areas = area_set(cfg)
    s0 = sign(areas.a0)
    if s0 == 0:
        raise PreconditionError("degenerate basic triangle: a_0 = 0 (collinear vertices)")
    if s0 < 0:
        raise PreconditionError(
            "basic triangle is clockwise: a_0 < 0; swap two vertices (e.g. y and z)"
        )
    for name, value in (('a_x', areas.ax), ('a_y', areas.ay), ('a_z', areas.az)):
        if sign(value) <= 0:
            raise PreconditionError(f"tangent point not interior: {name} <= 0")
    return areas


def validate(cfg: BaseConfig) -> AreaSet:
    """
    Full validation: base checks plus 0 < r and r^2 < A/B.

    Raises:
        PreconditionError: invalid base data or r <= 0
        DegeneracyError: r^2 = A/B (prism) or r^2 > A/B (supercritical)
    """
    areas = validate_base(cfg)
    if sign(cfg.r) <= 0:
        raise PreconditionError("inradius must be positive: r <= 0")
    A, B = big_A_B(cfg)
    position = sign(cfg.r * cfg.r * B - A)
    if position == 0:
        raise DegeneracyError(
            "critical inradius r^2 = A/B: the tetrahedron degenerates into a "
            "semi-infinite triangular prism"
        )
    if position > 0:
        raise DegeneracyError(
            "supercritical inradius r^2 > A/B: the tangent planes meet below the "
            "base plane (ex-sphere configuration)"
        )
    return areas


def big_A_B(cfg: BaseConfig) -> Tuple[Scalar, Scalar]:
    """A = a_x a_y a_z and B = |x|^2 a_x + |y|^2 a_y + |z|^2 a_z - |c|^2 a_0."""
    areas = area_set(cfg)
    A = areas.ax * areas.ay * areas.az
    B = (cfg.x.norm2() * areas.ax + cfg.y.norm2() * areas.ay
         + cfg.z.norm2() * areas.az - cfg.c.norm2() * areas.a0)
    return A, B


def critical_inradius_sq(cfg: BaseConfig) -> Scalar:
    """r_crit^2 = A/B; the root itself is generally irrational."""
    validate_base(cfg)
    A, B = big_A_B(cfg)
    return A / B


def circumcenter2(x: Point2, y: Point2, z: Point2) -> Point2:
    """Circumcenter of the triangle xyz."""
    a0 = twice_area(x, y, z)
    if a0 == 0:
        raise PreconditionError("collinear vertices have no circumcenter")
    nx, ny, nz = x.norm2(), y.norm2(), z.norm2()
    o1 = (nx * (y.x2 - z.x2) + ny * (z.x2 - x.x2) + nz * (x.x2 - y.x2)) / (2 * a0)
    o2 = (nx * (z.x1 - y.x1) + ny * (x.x1 - z.x1) + nz * (y.x1 - x.x1)) / (2 * a0)
    return Point2(o1, o2)


def side_lengths(x: Point2, y: Point2, z: Point2) -> Tuple[Scalar, Scalar, Scalar]:
    """
    Lengths |y - z|, |z - x|, |x - y| when they lie in the field.

    Raises:
        PreconditionError: a side length leaves the field (not Heronian)
    """
    sides = []
    for name, p, q in (('|y-z|', y, z), ('|z-x|', z, x), ('|x-y|', x, y)):
        length = exact_sqrt((p - q).norm2())
        if length is None:
            raise PreconditionError(
                f"side length {name} is not representable in the field "
                f"(squared length {format_scalar((p - q).norm2())})"
            )
        sides.append(length)
    return tuple(sides)


def incenter2(x: Point2, y: Point2, z: Point2) -> Point2:
    """Incenter by barycentric weights proportional to the opposite sides."""
    sx, sy, sz = side_lengths(x, y, z)
    perimeter = sx + sy + sz
    if perimeter == 0:
        raise PreconditionError("degenerate triangle has no incenter")
    return Point2((sx * x.x1 + sy * y.x1 + sz * z.x1) / perimeter,
                  (sx * x.x2 + sy * y.x2 + sz * z.x2) / perimeter)


def barycentric_weights(cfg: BaseConfig) -> Tuple[Scalar, Scalar, Scalar]:
    """t_x = a_x / a_0 etc.; they sum to one and reconstruct c."""
    areas = validate_base(cfg)
    return areas.ax / areas.a0, areas.ay / areas.a0, areas.az / areas.a0


def from_barycentric(cfg: BaseConfig, weights: Tuple) -> Point2:
    tx, ty, tz = weights
    return cfg.x.scaled(tx) + cfg.y.scaled(ty) + cfg.z.scaled(tz)
