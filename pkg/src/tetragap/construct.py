"""
Tetrahedron construction from the basic triangle.

The insphere has center inc = (c1, c2, r) and touches the base at c. The
lateral tangent points are mirror images of (c1, c2, 0) across the plane
through the corresponding base edge and inc; the apex w is the common point of
the three lateral tangent planes. Planes are carried as (normal, offset) pairs
built from exact cross products, never normalized.
"""
from dataclasses import dataclass
from typing import Tuple

from .base import BaseConfig, Point2, big_A_B, validate, validate_base
from .errors import DegeneracyError, PreconditionError, VerificationError
from .linalg import det4, solve3
from .scalar import Scalar, format_scalar, sign


@dataclass(frozen=True)
class Point3:
    x1: Scalar
    x2: Scalar
    x3: Scalar

    @classmethod
    def lift(cls, p: Point2, height=0) -> 'Point3':
        return cls(p.x1, p.x2, height)

    def __add__(self, other: 'Point3') -> 'Point3':
        return Point3(self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: 'Point3') -> 'Point3':
        return Point3(self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def scaled(self, s) -> 'Point3':
        return Point3(self.x1 * s, self.x2 * s, self.x3 * s)

    def dot(self, other: 'Point3') -> Scalar:
        return self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3

    def cross(self, other: 'Point3') -> 'Point3':
        return Point3(self.x2 * other.x3 - self.x3 * other.x2,
                      self.x3 * other.x1 - self.x1 * other.x3,
                      self.x1 * other.x2 - self.x2 * other.x1)

    def norm2(self) -> Scalar:
        return self.dot(self)

    def horizontal(self) -> Point2:
        return Point2(self.x1, self.x2)

    def __str__(self):
        return (f"({format_scalar(self.x1)}, {format_scalar(self.x2)}, "
                f"{format_scalar(self.x3)})")


# A plane n . p = offset
Plane = Tuple[Point3, Scalar]


@dataclass(frozen=True)
class TangentPoints:
    """Tangent points on the faces opposite x, y and z."""

    X: Point3
    Y: Point3
    Z: Point3


@dataclass(frozen=True)
class Tetrahedron:
    x: Point3
    y: Point3
    z: Point3
    w: Point3
    inc: Point3
    r: Scalar


def plane_through(p: Point3, q: Point3, s: Point3) -> Plane:
    normal = (q - p).cross(s - p)
    return normal, normal.dot(p)


def distance_sq_to_plane(point: Point3, plane: Plane) -> Scalar:
    normal, offset = plane
    n2 = normal.norm2()
    if n2 == 0:
        raise PreconditionError("degenerate plane: the three points are collinear")
    excess = normal.dot(point) - offset
    return excess * excess / n2


def insphere_center(cfg: BaseConfig) -> Point3:
    return Point3.lift(cfg.c, cfg.r)


def _mirror_tangent_point(p: Point2, q: Point2, cfg: BaseConfig) -> Point3:
    """Reflect (c1, c2, 0) across the plane through the edge pq and inc."""
    base = Point3.lift(p)
    edge = Point3.lift(q) - base
    if edge.norm2() == 0:
        raise PreconditionError("degenerate edge: coincident vertices")
    normal = edge.cross(insphere_center(cfg) - base)
    foot = Point3.lift(cfg.c)
    t = 2 * (foot - base).dot(normal) / normal.norm2()
    return foot - normal.scaled(t)


def tangent_points(cfg: BaseConfig) -> TangentPoints:
    """
    Tangent points X, Y, Z of the insphere on the lateral faces.

    Defined for any r > 0 (including the critical limit), so only the base is
    validated here.
    """
    validate_base(cfg)
    return TangentPoints(
        X=_mirror_tangent_point(cfg.y, cfg.z, cfg),
        Y=_mirror_tangent_point(cfg.z, cfg.x, cfg),
        Z=_mirror_tangent_point(cfg.x, cfg.y, cfg),
    )


def lateral_planes(cfg: BaseConfig) -> Tuple[Plane, Plane, Plane]:
    """Tangent planes spanned by {x, y, Z}, {y, z, X} and {z, x, Y}."""
    tp = tangent_points(cfg)
    x, y, z = Point3.lift(cfg.x), Point3.lift(cfg.y), Point3.lift(cfg.z)
    return (plane_through(x, y, tp.Z),
            plane_through(y, z, tp.X),
            plane_through(z, x, tp.Y))


def apex(cfg: BaseConfig) -> Point3:
    """
    Fourth vertex w as the intersection of the three lateral tangent planes.

    Raises:
        DegeneracyError: r^2 >= A/B (prism or supercritical)
    """
    validate(cfg)
    planes = lateral_planes(cfg)
    rows = [(n.x1, n.x2, n.x3) for n, _ in planes]
    rhs = [offset for _, offset in planes]
    solution = solve3(rows, rhs)
    if solution is None:
        raise DegeneracyError(
            "lateral tangent planes are parallel to a common direction: "
            "the tetrahedron degenerates into a prism"
        )
    w = Point3(*solution)

    expected = apex_height(cfg)
    if w.x3 != expected:
        raise VerificationError(
            f"apex height {format_scalar(w.x3)} differs from the closed form "
            f"{format_scalar(expected)}"
        )
    return w


def apex_height(cfg: BaseConfig) -> Scalar:
    """
    w3 = 2 r A / (A - B r^2), cross-checked against 2 r rc^2 / (rc^2 - r^2).

    Positive iff r is subcritical.

    Raises:
        DegeneracyError: r^2 = A/B (pole)
    """
    validate_base(cfg)
    A, B = big_A_B(cfg)
    r = cfg.r
    denominator = A - B * r * r
    if denominator == 0:
        raise DegeneracyError("apex height has a pole at r^2 = A/B (prism)")
    height = 2 * r * A / denominator

    rc2 = A / B
    by_critical = 2 * r * rc2 / (rc2 - r * r)
    if by_critical != height:
        raise VerificationError("the two closed forms of the apex height disagree")
    return height


def build_tetrahedron(cfg: BaseConfig) -> Tetrahedron:
    w = apex(cfg)
    return Tetrahedron(
        x=Point3.lift(cfg.x),
        y=Point3.lift(cfg.y),
        z=Point3.lift(cfg.z),
        w=w,
        inc=insphere_center(cfg),
        r=cfg.r,
    )


def face_distances_sq(tet: Tetrahedron) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
    """Squared distances from inc to the base and the three lateral faces."""
    return (distance_sq_to_plane(tet.inc, plane_through(tet.x, tet.y, tet.z)),
            distance_sq_to_plane(tet.inc, plane_through(tet.y, tet.z, tet.w)),
            distance_sq_to_plane(tet.inc, plane_through(tet.z, tet.x, tet.w)),
            distance_sq_to_plane(tet.inc, plane_through(tet.x, tet.y, tet.w)))


def criticality_coplanarity(cfg: BaseConfig) -> Scalar:
    """
    4x4 determinant of (X|1), (Y|1), (Z|1), (inc|1).

    Zero exactly when the tangent points and the insphere center are
    coplanar, i.e. when r is the critical inradius.
    """
    tp = tangent_points(cfg)
    inc = insphere_center(cfg)
    rows = [(p.x1, p.x2, p.x3, 1) for p in (tp.X, tp.Y, tp.Z, inc)]
    return det4(rows)


def lateral_edge_directions(cfg: BaseConfig) -> Tuple[Point3, Point3, Point3]:
    """Directions of the pairwise intersection lines of the lateral planes."""
    (n_z, _), (n_x, _), (n_y, _) = lateral_planes(cfg)
    return n_x.cross(n_y), n_y.cross(n_z), n_z.cross(n_x)


def are_parallel(u: Point3, v: Point3) -> bool:
    cross = u.cross(v)
    return cross.x1 == 0 and cross.x2 == 0 and cross.x3 == 0


def is_subcritical(cfg: BaseConfig) -> bool:
    A, B = big_A_B(cfg)
    return sign(cfg.r) > 0 and sign(A - B * cfg.r * cfg.r) > 0
