"""
Verifier - Orchestrates each command into a Report.

A Report keeps exact values (scalars, points, booleans) in insertion order;
the exporter decides how to render them.
"""
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List

from .base import BaseConfig, area_set, big_A_B, critical_inradius_sq, side_lengths
from .certificate import certificate, certificate_checks
from .config import HERONIAN_FIXTURES, PECH_SIDE_BOUND
from .construct import apex_height, build_tetrahedron, face_distances_sq, tangent_points
from .fixtures import ExampleResult
from .fuzzer import random_heronian
from .metrics import gd_verdict, metrics
from .scalar import sign
from .special import (equilateral_gap, pech_euler, pech_symbolic_identity,
                      planar_apex_height, planar_critical, planar_tangent_determinant)


@dataclass
class Report:
    title: str
    values: Dict[str, Any] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def construct_report(cfg: BaseConfig) -> Report:
    """Tetrahedron, tangent points, insphere center and r_crit^2."""
    tet = build_tetrahedron(cfg)
    tp = tangent_points(cfg)
    r2 = cfg.r * cfg.r
    report = Report("Construction")
    report.values.update({
        'w': tet.w, 'X': tp.X, 'Y': tp.Y, 'Z': tp.Z, 'inc': tet.inc,
        'r': cfg.r, 'r_crit^2': critical_inradius_sq(cfg),
    })
    report.checks.update({
        'apex height = 2rA/(A - Br^2)': tet.w.x3 == apex_height(cfg),
        'insphere tangent to all faces': all(dist == r2 for dist in face_distances_sq(tet)),
        'tangent points on the insphere': all((p - tet.inc).norm2() == r2
                                              for p in (tp.X, tp.Y, tp.Z)),
    })
    return report


def gap_report(cfg: BaseConfig) -> Report:
    """Full certificate plus the Grace-Danielsson verdict."""
    m = metrics(build_tetrahedron(cfg))
    verdict = gd_verdict(m)
    cert = certificate(cfg)
    areas = area_set(cfg)
    A, B = big_A_B(cfg)

    report = Report("Gap certificate")
    report.values.update({
        'a0': areas.a0, 'ax': areas.ax, 'ay': areas.ay, 'az': areas.az, 'A': A, 'B': B,
        'o': m.o, 'R2': m.R2, 'd2': m.d2, 'r': cfg.r,
        'u1': cert.u1, 'u2': cert.u2, 'v1': cert.v1, 'v2': cert.v2,
        'alpha': cert.alpha, 'beta': cert.beta, 'gamma': cert.gamma, 'dis': cert.dis,
        'gap': verdict.squared_gap, 'rhs': cert.rhs,
        'satisfied': verdict.satisfied, 'equality': verdict.equality,
    })
    report.checks.update(certificate_checks(cert))
    report.checks['gap = certificate lhs'] = verdict.squared_gap == cert.lhs
    report.checks['Grace-Danielsson satisfied'] = verdict.satisfied
    if cert.alpha == 0:
        report.notes.append("tangent point is the circumcenter: v taken from the apex")
    return report


def example_report(result: ExampleResult) -> Report:
    report = Report(f"Example {result.number}: {result.title}")
    for row in result.rows:
        report.values[row.name] = row.actual
        report.checks[row.name] = row.ok
    return report


def planar_report(p) -> Report:
    report = Report("Planar critical inradius")
    critical = planar_critical(p)
    report.values['p'] = p
    report.values['r_crit^2'] = critical
    # r = p(1 - p) is subcritical: (p(1 - p))^2 < p(1 - p)
    height = planar_apex_height(p, critical)
    report.values['apex height at r = p(1-p)'] = height
    report.checks['apex above the segment below r_crit'] = sign(height) > 0
    report.checks['tangent lines parallel at r_crit'] = planar_tangent_determinant(p, critical) == 0
    return report


def equilateral_report(l2, r) -> Report:
    eq = equilateral_gap(l2, r)
    report = Report("Equilateral base touched at its center")
    report.values.update({
        'l2': eq.l2, 'r': eq.r, 'w3': eq.w3, 'R': eq.R, 'd2': eq.d2,
        'G': eq.G, 'regime': eq.regime,
    })
    report.checks.update({
        'w3 - 2r = 12 r^2 w3 / l2': eq.rel1,
        'w3 (2R - w3) = l2 / 3': eq.rel2,
        'G = 0': eq.G == 0,
        'squared gap = 0': eq.squared_gap == 0,
        'linear side >= 0': eq.linear_side_sign >= 0,
    })
    return report


def pech_report(trials: int, seed: int) -> Report:
    """
    Symbolic SOS identity, random polynomial checks and Heronian Euler checks.

    Random triples draw integer sides up to PECH_SIDE_BOUND; Heronian triangles
    are the fixture list plus `trials` glued ones.
    """
    rng = random.Random(seed)
    report = Report("Pech / Euler")
    report.checks['SOS identity (symbolic)'] = pech_symbolic_identity()

    identity_failures = 0
    checked = 0
    while checked < trials:
        a, b, c = (rng.randint(1, PECH_SIDE_BOUND) for _ in range(3))
        if a + b <= c or b + c <= a or c + a <= b:
            continue
        checked += 1
        if not pech_euler(a, b, c, numeric=False).identity_ok:
            identity_failures += 1
    report.values['random triangles'] = checked
    report.checks['SOS identity (random triples)'] = identity_failures == 0

    heronian = list(HERONIAN_FIXTURES)
    for _ in range(trials):
        x, y, z = random_heronian(rng)
        heronian.append(side_lengths(x, y, z))

    euler_ok = ge_ok = True
    for sides in heronian:
        pech = pech_euler(*sides)
        euler_ok &= bool(pech.euler_ok)
        ge_ok &= bool(pech.R_ge_2r)
        if pech.equality:
            report.notes.append(f"R = 2r for sides {', '.join(str(s) for s in sides)}")
    report.values['Heronian triangles'] = len(heronian)
    report.checks["Euler d^2 = R(R - 2r)"] = euler_ok
    report.checks['R >= 2r'] = ge_ok

    regular = pech_euler(2, 2, 2)
    report.checks['R = 2r for the equilateral probe'] = bool(regular.equality)
    return report
