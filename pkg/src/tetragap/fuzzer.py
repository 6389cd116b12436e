"""
Seeded random configurations and the per-trial invariant suite.

Every trial draws from its own generator Random(seed * stride + trial), so a
run is reproducible trial by trial and does not depend on how trials are
spread over worker processes.
"""
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from .base import BaseConfig, Point2, area_set, big_A_B, circumcenter2, incenter2, validate
from .certificate import (GapCertificate, apex_drift_v, certificate,
                          certificate_checks, critical_radius_bound, edge_weighted_v,
                          expanded_v)
from .config import (FUZZ_COORDINATE_BOUND, FUZZ_DENOMINATOR_BOUND, FUZZ_MAX_REDRAWS,
                     FUZZ_SEED, FUZZ_STREAM_STRIDE, FUZZ_TRIALS, RADIUS_FRACTION_STEPS)
from .construct import apex_height, build_tetrahedron, face_distances_sq
from .errors import PreconditionError, TetragapError
from .metrics import gd_verdict, metrics, pythagorean_form
from .parsers import format_config
from .scalar import format_scalar, sign


def random_rational(rng: random.Random, M: int, D: int) -> Fraction:
    return Fraction(rng.randint(-M, M), rng.randint(1, D))


def random_point(rng: random.Random, M: int, D: int) -> Point2:
    return Point2(random_rational(rng, M, D), random_rational(rng, M, D))


def random_triangle(rng: random.Random, M: int, D: int) -> Tuple[Point2, Point2, Point2]:
    """
    Counterclockwise nondegenerate triangle; collinear draws are redrawn,
    clockwise ones fixed by swapping y and z.

    Raises:
        PreconditionError: FUZZ_MAX_REDRAWS collinear draws in a row
    """
    for _ in range(FUZZ_MAX_REDRAWS):
        x, y, z = (random_point(rng, M, D) for _ in range(3))
        probe = BaseConfig(x, y, z, x, Fraction(1))
        s0 = sign(area_set(probe).a0)
        if s0 > 0:
            return x, y, z
        if s0 < 0:
            return x, z, y
    raise PreconditionError(f"no nondegenerate triangle after {FUZZ_MAX_REDRAWS} draws")


def random_radius(cfg: BaseConfig, rng: random.Random) -> Fraction:
    """Rational r with r^2 < A/B certified exactly."""
    rho = critical_radius_bound(cfg)
    return rho * rng.randint(1, RADIUS_FRACTION_STEPS - 1) / RADIUS_FRACTION_STEPS


def random_config(rng: random.Random, M: int = FUZZ_COORDINATE_BOUND,
                  D: int = FUZZ_DENOMINATOR_BOUND) -> BaseConfig:
    """
    Random valid subcritical config.

    Args:
        rng: generator (consumed)
        M: numerator bound for vertex coordinates
        D: denominator bound

    Returns:
        BaseConfig with c from positive barycentric weights
    """
    x, y, z = random_triangle(rng, M, D)
    weights = [Fraction(rng.randint(1, max(M, 1)), rng.randint(1, D)) for _ in range(3)]
    total = sum(weights)
    tx, ty, tz = (w / total for w in weights)
    c = x.scaled(tx) + y.scaled(ty) + z.scaled(tz)
    cfg = BaseConfig(x, y, z, c, Fraction(1))
    return cfg.with_radius(random_radius(cfg, rng))


def random_acute_config(rng: random.Random, M: int = FUZZ_COORDINATE_BOUND,
                        D: int = FUZZ_DENOMINATOR_BOUND) -> BaseConfig:
    """Random triangle with interior circumcenter, touched there."""

    for _ in range(FUZZ_MAX_REDRAWS):
        x, y, z = random_triangle(rng, M, D)
        o = circumcenter2(x, y, z)
        probe = BaseConfig(x, y, z, o, Fraction(1))
        areas = area_set(probe)
        if min(sign(areas.ax), sign(areas.ay), sign(areas.az)) > 0:
            return probe.with_radius(random_radius(probe, rng))
    raise PreconditionError(f"no acute triangle after {FUZZ_MAX_REDRAWS} draws")


def random_pythagorean_triple(rng: random.Random, bound: int) -> Tuple[int, int, int]:
    """Legs (p, q) and hypotenuse from Euclid's formula with m > n >= 1."""
    m = rng.randint(2, bound)
    n = rng.randint(1, m - 1)
    return m * m - n * n, 2 * m * n, m * m + n * n


def random_heronian(rng: random.Random, bound: int = 6) -> Tuple[Point2, Point2, Point2]:
    """
    Heronian triangle glued from two right triangles along a common height.

    Returns:
        Counterclockwise vertices (0, 0), (base, 0), apex with integer sides
    """
    p1, q1, _ = random_pythagorean_triple(rng, bound)
    p2, q2, _ = random_pythagorean_triple(rng, bound)
    # scale so both have height q1 * q2
    left, right, height = p1 * q2, p2 * q1, q1 * q2
    return (Point2(Fraction(0), Fraction(0)),
            Point2(Fraction(left + right), Fraction(0)),
            Point2(Fraction(left), Fraction(height)))


def random_heronian_config(rng: random.Random, bound: int = 6) -> BaseConfig:
    """Heronian base touched at its incenter."""
    x, y, z = random_heronian(rng, bound)
    probe = BaseConfig(x, y, z, incenter2(x, y, z), Fraction(1))
    return probe.with_radius(random_radius(probe, rng))


def evaluate(cfg: BaseConfig) -> Tuple[List[str], Optional[GapCertificate]]:
    """Invariant suite plus the certificate it was checked on (None if the pipeline failed)."""
    try:
        areas = validate(cfg)
        A, B = big_A_B(cfg)
        tet = build_tetrahedron(cfg)
        m = metrics(tet)
        verdict = gd_verdict(m)
        cert = certificate(cfg)
        routes = {'expanded_v': expanded_v(cfg), 'edge_weighted_v': edge_weighted_v(cfg),
                  'apex_drift_v': apex_drift_v(cfg)}
        height = apex_height(cfg)
        distances = face_distances_sq(tet)
    except TetragapError as e:
        return [f"pipeline: {e}"], None

    r2 = cfg.r * cfg.r
    checks = {
        'area additivity': areas.ax + areas.ay + areas.az == areas.a0,
        'B > 0': sign(B) > 0,
        'apex height = closed form': tet.w.x3 == height,
        'insphere tangency': all(dist == r2 for dist in distances),
        'circumcenter equidistance': all((m.o - p).norm2() == m.R2
                                         for p in (tet.x, tet.y, tet.z, tet.w)),
        'Grace-Danielsson satisfied': verdict.satisfied,
        'Pythagorean form agrees': pythagorean_form(m) == verdict.satisfied,
        'pipeline gap = certificate lhs': verdict.squared_gap == cert.lhs,
    }
    checks.update(certificate_checks(cert))
    for name, route in routes.items():
        checks[f'{name} = v_pair'] = route[0] == cert.v1 and route[1] == cert.v2
    return [name for name, ok in checks.items() if not ok], cert


def check_invariants(cfg: BaseConfig) -> List[str]:
    """
    Run the invariant suite on one config.

    Returns:
        Names of failed checks (empty when everything holds exactly)
    """
    return evaluate(cfg)[0]


@dataclass
class TrialResult:
    trial: int
    config: str
    failed: List[str]
    gap: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.failed


@dataclass
class FuzzSummary:
    trials: int
    seed: int
    results: List[TrialResult] = field(default_factory=list)

    @property
    def failures(self) -> List[TrialResult]:
        return [t for t in self.results if not t.ok]

    @property
    def passed(self) -> int:
        return self.trials - len(self.failures)

    def line(self) -> str:
        return f"{self.passed}/{self.trials} ok"


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * FUZZ_STREAM_STRIDE + trial)


def run_trial(args: Tuple[int, int, int, int]) -> TrialResult:
    """One fuzz trial; a top-level function so worker processes can pickle it."""
    seed, trial, M, D = args
    cfg = random_config(trial_rng(seed, trial), M, D)
    failed, cert = evaluate(cfg)
    gap = format_scalar(cert.lhs) if cert is not None else None
    return TrialResult(trial=trial, config=format_config(cfg), failed=failed, gap=gap)


def run_fuzz(trials: int = FUZZ_TRIALS, seed: int = FUZZ_SEED,
             M: int = FUZZ_COORDINATE_BOUND, D: int = FUZZ_DENOMINATOR_BOUND,
             workers: int = 1, verbose: bool = True) -> FuzzSummary:
    """
    Run the invariant suite on seeded random configs.

    Args:
        trials: number of configs (>= 1)
        seed: base seed
        M: coordinate numerator bound
        D: coordinate denominator bound
        workers: worker processes (1 runs in-process)
        verbose: print progress

    Returns:
        FuzzSummary with per-trial results in trial order
    """
    if trials < 1:
        raise PreconditionError("trials must be >= 1")
    if M < 1 or D < 1:
        raise PreconditionError("coordinate and denominator bounds must be >= 1")

    jobs = [(seed, trial, M, D) for trial in range(trials)]
    if verbose:
        print(f"Fuzz: {trials} casos, semente {seed}, M={M}, D={D}, workers={workers}")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run_trial, jobs, chunksize=max(1, trials // (4 * workers))))
    else:
        results = []
        step = max(1, trials // 10)
        for job in jobs:
            results.append(run_trial(job))
            if verbose and (job[1] + 1) % step == 0:
                print(f"  {job[1] + 1}/{trials} casos")

    return FuzzSummary(trials=trials, seed=seed, results=results)
