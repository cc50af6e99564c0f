"""Self-checks that compare the printed formulas with independent computations.

Each suite returns a :class:`SuiteReport`; the command line maps a failed
report to exit code 3.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import normal_form as nf
from .exact import is_rational_square
from .linear import (CANONICAL_OMEGA, EigenClass, FixedPoint, Side, a_hat_template, alpha_at, classify, dnu2_printed,
                     symplectic_basis, thresholds, unfolding)
from .model import DomainError, ModelParams

SUITES = ("appendix", "linear", "events")
APPENDIX_TOL = 1e-8


@dataclass
class Check:
    name: str
    value: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "tolerance": self.tolerance, "passed": self.passed}


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, value, tol, passed=None):
        value = float(value)
        ok = (value <= tol) if passed is None else bool(passed)
        self.checks.append(Check(name, value, tol, ok))

    def to_dict(self) -> dict:
        failed = [c.name for c in self.checks if not c.passed]
        return {"suite": self.suite, "passed": self.passed, "n_checks": len(self.checks),
                "failed": failed,
                "checks": [c.to_dict() for c in self.checks]}


def random_configuration(rng: np.random.Generator, rational: bool = False, min_alpha: float = 0.05,
                         max_tries: int = 200) -> ModelParams:
    """A random admissible configuration placed at its m0 plus threshold.

    Admissible means t3 != 0, every appendix denominator is away from zero and
    |alpha| >= ``min_alpha`` at all four thresholds of m0 and m2 (alpha is the
    semisimple frequency there).  In
    rational mode R1 and R2 are squares of small rationals and the other
    parameters are small fractions, so the whole pipeline runs exactly.
    """
    squares = [Fraction(1), Fraction(4), Fraction(9, 4), Fraction(1, 4), Fraction(9), Fraction(16, 9)]
    for _ in range(max_tries):
        if rational:
            R1, R2 = (squares[int(i)] for i in rng.integers(0, len(squares), 2))
            w = Fraction(1)
            t0, t1, t2 = (Fraction(int(n), int(d)) for n, d in zip(rng.integers(-6, 7, 3), rng.integers(1, 8, 3)))
            t3 = Fraction(int(rng.choice([-5, -4, -3, -2, -1, 1, 2, 3, 4, 5])), int(rng.integers(2, 7)))
        else:
            R1, R2 = (float(v) for v in rng.uniform(0.5, 3.0, 2))
            w = float(rng.choice([0.0, 1.0]))
            t0, t1, t2 = (float(v) for v in rng.uniform(-1, 1, 3))
            t3 = float(rng.choice([-1, 1]) * rng.uniform(0.2, 1.0))
        p = ModelParams(R1=R1, R2=R2, w=w, t0=t0, t1=t1, t2=t2, t3=t3)
        if rational and not is_rational_square(Fraction(R1) * Fraction(R2)):
            continue
        try:
            p = nf.at_threshold(p, FixedPoint.m0, Side.plus)
            nf._check_denominators(p)
            if abs(float(nf.eval_raw_coefficients(p).b)) < 1e-3:
                continue
        except DomainError:
            continue
        alphas = [alpha_at(p.with_t4(thresholds(p, fp).at(side)), fp)
                  for fp in (FixedPoint.m0, FixedPoint.m2) for side in (Side.plus, Side.minus)]
        if min(abs(a) for a in alphas) < min_alpha:
            continue
        return p
    raise RuntimeError("no admissible configuration found")


def _rel(a, b) -> float:
    a, b = float(a), float(b)
    return abs(a - b) / max(abs(a), abs(b), 1e-300) if (a or b) else 0.0


def appendix_suite(draws: int = 20, seed: int = 0, tolerance: float = APPENDIX_TOL,
                   rational: bool = False) -> SuiteReport:
    """Lie-series coefficients against the printed appendix tables at t4 = t4+."""
    rep = SuiteReport("appendix")
    t = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst: dict[str, float] = {}
    exact_zero = True
    for _ in range(draws):
        p = random_configuration(rng, rational)
        res = nf.normalize(p)
        app = nf.scale(nf.eval_raw_coefficients(p))
        gen = nf.eval_generating_coefficients(p)
        for i in range(1, 10):
            worst[f"a{i}"] = max(worst.get(f"a{i}", 0.0), abs(float(res.scaled[i]) - float(app[i]))
                                 if i in (2, 9) else _rel(res.scaled[i], app[i]))
        for k, (x, y) in enumerate(zip(res.generating.e, gen.e), 1):
            worst[f"e{k}"] = max(worst.get(f"e{k}", 0.0), _rel(x, y))
        for k, (x, y) in enumerate(zip(res.generating.f, gen.f), 1):
            worst[f"f{k}"] = max(worst.get(f"f{k}", 0.0), _rel(x, y))
        worst["b"] = max(worst.get("b", 0.0), _rel(res.raw.b, nf.eval_raw_coefficients(p).b))
        if res.exact:
            exact_zero &= res.scaled[2] == 0 and res.scaled[9] == 0
    for k in sorted(worst, key=lambda s: (s[0], int(s[1:]) if s[1:] else 0)):
        rep.add(f"max relative error {k}" if k not in ("a2", "a9") else f"max |{k}|", worst[k], tolerance)
    if rational:
        rep.add("a2 = a9 = 0 exactly", 0.0 if exact_zero else 1.0, 0.0, exact_zero)
    rep.seconds = time.perf_counter() - t
    return rep


def linear_suite(draws: int = 20, seed: int = 0, tolerance: float = 1e-10) -> SuiteReport:
    """Threshold classification, symplectic basis and transversality on random draws."""
    rep = SuiteReport("linear")
    t = time.perf_counter()
    rng = np.random.default_rng(seed)
    worst_hat = worst_pair = worst_dnu = 0.0
    misclass = 0
    for _ in range(draws):
        p = random_configuration(rng)
        for fp in (FixedPoint.m0, FixedPoint.m2):
            th = thresholds(p, fp)
            for side in (Side.plus, Side.minus):
                bc = symplectic_basis(p, fp, side)
                worst_hat = max(worst_hat, float(np.max(np.abs(bc.A_hat - a_hat_template(bc.alpha, bc.epsilon)))))
                worst_pair = max(worst_pair, float(np.max(np.abs(bc.pairings - CANONICAL_OMEGA))))
            u = unfolding(p, fp, Side.plus)
            worst_dnu = max(worst_dnu, abs(u.dnu2_dt4_at_threshold - dnu2_printed(p)))
            mid, out = 0.5 * (th.lower + th.upper), th.upper + 0.5 * (th.upper - th.lower) + 0.1
            misclass += classify(p.with_t4(mid), fp).kind is not EigenClass.FocusFocus
            misclass += classify(p.with_t4(out), fp).kind is not EigenClass.EllipticElliptic
    rep.add("max |P^-1 A P - template|", worst_hat, tolerance)
    rep.add("max |P^T Omega P - Omega0|", worst_pair, tolerance)
    rep.add("max |dnu2/dt4 - printed|", worst_dnu, 1e-8)
    rep.add("misclassified window samples", misclass, 0)
    rep.seconds = time.perf_counter() - t
    return rep


FIG6 = ModelParams(R1=1, R2=2, w=0, t0=Fraction(-1, 2), t3=Fraction(1, 2))
FIG6_EVENTS = [(-0.875, 0.0, 0.5), (0.375, 0.0, -0.5), (0.5, -math.sqrt(2) / 2, -0.5), (0.5, math.sqrt(2) / 2, -0.5),
               (1.5, -3 * math.sqrt(2) / 2, -0.5), (1.5, 3 * math.sqrt(2) / 2, -0.5)]


def events_suite(tolerance: float = 1e-6) -> SuiteReport:
    """The bifurcation events of the Fig. 6 configuration."""
    from .momentum import detect_events
    rep = SuiteReport("events")
    t = time.perf_counter()
    ev = detect_events(FIG6, (-2.0, 2.5))
    for t4, j, H in FIG6_EVENTS:
        d = min((max(abs(e.t4 - t4), abs(e.j - j), abs(e.H - H)) for e in ev), default=math.inf)
        rep.add(f"event (t4, J, H) = ({t4:.6g}, {j:.6g}, {H:.6g})", d, tolerance)
    for s in (-1, 1):
        t4 = s * math.sqrt(2) / 3
        d = min((abs(e.t4 - t4) for e in ev if e.kind.value.startswith("hopf")), default=math.inf)
        rep.add(f"Hopf event at t4 = {t4:.6g}", d, tolerance)
    rep.seconds = time.perf_counter() - t
    rep.add("scan runtime (s)", rep.seconds, 60.0)
    return rep


def run_suite(name: str, draws: int = 20, seed: int = 0, tolerance: float | None = None,
              rational: bool = False) -> SuiteReport:
    if name == "appendix":
        return appendix_suite(draws, seed, tolerance or APPENDIX_TOL, rational)
    if name == "linear":
        return linear_suite(draws, seed, tolerance or 1e-10)
    if name == "events":
        return events_suite(tolerance or 1e-6)
    raise DomainError(f"unknown suite {name!r}; expected one of {SUITES}")


__all__ = ["SUITES", "Check", "SuiteReport", "random_configuration", "appendix_suite", "linear_suite",
           "events_suite", "run_suite", "FIG6", "FIG6_EVENTS"]
