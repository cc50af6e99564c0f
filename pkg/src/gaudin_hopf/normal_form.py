"""Nonlinear normal form at a Hamiltonian Hopf threshold.

Two independent routes to the coefficients of

    a1 S + N + a2 M + a3 M^2 + a4 MS + a5 S^2 + a6 M^3 + a7 M^2 S + a8 MS^2 + a9 S^3:

the printed appendix formulas (``eval_raw_coefficients``) and a Lie-series
pipeline built on :mod:`gaudin_hopf.polyalg` (``lie_series_normal_form``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import numpy as np

from . import _appendix, exact
from . import polyalg as pa
from .linear import Side, thresholds
from .model import DomainError, FixedPoint, ModelParams

DEGREE = 6
DENOM_TOL = 1e-12
ZERO_TOL = 1e-9
RESIDUAL_TOL = 1e-8


class SingularConfigurationError(DomainError):
    """An appendix denominator vanishes (or b = 0 when scaling)."""


class NormalizationError(RuntimeError):
    """The linear elimination left terms outside span{M^k S^l}."""


class Verdict(str, Enum):
    Supercritical = "supercritical"
    Subcritical = "subcritical"
    Degenerate = "degenerate"
    PossiblyHigherDegenerate = "possibly-higher-degenerate"
    NotAtBifurcation = "not-at-bifurcation"


@dataclass(frozen=True)
class RawCoefficients:
    """a_tilde[1..9] (index 0 is a_tilde_1) and the N coefficient b."""

    a_tilde: tuple
    b: object

    def to_dict(self) -> dict:
        d = {f"a{i + 1}": _num(v) for i, v in enumerate(self.a_tilde)}
        d["b"] = _num(self.b)
        return d


@dataclass(frozen=True)
class ScaledCoefficients:
    a: tuple
    side: Side = Side.plus
    fixed_point: FixedPoint = FixedPoint.m0

    def __getitem__(self, i: int):
        """1-based access: ``sc[3]`` is a3."""
        return self.a[i - 1]

    def to_dict(self) -> dict:
        d = {f"a{i + 1}": _num(v) for i, v in enumerate(self.a)}
        d.update(side=self.side.value, fixed_point=self.fixed_point.value)
        return d


@dataclass(frozen=True)
class GeneratingCoefficients:
    e: tuple
    f: tuple

    def to_dict(self) -> dict:
        d = {f"e{i + 1}": _num(v) for i, v in enumerate(self.e)}
        d.update({f"f{i + 1}": _num(v) for i, v in enumerate(self.f)})
        return d


@dataclass(frozen=True)
class Criticality:
    verdict: Verdict
    a3: float
    a6: float
    source: str = "lie-series"

    def to_dict(self) -> dict:
        return {"verdict": self.verdict.value, "a3": _num(self.a3), "a6": _num(self.a6), "source": self.source}


@dataclass(frozen=True)
class NormalFormResult:
    raw: RawCoefficients
    scaled: ScaledCoefficients
    generating: GeneratingCoefficients
    exact: bool
    residuals: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "raw": self.raw.to_dict(),
            "scaled": self.scaled.to_dict(),
            "generating": self.generating.to_dict(),
            "exact": self.exact,
            "residuals": {k: float(v) for k, v in self.residuals.items()},
        }


def _num(v):
    return float(v)


# ----------------------------------------------------------------------
# appendix route
# ----------------------------------------------------------------------

def _appendix_args(params: ModelParams):
    """Arguments for the generated appendix code; exact when R1, R2 are rational squares."""
    if params.is_exact and exact.is_rational_square(params.R1) and exact.is_rational_square(params.R2):
        p = params.as_fraction()
        return p, exact.exact_sqrt(p.R1), exact.exact_sqrt(p.R2), True
    p = params.as_float()
    return p, math.sqrt(p.R1), math.sqrt(p.R2), False


def _appendix_denominator(params: ModelParams) -> float:
    p = params.as_float()
    return p.R2 * (p.t4 - p.w * p.t1) + p.R1 * (p.w * p.t2 + p.t4) + 2 * math.sqrt(p.R1 * p.R2) * p.t3


def _check_denominators(params: ModelParams):
    if params.t3 == 0:
        raise SingularConfigurationError("appendix formulas require t3 != 0")
    if abs(_appendix_denominator(params)) < DENOM_TOL:
        raise SingularConfigurationError("R2(t4 - w t1) + R1(w t2 + t4) + 2 sqrt(R1 R2) t3 = 0")


def _evaluate_appendix(params: ModelParams) -> dict:
    _check_denominators(params)
    p, s1, s2, _ = _appendix_args(params)
    return _appendix.evaluate(p.R1, p.R2, p.w, p.t0, p.t1, p.t2, p.t3, p.t4, s1, s2)


def eval_raw_coefficients(params: ModelParams) -> RawCoefficients:
    """Printed a_tilde_1..a_tilde_9 and b at m0 (exact for rational square R1, R2)."""
    v = _evaluate_appendix(params)
    at = (v["at1"], v["at2"], v["at3n"] / v["at3d"], v["at4"], v["at5"],
          v["at6n"] / v["at6d"], v["at7n"] / v["at7d"], v["at8n"] / v["at8d"], 0 * v["b"])
    return RawCoefficients(at, v["b"])


def eval_generating_coefficients(params: ModelParams) -> GeneratingCoefficients:
    """Printed e1..e3 and f1..f6."""
    v = _evaluate_appendix(params)
    e = (v["e1n"] / v["e1d"], v["e2"], v["e3"])
    f = tuple(v[f"f{k}n"] / v[f"f{k}d"] for k in range(1, 7))
    return GeneratingCoefficients(e, f)


def scale(raw: RawCoefficients, side=Side.plus, fp=FixedPoint.m0) -> ScaledCoefficients:
    """a_i = a_tilde_i / b."""
    if abs(float(raw.b)) <= DENOM_TOL:
        raise SingularConfigurationError("b = 0: the N coefficient cannot be normalised")
    return ScaledCoefficients(tuple(a / raw.b for a in raw.a_tilde), Side(side), FixedPoint(fp))


# ----------------------------------------------------------------------
# Lie-series route
# ----------------------------------------------------------------------

def _sqrt1m(u: pa.TruncatedPolynomial) -> pa.TruncatedPolynomial:
    """sqrt(1 - u) for u without constant term, to the truncation degree."""
    c = (Fraction(1), Fraction(-1, 2), Fraction(-1, 8), Fraction(-1, 16), Fraction(-5, 128))
    out = pa.TruncatedPolynomial.constant(1, u.max_degree, u.exact)
    term = out
    for k in range(1, len(c)):
        term = term * u
        out = out + term * (c[k] if u.exact else float(c[k]))
    return out


def hamiltonian_jet(params: ModelParams, degree: int = DEGREE, exact_mode: bool = False) -> pa.TruncatedPolynomial:
    """Taylor jet of H at m0 in the coordinates of the Q-change.

    z1 = sqrt(1 - zeta_+/(2 R1)), z2 = -sqrt(1 - zeta_-/(2 R2)) and
    x1 x2 + y1 y2 = (p1^2 + p2^2 - q1^2 - q2^2) / (2 sqrt(R1 R2)).
    """
    if exact_mode:
        p = params.as_fraction()
        s = exact.exact_sqrt(p.R1 * p.R2)
    else:
        p = params.as_float()
        s = math.sqrt(p.R1 * p.R2)
    zp, zm = pa.zeta_pm(degree, exact_mode)
    z1 = _sqrt1m(zp / (2 * p.R1))
    z2 = -_sqrt1m(zm / (2 * p.R2))
    q1, q2, p1, p2 = pa.variables(degree, exact_mode)
    xi = (p1 * p1 + p2 * p2 - q1 * q1 - q2 * q2) / (2 * s)
    zs = z1 + z2
    H = zs * zs * p.t0 + (z1 * p.t1 + z2 * p.t2) * p.w + xi * p.t3 + z1 * z2 * p.t4
    return H


def _swap_qp(H: pa.TruncatedPolynomial) -> pa.TruncatedPolynomial:
    """Pull back by the canonical swap q = -P, p = Q (M <-> N, S fixed, T -> -T)."""
    terms = {}
    for (a, b, c, d), v in H.terms().items():
        terms[(c, d, a, b)] = -v if (a + b) % 2 else v
    return pa.TruncatedPolynomial.from_dict(terms, H.max_degree, H.exact)


def _slice(d: int) -> slice:
    return slice(pa.n_monomials(d - 1) if d > 0 else 0, pa.n_monomials(d))


def _solve(columns, rhs, exact_mode: bool):
    """Solve sum_k x_k columns[k] = rhs; raise NormalizationError when inconsistent."""
    if exact_mode:
        A = [list(row) for row in zip(*columns)]
        try:
            return exact.solve(A, list(rhs))
        except exact.InconsistentSystem as err:
            raise NormalizationError(str(err)) from err
    A = np.column_stack([np.asarray(c, dtype=float) for c in columns])
    b = np.asarray(rhs, dtype=float)
    if np.linalg.matrix_rank(A) < A.shape[1]:
        raise NormalizationError("elimination system is rank deficient")
    x, *_ = np.linalg.lstsq(A, b, rcond=None)
    res = float(np.max(np.abs(A @ x - b))) if len(b) else 0.0
    if res > RESIDUAL_TOL * max(1.0, float(np.max(np.abs(b)))):
        raise NormalizationError(f"elimination residual {res:.3e}")
    return x.tolist()


def _use_exact(params: ModelParams) -> bool:
    return params.is_exact and exact.is_rational_square(Fraction(params.R1) * Fraction(params.R2))


def normalize(params: ModelParams, fp=FixedPoint.m0, side=Side.plus, degree: int = DEGREE,
              exact_mode: bool | None = None) -> NormalFormResult:
    """Run the full Lie-series normalisation at the given parameters.

    Steps: the H jet in Q-coordinates and the omega jet; flattening of omega by
    the flows of X and Y; the same flows applied to H; for ``side = minus`` the
    swap q = -P, p = Q; then E (degree 4) and F (degree 6) from linear
    elimination onto span{M^k S^l}, and scaling by 1/b.
    """
    fp, side = FixedPoint(fp), Side(side)
    if fp not in (FixedPoint.m0, FixedPoint.m2):
        raise DomainError(f"no Hamiltonian Hopf bifurcation at {fp.value}")
    if degree != DEGREE:
        raise DomainError("only the degree-6 normal form is implemented")
    params.require_t3_nonzero()
    p = params if fp is FixedPoint.m0 else params.swapped()
    if exact_mode is None:
        exact_mode = _use_exact(p)
    elif exact_mode and not _use_exact(p):
        raise DomainError("rational mode needs rational parameters with R1 R2 a rational square")
    pp = p.as_fraction() if exact_mode else p.as_float()
    d = degree
    H = hamiltonian_jet(pp, d, exact_mode)
    jet = pa.gaudin_omega_jet(pp, "m0", max_degree=d + 2, exact=exact_mode)
    X, Y = pa.flatten(jet)
    Hb = pa.pullback_function(pa.pullback_function(H.extend(d + 2), X), Y).truncate(d)
    if side is Side.minus:
        Hb = _swap_qp(Hb)
    S, M, N, T = (g.truncate(d) for g in pa.hilbert_generators(d, exact_mode))
    H2, H4 = Hb.homogeneous(2), Hb.homogeneous(4)

    def coeffs(poly, deg):
        return poly.coeffs[_slice(deg)]

    # degree 2: H2 = a1 S + b N + a2 M
    x2 = _solve([coeffs(S, 2), coeffs(N, 2), coeffs(M, 2)], coeffs(H2, 2), exact_mode)
    a1, b, a2 = x2
    # degree 4: H4 + {E, H2} = a3 M^2 + a4 MS + a5 S^2
    Egens = (M * T, N * T, S * T)
    cols = [coeffs(pa.poisson_bracket(g, H2), 4) for g in Egens]
    cols += [coeffs(-m, 4) for m in (M * M, M * S, S * S)]
    x4 = _solve(cols, coeffs(-H4, 4), exact_mode)
    e = x4[:3]
    a3, a4, a5 = x4[3:]
    E = Egens[0] * e[0] + Egens[1] * e[1] + Egens[2] * e[2]
    H1 = pa.lie_transform(Hb, E)
    # degree 6: H1_6 + {F, H2} = a6 M^3 + a7 M^2 S + a8 M S^2 + a9 S^3
    Fgens = (M * M * T, M * S * T, N * N * T, N * S * T, S * S * T, T * T * T)
    cols = [coeffs(pa.poisson_bracket(g, H2), 6) for g in Fgens]
    cols += [coeffs(-m, 6) for m in (M * M * M, M * M * S, M * S * S, S * S * S)]
    x6 = _solve(cols, coeffs(-H1.homogeneous(6), 6), exact_mode)
    f = x6[:6]
    a6, a7, a8, a9 = x6[6:]
    F = Fgens[0] * 0
    for g, c in zip(Fgens, f):
        F = F + g * c
    Hn = pa.lie_transform(H1, F)
    target = (S * a1 + N * b + M * a2 + M * M * a3 + M * S * a4 + S * S * a5
              + M * M * M * a6 + M * M * S * a7 + M * S * S * a8 + S * S * S * a9)
    diff = (Hn - target - Hn.homogeneous(0))
    odd = max((Hn.homogeneous(k).max_abs() for k in range(1, d + 1, 2)), default=0.0)
    residuals = {"non_normal_terms": diff.max_abs(), "odd_terms": odd}
    if residuals["non_normal_terms"] > RESIDUAL_TOL:
        raise NormalizationError(f"normalised series has residual {residuals['non_normal_terms']:.3e}")
    raw = RawCoefficients((a1, a2, a3, a4, a5, a6, a7, a8, a9), b)
    return NormalFormResult(raw, scale(raw, side, fp), GeneratingCoefficients(tuple(e), tuple(f)),
                            bool(exact_mode), residuals)


def lie_series_normal_form(params: ModelParams, fp=FixedPoint.m0, side=Side.plus, degree: int = DEGREE,
                           exact_mode: bool | None = None) -> ScaledCoefficients:
    """Scaled normal-form coefficients a1..a9 from the Lie-series pipeline."""
    return normalize(params, fp, side, degree, exact_mode).scaled


# ----------------------------------------------------------------------
# closed forms and verdicts
# ----------------------------------------------------------------------

def a3_closed_form(params: ModelParams) -> float:
    """Printed M^2 coefficient at t4 = t4,m0+ (equals 2 a_tilde_3 / b)."""
    params.require_t3_nonzero()
    p = params.as_float()
    R1, R2, s = p.R1, p.R2, math.sqrt(p.R1 * p.R2)
    num = 2 * (R1 - R2) ** 2 * (R1 + R2) * p.t0 + 2 * R1 * R2 * p.w * (R1 * p.t2 - R2 * p.t1) + (R1 - R2) ** 2 * s * p.t3
    return num / (8 * s ** 3 * (R1 + R2) * p.t3)


def a6_closed_form(params: ModelParams) -> float:
    """Printed M^3 coefficient, valid at t4 = t4,m0+ on the locus t3 = t3_degenerate."""
    p = params.as_float()
    R1, R2 = p.R1, p.R2
    den_core = R1 * R2 * p.w * (R1 * p.t2 - R2 * p.t1) + (R1 + R2) * (R1 - R2) ** 2 * p.t0
    if R1 == R2 or abs(den_core) < DENOM_TOL:
        raise DomainError("a6 closed form needs R1 != R2 and a nonzero denominator")
    num = (R1 - R2) ** 2 * (R1 * R2 * p.w * (R1 * (p.t1 + 2 * p.t2) - R2 * (2 * p.t1 + p.t2))
                            + (R1 + R2) * (R1 - R2) ** 2 * p.t0)
    return num / (384 * (R1 * R2) ** 2 * den_core)


def t3_degenerate(params: ModelParams) -> float:
    """t3 at which the printed a3 vanishes (R1 != R2)."""
    p = params.as_float()
    R1, R2 = p.R1, p.R2
    if R1 == R2:
        raise DomainError("t3_degenerate needs R1 != R2")
    return -2 * ((R1 + R2) * (R1 - R2) ** 2 * p.t0 - p.w * R1 * R2 * (R2 * p.t1 - R1 * p.t2)) / ((R1 - R2) ** 2 * math.sqrt(R1 * R2))


def at_threshold(params: ModelParams, fp=FixedPoint.m0, side=Side.plus) -> ModelParams:
    """``params`` with t4 replaced by the requested threshold."""
    return params.with_t4(thresholds(params, FixedPoint(fp)).at(side))


def _is_zero(x, tol: float, exact_mode: bool) -> bool:
    return x == 0 if exact_mode else abs(float(x)) <= tol


def classify_criticality(params: ModelParams, fp=FixedPoint.m0, side=Side.plus, source: str = "lie-series",
                         tol: float = ZERO_TOL) -> Criticality:
    """Super-, sub- or degenerate Hamiltonian Hopf bifurcation at t4 = t4+-.

    After scaling by 1/b the N coefficient (sigma) is +1, so the verdict is the
    sign of a3.  ``source="closed-form"`` uses the printed a3/a6 and is only
    valid on the plus side; other requests go through the Lie series.
    """
    fp, side = FixedPoint(fp), Side(side)
    pt = at_threshold(params, fp, side)
    if source == "closed-form" and side is Side.plus:
        q = pt if fp is FixedPoint.m0 else pt.swapped()
        a3 = a3_closed_form(q)
        try:
            a6 = a6_closed_form(q)
        except DomainError:
            a6 = float("nan")
        ex, a2 = False, 0.0
    elif source in ("lie-series", "closed-form"):
        res = normalize(pt, fp, side)
        a2, a3, a6, ex = res.scaled[2], res.scaled[3], res.scaled[6], res.exact
        source = "lie-series"
    else:
        raise DomainError(f"unknown coefficient source {source!r}")
    if not _is_zero(a2, tol, ex):
        verdict = Verdict.NotAtBifurcation
    elif _is_zero(a3, tol * max(1.0, abs(float(a6)) if a6 == a6 else 1.0), ex):
        if a6 == a6 and _is_zero(a6, tol, ex):
            verdict = Verdict.PossiblyHigherDegenerate
        else:
            verdict = Verdict.Degenerate
    else:
        verdict = Verdict.Supercritical if a3 > 0 else Verdict.Subcritical
    return Criticality(verdict, a3, a6, source)
