"""Linear analysis at the rank-0 points.

Linearisation in sign-adapted sphere charts, classification of the linear
type, the closed-form Hopf thresholds, the Jordan-Chevalley decomposition at a
threshold with its symplectic basis, and the unfolding (nu1, nu2).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable

import numpy as np

from . import exact
from .model import DomainError, FixedPoint, ModelParams

J2 = np.array([[0.0, 1.0], [-1.0, 0.0]])
CANONICAL_OMEGA = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]], dtype=float)
CLASS_TOL = 1e-9
# Generic multiples of A_J tried when A_H alone has a repeated spectrum.
_PENCIL_SHIFTS = (0.0, 0.7548776662466927, -1.324717957244746)


class EigenClass(str, Enum):
    EllipticElliptic = "elliptic-elliptic"
    FocusFocus = "focus-focus"
    EllipticHyperbolic = "elliptic-hyperbolic"
    HyperbolicHyperbolic = "hyperbolic-hyperbolic"
    DegenerateCollision = "degenerate"


class Side(str, Enum):
    plus = "plus"
    minus = "minus"


class PreconditionError(DomainError):
    """Raised when a matrix does not have the spectral shape an algorithm requires."""


@dataclass(frozen=True)
class LinearizationMatrix:
    """Hamiltonian matrix of H at a fixed point in the (x1, y1, x2, y2) basis.

    ``A = Omega^{-1} Hess(H)`` with ``Omega`` the matrix of the symplectic form.
    """

    A: np.ndarray
    omega: np.ndarray
    fixed_point: FixedPoint

    def symplectic_defect(self) -> float:
        """max |Omega A - (Omega A)^T|, zero for an infinitesimally symplectic A."""
        OA = self.omega @ self.A
        return float(np.max(np.abs(OA - OA.T)))


@dataclass(frozen=True)
class EigenClassification:
    kind: EigenClass
    eigenvalues: np.ndarray
    pencil_shift: float = 0.0

    def to_dict(self) -> dict:
        return {
            "class": self.kind.value,
            "eigenvalues": [[float(z.real), float(z.imag)] for z in _sorted_eigs(self.eigenvalues)],
            "pencil_shift": self.pencil_shift,
        }


@dataclass(frozen=True)
class Thresholds:
    """Hopf thresholds at m0 or m2.

    ``t4_plus``/``t4_minus`` carry the sign in front of ``2 t3 sqrt(R1 R2)``; for
    t3 < 0 this makes ``t4_plus < t4_minus``.  ``lower``/``upper`` give the
    ordered focus-focus window.
    """

    fixed_point: FixedPoint
    t4_minus: float
    t4_plus: float
    bullet_verbatim: bool
    bullet_abs: bool
    h_degenerate_t4: float | None

    @property
    def lower(self):
        return min(self.t4_minus, self.t4_plus)

    @property
    def upper(self):
        return max(self.t4_minus, self.t4_plus)

    def at(self, side) -> float:
        return self.t4_plus if Side(side) is Side.plus else self.t4_minus

    def to_dict(self) -> dict:
        return {
            "fixed_point": self.fixed_point.value,
            "t4_minus": float(self.t4_minus),
            "t4_plus": float(self.t4_plus),
            "lower": float(self.lower),
            "upper": float(self.upper),
            "window_condition_verbatim": self.bullet_verbatim,
            "window_condition_abs": self.bullet_abs,
            "h_degenerate_t4": None if self.h_degenerate_t4 is None else float(self.h_degenerate_t4),
        }


@dataclass(frozen=True)
class BCDecomposition:
    alpha: float
    S_part: np.ndarray
    N_part: np.ndarray
    beta: float = float("nan")
    P: np.ndarray | None = None
    A_hat: np.ndarray | None = None
    pairings: np.ndarray | None = None
    epsilon: int = 1


@dataclass(frozen=True)
class Unfolding:
    """nu1, nu2 as functions of t4 near the threshold ``t4_star``."""

    nu1: Callable[[float], float]
    nu2: Callable[[float], float]
    dnu2_dt4_at_threshold: float
    rho: float
    sigma_sign: int
    t4_star: float
    side: Side
    fixed_point: FixedPoint
    branch: tuple = field(default=(1, 1))

    def to_dict(self) -> dict:
        return {
            "fixed_point": self.fixed_point.value,
            "side": self.side.value,
            "t4_star": float(self.t4_star),
            "rho": float(self.rho),
            "sigma": self.sigma_sign,
            "dnu2_dt4_at_threshold": float(self.dnu2_dt4_at_threshold),
            "nu1_at_threshold": float(self.nu1(self.t4_star)),
            "nu2_at_threshold": float(self.nu2(self.t4_star)),
        }


def _sorted_eigs(ev):
    ev = np.asarray(ev, dtype=complex)
    return sorted(ev.tolist(), key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def omega_matrix(params: ModelParams, fp: FixedPoint) -> np.ndarray:
    """Symplectic form R1 dx1^dy1/z1 + R2 dx2^dy2/z2 at the fixed point."""
    e1, e2 = FixedPoint(fp).signs
    p = params.as_float()
    O = np.zeros((4, 4))
    O[:2, :2] = e1 * p.R1 * J2
    O[2:, 2:] = e2 * p.R2 * J2
    return O


def hessian_H(params: ModelParams, fp: FixedPoint) -> np.ndarray:
    """Hessian of H in the chart z_i = eps_i sqrt(1 - x_i^2 - y_i^2)."""
    e1, e2 = FixedPoint(fp).signs
    p = params.as_float()
    c1 = 2 * p.t0 * (e1 + e2) + p.w * p.t1 + e2 * p.t4
    c2 = 2 * p.t0 * (e1 + e2) + p.w * p.t2 + e1 * p.t4
    Hs = np.diag([-e1 * c1, -e1 * c1, -e2 * c2, -e2 * c2])
    Hs[0, 2] = Hs[2, 0] = Hs[1, 3] = Hs[3, 1] = p.t3
    return Hs


def hessian_J(params: ModelParams, fp: FixedPoint) -> np.ndarray:
    e1, e2 = FixedPoint(fp).signs
    p = params.as_float()
    return np.diag([-e1 * p.R1, -e1 * p.R1, -e2 * p.R2, -e2 * p.R2])


def linearize_at(params: ModelParams, fp: FixedPoint) -> LinearizationMatrix:
    fp = FixedPoint(fp)
    O = omega_matrix(params, fp)
    return LinearizationMatrix(np.linalg.solve(O, hessian_H(params, fp)), O, fp)


def linearize_J(params: ModelParams, fp: FixedPoint) -> np.ndarray:
    """Linearisation of X_J; equals diag(J2, J2) at every fixed point."""
    O = omega_matrix(params, fp)
    return np.linalg.solve(O, hessian_J(params, fp))


def char_poly(A: np.ndarray) -> tuple[float, float]:
    """(a, b) with det(lambda - A) = lambda^4 + a lambda^2 + b for Hamiltonian A."""
    return float(-0.5 * np.trace(A @ A)), float(np.linalg.det(A))


def _classify_matrix(A: np.ndarray, tol: float) -> EigenClass:
    a, b = char_poly(A)
    scale = max(abs(a), math.sqrt(abs(b)), 1e-300)
    disc = a * a - 4 * b
    if abs(b) <= tol * scale * scale or abs(disc) <= tol * scale * scale:
        return EigenClass.DegenerateCollision
    if disc < 0:
        return EigenClass.FocusFocus
    r = math.sqrt(disc)
    mus = ((-a + r) / 2, (-a - r) / 2)      # mu = lambda^2
    n_ell = sum(m < 0 for m in mus)
    if n_ell == 2:
        return EigenClass.EllipticElliptic
    if n_ell == 1:
        return EigenClass.EllipticHyperbolic
    return EigenClass.HyperbolicHyperbolic


def classify(params: ModelParams, fp: FixedPoint, tol: float = CLASS_TOL) -> EigenClassification:
    """Linear type of the rank-0 point for the pair (J, H).

    The spectrum of A_H decides the type unless it is repeated.  A repeated
    spectrum can be an accident of H alone (for example a real double pair
    inside the focus-focus window), so A_H + k A_J is tried for a few generic
    k; only a collision that persists along the whole pencil is reported as
    degenerate.
    """
    lin = linearize_at(params, fp)
    AJ = linearize_J(params, fp)
    ev = np.linalg.eigvals(lin.A)
    scale = max(1.0, float(np.max(np.abs(lin.A))))
    for k in _PENCIL_SHIFTS:
        kind = _classify_matrix(lin.A + k * scale * AJ, tol)
        if kind is not EigenClass.DegenerateCollision:
            return EigenClassification(kind, ev, k * scale)
    return EigenClassification(EigenClass.DegenerateCollision, ev, 0.0)


def _sqrt_R1R2(params: ModelParams):
    if params.is_exact and exact.is_rational_square(Fraction(params.R1) * Fraction(params.R2)):
        return exact.exact_sqrt(Fraction(params.R1) * Fraction(params.R2))
    return math.sqrt(float(params.R1) * float(params.R2))


def _m0_thresholds(p: ModelParams):
    s = _sqrt_R1R2(p)
    if not isinstance(s, Fraction):
        p = p.as_float()
    base = p.w * (p.t1 * p.R2 - p.t2 * p.R1)
    return (base - 2 * p.t3 * s) / (p.R1 + p.R2), (base + 2 * p.t3 * s) / (p.R1 + p.R2)


def thresholds(params: ModelParams, fp: FixedPoint) -> Thresholds:
    """t4 values where the eigenvalues at m0 or m2 collide on the imaginary axis.

    t4,m0+- = (w (t1 R2 - t2 R1) +- 2 t3 sqrt(R1 R2)) / (R1 + R2); m2 is m0 of the
    sphere-swapped system.  Exact when the parameters are rational and R1 R2 is a
    rational square.
    """
    fp = FixedPoint(fp)
    params.require_t3_nonzero()
    if fp not in (FixedPoint.m0, FixedPoint.m2):
        raise DomainError(f"no Hopf thresholds at {fp.value}")
    p = params if fp is FixedPoint.m0 else params.swapped()
    lo, hi = _m0_thresholds(p)
    pf = p.as_float()
    s = math.sqrt(pf.R1 * pf.R2)
    lhs = (pf.R1 - pf.R2) * pf.t3
    rhs = abs(pf.w * (pf.t1 + pf.t2) * s)
    if pf.R1 == pf.R2:
        verbatim = pf.w != 0 and pf.t1 + pf.t2 != 0
        h_deg = None if verbatim else (float(lo) + float(hi)) / 2
    else:
        verbatim = lhs > rhs
        h_deg = -pf.w * (pf.t1 * pf.R2 + pf.t2 * pf.R1) / (pf.R1 - pf.R2)
        if not (min(lo, hi) < h_deg < max(lo, hi)):
            h_deg = None
    return Thresholds(fp, lo, hi, bool(verbatim), bool(abs(lhs) > rhs), h_deg)


def alpha_at(params: ModelParams, fp: FixedPoint = FixedPoint.m0) -> float:
    """Rotation rate c(t4) = ((w t1 - t4) R2 + (w t2 + t4) R1) / (2 R1 R2) at m0 (or swapped m2)."""
    p = (params if FixedPoint(fp) is FixedPoint.m0 else params.swapped()).as_float()
    return ((p.w * p.t1 - p.t4) * p.R2 + (p.w * p.t2 + p.t4) * p.R1) / (2 * p.R1 * p.R2)


def alpha_printed(params: ModelParams) -> float:
    """alpha = (w(t1+t2) sqrt(R1R2) + t3 (R1 - R2)) / (sqrt(R1R2)(R1+R2)), valid at t4 = t4,m0+."""
    p = params.as_float()
    s = math.sqrt(p.R1 * p.R2)
    return (p.w * (p.t1 + p.t2) * s + p.t3 * (p.R1 - p.R2)) / (s * (p.R1 + p.R2))


def jordan_chevalley(A: np.ndarray, alpha: float, tol: float = 1e-8):
    """Semisimple and nilpotent parts of A with char poly (lambda^2 + alpha^2)^2.

    S = A (1 + 2 q(A) / (4 alpha^2)) with q(A) = A^2 + alpha^2, the m = 2 case of
    the general nilpotent-correction series (q(A)^2 = 0).
    """
    A = np.asarray(A, dtype=float)
    a, b = char_poly(A)
    a2 = alpha * alpha
    dist = max(abs(a - 2 * a2), abs(b - a2 * a2) / max(a2, 1e-300))
    if alpha == 0 or dist > tol * max(1.0, a2):
        raise PreconditionError(
            f"characteristic polynomial is not (l^2 + alpha^2)^2 (distance {dist:.3e})")
    q = A @ A + a2 * np.eye(4)
    S = A @ (np.eye(4) + 2 * q / (4 * a2))
    return S, A - S


def beta_of(params: ModelParams) -> float:
    p = params.as_float()
    return 0.5 * (p.R1 * p.R2 * p.t3 ** 2) ** -0.25


def _omega(O, u, v) -> float:
    return float(u @ O @ v)


def symplectic_basis(params: ModelParams, fp: FixedPoint = FixedPoint.m0, side=Side.plus) -> BCDecomposition:
    """Semisimple-nilpotent decomposition and symplectic basis at a threshold.

    The parameters are evaluated at the requested threshold.  The basis starts from
    e = beta (sqrt R2, 0, sqrt R1, 0); if that vector pairs trivially with N e,
    coordinate vectors are tried in turn, as the general algorithm allows.
    ``epsilon`` = sign omega(e, N e) is the sigma of the linear normal form: +1 at
    t4+ for t3 > 0 and at t4- for t3 < 0, -1 otherwise.
    """
    fp = FixedPoint(fp)
    side = Side(side)
    params.require_t3_nonzero()
    if fp is FixedPoint.m2:
        sw = symplectic_basis(params.swapped(), FixedPoint.m0, side)
        perm = np.zeros((4, 4))
        perm[[0, 1, 2, 3], [2, 3, 0, 1]] = 1.0
        P = perm @ sw.P
        return BCDecomposition(sw.alpha, perm @ sw.S_part @ perm.T, perm @ sw.N_part @ perm.T,
                               sw.beta, P, sw.A_hat, sw.pairings, sw.epsilon)
    th = thresholds(params, fp)
    p = params.with_t4(th.at(side)).as_float()
    lin = linearize_at(p, fp)
    A, O = lin.A, lin.omega
    alpha = alpha_at(p, fp)
    S, N = jordan_chevalley(A, alpha)
    beta = beta_of(p)
    candidates = [beta * np.array([math.sqrt(p.R2), 0.0, math.sqrt(p.R1), 0.0])]
    candidates += [np.eye(4)[k] for k in range(4)]
    for e in candidates:
        pair = _omega(O, e, N @ e)
        if abs(pair) > 1e-12:
            break
    else:
        raise PreconditionError("no vector with omega(e, N e) != 0")
    eps = 1 if pair > 0 else -1
    e = e / math.sqrt(abs(pair))
    f = e + (eps / (2 * alpha ** 2)) * _omega(O, e, S @ e) * (N @ S @ e)
    # For eps = -1 (opposite Krein sign) the nilpotent columns are flipped so the
    # basis stays symplectic; the 1's of the template then become -1's.
    P = np.column_stack([f, S @ f / alpha, eps * (N @ f), eps * (S @ N @ f) / alpha])
    A_hat = np.linalg.solve(P, A @ P)
    pairings = P.T @ O @ P
    return BCDecomposition(alpha, S, N, beta, P, A_hat, pairings, eps)


def a_hat_template(alpha: float, sigma: int = 1) -> np.ndarray:
    return np.array([[0, -alpha, 0, 0], [alpha, 0, 0, 0], [sigma, 0, 0, -alpha], [0, sigma, alpha, 0]], dtype=float)


def q_matrix(params: ModelParams) -> np.ndarray:
    """Linear change (q1, q2, p1, p2) -> (x1, y1, x2, y2) at m0 with Q^T Omega Q = Omega_0."""
    p = params.as_float()
    a, b = 1 / math.sqrt(2 * p.R1), 1 / math.sqrt(2 * p.R2)
    return np.array([[a, 0, 0, a], [0, -a, a, 0], [-b, 0, 0, b], [0, b, b, 0]])


def _nu_branches(params: ModelParams, fp: FixedPoint):
    def coeffs(t4):
        return char_poly(linearize_at(params.with_t4(t4), fp).A)

    def make(sb, sc):
        def c_sq(t4):
            a, b = coeffs(t4)
            return (sb * math.sqrt(max(b, 0.0)) + a / 2) / 2

        def nu2(t4):
            a, b = coeffs(t4)
            return (sb * math.sqrt(max(b, 0.0)) - a / 2) / 2

        def c(t4):
            v = c_sq(t4)
            return sc * math.sqrt(v) if v >= 0 else float("nan")

        return c, nu2

    return {(sb, sc): make(sb, sc) for sb in (1, -1) for sc in (1, -1)}


def unfolding(params: ModelParams, fp: FixedPoint = FixedPoint.m0, side=Side.plus) -> Unfolding:
    """nu1, nu2 by matching char polys of A(t4) and the unfolded normal form.

    The unfolded matrix with rho = alpha, sigma = 1 has char poly
    l^4 + 2(c^2 - nu2) l^2 + (c^2 + nu2)^2 with c = alpha + nu1.  Of the four
    solutions the one with the smallest |nu1| + |nu2| at the threshold is kept.
    """
    fp = FixedPoint(fp)
    side = Side(side)
    params.require_t3_nonzero()
    th = thresholds(params, fp)
    t4s = float(th.at(side))
    alpha = alpha_at(params.with_t4(t4s), fp)
    best = None
    for key, (c, nu2) in _nu_branches(params, fp).items():
        cv = c(t4s)
        if math.isnan(cv):
            continue
        score = abs(cv - alpha) + abs(nu2(t4s))
        if best is None or score < best[0]:
            best = (score, key, c, nu2)
    if best is None or best[0] > 1e-6 * max(1.0, abs(alpha)):
        raise PreconditionError("no solution branch vanishes at the threshold")
    _, key, c, nu2 = best
    sb = key[0]
    p = params.with_t4(t4s)
    A = linearize_at(p, fp).A
    A1 = linearize_at(params.with_t4(t4s + 1.0), fp).A - A
    a, b = char_poly(A)
    da = -float(np.trace(A @ A1))
    db = b * float(np.trace(np.linalg.solve(A, A1)))
    dnu2 = (sb * db / (2 * math.sqrt(b)) - da / 2) / 2

    def nu1(t4, c=c):
        return c(t4) - alpha

    return Unfolding(nu1, nu2, dnu2, alpha, 1, t4s, side, fp, key)


def dnu2_printed(params: ModelParams) -> float:
    """-t3 (R1 + R2) / (R1 R2)^{3/2}."""
    p = params.as_float()
    return -p.t3 * (p.R1 + p.R2) / (p.R1 * p.R2) ** 1.5


def nu_printed(params: ModelParams, squared: bool = True) -> tuple[float, float]:
    """Printed closed forms of nu1, nu2 at m0; ``squared=False`` keeps the (w t2 + t4) R1^2 term as printed."""
    p = params.as_float()
    s = math.sqrt(p.R1 * p.R2)
    alpha = alpha_printed(p)
    u, v = p.w * p.t1 - p.t4, p.w * p.t2 + p.t4
    nu1 = -alpha + (u * p.R2 + v * p.R1) / (2 * p.R1 * p.R2)
    vv = v * v if squared else v
    nu2 = -(u * u * p.R2 ** 2 + vv * p.R1 ** 2 - 2 * p.R1 * p.R2 * (u * v + 2 * p.t3 ** 2)) / (4 * s ** 4)
    return nu1, nu2


def t3_zero_degenerate_lines(params: ModelParams) -> tuple[float, float] | None:
    """t4 values where m1 and m3 are degenerate when t3 = 0 (None if R1 = R2)."""
    p = params.as_float()
    if p.R1 == p.R2:
        return None
    d = 2 * (p.R2 * p.t1 - p.R1 * p.t2) / (p.R1 - p.R2)
    return -4 * p.t0 - d, -4 * p.t0 + d
