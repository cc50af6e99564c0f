"""Images of the momentum map (J, H).

The critical set of rank 1 lies in sigma = 0.  It is parametrised by the
torus angles (theta1, theta2) with z_i = cos(theta_i) and
x1 x2 + y1 y2 = sin(theta1) sin(theta2); theta1 in (0, pi) and the sign of
sin(theta2) is the branch of the square root in the invariants relation.
Curves are zero contours of the Jacobian determinant of (J, H) in these
angles, typed by the sign of the reduced Hessian.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from math import comb

import contourpy
import numpy as np
from scipy import optimize

from .linear import EigenClass, classify, thresholds
from .model import DomainError, FixedPoint, ModelParams
from .normal_form import Verdict, classify_criticality

ROOT_SUBINTERVALS = 400
ROOT_TOL = 1e-12
DEDUP_TOL = 1e-9
CUSP_TOL = 1e-9
EVENT_TOL = 1e-8
TRACE_GRID = 512


class PointType(str, Enum):
    EllipticRegular = "elliptic-regular"
    HyperbolicRegular = "hyperbolic-regular"
    Cusp = "cusp"
    RankZero = "rank-zero"


class EventKind(str, Enum):
    HopfSuper = "hopf-super"
    HopfSub = "hopf-sub"
    HopfDegenerate = "hopf-degenerate"
    CuspBirthDeath = "cusp-birth-death"
    CuspCollision = "cusp-collision"
    PleatSplit = "pleat-split"


@dataclass(frozen=True)
class ReducedCriticalPoint:
    j: float
    K: float
    branch: int
    H: float
    type: PointType


@dataclass(frozen=True)
class BifurcationEvent:
    t4: float
    j: float
    K: float
    H: float
    kind: EventKind
    branch: int = 0
    confirmed: bool = True
    residual: float = 0.0

    def to_dict(self) -> dict:
        return {"t4": self.t4, "j": self.j, "K": self.K, "H": self.H, "kind": self.kind.value,
                "branch": self.branch, "confirmed": self.confirmed, "residual": self.residual}


@dataclass(frozen=True)
class Curve:
    """A typed polyline of critical values; ``theta`` keeps the torus angles."""

    type: PointType
    branch: int
    points: np.ndarray
    theta: np.ndarray

    def to_dict(self) -> dict:
        return {"type": self.type.value, "branch": self.branch, "points": self.points.tolist()}


@dataclass(frozen=True)
class Marker:
    kind: str
    J: float
    H: float
    label: str = ""

    def to_dict(self) -> dict:
        return {"kind": self.kind, "J": self.J, "H": self.H, "label": self.label}


@dataclass
class Occupancy:
    """Reachable cells of the (J, H) plane; rows are H (bottom to top), columns J."""

    counts: np.ndarray
    multiplicity: np.ndarray
    J_range: tuple
    H_range: tuple

    @property
    def bitmap(self) -> np.ndarray:
        return self.counts > 0

    @property
    def shape(self):
        return self.counts.shape

    def cell_of(self, J, H):
        nH, nJ = self.counts.shape
        (J0, J1), (H0, H1) = self.J_range, self.H_range
        col = np.floor((np.asarray(J) - J0) / (J1 - J0) * nJ).astype(int)
        row = np.floor((np.asarray(H) - H0) / (H1 - H0) * nH).astype(int)
        return np.clip(row, 0, nH - 1), np.clip(col, 0, nJ - 1)

    def contains(self, J, H, slack: int = 1) -> np.ndarray:
        """True where (J, H) lies in an occupied cell or within ``slack`` cells of one."""
        rows, cols = self.cell_of(J, H)
        occ = self.bitmap
        if slack:
            pad = np.pad(occ, slack)
            grown = np.zeros_like(occ)
            for dr in range(-slack, slack + 1):
                for dc in range(-slack, slack + 1):
                    grown |= pad[slack + dr: slack + dr + occ.shape[0], slack + dc: slack + dc + occ.shape[1]]
            occ = grown
        return occ[rows, cols]


@dataclass
class FigureData:
    params: ModelParams
    t4: float
    occupancy: Occupancy | None = None
    curves: list = field(default_factory=list)
    cusps: list = field(default_factory=list)
    rank0: list = field(default_factory=list)
    events: list = field(default_factory=list)

    def count(self, ptype: PointType) -> int:
        return sum(c.type is ptype for c in self.curves)


# ----------------------------------------------------------------------
# reduced Hamiltonian in (j, K)
# ----------------------------------------------------------------------

def k_interval(params: ModelParams, j: float) -> tuple[float, float]:
    """Admissible K for a given j (both |z1| <= 1 and |z2| <= 1)."""
    p = params.as_float()
    lo = max(-2 * p.R1 - j, j - 2 * p.R2)
    hi = min(2 * p.R1 - j, j + 2 * p.R2)
    return lo, hi


def _z(params, j, K):
    return (j + K) / (2 * params.R1), (j - K) / (2 * params.R2)


def _sqrt_derivs(z, order):
    """a(z) = sqrt(1 - z^2) and its derivatives up to ``order`` (<= 4)."""
    a = np.sqrt(np.maximum(1 - z * z, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        out = [a, -z / a, -1 / a ** 3, -3 * z / a ** 5, -3 * (1 + 4 * z * z) / a ** 7]
    return out[: order + 1]


def z_partials(params: ModelParams, z1, z2, branch, order: int = 3) -> dict:
    """Partial derivatives d^m/dz1^m d^n/dz2^n of the branch Hamiltonian, m + n <= order."""
    p = params.as_float()
    z1 = np.asarray(z1, dtype=float)
    z2 = np.asarray(z2, dtype=float)
    a1, a2 = _sqrt_derivs(z1, order), _sqrt_derivs(z2, order)
    s = z1 + z2
    poly = {
        (0, 0): p.t0 * s * s + p.w * (p.t1 * z1 + p.t2 * z2) + p.t4 * z1 * z2,
        (1, 0): 2 * p.t0 * s + p.w * p.t1 + p.t4 * z2,
        (0, 1): 2 * p.t0 * s + p.w * p.t2 + p.t4 * z1,
        (2, 0): 2 * p.t0 + 0 * s, (0, 2): 2 * p.t0 + 0 * s, (1, 1): 2 * p.t0 + p.t4 + 0 * s,
    }
    out = {}
    with np.errstate(invalid="ignore", over="ignore"):  # inf * 0 at the poles
        for m in range(order + 1):
            for n in range(order + 1 - m):
                out[(m, n)] = poly.get((m, n), 0.0 * s) + branch * p.t3 * a1[m] * a2[n]
    return out


def jk_derivative(params: ModelParams, zp: dict, k: int, l: int):
    """d^k/dK^k d^l/dj^l from z-partials, with dz1 = (dj + dK)/(2R1), dz2 = (dj - dK)/(2R2)."""
    p = params.as_float()
    al, be = 1 / (2 * p.R1), 1 / (2 * p.R2)
    out = 0.0
    with np.errstate(invalid="ignore", over="ignore"):
        for i in range(k + 1):
            for m in range(l + 1):
                c = comb(k, i) * comb(l, m) * al ** (i + m) * (-be) ** (k - i) * be ** (l - m)
                out = out + c * zp[(i + m, k - i + l - m)]
    return out


def _check_K(params, j, K):
    lo, hi = k_interval(params, j)
    if not (lo - 1e-12 <= K <= hi + 1e-12):
        raise DomainError(f"K = {K} outside the admissible interval [{lo}, {hi}] for j = {j}")


def reduced_hamiltonian(params: ModelParams, j: float, K: float, branch: int) -> float:
    """H with xi = z1 z2 + branch sqrt((1 - z1^2)(1 - z2^2)) on sigma = 0."""
    _check_K(params, j, K)
    z1, z2 = _z(params.as_float(), j, K)
    return float(z_partials(params, z1, z2, branch, 0)[(0, 0)])


def criticality_function(params: ModelParams, t4: float, j: float, K: float, branch: int) -> float:
    """dH/dK at fixed j along the sigma = 0 branch (infinite at the interval ends)."""
    p = params.with_t4(t4)
    _check_K(p, j, K)
    z1, z2 = _z(p.as_float(), j, K)
    return float(jk_derivative(p, z_partials(p, z1, z2, branch, 1), 1, 0))


def reduced_hessian(params: ModelParams, t4: float, j: float, K: float, branch: int) -> tuple[float, float]:
    """(H_KK, H_sigma_sigma) at a sigma = 0 point; H_sigma_sigma = -t3 / (branch sqrt(P))."""
    p = params.with_t4(t4)
    z1, z2 = _z(p.as_float(), j, K)
    hkk = float(jk_derivative(p, z_partials(p, z1, z2, branch, 2), 2, 0))
    g = math.sqrt(max((1 - z1 * z1) * (1 - z2 * z2), 0.0))
    hss = -float(p.t3) / (branch * g) if g > 0 else math.inf
    return hkk, hss


def _type_from_det(det: float) -> PointType:
    if abs(det) <= CUSP_TOL:
        return PointType.Cusp
    return PointType.EllipticRegular if det > 0 else PointType.HyperbolicRegular


def critical_points(params: ModelParams, t4: float, j: float) -> list[ReducedCriticalPoint]:
    """All sigma = 0 critical points of the reduced system at (t4, j).

    Roots of dH/dK on each branch by a sign-change scan over 400 subintervals
    and bisection, typed by the sign of det Hess = H_KK H_sigma_sigma.
    """
    params.require_t3_nonzero()
    p = params.with_t4(t4).as_float()
    lo, hi = k_interval(p, j)
    out = []
    if hi - lo > 1e-12:
        edges = np.linspace(lo, hi, ROOT_SUBINTERVALS + 1)
        inner = edges.copy()
        span = hi - lo
        inner[0], inner[-1] = lo + 1e-9 * span, hi - 1e-9 * span
        for b in (1, -1):
            def F(K, b=b):
                z1, z2 = _z(p, j, K)
                return float(jk_derivative(p, z_partials(p, z1, z2, b, 1), 1, 0))

            vals = np.array([F(K) for K in inner])
            roots = []
            for k in range(ROOT_SUBINTERVALS):
                fa, fb = vals[k], vals[k + 1]
                if not (np.isfinite(fa) and np.isfinite(fb)):
                    continue
                if fa == 0:
                    roots.append(inner[k])
                elif fa * fb < 0:
                    roots.append(optimize.brentq(F, inner[k], inner[k + 1], xtol=ROOT_TOL, rtol=4 * np.finfo(float).eps))
            if vals[-1] == 0:
                roots.append(inner[-1])
            # tangential (double) roots: extrema of F where F itself vanishes
            def FK(K, b=b):
                z1, z2 = _z(p, j, K)
                return float(jk_derivative(p, z_partials(p, z1, z2, b, 2), 2, 0))

            dvals = np.array([FK(K) for K in inner])
            for k in range(ROOT_SUBINTERVALS):
                da, db = dvals[k], dvals[k + 1]
                if np.isfinite(da) and np.isfinite(db) and da * db < 0:
                    K = optimize.brentq(FK, inner[k], inner[k + 1], xtol=ROOT_TOL, rtol=4 * np.finfo(float).eps)
                    if abs(F(K)) <= CUSP_TOL:
                        roots.append(K)
            for K in roots:
                if any(abs(K - r.K) < DEDUP_TOL and r.branch == b for r in out):
                    continue
                hkk, hss = reduced_hessian(p, t4, j, K, b)
                out.append(ReducedCriticalPoint(j, float(K), b, reduced_hamiltonian(p, j, K, b),
                                                _type_from_det(hkk * hss)))
    for fp in FixedPoint:
        s1, s2 = fp.signs
        if abs(p.R1 * s1 + p.R2 * s2 - j) < DEDUP_TOL:
            K = p.R1 * s1 - p.R2 * s2
            H = p.t0 * (s1 + s2) ** 2 + p.w * (p.t1 * s1 + p.t2 * s2) + p.t4 * s1 * s2
            out.append(ReducedCriticalPoint(j, float(K), 0, float(H), PointType.RankZero))
    return out


# printed displays for R1 = 1, R2 = 2, w = 0, t0 = -1/2, t3 = 1/2 -------------

def printed_f(j, K, sigma=0.0):
    return (64 + j ** 4 - 24 * j * K - 20 * K ** 2 + K ** 4 - 2 * j ** 2 * (10 + K ** 2) - 64 * sigma ** 2) ** -0.5


def printed_F(t4, j, K, sign, sigma=0.0):
    return 1.5 * j + 2 * (t4 + 0.25) * K + sign * 0.25 * printed_f(j, K, sigma) * (24 * j + 40 * K + 4 * j * j * K - 4 * K ** 3)


def printed_G(t4, j, K):
    f = printed_f(j, K)
    return (f ** 3 / 4 * (6 * j + 10 * K + j * j * K - K ** 3) ** 2
            + f * (1.25 + j * j / 8 - 3 * K * K / 8) - t4 / 4 - 1 / 16)


# ----------------------------------------------------------------------
# torus parametrisation
# ----------------------------------------------------------------------

def _torus(p: ModelParams, th1, th2):
    """J, H, first and second derivatives in (theta1, theta2)."""
    c1, s1, c2, s2 = np.cos(th1), np.sin(th1), np.cos(th2), np.sin(th2)
    u1 = 2 * p.t0 * (c1 + c2) + p.w * p.t1 + p.t4 * c2
    u2 = 2 * p.t0 * (c1 + c2) + p.w * p.t2 + p.t4 * c1
    J = p.R1 * c1 + p.R2 * c2
    H = p.t0 * (c1 + c2) ** 2 + p.w * (p.t1 * c1 + p.t2 * c2) + p.t4 * c1 * c2 + p.t3 * s1 * s2
    H1 = -s1 * u1 + p.t3 * c1 * s2
    H2 = -s2 * u2 + p.t3 * s1 * c2
    H11 = -c1 * u1 + 2 * p.t0 * s1 * s1 - p.t3 * s1 * s2
    H22 = -c2 * u2 + 2 * p.t0 * s2 * s2 - p.t3 * s1 * s2
    H12 = s1 * s2 * (2 * p.t0 + p.t4) + p.t3 * c1 * c2
    J1, J2, J11, J22 = -p.R1 * s1, -p.R2 * s2, -p.R1 * c1, -p.R2 * c2
    return dict(J=J, H=H, H1=H1, H2=H2, H11=H11, H22=H22, H12=H12, J1=J1, J2=J2, J11=J11, J22=J22, s=s1 * s2)


def _C_and_grad(d):
    C = d["H1"] * d["J2"] - d["H2"] * d["J1"]
    C1 = d["H11"] * d["J2"] - d["H12"] * d["J1"] - d["H2"] * d["J11"]
    C2 = d["H12"] * d["J2"] + d["H1"] * d["J22"] - d["H22"] * d["J1"]
    return C, C1, C2


def _type_value(p: ModelParams, d) -> np.ndarray:
    """Positive on elliptic-regular points, negative on hyperbolic-regular ones."""
    gJ2 = d["J1"] ** 2 + d["J2"] ** 2
    lam = (d["H1"] * d["J1"] + d["H2"] * d["J2"]) / gJ2
    a, b = -d["J2"], d["J1"]
    Q = (a * a * (d["H11"] - lam * d["J11"]) + 2 * a * b * d["H12"] + b * b * (d["H22"] - lam * d["J22"]))
    return -Q * p.t3 * d["s"]


def _project(p, th, iters=4):
    th = np.array(th, dtype=float)
    for _ in range(iters):
        d = _torus(p, th[..., 0], th[..., 1])
        C, C1, C2 = _C_and_grad(d)
        g2 = C1 * C1 + C2 * C2
        step = np.where(g2 > 0, C / np.where(g2 > 0, g2, 1.0), 0.0)
        th = th - np.stack([step * C1, step * C2], axis=-1)
    return th


def _split_typed(p, th, branch, corner_tol):
    """Split one projected polyline at sign changes of the type value.

    Vertices within ``corner_tol`` of a rank-0 corner are not typed: the angle
    parametrisation degenerates there and the type value changes sign spuriously.
    """
    with np.errstate(divide="ignore", invalid="ignore"):
        tv = _type_value(p, _torus(p, th[:, 0], th[:, 1]))
    tv = np.where(_near_corner(th, corner_tol), np.nan, tv)
    pieces, cusps = [], []
    cur = [th[0]]
    for k in range(len(th) - 1):
        if np.isfinite(tv[k]) and np.isfinite(tv[k + 1]) and tv[k] * tv[k + 1] < 0:
            lo, hi, flo = 0.0, 1.0, tv[k]
            for _ in range(60):
                mid = (lo + hi) / 2
                pt = _project(p, th[k] + mid * (th[k + 1] - th[k]))
                fm = _type_value(p, _torus(p, pt[0], pt[1]))
                if fm * flo > 0:
                    lo, flo = mid, fm
                else:
                    hi = mid
            cusp = _project(p, th[k] + 0.5 * (lo + hi) * (th[k + 1] - th[k]))
            cur.append(cusp)
            pieces.append((np.array(cur), tv[k]))
            cusps.append(cusp)
            cur = [cusp]
        cur.append(th[k + 1])
    fin = tv[np.isfinite(tv)]
    pieces.append((np.array(cur), fin[-1] if len(fin) else 1.0))
    closed = len(th) > 2 and np.linalg.norm(th[0] - th[-1]) < 1e-9
    if closed and len(pieces) > 1 and pieces[0][1] * pieces[-1][1] > 0:
        # a closed loop starts mid-piece: glue its last piece to its first
        last = pieces.pop()
        pieces[0] = (np.vstack([last[0], pieces[0][0][1:]]), pieces[0][1])
    curves = []
    for arr, sign in pieces:
        if len(arr) < 2:
            continue
        dd = _torus(p, arr[:, 0], arr[:, 1])
        pts = np.column_stack([dd["J"], dd["H"]])
        ptype = PointType.EllipticRegular if sign > 0 else PointType.HyperbolicRegular
        curves.append(Curve(ptype, branch, pts, arr))
    return curves, cusps


def trace_curves(params: ModelParams, t4: float | None = None, grid: int = TRACE_GRID):
    """Critical-value curves of (J, H) and the cusp values on them.

    Returns
    -------
    curves : list of Curve
        Maximal elliptic- or hyperbolic-regular pieces.
    cusps : list of Marker
    """
    p = (params if t4 is None else params.with_t4(t4)).as_float()
    if p.t3 == 0:
        return [], []
    curves, cusp_markers = [], []
    th1 = np.linspace(0.0, math.pi, grid + 1)
    for branch in (1, -1):
        th2 = np.linspace(0.0, branch * math.pi, grid + 1)
        if branch < 0:
            th2 = th2[::-1]
        T1, T2 = np.meshgrid(th1, th2, indexing="xy")
        C, _, _ = _C_and_grad(_torus(p, T1, T2))
        gen = contourpy.contour_generator(th1, th2, C, line_type=contourpy.LineType.Separate)
        for line in gen.lines(0.0):
            if len(line) < 2:
                continue
            th = _project(p, line)
            inside = (th[:, 0] >= -1e-12) & (th[:, 0] <= math.pi + 1e-12) & (branch * th[:, 1] >= -1e-12) & (branch * th[:, 1] <= math.pi + 1e-12)
            th = th[inside]
            if len(th) < 2:
                continue
            # drop the corner artefacts where the parametrisation degenerates
            ds = np.linalg.norm(np.diff(th, axis=0), axis=1).sum()
            if ds < 4 * math.pi / grid and _near_corner(th).all():
                continue
            cs, cu = _split_typed(p, th, branch, 8 * math.pi / grid)
            curves.extend(cs)
            for c in cu:
                d = _torus(p, c[0], c[1])
                cusp_markers.append(Marker("cusp", float(d["J"]), float(d["H"])))
    return curves, cusp_markers


def _near_corner(th, tol=0.05):
    corners = np.array([[0, 0], [0, math.pi], [0, -math.pi], [math.pi, 0], [math.pi, math.pi], [math.pi, -math.pi]])
    dist = np.min(np.linalg.norm(th[:, None, :] - corners[None, :, :], axis=2), axis=1)
    return dist < tol


def rank0_markers(params: ModelParams, t4: float | None = None) -> list[Marker]:
    p = params if t4 is None else params.with_t4(t4)
    out = []
    for fp in FixedPoint:
        s1, s2 = fp.signs
        pf = p.as_float()
        J = pf.R1 * s1 + pf.R2 * s2
        H = pf.t0 * (s1 + s2) ** 2 + pf.w * (pf.t1 * s1 + pf.t2 * s2) + pf.t4 * s1 * s2
        out.append(Marker(classify(p, fp).kind.value, J, H, fp.value))
    return out


# ----------------------------------------------------------------------
# occupancy oracle
# ----------------------------------------------------------------------

def _column_intervals(p: ModelParams, Js: np.ndarray, nz: int):
    """H intervals over (theta1 sample) for each J; returns lo, hi, valid arrays of shape (len(Js), nz)."""
    R1, R2 = p.R1, p.R2
    z1lo = np.maximum(-1.0, (Js - R2) / R1)
    z1hi = np.minimum(1.0, (Js + R2) / R1)
    a_lo, a_hi = np.arccos(np.clip(z1hi, -1, 1)), np.arccos(np.clip(z1lo, -1, 1))
    u = (np.arange(nz) + 0.5) / nz
    th = a_lo[:, None] + (a_hi - a_lo)[:, None] * u[None, :]
    z1 = np.cos(th)
    z2 = (Js[:, None] - R1 * z1) / R2
    valid = np.abs(z2) <= 1.0
    z2 = np.clip(z2, -1.0, 1.0)
    base = p.t0 * (z1 + z2) ** 2 + p.w * (p.t1 * z1 + p.t2 * z2) + p.t4 * z1 * z2
    amp = abs(p.t3) * np.sin(th) * np.sqrt(np.maximum(1 - z2 * z2, 0.0))
    return base - amp, base + amp, valid


def sample_image(params: ModelParams, t4: float | None = None, resolution: int = 512,
                 H_range: tuple | None = None, oversample: int = 3) -> Occupancy:
    """Occupancy bitmap of the momentum-map image on a resolution x resolution grid.

    Each column is sampled at ``oversample`` values of J; for each J and each of
    4 * resolution samples of theta1, H sweeps the interval obtained from
    x1 x2 + y1 y2 = c sqrt((1 - z1^2)(1 - z2^2)), c in [-1, 1].  ``multiplicity``
    counts the connected theta1-runs covering a cell (2 on doubly covered regions).
    """
    if resolution > 4096:
        raise DomainError("resolution must be <= 4096")
    p = (params if t4 is None else params.with_t4(t4)).as_float()
    n = int(resolution)
    J0, J1 = -(p.R1 + p.R2), p.R1 + p.R2
    nz = 4 * n
    sub = (np.arange(oversample) + 0.5) / oversample
    if H_range is None:
        Js = J0 + (J1 - J0) * (np.arange(n)[:, None] + sub[None, :]).ravel() / n
        lo, hi, valid = _column_intervals(p, Js[::max(1, len(Js) // 256)], nz)
        hmin, hmax = float(lo[valid].min()), float(hi[valid].max())
        for fp in FixedPoint:
            s1, s2 = fp.signs
            h = p.t0 * (s1 + s2) ** 2 + p.w * (p.t1 * s1 + p.t2 * s2) + p.t4 * s1 * s2
            hmin, hmax = min(hmin, h), max(hmax, h)
        pad = 0.05 * max(hmax - hmin, 1e-6)
        H_range = (hmin - pad, hmax + pad)
    H0, H1 = H_range
    counts = np.zeros((n, n), dtype=np.int64)
    starts = np.zeros((n + 1, n), dtype=np.int64)
    diff = np.zeros((n + 1, n), dtype=np.int64)
    chunk = max(1, 65536 // nz)
    for c0 in range(0, n, chunk):
        cols = np.arange(c0, min(n, c0 + chunk))
        Js = J0 + (J1 - J0) * (cols[:, None] + sub[None, :]).ravel() / n
        colidx = np.repeat(cols, oversample)
        lo, hi, valid = _column_intervals(p, Js, nz)
        rlo = np.clip(np.floor((lo - H0) / (H1 - H0) * n).astype(np.int64), 0, n - 1)
        rhi = np.clip(np.floor((hi - H0) / (H1 - H0) * n).astype(np.int64), 0, n - 1)
        cc = np.broadcast_to(colidx[:, None], rlo.shape)
        np.add.at(diff, (rlo[valid], cc[valid]), 1)
        np.add.at(diff, (rhi[valid] + 1, cc[valid]), -1)
        # run starts: cells covered by sample i but not by sample i-1
        prev_valid = np.zeros_like(valid)
        prev_valid[:, 1:] = valid[:, :-1]
        plo = np.zeros_like(rlo)
        phi = np.full_like(rhi, -1)
        plo[:, 1:], phi[:, 1:] = rlo[:, :-1], rhi[:, :-1]
        phi = np.where(prev_valid, phi, -1)
        plo = np.where(prev_valid, plo, n + 1)
        a_hi = np.minimum(rhi, plo - 1)
        m1 = valid & (a_hi >= rlo)
        np.add.at(starts, (rlo[m1], cc[m1]), 1)
        np.add.at(starts, (a_hi[m1] + 1, cc[m1]), -1)
        b_lo = np.maximum(rlo, phi + 1)
        m2 = valid & (rhi >= b_lo) & (b_lo > a_hi)
        np.add.at(starts, (b_lo[m2], cc[m2]), 1)
        np.add.at(starts, (rhi[m2] + 1, cc[m2]), -1)
    counts = np.cumsum(diff, axis=0)[:n]
    mult = np.cumsum(starts, axis=0)[:n]
    mult = np.minimum(mult // oversample + (mult % oversample > 0), 255).astype(np.uint8)
    mult[counts == 0] = 0
    return Occupancy(counts, mult, (J0, J1), (float(H0), float(H1)))


# ----------------------------------------------------------------------
# events
# ----------------------------------------------------------------------

def _event_system(params: ModelParams, closure: str):
    """Residual function of (t4, j, K) for a branch: F, F_K and F_KK or F_j."""
    def residual(x, branch):
        t4, j, K = x
        p = params.with_t4(t4)
        z1, z2 = _z(p.as_float(), j, K)
        zp = z_partials(p, z1, z2, branch, 3)
        F = jk_derivative(p, zp, 1, 0)
        FK = jk_derivative(p, zp, 2, 0)
        third = jk_derivative(p, zp, 3, 0) if closure == "KK" else jk_derivative(p, zp, 1, 1)
        return np.array([F, FK, third], dtype=float)
    return residual


def _event_seeds(params: ModelParams, closure: str, branch: int, n: int = 120):
    """Seeds (t4, j, K) from sign changes of the t4-eliminated residuals on a theta grid."""
    p = params.as_float()
    th = (np.arange(n) + 0.5) / n * math.pi
    T1, T2 = np.meshgrid(th, th, indexing="ij")
    z1, z2 = np.cos(T1), np.cos(T2)
    j = p.R1 * z1 + p.R2 * z2
    K = p.R1 * z1 - p.R2 * z2
    zp0 = z_partials(p.with_t4(0.0), z1, z2, branch, 3)
    zp1 = z_partials(p.with_t4(1.0), z1, z2, branch, 3)

    def parts(k, l):
        a = jk_derivative(p, zp0, k, l)
        return a, jk_derivative(p, zp1, k, l) - a

    F0, F4 = parts(1, 0)
    G0, G4 = parts(2, 0)
    X0, X4 = parts(3, 0) if closure == "KK" else parts(1, 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        t4 = np.where(np.abs(F4) > 1e-14, -F0 / F4, -G0 / G4)
    r1 = G0 + t4 * G4
    r2 = X0 + t4 * X4
    seeds = []
    s1, s2 = np.sign(r1), np.sign(r2)
    for a in range(n - 1):
        for b in range(n - 1):
            c1 = s1[a:a + 2, b:b + 2]
            c2 = s2[a:a + 2, b:b + 2]
            if not (np.isfinite(t4[a:a + 2, b:b + 2]).all()):
                continue
            if c1.min() <= 0 <= c1.max() and c2.min() <= 0 <= c2.max():
                seeds.append((float(t4[a:a + 2, b:b + 2].mean()), float(j[a:a + 2, b:b + 2].mean()), float(K[a:a + 2, b:b + 2].mean())))
    # symmetric centre: F and F4 may vanish together there
    for jj, KK in ((0.0, 0.0),):
        z1c, z2c = _z(p, jj, KK)
        if abs(z1c) < 1 and abs(z2c) < 1:
            g0 = jk_derivative(p, z_partials(p.with_t4(0.0), z1c, z2c, branch, 2), 2, 0)
            g1 = jk_derivative(p, z_partials(p.with_t4(1.0), z1c, z2c, branch, 2), 2, 0) - g0
            if abs(g1) > 1e-14:
                seeds.append((float(-g0 / g1), jj, KK))
    return seeds


def _topology(params, t4, grid=256):
    """Numbers of hyperbolic-regular segments and cusps of the traced critical set."""
    curves, cusps = trace_curves(params, t4, grid)
    return sum(c.type is PointType.HyperbolicRegular for c in curves), len(cusps)


def detect_events(params: ModelParams, t4_range: tuple, kinds=None, seed_grid: int = 120,
                  delta: float = 1e-3) -> list[BifurcationEvent]:
    """Hopf, cusp birth/death, cusp collision and pleat split events for t4 in ``t4_range``.

    Cusp births and deaths solve F = F_K = F_KK = 0 and collisions or splits
    solve F = F_K = F_j = 0 in (t4, j, K), where F = dH/dK on a branch.  Each
    root is polished by Newton's method and confirmed by a change in the traced
    topology (hyperbolic segments and cusps) between t4 - 10 delta and t4 + 10 delta.
    """
    params.require_t3_nonzero()
    kinds = set(EventKind) if kinds is None else {EventKind(k) for k in kinds}
    lo, hi = float(t4_range[0]), float(t4_range[1])
    events = []
    hopf = {EventKind.HopfSuper, EventKind.HopfSub, EventKind.HopfDegenerate}
    if kinds & hopf:
        vk = {Verdict.Supercritical: EventKind.HopfSuper, Verdict.Subcritical: EventKind.HopfSub}
        for fp in (FixedPoint.m0, FixedPoint.m2):
            th = thresholds(params, fp)
            for side in ("minus", "plus"):
                t4 = float(th.at(side))
                if not lo <= t4 <= hi:
                    continue
                crit = classify_criticality(params, fp, side)
                kind = vk.get(crit.verdict, EventKind.HopfDegenerate)
                if kind not in kinds:
                    continue
                pf = params.with_t4(t4).as_float()
                s1, s2 = fp.signs
                H = pf.t0 * (s1 + s2) ** 2 + pf.w * (pf.t1 * s1 + pf.t2 * s2) + pf.t4 * s1 * s2
                events.append(BifurcationEvent(t4, pf.R1 * s1 + pf.R2 * s2, pf.R1 * s1 - pf.R2 * s2, H, kind, 0))
    for closure in ("KK", "j"):
        if closure == "KK" and EventKind.CuspBirthDeath not in kinds:
            continue
        if closure == "j" and not kinds & {EventKind.CuspCollision, EventKind.PleatSplit}:
            continue
        residual = _event_system(params, closure)
        found = []
        for branch in (1, -1):
            for seed in _event_seeds(params, closure, branch, seed_grid):
                if not np.isfinite(seed).all():
                    continue
                sol = optimize.root(residual, np.array(seed), args=(branch,), method="hybr", options={"xtol": 1e-14})
                t4, j, K = (float(v) for v in sol.x)
                if not (lo - 1e-9 <= t4 <= hi + 1e-9):
                    continue
                z1, z2 = _z(params.as_float(), j, K)
                if not (abs(z1) < 1 - 1e-9 and abs(z2) < 1 - 1e-9):
                    continue
                res = float(np.max(np.abs(residual(sol.x, branch))))
                if not np.isfinite(res) or res > EVENT_TOL:
                    continue
                if any(abs(t4 - f[0]) < 1e-7 and abs(j - f[1]) < 1e-7 and abs(K - f[2]) < 1e-7 and b == branch
                       for *f, b in found):
                    continue
                found.append((t4, j, K, branch))
        for t4, j, K, branch in sorted(found):
            before = _topology(params, t4 - 10 * delta)
            after = _topology(params, t4 + 10 * delta)
            confirmed = before != after
            H = reduced_hamiltonian(params.with_t4(t4), j, K, branch)
            res = float(np.max(np.abs(_event_system(params, closure)(np.array([t4, j, K]), branch))))
            if closure == "KK":
                kind = EventKind.CuspBirthDeath
            else:
                kind = EventKind.PleatSplit if after[0] > before[0] else EventKind.CuspCollision
            if kind in kinds:
                events.append(BifurcationEvent(t4, j, K, H, kind, branch, confirmed, res))
    events.sort(key=lambda e: (e.t4, e.j, e.K, e.kind.value))
    return events


# ----------------------------------------------------------------------
# figure assembly
# ----------------------------------------------------------------------

def figure_data(params: ModelParams, t4: float | None = None, resolution: int = 512,
                grid: int = TRACE_GRID, occupancy: bool = True) -> FigureData:
    p = params if t4 is None else params.with_t4(t4)
    curves, cusps = trace_curves(p, None, grid)
    occ = sample_image(p, None, resolution) if occupancy else None
    return FigureData(p, float(p.t4), occ, curves, cusps, rank0_markers(p))


def hyperbolic_segments_have_cusp_ends(fig: FigureData, tol: float = 1e-6) -> bool:
    """Every hyperbolic-regular curve ends at cusps or at rank-0 values."""
    ends = [(m.J, m.H) for m in fig.cusps] + [(m.J, m.H) for m in fig.rank0]
    ends = np.array(ends) if ends else np.zeros((0, 2))
    for c in fig.curves:
        if c.type is not PointType.HyperbolicRegular:
            continue
        for pt in (c.points[0], c.points[-1]):
            if len(ends) == 0 or np.min(np.linalg.norm(ends - pt, axis=1)) > tol:
                return False
    return True


def segment_labels(fig: FigureData, tol: float = 1e-6) -> list[str]:
    """Best-effort "flap" or "pleat" label for each hyperbolic-regular curve of ``fig``.

    A flap is bounded by its hyperbolic segment and a single elliptic arc
    joining the same two cusps; a segment whose cusps are not joined by one
    elliptic arc is labelled a pleat.
    """
    ell = [c.points[[0, -1]] for c in fig.curves if c.type is PointType.EllipticRegular]
    labels = []
    for c in fig.curves:
        if c.type is not PointType.HyperbolicRegular:
            continue
        ends = c.points[[0, -1]]
        closed = any(min(np.abs(e - ends).max(), np.abs(e[::-1] - ends).max()) < tol for e in ell)
        labels.append("flap" if closed else "pleat")
    return labels


__all__ = [
    "PointType", "EventKind", "ReducedCriticalPoint", "BifurcationEvent", "Curve", "Marker", "Occupancy",
    "FigureData", "k_interval", "reduced_hamiltonian", "criticality_function", "reduced_hessian",
    "critical_points", "trace_curves", "sample_image", "detect_events", "figure_data", "rank0_markers",
    "printed_f", "printed_F", "printed_G", "EigenClass", "segment_labels", "hyperbolic_segments_have_cusp_ends",
]
