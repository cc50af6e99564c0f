"""The generalized su(2) Gaudin system on S^2 x S^2.

Parameters, phase points, the integrals ``J`` and ``H``, the four rank-0
points, the S^1-invariants (j, K, xi, sigma) and the rational and
trigonometric specialisations of the coupling constants.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction
from numbers import Real

import numpy as np

SPHERE_TOL = 1e-12
RENORMALIZE_TOL = 1e-9

PARAM_KEYS = ("R1", "R2", "w", "t0", "t1", "t2", "t3", "t4")


class DomainError(ValueError):
    """Raised when an input lies outside the domain of an operation."""


@dataclass(frozen=True)
class ModelParams:
    """The eight reals defining one Gaudin system.

    Coefficients may be ``float``, ``int`` or ``fractions.Fraction``; when all
    eight are exact, operations that support rational mode stay exact.
    """

    R1: Real = 1
    R2: Real = 1
    w: Real = 1
    t0: Real = 0
    t1: Real = 0
    t2: Real = 0
    t3: Real = 0
    t4: Real = 0

    def __post_init__(self):
        if not (self.R1 > 0 and self.R2 > 0):
            raise DomainError(f"sphere weights must be positive, got R1={self.R1}, R2={self.R2}")

    def with_t4(self, t4) -> "ModelParams":
        return replace(self, t4=t4)

    def swapped(self) -> "ModelParams":
        """Relabel the spheres; m2 of ``self`` becomes m0 of the result."""
        return replace(self, R1=self.R2, R2=self.R1, t1=self.t2, t2=self.t1)

    def require_t3_nonzero(self):
        if self.t3 == 0:
            raise DomainError("operation requires t3 != 0")

    @property
    def is_exact(self) -> bool:
        return all(isinstance(getattr(self, k), (int, Fraction)) for k in PARAM_KEYS)

    def as_float(self) -> "ModelParams":
        return ModelParams(**{k: float(getattr(self, k)) for k in PARAM_KEYS})

    def as_fraction(self) -> "ModelParams":
        return ModelParams(**{k: Fraction(getattr(self, k)) for k in PARAM_KEYS})

    def to_dict(self) -> dict:
        return {k: float(getattr(self, k)) for k in PARAM_KEYS}

    @classmethod
    def from_dict(cls, doc: dict) -> "ModelParams":
        unknown = set(doc) - set(PARAM_KEYS)
        if unknown:
            raise DomainError(f"unknown parameter keys: {sorted(unknown)}")
        return cls(**{k: doc[k] for k in PARAM_KEYS if k in doc})


@dataclass(frozen=True)
class PhasePoint:
    """A point of S^2 x S^2 given by two unit vectors."""

    x1: float
    y1: float
    z1: float
    x2: float
    y2: float
    z2: float

    def __post_init__(self):
        for v in ((self.x1, self.y1, self.z1), (self.x2, self.y2, self.z2)):
            n2 = sum(float(c) * float(c) for c in v)
            if abs(n2 - 1.0) > RENORMALIZE_TOL:
                raise DomainError(f"not a unit vector: {v} (|v|^2 = {n2})")

    @classmethod
    def normalized(cls, v1, v2) -> "PhasePoint":
        """Build a point, renormalising vectors that are within 1e-9 of the sphere."""
        v1 = np.asarray(v1, dtype=float)
        v2 = np.asarray(v2, dtype=float)
        for v in (v1, v2):
            if abs(v @ v - 1.0) > RENORMALIZE_TOL:
                raise DomainError(f"not a unit vector: {v.tolist()}")
        v1 = v1 / np.linalg.norm(v1)
        v2 = v2 / np.linalg.norm(v2)
        return cls(*v1.tolist(), *v2.tolist())

    @classmethod
    def from_angles(cls, theta1, phi1, theta2, phi2) -> "PhasePoint":
        s1, s2 = math.sin(theta1), math.sin(theta2)
        return cls.normalized(
            (s1 * math.cos(phi1), s1 * math.sin(phi1), math.cos(theta1)),
            (s2 * math.cos(phi2), s2 * math.sin(phi2), math.cos(theta2)),
        )

    def vectors(self) -> tuple[np.ndarray, np.ndarray]:
        return (np.array([self.x1, self.y1, self.z1], dtype=float),
                np.array([self.x2, self.y2, self.z2], dtype=float))

    def on_sphere(self, tol: float = SPHERE_TOL) -> bool:
        u, v = self.vectors()
        return abs(u @ u - 1.0) <= tol and abs(v @ v - 1.0) <= tol


class FixedPoint(str, Enum):
    """The rank-0 points of (J, H); every Gaudin system has exactly these four."""

    m0 = "m0"
    m1 = "m1"
    m2 = "m2"
    m3 = "m3"

    @property
    def signs(self) -> tuple[int, int]:
        """Signs (z1, z2) at the point."""
        return _FIXED_SIGNS[self.value]

    @property
    def point(self) -> PhasePoint:
        s1, s2 = self.signs
        return PhasePoint(0, 0, s1, 0, 0, s2)


_FIXED_SIGNS = {"m0": (1, -1), "m1": (-1, -1), "m2": (-1, 1), "m3": (1, 1)}


@dataclass(frozen=True)
class ReducedInvariants:
    """Invariants of the diagonal S^1-action: J, K, xi and sigma."""

    j: float
    K: float
    xi: float
    sigma: float


@dataclass(frozen=True)
class SpectralParams:
    """Locations of the two poles of the Lax matrix."""

    lambda1: float
    lambda2: float

    def __post_init__(self):
        if self.lambda1 == self.lambda2:
            raise DomainError("spectral parameters must differ")


def eval_J(params: ModelParams, pt: PhasePoint) -> float:
    return params.R1 * pt.z1 + params.R2 * pt.z2


def eval_H(params: ModelParams, pt: PhasePoint) -> float:
    p = params
    return (p.t0 * (pt.z1 + pt.z2) ** 2 + p.w * (p.t1 * pt.z1 + p.t2 * pt.z2)
            + p.t3 * (pt.x1 * pt.x2 + pt.y1 * pt.y2) + p.t4 * pt.z1 * pt.z2)


def eval_JH_arrays(params: ModelParams, u: np.ndarray, v: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised (J, H) for unit-vector arrays of shape (..., 3)."""
    p = params.as_float()
    z1, z2 = u[..., 2], v[..., 2]
    J = p.R1 * z1 + p.R2 * z2
    H = (p.t0 * (z1 + z2) ** 2 + p.w * (p.t1 * z1 + p.t2 * z2)
         + p.t3 * (u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1]) + p.t4 * z1 * z2)
    return J, H


def from_rational(w, t1, t2, sp: SpectralParams, R1=1.0, R2=1.0) -> ModelParams:
    """Rational Gaudin model: t0 = 0 and t3 = t4 = (t1 - t2)/(lambda1 - lambda2)."""
    t = (t1 - t2) / (sp.lambda1 - sp.lambda2)
    return ModelParams(R1=R1, R2=R2, w=w, t0=0 * t, t1=t1, t2=t2, t3=t, t4=t)


def from_trigonometric(t0, t1, t2, sp: SpectralParams, R1=1.0, R2=1.0) -> ModelParams:
    """Trigonometric Gaudin model: w = 0, t3 = (t1-t2)/sin(dl), t4 = (t1-t2) cot(dl)."""
    dl = sp.lambda1 - sp.lambda2
    s = math.sin(dl)
    if abs(s) < 1e-15:
        raise DomainError("sin(lambda1 - lambda2) = 0")
    d = t1 - t2
    return ModelParams(R1=R1, R2=R2, w=0.0, t0=t0, t1=t1, t2=t2, t3=d / s, t4=d * math.cos(dl) / s)


def rational_hamiltonian(w, t1, t2, sp: SpectralParams, pt: PhasePoint) -> float:
    """H^R written out directly: w(t1 z1 + t2 z2) + (t1-t2)/(l1-l2) <u, v>."""
    u, v = pt.vectors()
    return w * (t1 * pt.z1 + t2 * pt.z2) + (t1 - t2) / (sp.lambda1 - sp.lambda2) * float(u @ v)


def reduce(params: ModelParams, pt: PhasePoint) -> ReducedInvariants:
    u, v = pt.vectors()
    return ReducedInvariants(
        j=params.R1 * pt.z1 + params.R2 * pt.z2,
        K=params.R1 * pt.z1 - params.R2 * pt.z2,
        xi=float(u @ v),
        sigma=pt.x1 * pt.y2 - pt.y1 * pt.x2,
    )


def invariants_residual(params: ModelParams, inv: ReducedInvariants) -> float:
    R1, R2 = params.R1, params.R2
    j, K = inv.j, inv.K
    lhs = inv.sigma ** 2 + (inv.xi - (j + K) * (j - K) / (4 * R1 * R2)) ** 2
    rhs = (1 - (j + K) ** 2 / (4 * R1 ** 2)) * (1 - (j - K) ** 2 / (4 * R2 ** 2))
    return lhs - rhs


def fixed_point_values(params: ModelParams) -> dict[FixedPoint, tuple[float, float]]:
    """(J, H) at the four rank-0 points."""
    return {fp: (eval_J(params, fp.point), eval_H(params, fp.point)) for fp in FixedPoint}


__all__ = [
    "DomainError", "ModelParams", "PhasePoint", "FixedPoint", "ReducedInvariants",
    "SpectralParams", "eval_J", "eval_H", "eval_JH_arrays", "from_rational",
    "from_trigonometric", "rational_hamiltonian", "reduce", "invariants_residual",
    "fixed_point_values",
]
