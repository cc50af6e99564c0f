"""Truncated polynomial algebra in canonical coordinates (q1, q2, p1, p2).

Polynomials are dense coefficient vectors over a graded monomial basis, so
the monomials of degree <= d always form a prefix of the basis.  Products
use precomputed index tables and ``numpy.bincount``.  Coefficients are
``float64`` in floating mode and ``fractions.Fraction`` (object arrays) in
exact mode.

The exterior-calculus layer (one-, two- and three-forms, vector fields,
interior products, Lie derivatives) is just large enough for the flattening
of the symplectic form.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import exact as _exact

MAX_DEGREE = 8
NVARS = 4
VAR_NAMES = ("q1", "q2", "p1", "p2")
PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))
PRUNE_REL = 1e-14


def _graded_exponents(max_degree: int) -> np.ndarray:
    out = []
    for d in range(max_degree + 1):
        for e in itertools.product(range(d, -1, -1), repeat=NVARS):
            if sum(e) == d:
                out.append(e)
    return np.array(out, dtype=np.int64)


EXPONENTS = _graded_exponents(MAX_DEGREE)
DEGREES = EXPONENTS.sum(axis=1)
INDEX = {tuple(e): i for i, e in enumerate(EXPONENTS.tolist())}


def n_monomials(degree: int) -> int:
    """Number of monomials of total degree <= degree in four variables."""
    return math.comb(degree + NVARS, NVARS)


def _build_product_table():
    n = len(EXPONENTS)
    I, J, K = [], [], []
    for i in range(n):
        for j in range(n):
            if DEGREES[i] + DEGREES[j] <= MAX_DEGREE:
                I.append(i)
                J.append(j)
                K.append(INDEX[tuple(EXPONENTS[i] + EXPONENTS[j])])
    I, J, K = (np.array(a, dtype=np.int64) for a in (I, J, K))
    order = np.argsort(K, kind="stable")
    return I[order], J[order], K[order]


_PI, _PJ, _PK = _build_product_table()
# _PK is sorted, so pairs landing in degree <= d form a prefix
_PREFIX = np.searchsorted(_PK, [n_monomials(d) for d in range(MAX_DEGREE + 1)])


def _build_derivative_tables():
    tables = []
    for v in range(NVARS):
        src, dst, fac = [], [], []
        for i, e in enumerate(EXPONENTS.tolist()):
            if e[v] > 0:
                f = list(e)
                f[v] -= 1
                src.append(i)
                dst.append(INDEX[tuple(f)])
                fac.append(e[v])
        tables.append((np.array(src), np.array(dst), np.array(fac, dtype=np.int64)))
    return tables


_DERIV = _build_derivative_tables()


def _zeros(n: int, exact: bool) -> np.ndarray:
    if exact:
        z = np.empty(n, dtype=object)
        z[:] = Fraction(0)
        return z
    return np.zeros(n)


def _is_exact_scalar(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


class TruncatedPolynomial:
    """Polynomial in (q1, q2, p1, p2) truncated at ``max_degree`` (<= 8).

    Parameters
    ----------
    coeffs : array_like
        Coefficients on the graded monomial basis, length ``n_monomials(max_degree)``.
    max_degree : int
        Truncation degree; products and brackets discard higher terms.
    exact : bool
        Store ``Fraction`` coefficients instead of floats.
    """

    __slots__ = ("coeffs", "max_degree", "exact")

    def __init__(self, coeffs, max_degree: int = MAX_DEGREE, exact: bool = False):
        if not 0 <= max_degree <= MAX_DEGREE:
            raise ValueError(f"max_degree must be in [0, {MAX_DEGREE}]")
        n = n_monomials(max_degree)
        if exact:
            c = np.empty(n, dtype=object)
            src = list(coeffs)
            if len(src) != n:
                raise ValueError("coefficient vector has wrong length")
            c[:] = [Fraction(x) for x in src]
        else:
            c = np.asarray(coeffs, dtype=float)
            if c.shape != (n,):
                raise ValueError("coefficient vector has wrong length")
        self.coeffs = c
        self.max_degree = max_degree
        self.exact = exact

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, coeffs: np.ndarray, max_degree: int, exact: bool) -> "TruncatedPolynomial":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.max_degree = max_degree
        obj.exact = exact
        return obj

    @classmethod
    def zero(cls, max_degree: int = MAX_DEGREE, exact: bool = False) -> "TruncatedPolynomial":
        return cls._raw(_zeros(n_monomials(max_degree), exact), max_degree, exact)

    @classmethod
    def constant(cls, c, max_degree: int = MAX_DEGREE, exact: bool = False) -> "TruncatedPolynomial":
        p = cls.zero(max_degree, exact)
        p.coeffs[0] = Fraction(c) if exact else float(c)
        return p

    @classmethod
    def variable(cls, name, max_degree: int = MAX_DEGREE, exact: bool = False) -> "TruncatedPolynomial":
        v = VAR_NAMES.index(name) if isinstance(name, str) else int(name)
        e = [0] * NVARS
        e[v] = 1
        return cls.from_dict({tuple(e): 1}, max_degree, exact)

    @classmethod
    def from_dict(cls, terms: dict, max_degree: int = MAX_DEGREE, exact: bool = False) -> "TruncatedPolynomial":
        p = cls.zero(max_degree, exact)
        for e, c in terms.items():
            e = tuple(int(x) for x in e)
            if sum(e) > max_degree:
                continue
            p.coeffs[INDEX[e]] += Fraction(c) if exact else float(c)
        return p

    # views ------------------------------------------------------------
    def terms(self) -> dict:
        """Map exponent tuple -> nonzero coefficient."""
        return {tuple(EXPONENTS[i].tolist()): c for i, c in enumerate(self.coeffs) if c != 0}

    def coefficient(self, exponent) -> float:
        e = tuple(exponent)
        if sum(e) > self.max_degree:
            return 0
        return self.coeffs[INDEX[e]]

    def lowest_degree(self) -> int | None:
        nz = np.nonzero(self.coeffs != 0)[0]
        return int(DEGREES[nz[0]]) if len(nz) else None

    def degree(self) -> int | None:
        nz = np.nonzero(self.coeffs != 0)[0]
        return int(DEGREES[nz[-1]]) if len(nz) else None

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs.astype(float)))) if len(self.coeffs) else 0.0

    def is_zero(self) -> bool:
        return not np.any(self.coeffs != 0)

    def homogeneous(self, d: int) -> "TruncatedPolynomial":
        out = self.zero(self.max_degree, self.exact)
        if d <= self.max_degree:
            lo, hi = n_monomials(d - 1) if d > 0 else 0, n_monomials(d)
            out.coeffs[lo:hi] = self.coeffs[lo:hi]
        return out

    def truncate(self, d: int) -> "TruncatedPolynomial":
        """Drop terms above degree ``d`` and lower the truncation degree to ``d``."""
        d = min(d, self.max_degree)
        return self._raw(self.coeffs[: n_monomials(d)].copy(), d, self.exact)

    def extend(self, d: int) -> "TruncatedPolynomial":
        """Raise the truncation degree (the new slots are zero, i.e. known terms only)."""
        if d <= self.max_degree:
            return self.truncate(d)
        c = _zeros(n_monomials(d), self.exact)
        c[: len(self.coeffs)] = self.coeffs
        return self._raw(c, d, self.exact)

    def to_float(self) -> "TruncatedPolynomial":
        return self._raw(self.coeffs.astype(float), self.max_degree, False)

    def prune(self, rel: float = PRUNE_REL) -> "TruncatedPolynomial":
        """Zero coefficients below ``rel`` times the largest magnitude (float mode only)."""
        if self.exact:
            return self
        c = self.coeffs.copy()
        m = np.max(np.abs(c)) if len(c) else 0.0
        c[np.abs(c) < rel * m] = 0.0
        return self._raw(c, self.max_degree, False)

    def dump(self) -> str:
        """Sorted text listing, one ``coeff * q1^a q2^b p1^c p2^d`` per line."""
        lines = []
        for e, c in sorted(self.terms().items(), key=lambda t: (sum(t[0]), tuple(-x for x in t[0]))):
            mono = " ".join(f"{n}^{k}" for n, k in zip(VAR_NAMES, e) if k) or "1"
            cs = str(c) if self.exact else repr(float(c))
            lines.append(f"{cs} * {mono}")
        return "\n".join(lines)

    def __call__(self, q1, q2, p1, p2):
        x = np.array([q1, q2, p1, p2], dtype=float)
        mons = np.prod(x[None, :] ** EXPONENTS[: len(self.coeffs)], axis=1)
        return float(self.coeffs.astype(float) @ mons)

    def __repr__(self):
        return f"TruncatedPolynomial(max_degree={self.max_degree}, exact={self.exact}, nterms={len(self.terms())})"

    # arithmetic -------------------------------------------------------
    def _coerce(self, other) -> "TruncatedPolynomial":
        if isinstance(other, TruncatedPolynomial):
            return other
        return TruncatedPolynomial.constant(other, self.max_degree, self.exact and _is_exact_scalar(other))

    def _common(self, other):
        other = self._coerce(other)
        d = min(self.max_degree, other.max_degree)
        exact = self.exact and other.exact
        a, b = self.coeffs[: n_monomials(d)], other.coeffs[: n_monomials(d)]
        if self.exact and not exact:
            a = a.astype(float)
        if other.exact and not exact:
            b = b.astype(float)
        return a, b, d, exact

    def __add__(self, other):
        a, b, d, exact = self._common(other)
        return self._raw(a + b, d, exact)

    __radd__ = __add__

    def __sub__(self, other):
        a, b, d, exact = self._common(other)
        return self._raw(a - b, d, exact)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._raw(-self.coeffs, self.max_degree, self.exact)

    def __mul__(self, other):
        if isinstance(other, TruncatedPolynomial):
            return multiply(self, other)
        exact = self.exact and _is_exact_scalar(other)
        c = self.coeffs if exact or not self.exact else self.coeffs.astype(float)
        return self._raw(c * (Fraction(other) if exact else float(other)), self.max_degree, exact)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self.exact and _is_exact_scalar(other):
            return self * (Fraction(1) / Fraction(other))
        return self * (1.0 / float(other))

    def __pow__(self, n: int):
        out = TruncatedPolynomial.constant(1, self.max_degree, self.exact)
        for _ in range(int(n)):
            out = out * self
        return out

    def allclose(self, other, atol: float = 1e-12) -> bool:
        diff = self - other
        return diff.max_abs() <= atol

    def __eq__(self, other):
        if not isinstance(other, TruncatedPolynomial):
            return NotImplemented
        a, b, _, _ = self._common(other)
        return bool(np.all(a == b))

    __hash__ = None

    def deriv(self, var) -> "TruncatedPolynomial":
        v = VAR_NAMES.index(var) if isinstance(var, str) else int(var)
        src, dst, fac = _DERIV[v]
        n = len(self.coeffs)
        keep = src < n
        out = _zeros(n, self.exact)
        if self.exact:
            for s, t, f in zip(src[keep], dst[keep], fac[keep]):
                out[t] += self.coeffs[s] * int(f)
        else:
            out[dst[keep]] = self.coeffs[src[keep]] * fac[keep]
        return self._raw(out, self.max_degree, self.exact)


def multiply(a: TruncatedPolynomial, b: TruncatedPolynomial) -> TruncatedPolynomial:
    """Truncated product; the result carries the smaller truncation degree."""
    d = min(a.max_degree, b.max_degree)
    n = n_monomials(d)
    m = _PREFIX[d]
    I, J, K = _PI[:m], _PJ[:m], _PK[:m]
    exact = a.exact and b.exact
    if exact:
        ca, cb = a.coeffs, b.coeffs
        nza = np.nonzero(ca[:n] != 0)[0]
        nzb = np.nonzero(cb[:n] != 0)[0]
        out = _zeros(n, True)
        if len(nza) and len(nzb):
            mask = np.isin(I, nza) & np.isin(J, nzb)
            for i, j, k in zip(I[mask], J[mask], K[mask]):
                out[k] += ca[i] * cb[j]
        return TruncatedPolynomial._raw(out, d, True)
    ca = a.coeffs.astype(float) if a.exact else a.coeffs
    cb = b.coeffs.astype(float) if b.exact else b.coeffs
    out = np.bincount(K, weights=ca[I] * cb[J], minlength=n)
    return TruncatedPolynomial._raw(out, d, False)


def variables(max_degree: int = MAX_DEGREE, exact: bool = False):
    """The coordinate functions (q1, q2, p1, p2)."""
    return tuple(TruncatedPolynomial.variable(v, max_degree, exact) for v in range(NVARS))


def poisson_bracket(f: TruncatedPolynomial, g: TruncatedPolynomial) -> TruncatedPolynomial:
    """{f, g} = sum_i df/dq_i dg/dp_i - df/dp_i dg/dq_i, truncated."""
    out = None
    for i in range(2):
        term = f.deriv(i) * g.deriv(i + 2) - f.deriv(i + 2) * g.deriv(i)
        out = term if out is None else out + term
    return out


def hilbert_generators(max_degree: int = MAX_DEGREE, exact: bool = False):
    """The S^1-invariant quadratics (S, M, N, T).

    S = q1 p2 - q2 p1, M = (q1^2 + q2^2)/2, N = (p1^2 + p2^2)/2, T = q1 p1 + q2 p2.
    """
    if max_degree < 2:
        raise ValueError("Hilbert generators need max_degree >= 2")
    h = Fraction(1, 2) if exact else 0.5
    fd = lambda t: TruncatedPolynomial.from_dict(t, max_degree, exact)
    S = fd({(1, 0, 0, 1): 1, (0, 1, 1, 0): -1})
    M = fd({(2, 0, 0, 0): h, (0, 2, 0, 0): h})
    N = fd({(0, 0, 2, 0): h, (0, 0, 0, 2): h})
    T = fd({(1, 0, 1, 0): 1, (0, 1, 0, 1): 1})
    return S, M, N, T


def lie_transform(H: TruncatedPolynomial, G: TruncatedPolynomial) -> TruncatedPolynomial:
    """exp(ad_G) H = sum_n ad_G^n H / n! with ad_G H = {G, H}.

    Each application of ad_G raises the lowest degree by deg(G) - 2 >= 1, so the
    series terminates under truncation.
    """
    lo = G.lowest_degree()
    if lo is None:
        return H
    if lo < 3:
        raise ValueError("generating function must have lowest degree >= 3")
    out = H
    term = H
    n = 1
    while True:
        term = poisson_bracket(G, term) / n
        if term.is_zero():
            break
        out = out + term
        n += 1
    return out


# ----------------------------------------------------------------------
# exterior calculus
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class PolyVectorField:
    """Vector field sum_i X_i d/dx_i with polynomial components."""

    comps: tuple

    def __add__(self, other):
        return PolyVectorField(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, c):
        return PolyVectorField(tuple(a * c for a in self.comps))

    __rmul__ = __mul__

    def __neg__(self):
        return PolyVectorField(tuple(-a for a in self.comps))

    def apply(self, f: TruncatedPolynomial) -> TruncatedPolynomial:
        """Directional derivative X(f)."""
        out = None
        for i, c in enumerate(self.comps):
            t = c * f.deriv(i)
            out = t if out is None else out + t
        return out

    def max_abs(self) -> float:
        return max(c.max_abs() for c in self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)


@dataclass(frozen=True)
class PolyOneForm:
    """One-form sum_i a_i dx_i."""

    comps: tuple

    def __add__(self, other):
        return PolyOneForm(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return PolyOneForm(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, c):
        return PolyOneForm(tuple(a * c for a in self.comps))

    __rmul__ = __mul__

    def __neg__(self):
        return PolyOneForm(tuple(-a for a in self.comps))

    def max_abs(self) -> float:
        return max(c.max_abs() for c in self.comps)


@dataclass(frozen=True)
class PolyTwoForm:
    """Two-form stored once per wedge pair, in the order of ``PAIRS``:
    dq1^dq2, dq1^dp1, dq1^dp2, dq2^dp1, dq2^dp2, dp1^dp2."""

    comps: tuple

    def __add__(self, other):
        return PolyTwoForm(tuple(a + b for a, b in zip(self.comps, other.comps)))

    def __sub__(self, other):
        return PolyTwoForm(tuple(a - b for a, b in zip(self.comps, other.comps)))

    def __mul__(self, c):
        return PolyTwoForm(tuple(a * c for a in self.comps))

    __rmul__ = __mul__

    def __neg__(self):
        return PolyTwoForm(tuple(-a for a in self.comps))

    def component(self, i: int, j: int) -> TruncatedPolynomial:
        if i < j:
            return self.comps[PAIRS.index((i, j))]
        return -self.comps[PAIRS.index((j, i))]

    def homogeneous(self, d: int) -> "PolyTwoForm":
        return PolyTwoForm(tuple(c.homogeneous(d) for c in self.comps))

    def truncate(self, d: int) -> "PolyTwoForm":
        return PolyTwoForm(tuple(c.truncate(d) for c in self.comps))

    def max_abs(self) -> float:
        return max(c.max_abs() for c in self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)

    def constant_matrix(self) -> np.ndarray:
        """Antisymmetric matrix W with W[i, j] the constant coefficient of dx_i^dx_j."""
        W = np.zeros((NVARS, NVARS))
        for (i, j), c in zip(PAIRS, self.comps):
            W[i, j] = float(c.coeffs[0])
            W[j, i] = -W[i, j]
        return W


@dataclass(frozen=True)
class PolyThreeForm:
    """Three-form, stored in the order of ``TRIPLES`` (only needed for closedness checks)."""

    comps: tuple

    def max_abs(self) -> float:
        return max(c.max_abs() for c in self.comps)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.comps)


def exterior_derivative(form):
    """d on functions, one-forms and two-forms."""
    if isinstance(form, TruncatedPolynomial):
        return PolyOneForm(tuple(form.deriv(i) for i in range(NVARS)))
    if isinstance(form, PolyOneForm):
        a = form.comps
        return PolyTwoForm(tuple(a[j].deriv(i) - a[i].deriv(j) for i, j in PAIRS))
    if isinstance(form, PolyTwoForm):
        w = form.component
        return PolyThreeForm(tuple(
            w(j, k).deriv(i) - w(i, k).deriv(j) + w(i, j).deriv(k) for i, j, k in TRIPLES))
    raise TypeError(f"cannot differentiate {type(form).__name__}")


def interior_product(v: PolyVectorField, form):
    """Contraction iota_v of a one-, two- or three-form."""
    X = v.comps
    if isinstance(form, PolyOneForm):
        out = None
        for x, a in zip(X, form.comps):
            t = x * a
            out = t if out is None else out + t
        return out
    if isinstance(form, PolyTwoForm):
        res = [None] * NVARS
        for (i, j), c in zip(PAIRS, form.comps):
            for k, t in ((j, c * X[i]), (i, -(c * X[j]))):
                res[k] = t if res[k] is None else res[k] + t
        return PolyOneForm(tuple(res))
    if isinstance(form, PolyThreeForm):
        res = {}
        for (i, j, k), c in zip(TRIPLES, form.comps):
            for pair, t in (((j, k), c * X[i]), ((i, k), -(c * X[j])), ((i, j), c * X[k])):
                res[pair] = t if pair not in res else res[pair] + t
        return PolyTwoForm(tuple(res[p] for p in PAIRS))
    raise TypeError(f"cannot contract {type(form).__name__}")


def lie_derivative_form(v: PolyVectorField, form):
    """L_v via the Cartan formula L_v = d iota_v + iota_v d."""
    if isinstance(form, TruncatedPolynomial):
        return v.apply(form)
    if isinstance(form, PolyOneForm):
        return exterior_derivative(interior_product(v, form)) + interior_product(v, exterior_derivative(form))
    if isinstance(form, PolyTwoForm):
        return exterior_derivative(interior_product(v, form)) + interior_product(v, exterior_derivative(form))
    raise TypeError(f"no Lie derivative for {type(form).__name__}")


def radial_field(max_degree: int = MAX_DEGREE, exact: bool = False) -> PolyVectorField:
    """A = -q1 d/dq1 - q2 d/dq2 - p1 d/dp1 - p2 d/dp2."""
    return PolyVectorField(tuple(-x for x in variables(max_degree, exact)))


def canonical_two_form(max_degree: int = MAX_DEGREE, exact: bool = False) -> PolyTwoForm:
    """omega^0 = dq1^dp1 + dq2^dp2."""
    z = TruncatedPolynomial.zero(max_degree, exact)
    one = TruncatedPolynomial.constant(1, max_degree, exact)
    return PolyTwoForm((z, one, z, z, one, z))


def sharp(beta: PolyOneForm, omega0: PolyTwoForm) -> PolyVectorField:
    """Solve iota_X omega0 = beta for X, with omega0 constant and nondegenerate."""
    # (iota_X omega0)_k = sum_i X_i W[i, k], so beta = W^T X and X = -W^{-1} beta
    exact = all(c.exact for c in beta.comps) and _form_exact(omega0)
    if exact:
        W = [[omega0.component(i, j).coeffs[0] if i != j else Fraction(0) for j in range(NVARS)]
             for i in range(NVARS)]
        Winv = [[-x for x in row] for row in _exact.inverse(W)]
    else:
        Winv = -np.linalg.inv(omega0.constant_matrix())
    comps = []
    for i in range(NVARS):
        acc = None
        for k in range(NVARS):
            c = Winv[i][k]
            if c == 0:
                continue
            t = beta.comps[k] * c
            acc = t if acc is None else acc + t
        comps.append(acc if acc is not None else beta.comps[0] * 0)
    return PolyVectorField(tuple(comps))


def pullback_function(f: TruncatedPolynomial, X: PolyVectorField) -> TruncatedPolynomial:
    """exp(L_X) f for a vector field raising degrees (series terminates)."""
    out, term, n = f, f, 1
    while True:
        term = X.apply(term) / n
        if term.is_zero():
            return out
        out = out + term
        n += 1


def pullback_form(omega: PolyTwoForm, X: PolyVectorField) -> PolyTwoForm:
    """exp(L_X) omega for a vector field raising degrees."""
    out, term, n = omega, omega, 1
    while True:
        term = lie_derivative_form(X, term) * (Fraction(1, n) if _form_exact(term) else 1.0 / n)
        if term.is_zero():
            return out
        out = out + term
        n += 1


def _form_exact(form) -> bool:
    return all(c.exact for c in form.comps)


def omega_jet_sum(jet) -> PolyTwoForm:
    out = jet[0]
    for w in jet[1:]:
        out = out + w
    return out


def zeta_pm(max_degree: int = MAX_DEGREE, exact: bool = False):
    """zeta_+ = (p2+q1)^2 + (p1-q2)^2 and zeta_- = (p2-q1)^2 + (p1+q2)^2."""
    q1, q2, p1, p2 = variables(max_degree, exact)
    return (p2 + q1) ** 2 + (p1 - q2) ** 2, (p2 - q1) ** 2 + (p1 + q2) ** 2


def chi(n: int, sign: int, R1, R2, max_degree: int = MAX_DEGREE, exact: bool = False) -> TruncatedPolynomial:
    """chi_n^{+-} = R1^{n/2} zeta_-^{n/2} +- R2^{n/2} zeta_+^{n/2} (n even)."""
    if n % 2:
        raise ValueError("chi_n is defined for even n")
    zp, zm = zeta_pm(max_degree, exact)
    k = n // 2
    return zm ** k * (R1 ** k) + zp ** k * (sign * R2 ** k)


_OMEGA_PREFACTOR = {2: (1, 8), 4: (3, 64), 6: (5, 256)}


def gaudin_omega_jet(params, fp="m0", max_degree: int = MAX_DEGREE, exact: bool | None = None):
    """Taylor jet (omega^0, omega^2, omega^4, omega^6) of the Gaudin symplectic form at m0.

    In the canonical coordinates of the Q-change,
    omega^n = c_n [chi_n^- (dq1^dq2 + dp1^dp2) + chi_n^+ (dq1^dp1 + dq2^dp2)] / (R1 R2)^{n/2}
    with c_2 = 1/8, c_4 = 3/64, c_6 = 5/256.  m2 is handled by the caller as m0
    of the sphere-swapped parameters.
    """
    fp = getattr(fp, "value", fp)
    if fp != "m0":
        raise ValueError("the omega jet is built at m0; use params.swapped() for m2")
    if exact is None:
        exact = params.is_exact
    R1, R2 = (Fraction(params.R1), Fraction(params.R2)) if exact else (float(params.R1), float(params.R2))
    jet = [canonical_two_form(max_degree, exact)]
    for n in (2, 4, 6):
        num, den = _OMEGA_PREFACTOR[n]
        c = (Fraction(num, den) if exact else num / den) / (R1 * R2) ** (n // 2)
        cm = chi(n, -1, R1, R2, max_degree, exact) * c
        cp = chi(n, +1, R1, R2, max_degree, exact) * c
        z = cm * 0
        # pairs: q1q2, q1p1, q1p2, q2p1, q2p2, p1p2
        jet.append(PolyTwoForm((cm, cp, z, z, cp, cm)))
    return jet


class FlatteningError(ValueError):
    """Raised for a non-closed or non-symplectic input jet."""


def flatten(omega_jet, tol: float = 1e-12):
    """Vector fields (X, Y) whose Lie flows pull ``omega_jet`` back to omega^0.

    Uses the Poincare primitives alpha^k = -iota_A omega^k / (k + 2) with A the
    radial field, then solves iota_X omega^0 = -alpha^2 and
    iota_Y omega^0 = -alpha^4 - iota_X omega^2 / 2.
    """
    w0, w2, w4 = omega_jet[0], omega_jet[1], omega_jet[2]
    for k, w in enumerate(omega_jet):
        r = exterior_derivative(w).max_abs()
        if r > tol * max(1.0, w.max_abs()):
            raise FlatteningError(f"omega jet term {k} is not closed (|d omega| = {r:.3e})")
    W = w0.constant_matrix()
    if abs(np.linalg.det(W)) < 1e-14:
        raise FlatteningError("omega^0 is degenerate")
    d = w2.comps[0].max_degree
    exact = _form_exact(w2)
    A = radial_field(d, exact)
    q = (lambda a, b: Fraction(a, b)) if exact else (lambda a, b: a / b)
    alpha2 = interior_product(A, w2) * (-q(1, 4))
    alpha4 = interior_product(A, w4) * (-q(1, 6))
    X = sharp(-alpha2, w0)
    Y = sharp(-alpha4 - interior_product(X, w2) * q(1, 2), w0)
    return X, Y


def flattened_form(omega_jet, X: PolyVectorField, Y: PolyVectorField) -> PolyTwoForm:
    """exp(L_Y) exp(L_X) applied to the summed jet."""
    return pullback_form(pullback_form(omega_jet_sum(omega_jet), X), Y)


__all__ = [
    "MAX_DEGREE", "VAR_NAMES", "PAIRS", "TruncatedPolynomial", "PolyVectorField", "PolyOneForm",
    "PolyTwoForm", "PolyThreeForm", "n_monomials", "multiply", "variables", "poisson_bracket",
    "hilbert_generators", "lie_transform", "exterior_derivative", "interior_product",
    "lie_derivative_form", "radial_field", "canonical_two_form", "sharp", "pullback_function",
    "pullback_form", "gaudin_omega_jet", "flatten", "flattened_form", "zeta_pm", "chi",
    "FlatteningError",
]
