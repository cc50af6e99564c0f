from fractions import Fraction

import numpy as np
import pytest

from gaudin_hopf import polyalg as pa
from gaudin_hopf.model import ModelParams


def _random_poly(rng, max_degree=6, lo=0, hi=4):
    terms = {}
    for e in pa.EXPONENTS[: pa.n_monomials(hi)]:
        if lo <= e.sum():
            terms[tuple(e)] = rng.normal()
    return pa.TruncatedPolynomial.from_dict(terms, max_degree)


@pytest.mark.parametrize("exact", [False, True])
def test_bracket_relations(exact):
    S, M, N, T = pa.hilbert_generators(exact=exact)
    br = pa.poisson_bracket
    assert br(M, N) == T
    assert br(M, T) == M * 2
    assert br(N, T) == N * -2
    for X in (M, N, T):
        assert br(S, X).is_zero()


@pytest.mark.parametrize("exact", [False, True])
def test_hilbert_relation(exact):
    S, M, N, T = pa.hilbert_generators(exact=exact)
    assert (M * N * 4 - S * S - T * T).is_zero()


def test_canonical_brackets():
    q1, q2, p1, p2 = pa.variables(exact=True)
    one = pa.TruncatedPolynomial.constant(1, exact=True)
    assert pa.poisson_bracket(q1, p1) == one
    assert pa.poisson_bracket(q2, p2) == one
    assert pa.poisson_bracket(q1, q2).is_zero()
    assert pa.poisson_bracket(q1, p2).is_zero()


def test_leibniz_and_jacobi():
    rng = np.random.default_rng(3)
    f, g, h = (_random_poly(rng, hi=3) for _ in range(3))
    br = pa.poisson_bracket
    assert br(f, g * h).allclose(br(f, g) * h + g * br(f, h), atol=1e-11)
    jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
    assert jac.max_abs() <= 1e-11


def test_antisymmetry_exact():
    q1, q2, p1, p2 = pa.variables(exact=True)
    f = q1 ** 2 * p2 + q2 * p1 * Fraction(1, 3)
    g = p1 ** 3 - q1 * q2 * p2
    assert pa.poisson_bracket(f, g) == -pa.poisson_bracket(g, f)


def test_truncation_drops_high_degrees():
    q1, *_ = pa.variables(max_degree=4)
    assert (q1 ** 5).is_zero()
    assert (q1 ** 4).coefficient((4, 0, 0, 0)) == 1


def test_evaluation_matches_product():
    rng = np.random.default_rng(4)
    f, g = _random_poly(rng, max_degree=8, hi=3), _random_poly(rng, max_degree=8, hi=3)
    x = (0.3, -0.2, 0.5, 0.1)
    assert (f * g)(*x) == pytest.approx(f(*x) * g(*x), abs=1e-12)


def test_lie_transform_identity_and_degree_rule():
    rng = np.random.default_rng(5)
    H = _random_poly(rng, hi=4)
    assert pa.lie_transform(H, pa.TruncatedPolynomial.zero()) == H
    with pytest.raises(ValueError):
        pa.lie_transform(H, _random_poly(rng, lo=2, hi=2))


def test_lie_transform_preserves_brackets():
    S, M, N, T = pa.hilbert_generators()
    q1, q2, p1, p2 = pa.variables()
    G = q1 ** 3 * 0.2 - q2 * p1 * p2 * 0.3
    lt = lambda f: pa.lie_transform(f, G)
    lhs = pa.poisson_bracket(lt(M), lt(N)).truncate(5)
    assert lhs.allclose(lt(T).truncate(5), atol=1e-12)


def test_d_squared_vanishes():
    rng = np.random.default_rng(6)
    f = _random_poly(rng, hi=5)
    assert pa.exterior_derivative(pa.exterior_derivative(f)).is_zero()
    one = pa.PolyOneForm(tuple(_random_poly(rng, hi=4) for _ in range(4)))
    assert pa.exterior_derivative(pa.exterior_derivative(one)).max_abs() <= 1e-12


def test_canonical_two_form():
    w = pa.canonical_two_form(exact=True)
    assert w.component(0, 2).coeffs[0] == 1 and w.component(1, 3).coeffs[0] == 1
    assert w.component(2, 0).coeffs[0] == -1
    assert w.component(0, 1).is_zero() and w.component(2, 3).is_zero()
    np.testing.assert_array_equal(w.constant_matrix(),
                                  [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])


def test_radial_contraction_is_primitive():
    jet = pa.gaudin_omega_jet(ModelParams(R1=1, R2=2, t3=1), exact=True)
    A = pa.radial_field(exact=True)
    w2 = jet[1]
    assert pa.exterior_derivative(w2).is_zero()
    d = pa.exterior_derivative(pa.interior_product(A, w2) * Fraction(-1, 4))
    assert (d - w2).is_zero()
    # iota_A omega^0 = -(q1 dp1 - p1 dq1 + q2 dp2 - p2 dq2)
    q1, q2, p1, p2 = pa.variables(exact=True)
    a0 = pa.interior_product(A, jet[0])
    assert a0.comps[0] == p1 and a0.comps[2] == -q1
    assert a0.comps[1] == p2 and a0.comps[3] == -q2


def test_sharp_inverts_contraction():
    rng = np.random.default_rng(7)
    w0 = pa.canonical_two_form()
    X = pa.PolyVectorField(tuple(_random_poly(rng, hi=3) for _ in range(4)))
    beta = pa.interior_product(X, w0)
    Y = pa.sharp(beta, w0)
    assert all(a.allclose(b, atol=1e-13) for a, b in zip(X.comps, Y.comps))


@pytest.mark.parametrize("exact", [False, True])
@pytest.mark.parametrize("R", [(1, 2), (Fraction(9, 4), 1), (1, 1)])
def test_flattening_postcondition(exact, R):
    p = ModelParams(R1=R[0], R2=R[1], t3=1)
    jet = pa.gaudin_omega_jet(p, exact=exact, max_degree=6)
    X, Y = pa.flatten(jet)
    pulled = pa.flattened_form(jet, X, Y)
    w0 = pa.canonical_two_form(6, exact)
    for d in (0, 2, 4):
        assert (pulled - w0).homogeneous(d).max_abs() <= 1e-12


def test_flat_input_gives_zero_fields():
    w0 = pa.canonical_two_form(exact=True)
    z = w0 * 0
    X, Y = pa.flatten([w0, z, z, z])
    assert X.is_zero() and Y.is_zero()


def test_non_closed_jet_rejected():
    q1, q2, p1, p2 = pa.variables()
    w0 = pa.canonical_two_form()
    z = pa.TruncatedPolynomial.zero()
    bad = pa.PolyTwoForm((q1 * p1, z, z, z, z, z))  # d(q1 p1 dq1^dq2) = q1 dp1^dq1^dq2 != 0
    with pytest.raises(pa.FlatteningError):
        pa.flatten([w0, bad, w0 * 0, w0 * 0])


def test_jet_only_at_m0():
    with pytest.raises(ValueError):
        pa.gaudin_omega_jet(ModelParams(), fp="m2")


def test_dump_is_sorted_text():
    q1, q2, p1, p2 = pa.variables(exact=True)
    f = q1 * p2 * Fraction(1, 3) + 2
    assert f.dump().splitlines() == ["2 * 1", "1/3 * q1^1 p2^1"]
