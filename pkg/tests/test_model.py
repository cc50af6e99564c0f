import math
from fractions import Fraction

import numpy as np
import pytest

from gaudin_hopf.model import (DomainError, FixedPoint, ModelParams, PhasePoint, SpectralParams, eval_H, eval_J,
                               eval_JH_arrays, fixed_point_values, from_rational, from_trigonometric,
                               invariants_residual, rational_hamiltonian, reduce)


def _random_points(rng, n):
    u = rng.normal(size=(n, 3))
    v = rng.normal(size=(n, 3))
    return u / np.linalg.norm(u, axis=1)[:, None], v / np.linalg.norm(v, axis=1)[:, None]


def test_eval_J_fixed_points():
    p = ModelParams(R1=1, R2=2)
    assert eval_J(p, FixedPoint.m0.point) == -1
    assert eval_J(p, FixedPoint.m2.point) == 1
    assert eval_J(p, FixedPoint.m1.point) == -3
    assert eval_J(p, FixedPoint.m3.point) == 3


def test_eval_H_fig6_at_minus_threshold(fig6):
    p = fig6.with_t4(-math.sqrt(2) / 3)
    assert eval_H(p, FixedPoint.m0.point) == pytest.approx(math.sqrt(2) / 3, abs=1e-14)


def test_from_rational_example():
    p = from_rational(1, 1, 0, SpectralParams(1, 0))
    assert (p.t0, p.t3, p.t4) == (0, 1, 1)


def test_from_trigonometric_example():
    p = from_trigonometric(0, 1, 0, SpectralParams(math.pi / 2, 0))
    assert p.w == 0
    assert p.t3 == pytest.approx(1, abs=1e-15)
    assert p.t4 == pytest.approx(0, abs=1e-15)


def test_rational_hamiltonian_matches_eval_H():
    rng = np.random.default_rng(1)
    sp = SpectralParams(0.3, -1.1)
    p = from_rational(0.7, 0.4, -0.9, sp, R1=1.0, R2=1.0)
    for u, v in zip(*_random_points(rng, 50)):
        pt = PhasePoint(*u, *v)
        assert rational_hamiltonian(0.7, 0.4, -0.9, sp, pt) == pytest.approx(eval_H(p, pt), abs=1e-13)


def test_spectral_params_must_differ():
    with pytest.raises(DomainError):
        SpectralParams(1.0, 1.0)


def test_reduce_example():
    inv = reduce(ModelParams(R1=1, R2=2), FixedPoint.m0.point)
    assert (inv.j, inv.K, inv.xi, inv.sigma) == (-1, 3, -1, 0)


def test_invariants_residual_on_random_points():
    rng = np.random.default_rng(0)
    p = ModelParams(R1=1.3, R2=0.6)
    worst = 0.0
    for u, v in zip(*_random_points(rng, 10_000)):
        worst = max(worst, abs(invariants_residual(p, reduce(p, PhasePoint(*u, *v)))))
    assert worst <= 1e-10


def test_invariants_residual_off_the_relation():
    from gaudin_hopf.model import ReducedInvariants
    assert invariants_residual(ModelParams(), ReducedInvariants(0, 0, 0.5, 0)) == pytest.approx(-0.75)


def test_phase_point_rejects_off_sphere():
    with pytest.raises(DomainError):
        PhasePoint(0, 0, 1.1, 0, 0, 1)
    pt = PhasePoint.normalized((0, 0, 1 + 1e-10), (1, 0, 0))
    assert pt.on_sphere()


def test_nonpositive_weight_rejected():
    with pytest.raises(DomainError):
        ModelParams(R1=0)


def test_vectorised_matches_scalar(fig6):
    rng = np.random.default_rng(2)
    u, v = _random_points(rng, 200)
    p = fig6.with_t4(0.3)
    J, H = eval_JH_arrays(p, u, v)
    for k in range(0, 200, 17):
        pt = PhasePoint(*u[k], *v[k])
        assert J[k] == pytest.approx(float(eval_J(p, pt)), abs=1e-13)
        assert H[k] == pytest.approx(float(eval_H(p, pt)), abs=1e-13)


@pytest.mark.parametrize("fp", list(FixedPoint))
def test_fixed_points_are_critical(fp, fig6):
    p = fig6.with_t4(0.7).as_float()
    s1, s2 = fp.signs
    eps = 1e-6
    J0, H0 = eval_JH_arrays(p, np.array([0, 0, s1]), np.array([0, 0, s2]))
    for d1, d2 in [((1, 0), (0, 0)), ((0, 1), (0, 0)), ((0, 0), (1, 0)), ((0, 0), (0, 1))]:
        u = np.array([eps * d1[0], eps * d1[1], s1 * math.sqrt(1 - eps ** 2 * sum(d1))])
        v = np.array([eps * d2[0], eps * d2[1], s2 * math.sqrt(1 - eps ** 2 * sum(d2))])
        J, H = eval_JH_arrays(p, u, v)
        assert abs(H - H0) / eps < 1e-5
        assert abs(J - J0) / eps < 1e-5


def test_fixed_point_values_fig6(fig6):
    vals = fixed_point_values(fig6.with_t4(Fraction(1, 2)))
    assert vals[FixedPoint.m0] == (-1, Fraction(-1, 2))
    assert vals[FixedPoint.m2] == (1, Fraction(-1, 2))
    assert vals[FixedPoint.m1] == (-3, Fraction(-3, 2))


def test_params_roundtrip_and_swap(fig6):
    assert ModelParams.from_dict(fig6.to_dict()) == fig6.as_float()
    s = fig6.swapped()
    assert (s.R1, s.R2) == (2, 1)
    assert fig6.is_exact and not fig6.as_float().is_exact
    with pytest.raises(DomainError):
        ModelParams.from_dict({"R3": 1})
    with pytest.raises(DomainError):
        ModelParams().require_t3_nonzero()
