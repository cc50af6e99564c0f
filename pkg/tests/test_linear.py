import math
from fractions import Fraction

import numpy as np
import pytest

from gaudin_hopf.linear import (CANONICAL_OMEGA, EigenClass, FixedPoint, PreconditionError, Side, a_hat_template,
                                alpha_at, beta_of, classify, dnu2_printed, jordan_chevalley, linearize_at,
                                symplectic_basis, thresholds, unfolding)
from gaudin_hopf.model import ModelParams


def test_linearization_example():
    p = ModelParams(R1=1, R2=1, w=1, t1=0.5, t2=0, t3=0.5, t4=0.5)
    L = linearize_at(p, FixedPoint.m0)
    expected = [[0, 0, 0, -0.5], [0, 0, 0.5, 0], [0, 0.5, 0, 0.5], [-0.5, 0, -0.5, 0]]
    np.testing.assert_allclose(L.A, expected, atol=1e-15)
    assert L.symplectic_defect() <= 1e-14


def test_fig1b_m0_focus_focus(fig1):
    assert classify(fig1.with_t4(0.5), FixedPoint.m0).kind is EigenClass.FocusFocus


def test_fig5_thresholds_exact(fig5):
    assert thresholds(fig5, FixedPoint.m0).t4_plus == Fraction(-3, 4)
    assert thresholds(fig5, FixedPoint.m2).t4_plus == Fraction(-1, 4)


def test_fig6_thresholds(fig6):
    for fp in (FixedPoint.m0, FixedPoint.m2):
        th = thresholds(fig6, fp)
        assert float(th.t4_plus) == pytest.approx(math.sqrt(2) / 3, abs=1e-12)
        assert float(th.t4_minus) == pytest.approx(-math.sqrt(2) / 3, abs=1e-12)


@pytest.mark.parametrize("fp", [FixedPoint.m1, FixedPoint.m3])
def test_m1_m3_always_elliptic(fig6, fp):
    for t4 in np.linspace(-3, 3, 61):
        assert classify(fig6.with_t4(float(t4)), fp).kind is EigenClass.EllipticElliptic


def test_never_hyperbolic_hyperbolic():
    rng = np.random.default_rng(11)
    for _ in range(200):
        R1, R2 = rng.uniform(0.3, 3, 2)
        t0, t1, t2, t3, t4 = rng.uniform(-2, 2, 5)
        p = ModelParams(R1=R1, R2=R2, w=1.0, t0=t0, t1=t1, t2=t2, t3=t3, t4=t4)
        for fp in FixedPoint:
            assert classify(p, fp).kind is not EigenClass.HyperbolicHyperbolic


def test_beta_example():
    assert beta_of(ModelParams(R1=1, R2=2, t3=0.5)) == pytest.approx(0.5 * 0.5 ** -0.25, abs=1e-12)
    assert beta_of(ModelParams(R1=1, R2=2, t3=0.5)) == pytest.approx(0.59460, abs=1e-5)


@pytest.mark.parametrize("side", [Side.plus, Side.minus])
@pytest.mark.parametrize("fp", [FixedPoint.m0, FixedPoint.m2])
def test_symplectic_basis(fig6, fp, side):
    bc = symplectic_basis(fig6, fp, side)
    A = linearize_at(fig6.with_t4(thresholds(fig6, fp).at(side)).as_float(), fp).A
    np.testing.assert_allclose(bc.S_part + bc.N_part, A, atol=1e-14)
    np.testing.assert_allclose(bc.S_part @ bc.N_part, bc.N_part @ bc.S_part, atol=1e-12)
    np.testing.assert_allclose(bc.A_hat, a_hat_template(bc.alpha, bc.epsilon), atol=1e-10)
    np.testing.assert_allclose(bc.pairings, CANONICAL_OMEGA, atol=1e-10)
    assert bc.epsilon == (1 if side is Side.plus else -1)


def test_jordan_chevalley_needs_double_pair(fig6):
    A = linearize_at(fig6.with_t4(2.0).as_float(), FixedPoint.m0).A
    with pytest.raises(PreconditionError):
        jordan_chevalley(A, alpha_at(fig6.with_t4(2.0), FixedPoint.m0))


def test_transversality_fig5(fig5):
    u = unfolding(fig5, FixedPoint.m0, Side.plus)
    assert u.dnu2_dt4_at_threshold == pytest.approx(1, abs=1e-8)
    assert dnu2_printed(fig5) == pytest.approx(1, abs=1e-15)


def test_transversality_fig6(fig6):
    printed = -0.5 * 3 / 2 ** 1.5
    assert dnu2_printed(fig6) == pytest.approx(printed, abs=1e-15)
    for fp in (FixedPoint.m0, FixedPoint.m2):
        for side, sign in ((Side.plus, 1), (Side.minus, -1)):
            # the printed derivative holds at plus thresholds; minus thresholds give its negative
            u = unfolding(fig6, fp, side)
            assert u.dnu2_dt4_at_threshold == pytest.approx(sign * printed, abs=1e-8)
            h = 1e-5
            fd = (u.nu2(u.t4_star + h) - u.nu2(u.t4_star - h)) / (2 * h)
            assert fd == pytest.approx(u.dnu2_dt4_at_threshold, rel=1e-6)
            assert u.nu2(u.t4_star) == pytest.approx(0, abs=1e-12)
