import math
from fractions import Fraction

import numpy as np
import pytest

from conftest import FIG1, FIG6
from gaudin_hopf import momentum as mm
from gaudin_hopf.model import DomainError, ModelParams
from gaudin_hopf.momentum import EventKind, PointType

SQ2 = math.sqrt(2)


@pytest.fixture(scope="module")
def fig6_events():
    return mm.detect_events(FIG6, (-2.0, 2.5))


def test_reduced_hamiltonian_examples():
    assert mm.reduced_hamiltonian(FIG6.with_t4(Fraction(-7, 8)), 0, 0, 1) == pytest.approx(0.5, abs=1e-14)
    assert mm.reduced_hamiltonian(FIG6.with_t4(Fraction(3, 8)), 0, 0, -1) == pytest.approx(-0.5, abs=1e-14)


@pytest.mark.parametrize("t4", [-2.0, -0.875, 0.0, 0.375, 1.7])
@pytest.mark.parametrize("branch", [1, -1])
def test_criticality_vanishes_at_center(t4, branch):
    assert mm.criticality_function(FIG6, t4, 0.0, 0.0, branch) == pytest.approx(0, abs=1e-14)


def test_printed_displays_match_derivatives():
    rng = np.random.default_rng(0)
    for _ in range(30):
        t4, j = rng.uniform(-2, 2), rng.uniform(-2.5, 2.5)
        lo, hi = mm.k_interval(FIG6, j)
        K = rng.uniform(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo))
        for b in (1, -1):
            assert mm.printed_F(t4, j, K, b) == pytest.approx(-8 * mm.criticality_function(FIG6, t4, j, K, b),
                                                            rel=1e-10, abs=1e-12)
        hkk, _ = mm.reduced_hessian(FIG6, t4, j, K, -1)
        assert mm.printed_G(t4, j, K) == pytest.approx(hkk, rel=1e-10, abs=1e-12)


def test_printed_f_center():
    assert mm.printed_f(0, 0) == 0.125


def test_printed_G_zeros():
    assert mm.printed_G(0.375, 0, 0) == pytest.approx(0, abs=1e-15)
    assert mm.reduced_hessian(FIG6, -0.875, 0, 0, 1)[0] == pytest.approx(0, abs=1e-14)


def test_cusp_at_birth():
    pts = mm.critical_points(FIG6, -0.875, 0.0)
    assert any(p.type is PointType.Cusp and abs(p.K) < 1e-8 and p.branch == 1 for p in pts)


def test_tangential_collision_root_found():
    pts = mm.critical_points(FIG6, 0.5, SQ2 / 2)
    assert any(abs(p.K + 3 * SQ2 / 2) < 1e-6 and abs(p.H + 0.5) < 1e-8 and p.type is PointType.Cusp for p in pts)


def test_critical_points_need_t3():
    with pytest.raises(DomainError):
        mm.critical_points(ModelParams(), 0.0, 0.0)


def test_fig1d_single_flap():
    fig = mm.figure_data(FIG1, Fraction(-3, 2), occupancy=False)
    hyp = [c for c in fig.curves if c.type is PointType.HyperbolicRegular]
    assert len(hyp) == 1 and len(fig.cusps) == 2
    assert mm.hyperbolic_segments_have_cusp_ends(fig)
    assert mm.segment_labels(fig) == ["flap"]
    # the flap sits opposite m2's value: m2 is the nearest rank-0 value
    dists = {m.label: np.min(np.hypot(hyp[0].points[:, 0] - m.J, hyp[0].points[:, 1] - m.H)) for m in fig.rank0}
    assert min(dists, key=dists.get) == "m2"


@pytest.mark.parametrize("t4,labels", [(-1.5, ["pleat"]), (0.495, ["flap", "flap", "pleat"]),
                                       (1.51, ["pleat"] * 3), (2.0, ["pleat"])])
def test_fig6_labels(t4, labels):
    fig = mm.figure_data(FIG6, t4, occupancy=False)
    assert mm.segment_labels(fig) == labels
    assert len(fig.cusps) == 2 * len(labels)
    assert mm.hyperbolic_segments_have_cusp_ends(fig)


def test_occupancy_J_extent_and_containment():
    fig = mm.figure_data(FIG6, 0.495, resolution=256)
    occ = fig.occupancy
    cols = np.flatnonzero(occ.bitmap.any(axis=0))
    cw = (occ.J_range[1] - occ.J_range[0]) / occ.shape[1]
    J_lo = occ.J_range[0] + cols[0] * cw
    J_hi = occ.J_range[0] + (cols[-1] + 1) * cw
    assert abs(J_lo + 3) <= cw and abs(J_hi - 3) <= cw
    for c in fig.curves:
        assert occ.contains(c.points[:, 0], c.points[:, 1], slack=1).all()
    assert (occ.multiplicity >= 2).any()


def test_rank0_markers_classes():
    marks = {m.label: m.kind for m in mm.rank0_markers(FIG6, 0.0)}
    assert marks == {"m0": "focus-focus", "m1": "elliptic-elliptic", "m2": "focus-focus", "m3": "elliptic-elliptic"}


def test_events_table(fig6_events):
    ev = fig6_events
    expected = [(-0.875, 0.0, 0.5), (0.375, 0.0, -0.5), (0.5, -SQ2 / 2, -0.5), (0.5, SQ2 / 2, -0.5),
                (1.5, -3 * SQ2 / 2, -0.5), (1.5, 3 * SQ2 / 2, -0.5)]
    for t4, j, H in expected:
        assert min(max(abs(e.t4 - t4), abs(e.j - j), abs(e.H - H)) for e in ev) <= 1e-6
    kinds = {(round(e.t4, 6), e.kind) for e in ev}
    assert (-0.875, EventKind.CuspBirthDeath) in kinds
    assert (0.375, EventKind.CuspBirthDeath) in kinds
    assert (0.5, EventKind.CuspCollision) in kinds
    assert (1.5, EventKind.PleatSplit) in kinds
    assert all(e.confirmed for e in ev)


def test_hopf_events(fig6_events):
    hopf = sorted((e.t4, e.kind) for e in fig6_events if e.kind.value.startswith("hopf"))
    assert len(hopf) == 4
    for t4, kind in hopf:
        assert abs(abs(t4) - SQ2 / 3) <= 1e-12
        assert kind is (EventKind.HopfSub if t4 > 0 else EventKind.HopfSuper)


def test_late_cusp_pair(fig6_events):
    # frozen [DERIVED] value: the two small pleats vanish in a cusp birth/death pair
    late = [e for e in fig6_events if e.t4 > 1.5 + 1e-3]
    assert len(late) == 2
    for e in late:
        assert e.kind is EventKind.CuspBirthDeath
        assert e.t4 == pytest.approx(1.549510807, abs=1e-8)
        assert abs(e.j) == pytest.approx(2.304869876, abs=1e-8)
        assert e.H == pytest.approx(-0.471404521, abs=1e-8)


def test_event_kind_filter():
    ev = mm.detect_events(FIG6, (-2.0, 0.0), kinds=["cusp-birth-death"])
    assert [e.kind for e in ev] == [EventKind.CuspBirthDeath]
    assert ev[0].t4 == pytest.approx(-0.875, abs=1e-9)


def test_criticality_function_matches_finite_differences():
    rng = np.random.default_rng(8)
    h = 1e-6
    worst = 0.0
    for _ in range(1000):
        t4, j = rng.uniform(-2, 2), rng.uniform(-2.8, 2.8)
        lo, hi = mm.k_interval(FIG6, j)
        K = rng.uniform(lo + 0.1 * (hi - lo), hi - 0.1 * (hi - lo))
        b = int(rng.choice([-1, 1]))
        p = FIG6.with_t4(t4)
        fd = (mm.reduced_hamiltonian(p, j, K + h, b) - mm.reduced_hamiltonian(p, j, K - h, b)) / (2 * h)
        an = mm.criticality_function(FIG6, t4, j, K, b)
        worst = max(worst, abs(fd - an) / max(abs(an), 1e-2))
    assert worst <= 1e-6


@pytest.mark.parametrize("params,t4", [(FIG6, 0.495), (FIG6, -1.5), (FIG1, -1.5)])
def test_critical_points_inside_occupancy(params, t4):
    fig = mm.figure_data(params, t4, resolution=256)
    for j in np.linspace(-2.9, 2.9, 23) * (params.R1 + params.R2) / 3:
        for cp in mm.critical_points(params, t4, float(j)):
            assert fig.occupancy.contains(cp.j, cp.H, slack=1)


def test_events_stable_under_coarser_scan(fig6_events):
    coarse = mm.detect_events(FIG6, (-2.0, 2.5), seed_grid=60)
    for e in fig6_events:
        assert min(max(abs(c.t4 - e.t4), abs(c.j - e.j), abs(c.H - e.H)) for c in coarse) <= 1e-6
