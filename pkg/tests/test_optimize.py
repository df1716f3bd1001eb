import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smoothconst import alpha as al
from smoothconst import optimize as opt
from smoothconst import spectral as sp
from smoothconst.model import (
    CanonicalProblem,
    HomogeneousPower,
    InverseOnePlusR2,
    OnePlusR2Quarter,
    OnePlusRhoOverTwoRho,
    PowerDispersion,
    PowerPsi,
    PowerSymbol,
    ScaledIndicator,
    SmoothingTriple,
    SqrtOnePlusR,
    TabulatedPsi,
    TabulatedWeight,
    TrigModulated,
    canonicalize,
)
from smoothconst.verify import RHO0_GOLDEN

HALF = PowerSymbol(0.5, 0.0)


def problem(d, w, psi, phi=None):
    return canonicalize(SmoothingTriple(d, w, psi, phi or PowerDispersion()))


def homogeneous(d, a):
    return problem(d, HomogeneousPower(2 * (1 - a)), PowerPsi(a))


# ------------------------------------------------------------ suprema


def test_sup_homogeneous_is_plateau():
    s = opt.sup_alpha_k(al.make_profile(homogeneous(3, 0.0), 0))
    np.testing.assert_allclose(s.sup, 0.5, rtol=1e-15)
    assert s.location == opt.PLATEAU and s.interval == (0.0, math.inf)


def test_sup_inverse_square_at_infinity():
    s = opt.sup_alpha_k(al.make_profile(CanonicalProblem(3, InverseOnePlusR2(), HALF), 0))
    assert s.location == opt.AT_INFINITY
    np.testing.assert_allclose(s.sup, 0.25, rtol=1e-15)


def test_sup_one_plus_rho_at_zero():
    p = CanonicalProblem(3, InverseOnePlusR2(), OnePlusRhoOverTwoRho())
    s = opt.sup_alpha_k(al.make_profile(p, 0))
    assert s.location == opt.AT_ZERO
    np.testing.assert_allclose(s.sup, 0.5, rtol=1e-15)


def test_sup_trig_plateau_edges():
    p = problem(3, TrigModulated(2.0), PowerPsi(0.0))
    s = opt.sup_alpha_k(al.make_profile(p, 0))
    assert s.location == opt.PLATEAU
    np.testing.assert_allclose(s.sup, 1.0, rtol=1e-15)
    assert s.interval[0] == 0.0
    assert abs(s.interval[1] - 0.5) < 1e-8


def test_sup_interior_maximum_refined():
    s = opt.sup_alpha_k(al.make_profile(CanonicalProblem(3, ScaledIndicator(100.0), HALF), 1))
    assert s.location == opt.INTERIOR
    # golden-section refinement beats every grid value
    grid = al.alpha_k_closed(CanonicalProblem(3, ScaledIndicator(100.0), HALF), 1, np.geomspace(1e-3, 1e3, 2000))
    assert s.sup >= grid.max()
    assert 2 < s.rho < math.pi


# ------------------------------------------------------------ constants


@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_homogeneous_a_zero_constant(d):
    rep = opt.optimal_constant(homogeneous(d, 0.0))
    assert abs(rep.C - math.sqrt(math.pi / (d - 2))) <= 1e-12 * rep.C
    assert rep.attaining_k == 0 and rep.truncation["kind"] == "certified"


@pytest.mark.parametrize("d, a", [(2, 0.2), (3, -0.4), (4, 0.45), (5, -0.1), (6, 0.2), (2, 0.45)])
def test_homogeneous_constant_matches_operator_norm(d, a):
    rep = opt.optimal_constant(homogeneous(d, a))
    c = sp.operator_norm_constant(d, a)
    assert abs(rep.C - c) / c <= 1e-11


@pytest.mark.parametrize("d", [3, 4, 5, 7])
def test_inhomogeneous_constant(d):
    rep = opt.optimal_constant(problem(d, InverseOnePlusR2(), PowerPsi(0.5)))
    assert abs(rep.C - math.sqrt(math.pi / 2)) <= 1e-10
    assert rep.attaining_rho == "at_infinity"


def test_non_power_smoothing_constants():
    w = InverseOnePlusR2()
    np.testing.assert_allclose(opt.optimal_constant(problem(3, w, SqrtOnePlusR())).C, math.sqrt(math.pi), atol=1e-10)
    np.testing.assert_allclose(opt.optimal_constant(problem(3, w, OnePlusR2Quarter())).C, math.sqrt(math.pi), atol=1e-10)
    np.testing.assert_allclose(opt.optimal_constant(problem(5, w, OnePlusR2Quarter())).C, math.sqrt(math.pi / 2), atol=1e-10)
    rep = opt.optimal_constant(problem(5, w, SqrtOnePlusR()))
    sol = opt.solve_rho0()
    assert abs(rep.C - sol.C) <= 1e-8
    assert abs(rep.attaining_rho - sol.rho0) <= 1e-6


def test_scale_consistency_and_reports():
    for p in (homogeneous(3, 0.2), problem(5, InverseOnePlusR2(), SqrtOnePlusR())):
        rep = opt.optimal_constant(p)
        assert rep.C == math.sqrt(2 * math.pi * rep.alpha)
        d = rep.to_dict()
        assert d["per_k"][0]["k"] == 0 and d["truncation"]["kind"] == "certified"


def test_equivalence_invariance():
    w = InverseOnePlusR2()
    a = opt.optimal_constant(problem(5, w, PowerPsi(0.5)))
    b = opt.optimal_constant(problem(5, w, PowerPsi(0.5, 3.0), PowerDispersion(9.0, 2.0)))
    c = opt.optimal_constant(problem(5, w, PowerPsi(1.0), PowerDispersion(2.0 / 3.0, 3.0)))
    assert abs(a.alpha - b.alpha) <= 1e-12 and abs(a.alpha - c.alpha) <= 1e-12
    h1 = opt.optimal_constant(homogeneous(4, 0.2))
    h2 = opt.optimal_constant(problem(4, HomogeneousPower(1.6), PowerPsi(0.2, 2.0), PowerDispersion(4.0, 2.0)))
    assert abs(h1.alpha - h2.alpha) <= 1e-12


def test_divergent_constants():
    # sigma grows at infinity, or rho sigma blows up at zero
    rep = opt.optimal_constant(CanonicalProblem(3, InverseOnePlusR2(), PowerSymbol(0.5, 0.5)))
    assert rep.C == math.inf
    rep = opt.optimal_constant(problem(3, HomogeneousPower(1.5), PowerPsi(0.0)))
    assert rep.C == math.inf


def test_quadrature_path_constant():
    rep = opt.optimal_constant(problem(3, InverseOnePlusR2(), PowerPsi(0.5)), path=al.QUADRATURE)
    assert abs(rep.C - math.sqrt(math.pi / 2)) <= 1e-7


def test_tabulated_problem_constant():
    # a sampled bump weight goes through quadrature and heuristic k truncation
    r = np.linspace(0.5, 1.5, 41)
    w = TabulatedWeight(tuple(r), tuple(np.maximum(0, 1 - 4 * (r - 1) ** 2)))
    rep = opt.optimal_constant(CanonicalProblem(3, w, HALF), k_max=3, n_grid=200)
    assert rep.truncation["kind"] == "heuristic"
    assert 0 < rep.C < math.inf


def test_trig_constant_certified_by_bound():
    rep = opt.optimal_constant(problem(3, TrigModulated(2.0), PowerPsi(0.0)))
    assert rep.alpha == 1.0 and rep.truncation["reason"] == "catalogued_bound"


@pytest.mark.parametrize("p", [
    homogeneous(3, 0.25),
    CanonicalProblem(3, InverseOnePlusR2(), HALF),
    CanonicalProblem(5, InverseOnePlusR2(), OnePlusRhoOverTwoRho()),
    CanonicalProblem(3, ScaledIndicator(100.0), HALF),
    problem(3, TrigModulated(2.0), PowerPsi(0.0)),
])
def test_argmax_stable_under_grid_doubling(p):
    for k in (0, 1):
        if al._closed_form(p, k) is None:
            continue
        prof = al.make_profile(p, k)
        a = opt.sup_alpha_k(prof, n_grid=2000).sup
        b = opt.sup_alpha_k(prof, n_grid=4000).sup
        assert abs(a - b) < 1e-9


def test_three_dimensional_one_plus_rho_profile_decreasing():
    rho = np.linspace(1e-3, 20, 2000)
    vals = al.alpha_k_closed(CanonicalProblem(3, InverseOnePlusR2(), OnePlusRhoOverTwoRho()), 0, rho)
    np.testing.assert_allclose(vals, (1 + rho) * (1 - np.exp(-2 * rho)) / (4 * rho), rtol=1e-13)
    assert np.all(np.diff(vals) < 0)


def test_five_dimensional_quarter_profile_increasing():
    p = problem(5, InverseOnePlusR2(), OnePlusR2Quarter())
    rho = np.geomspace(1e-3, 30, 2000)
    vals = al.alpha_k_closed(p, 0, rho)
    assert np.all(np.diff(vals) > 0)
    s = opt.sup_alpha_k(al.make_profile(p, 0))
    assert s.location == opt.AT_INFINITY and abs(s.sup - 0.25) < 1e-15


# ------------------------------------------------------------ the d = 5 root


def test_upsilon_values():
    assert opt.upsilon(0.0) == 0.0
    np.testing.assert_allclose(opt.upsilon(2.0), 23 * math.sinh(2) - 22 * math.cosh(2), rtol=1e-13)
    assert abs(opt.upsilon(2.0) - 0.649) < 1e-3
    assert opt.upsilon(3.5) < 0
    assert opt.upsilon(3.1) < 0 < opt.upsilon(2.0)


def test_upsilon_branches_agree():
    for r in (0.5, 0.999, 1.0, 1.001, 1.5):
        A = 3 + 2 * r + 2 * r ** 2 + r ** 3
        B = r * (3 + 2 * r + r ** 2)
        np.testing.assert_allclose(opt.upsilon(r), A * math.sinh(r) - B * math.cosh(r), rtol=1e-9, atol=1e-15)


def test_rho0_against_frozen_bisection():
    sol = opt.solve_rho0()
    assert 2 < sol.rho0 < 3
    assert sol.upsilon_residual <= 1e-10
    assert abs(sol.rho0 - RHO0_GOLDEN) <= 4 * np.spacing(RHO0_GOLDEN)
    np.testing.assert_allclose(sol.alpha0, al.alpha_k_closed(problem(5, InverseOnePlusR2(), SqrtOnePlusR()), 0, sol.rho0),
                               rtol=1e-14)
    assert sol.C == math.sqrt(2 * math.pi * sol.alpha0)


# ------------------------------------------------------------ extremisers


def test_extremiser_verdicts():
    assert opt.classify_extremisers(homogeneous(3, 0.25)).kind == "ExistsAllRadialProfiles"
    assert opt.classify_extremisers(problem(3, InverseOnePlusR2(), PowerPsi(0.5))).kind == "NoneByAnalyticity"
    v = opt.classify_extremisers(problem(3, TrigModulated(2.0), PowerPsi(0.0)))
    assert (v.kind, v.k0, v.interval, v.heuristic) == ("ExistsPlateau", 0, (0.0, 0.5), False)
    v = opt.classify_extremisers(problem(3, HomogeneousPower(1.5), PowerPsi(0.0)))
    assert v.kind == "Unknown"


def test_integrable_verdicts_cover_every_degree():
    # the indicator is not analytic but rho sigma is, which is what matters
    v = opt.classify_extremisers(CanonicalProblem(3, ScaledIndicator(10.0), HALF))
    assert v.kind == "NoneByAnalyticity" and "every k" in v.rationale[-1]
    # d = 4: alpha_0 starts and ends at 1/4, so k = 0 needs the grid
    v = opt.classify_extremisers(CanonicalProblem(4, InverseOnePlusR2(), OnePlusRhoOverTwoRho()))
    assert v.kind == "NoneByAnalyticity" and "[0]" in v.rationale[-1]


def test_tabulated_verdict_is_heuristic():
    r = np.linspace(0.5, 1.5, 41)
    w = TabulatedWeight(tuple(r), tuple(np.maximum(0, 1 - 4 * (r - 1) ** 2)))
    p = canonicalize(SmoothingTriple(3, w, TabulatedPsi(tuple(r), tuple(np.sqrt(2 * r)))))
    v = opt.classify_extremisers(p, k_max=2, n_grid=200)
    assert v.heuristic and v.kind == "NoneIsolatedSupremum"
    assert "heuristic k truncation" in v.rationale


# ------------------------------------------------------------ conjecture


def test_counterexample():
    rep = opt.counterexample_report(100)
    assert rep.sup_alpha0 <= 1 / math.pi + 1e-9
    assert not rep.holds
    assert 0 < rep.rho_star < math.pi and rep.alpha1_at_rho_star > 1 / math.pi
    assert rep.xi_at_rho_star > 1


def test_xi():
    np.testing.assert_allclose(opt.xi(math.pi), 1.0, rtol=1e-15)
    h = 1e-6
    assert opt.xi(math.pi + h) < opt.xi(math.pi - h)


def test_smallest_counterexample():
    N, rep = opt.smallest_counterexample_n()
    assert N == 10 and not rep.holds
    assert opt.counterexample_report(2).holds


@settings(max_examples=15, deadline=None)
@given(st.floats(2.0, 1000.0))
def test_indicator_degree_zero_below_one_over_pi(N):
    s = opt.sup_alpha_k(al.make_profile(CanonicalProblem(3, ScaledIndicator(N), HALF), 0))
    assert s.sup <= 1 / math.pi + 1e-9


def test_conjecture_holds_for_monotone_families():
    for p in (homogeneous(3, 0.0), homogeneous(5, -0.4), CanonicalProblem(3, InverseOnePlusR2(), HALF),
              problem(5, InverseOnePlusR2(), SqrtOnePlusR())):
        res = opt.conjecture_check(p)
        assert res.holds and res.reason == "index_monotone"
