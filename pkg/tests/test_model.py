import json
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from smoothconst.model import (
    CanonicalProblem,
    HomogeneousPower,
    InverseOnePlusR2,
    OnePlusR2Quarter,
    OnePlusRhoOverTwoRho,
    PowerDispersion,
    PowerPsi,
    PowerSymbol,
    ProblemError,
    ScaledIndicator,
    SmoothingTriple,
    SqrtOnePlusR,
    SqrtOnePlusR2OverTwoRho,
    TabulatedPsi,
    TabulatedWeight,
    TrigModulated,
    UnsupportedCombinationError,
    canonicalize,
    nu,
    triple_from_dict,
    triple_from_json,
    triple_to_dict,
    weight_l1_norm,
)


def test_nu():
    assert nu(3, 0) == 0.5
    assert nu(5, 0) == 1.5
    assert nu(2, 1) == 1.0


def _sigma_numeric(psi, phi, rho):
    # psi(rho)^2 / |phi'(rho)| straight from the definitions
    return psi.coeff ** 2 * rho ** (2 * psi.a) / abs(phi.coeff * phi.exponent * rho ** (phi.exponent - 1))


@pytest.mark.parametrize("a", [-0.4, -0.1, 0.0, 0.2, 0.45])
def test_homogeneous_canonical_form(a):
    psi, phi = PowerPsi(a), PowerDispersion()
    p = canonicalize(SmoothingTriple(3, HomogeneousPower(2 * (1 - a)), psi, phi))
    assert p.sigma == PowerSymbol(0.5, round(2 * a - 1, 15) + 0.0)
    rho = np.geomspace(1e-2, 1e2, 9)
    np.testing.assert_allclose(p.sigma(rho), _sigma_numeric(psi, phi, rho), rtol=1e-14)


def test_inhomogeneous_canonical_form():
    p = canonicalize(SmoothingTriple(3, InverseOnePlusR2(), PowerPsi(0.5)))
    assert p.sigma == PowerSymbol(0.5, 0.0)


def test_non_power_smoothing_symbols():
    s1 = canonicalize(SmoothingTriple(3, InverseOnePlusR2(), SqrtOnePlusR())).sigma
    s2 = canonicalize(SmoothingTriple(5, InverseOnePlusR2(), OnePlusR2Quarter())).sigma
    assert isinstance(s1, OnePlusRhoOverTwoRho)
    assert isinstance(s2, SqrtOnePlusR2OverTwoRho)
    rho = np.geomspace(1e-3, 1e3, 13)
    np.testing.assert_allclose(s1(rho), (1 + rho) / (2 * rho), rtol=1e-15)
    np.testing.assert_allclose(s2(rho), np.sqrt(1 + rho ** 2) / (2 * rho), rtol=1e-15)


def test_equivalent_pairs_share_representative():
    # sigma = 1/2 from four different (psi, phi) pairs
    w = InverseOnePlusR2()
    pairs = [
        (PowerPsi(0.5), PowerDispersion()),
        (PowerPsi(0.5, 2.0), PowerDispersion(4.0, 2.0)),
        (PowerPsi(1.0), PowerDispersion(2.0 / 3.0, 3.0)),
        (PowerPsi(0.0, math.sqrt(0.5)), PowerDispersion(1.0, 1.0)),
    ]
    reps = {canonicalize(SmoothingTriple(3, w, psi, phi)) for psi, phi in pairs}
    assert reps == {CanonicalProblem(3, w, PowerSymbol(0.5, 0.0))}


@settings(max_examples=200, deadline=None)
@given(st.floats(-0.9, 0.9), st.floats(0.1, 10.0), st.floats(0.5, 4.0), st.floats(0.2, 5.0))
def test_equivalence_class_invariance(a, c, p, lam):
    # rescaling psi by lam and phi by lam^2 leaves sigma unchanged, as does
    # trading a power of psi against a power of phi
    base = canonicalize(SmoothingTriple(3, InverseOnePlusR2(), PowerPsi(a, c), PowerDispersion(1.0, p)))
    scaled = canonicalize(SmoothingTriple(3, InverseOnePlusR2(), PowerPsi(a, c * lam),
                                          PowerDispersion(lam ** 2, p)))
    rho = np.array([0.3, 1.0, 7.0])
    np.testing.assert_allclose(scaled.sigma(rho), base.sigma(rho), rtol=1e-13)
    assert abs(scaled.sigma.exponent - base.sigma.exponent) < 1e-13


def test_canonicalize_is_idempotent_through_json():
    t = SmoothingTriple(4, HomogeneousPower(1.2), PowerPsi(0.4, 1.5), PowerDispersion(2.0, 2.0))
    p = canonicalize(t)
    again = canonicalize(triple_from_dict(json.loads(json.dumps(triple_to_dict(t)))))
    assert again == p


@pytest.mark.parametrize("doc", [
    {"d": 3, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5}, "phi": "r2"},
    {"d": 3, "weight": {"kind": "homogeneous_power", "mu": 2.0}, "psi": {"kind": "power", "a": 0.0}, "phi": "r2"},
    {"d": 3, "weight": {"kind": "scaled_indicator", "N": 100.0}, "psi": {"kind": "power", "a": 0.5}, "phi": "r2"},
    {"d": 3, "weight": {"kind": "trig_modulated", "mu": 2.0}, "psi": {"kind": "power", "a": 0.0}, "phi": "r2"},
    {"d": 5, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "sqrt_one_plus_r"}, "phi": "r2"},
    {"d": 3, "weight": {"kind": "tabulated", "r": [0.5, 1.0, 2.0], "w": [0.0, 1.0, 0.0]},
     "psi": {"kind": "tabulated", "r": [0.5, 1.0, 2.0], "psi": [1.0, 1.0, 1.0]}, "phi": "r2"},
    {"d": 3, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5, "coeff": 2.0},
     "phi": {"kind": "power", "coeff": 3.0, "exponent": 1.5}},
])
def test_json_round_trip(doc):
    t = triple_from_json(json.dumps(doc))
    assert triple_to_dict(t) == doc
    assert triple_from_dict(triple_to_dict(t)) == t


@pytest.mark.parametrize("text", [
    "{bad",
    "[]",
    '{"weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5}}',
    '{"d": 3.5, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5}}',
    '{"d": 3, "weight": {"kind": "gaussian"}, "psi": {"kind": "power", "a": 0.5}}',
    '{"d": 3, "weight": {"kind": "homogeneous_power"}, "psi": {"kind": "power", "a": 0.5}}',
    '{"d": 3, "weight": {"kind": "homogeneous_power", "mu": 3}, "psi": {"kind": "power", "a": 0.5}}',
    '{"d": 3, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": "x"}}',
    '{"d": 3, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5}, "phi": "r3"}',
    '{"d": 1, "weight": {"kind": "inverse_one_plus_r2"}, "psi": {"kind": "power", "a": 0.5}}',
])
def test_malformed_documents_raise(text):
    with pytest.raises(ProblemError):
        triple_from_json(text)


def test_non_power_psi_needs_r2():
    t = SmoothingTriple(3, InverseOnePlusR2(), SqrtOnePlusR(), PowerDispersion(1.0, 3.0))
    with pytest.raises(UnsupportedCombinationError):
        canonicalize(t)


def test_parameter_validation():
    with pytest.raises(ProblemError):
        ScaledIndicator(1.0)
    with pytest.raises(ProblemError):
        PowerDispersion(1.0, 0.0)
    with pytest.raises(ProblemError):
        TabulatedWeight((1.0, 0.5), (1.0, 1.0))
    with pytest.raises(ProblemError):
        TabulatedWeight((0.5, 1.0), (1.0, -1.0))
    with pytest.raises(ProblemError):
        TabulatedPsi((0.5,), (1.0,))
    with pytest.raises(ProblemError):
        HomogeneousPower(1.0)


def test_l1_norms():
    np.testing.assert_allclose(weight_l1_norm(InverseOnePlusR2()), math.pi / 2, rtol=1e-15)
    for N in (2.0, 10.0, 100.0):
        np.testing.assert_allclose(weight_l1_norm(ScaledIndicator(N)), 1.0, rtol=1e-15)
    assert weight_l1_norm(HomogeneousPower(1.5)) == math.inf
    assert weight_l1_norm(TrigModulated(2.0)) == math.inf


def test_tabulated_l1_norm_of_inverse_square():
    # the missing mass outside [1e-7, 1e7] is about 2e-7
    w = TabulatedWeight.from_function(lambda r: 1 / (1 + r ** 2), 1e-7, 1e7, 32000)
    assert abs(weight_l1_norm(w) - math.pi / 2) <= 1e-6


def test_weight_values():
    r = np.array([0.5, 0.99, 1.0, 1.01, 1.5])
    np.testing.assert_allclose(ScaledIndicator(10.0)(r), [0, 5, 5, 5, 0])
    np.testing.assert_allclose(InverseOnePlusR2()(r), 1 / (1 + r ** 2))
    np.testing.assert_allclose(TrigModulated(2.0)(r), r ** -2 * (2 - np.cos(r)))
    tab = TabulatedWeight((1.0, 2.0), (1.0, 3.0))
    np.testing.assert_allclose(tab(np.array([0.5, 1.5, 2.5])), [0.0, 2.0, 0.0])
