import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.special import eval_chebyu

from schublines.galois import a2_difference
from schublines.kostka import kostka, partitions
from schublines.spectral import \
    QuadratureResult, SpectralConfig, SpectralIntegralConfig, \
    TruncatedToeplitz, F_eval, a2_bound_integrals, a2_lhs_closed_form_m14, \
    difference_integrand, \
    basis_reconstruction_residual, difference_integral_a2, eigen_residual, \
    eigenvector_coefficient_residual, gauss_legendre, integrate, \
    kostka_integral, lambda2, lambda_eval, midpoint, plot_data, \
    quadrature_rule
from schublines.utils import \
    DomainError, InvalidProblem, PreconditionViolation, TruncationTooSmall

from conftest import valid_conditions_strategy

def test_lambda_endpoints():
    assert lambda_eval(5, 0.0) == pytest.approx(6.0)
    assert lambda_eval(5, math.pi) == pytest.approx(-6.0)
    assert lambda_eval(4, math.pi) == pytest.approx(5.0)
    assert lambda_eval(0, 1.234) == pytest.approx(1.0)
    assert lambda_eval(2, math.pi / 3) == pytest.approx(0.0, abs=1e-12)

@given(st.integers(0, 20), st.floats(0.0, math.pi))
def test_lambda_matches_chebyshev(a, theta):
    assert lambda_eval(a, theta) \
        == pytest.approx(eval_chebyu(a, math.cos(theta)), abs=1e-8)

def test_lambda_is_vectorized():
    theta = np.linspace(0.0, np.pi, 11)
    values = lambda_eval(3, theta)
    assert isinstance(values, np.ndarray) and values.shape == (11,)
    assert isinstance(lambda_eval(3, 0.5), float)

@pytest.mark.parametrize("theta", [-0.1, 3.2, float("nan")])
def test_lambda_domain(theta):
    with pytest.raises(DomainError):
        lambda_eval(2, theta)

def test_truncated_toeplitz():
    operator = TruncatedToeplitz(2, 4)
    assert operator.entries.tolist() == [
        [0, 0, 1, 0],
        [0, 1, 0, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ]
    assert operator.is_symmetric()
    assert list(operator.interior_rows) == [0, 1]
    assert TruncatedToeplitz(5, 30).is_symmetric()

@pytest.mark.parametrize("a", [0, 1, 2, 5, 10])
@pytest.mark.parametrize("theta", [0.0, 0.3, 1.0, math.pi / 2, 2.5, math.pi])
def test_sine_vectors_are_eigenvectors(a, theta):
    assert eigen_residual(a, theta, 128) < 1e-10

def test_eigen_residual_needs_room():
    with pytest.raises(TruncationTooSmall):
        eigen_residual(3, 0.5, 5)
    assert eigen_residual(3, 0.5, 6) < 1e-12

@pytest.mark.parametrize("j, k", [(0, 0), (0, 1), (3, 3), (4, 7), (10, 2)])
def test_basis_reconstruction(j, k):
    assert basis_reconstruction_residual(j, k, j + k + 2) < 1e-12
    with pytest.raises(PreconditionViolation):
        basis_reconstruction_residual(j, k, j + k + 1)

@pytest.mark.parametrize("a, j", [(0, 0), (2, 2), (2, 0), (3, 5), (6, 6)])
def test_eigenvector_coefficients(a, j):
    assert eigenvector_coefficient_residual(a, j, a + j + 2) < 1e-12

def test_rules_integrate_constants():
    for rule in ("gauss-legendre", "midpoint"):
        nodes, weights = quadrature_rule(rule, 100, 0.0, 2.0)
        assert weights.sum() == pytest.approx(2.0)
        assert np.all((nodes > 0.0) & (nodes < 2.0))
    with pytest.raises(ValueError):
        quadrature_rule("simpson", 10, 0.0, 1.0)

def test_gauss_legendre_panels():
    nodes, weights = gauss_legendre(100, 0.0, 1.0, panel_size=64)
    assert len(nodes) == 100
    value = weights @ nodes ** 7
    assert value == pytest.approx(1 / 8, rel=1e-14)
    with pytest.raises(PreconditionViolation):
        gauss_legendre(0, 0.0, 1.0)

def test_midpoint_is_exact_on_cosines():
    value, used = integrate(lambda t: np.cos(9 * t) ** 2, 10, 0.0, np.pi,
                            rule="midpoint")
    assert used == 10
    assert value == pytest.approx(np.pi / 2, abs=1e-13)
    nodes, weights = midpoint(4, 0.0, 1.0)
    assert nodes.tolist() == [0.125, 0.375, 0.625, 0.875]

def test_config():
    config = SpectralConfig()
    assert config.default_nodes((2, 2, 1, 2, 3)) == 104
    with pytest.raises(ValueError):
        SpectralConfig(spi_rule="simpson")
    with pytest.raises(ValueError):
        SpectralConfig(spi_panel_size=0)

def test_kostka_integral_example():
    result = kostka_integral((2, 2, 1, 2, 3))
    assert result.rounded == result.exact == 5
    assert result.abs_residual < 1e-10
    assert result.recovers_exact
    assert result.nodes >= 104

@settings(max_examples=50, deadline=None)
@given(valid_conditions_strategy(max_sum=16))
def test_kostka_integral_recovers_counts(conditions):
    for rule in ("gauss-legendre", "midpoint"):
        result = kostka_integral(conditions, rule=rule)
        assert result.exact == kostka(conditions)
        assert result.abs_residual < 1e-8

def test_kostka_integral_without_exact():
    result = kostka_integral((1, 1, 1, 1), nodes=40, with_exact=False)
    assert result.exact is None and result.abs_residual is None
    assert not result.recovers_exact
    assert result.rounded == 2

def test_kostka_integral_rejects_invalid():
    with pytest.raises(InvalidProblem):
        kostka_integral((4, 2))

def test_quadrature_result_checks_nodes():
    with pytest.raises(ValueError):
        QuadratureResult(value=1.0, nodes=0)

def test_F_and_lambda2():
    assert F_eval(0.0) == pytest.approx(0.0)
    assert F_eval(np.pi / 4) == pytest.approx(-3.0)
    assert F_eval(np.pi / 12) == pytest.approx(0.0, abs=1e-12)
    assert lambda2(np.pi / 3) == pytest.approx(0.0, abs=1e-12)
    assert lambda2(0.0) == 3.0

@pytest.mark.parametrize("m", range(0, 17))
def test_difference_integral(m):
    assert round(difference_integral_a2(m)) == a2_difference(m)

def test_difference_integral_rejects_negative():
    with pytest.raises(PreconditionViolation):
        difference_integral_a2(-1)

def test_a2_bounds_at_fourteen():
    bounds = a2_bound_integrals(14)
    assert bounds.lhs == pytest.approx(a2_lhs_closed_form_m14(), rel=1e-6)
    assert bounds.lhs == pytest.approx(13159.9, abs=0.1)
    assert bounds.rhs == pytest.approx(12837.1, abs=0.1)
    assert bounds.inequality_holds
    assert bounds.middle == pytest.approx(bounds.rhs - 2 * math.pi / 3)

def test_a2_right_bound_closed_form():
    rhs = 63052312 / 17017 * math.sqrt(3) - 613 / 12 * math.pi \
        + 1679543168 / 255255
    assert a2_bound_integrals(14).rhs == pytest.approx(rhs, rel=1e-6)

@pytest.mark.parametrize("m", range(14, 26))
def test_a2_bounds_hold_from_fourteen(m):
    assert a2_bound_integrals(m).inequality_holds

def test_a2_bounds_fail_for_small_m():
    assert not a2_bound_integrals(2).inequality_holds
    with pytest.raises(PreconditionViolation):
        a2_bound_integrals(0)

def test_plot_data():
    frame = plot_data("F", samples=5)
    assert list(frame.columns) == ["theta", "value"]
    assert len(frame) == 5
    assert frame["value"].iloc[0] == pytest.approx(0.0)
    assert frame["value"].iloc[-1] == pytest.approx(2.0)
    product = plot_data("product", m=3, samples=7)
    assert np.allclose(
        product["value"],
        lambda2(product["theta"].to_numpy()) ** 3
        * F_eval(product["theta"].to_numpy())
    )
    with pytest.raises(ValueError):
        plot_data("G")
    with pytest.raises(PreconditionViolation):
        plot_data("lambda", samples=1)

def test_kostka_integral_exhaustive():
    for total in range(2, 21, 2):
        for conditions in partitions(total, total // 2):
            result = kostka_integral(conditions)
            assert result.abs_residual < 1e-6, conditions
            assert result.rounded == result.exact

@pytest.mark.parametrize("m", [0, 1, 4, 9])
def test_difference_integrand_is_symmetric(m):
    theta = np.linspace(0.0, np.pi, 257)
    assert np.allclose(difference_integrand(m, theta),
                       difference_integrand(m, np.pi - theta),
                       rtol=1e-12, atol=1e-12 * 3.0 ** m)

@pytest.mark.parametrize("m", range(14, 25))
def test_a2_bounds_grow_by_at_least_one_plus_root_three(m):
    factor = 1 + math.sqrt(3)
    now, after = a2_bound_integrals(m), a2_bound_integrals(m + 1)
    assert after.lhs >= factor * now.lhs
    assert after.middle <= factor * now.middle

@pytest.mark.parametrize("conditions", [(1, 1, 1, 1), (2, 2, 1, 2, 3),
                                        (3, 3, 3, 3), (4, 4, 2, 2, 2, 2)])
@pytest.mark.parametrize("rule", ["gauss-legendre", "midpoint"])
def test_residual_does_not_grow_when_nodes_double(conditions, rule):
    residuals = [kostka_integral(conditions, nodes=nodes, rule=rule)
                 .abs_residual for nodes in (16, 32, 64, 128, 256)]
    for coarse, fine in zip(residuals, residuals[1:]):
        assert fine <= coarse + 1e-10

def test_spectral_config_from_prefixed_kwargs():
    config = SpectralIntegralConfig(spi_panel_size=8, vw_validate=False)
    assert config.spi_panel_size == 8
    assert config.spi_rule == "gauss-legendre"
    small_panels = kostka_integral((2, 2, 1, 2, 3), spi_panel_size=8)
    assert small_panels.rounded == 5
    assert small_panels.abs_residual < 1e-10
    with pytest.raises(TypeError):
        kostka_integral((1, 1), panel_size=8)
