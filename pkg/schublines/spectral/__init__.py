from schublines.spectral.config import \
    SpectralConfig, SpectralIntegralConfig, QUADRATURE_RULES
from schublines.spectral.quadrature import \
    gauss_legendre, midpoint, quadrature_rule, integrate
from schublines.spectral.eigen import \
    lambda_eval, TruncatedToeplitz, sine_vector, eigen_residual, \
    basis_reconstruction_residual, eigenvector_coefficient_residual
from schublines.spectral.integral import \
    QuadratureResult, A2Bounds, PLOT_FUNCTIONS, kostka_integral, F_eval, \
    difference_integrand, \
    lambda2, difference_integral_a2, a2_bound_integrals, \
    a2_lhs_closed_form_m14, plot_data
