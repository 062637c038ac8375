"""
Integral formula for Kostka numbers and the estimates for the family
(2^{m+2}).

    K(a_1, ..., a_m) = 2/pi * integral_0^pi prod_i lambda_{a_i}(theta)
                       sin^2(theta) d theta

The integrand is a trigonometric polynomial of degree sum(a) + 2, so a
modest Gauss-Legendre rule reproduces the exact count.

For conditions (2^{m+2}), with lambda = lambda_2 = 1 + 2 cos(2 theta) and
F(theta) = 2 cos(4 theta) - cos(6 theta) - 1,

    K(2^m, 4) - K(2^m, 1, 1) = 1/pi * integral_0^pi lambda^m F d theta,

and the sign of the difference for large m follows from comparing the
integral over [0, pi/12], where F >= 0, with the absolute integral over
[pi/12, pi/3].
"""
import logging
import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

import numpy as np
import pandas as pd
from scipy.integrate import quad

from schublines.kostka import ProblemLike, as_conditions, is_valid, kostka
from schublines.spectral.config import SpectralConfig, SpectralIntegralConfig
from schublines.spectral.eigen import lambda_eval
from schublines.spectral.quadrature import integrate
from schublines.utils.constants import SPECTRAL_PREFIX
from schublines.utils.errors import InvalidProblem, PreconditionViolation

logger = logging.getLogger(__name__)

PLOT_FUNCTIONS = ("F", "lambda", "product")

@dataclass(frozen=True)
class QuadratureResult:
    """
    Estimate of a Kostka integral.

    Attributes:
    - value (float): the quadrature estimate.
    - nodes (int): number of quadrature points used.
    - exact (int, optional): the exact count, when known.
    - abs_residual (float, optional): |value - exact|, set when `exact` is.
    """
    value: float
    nodes: int
    exact: Optional[int]=None
    abs_residual: Optional[float]=None

    def __post_init__(self):
        if self.nodes < 1:
            raise ValueError(f"nodes must be positive, got {self.nodes}")
        if self.exact is not None and self.abs_residual is None:
            object.__setattr__(
                self, "abs_residual", abs(self.value - self.exact)
            )

    @property
    def rounded(self) -> int:
        return int(round(self.value))

    @property
    def recovers_exact(self) -> bool:
        return self.exact is not None and self.abs_residual < 0.5

def kostka_integrand(conditions, theta: np.ndarray,
                     config: SpectralConfig=None) -> np.ndarray:
    out = np.sin(theta) ** 2
    for a in conditions:
        out = out * lambda_eval(a, theta, config)
    return out

def kostka_integral(
    p: ProblemLike,
    nodes: Optional[int]=None,
    rule: Optional[str]=None,
    with_exact: bool=True,
    config: Optional[SpectralConfig]=None,
    **kwargs
) -> QuadratureResult:
    """
    Quadrature estimate of K(p) from the integral formula.

    Parameters:
    - p (ProblemLike): a valid problem.
    - nodes (int, optional): node count; defaults to `config.default_nodes`.
    - rule (str, optional): defaults to `config.spi_rule`.
    - with_exact (bool): also compute the exact count and the residual.
    - config (SpectralConfig, optional): built from the `spi_` prefixed
    keyword arguments when missing.
    - **kwargs: `spi_` prefixed SpectralConfig fields.

    Raises:
    - InvalidProblem: If `p` is not valid.
    - TypeError: If a keyword argument is not a `spi_` field.

    Example:
    result = kostka_integral((1, 1, 1, 1))
    result.rounded, result.abs_residual < 1e-12
    # (2, True)
    """
    unknown = [k for k in kwargs if not k.startswith(f"{SPECTRAL_PREFIX}_")]
    if unknown:
        raise TypeError(f"unexpected keyword arguments {unknown}")
    if config is None:
        config = SpectralIntegralConfig(**kwargs)
    conditions = as_conditions(p)
    if not is_valid(conditions):
        raise InvalidProblem(
            f"invalid problem: {list(conditions)} has an entry larger "
            "than n - 1"
        )
    if nodes is None:
        nodes = config.default_nodes(conditions)
    if rule is None:
        rule = config.spi_rule

    value, used = integrate(
        lambda t: kostka_integrand(conditions, t, config),
        nodes, 0.0, np.pi, rule=rule, panel_size=config.spi_panel_size
    )
    value = 2 / np.pi * value
    exact = kostka(conditions) if with_exact else None
    result = QuadratureResult(value=value, nodes=used, exact=exact)
    logger.debug("integral %s: %r with %d nodes", list(conditions),
                 value, used)
    return result

def F_eval(theta):
    """
    F(theta) = 2 cos(4 theta) - cos(6 theta) - 1, vectorized.

    Example:
    F_eval(np.pi / 4)
    # -3.0
    """
    theta = np.asarray(theta, dtype=float)
    out = 2 * np.cos(4 * theta) - np.cos(6 * theta) - 1
    if out.ndim == 0:
        return float(out)
    return out

def lambda2(theta):
    """lambda_2(theta) = 1 + 2 cos(2 theta), on the whole real line."""
    theta = np.asarray(theta, dtype=float)
    out = 1 + 2 * np.cos(2 * theta)
    if out.ndim == 0:
        return float(out)
    return out

def difference_integrand(m: int, theta):
    return lambda2(theta) ** m * F_eval(theta)

def difference_integral_a2(
    m: int,
    nodes: Optional[int]=None,
    rule: str="midpoint"
) -> float:
    """
    1/pi * integral_0^pi lambda_2^m F d theta, equal to
    K(2^m, 4) - K(2^m, 1, 1).

    The integrand is a cosine polynomial of degree 2m + 6; the default
    midpoint rule with `2m + 64` nodes integrates it exactly.

    Example:
    round(difference_integral_a2(6))
    # -11
    """
    if m < 0:
        raise PreconditionViolation(f"m must be nonnegative, got {m}")
    if nodes is None:
        nodes = 2 * m + 64
    value, _ = integrate(lambda t: difference_integrand(m, t),
                         nodes, 0.0, np.pi, rule=rule)
    return value / np.pi

class A2Bounds(NamedTuple):
    lhs: float
    rhs: float
    inequality_holds: bool

    @property
    def middle(self) -> float:
        """The absolute integral over [pi/12, pi/3], without 2 pi / 3."""
        return self.rhs - 2 * math.pi / 3

def a2_bound_integrals(m: int) -> A2Bounds:
    """
    Compare integral_0^{pi/12} lambda^m F with
    integral_{pi/12}^{pi/3} |lambda^m F| + 2 pi / 3.

    F vanishes at pi/12 and lambda at pi/3, so neither integrand changes
    sign inside its interval; both are integrated adaptively.

    Example:
    bounds = a2_bound_integrals(14)
    round(bounds.lhs, 1), round(bounds.rhs, 1)
    # (13159.9, 12837.1)
    """
    if m < 1:
        raise PreconditionViolation(f"m must be positive, got {m}")

    lhs, _ = quad(lambda t: difference_integrand(m, t),
                  0.0, math.pi / 12, epsabs=0.0, epsrel=1e-13, limit=200)
    middle, _ = quad(lambda t: abs(difference_integrand(m, t)),
                     math.pi / 12, math.pi / 3,
                     epsabs=0.0, epsrel=1e-13, limit=200)
    rhs = middle + 2 * math.pi / 3
    return A2Bounds(lhs, rhs, lhs > rhs)

def a2_lhs_closed_form_m14() -> float:
    """Exact value of the left integral for m = 14."""
    return 69 / 4 * math.pi + 26374 / 7 * math.sqrt(3) \
        + 1679543168 / 255255

def plot_data(
    function: str,
    m: int=8,
    samples: int=200
) -> pd.DataFrame:
    """
    Samples of F, lambda_2 or lambda_2^m F on a uniform grid of [0, pi/2].

    Returns:
    pd.DataFrame: columns `theta` and `value`.

    Raises:
    - ValueError: If `function` is unknown.
    - PreconditionViolation: If samples < 2 or m < 0.
    """
    if function not in PLOT_FUNCTIONS:
        raise ValueError(
            f"unknown function {function!r}, expected one of {PLOT_FUNCTIONS}"
        )
    if samples < 2:
        raise PreconditionViolation(
            f"need at least 2 samples, got {samples}"
        )
    if m < 0:
        raise PreconditionViolation(f"m must be nonnegative, got {m}")

    theta = np.linspace(0.0, np.pi / 2, samples)
    if function == "F":
        values = F_eval(theta)
    elif function == "lambda":
        values = lambda2(theta)
    else:
        values = difference_integrand(m, theta)
    return pd.DataFrame({"theta": theta, "value": values})
