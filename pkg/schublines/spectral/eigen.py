"""
Eigenvalues and eigenvectors of the Clebsch-Gordan operators.

In the basis {e_j}, multiplication by e_a is an infinite 0/1 Toeplitz-like
matrix M_a. For every angle theta, v(theta) = (sin theta, sin 2 theta, ...)
is an eigenvector of M_a with eigenvalue

    lambda_a(theta) = sin((a + 1) theta) / sin(theta) = U_a(cos theta),

and the vectors v(theta) decompose the basis:

    e_j = 2/pi * integral_0^pi sin((j + 1) theta) v(theta) d theta.

This module checks both facts numerically at finite truncation.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np
from scipy.special import eval_chebyu

from schublines.spectral.config import SpectralConfig
from schublines.spectral.quadrature import integrate
from schublines.utils.errors import \
    DomainError, PreconditionViolation, TruncationTooSmall

ArrayLike = Union[float, np.ndarray]

def lambda_eval(
    a: int,
    theta: ArrayLike,
    config: SpectralConfig=None
) -> ArrayLike:
    """
    lambda_a(theta) = sin((a + 1) theta) / sin(theta) on [0, pi].

    Angles above pi/2 are folded with lambda_a(pi - x) = (-1)^a lambda_a(x);
    within `spi_endpoint_tol` of the endpoints the Chebyshev polynomial
    U_a(cos theta) is evaluated instead of the ratio.

    Raises:
    - DomainError: If an angle lies outside [0, pi].

    Example:
    lambda_eval(5, 0.0)
    # 6.0
    """
    if config is None:
        config = SpectralConfig()
    if a < 0:
        raise PreconditionViolation(f"negative weight: {a}")

    scalar = np.ndim(theta) == 0
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    if np.any((theta < 0) | (theta > np.pi)) or np.any(np.isnan(theta)):
        raise DomainError(f"angle outside [0, pi] in lambda_{a}")

    folded = theta > np.pi / 2
    x = np.where(folded, np.pi - theta, theta)
    sign = np.where(folded, (-1.0) ** a, 1.0)

    near = x < config.spi_endpoint_tol
    out = np.empty_like(x)
    out[near] = eval_chebyu(a, np.cos(x[near]))
    out[~near] = np.sin((a + 1) * x[~near]) / np.sin(x[~near])
    out = sign * out

    if scalar:
        return float(out[0])
    return out

@dataclass(frozen=True)
class TruncatedToeplitz:
    """
    The top-left `size` x `size` window of M_a.

    Entry (b, j) is 1 iff |b - a| <= j <= b + a and j = b + a mod 2.

    Example:
    TruncatedToeplitz(2, 4).entries
    # array([[0, 0, 1, 0],
    #        [0, 1, 0, 1],
    #        [1, 0, 1, 0],
    #        [0, 1, 0, 1]])
    """
    a: int
    size: int

    def __post_init__(self):
        if self.a < 0:
            raise PreconditionViolation(f"negative weight: {self.a}")
        if self.size < 1:
            raise PreconditionViolation(
                f"truncation must be positive, got {self.size}"
            )

    @cached_property
    def entries(self) -> np.ndarray:
        b = np.arange(self.size)[:, None]
        j = np.arange(self.size)[None, :]
        mask = (j >= np.abs(b - self.a)) & (j <= b + self.a) \
            & ((j - b - self.a) % 2 == 0)
        return mask.astype(np.int64)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.entries, self.entries.T))

    @property
    def interior_rows(self) -> np.ndarray:
        """Rows b with b + a < size, untouched by the truncation."""
        return np.arange(max(self.size - self.a, 0))

    def matvec(self, v: np.ndarray) -> np.ndarray:
        return self.entries @ v

def sine_vector(theta: float, size: int) -> np.ndarray:
    """v(theta) truncated: (sin theta, sin 2 theta, ..., sin(size theta))."""
    return np.sin(np.arange(1, size + 1) * theta)

def eigen_residual(a: int, theta: float, size: int) -> float:
    """
    Largest deviation |(M_a v)_b - lambda_a(theta) v_b| over the interior
    rows of the truncation of M_a.

    Raises:
    - TruncationTooSmall: If size <= a + 2.
    - DomainError: If theta lies outside [0, pi].
    """
    if size <= a + 2:
        raise TruncationTooSmall(
            f"truncation {size} must exceed a + 2 = {a + 2}"
        )
    operator = TruncatedToeplitz(a, size)
    v = sine_vector(theta, size)
    rows = operator.interior_rows
    residual = operator.matvec(v)[rows] - lambda_eval(a, theta) * v[rows]
    return float(np.max(np.abs(residual)))

def basis_reconstruction_residual(
    j: int,
    k: int,
    nodes: int,
    rule: str="midpoint"
) -> float:
    """
    |2/pi * integral_0^pi sin((j+1) theta) sin((k+1) theta) d theta
    - delta_jk|, the k-th component of the decomposition of e_j.

    Raises:
    - PreconditionViolation: If nodes < j + k + 2.
    """
    if nodes < j + k + 2:
        raise PreconditionViolation(
            f"need at least j + k + 2 = {j + k + 2} nodes, got {nodes}"
        )
    value, _ = integrate(
        lambda t: np.sin((j + 1) * t) * np.sin((k + 1) * t),
        nodes, 0.0, np.pi, rule=rule
    )
    return abs(2 / np.pi * value - (1.0 if j == k else 0.0))

def eigenvector_coefficient_residual(
    a: int,
    j: int,
    nodes: int,
    rule: str="midpoint"
) -> float:
    """
    Componentwise check of M_a(e_0) = 2/pi * integral_0^pi sin(theta)
    lambda_a(theta) v(theta) d theta: returns the deviation of the j-th
    component from the j-th coordinate of e_a.

    Raises:
    - PreconditionViolation: If nodes < a + j + 2.
    """
    if nodes < a + j + 2:
        raise PreconditionViolation(
            f"need at least a + j + 2 = {a + j + 2} nodes, got {nodes}"
        )
    value, _ = integrate(
        lambda t: np.sin(t) * lambda_eval(a, t) * np.sin((j + 1) * t),
        nodes, 0.0, np.pi, rule=rule
    )
    return abs(2 / np.pi * value - (1.0 if j == a else 0.0))
