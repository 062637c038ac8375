"""
Spectral Integral Configuration: config.py

Configuration Classes:
- SpectralConfig: Quadrature settings of the spectral integrals.
- SpectralIntegralConfig: Builds a SpectralConfig from `spi_` prefixed
keyword arguments.
"""
from dataclasses import dataclass
from typing import Iterable

from schublines.utils import ATTRIBUTE_SEP, SPECTRAL_PREFIX, get_subdictionary

QUADRATURE_RULES = ("gauss-legendre", "midpoint")

@dataclass
class SpectralConfig:
    """
    Spectral Integral Configuration Class

    Attributes:
    - spi_node_factor (int): Default node count is
    `spi_node_factor * sum(conditions) + spi_node_offset`.
    - spi_node_offset (int): See `spi_node_factor`.
    - spi_panel_size (int): Largest number of Gauss-Legendre nodes on one
    panel of the composite rule.
    - spi_endpoint_tol (float): Distance to 0 or pi below which eigenvalues
    are evaluated as Chebyshev polynomials instead of sine ratios.
    - spi_rule (str): Default rule of the full-period integrals,
    "gauss-legendre" or "midpoint".

    Example:
    config = SpectralConfig(spi_panel_size=32)
    config.default_nodes((2, 2, 1, 2, 3))
    # 104
    """
    spi_node_factor: int=4
    spi_node_offset: int=64
    spi_panel_size: int=64
    spi_endpoint_tol: float=1e-6
    spi_rule: str="gauss-legendre"

    def __post_init__(self):
        if self.spi_node_factor < 0 or self.spi_node_offset < 1:
            raise ValueError(
                "node heuristic must give at least one node, got factor "
                f"{self.spi_node_factor} and offset {self.spi_node_offset}"
            )
        if self.spi_panel_size < 1:
            raise ValueError(
                f"spi_panel_size must be positive, got {self.spi_panel_size}"
            )
        if self.spi_rule not in QUADRATURE_RULES:
            raise ValueError(
                f"unknown quadrature rule {self.spi_rule!r}, expected one "
                f"of {QUADRATURE_RULES}"
            )
        self.spi_endpoint_tol = float(self.spi_endpoint_tol)

    def default_nodes(self, conditions: Iterable[int]) -> int:
        return self.spi_node_factor * sum(conditions) + self.spi_node_offset

def SpectralIntegralConfig(**kwargs) -> SpectralConfig:
    return SpectralConfig(
        **get_subdictionary(
            kwargs,
            SPECTRAL_PREFIX, ATTRIBUTE_SEP, False
        )
    )
