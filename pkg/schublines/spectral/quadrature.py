"""
Quadrature rules on a closed interval.

Both rules return `(nodes, weights)` numpy arrays, so that an integral is
`weights @ f(nodes)`.

- `gauss_legendre`: composite Gauss-Legendre, the interval split in equal
panels of at most `panel_size` nodes each.
- `midpoint`: composite midpoint rule. On [0, pi] with N nodes it
integrates cos(k theta) exactly for every 0 < k < 2N, hence every cosine
polynomial of degree below 2N.
"""
import math
from typing import Callable, Tuple

import numpy as np

from schublines.spectral.config import QUADRATURE_RULES
from schublines.utils.errors import PreconditionViolation

def gauss_legendre(
    n_nodes: int,
    a: float,
    b: float,
    panel_size: int=64
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Composite Gauss-Legendre nodes and weights on [a, b].

    The node count is rounded up to a multiple of the panel count, so at
    least `n_nodes` nodes are returned.
    """
    if n_nodes < 1:
        raise PreconditionViolation(f"need at least one node, got {n_nodes}")
    n_panels = math.ceil(n_nodes / panel_size)
    per_panel = math.ceil(n_nodes / n_panels)

    t, w = np.polynomial.legendre.leggauss(per_panel)
    edges = np.linspace(a, b, n_panels + 1)
    half = (edges[1:] - edges[:-1]) / 2
    mid = (edges[1:] + edges[:-1]) / 2

    nodes = (mid[:, None] + half[:, None] * t[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights

def midpoint(
    n_nodes: int,
    a: float,
    b: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Composite midpoint nodes and weights on [a, b]."""
    if n_nodes < 1:
        raise PreconditionViolation(f"need at least one node, got {n_nodes}")
    h = (b - a) / n_nodes
    nodes = a + (np.arange(n_nodes) + 0.5) * h
    return nodes, np.full(n_nodes, h)

def quadrature_rule(
    rule: str,
    n_nodes: int,
    a: float,
    b: float,
    panel_size: int=64
) -> Tuple[np.ndarray, np.ndarray]:
    if rule == "gauss-legendre":
        return gauss_legendre(n_nodes, a, b, panel_size)
    if rule == "midpoint":
        return midpoint(n_nodes, a, b)
    raise ValueError(
        f"unknown quadrature rule {rule!r}, expected one of {QUADRATURE_RULES}"
    )

def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    n_nodes: int,
    a: float,
    b: float,
    rule: str="gauss-legendre",
    panel_size: int=64
) -> Tuple[float, int]:
    """
    Integrate a vectorized `f` over [a, b].

    Returns:
    Tuple[float, int]: the estimate and the number of nodes used.
    """
    nodes, weights = quadrature_rule(rule, n_nodes, a, b, panel_size)
    return float(weights @ f(nodes)), len(nodes)
