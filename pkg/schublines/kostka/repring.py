"""
Representation ring of sl2 and the Clebsch-Gordan operators.

The ring has the basis e_j = [V_j], j >= 0. Multiplication by e_a is the
operator M_a with

    M_a(e_b) = e_{b+a} + e_{b+a-2} + ... + e_{|b-a|}.

`RepRingVector` is the sparse, exact model of a ring element and
`cg_apply` its Clebsch-Gordan product. `cg_step` is the dense realization
used by the counting DP: it works on numpy arrays, with an int64 fast path
when the total mass provably fits and an object (Python int) path
otherwise.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, Mapping, Tuple

import numpy as np

INT64_SAFE_BOUND = 2 ** 62

@dataclass(frozen=True)
class RepRingVector:
    """
    Sparse nonnegative-integer vector over the basis {e_j}.

    Attributes:
    - coeffs (Mapping[int, int]): weight j to multiplicity; zero entries are
    dropped at construction.

    Example:
    v = RepRingVector.basis(1) + RepRingVector.basis(3)
    cg_apply(v, 1).coeffs
    # {0: 1, 2: 2, 4: 1}
    """
    coeffs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        coeffs = {}
        for j, c in dict(self.coeffs).items():
            if j < 0:
                raise ValueError(f"negative weight: {j}")
            if c < 0:
                raise ValueError(f"negative multiplicity {c} at weight {j}")
            if c:
                coeffs[int(j)] = int(c)
        object.__setattr__(self, "coeffs", dict(sorted(coeffs.items())))

    @classmethod
    def basis(cls, j: int) -> "RepRingVector":
        return cls({j: 1})

    def __add__(self, other: "RepRingVector") -> "RepRingVector":
        coeffs = dict(self.coeffs)
        for j, c in other.coeffs.items():
            coeffs[j] = coeffs.get(j, 0) + c
        return RepRingVector(coeffs)

    def __rmul__(self, scalar: int) -> "RepRingVector":
        return RepRingVector({j: scalar * c for j, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepRingVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def coefficient(self, j: int) -> int:
        return self.coeffs.get(j, 0)

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self.coeffs)

    @property
    def parity_classes(self) -> frozenset:
        return frozenset(j % 2 for j in self.coeffs)

    def mul(self, a: int) -> "RepRingVector":
        """Alias of `cg_apply(self, a)`."""
        return cg_apply(self, a)

    def to_dense(self, size: int=None) -> np.ndarray:
        if size is None:
            size = max(self.coeffs, default=-1) + 1
        dense = np.zeros(size, dtype=object)
        for j, c in self.coeffs.items():
            if j < size:
                dense[j] = c
        return dense

def cg_apply(v: RepRingVector, a: int) -> RepRingVector:
    """
    Linear extension of M_a: every e_b maps to
    e_{b+a} + e_{b+a-2} + ... + e_{|b-a|}.

    Example:
    cg_apply(RepRingVector.basis(3), 3).coeffs
    # {0: 1, 2: 1, 4: 1, 6: 1}
    """
    if a < 0:
        raise ValueError(f"negative weight: {a}")

    coeffs: Dict[int, int] = {}
    for b, c in v.coeffs.items():
        for j in range(abs(b - a), b + a + 1, 2):
            coeffs[j] = coeffs.get(j, 0) + c
    return RepRingVector(coeffs)

def parity_prefix_sums(vec: np.ndarray) -> np.ndarray:
    """
    Prefix sums over each parity class: out[k] = vec[k] + vec[k-2] + ...
    """
    out = np.empty_like(vec)
    out[0::2] = np.cumsum(vec[0::2])
    out[1::2] = np.cumsum(vec[1::2])
    return out

def cg_step(vec: np.ndarray, a: int, cap: int) -> np.ndarray:
    """
    Dense Clebsch-Gordan product truncated to the weights 0..cap.

    The coefficient of e_j in M_a(v) is the sum of v_b over
    |j - a| <= b <= j + a with b = j + a mod 2, which is a difference of
    two parity prefix sums.

    Parameters:
    - vec (np.ndarray): dense coefficients indexed by weight.
    - a (int): the weight multiplied in.
    - cap (int): the largest weight kept in the output.

    Returns:
    np.ndarray: dense coefficients of length `cap + 1`, same dtype as `vec`.
    """
    size = len(vec)
    padded_size = max(size, cap + a + 1) + 2
    padded = np.zeros(padded_size, dtype=vec.dtype)
    padded[:size] = vec
    prefix = parity_prefix_sums(padded)

    j = np.arange(cap + 1)
    upper = prefix[j + a]
    low = np.abs(j - a) - 2
    out = upper.copy()
    has_low = low >= 0
    out[has_low] = upper[has_low] - prefix[low[has_low]]
    return out

def total_mass_bound(conditions: Iterable[int]) -> int:
    """
    Upper bound on every coefficient met while multiplying e_0 by the
    conditions: the dimension of the tensor product, prod(a_i + 1).
    """
    bound = 1
    for a in conditions:
        bound *= a + 1
    return bound

def dp_dtype(conditions: Iterable[int]):
    """int64 when the total mass provably fits, object otherwise."""
    if total_mass_bound(conditions) < INT64_SAFE_BOUND:
        return np.int64
    return object
