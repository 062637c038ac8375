import logging

import pytest
from hypothesis import strategies as st

from schublines.galois import Verifier
from schublines.kostka import is_valid

@pytest.fixture(autouse=True)
def reset_logging():
    yield
    root = logging.getLogger("schublines")
    for handler in list(root.handlers):
        if getattr(handler, "_schublines", False):
            root.removeHandler(handler)
    root.setLevel(logging.NOTSET)

@pytest.fixture
def verifier():
    return Verifier()

@st.composite
def conditions_strategy(draw, max_part=6, max_len=7, max_sum=16):
    """Nonempty condition lists with even sum at most `max_sum`."""
    conditions = draw(st.lists(
        st.integers(min_value=1, max_value=max_part),
        min_size=1, max_size=max_len
    ))
    if sum(conditions) % 2:
        conditions.append(1)
    while sum(conditions) > max_sum:
        conditions = conditions[:-2] if len(conditions) > 2 else [1, 1]
        if sum(conditions) % 2:
            conditions.append(1)
    return tuple(conditions)

@st.composite
def valid_conditions_strategy(draw, **kwargs):
    conditions = draw(conditions_strategy(**kwargs))
    if not is_valid(conditions):
        # Spread the largest entry into ones: same sum, always valid.
        top = max(conditions)
        rest = list(conditions)
        rest.remove(top)
        conditions = tuple(rest) + (1,) * top
    return conditions
