from __future__ import annotations

from hypothesis import strategies as st


@st.composite
def perms(draw, min_size=1, max_size=9):
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    return tuple(draw(st.permutations(range(1, n + 1))))
