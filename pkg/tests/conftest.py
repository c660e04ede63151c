import random

import pytest
from hypothesis import strategies as st

from jtalg.terms import L, Mul, R, Var

names = st.sampled_from(["x", "y", "z", "w_0"])

terms = st.deferred(lambda: st.one_of(
    names.map(Var),
    terms.map(L),
    terms.map(R),
    st.tuples(terms, terms).map(lambda ab: Mul(ab[0], ab[1])),
))


@pytest.fixture
def rng():
    return random.Random(0xA11CE)
