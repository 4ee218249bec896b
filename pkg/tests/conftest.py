"""Shared strategies: random partial permutations on small cycles."""

from hypothesis import strategies as st

from cycleiso import PartialPerm


def perm_on(n: int):
    """Strategy for one partial permutation of 1..n."""

    def build(data):
        dom, img, k = data
        return PartialPerm(n, tuple(zip(sorted(dom[:k]), img[:k])))

    return st.tuples(
        st.permutations(list(range(1, n + 1))),
        st.permutations(list(range(1, n + 1))),
        st.integers(0, n),
    ).map(build)


@st.composite
def perms(draw, min_n=3, max_n=8):
    return draw(perm_on(draw(st.integers(min_n, max_n))))


@st.composite
def perm_pairs(draw, min_n=3, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return draw(perm_on(n)), draw(perm_on(n))


@st.composite
def perm_triples(draw, min_n=3, max_n=8):
    n = draw(st.integers(min_n, max_n))
    return draw(perm_on(n)), draw(perm_on(n)), draw(perm_on(n))
