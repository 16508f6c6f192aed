from fractions import Fraction

import pytest
from hypothesis import strategies as st

from stringgrass import Arrow, Quiver, Representation, table1_fixture


@pytest.fixture(params=[1, 2, 3, 4, 5, 6])
def table_row(request):
    return request.param, table1_fixture(request.param)


@st.composite
def monomial_reps(draw, max_vertices=3, max_dim=3, max_arrows=3, max_basis=10):
    """Small representations whose matrices are partial injections with nonzero rational entries."""
    nv = draw(st.integers(1, max_vertices))
    vertices = tuple(range(1, nv + 1))
    dims = draw(st.lists(st.integers(0, max_dim), min_size=nv, max_size=nv))
    while sum(dims) > max_basis:
        dims[dims.index(max(dims))] -= 1
    na = draw(st.integers(0, max_arrows))
    arrows, mats = [], {}
    for k in range(na):
        s = draw(st.sampled_from(vertices))
        t = draw(st.sampled_from(vertices))
        label = f"a{k}"
        arrows.append(Arrow(label, s, t))
        rows_free = list(range(1, dims[t - 1] + 1))
        entries = []
        for c in range(1, dims[s - 1] + 1):
            if rows_free and draw(st.booleans()):
                r = draw(st.sampled_from(rows_free))
                rows_free.remove(r)
                v = draw(st.sampled_from([1, -1, 2, Fraction(1, 3)]))
                entries.append((r, c, Fraction(v)))
        mats[label] = tuple(entries)
    return Representation(Quiver(vertices, tuple(arrows)), tuple(dims), mats)


def direct_sum(m: Representation, n: Representation) -> Representation:
    """Block-diagonal sum of two representations of the same quiver."""
    assert m.quiver == n.quiver
    mats = {}
    for a in m.quiver.arrows:
        shift_r, shift_c = m.dim(a.target), m.dim(a.source)
        mats[a.label] = m.matrices[a.label] + tuple(
            (r + shift_r, c + shift_c, v) for r, c, v in n.matrices[a.label]
        )
    dims = tuple(x + y for x, y in zip(m.dims, n.dims))
    return Representation(m.quiver, dims, mats)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in module.RESULTS:
        terminalreporter.write_line(line)
