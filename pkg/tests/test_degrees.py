from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import monomial_reps
from stringgrass import (
    REGULAR,
    Ap1Family,
    Arrow,
    DegreeAssignment,
    Infeasible,
    MissingDegree,
    NotOrientableString,
    Quiver,
    Representation,
    build_ap1_module,
    build_coefficient_quiver,
    classify_string,
    search_degrees,
    solve_degrees,
    string_degrees,
    table1_fixture,
    verify_degrees,
)

ONE = Fraction(1)


def id_and_swap():
    q = Quiver((1, 2), (Arrow("a", 1, 2), Arrow("b", 1, 2)))
    return Representation(
        q, (2, 2), {"a": ((1, 1, ONE), (2, 2, ONE)), "b": ((2, 1, ONE), (1, 2, ONE))}
    )


def cq_of(row):
    return build_coefficient_quiver(table1_fixture(row))


def test_row3_hand_choice():
    cq = cq_of(3)
    deg = DegreeAssignment(
        {(1, 1): 0, (1, 2): 1, (2, 1): 0, (2, 2): 1, (3, 1): 0},
        {"a": 0, "b": 0, "c": 1},
    )
    assert verify_degrees(cq, deg)


def test_row4_hand_choice():
    cq = cq_of(4)
    deg = DegreeAssignment({(1, 1): 1, (1, 2): 0, (2, 1): 1, (2, 2): 0}, {"a": 0, "b": 1})
    assert verify_degrees(cq, deg)


def test_row5_zero_arrow_degrees_fail():
    cq = cq_of(5)
    flat = DegreeAssignment({(1, b): 0 for b in range(1, 5)}, {"a": 0, "b": 0})
    assert not verify_degrees(cq, flat)
    chain = DegreeAssignment({(1, b): b for b in range(1, 5)}, {"a": 1, "b": 1})
    assert verify_degrees(cq, chain)


def test_row6_has_degrees_though_not_orientable():
    rep = table1_fixture(6)
    assert not classify_string(rep).is_orientable
    cq = build_coefficient_quiver(rep)
    hand = DegreeAssignment({(1, 1): 0, (1, 2): 1, (1, 3): 3, (1, 4): 2}, {"a": 1, "b": 2})
    assert verify_degrees(cq, hand)
    found = solve_degrees(cq)
    assert found and verify_degrees(cq, found)


def test_string_degrees_need_orientable():
    with pytest.raises(NotOrientableString):
        string_degrees(classify_string(table1_fixture(6)))
    with pytest.raises(NotOrientableString):
        string_degrees(classify_string(table1_fixture(2)))


def test_row5_chain_position_degrees():
    deg = string_degrees(classify_string(table1_fixture(5)))
    assert deg.vertex_degree == {(1, 1): 1, (1, 2): 2, (1, 3): 3, (1, 4): 4}
    assert deg.arrow_degree == {"a": 1, "b": 1}


def test_id_and_swap_infeasible():
    cq = build_coefficient_quiver(id_and_swap())
    res = solve_degrees(cq)
    assert isinstance(res, Infeasible)
    assert not res
    assert ((2, 1), (2, 2)) in res.forced_pairs
    assert ((1, 1), (1, 2)) in res.forced_pairs
    assert res.witness in res.forced_pairs
    assert search_degrees(cq) is None


def test_row2_parallel_arrows_solved():
    cq = cq_of(2)
    res = solve_degrees(cq)
    assert res and res.arrow_degree["a"] == res.arrow_degree["b"]


def test_missing_degree():
    cq = cq_of(4)
    with pytest.raises(MissingDegree):
        verify_degrees(cq, DegreeAssignment({(1, 1): 0}, {"a": 0, "b": 1}))
    full = {(1, 1): 0, (1, 2): 1, (2, 1): 0, (2, 2): 1}
    with pytest.raises(MissingDegree):
        verify_degrees(cq, DegreeAssignment(full, {"a": 0}))


def test_regular_chain_gets_consecutive_degrees():
    cls = classify_string(build_ap1_module(Ap1Family(4, 3, REGULAR)))
    deg = string_degrees(cls)
    assert sorted(deg.vertex_degree.values()) == list(range(1, 16))
    assert verify_degrees(build_coefficient_quiver(build_ap1_module(Ap1Family(4, 3, REGULAR))), deg)


def test_table_rows_solve(table_row):
    row, rep = table_row
    res = solve_degrees(build_coefficient_quiver(rep))
    assert res
    assert verify_degrees(build_coefficient_quiver(rep), res)


@settings(max_examples=150, deadline=None)
@given(monomial_reps(max_vertices=3, max_dim=3, max_arrows=3, max_basis=6))
def test_solver_sound_and_complete(rep):
    cq = build_coefficient_quiver(rep)
    res = solve_degrees(cq)
    brute = search_degrees(cq)
    if res:
        assert verify_degrees(cq, res)
        assert brute is not None
    else:
        assert brute is None
        a, b = res.witness
        assert a[0] == b[0]
    if brute is not None:
        assert verify_degrees(cq, brute)


@settings(max_examples=100, deadline=None)
@given(monomial_reps(max_basis=10))
def test_orientable_strings_have_degrees(rep):
    cls = classify_string(rep)
    if cls.is_string and cls.is_orientable:
        cq = build_coefficient_quiver(rep)
        assert verify_degrees(cq, string_degrees(cls))
        assert solve_degrees(cq)


@settings(max_examples=60, deadline=None)
@given(monomial_reps())
def test_shift_keeps_validity(rep):
    cq = build_coefficient_quiver(rep)
    res = solve_degrees(cq)
    if not res:
        return
    shifted = DegreeAssignment({v: d + 7 for v, d in res.vertex_degree.items()}, res.arrow_degree)
    assert verify_degrees(cq, shifted)


def test_to_dict_names():
    d = string_degrees(classify_string(table1_fixture(5))).to_dict()
    assert d == {
        "vertex_degrees": {"1.1": 1, "1.2": 2, "1.3": 3, "1.4": 4},
        "arrow_degrees": {"a": 1, "b": 1},
    }
