import json

import pytest

from solvsph.combdata import (make_triple, triple_from_json, make_torus,
                              torus_from_json, largest_torus, validate,
                              check_reduced, is_reduced, codims)


def test_canonical_form_is_order_independent():
    a = make_triple("A3", [((0, 1, 1), 1), ((1, 1, 0), 1)], [[0, 1]])
    b = make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)], [[1, 0]])
    assert a == b
    assert a.M[0] == (0, 1, 1)   # sorted by (height, coefficients)


def test_make_triple_rejects_bad_input():
    with pytest.raises(ValueError):
        make_triple("A2", [((1, 1), 0), ((1, 1), 1)])
    with pytest.raises(ValueError):
        make_triple("A2", [((1, 1), 0)], classes=[[0, 1]])


def test_json_round_trip():
    t = make_triple("B3", [((0, 1, 2), 1), ((1, 0, 0), 0)])
    again = triple_from_json(t.to_json())
    assert again == t
    data = json.loads(t.to_json())
    assert data["system"] == "B3"
    assert {"root": [1, 0, 0], "pi": 0} in data["M"]


def test_validate_accepts_table_rows():
    t = make_triple("A2", [((1, 1), 0)])
    rep = validate(t, largest_torus(t))
    assert rep.ok
    assert set(rep.conditions) == {"A", "D", "E", "C", "T"}


def test_validate_rejects_bad_pi():
    t = make_triple("B2", [((1, 2), 1)])   # doubled node cannot carry pi
    rep = validate(t)
    assert not rep.ok and not rep.conditions["A"]
    assert rep.witnesses["A"] == ((1, 2), 1)


def test_validate_rejects_swallowed_support():
    t = make_triple("A2", [((1, 1), 0), ((0, 1), 1)])
    rep = validate(t)
    assert not rep.conditions["C"]


def test_validate_rejects_shared_pi_without_equivalence():
    t = make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)])
    rep = validate(t)
    assert not rep.conditions["D"]
    eq = make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)], [[0, 1]])
    assert validate(eq).ok


def test_largest_torus_spans_class_differences():
    t = make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)], [[0, 1]])
    torus = largest_torus(t)
    assert torus.vanishing == ((1, 0, -1),)
    assert torus.rank_K == 1
    assert torus.rank_S(t.rs) == 2


def test_torus_canonicalization_and_round_trip():
    torus = make_torus([[2, 0, -2], [1, 0, -1]], 3)
    assert torus.vanishing == ((1, 0, -1),)
    assert torus_from_json(torus.to_json()) == torus


def test_condition_t_rejects_oversized_vanishing_lattice():
    t = make_triple("A2", [((1, 1), 0)])
    wrong = make_torus([[1, -1]], 2)
    rep = validate(t, wrong)
    assert not rep.conditions["T"]
    assert validate(t, make_torus([], 2)).ok


def test_condition_t_ignores_directions_outside_the_support():
    t = make_triple("A3", [((1, 1, 0), 0)])
    # vanishing direction touching only alpha_3 lies outside Supp M
    outside = make_torus([[0, 0, 1]], 3)
    rep = validate(t, outside)
    assert rep.conditions["T"]


def test_check_reduced():
    assert is_reduced(make_triple("A2", [((1, 0), 0), ((0, 1), 1)], [[0, 1]]))
    assert is_reduced(
        make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)], [[0, 1]]))
    nontyp = make_triple("B2", [((1, 2), 0)])
    rep = check_reduced(nontyp)
    assert not rep.conditions["A'"]
    overlap = make_triple("A3", [((1, 1, 0), 0), ((0, 1, 1), 2)])
    assert not check_reduced(overlap).conditions["D'"]


def test_reduced_implies_valid():
    from solvsph.enumeration import enumerate_reduced
    from solvsph.rootsys import build_root_system
    for label in ("A3", "B3", "C3"):
        cat = enumerate_reduced(build_root_system(label))
        for t in cat.triples:
            assert validate(t, largest_torus(t)).ok


def test_codims():
    t = make_triple("A3", [((1, 1, 0), 1), ((0, 1, 1), 1)], [[0, 1]])
    assert codims(t) == (1, 2)
    t2 = make_triple("A3", [((1, 1, 1), 1)])
    assert codims(t2) == (0, 3)
    empty = make_triple("A2", [])
    assert codims(empty) == (0, 0)


def test_str_rendering():
    t = make_triple("A2", [((1, 0), 0), ((0, 1), 1)], [[0, 1]])
    assert str(t) == "{(01,2)~(10,1)}"
