"""Catalogs of reduced triples, orbit counts, the invariants d0 and d,
and the rendered classification tables."""

import itertools

import pytest

from solvsph.rootsys import build_root_system
from solvsph.combdata import is_reduced, validate, largest_torus
from solvsph.enumeration import (enumerate_reduced, enumerate_valid,
                                 d0, d, emit_table)

ROW_COUNTS = {
    "A2": 4, "B2": 4, "G2": 4,
    "A1xA1xA1": 5,
    "A1xA2": 9, "A1xB2": 9,
    "A3": 17, "B3": 17, "C3": 17,
    "A4": 75, "B4": 75, "C4": 75, "F4": 75,
    "D4": 77,
}

D0 = {
    "A2": 2, "B2": 3, "G2": 3,
    "A1xA1xA1": 5, "A1xA2": 5, "A1xB2": 7,
    "A3": 8, "B3": 11, "C3": 10,
    "A4": 31, "B4": 42, "C4": 38, "F4": 38, "D4": 40,
}

D = {
    "A1": 2,
    "A2": 5, "B2": 6, "G2": 6,
    "A3": 18, "B3": 22, "C3": 21,
    "A4": 74, "B4": 91, "C4": 86, "D4": 86, "F4": 87,
}


@pytest.mark.parametrize("label,count", sorted(ROW_COUNTS.items()))
def test_reduced_row_counts(label, count):
    cat = enumerate_reduced(build_root_system(label))
    assert len(cat.triples) == count
    assert all(is_reduced(t) for t in cat.triples)


@pytest.mark.parametrize("label,value", sorted(D0.items()))
def test_d0(label, value):
    assert d0(build_root_system(label)) == value


@pytest.mark.parametrize("label,value", sorted(D.items()))
def test_d(label, value):
    assert d(build_root_system(label)) == value


def test_catalog_is_deterministic():
    rs = build_root_system("B3")
    a = enumerate_reduced(rs)
    b = enumerate_reduced(build_root_system("B3"))
    assert a.triples == b.triples
    assert a.orbits == b.orbits
    assert a.transitions == b.transitions


def test_orbits_partition_the_catalog():
    for label in ("A3", "C3", "A1xB2"):
        cat = enumerate_reduced(build_root_system(label))
        flat = sorted(i for block in cat.orbits for i in block)
        assert flat == list(range(len(cat.triples)))


def test_transitions_stay_inside_the_orbit():
    cat = enumerate_reduced(build_root_system("B3"))
    orbit_of = {}
    for block in cat.orbits:
        for i in block:
            orbit_of[i] = block
    for i, steps in enumerate(cat.transitions):
        for j, delta in steps:
            assert j in orbit_of[i]


def test_empty_support_has_the_empty_triple():
    cat = enumerate_reduced(build_root_system("A2"), [])
    assert len(cat.triples) == 1
    assert cat.triples[0].M == ()
    assert cat.stats == ((0, 0),)
    assert cat.orbits == ((0,),)


def test_partial_support():
    rs = build_root_system("A3")
    cat = enumerate_reduced(rs, [0])
    assert len(cat.triples) == 1
    assert cat.triples[0].M == ((1, 0, 0),)


def test_valid_enumeration_includes_nontypical_roots():
    rs = build_root_system("G2")
    cat = enumerate_valid(rs)
    assert len(cat.triples) == 6
    roots = {r for t in cat.triples for r in t.M}
    assert (3, 1) in roots and (2, 1) in roots
    total = 0
    for r in range(3):
        for combo in itertools.combinations(range(2), r):
            total += len(enumerate_valid(rs, combo).triples)
    assert total == 9
    for t in cat.triples:
        assert validate(t, largest_torus(t)).ok


def test_valid_enumeration_is_rank_gated():
    with pytest.raises(ValueError):
        enumerate_valid(build_root_system("A4"))


def test_rank2_table_contents():
    text = emit_table([build_root_system(x) for x in ("A2", "B2", "G2")])
    lines = [line.split() for line in text.strip().splitlines()]
    assert lines[0][:5] == ["row", "(M,pi)", "~", "c(S)", "c(N)"]
    rows = {line[0]: line for line in lines[1:]}
    # the split pair reaches the long root in A2 one step at alpha_2,
    # and the equivalent pair in one step at alpha_1
    assert rows["1"][1:3] == ["(2,2);", "(1,1)"]
    assert rows["1"][-3:] == ["3(2),4(1)", "4(1)", "3(2)"]
    assert rows["2"][2] == "1~2"
    assert rows["3"][-2:] == ["1(2),4", "1(2)"]   # B2 column empty
    assert rows["4"][-2:] == ["1(1),3", "1(1)"]   # G2 column empty
    assert rows["d0"][-3:] == ["2", "3", "3"]


def test_table_requires_a_shared_graph():
    with pytest.raises(AssertionError):
        emit_table([build_root_system("A2"), build_root_system("A3")])


def test_csv_table_round_trips():
    import csv
    import io
    text = emit_table([build_root_system("B2")], fmt="csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["row", "(M,pi)", "~", "c(S)", "c(N)", "B2"]
    assert len(rows) == 4 + 2   # header, four triples, d0 footer
    assert rows[-1][0] == "d0" and rows[-1][-1] == "3"
