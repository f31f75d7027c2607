import pytest

from solvsph.rootsys import build_root_system
from solvsph.active import (table1_options, family, family_pi, member_pi,
                            classify_pair)


@pytest.fixture(scope="module")
def a3():
    return build_root_system("A3")


def test_typical_roots_admit_any_support_node(a3):
    assert table1_options(a3, (1, 1, 1)) == {0, 1, 2}
    assert table1_options(a3, (0, 1, 1)) == {1, 2}
    assert table1_options(a3, (1, 0, 0)) == {0}


def test_b_shape_excludes_the_doubled_node():
    b3 = build_root_system("B3")
    # alpha_1 + alpha_2 + 2 alpha_3
    assert table1_options(b3, (1, 1, 2)) == {0, 1}
    assert table1_options(b3, (0, 1, 2)) == {1}
    # 1,2,2 is the highest root but not of catalog shape
    assert table1_options(b3, (1, 2, 2)) == set()


def test_c_shape_admits_only_the_long_end():
    c3 = build_root_system("C3")
    assert table1_options(c3, (2, 2, 1)) == {2}
    assert table1_options(c3, (0, 2, 1)) == {2}
    # doubled coefficient away from the long root: no options
    assert table1_options(c3, (1, 2, 1)) == set()


def test_f4_and_g2_shapes():
    f4 = build_root_system("F4")
    assert table1_options(f4, (2, 2, 1, 1)) == {2, 3}
    g2 = build_root_system("G2")
    assert table1_options(g2, (2, 1)) == {1}
    assert table1_options(g2, (3, 1)) == {1}
    assert table1_options(g2, (3, 2)) == set()
    with pytest.raises(ValueError):
        table1_options(g2, (1, 3))


def test_family_contents(a3):
    assert family(a3, (1, 1, 1), 1) == {(1, 1, 1), (1, 0, 0), (0, 0, 1)}
    assert family(a3, (1, 1, 1), 0) == {(1, 1, 1), (0, 1, 1), (0, 0, 1)}
    b2 = build_root_system("B2")
    assert family(b2, (1, 2), 0) == {(1, 2), (0, 1)}
    with pytest.raises(ValueError):
        family(b2, (1, 2), 1)


def test_family_size_equals_support_size():
    for label in ("A3", "B3", "C3", "F4", "G2", "D4"):
        rs = build_root_system(label)
        for alpha in rs.positive_roots:
            for p in table1_options(rs, alpha):
                fam = family(rs, alpha, p)
                assert len(fam) == len([c for c in alpha if c])


def test_family_pi_is_a_bijection_onto_the_support():
    for label in ("A4", "B4", "C4", "F4", "D4", "G2"):
        rs = build_root_system(label)
        for alpha in rs.positive_roots:
            supp = {i for i, c in enumerate(alpha) if c}
            for p in table1_options(rs, alpha):
                mapping = family_pi(rs, alpha, p)
                assert mapping[alpha] == p
                assert set(mapping.values()) == supp


def test_member_pi(a3):
    assert member_pi(a3, (1, 1, 1), 0, (0, 1, 1)) == 1
    assert member_pi(a3, (1, 1, 1), 0, (0, 0, 1)) == 2
    with pytest.raises(ValueError):
        member_pi(a3, (1, 1, 1), 0, (1, 1, 0))


def test_disjoint_supports(a3):
    cls = classify_pair(a3, ((1, 0, 0), 0), ((0, 0, 1), 2), False)
    assert cls.tag == "D0"


def test_single_shared_node(a3):
    # shared node differs from both attached roots: admissible
    cls = classify_pair(a3, ((1, 1, 0), 0), ((0, 1, 1), 2), False)
    assert cls.tag == "D1" and cls.witness == 1
    # shared node equal to both attached roots needs equivalence
    eq = classify_pair(a3, ((1, 1, 0), 1), ((0, 1, 1), 1), True)
    assert eq.tag == "E1" and "E1prime" in eq.refined
    noneq = classify_pair(a3, ((1, 1, 0), 1), ((0, 1, 1), 1), False)
    assert noneq.tag == "INVALID"
    # mixed attachment at the shared node is never admissible
    mixed = classify_pair(a3, ((1, 1, 0), 1), ((0, 1, 1), 2), True)
    assert mixed.tag == "INVALID"


def test_branching_shapes_need_a_degree_three_node():
    a4 = build_root_system("A4")
    # two overlapping typical roots on a path: the union has no
    # branching node, so no admissible shape exists
    cls = classify_pair(a4, ((1, 1, 1, 0), 0), ((0, 1, 1, 1), 3), False)
    assert cls.tag == "INVALID"
    d4 = build_root_system("D4")   # node 2 (index 1) is the center
    d2 = classify_pair(d4, ((1, 1, 1, 0), 0), ((0, 1, 1, 1), 3), False)
    assert d2.tag == "D2"
    assert d2.witness == (1, 2)    # branching node, then the chain
    e2 = classify_pair(d4, ((1, 1, 1, 0), 1), ((0, 1, 1, 1), 1), True)
    assert e2.tag == "E2"


def test_e2prime_marks_the_far_chain_end():
    d4 = build_root_system("D4")
    at_branch = classify_pair(d4, ((1, 1, 1, 0), 1), ((0, 1, 1, 1), 1), True)
    assert "E2prime" not in at_branch.refined
    at_end = classify_pair(d4, ((1, 1, 1, 0), 2), ((0, 1, 1, 1), 2), True)
    assert at_end.tag == "E2"
    assert "E2prime" in at_end.refined


def test_identical_roots_rejected(a3):
    with pytest.raises(ValueError):
        classify_pair(a3, ((1, 1, 0), 0), ((1, 1, 0), 1), False)
