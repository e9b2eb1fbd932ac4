import random

import pytest
from fractions import Fraction

from delpair.rootsys import (
    ChainError,
    DiagramError,
    DynkinDiagram,
    MarkError,
    MarkedDiagram,
    Root,
    build_root_system,
    canonical_mark_position,
    cartan_pairing,
    delete_chain,
    descriptor,
    is_hyperquadric,
    parse_diagram,
    parse_marked,
    reflect,
    space_name,
)
from oracles import closed_form_positive_count, reflection_closure_positive_roots

ORACLE_LITERALS = [f"A{n}" for n in range(1, 7)] + [f"B{n}" for n in range(2, 6)] + [
    f"D{n}" for n in range(4, 7)] + ["E6", "E7"]


def test_a2_positive_roots_by_hand():
    rs = build_root_system(parse_diagram("A2"))
    assert rs.positive_roots == {Root((1, 0)), Root((0, 1)), Root((1, 1))}


def test_b2_positive_roots_by_hand():
    rs = build_root_system(parse_diagram("B2"))
    assert rs.positive_roots == {
        Root((1, 0)), Root((0, 1)), Root((1, 1)), Root((1, 2))}


@pytest.mark.parametrize("literal", ORACLE_LITERALS)
def test_positive_roots_match_reflection_closure_oracle(literal):
    diagram = parse_diagram(literal)
    rs = build_root_system(diagram)
    oracle = reflection_closure_positive_roots(diagram)
    assert rs.positive_roots == oracle
    assert len(rs.positive_roots) == closed_form_positive_count(diagram)


def test_e7_has_63_positive_roots():
    assert len(build_root_system(parse_diagram("E7")).positive_roots) == 63


def test_disconnected_diagram_roots_are_componentwise():
    rs = build_root_system(parse_diagram("A1+A2"))
    assert len(rs.positive_roots) == 1 + 3
    for r in rs.positive_roots:
        support = r.support()
        assert set(support) <= {0} or set(support) <= {1, 2}


def test_unclassifiable_diagram_reports_component():
    # a 4-cycle is no Dynkin diagram
    edges = frozenset({("a1", "a2", 1, None), ("a2", "a3", 1, None),
                       ("a3", "a4", 1, None), ("a1", "a4", 1, None)})
    with pytest.raises(DiagramError, match="cycle"):
        DynkinDiagram(("a1", "a2", "a3", "a4"), edges)


def test_simple_edge_cannot_carry_arrow():
    with pytest.raises(DiagramError, match="no arrow"):
        DynkinDiagram(("a1", "a2"), frozenset({("a1", "a2", 1, "a2")}))


# -- pairings and reflections -------------------------------------------------

def test_pairing_normalization():
    for literal in ("A3", "B3", "G2"):
        rs = build_root_system(parse_diagram(literal))
        for alpha in rs.positive_roots:
            assert cartan_pairing(alpha, alpha, rs) == 2


def test_pairing_adjacent_simply_laced():
    rs = build_root_system(parse_diagram("A2"))
    assert cartan_pairing(Root((1, 0)), Root((0, 1)), rs) == -1


def test_pairing_composite_root_value_in_e7():
    # <a6, a7+a6+a5> = -1 + 2 - 1 = 0
    rs = build_root_system(parse_diagram("E7"))
    composite = Root((0, 0, 0, 0, 1, 1, 1))
    assert rs.is_root(composite)
    assert cartan_pairing(rs.simple_root("a6"), composite, rs) == 0


def test_pairing_rejects_zero():
    rs = build_root_system(parse_diagram("A2"))
    with pytest.raises(ValueError):
        cartan_pairing(Root((1, 0)), Root((0, 0)), rs)


def test_pairing_additive_in_first_argument():
    rs = build_root_system(parse_diagram("B4"))
    rng = random.Random(11)
    roots = sorted(rs.positive_roots)
    for _ in range(200):
        a, b, g = rng.choice(roots), rng.choice(roots), rng.choice(roots)
        assert (cartan_pairing(a + b, g, rs)
                == cartan_pairing(a, g, rs) + cartan_pairing(b, g, rs))


def test_reflection_negates_own_root():
    rs = build_root_system(parse_diagram("D5"))
    for i in range(5):
        alpha = Root.simple(i, 5)
        assert reflect(i, alpha, rs) == -alpha


def test_reflection_involution_and_closure_all_systems():
    for literal in ORACLE_LITERALS:
        rs = build_root_system(parse_diagram(literal))
        for r in rs.positive_roots:
            for i in range(rs.diagram.rank):
                image = reflect(i, r, rs)
                assert rs.is_root(image)
                assert reflect(i, image, rs) == r


def test_reflection_known_values_in_e7():
    rs = build_root_system(parse_diagram("E7"))
    a7 = rs.simple_root("a7")
    assert reflect("a6", a7, rs) == Root((0, 0, 0, 0, 0, 1, 1))
    # s_{a6}(a7 + 2 a6 + 2 a5 + Sigma) = a7 + a6 + 2 a5 + Sigma for every root
    # of that shape (gamma = a7, gamma0 = a6, theta = a5, Sigma over a1..a4)
    found = 0
    for v in rs.positive_roots:
        if v.coeffs[4] == 2 and v.coeffs[5] == 2 and v.coeffs[6] == 1:
            assert reflect("a6", v, rs) == v - rs.simple_root("a6")
            found += 1
    assert found > 0


def test_roots_reachable_by_simple_steps():
    for literal in ("B4", "E6"):
        rs = build_root_system(parse_diagram(literal))
        n = rs.diagram.rank
        for r in rs.positive_roots:
            if r.height > 1:
                assert any(
                    rs.is_positive_root(r - Root.simple(i, n)) for i in range(n))


# -- marked diagrams and deletion ---------------------------------------------

def test_marks_must_be_cominuscule():
    with pytest.raises(MarkError, match="not cominuscule"):
        parse_marked("E7:a6")
    with pytest.raises(MarkError, match="not cominuscule"):
        parse_marked("B4:a2")
    parse_marked("B4:a1")
    parse_marked("D5:a5")
    parse_marked("E6:a1")


def test_one_mark_per_component():
    with pytest.raises(MarkError, match="several marks"):
        parse_marked("A4:a1,a2")
    md = parse_marked("A1+A2:a1,a3")
    assert md.marked == frozenset({"a1", "a3"})


def test_delete_chain_table_rows():
    sub = delete_chain(parse_marked("B4:a1"), "a2")
    assert sub.literal() == "B3:a2"
    assert space_name(sub) == "Q^5"

    sub = delete_chain(parse_marked("E7:a7"), "a6")
    assert sub.literal() == "E6:a6"
    assert space_name(sub) == "E6/P6"

    sub = delete_chain(parse_marked("D5:a1"), "a2")
    assert sub.literal() == "D4:a2"
    assert space_name(sub) == "Q^6"


def test_delete_chain_rejects_multiple_bonds():
    with pytest.raises(ChainError, match="type-A"):
        delete_chain(parse_marked("B4:a1"), "a4")


def test_delete_chain_rejects_cross_component():
    with pytest.raises(ChainError, match="different components"):
        delete_chain(MarkedDiagram(parse_diagram("A1+A2"), frozenset({"a1"})), "a2")


def test_delete_chain_preserves_surviving_labels():
    ambient = parse_marked("E7:a7")
    sub = delete_chain(ambient, "a4")
    assert set(sub.diagram.nodes) <= set(ambient.diagram.nodes)
    induced = ambient.diagram.induced(set(sub.diagram.nodes))
    assert induced == sub.diagram


def test_space_names_and_descriptors():
    assert space_name(parse_marked("A4:a2")) == "G(2,3)"
    assert space_name(parse_marked("A4:a3")) == "G(2,3)"
    assert space_name(parse_marked("D5:a4")) == "G^II(5,5)"
    assert space_name(parse_marked("A1+A2:a1,a3")) == "P^1 x P^2"
    assert descriptor(parse_marked("A4:a3")) == (("A", 4, 2),)
    assert canonical_mark_position(
        parse_diagram("D6").components[0], "a5") == 6


def test_hyperquadric_recognition():
    assert is_hyperquadric(parse_marked("B4:a1"))
    assert is_hyperquadric(parse_marked("D5:a1"))
    assert is_hyperquadric(parse_marked("D4:a4"))      # triality
    assert is_hyperquadric(parse_marked("A3:a2"))      # G(2,2) = Q^4
    assert not is_hyperquadric(parse_marked("D5:a5"))
    assert not is_hyperquadric(parse_marked("E7:a7"))


def test_symmetrized_form_is_symmetric_and_fixes_lengths():
    for literal in ("B3", "C3", "F4", "G2"):
        diagram = parse_diagram(literal)
        S = diagram.symmetrized_form
        n = diagram.rank
        assert all(S[i][j] == S[j][i] for i in range(n) for j in range(n))
        assert max(S[i][i] for i in range(n)) == Fraction(2)
