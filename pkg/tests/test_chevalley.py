import random

import pytest

from delpair.chevalley import LieElement, bracket, build_table
from delpair.rootsys import Root, build_root_system, parse_diagram
from oracles import string_p

SYSTEMS = ["A2", "A4", "B2", "B4", "D5", "E6", "E7"]


def table(literal):
    return build_table(build_root_system(parse_diagram(literal)))


@pytest.mark.parametrize("literal", SYSTEMS)
def test_constants_satisfy_p_plus_one(literal):
    tab = table(literal)
    for (a, b), n in tab.constants.items():
        assert abs(n) == string_p(tab.rs, a, b) + 1


@pytest.mark.parametrize("literal", SYSTEMS)
def test_antisymmetry_and_negation_rule(literal):
    tab = table(literal)
    for (a, b), n in tab.constants.items():
        assert tab.constants[(b, a)] == -n
        assert tab.constants[(-a, -b)] == -n


def test_a2_constant_is_unit():
    tab = table("A2")
    assert abs(tab.constant(Root((1, 0)), Root((0, 1)))) == 1


def test_b2_constant_is_two():
    # p = 1: (a1+a2) - a2 is a root, (a1+a2) - 2 a2 is not
    tab = table("B2")
    rs = tab.rs
    assert rs.is_root(Root((1, 1)) - Root((0, 1)))
    assert not rs.is_root(Root((1, 1)) - Root((0, 2)))
    assert abs(tab.constant(Root((0, 1)), Root((1, 1)))) == 2


@pytest.mark.parametrize("literal", ["A4", "D5", "E6", "E7"])
def test_simply_laced_constants_are_units(literal):
    tab = table(literal)
    assert all(abs(n) == 1 for n in tab.constants.values())


def test_e7_triple_bracket_lands_on_the_sum():
    tab = table("E7")
    rs = tab.rs
    e5, e6, e7 = (LieElement.root_vector(rs.simple_root(l)) for l in ("a5", "a6", "a7"))
    value = bracket(e5, bracket(e6, e7, tab), tab)
    target = Root((0, 0, 0, 0, 1, 1, 1))
    assert rs.is_positive_root(target)
    assert value.root_support() == {target}
    assert abs(value.coefficient(("e", target))) == 1


def test_bracket_of_vector_with_itself_vanishes():
    tab = table("A2")
    x = LieElement.root_vector(Root((1, 0)))
    assert bracket(x, x, tab).is_zero


def test_bracket_bilinear_and_weight_additive():
    tab = table("B4")
    rs = tab.rs
    roots = sorted(rs.positive_roots)
    rng = random.Random(5)
    for _ in range(300):
        a, b = rng.choice(roots), rng.choice(roots)
        x, y = LieElement.root_vector(a), LieElement.root_vector(b)
        v = bracket(x, y, tab)
        assert v.root_support() <= {a + b}
        v2 = bracket(x + y, y, tab)
        assert v2 == bracket(x, y, tab) + bracket(y, y, tab)


def test_cartan_brackets():
    tab = table("B2")
    rs = tab.rs
    for alpha in rs.positive_roots:
        x = LieElement.root_vector(alpha)
        y = LieElement.root_vector(-alpha)
        h = bracket(x, y, tab)
        assert h.root_support() == set()
        assert not h.is_zero
        # [h_alpha, e_alpha] = <alpha, alpha> e_alpha = 2 e_alpha
        back = bracket(h, x, tab)
        assert back == x + x


@pytest.mark.parametrize("literal", SYSTEMS)
def test_jacobi_on_seeded_triples(literal):
    tab = table(literal)
    rs = tab.rs
    roots = sorted(rs.positive_roots)
    basis = [LieElement.root_vector(r) for r in roots]
    basis += [LieElement.root_vector(-r) for r in roots]
    basis += [LieElement.coroot(i) for i in range(rs.diagram.rank)]
    rng = random.Random(f"jacobi-{literal}")
    for _ in range(1000):
        x, y, z = (rng.choice(basis) for _ in range(3))
        total = (bracket(bracket(x, y, tab), z, tab)
                 + bracket(bracket(y, z, tab), x, tab)
                 + bracket(bracket(z, x, tab), y, tab))
        assert total.is_zero


def test_extraspecial_seed_signs_are_positive():
    # the lexicographically minimal decomposition of each positive root
    # carries the positive constant
    tab = table("D5")
    rs = tab.rs
    positives = sorted(rs.positive_roots)
    pos_set = set(positives)
    for rho in positives:
        if rho.height == 1:
            continue
        first = min(a for a in positives if a < rho - a and rho - a in pos_set)
        assert tab.constant(first, rho - first) > 0
