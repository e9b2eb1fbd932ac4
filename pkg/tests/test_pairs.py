import pytest

from delpair import hss
from delpair.pairs import (
    CorrespondenceError,
    DeletionPair,
    catalog,
    catalog_by_id,
    is_maximal,
    make_pair,
    root_correspondence,
)
from delpair.rootsys import Root


def test_catalog_contains_the_table_rows(catalog7):
    for pid in ("B4:a1/a2", "B4:a1/a3", "D5:a5/a3", "D5:a1/a2", "D5:a1/a3",
                "E6:a6/a4", "E6:a6/a5", "E7:a7/a4", "E7:a7/a5", "E7:a7/a6"):
        assert pid in catalog7


def test_catalog_names_match_the_table(catalog7):
    assert catalog7["E7:a7/a6"].name == "(E6/P6 in E7/P7)"
    assert catalog7["D5:a5/a3"].name == "(G(2,3) in G^II(5,5))"
    assert catalog7["B4:a1/a2"].name == "(Q^5 in Q^7)"
    assert catalog7["E6:a6/a5"].name == "(G^II(5,5) in E6/P6)"


def test_catalog_max_rank_filters():
    ids = {p.pair_id for p in catalog(5)}
    assert "D5:a5/a3" in ids
    assert not any(pid.startswith(("E7", "B6", "B7", "D6", "D7")) for pid in ids)
    with pytest.raises(ValueError):
        catalog(3)


def test_gamma_is_chain_sum(catalog7):
    pair = catalog7["B4:a1/a3"]
    assert pair.big_gamma == Root((0, 1, 1, 0))
    pair = catalog7["E7:a7/a6"]
    assert pair.big_gamma == Root((0, 0, 0, 0, 0, 1, 0))


def test_phi_on_simple_roots_e7(catalog7):
    corr = root_correspondence(catalog7["E7:a7/a6"])
    table = dict(corr.on_simple)
    assert table["a6"] == Root((0, 0, 0, 0, 0, 0, 1))          # gamma
    assert table["a5"] == Root((0, 0, 0, 0, 1, 1, 0))          # a5 + Gamma
    assert table["a2"] == Root((0, 1, 0, 0, 0, 0, 0))          # untouched


def test_phi_on_simple_roots_b4(catalog7):
    corr = root_correspondence(catalog7["B4:a1/a2"])
    table = dict(corr.on_simple)
    assert table["a2"] == Root((1, 0, 0, 0))
    assert table["a3"] == Root((0, 1, 1, 0))
    assert table["a4"] == Root((0, 0, 0, 1))


def test_phi_preserves_pairings_example(catalog7):
    pair = catalog7["E7:a7/a6"]
    ars = pair.ambient_rs()
    corr = root_correspondence(pair)
    table = dict(corr.on_simple)
    assert ars.pairing(table["a5"], table["a6"]) == -1


def test_every_catalog_pair_verifies(catalog7):
    for pair in catalog7.values():
        corr = root_correspondence(pair)
        nc0 = hss.noncompact_positive_roots(pair.sub)
        nc = hss.noncompact_positive_roots(pair.ambient)
        image = corr.noncompact_image
        assert len(image) == len(nc0)
        assert image <= nc.weights


def test_corrupted_gamma_fails_with_named_invariant(catalog7):
    good = catalog7["B4:a1/a2"]
    bad = DeletionPair(good.ambient, good.sub, good.chain)
    object.__setattr__(bad, "big_gamma", Root((0, 1, 1, 0)))   # wrong chain sum
    with pytest.raises(CorrespondenceError, match="a3"):
        root_correspondence(bad)


def test_maximality_verdicts(catalog7):
    assert is_maximal(catalog7["E7:a7/a6"]).maximal
    assert is_maximal(catalog7["D5:a5/a3"]).maximal
    assert is_maximal(catalog7["B4:a1/a2"]).maximal

    verdict = is_maximal(catalog7["E7:a7/a4"])
    assert not verdict.maximal
    assert set(verdict.witness_ids()) == {"E7:a7/a5", "E7:a7/a6"}

    verdict = is_maximal(catalog7["B4:a1/a3"])
    assert not verdict.maximal
    assert verdict.witness_ids() == ("B4:a1/a2",)


def test_decomposition_composes_to_direct_phi(catalog7):
    for pair in catalog7.values():
        verdict = is_maximal(pair)
        direct = root_correspondence(pair)
        srs = pair.sub_rs()
        for step in verdict.witnesses:
            second = make_pair(step.sub, pair.gamma0)
            phi1 = root_correspondence(step)
            phi2 = root_correspondence(second)
            for label in pair.sub.diagram.nodes:
                beta = srs.simple_root(label)
                assert phi1.apply(phi2.apply(beta)) == direct.apply(beta)


def test_dimension_bookkeeping(catalog7):
    from delpair.normalbundle import normal_weights
    for pair in catalog7.values():
        nc0 = len(hss.noncompact_positive_roots(pair.sub))
        nc = len(hss.noncompact_positive_roots(pair.ambient))
        assert nc0 + len(normal_weights(pair)) == nc
