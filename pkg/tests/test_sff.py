import pytest

from delpair.chevalley import build_table
from delpair.hss import noncompact_positive_roots
from delpair.sff import (
    RADIAL,
    SFFContext,
    kernel_sigma,
    kernel_tau,
    sff_value,
    verify_infinity_locus,
)
from delpair.pairs import make_pair
from delpair.rootsys import parse_marked
from oracles import brute_kernel


def ctx_for(catalog7, pid):
    return SFFContext.for_pair(catalog7[pid])


def test_context_invariants(catalog7):
    for pair in catalog7.values():
        ctx = SFFContext.for_pair(pair)
        assert ctx.sub_tangent <= ctx.psi
        # |sub tangent| + radial = dim VMRT(X0) + 1
        from delpair.hss import dimension, vmrt_diagram
        assert len(ctx.sub_tangent) + 1 == dimension(vmrt_diagram(pair.sub)) + 1


def test_radial_arguments_short_circuit(catalog7):
    ctx = ctx_for(catalog7, "E7:a7/a6")
    table = build_table(ctx.rs)
    for nu2 in list(ctx.psi)[:3]:
        assert sff_value(RADIAL, nu2, ctx, table) is None
        assert sff_value(nu2, RADIAL, ctx, table) is None
    assert sff_value(RADIAL, RADIAL, ctx, table) is None


def test_arguments_outside_psi_rejected(catalog7):
    ctx = ctx_for(catalog7, "E7:a7/a6")
    table = build_table(ctx.rs)
    with pytest.raises(ValueError):
        sff_value(ctx.gamma, ctx.gamma, ctx, table)


def test_vanishing_for_adjacent_weight(catalog7):
    # nu = gamma + beta with beta adjacent to gamma kills the whole sub-tangent:
    # beta + gamma + Gamma + kappa is never a root
    pair = catalog7["E7:a7/a6"]
    ctx = SFFContext.for_pair(pair)
    table = build_table(ctx.rs)
    ars = pair.ambient_rs()
    nu = ars.simple_root("a7") + ars.simple_root("a6")
    assert nu in ctx.psi
    for nu2 in ctx.sub_tangent:
        assert sff_value(nu, nu2, ctx, table) is None
        assert not ars.is_root(nu + nu2 - ctx.gamma)


def test_a4_ambient_alone_has_nonzero_values():
    ctx = SFFContext.for_ambient(parse_marked("A4:a2"))
    table = build_table(ctx.rs)
    nonzero = []
    for nu in ctx.psi:
        for nu2 in ctx.psi:
            value = sff_value(nu, nu2, ctx, table)
            if value is not None:
                coeff, weight = value
                assert weight == nu + nu2 - ctx.gamma
                assert weight in ctx.noncompact
                assert weight not in ctx.psi
                nonzero.append((nu, nu2))
    assert nonzero


def test_zero_nonzero_pattern_symmetric_and_injective(catalog7):
    for pid in ("D5:a5/a3", "E6:a6/a5", "B4:a1/a2"):
        ctx = ctx_for(catalog7, pid)
        table = build_table(ctx.rs)
        psi = sorted(ctx.psi)
        for nu2 in psi:
            images = [nu + nu2 - ctx.gamma for nu in psi]
            assert len(set(images)) == len(images)
        for nu in psi:
            for nu2 in psi:
                a = sff_value(nu, nu2, ctx, table)
                b = sff_value(nu2, nu, ctx, table)
                assert (a is None) == (b is None)


def test_kernel_sigma_matches_brute_oracle(catalog7):
    for pid in ("D5:a5/a3", "E6:a6/a5", "E7:a7/a6", "B4:a1/a3", "E7:a7/a4"):
        ctx = ctx_for(catalog7, pid)
        report = kernel_sigma(ctx)
        oracle = brute_kernel(ctx.psi, ctx.sub_tangent, ctx.gamma,
                              ctx.noncompact, ctx.rs)
        assert report.kernel_weights == oracle
        assert report.radial


def test_kernel_tau_matches_brute_oracle(catalog7):
    for pid in ("D5:a5/a3", "E6:a6/a5", "E7:a7/a6"):
        ctx = ctx_for(catalog7, pid)
        report = kernel_tau(ctx)
        oracle = brute_kernel(ctx.psi, ctx.sub_tangent, ctx.gamma,
                              ctx.noncompact, ctx.rs, quotient=ctx.x0_tangent)
        assert report.kernel_weights == oracle


def test_degeneracy_for_all_catalog_pairs(catalog7):
    for pair in catalog7.values():
        ctx = SFFContext.for_pair(pair)
        table = build_table(ctx.rs)
        sigma = kernel_sigma(ctx, table)
        tau = kernel_tau(ctx, table)
        assert sigma.strict
        ars = pair.ambient_rs()
        gamma = ars.simple_root(pair.gamma)
        for nb in pair.ambient.diagram.neighbors(pair.gamma):
            assert gamma + ars.simple_root(nb) in sigma.kernel_weights
        assert sigma.kernel_weights <= tau.kernel_weights
        assert ctx.sub_tangent <= tau.kernel_weights
        assert tau.strict


def test_d5_kernel_weight_list_frozen(catalog7):
    # brute-force enumeration over all of Psi_gamma(D5, a5)
    ctx = ctx_for(catalog7, "D5:a5/a3")
    report = kernel_sigma(ctx)
    ars = ctx.rs
    expected = {ars.simple_root("a5") + ars.simple_root("a3")}
    assert report.kernel_weights == expected
    assert report.witnesses == tuple(sorted(expected))


# -- infinity locus -----------------------------------------------------------

def test_infinity_locus_maximal_pairs(maximal_triple):
    sizes = []
    for pair in maximal_triple:
        report = verify_infinity_locus(pair)
        assert report.status == "pass"
        sizes.append(report.witnesses[0]["locus_size"])
    assert sizes == [6, 10, 16]


def test_infinity_locus_quadric_pairs(catalog7):
    for pid in ("B4:a1/a2", "D5:a1/a2"):
        assert verify_infinity_locus(catalog7[pid]).status == "pass"


def test_infinity_locus_skips_type_a_ambient():
    pair = make_pair(parse_marked("A4:a4"), "a3")
    report = verify_infinity_locus(pair)
    assert report.status == "skipped"
    assert "type A" in report.notes


def test_infinity_locus_identity_both_sides_oracle(catalog7):
    # recompute both sides of identity (d) independently of the operation
    from delpair.pairs import root_correspondence
    pair = catalog7["E7:a7/a6"]
    ars = pair.ambient_rs()
    corr = root_correspondence(pair)
    nc0 = noncompact_positive_roots(pair.sub)
    lhs = {ars.reflect("a6", corr.apply(b)) for b in nc0.weights}
    gamma = ars.simple_root("a7")
    rhs = {b for b in noncompact_positive_roots(pair.ambient).weights
           if ars.pairing(b, gamma) == 1}
    assert lhs == rhs
    assert len(lhs) == 16
