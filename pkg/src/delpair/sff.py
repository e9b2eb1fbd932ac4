"""Second fundamental form of the affinized VMRT, kernels, infinity locus.

The form is evaluated on root vectors by the double bracket
[E_{nu-gamma}, [E_{nu'-gamma}, E_gamma]] and reduced modulo the affinized
tangent space and the parabolic: the value survives exactly when
nu + nu' - gamma is a noncompact positive root outside Psi_gamma u {gamma}.
Radial arguments short-circuit to zero (the cone annihilates its ruling).

Degeneracy verdicts depend only on this zero/nonzero pattern and are
therefore independent of the Chevalley sign convention; the signed values
are still produced through the bracket machinery.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import hss
from .chevalley import ChevalleyTable, LieElement, bracket, build_table
from .pairs import DeletionPair, RootCorrespondence, root_correspondence
from .report import FAIL, PASS, SKIPPED, CheckReport, root_witness
from .rootsys import MarkedDiagram, Root, RootSystem


class _Radial:
    """Sentinel for the radial (cone) direction of an affinized tangent space."""

    def __repr__(self) -> str:
        return "RADIAL"


RADIAL = _Radial()


@dataclass(frozen=True)
class SFFContext:
    """Weight data of an ambient VMRT and (optionally) an embedded sub-VMRT."""

    pair: "DeletionPair | None"
    rs: RootSystem
    gamma: Root
    noncompact: frozenset[Root]
    psi: frozenset[Root]                       # Psi_gamma, radial excluded
    sub_tangent: "frozenset[Root] | None"      # gamma + Gamma + kappa weights
    x0_tangent: "frozenset[Root] | None"       # Phi image of the sub noncompact roots

    @staticmethod
    def for_ambient(md: MarkedDiagram) -> "SFFContext":
        """Ambient-only context: enough for sff_value, not for kernels."""
        rs = md.root_system()
        psi = hss.psi_gamma(md)
        nc = hss.noncompact_positive_roots(md)
        return SFFContext(None, rs, psi.radial, frozenset(nc.weights),
                          frozenset(psi.weights.weights), None, None)

    @staticmethod
    def for_pair(pair: DeletionPair,
                 corr: "RootCorrespondence | None" = None) -> "SFFContext":
        base = SFFContext.for_ambient(pair.ambient)
        corr = corr or root_correspondence(pair)
        srs = pair.sub_rs()
        gamma0 = srs.simple_root(pair.gamma0)
        psi0 = hss.psi_gamma(pair.sub)
        amb = pair.ambient.diagram
        sub_tangent = set()
        for mu0 in psi0.weights.weights:
            kappa0 = mu0 - gamma0           # compact sub root, nonzero
            coeffs = [0] * amb.rank
            for label, c in zip(pair.sub.diagram.nodes, kappa0.coeffs):
                coeffs[amb.index[label]] = c
            sub_tangent.add(base.gamma + pair.big_gamma + Root(tuple(coeffs)))
        bad = sub_tangent - base.psi
        if bad:
            raise AssertionError(f"sub-VMRT tangent leaves Psi_gamma: {sorted(bad)[:3]}")
        return SFFContext(pair, base.rs, base.gamma, base.noncompact, base.psi,
                          frozenset(sub_tangent), corr.noncompact_image)

    def require_pair(self) -> None:
        if self.sub_tangent is None or self.x0_tangent is None:
            raise ValueError("this operation needs a full deletion-pair context")


def sff_value(nu, nu2, ctx: SFFContext,
              table: ChevalleyTable) -> "tuple[int, Root] | None":
    """Second fundamental form on a pair of tangent weights.

    Returns (coefficient, weight) for a nonzero value, None for zero.
    """
    if nu is RADIAL or nu2 is RADIAL:
        if nu is not RADIAL and nu not in ctx.psi:
            raise ValueError(f"{nu} is not a tangent weight")
        if nu2 is not RADIAL and nu2 not in ctx.psi:
            raise ValueError(f"{nu2} is not a tangent weight")
        return None
    if nu not in ctx.psi or nu2 not in ctx.psi:
        raise ValueError(f"arguments must lie in Psi_gamma: {nu}, {nu2}")
    inner = bracket(LieElement.root_vector(nu2 - ctx.gamma),
                    LieElement.root_vector(ctx.gamma), table)
    value = bracket(LieElement.root_vector(nu - ctx.gamma), inner, table)
    if value.is_zero:
        return None
    support = value.root_support()
    if support != {nu + nu2 - ctx.gamma}:
        raise AssertionError(f"unexpected bracket support {support}")
    weight = nu + nu2 - ctx.gamma
    if weight not in ctx.noncompact or weight in ctx.psi or weight == ctx.gamma:
        return None          # reduced modulo P_alpha + p
    return (value.coefficient(("e", weight)), weight)


@dataclass(frozen=True)
class KernelReport:
    """Kernel of the (quotiented) form against the sub-VMRT tangent space."""

    mode: str                        # "sigma" or "tau"
    kernel_weights: frozenset[Root]  # non-radial kernel directions
    radial: bool                     # the radial line always lies in the kernel
    strict: bool
    witnesses: tuple[Root, ...]


def _kernel(ctx: SFFContext, table: ChevalleyTable, mode: str) -> KernelReport:
    ctx.require_pair()
    extra_quotient = ctx.x0_tangent if mode == "tau" else frozenset()
    kernel = set()
    for nu in ctx.psi:
        dead = True
        for nu2 in ctx.sub_tangent:
            value = sff_value(nu, nu2, ctx, table)
            if value is not None and value[1] not in extra_quotient:
                dead = False
                break
        if dead:
            kernel.add(nu)
    if mode == "sigma":
        strict = bool(kernel)
    else:
        strict = ctx.sub_tangent <= kernel and kernel != ctx.sub_tangent
    return KernelReport(mode, frozenset(kernel), True, strict,
                        tuple(sorted(kernel)))


def kernel_sigma(ctx: SFFContext, table: "ChevalleyTable | None" = None) -> KernelReport:
    """Weights killed by sigma against the whole sub-VMRT tangent space.

    Weight-injectivity of nu -> nu + nu' - gamma for fixed nu' makes the
    reported kernel exact: it is spanned by the listed root directions.
    """
    return _kernel(ctx, table or build_table(ctx.rs), "sigma")


def kernel_tau(ctx: SFFContext, table: "ChevalleyTable | None" = None) -> KernelReport:
    """Same kernel for the quotient by P_alpha + T_0(X_0) (D_0 = T_0(X))."""
    return _kernel(ctx, table or build_table(ctx.rs), "tau")


# ---------------------------------------------------------------------------
# Infinity locus (weight-level identity behind the locus-of-infinity lemma)
# ---------------------------------------------------------------------------

def verify_infinity_locus(pair: DeletionPair) -> CheckReport:
    """Check the four exact weight-set identities of the infinity-locus lemma.

    (a) noncompact sub roots pairing 1 with gamma0 decompose as
        gamma0 + theta + Sigma and their Phi images are fixed by s_{gamma0};
    (b) those pairing 0 decompose as gamma0 + 2 theta + Sigma, their images
        drop by gamma0 under s_{gamma0} and then pair 1 with gamma;
    (c) s_{gamma0}(gamma) = gamma + gamma0;
    (d) s_{gamma0}(Phi(noncompact sub roots)) = {noncompact ambient roots
        pairing 1 with gamma}.

    Skipped when the ambient is of type A or C (lemma hypothesis).
    """
    subject = pair.pair_id
    check_id = "sff.infinity_locus"
    letters = {c.letter for c in pair.ambient.diagram.components}
    if letters & {"A", "C"}:
        return CheckReport(check_id, subject, SKIPPED,
                           notes="ambient of type A or C: lemma hypothesis not met")
    ars = pair.ambient_rs()
    srs = pair.sub_rs()
    corr = root_correspondence(pair)
    gamma = ars.simple_root(pair.gamma)
    gamma0_sub = srs.simple_root(pair.gamma0)
    gamma0_amb = ars.simple_root(pair.gamma0)
    sub_diag = pair.sub.diagram
    theta_idx = {sub_diag.index[n] for n in sub_diag.neighbors(pair.gamma0)}
    gamma0_idx = sub_diag.index[pair.gamma0]

    failures: list[dict] = []

    def shape(beta: Root, expected_theta_total: int) -> bool:
        """beta = gamma0 + k*theta + Sigma with the stated neighbor total."""
        if beta.coeffs[gamma0_idx] != 1:
            return False
        return sum(beta.coeffs[i] for i in theta_idx) == expected_theta_total

    nc0 = hss.noncompact_positive_roots(pair.sub)
    for beta in sorted(nc0.weights):
        pr = srs.pairing(beta, gamma0_sub)
        image = corr.apply(beta)
        reflected = ars.reflect(pair.gamma0, image)
        if beta == gamma0_sub:
            continue       # handled by check (c)
        if pr == 1:
            if not shape(beta, 1):
                failures.append({"check": "a-shape", "beta": root_witness(beta)})
            if reflected != image:
                failures.append({"check": "a-fixed", "beta": root_witness(beta)})
        elif pr == 0:
            if not shape(beta, 2):
                failures.append({"check": "b-shape", "beta": root_witness(beta)})
            if reflected != image - gamma0_amb:
                failures.append({"check": "b-drop", "beta": root_witness(beta)})
            if ars.pairing(gamma, reflected) != 1:
                failures.append({"check": "b-pairing", "beta": root_witness(beta)})
        else:
            failures.append({"check": "pairing-range", "beta": root_witness(beta),
                             "pairing": str(pr)})
    if ars.reflect(pair.gamma0, gamma) != gamma + gamma0_amb:
        failures.append({"check": "c"})

    lhs = frozenset(ars.reflect(pair.gamma0, corr.apply(b)) for b in nc0.weights)
    nc = hss.noncompact_positive_roots(pair.ambient)
    rhs = frozenset(b for b in nc.weights if ars.pairing(b, gamma) == 1)
    if lhs != rhs:
        failures.append({
            "check": "d",
            "lhs_only": [root_witness(r) for r in sorted(lhs - rhs)],
            "rhs_only": [root_witness(r) for r in sorted(rhs - lhs)],
        })

    if failures:
        return CheckReport(check_id, subject, FAIL, witnesses=failures)
    return CheckReport(check_id, subject, PASS,
                       witnesses=[{"locus_size": len(rhs)}])
