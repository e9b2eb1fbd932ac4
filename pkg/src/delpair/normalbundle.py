"""Weight-level decomposition of the normal module of a deletion pair.

The normal weights are the ambient noncompact positive roots outside the
Phi-image of the sub noncompact roots.  Two weights are joined when they
differ by the Phi-image of a compact simple root of the sub-diagram; the
connected components of that graph proxy the decomposition into irreducible
homogeneous summands.  Connectivity is a necessary condition for
irreducibility and, for these multiplicity-free modules, the decisive
computable proxy; reports state this limitation.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import hss
from .hss import WeightSet
from .pairs import DeletionPair, root_correspondence
from .report import FAIL, INDETERMINATE, PASS, CheckReport, root_witness
from .rootsys import Root

PROXY_NOTE = ("irreducibility certified only at the level of Levi-root "
              "connectivity of the weight set")


def normal_weights(pair: DeletionPair) -> WeightSet:
    """Ambient noncompact roots minus the Phi-image of the sub ones."""
    corr = root_correspondence(pair)
    nc = hss.noncompact_positive_roots(pair.ambient)
    return WeightSet(nc.rs, nc.weights - corr.noncompact_image)


@dataclass(frozen=True)
class NormalDecomposition:
    normal_weights: WeightSet
    components: tuple[frozenset[Root], ...]
    singleton_component: "Root | None"
    highest_weights: tuple[Root, ...]      # parallel to components


def levi_components(pair: DeletionPair) -> NormalDecomposition:
    """Partition the normal weights into Levi-action graph components."""
    corr = root_correspondence(pair)
    weights = normal_weights(pair)
    steps = [corr.apply(pair.sub_rs().simple_root(label))
             for label in pair.sub.diagram.nodes if label != pair.gamma0]
    remaining = set(weights.weights)
    components: list[frozenset[Root]] = []
    while remaining:
        seed = min(remaining)
        block = {seed}
        frontier = [seed]
        while frontier:
            w = frontier.pop()
            for s in steps:
                for cand in (w + s, w - s):
                    if cand in remaining and cand not in block:
                        block.add(cand)
                        frontier.append(cand)
        remaining -= block
        components.append(frozenset(block))
    components.sort(key=lambda c: (len(c), min(c)))
    highest = []
    for block in components:
        maximal = [w for w in block if all(w + s not in block for s in steps)]
        highest.append(max(maximal, key=lambda r: (r.height, r.coeffs)))
    singletons = [next(iter(c)) for c in components if len(c) == 1]
    singleton = singletons[0] if len(singletons) == 1 else None
    return NormalDecomposition(weights, tuple(components), singleton, tuple(highest))


def summands_distinct(pair: DeletionPair) -> CheckReport:
    """Compare the two summands' highest weights and sizes.

    The geometric identification of the singleton factor with the degree-one
    line bundle is an annotation, not something re-proved here.
    """
    check_id = "normalbundle.summands_distinct"
    subject = pair.pair_id
    dec = levi_components(pair)
    sizes = [len(c) for c in dec.components]
    if len(dec.components) != 2:
        return CheckReport(
            check_id, subject, INDETERMINATE,
            witnesses=[{"component_sizes": sizes}],
            notes=f"expected 2 components, found {len(dec.components)}; {PROXY_NOTE}",
        )
    hw = [root_witness(w) for w in dec.highest_weights]
    distinct = dec.highest_weights[0] != dec.highest_weights[1] and sizes[0] != sizes[1]
    status = PASS if distinct else FAIL
    return CheckReport(
        check_id, subject, status,
        witnesses=[{"component_sizes": sizes, "highest_weights": hw}],
        notes=PROXY_NOTE,
    )
