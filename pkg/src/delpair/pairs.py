"""Deletion-type admissible pairs: catalog, root correspondence, maximality.

A deletion pair carries the ambient marked diagram (mark gamma), the marked
sub-diagram obtained by deleting the chain from gamma up to (but excluding)
gamma0, and the chain-sum root Gamma (the path nodes, gamma excluded, gamma0
included).  The root correspondence sends gamma0 to gamma, fixes simple roots
away from gamma0 and adds Gamma to the neighbors of gamma0; it extends
additively to all noncompact positive roots of the sub-diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import hss
from .rootsys import (
    ChainError,
    MarkedDiagram,
    Root,
    RootSystem,
    delete_chain,
    parse_marked,
    space_name,
    tree_path,
)


class CorrespondenceError(ValueError):
    """Raised when a root-correspondence invariant fails, naming the culprit."""


@dataclass(frozen=True)
class DeletionPair:
    """An admissible pair of deletion type, with its connecting chain."""

    ambient: MarkedDiagram
    sub: MarkedDiagram
    chain: tuple[str, ...]          # path from gamma to gamma0, inclusive

    def __post_init__(self) -> None:
        if delete_chain(self.ambient, self.gamma0) != self.sub:
            raise ChainError("sub-diagram does not match the chain deletion")

    @property
    def gamma(self) -> str:
        return self.chain[0]

    @property
    def gamma0(self) -> str:
        return self.chain[-1]

    @cached_property
    def big_gamma(self) -> Root:
        """Sum of the chain's simple roots, gamma excluded, gamma0 included."""
        rs = self.ambient.root_system()
        total = Root(tuple(0 for _ in range(self.ambient.diagram.rank)))
        for label in self.chain[1:]:
            total = total + rs.simple_root(label)
        return total

    @property
    def pair_id(self) -> str:
        return f"{self.ambient.diagram.literal()}:{self.gamma}/{self.gamma0}"

    @property
    def name(self) -> str:
        return f"({space_name(self.sub)} in {space_name(self.ambient)})"

    def ambient_rs(self) -> RootSystem:
        return self.ambient.root_system()

    def sub_rs(self) -> RootSystem:
        return self.sub.root_system()

    def __repr__(self) -> str:
        return f"DeletionPair({self.pair_id})"


def make_pair(ambient: MarkedDiagram, gamma0: str) -> DeletionPair:
    gamma = ambient.single_mark
    sub = delete_chain(ambient, gamma0)
    path = tuple(tree_path(ambient.diagram, gamma, gamma0))
    return DeletionPair(ambient, sub, path)


def catalog(max_rank: int) -> list[DeletionPair]:
    """All instantiations of the deletion-type families with rank <= max_rank.

    Families: B_n (gamma=a1, gamma0=a_m, 2 <= m <= n-1), D_n spinor
    (gamma=a_n, gamma0=a_{n-2}), D_n quadric (gamma=a1, gamma0=a_m,
    2 <= m <= n-2), E6 (gamma0 in {a4, a5}) and E7 (gamma0 in {a4, a5, a6}).
    """
    if max_rank < 4:
        raise ValueError("max_rank must be at least 4")
    out: list[DeletionPair] = []
    for n in range(3, max_rank + 1):
        for m in range(2, n):
            out.append(make_pair(parse_marked(f"B{n}:a1"), f"a{m}"))
    for n in range(4, max_rank + 1):
        out.append(make_pair(parse_marked(f"D{n}:a{n}"), f"a{n - 2}"))
        for m in range(2, n - 1):
            out.append(make_pair(parse_marked(f"D{n}:a1"), f"a{m}"))
    if max_rank >= 6:
        for g0 in ("a4", "a5"):
            out.append(make_pair(parse_marked("E6:a6"), g0))
    if max_rank >= 7:
        for g0 in ("a4", "a5", "a6"):
            out.append(make_pair(parse_marked("E7:a7"), g0))
    return out


def catalog_by_id(max_rank: int) -> dict[str, DeletionPair]:
    return {p.pair_id: p for p in catalog(max_rank)}


@dataclass(frozen=True)
class RootCorrespondence:
    """The embedding Phi of the sub root data into the ambient system."""

    pair: DeletionPair
    on_simple: tuple[tuple[str, Root], ...]   # sub node label -> ambient root

    @cached_property
    def _map(self) -> dict[str, Root]:
        return dict(self.on_simple)

    def apply(self, beta: Root) -> Root:
        """Additive extension of Phi to any sub-coordinate root."""
        sub_nodes = self.pair.sub.diagram.nodes
        total = Root(tuple(0 for _ in range(self.pair.ambient.diagram.rank)))
        for label, c in zip(sub_nodes, beta.coeffs):
            if c:
                total = total + self._map[label].scaled(c)
        return total

    @cached_property
    def noncompact_image(self) -> frozenset[Root]:
        nc0 = hss.noncompact_positive_roots(self.pair.sub)
        return frozenset(self.apply(b) for b in nc0.weights)


def root_correspondence(pair: DeletionPair) -> RootCorrespondence:
    """Build Phi and verify the three embedding invariants exactly."""
    ars = pair.ambient_rs()
    srs = pair.sub_rs()
    sub_diag = pair.sub.diagram
    neighbors0 = set(sub_diag.neighbors(pair.gamma0))
    gamma_root = ars.simple_root(pair.gamma)

    table: dict[str, Root] = {}
    for label in sub_diag.nodes:
        if label == pair.gamma0:
            table[label] = gamma_root
        elif label in neighbors0:
            table[label] = ars.simple_root(label) + pair.big_gamma
        else:
            table[label] = ars.simple_root(label)
    corr = RootCorrespondence(pair, tuple(sorted(table.items())))

    for label, image in table.items():
        if not ars.is_root(image):
            raise CorrespondenceError(f"Phi({label}) = {image} is not an ambient root")
    for la in sub_diag.nodes:
        for lb in sub_diag.nodes:
            want = srs.pairing(srs.simple_root(la), srs.simple_root(lb))
            got = ars.pairing(table[la], table[lb])
            if want != got:
                raise CorrespondenceError(
                    f"pairing mismatch at ({la}, {lb}): <Phi,Phi> = {got}, expected {want}"
                )
    nc0 = hss.noncompact_positive_roots(pair.sub)
    nc = hss.noncompact_positive_roots(pair.ambient)
    image = [corr.apply(b) for b in nc0.weights]
    if len(set(image)) != len(nc0):
        raise CorrespondenceError("Phi is not injective on noncompact roots")
    stray = [b for b in image if b not in nc.weights]
    if stray:
        raise CorrespondenceError(f"Phi image leaves the noncompact cone: {stray[:3]}")
    return corr


@dataclass(frozen=True)
class MaximalityVerdict:
    maximal: bool
    witnesses: tuple[DeletionPair, ...]   # first steps (X1 in X) of decompositions

    def witness_ids(self) -> tuple[str, ...]:
        return tuple(w.pair_id for w in self.witnesses)


def _single_deletions(md: MarkedDiagram) -> list[DeletionPair]:
    """All valid one-step deletions from a marked diagram to a connected result."""
    gamma = md.single_mark
    out = []
    for node in md.diagram.nodes:
        if node == gamma:
            continue
        try:
            sub = delete_chain(md, node)
        except (ChainError, ValueError):
            continue
        if len(sub.diagram.components) != 1:
            continue
        out.append(make_pair(md, node))
    return out


def is_maximal(pair: DeletionPair, max_rank: int = 0) -> MaximalityVerdict:
    """Exhaustive search for an intermediate deletion step X0 in X1 in X."""
    witnesses = []
    for step in _single_deletions(pair.ambient):
        mid = step.sub
        if mid == pair.sub or mid == pair.ambient:
            continue
        if pair.gamma0 not in mid.diagram.nodes:
            continue
        try:
            second = delete_chain(mid, pair.gamma0)
        except (ChainError, ValueError):
            continue
        if second == pair.sub:
            witnesses.append(step)
    witnesses.sort(key=lambda p: p.pair_id)
    return MaximalityVerdict(not witnesses, tuple(witnesses))
