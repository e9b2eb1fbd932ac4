"""Dynkin diagrams, exact root systems, Weyl reflections, chain deletion.

Roots are integer coefficient vectors over the simple-root basis of a fixed
diagram, indexed by the diagram's node order.  All inner products use the
symmetrized Cartan matrix with exact rationals; long roots are normalized to
squared length 2.  Node labels follow Bourbaki numbering ("a1", "a2", ...),
global across the components of a product diagram.

The Cartan pairing convention is <b, g> = 2(b, g)/(g, g), i.e. the second
slot carries the normalization.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache


class DiagramError(ValueError):
    """Raised for malformed or unclassifiable Dynkin diagram data."""


class MarkError(ValueError):
    """Raised when a marked node is not cominuscule in its component."""


class ChainError(ValueError):
    """Raised when two nodes are not connected by a type-A chain."""


@dataclass(frozen=True, order=True)
class Root:
    """Element of the root lattice in simple-root coordinates."""

    coeffs: tuple[int, ...]

    def __add__(self, other: "Root") -> "Root":
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Root") -> "Root":
        return Root(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Root":
        return Root(tuple(-a for a in self.coeffs))

    def scaled(self, k: int) -> "Root":
        return Root(tuple(k * a for a in self.coeffs))

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    @property
    def sign_consistent(self) -> bool:
        """True iff all coefficients share a sign (and the vector is nonzero)."""
        return (not self.is_zero) and (
            all(a >= 0 for a in self.coeffs) or all(a <= 0 for a in self.coeffs)
        )

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.coeffs) if a != 0)

    @staticmethod
    def simple(i: int, rank: int) -> "Root":
        return Root(tuple(1 if j == i else 0 for j in range(rank)))

    def __repr__(self) -> str:
        return f"Root{self.coeffs}"


@dataclass(frozen=True)
class Component:
    """A classified connected component with its Bourbaki relabeling.

    ``labels[k]`` is the node playing the role of alpha_{k+1} in the
    Bourbaki numbering of the component's type.
    """

    letter: str
    labels: tuple[str, ...]

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"

    def bourbaki_index(self, label: str) -> int:
        """1-based Bourbaki index of a node within this component."""
        return self.labels.index(label) + 1


Edge = tuple[str, str, int, "str | None"]


@dataclass(frozen=True)
class DynkinDiagram:
    """A (possibly disconnected) Dynkin diagram.

    Edges are ``(u, v, multiplicity, arrow)`` with u before v in node order;
    ``arrow`` names the short-root endpoint for multiplicity >= 2 and is
    None for simple bonds.
    """

    nodes: tuple[str, ...]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != len(self.nodes):
            raise DiagramError("duplicate node labels")
        pos = {a: i for i, a in enumerate(self.nodes)}
        seen = set()
        for u, v, mult, arrow in self.edges:
            if u not in pos or v not in pos or u == v:
                raise DiagramError(f"bad edge endpoints ({u}, {v})")
            if pos[u] > pos[v]:
                raise DiagramError(f"edge ({u}, {v}) not in node order")
            if frozenset((u, v)) in seen:
                raise DiagramError(f"parallel edges between {u} and {v}")
            seen.add(frozenset((u, v)))
            if mult not in (1, 2, 3):
                raise DiagramError(f"bond multiplicity {mult} out of range")
            if mult == 1 and arrow is not None:
                raise DiagramError("multiplicity-1 edges carry no arrow")
            if mult >= 2 and arrow not in (u, v):
                raise DiagramError("multiple bond needs an arrow endpoint")
        self.components  # classify eagerly so invalid diagrams fail here

    @property
    def rank(self) -> int:
        return len(self.nodes)

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    @cached_property
    def index(self) -> dict[str, int]:
        return {a: i for i, a in enumerate(self.nodes)}

    @cached_property
    def adjacency(self) -> dict[str, dict[str, tuple[int, "str | None"]]]:
        adj: dict[str, dict[str, tuple[int, str | None]]] = {a: {} for a in self.nodes}
        for u, v, mult, arrow in self.edges:
            adj[u][v] = (mult, arrow)
            adj[v][u] = (mult, arrow)
        return adj

    @cached_property
    def components(self) -> tuple[Component, ...]:
        remaining = set(self.nodes)
        comps = []
        for start in self.nodes:
            if start not in remaining:
                continue
            block = _connected_block(start, self.adjacency)
            remaining -= set(block)
            comps.append(_classify(sorted(block, key=self.index.__getitem__), self.adjacency))
        return tuple(comps)

    def component_of(self, label: str) -> Component:
        for comp in self.components:
            if label in comp.labels:
                return comp
        raise DiagramError(f"no node {label!r}")

    def neighbors(self, label: str) -> tuple[str, ...]:
        return tuple(sorted(self.adjacency[label], key=self.index.__getitem__))

    def induced(self, keep: "set[str] | frozenset[str]") -> "DynkinDiagram":
        nodes = tuple(a for a in self.nodes if a in keep)
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return DynkinDiagram(nodes, edges)

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """C[i][j] = <alpha_j, alpha_i> = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)."""
        n = self.rank
        C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for u, v, mult, arrow in self.edges:
            i, j = self.index[u], self.index[v]
            if mult == 1:
                C[i][j] = C[j][i] = -1
            else:
                s = self.index[arrow]        # short root gets the -mult entry
                l = j if s == i else i
                C[s][l] = -mult
                C[l][s] = -1
        return tuple(tuple(row) for row in C)

    @cached_property
    def symmetrized_form(self) -> tuple[tuple[Fraction, ...], ...]:
        """Gram matrix (alpha_i, alpha_j), with long roots of squared length 2."""
        n = self.rank
        C = self.cartan_matrix
        d: list[Fraction | None] = [None] * n
        for comp in self.components:
            idxs = [self.index[a] for a in comp.labels]
            d[idxs[0]] = Fraction(1)
            queue = deque([comp.labels[0]])
            while queue:
                a = queue.popleft()
                i = self.index[a]
                for b in self.adjacency[a]:
                    j = self.index[b]
                    if d[j] is None:
                        d[j] = d[i] * Fraction(C[i][j], C[j][i])
                        queue.append(b)
            top = max(d[i] for i in idxs)
            for i in idxs:
                d[i] /= top
        return tuple(tuple(d[i] * C[i][j] for j in range(n)) for i in range(n))

    def literal(self) -> str:
        return "+".join(comp.name for comp in self.components)


def _connected_block(start: str, adj: dict[str, dict]) -> list[str]:
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return list(seen)


def _walk_path(start: str, labels: list[str], adj: dict[str, dict]) -> list[str]:
    seq = [start]
    prev = None
    while True:
        nxt = [b for b in adj[seq[-1]] if b in labels and b != prev]
        if not nxt:
            return seq
        if len(nxt) > 1:
            raise DiagramError("not a path")
        prev = seq[-1]
        seq.append(nxt[0])


def _classify(labels: list[str], full_adj: dict[str, dict]) -> Component:
    """Match one connected component against the finite-type classification."""
    adj = {a: {b: m for b, m in full_adj[a].items() if b in set(labels)} for a in labels}
    n = len(labels)
    nedges = sum(len(adj[a]) for a in labels) // 2
    if nedges != n - 1:
        raise DiagramError(f"component {labels} contains a cycle")
    mults = sorted(m for a in labels for (m, _) in adj[a].values())
    degrees = {a: len(adj[a]) for a in labels}
    if any(d > 3 for d in degrees.values()):
        raise DiagramError(f"component {labels}: node of degree > 3")

    if mults and mults[-1] == 3:
        if n != 2 or mults != [3, 3]:
            raise DiagramError(f"component {labels}: stray triple bond")
        (u, v, _, arrow) = next(iter(_component_edges(labels, full_adj)))
        short = arrow
        longr = v if short == u else u
        return Component("G", (short, longr))

    if mults and mults[-1] == 2:
        doubles = [e for e in _component_edges(labels, full_adj) if e[2] == 2]
        if len(doubles) != 1 or any(d > 2 for d in degrees.values()):
            raise DiagramError(f"component {labels}: unclassifiable multiple bonds")
        ends = [a for a in labels if degrees[a] <= 1]
        seq = _walk_path(ends[0], labels, adj)
        (u, v, _, arrow) = doubles[0]
        k = min(seq.index(u), seq.index(v))
        if n == 2:
            longr = v if arrow == u else u
            return Component("B", (longr, arrow))
        if k == 0:
            seq, k = seq[::-1], n - 2
        if k == n - 2:
            letter = "B" if arrow == seq[-1] else "C"
            return Component(letter, tuple(seq))
        if n == 4 and k == 1:
            if arrow != seq[2]:
                seq = seq[::-1]
            if full_adj[seq[1]][seq[2]][1] != seq[2]:
                raise DiagramError(f"component {labels}: not of type F4")
            return Component("F", tuple(seq))
        raise DiagramError(f"component {labels}: double bond in illegal position")

    branch = [a for a in labels if degrees[a] == 3]
    if not branch:
        if n == 1:
            return Component("A", tuple(labels))
        ends = sorted((a for a in labels if degrees[a] == 1), key=labels.index)
        seqs = [_walk_path(e, labels, adj) for e in ends]
        best = min(seqs, key=lambda s: [labels.index(a) for a in s])
        return Component("A", tuple(best))
    if len(branch) > 1:
        raise DiagramError(f"component {labels}: more than one branch node")
    b = branch[0]
    arms = []
    for nb in adj[b]:
        seq = [nb]
        prev = b
        while True:
            nxt = [c for c in adj[seq[-1]] if c != prev]
            if not nxt:
                break
            prev = seq[-1]
            seq.append(nxt[0])
        arms.append(seq)
    lengths = sorted(len(a) for a in arms)
    if lengths[:2] == [1, 1]:
        tips = sorted([a[0] for a in arms if len(a) == 1], key=labels.index)
        tails = [a for a in arms if len(a) == lengths[2]]
        if lengths[2] == 1:   # D4: three symmetric arms
            tail_leaf = tips[0]
            tips = tips[1:]
            tail = [tail_leaf]
        else:
            tail = tails[0]
        return Component("D", tuple(reversed(tail)) + (b,) + tuple(tips))
    if lengths[0] == 1 and lengths[1] == 2 and lengths[2] in (2, 3, 4):
        short = next(a for a in arms if len(a) == 1)
        twos = [a for a in arms if len(a) == 2]
        longs = [a for a in arms if len(a) == lengths[2]]
        candidates = []
        if lengths[2] == 2:   # E6: the two length-2 arms are interchangeable
            candidates = [(twos[0], twos[1]), (twos[1], twos[0])]
        else:
            candidates = [(twos[0], longs[0])]
        orders = []
        for mid, tail in candidates:
            orders.append((mid[1], short[0], mid[0], b) + tuple(tail))
        best = min(orders, key=lambda s: [labels.index(a) for a in s])
        return Component("E", best)
    raise DiagramError(f"component {labels}: arm lengths {lengths} match no type")


def _component_edges(labels: list[str], full_adj: dict[str, dict]):
    block = set(labels)
    seen = set()
    for a in labels:
        for bnode, (m, arrow) in full_adj[a].items():
            if bnode in block and frozenset((a, bnode)) not in seen:
                seen.add(frozenset((a, bnode)))
                yield (a, bnode, m, arrow)


# ---------------------------------------------------------------------------
# Diagram literals
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^([ABCDEFG])([0-9]+)$")
_RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
                "E": (6, 8), "F": (4, 4), "G": (2, 2)}


def _term_edges(letter: str, n: int, offset: int) -> tuple[list[str], list[Edge]]:
    lab = [f"a{offset + i}" for i in range(1, n + 1)]
    edges: list[Edge] = []

    def bond(i: int, j: int, mult: int = 1, short: int | None = None) -> None:
        edges.append((lab[i - 1], lab[j - 1], mult, None if short is None else lab[short - 1]))

    if letter == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif letter in ("B", "C"):
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, 2, n if letter == "B" else n - 1)
    elif letter == "D":
        for i in range(1, n - 2):
            bond(i, i + 1)
        if n >= 4:
            bond(n - 2, n - 1)
            bond(n - 2, n)
        else:   # D3 degenerates to the A3 shape
            bond(1, 2)
            bond(1, 3)
    elif letter == "E":
        chain = [1, 3, 4, 5, 6, 7, 8][: n - 1]
        for i, j in zip(chain, chain[1:]):
            bond(i, j)
        bond(2, 4)
    elif letter == "F":
        bond(1, 2)
        bond(2, 3, 2, 3)
        bond(3, 4)
    elif letter == "G":
        bond(1, 2, 3, 1)
    return lab, edges


def parse_diagram(text: str) -> DynkinDiagram:
    """Parse a diagram literal such as "E7", "B4" or "A1+A2"."""
    nodes: list[str] = []
    edges: list[Edge] = []
    offset = 0
    for term in text.strip().split("+"):
        m = _TERM_RE.match(term.strip())
        if not m:
            raise DiagramError(f"cannot parse diagram literal {term!r}")
        letter, n = m.group(1), int(m.group(2))
        lo, hi = _RANK_BOUNDS[letter]
        if n < lo or (hi is not None and n > hi):
            raise DiagramError(f"rank {n} out of range for type {letter}")
        lab, e = _term_edges(letter, n, offset)
        nodes += lab
        edges += e
        offset += n
    return DynkinDiagram(tuple(nodes), frozenset(edges))


def parse_marked(text: str) -> "MarkedDiagram":
    """Parse a marked literal such as "E7:a7" or "A1+A2:a1,a3"."""
    if ":" not in text:
        raise DiagramError(f"marked literal {text!r} needs ':' and mark labels")
    diag_text, _, marks = text.partition(":")
    diagram = parse_diagram(diag_text)
    labels = frozenset(m.strip() for m in marks.split(",") if m.strip())
    return MarkedDiagram(diagram, labels)


# ---------------------------------------------------------------------------
# Root systems
# ---------------------------------------------------------------------------

class RootSystem:
    """The full positive system over a diagram, with exact pairings."""

    def __init__(self, diagram: DynkinDiagram):
        self.diagram = diagram
        self.cartan = diagram.cartan_matrix
        self.sym = diagram.symmetrized_form
        self.positive_roots = frozenset(self._generate())
        self._all = self.positive_roots | {-r for r in self.positive_roots}

    def _generate(self) -> set[Root]:
        n = self.diagram.rank
        roots: set[Root] = {Root.simple(i, n) for i in range(n)}
        layer = set(roots)
        while layer:
            nxt: set[Root] = set()
            for beta in layer:
                for i in range(n):
                    alpha = Root.simple(i, n)
                    p = 0
                    while beta - alpha.scaled(p + 1) in roots:
                        p += 1
                    if p - self.pairing_simple(beta, i) > 0:
                        cand = beta + alpha
                        if cand not in roots:
                            nxt.add(cand)
            roots |= nxt
            layer = nxt
        return roots

    # -- pairings ----------------------------------------------------------

    def pairing_simple(self, beta: Root, i: int) -> int:
        """<beta, alpha_i>, always an integer."""
        return sum(b * self.cartan[i][j] for j, b in enumerate(beta.coeffs) if b)

    def bilinear(self, beta: Root, gamma: Root) -> Fraction:
        """(beta, gamma) under the symmetrized form."""
        total = Fraction(0)
        for i, b in enumerate(beta.coeffs):
            if not b:
                continue
            row = self.sym[i]
            total += b * sum(row[j] * g for j, g in enumerate(gamma.coeffs) if g)
        return total

    def pairing(self, beta: Root, gamma: Root) -> "int | Fraction":
        """Cartan pairing <beta, gamma> = 2(beta, gamma)/(gamma, gamma)."""
        if gamma.is_zero:
            raise ValueError("pairing against the zero vector")
        value = 2 * self.bilinear(beta, gamma) / self.bilinear(gamma, gamma)
        return int(value) if value.denominator == 1 else value

    # -- membership and reflections -----------------------------------------

    def is_root(self, r: Root) -> bool:
        return r in self._all

    def is_positive_root(self, r: Root) -> bool:
        return r in self.positive_roots

    def simple_root(self, label: str) -> Root:
        return Root.simple(self.diagram.index[label], self.diagram.rank)

    def reflect(self, node: "int | str", beta: Root) -> Root:
        """Simple reflection s_{alpha_i}(beta) = beta - <beta, alpha_i> alpha_i."""
        i = self.diagram.index[node] if isinstance(node, str) else node
        return beta - Root.simple(i, self.diagram.rank).scaled(self.pairing_simple(beta, i))

    def reflect_root(self, rho: Root, beta: Root) -> Root:
        """Reflection in an arbitrary root rho."""
        k = self.pairing(beta, rho)
        if isinstance(k, Fraction):
            raise ValueError(f"non-integral pairing while reflecting in {rho}")
        return beta - rho.scaled(k)

    def height(self, r: Root) -> int:
        return r.height

    def component_roots(self, comp: Component) -> frozenset[Root]:
        idxs = {self.diagram.index[a] for a in comp.labels}
        return frozenset(r for r in self.positive_roots if set(r.support()) <= idxs)

    def highest_root(self, comp: Component) -> Root:
        croots = self.component_roots(comp)
        top = max(croots, key=lambda r: (r.height, r.coeffs))
        if sum(1 for r in croots if r.height == top.height) != 1:
            raise DiagramError(f"component {comp.name}: highest root not unique")
        return top

    def coefficient(self, r: Root, label: str) -> int:
        return r.coeffs[self.diagram.index[label]]

    def __repr__(self) -> str:
        return f"RootSystem({self.diagram.literal()}, {len(self.positive_roots)} positive roots)"


@lru_cache(maxsize=None)
def build_root_system(diagram: DynkinDiagram) -> RootSystem:
    """Construct (and cache) the positive root system of a diagram."""
    return RootSystem(diagram)


def cartan_pairing(beta: Root, gamma: Root, rs: RootSystem) -> "int | Fraction":
    return rs.pairing(beta, gamma)


def reflect(node: "int | str", beta: Root, rs: RootSystem) -> Root:
    return rs.reflect(node, beta)


# ---------------------------------------------------------------------------
# Marked diagrams
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MarkedDiagram:
    """A Dynkin diagram with a distinguished cominuscule node set."""

    diagram: DynkinDiagram
    marked: frozenset[str]

    def __post_init__(self) -> None:
        if self.diagram.is_empty:
            if self.marked:
                raise MarkError("empty diagram cannot carry marks")
            return
        if not self.marked:
            raise MarkError("marked node set must be nonempty")
        unknown = self.marked - set(self.diagram.nodes)
        if unknown:
            raise MarkError(f"unknown marked nodes {sorted(unknown)}")
        rs = build_root_system(self.diagram)
        for comp in self.diagram.components:
            marks_here = self.marked & set(comp.labels)
            if len(marks_here) > 1:
                raise MarkError(f"component {comp.name} carries several marks")
            for mark in marks_here:
                theta = rs.highest_root(comp)
                if rs.coefficient(theta, mark) != 1:
                    raise MarkError(
                        f"{mark} is not cominuscule in {comp.name}: highest root "
                        f"coefficient is {rs.coefficient(theta, mark)}"
                    )

    @property
    def is_empty(self) -> bool:
        return self.diagram.is_empty

    @property
    def single_mark(self) -> str:
        if len(self.marked) != 1:
            raise MarkError(f"expected a single mark, found {sorted(self.marked)}")
        return next(iter(self.marked))

    def root_system(self) -> RootSystem:
        return build_root_system(self.diagram)

    def literal(self) -> str:
        marks = ",".join(sorted(self.marked, key=self.diagram.index.__getitem__))
        return f"{self.diagram.literal()}:{marks}"


def tree_path(diagram: DynkinDiagram, a: str, b: str) -> list[str]:
    """The unique path between two nodes of the same component."""
    if a not in diagram.index or b not in diagram.index:
        raise DiagramError(f"unknown node in path query ({a}, {b})")
    prev: dict[str, str] = {}
    queue = deque([a])
    seen = {a}
    while queue:
        x = queue.popleft()
        if x == b:
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return path[::-1]
        for y in diagram.adjacency[x]:
            if y not in seen:
                seen.add(y)
                prev[y] = x
                queue.append(y)
    raise ChainError(f"{a} and {b} lie in different components")


def delete_chain(ambient: MarkedDiagram, gamma0: str) -> MarkedDiagram:
    """Delete the type-A chain running from the mark to (but excluding) gamma0.

    The surviving sub-diagram is returned marked at gamma0.
    """
    gamma = ambient.single_mark
    if gamma0 == gamma:
        raise ChainError("gamma0 coincides with the marked node")
    path = tree_path(ambient.diagram, gamma, gamma0)
    adj = ambient.diagram.adjacency
    for u, v in zip(path, path[1:]):
        mult, _ = adj[u][v]
        if mult != 1:
            raise ChainError(
                f"{gamma} and {gamma0} are not connected by a type-A chain: "
                f"bond ({u}, {v}) has multiplicity {mult}"
            )
    removed = set(path[:-1])
    sub = ambient.diagram.induced(set(ambient.diagram.nodes) - removed)
    return MarkedDiagram(sub, frozenset({gamma0}))


# ---------------------------------------------------------------------------
# Naming helpers
# ---------------------------------------------------------------------------

def canonical_mark_position(comp: Component, mark: str) -> int:
    """Bourbaki index of a mark, folded along the component's symmetry."""
    n = comp.rank
    m = comp.bourbaki_index(mark)
    if comp.letter == "A":
        return min(m, n + 1 - m)
    if comp.letter == "D" and m in (n - 1, n) and n >= 4:
        return n
    return m


def component_space_name(comp: Component, mark: str) -> str:
    n = comp.rank
    m = canonical_mark_position(comp, mark)
    if comp.letter == "A":
        return f"P^{n}" if m == 1 else f"G({m},{n + 1 - m})"
    if comp.letter == "B" and m == 1:
        return f"Q^{2 * n - 1}"
    if comp.letter == "D":
        if m == 1:
            return f"Q^{2 * n - 2}"
        if m == n:
            return f"G^II({n},{n})"
    if comp.letter == "C" and m == n:
        return f"G^III({n},{n})"
    return f"{comp.name}/P{m}"


def is_hyperquadric(md: MarkedDiagram) -> bool:
    """True when the marked diagram names a smooth quadric hypersurface.

    Covers the usual rows (B_n, a1) and (D_n, a1) together with the triality
    images: every cominuscule mark of D4 gives the six-dimensional quadric,
    and (A1, a1) is the conic.
    """
    if md.is_empty or len(md.marked) != 1:
        return False
    mark = md.single_mark
    comp = md.diagram.component_of(mark)
    if len(md.diagram.components) != 1:
        return False
    m = canonical_mark_position(comp, mark)
    if comp.letter == "B" and m == 1:
        return True
    if comp.letter == "D" and (m == 1 or comp.rank == 4):
        return True
    if comp.letter == "A" and comp.rank == 1:
        return True
    if comp.letter == "A" and comp.rank == 3 and m == 2:
        return True       # G(2,2) is the four-dimensional quadric
    return False


def space_name(md: MarkedDiagram) -> str:
    """Pretty name of the Hermitian symmetric space of a marked diagram."""
    if md.is_empty:
        return "pt"
    parts = []
    for comp in md.diagram.components:
        marks = md.marked & set(comp.labels)
        if marks:
            parts.append(component_space_name(comp, next(iter(marks))))
    return " x ".join(parts)


def descriptor(md: MarkedDiagram) -> tuple[tuple[str, int, int], ...]:
    """Canonical (letter, rank, mark position) triple per marked component."""
    out = []
    for comp in md.diagram.components:
        marks = md.marked & set(comp.labels)
        if marks:
            out.append((comp.letter, comp.rank,
                        canonical_mark_position(comp, next(iter(marks)))))
    return tuple(sorted(out))
