"""Independent oracles, kept deliberately apart from the library paths.

Root systems are regenerated here by reflection closure instead of root
strings; kernels are recomputed by raw root-sum arithmetic instead of
Chevalley brackets; counts come from closed formulas.
"""
from __future__ import annotations

from delpair.rootsys import DynkinDiagram, Root, RootSystem

COUNT_FORMULAS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


def closed_form_positive_count(diagram: DynkinDiagram) -> int:
    return sum(COUNT_FORMULAS[c.letter](c.rank) for c in diagram.components)


def reflection_closure_positive_roots(diagram: DynkinDiagram) -> frozenset[Root]:
    """Orbit of the simple roots under all simple reflections, positives only."""
    n = diagram.rank
    C = diagram.cartan_matrix

    def reflect(i: int, beta: Root) -> Root:
        k = sum(b * C[i][j] for j, b in enumerate(beta.coeffs))
        return Root(tuple(b - k * (1 if j == i else 0)
                          for j, b in enumerate(beta.coeffs)))

    roots = {Root.simple(i, n) for i in range(n)} | {-Root.simple(i, n) for i in range(n)}
    frontier = set(roots)
    while frontier:
        new = set()
        for beta in frontier:
            for i in range(n):
                img = reflect(i, beta)
                if img not in roots:
                    new.add(img)
        roots |= new
        frontier = new
    return frozenset(r for r in roots if all(c >= 0 for c in r.coeffs))


def string_p(rs: RootSystem, a: Root, b: Root) -> int:
    """Largest p with b - p a a root, by direct membership."""
    p = 0
    while rs.is_root(b - a.scaled(p + 1)):
        p += 1
    return p


def brute_kernel(psi, sub_tangent, gamma, noncompact, rs, quotient=frozenset()):
    """Kernel weights by raw root-sum arithmetic (no brackets involved)."""
    dead = set()
    allowed = set(psi) | {gamma} | set(quotient)
    for nu in psi:
        if all(
            (nu + nu2 - gamma) not in noncompact or (nu + nu2 - gamma) in allowed
            for nu2 in sub_tangent
        ):
            dead.add(nu)
    return frozenset(dead)


def gaussian_binomial_2_of_5(p: int) -> int:
    """Number of 2-subspaces of a 5-space over the field with p elements."""
    return (p**5 - 1) * (p**4 - 1) // ((p**2 - 1) * (p - 1))
