"""The Segre embedding of a line times a plane, and its fitting checks.

Coordinates z_ij = a_i b_j (i in {0,1}, j in {0,1,2}) are flattened in the
order z_00, z_01, z_02, z_10, z_11, z_12; the image is cut out by the three
2x2 minors of the coordinate matrix.  Lines of the image have a bidegree:
(1,0)-lines sweep the first factor over a fixed plane point, (0,1)-lines fix
the first factor and sweep a line of the plane.
"""
from __future__ import annotations

import itertools

from ..report import FAIL, PASS, CheckReport
from .linalg import (
    LinearSubspace,
    PrimeField,
    kernel_basis,
    normalize_projective,
    prime_field,
    projective_points,
    rank,
)

_MINORS = (((0, 4), (1, 3)), ((0, 5), (2, 3)), ((1, 5), (2, 4)))


def segre_quadrics(coords: tuple, field) -> tuple:
    """The three 2x2 minors cutting out the variety."""
    z = [field.of(c) for c in coords]
    return tuple(
        field.sub(field.mul(z[a], z[b]), field.mul(z[c], z[d]))
        for ((a, b), (c, d)) in _MINORS
    )


def segre_polarization(x: tuple, y: tuple, field) -> tuple:
    """Polar bilinear forms B(x, y) = Q(x + y) - Q(x) - Q(y) of the minors."""
    xs = [field.of(c) for c in x]
    ys = [field.of(c) for c in y]
    out = []
    for ((a, b), (c, d)) in _MINORS:
        v = field.add(field.mul(xs[a], ys[b]), field.mul(ys[a], xs[b]))
        v = field.sub(v, field.mul(xs[c], ys[d]))
        v = field.sub(v, field.mul(ys[c], xs[d]))
        out.append(v)
    return tuple(out)


def segre_point(a: tuple, b: tuple, field) -> tuple:
    """Canonical image of (a, b) in the ambient projective 5-space."""
    coords = tuple(field.mul(field.of(ai), field.of(bj)) for ai in a for bj in b)
    return normalize_projective(coords, field)


def on_segre(coords: tuple, field) -> bool:
    return all(q == field.zero for q in segre_quadrics(coords, field))


def _plane_lines(field: PrimeField) -> list[tuple]:
    """Lines of the projective plane as canonical covectors."""
    return list(projective_points(field, 3))


def _line_points(cov: tuple, field: PrimeField) -> list[tuple]:
    out = []
    for pt in projective_points(field, 3):
        if sum(c * x for c, x in zip(cov, pt)) % field.p == 0:
            out.append(pt)
    return out


def _span_section(points3: list[tuple], field: PrimeField) -> "tuple[set, LinearSubspace]":
    plane = LinearSubspace.span(points3, field)
    if plane.projective_dim != 2:
        raise ValueError("span is not a plane")
    section = set()
    for coeffs in projective_points(field, 3):
        coords = plane.combination(coeffs)
        if any(x != 0 for x in coords) and on_segre(coords, field):
            section.add(normalize_projective(coords, field))
    return section, plane


# -- configuration orbit under the product of the two linear groups ----------

def _invertible(mat: list[list], field: PrimeField) -> bool:
    return rank([row[:] for row in mat], field) == len(mat)

def _gl_generators(n: int, field: PrimeField) -> list[tuple]:
    gens = []
    for i in range(n):
        for j in range(n):
            if i != j:
                m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
                m[i][j] = 1
                gens.append(tuple(tuple(r) for r in m))
    for g in range(2, field.p):
        m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
        m[0][0] = g
        gens.append(tuple(tuple(r) for r in m))
        break
    return gens


def _mat_vec(m: tuple, v: tuple, field: PrimeField) -> tuple:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) % field.p
                 for i in range(len(m)))


def _mat_inv(m: tuple, field: PrimeField) -> tuple:
    n = len(m)
    aug = [[m[i][j] % field.p for j in range(n)] + [1 if i == j else 0 for j in range(n)]
           for i in range(n)]
    red, pivots = _rref_rows(aug, field)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return tuple(tuple(row[n:]) for row in red)


def _rref_rows(rows: list[list], field: PrimeField):
    from .linalg import rref
    red, piv = rref([[field.of(x) for x in r] for r in rows], field)
    return red, piv


def _transform_config(config, g2, g3, g3inv, field: PrimeField):
    """Push a (x, L, a, b) configuration through (g2, g3)."""
    x, L, a, b = config
    x2 = normalize_projective(_mat_vec(g2, x, field), field)
    a2 = normalize_projective(_mat_vec(g2, a, field), field)
    b2 = normalize_projective(_mat_vec(g3, b, field), field)
    # covectors transform by the inverse on the right: L' = L . g3^{-1}
    L2 = tuple(sum(L[i] * g3inv[i][j] for i in range(3)) % field.p for j in range(3))
    L2 = normalize_projective(L2, field)
    return (x2, L2, a2, b2)


# -- the fitting report -------------------------------------------------------

def segre_fitting_report(q: int) -> CheckReport:
    """Exhaustive base-case checks for the fitting of a point plus a line.

    (a) a (1,0)-line plus an off-line point spans a plane whose section
        contains the joining (0,1)-curve, so no exact point-plus-line section
        exists with a (1,0)-line;
    (b) a (0,1)-line {x} x L plus a point (a, b) with a != x and b off L
        meets the variety in exactly the line and the point;
    (c) the valid configurations of (b) form a single orbit under the product
        of the projective linear groups of the two factors.
    """
    field = prime_field(q)
    p1 = list(projective_points(field, 2))
    p2 = list(projective_points(field, 3))
    lines2 = _plane_lines(field)
    subject = f"F{q}"
    failures: list[dict] = []

    segre_pts = {segre_point(a, b, field) for a in p1 for b in p2}
    expected_count = (q + 1) * (q * q + q + 1)
    if len(segre_pts) != expected_count:
        failures.append({"check": "point-count", "got": len(segre_pts),
                         "expected": expected_count})

    # (a) bidegree-(1,0) lines never fit with an extra point
    a_configs = 0
    for y in p2:
        line_pts = [segre_point(x, y, field) for x in p1]
        for (a, b) in itertools.product(p1, p2):
            if b == y:
                continue
            a_configs += 1
            pt = segre_point(a, b, field)
            section, plane = _span_section([line_pts[0], line_pts[1], pt], field)
            join = _join_points(y, b, field)
            witness_curve = {segre_point(a, m, field) for m in join}
            if not witness_curve <= section:
                failures.append({"check": "a-witness", "y": y, "point": (a, b)})
            if section == set(line_pts) | {pt}:
                failures.append({"check": "a-exact-section", "y": y, "point": (a, b)})
    # (b) bidegree-(0,1) lines fit exactly
    b_configs = 0
    for x in p1:
        for L in lines2:
            Lpts = _line_points(L, field)
            line_img = [segre_point(x, m, field) for m in Lpts]
            for a in p1:
                if a == x:
                    continue
                for b in p2:
                    if b in Lpts:
                        continue
                    b_configs += 1
                    pt = segre_point(a, b, field)
                    section, _ = _span_section([line_img[0], line_img[1], pt], field)
                    if section != set(line_img) | {pt}:
                        failures.append({"check": "b-section", "x": x, "L": L,
                                         "point": (a, b)})

    # (c) single orbit on the valid (x, L, a, b) configurations
    valid = set()
    for x in p1:
        for L in lines2:
            Lpts = set(_line_points(L, field))
            for a in p1:
                if a == x:
                    continue
                for b in p2:
                    if b not in Lpts:
                        valid.add((x, L, a, b))
    gens2 = [g for g in _gl_generators(2, field) if _invertible([list(r) for r in g], field)]
    gens3 = [g for g in _gl_generators(3, field) if _invertible([list(r) for r in g], field)]
    id2 = ((1, 0), (0, 1))
    id3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    moves = [(g, id3) for g in gens2] + [(id2, g) for g in gens3]
    seed = next(iter(sorted(valid)))
    orbit = {seed}
    frontier = [seed]
    while frontier:
        cfg = frontier.pop()
        for g2, g3 in moves:
            nxt = _transform_config(cfg, g2, g3, _mat_inv(g3, field), field)
            if nxt not in orbit:
                orbit.add(nxt)
                frontier.append(nxt)
    if orbit != valid:
        failures.append({"check": "c-orbit", "orbit_size": len(orbit),
                         "valid_configs": len(valid)})

    witnesses = [{
        "segre_points": len(segre_pts),
        "a_configs": a_configs,
        "b_configs": b_configs,
        "valid_configs": len(valid),
        "orbit_size": len(orbit),
        "single_orbit": orbit == valid,
    }]
    status = PASS if not failures else FAIL
    return CheckReport("segre.fitting", subject, status,
                       witnesses=witnesses + failures)


def _join_points(y: tuple, b: tuple, field: PrimeField) -> list[tuple]:
    """Points of the plane line through two distinct plane points."""
    cov = kernel_basis([[field.of(c) for c in y], [field.of(c) for c in b]], field, 3)[0]
    return _line_points(tuple(int(c) for c in cov), field)
