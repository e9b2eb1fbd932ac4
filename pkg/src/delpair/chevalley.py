"""Chevalley basis structure constants and exact bracket evaluation.

Signs follow the classical extraspecial-pair construction: positive roots are
totally ordered lexicographically in the simple-root basis (an order in which
summands always precede sums), each non-simple positive root rho picks the
extraspecial pair (alpha, beta) with alpha minimal among all ordered pairs of
positive roots summing to rho, and N_{alpha,beta} = p + 1 > 0 on those pairs.
Every other constant is forced by antisymmetry, N_{-a,-b} = -N_{a,b}, the
cyclic length-ratio identity for triples summing to zero, and the Jacobi
identity.  The resulting table satisfies |N_{a,b}| = p + 1 with p the largest
integer such that b - p a is a root.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import Root, RootSystem

BasisKey = tuple[str, "Root | int"]   # ("e", root) or ("h", simple index)


@dataclass(frozen=True)
class LieElement:
    """Finitely supported integer combination of root vectors and coroots."""

    terms: tuple[tuple[BasisKey, int], ...] = ()

    @staticmethod
    def from_dict(d: dict[BasisKey, int]) -> "LieElement":
        return LieElement(tuple(sorted((k, c) for k, c in d.items() if c != 0)))

    @staticmethod
    def root_vector(alpha: Root, coeff: int = 1) -> "LieElement":
        return LieElement.from_dict({("e", alpha): coeff})

    @staticmethod
    def coroot(i: int, coeff: int = 1) -> "LieElement":
        return LieElement.from_dict({("h", i): coeff})

    @staticmethod
    def zero() -> "LieElement":
        return LieElement()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[BasisKey, int]:
        return dict(self.terms)

    def __add__(self, other: "LieElement") -> "LieElement":
        d = self.as_dict()
        for k, c in other.terms:
            d[k] = d.get(k, 0) + c
        return LieElement.from_dict(d)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + other.scaled(-1)

    def scaled(self, k: int) -> "LieElement":
        return LieElement.from_dict({key: k * c for key, c in self.terms})

    def coefficient(self, key: BasisKey) -> int:
        return self.as_dict().get(key, 0)

    def root_support(self) -> set[Root]:
        return {k[1] for k, _ in self.terms if k[0] == "e"}


class ChevalleyTable:
    """Structure constants N_{a,b} for all ordered root pairs with a+b a root."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        roots = sorted(rs.positive_roots)
        self._norm = {r: rs.bilinear(r, r) for r in roots}
        self._pos: dict[tuple[Root, Root], int] = {}
        self._build_positive(roots)
        self.constants: dict[tuple[Root, Root], int] = {}
        self._extend_all_signs(roots)

    # -- construction --------------------------------------------------------

    def _p(self, a: Root, b: Root) -> int:
        """Largest p with b - p a a root."""
        p = 0
        while self.rs.is_root(b - a.scaled(p + 1)):
            p += 1
        return p

    def _build_positive(self, positives: list[Root]) -> None:
        by_height: dict[int, list[Root]] = {}
        for r in positives:
            by_height.setdefault(r.height, []).append(r)
        pos_set = set(positives)
        for h in sorted(by_height):
            if h == 1:
                continue
            for rho in by_height[h]:
                pairs = sorted(
                    (a, rho - a) for a in positives
                    if a < rho - a and (rho - a) in pos_set
                )
                if not pairs:
                    raise AssertionError(f"no decomposition of {rho} into positives")
                extra = pairs[0]   # minimal first element: the extraspecial pair
                self._pos[extra] = self._p(*extra) + 1
                self._pos[(extra[1], extra[0])] = -self._pos[extra]
                for xi, eta in pairs[1:]:
                    n = self._special_from_jacobi(xi, eta, extra)
                    self._pos[(xi, eta)] = n
                    self._pos[(eta, xi)] = -n

    def _special_from_jacobi(self, xi: Root, eta: Root,
                             extra: tuple[Root, Root]) -> int:
        """Solve the Jacobi identity on (xi, eta, -alpha) for N_{xi,eta}."""
        alpha, beta = extra
        rho = xi + eta
        t = 0
        if self.rs.is_root(eta - alpha):
            t += self._mixed(eta, -alpha) * self._signed_pair(eta - alpha, xi)
        if self.rs.is_root(xi - alpha):
            t += -self._mixed(xi, -alpha) * self._signed_pair(xi - alpha, eta)
        denom = self._mixed(rho, -alpha)
        value = Fraction(-t, denom)
        if value.denominator != 1 or value == 0:
            raise AssertionError(f"Jacobi reduction failed on ({xi}, {eta})")
        return int(value)

    def _signed_pair(self, a: Root, b: Root) -> int:
        """Constant for a pair whose members may have either sign."""
        apos, bpos = a in self.rs.positive_roots, b in self.rs.positive_roots
        if apos and bpos:
            return self._pos[(a, b)]
        if not apos and not bpos:
            return -self._pos[(-a, -b)]
        if apos:
            return self._mixed(a, b)
        return -self._mixed(b, a)

    def _mixed(self, mu: Root, negnu: Root) -> int:
        """Constant N_{mu, -nu} with mu, nu positive, reduced to positive pairs
        via the cyclic identity N_{a,b}/|c|^2 = N_{b,c}/|a|^2 for a+b+c = 0."""
        nu = -negnu
        rho = mu - nu
        if rho in self.rs.positive_roots:
            value = -Fraction(self._norm[rho], self._norm[mu]) * self._pos[(nu, rho)]
        else:
            value = Fraction(self._norm[-rho], self._norm[nu]) * self._pos[(-rho, mu)]
        if value.denominator != 1:
            raise AssertionError(f"non-integral mixed constant for ({mu}, {negnu})")
        return int(value)

    def _extend_all_signs(self, positives: list[Root]) -> None:
        allroots = positives + [-r for r in positives]
        rootset = set(allroots)
        for a in allroots:
            for b in allroots:
                if a + b in rootset:
                    self.constants[(a, b)] = self._signed_pair(a, b)

    # -- queries --------------------------------------------------------------

    def constant(self, a: Root, b: Root) -> int:
        """N_{a,b}; only defined when a + b is a root."""
        try:
            return self.constants[(a, b)]
        except KeyError:
            raise ValueError(f"{a} + {b} is not a root") from None

    def coroot_coefficients(self, alpha: Root) -> tuple[int, ...]:
        """Coefficients of the coroot of alpha over the simple coroots."""
        norm = self.rs.bilinear(alpha, alpha)
        out = []
        for i, k in enumerate(alpha.coeffs):
            c = Fraction(k) * self.rs.sym[i][i] / norm
            if c.denominator != 1:
                raise AssertionError(f"non-integral coroot for {alpha}")
            out.append(int(c))
        return tuple(out)


@lru_cache(maxsize=None)
def build_table(rs: RootSystem) -> ChevalleyTable:
    return ChevalleyTable(rs)


def bracket(x: LieElement, y: LieElement, table: ChevalleyTable) -> LieElement:
    """Lie bracket of two elements in the Chevalley basis."""
    rs = table.rs
    out: dict[BasisKey, int] = {}

    def acc(key: BasisKey, c: int) -> None:
        if c:
            out[key] = out.get(key, 0) + c

    for (kx, cx) in x.terms:
        for (ky, cy) in y.terms:
            c = cx * cy
            if kx[0] == "h" and ky[0] == "h":
                continue
            if kx[0] == "h" and ky[0] == "e":
                acc(ky, c * rs.pairing_simple(ky[1], kx[1]))
            elif kx[0] == "e" and ky[0] == "h":
                acc(kx, -c * rs.pairing_simple(kx[1], ky[1]))
            else:
                a, b = kx[1], ky[1]
                s = a + b
                if s.is_zero:
                    for i, hc in enumerate(table.coroot_coefficients(a)):
                        acc(("h", i), c * hc)
                elif rs.is_root(s):
                    acc(("e", s), c * table.constant(a, b))
    return LieElement.from_dict(out)
