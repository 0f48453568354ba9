"""Extension frames: splitting x^e - 1 over F_{q0^e} into linear skew factors.

The big field carries theta, an automorphism of order e with fixed field
F_{q0} that restricts to sigma on the embedded F_q. With alpha normal and
beta = theta(alpha)/alpha, x^e - 1 = lclm(x - theta^i(beta), i < e).
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .caps import get_cap
from .errors import CapExceeded, InternalError, InvalidArgument, NotClosed
from .field import FieldAutomorphism, FiniteField, SubfieldEmbedding, make_field
from .linalg import rank
from .skew import SkewPolynomial, SkewRing, evaluate_right, lclm, lclm_all, right_exponent


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def extension_power(r: int, s: int, g: int, big_degree: int) -> int:
    """Smallest r' = r (mod s) with gcd(r', big_degree) = g."""
    for cand in range(r % s, big_degree + s, s):
        if cand and gcd(cand, big_degree) == g:
            return cand % big_degree
        if cand == 0 and big_degree == g:
            return 0
    raise InternalError("no extension of sigma found")  # unreachable


def mu_closure(T, mu: int, e: int) -> frozenset[int]:
    if mu <= 0 or e % mu:
        raise InvalidArgument(f"mu={mu} must divide e={e}")
    return frozenset((i + j * mu) % e for i in T for j in range(e // mu))


def is_mu_closed(T, mu: int, e: int) -> bool:
    T = frozenset(i % e for i in T)
    return mu_closure(T, mu, e) == T


def representative_set(T, mu: int, e: int) -> frozenset[int]:
    """{i mod mu : the whole orbit i + mu Z_e lies in T}."""
    if mu <= 0 or e % mu:
        raise InvalidArgument(f"mu={mu} must divide e={e}")
    T = frozenset(i % e for i in T)
    return frozenset(i for i in range(mu) if all((i + j * mu) % e in T for j in range(e // mu)))


def all_mu_closed_sets(mu: int, e: int):
    """Every mu-closed subset of Z_e, as unions of orbits (2^mu of them)."""
    m = e // mu
    for mask in range(1 << mu):
        yield frozenset(i + j * mu for i in range(mu) if mask >> i & 1 for j in range(m))


class ExtensionFrame:
    def __init__(self, aut: FieldAutomorphism, e: int, big_modulus=None,
                 embed_index: int | None = None, alpha: int | None = None):
        if e < 1:
            raise InvalidArgument("e must be >= 1")
        F = aut.field
        self.base_aut = aut
        self.base_field = F
        self.base_ring = SkewRing(aut)
        self.requested_e = e
        self.mu = aut.mu
        self.e = _lcm(e, aut.mu)
        self.m = self.e // self.mu
        self.q0 = aut.q0
        big_degree = aut.g * self.e
        if F.p ** big_degree > get_cap("field"):
            raise CapExceeded(f"big field GF({F.p}^{big_degree}) exceeds the size cap")
        B = make_field(F.p, big_degree, big_modulus)
        self.big_field = B
        self.theta = FieldAutomorphism(B, extension_power(aut.r, F.s, aut.g, big_degree))
        self.big_ring = SkewRing(self.theta)
        self.embeddings = self._embedding_roots()
        self.embed_index = 0 if embed_index is None else embed_index
        if not 0 <= self.embed_index < len(self.embeddings):
            raise InvalidArgument(f"embedding index must be < {len(self.embeddings)}")
        self._build_embedding(self.embeddings[self.embed_index])
        self.q0_sub = SubfieldEmbedding(B, aut.g)
        if alpha is None:
            alpha = self._find_normal()
        elif not self.is_normal(alpha):
            raise InvalidArgument(f"{B.format_element(alpha)} is not a normal element")
        self.alpha = alpha
        self.beta = B.div(self.theta.apply(alpha), alpha)
        self.roots = [self.theta.apply(self.beta, i) for i in range(self.e)]

    # -- embedding of F_q ----------------------------------------------------

    def _embedding_roots(self) -> list[int]:
        """Roots of the base modulus in the big field, ascending discrete log."""
        F, B = self.base_field, self.big_field
        vals = np.zeros(B.q, dtype=np.int64)
        power = np.ones(B.q, dtype=np.int64)
        xs = np.arange(B.q, dtype=np.int64)
        for c in F.modulus:
            vals = B.add_arr(vals, B.mul_arr(power, np.full(B.q, c, dtype=np.int64)))
            power = B.mul_arr(power, xs)
        roots = [int(a) for a in np.nonzero(vals == 0)[0] if a != 0]
        if F.s == 1:
            roots = [1]  # prime field: the identity embedding
        return sorted(roots, key=B.log)

    def _build_embedding(self, rho: int) -> None:
        F, B = self.base_field, self.big_field
        table = np.zeros(F.q, dtype=np.int64)
        vals = np.arange(F.q, dtype=np.int64)
        power = 1
        for _ in range(F.s):
            digit = vals % F.p
            vals //= F.p
            table = B.add_arr(table, B.mul_arr(digit, np.full(F.q, power, dtype=np.int64)))
            power = B.mul(power, rho)
        if len(np.unique(table)) != F.q:
            raise InternalError("embedding is not injective")
        self.rho = rho
        self._emb = [int(v) for v in table]
        self._restrict = {v: a for a, v in enumerate(self._emb)}
        w = F.primitive
        if self.theta.apply(self._emb[w]) != self._emb[self.base_aut.apply(w)]:
            raise InternalError("theta does not extend sigma on the embedded field")

    def embed(self, a: int) -> int:
        return self._emb[a]

    def restrict(self, b: int) -> int:
        try:
            return self._restrict[b]
        except KeyError:
            raise InternalError(f"{self.big_field.format_element(b)} is not in the embedded base field")

    def in_base(self, b: int) -> bool:
        return b in self._restrict

    def embed_poly(self, f: SkewPolynomial) -> SkewPolynomial:
        return SkewPolynomial(self.big_ring, (self._emb[c] for c in f.coeffs))

    def restrict_poly(self, f: SkewPolynomial) -> SkewPolynomial:
        return SkewPolynomial(self.base_ring, (self.restrict(c) for c in f.coeffs))

    # -- normal elements -------------------------------------------------------

    def is_normal(self, a: int) -> bool:
        if a == 0:
            return False
        sub = self.q0_sub
        rows = [sub.decompose(self.theta.apply(a, i)) for i in range(self.e)]
        return rank(self.big_field, rows) == self.e

    def _find_normal(self) -> int:
        B = self.big_field
        for k in range(B.order):
            a = B.exp(k)
            if self.is_normal(a):
                return a
        raise InternalError("no normal element found")

    # -- factorization of x^e - 1 --------------------------------------------

    def factor_unity(self) -> list[SkewPolynomial]:
        return [self.big_ring.linear(b) for b in self.roots]

    def constacyclic_roots(self, gamma: int, n: int | None = None) -> list[int]:
        """gamma theta^i(beta), i < n, with gamma taken from the base field."""
        n = self.e if n is None else n
        B = self.big_field
        g = self.embed(gamma)
        return [B.mul(g, self.roots[i % self.e]) for i in range(n)]

    def orbit_min_poly(self, i: int) -> SkewPolynomial:
        """M_{theta^i(beta)} as a polynomial over the base field."""
        if not 0 <= i < self.mu:
            raise InvalidArgument(f"orbit index must be in [0, {self.mu})")
        big = self.orbit_min_poly_big(i)
        if not all(self.in_base(c) for c in big.coeffs):
            raise InternalError(f"orbit polynomial {i} has coefficients outside the base field")
        return self.restrict_poly(big)

    def orbit_min_poly_big(self, i: int) -> SkewPolynomial:
        return lclm_all(self.big_ring.linear(self.roots[(i + j * self.mu) % self.e])
                        for j in range(self.m))

    def defining_set(self, g: SkewPolynomial) -> frozenset[int]:
        gb = self.embed_poly(g)
        return frozenset(i for i, b in enumerate(self.roots) if evaluate_right(gb, b) == 0)

    def generator_from_defining_set(self, T) -> SkewPolynomial:
        T = frozenset(i % self.e for i in T)
        if not is_mu_closed(T, self.mu, self.e):
            raise NotClosed(f"{sorted(T)} is not {self.mu}-closed in Z_{self.e}")
        reps = sorted(representative_set(T, self.mu, self.e))
        if not reps:
            return self.base_ring.one()
        return lclm_all(self.orbit_min_poly(i) for i in reps)

    def generator_from_defining_set_big(self, T) -> SkewPolynomial:
        """Same generator, folded directly over the linear factors in the big ring."""
        T = sorted(frozenset(i % self.e for i in T))
        if not T:
            return self.big_ring.one()
        return lclm_all(self.big_ring.linear(self.roots[i]) for i in T)

    def describe(self) -> dict:
        B = self.big_field
        return {
            "e": self.e,
            "m": self.m,
            "mu": self.mu,
            "big_field": B.spec(),
            "theta_power": self.theta.r,
            "embedding_index": self.embed_index,
            "embedding_root": B.format_element(self.rho),
            "alpha": B.format_element(self.alpha),
            "beta": B.format_element(self.beta),
        }


def build_frame(aut: FieldAutomorphism, e_or_poly, big_modulus=None,
                embed_index: int | None = None, alpha: int | None = None) -> ExtensionFrame:
    if isinstance(e_or_poly, SkewPolynomial):
        e = right_exponent(e_or_poly)
    else:
        e = int(e_or_poly)
    return ExtensionFrame(aut, e, big_modulus, embed_index, alpha)


def find_normal_element(frame: ExtensionFrame) -> int:
    return frame._find_normal()


def factor_unity(frame: ExtensionFrame) -> list[SkewPolynomial]:
    return frame.factor_unity()


def lclm_fold(polys) -> SkewPolynomial:
    return lclm_all(polys)


def constacyclic_roots(frame: ExtensionFrame, gamma: int, n: int | None = None) -> list[int]:
    return frame.constacyclic_roots(gamma, n)


def defining_set(g: SkewPolynomial, frame: ExtensionFrame) -> frozenset[int]:
    return frame.defining_set(g)


def orbit_min_poly(frame: ExtensionFrame, i: int) -> SkewPolynomial:
    return frame.orbit_min_poly(i)


def generator_from_defining_set(frame: ExtensionFrame, T) -> SkewPolynomial:
    return frame.generator_from_defining_set(T)


__all__ = [
    "ExtensionFrame", "build_frame", "find_normal_element", "factor_unity", "constacyclic_roots",
    "defining_set", "orbit_min_poly", "generator_from_defining_set", "mu_closure", "is_mu_closed",
    "representative_set", "all_mu_closed_sets", "extension_power", "lclm", "lclm_fold",
]
