"""Designed-distance certificates on a defining set T in Z_e.

A certificate (a, b, delta, K = {k_0 < ... < k_r}) asks that every index
a + i*b + k_j (0 <= i <= delta - 2, 0 <= j <= r) lies in T. BCH is the r = 0
case; Hartmann-Tzeng takes K = {0, c, ..., r*c}. The same certificates bound
the Hamming and the rank distance (rank over the fixed subfield).

Roos certificates come in two modes. "strict" enforces k_r - k_0 <= delta + r - 2
with j over all r + 1 offsets. "lenient" also admits offset sets whose members
are all congruent modulo mu (the period of a mu-closed T), with any span < e.
"""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from math import gcd

from .errors import InvalidArgument, NotClosed
from .frame import ExtensionFrame, is_mu_closed, representative_set

KINDS = ("BCH", "HT", "Roos")
MODES = ("strict", "lenient")


@dataclass(frozen=True)
class BoundCertificate:
    kind: str
    a: int
    b: int
    delta: int
    offsets: tuple[int, ...]
    e: int
    mode: str = "strict"
    c: int | None = None
    exhaustive: bool = True

    @property
    def r(self) -> int:
        return len(self.offsets) - 1

    @property
    def value(self) -> int:
        return self.delta + self.r

    def indices(self) -> frozenset[int]:
        return frozenset((self.a + i * self.b + k) % self.e
                         for i in range(self.delta - 1) for k in self.offsets)

    def sort_key(self) -> tuple:
        return (-self.value, self.a, self.b, self.offsets)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["offsets"] = list(self.offsets)
        d["r"] = self.r
        d["value"] = self.value
        return d


def _norm_set(T, e: int) -> frozenset[int]:
    if e < 1:
        raise InvalidArgument("e must be >= 1")
    return frozenset(i % e for i in T)


def period(T, e: int) -> int:
    """Smallest d | e with T + d = T."""
    T = _norm_set(T, e)
    for d in range(1, e + 1):
        if e % d == 0 and is_mu_closed(T, d, e):
            return d
    return e  # pragma: no cover


def _offsets_ok(K: tuple[int, ...], delta: int, e: int, mode: str, mu: int) -> bool:
    if any(x >= y for x, y in zip(K, K[1:])):
        return False
    r = len(K) - 1
    span = K[-1] - K[0]
    if span <= delta + r - 2:
        return True
    if mode == "lenient":
        return span <= e - 1 and all((k - K[0]) % mu == 0 for k in K)
    return False


def verify_certificate(cert: BoundCertificate, T, mu: int | None = None) -> bool:
    """Structural conditions plus index membership, under the cert's mode."""
    e = cert.e
    T = _norm_set(T, e)
    if cert.kind not in KINDS or cert.mode not in MODES:
        return False
    if cert.delta == 1:
        return cert.r == 0  # empty certificate, claims 1
    if cert.delta < 2 or not cert.offsets or gcd(cert.b, e) != 1:
        return False
    if cert.kind == "BCH" and cert.offsets != (0,):
        return False
    if cert.kind == "HT":
        c = cert.c
        if c is None or c % e == 0 or gcd(c, e) >= cert.delta:
            return False
        if cert.offsets != tuple(j * c for j in range(len(cert.offsets))):
            return False
    if cert.kind == "Roos":
        mu = period(T, e) if mu is None else mu
        if not _offsets_ok(cert.offsets, cert.delta, e, cert.mode, mu):
            return False
    return cert.indices() <= T


def rank_applicability(cert: BoundCertificate) -> bool:
    """The rank theorem has the same hypotheses, so every certificate applies."""
    return True


# -- searches ------------------------------------------------------------------

def _units(e: int) -> list[int]:
    return [b for b in range(1, e + 1) if gcd(b, e) == 1] if e > 1 else [1]


def _runs(T: frozenset[int], e: int) -> dict[int, list[int]]:
    """runs[b][x] = length of the progression x, x+b, ... inside T (capped at e)."""
    out = {}
    for b in _units(e):
        run = [0] * e
        for x in range(e):
            n = 0
            while n < e and (x + n * b) % e in T:
                n += 1
            run[x] = n
        out[b] = run
    return out


def _empty(e: int, kind: str = "BCH", mode: str = "strict") -> BoundCertificate:
    return BoundCertificate(kind, 0, 1, 1, (0,), e, mode)


def _best(cands) -> BoundCertificate:
    return min(cands, key=BoundCertificate.sort_key)


def bch_search(T, e: int) -> BoundCertificate:
    T = _norm_set(T, e)
    best = _empty(e)
    for b, run in _runs(T, e).items():
        for a in range(e):
            if run[a]:
                cand = BoundCertificate("BCH", a, b, run[a] + 1, (0,), e)
                best = _best([best, cand])
    return best


def ht_search(T, e: int, r_max: int = 3) -> BoundCertificate:
    T = _norm_set(T, e)
    best = _empty(e, "HT")
    runs = _runs(T, e)
    for b, run in runs.items():
        for a in range(e):
            for delta in range(2, run[a] + 2):
                for c in range(1, e):
                    if gcd(c, e) >= delta:
                        continue
                    r = 0
                    while r < r_max and run[(a + (r + 1) * c) % e] >= delta - 1 \
                            and (r + 1) * c % e != 0:
                        r += 1
                    if r == 0:
                        continue
                    K = tuple(j * c for j in range(r + 1))
                    cand = BoundCertificate("HT", a, b, delta, K, e, c=c)
                    best = _best([best, cand])
    return best


def roos_search(T, e: int, r_max: int = 3, mode: str = "strict",
                mu: int | None = None) -> BoundCertificate:
    """Best Roos certificate with k_0 = 0 and at most r_max + 1 offsets."""
    if mode not in MODES:
        raise InvalidArgument(f"mode must be one of {MODES}")
    T = _norm_set(T, e)
    mu = period(T, e) if mu is None else mu
    best = _empty(e, "Roos", mode)
    for b, run in _runs(T, e).items():
        for a in range(e):
            for delta in range(2, run[a] + 2):
                ok = [k for k in range(1, e) if run[(a + k) % e] >= delta - 1]
                for r in range(1, r_max + 1):
                    for rest in itertools.combinations(ok, r):
                        K = (0,) + rest
                        if _offsets_ok(K, delta, e, mode, mu):
                            cand = BoundCertificate("Roos", a, b, delta, K, e, mode)
                            best = _best([best, cand])
                            break  # combinations are lex-ordered: first valid is smallest
                cand = BoundCertificate("Roos", a, b, delta, (0,), e, mode)
                best = _best([best, cand])
    return best


def search(T, e: int, r_max: int = 3, mode: str = "strict",
           mu: int | None = None) -> BoundCertificate:
    """Best certificate over BCH, HT and Roos; ties prefer BCH, then HT."""
    cands = [bch_search(T, e), ht_search(T, e, r_max), roos_search(T, e, r_max, mode, mu)]
    top = max(c.value for c in cands)
    return next(c for c in cands if c.value == top)


def search_both(T, e: int, r_max: int = 3, mu: int | None = None) -> dict[str, BoundCertificate]:
    return {m: search(T, e, r_max, m, mu) for m in MODES}


def mrd_designed_check(T, cert: BoundCertificate, frame: ExtensionFrame) -> bool:
    """True iff |S_T| = delta + r - 1 for a certificate valid on T."""
    T = _norm_set(T, frame.e)
    if not is_mu_closed(T, frame.mu, frame.e):
        raise NotClosed(f"{sorted(T)} is not {frame.mu}-closed in Z_{frame.e}")
    if not T or cert.e != frame.e or not verify_certificate(cert, T, frame.mu):
        return False
    return len(representative_set(T, frame.mu, frame.e)) == cert.value - 1


__all__ = [
    "BoundCertificate", "verify_certificate", "bch_search", "ht_search", "roos_search",
    "search", "search_both", "rank_applicability", "mrd_designed_check", "period",
]
