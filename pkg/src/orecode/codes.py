"""Skew polycyclic codes: left multiples of a right divisor g of f, cut at length n.

Two exact distance routes are provided. The exhaustive scan walks every
normalized message (compiled kernel). The structured route decides
"is there a codeword of weight <= w" by linear algebra: over supports for
the Hamming metric, over F_{q'}-subspaces for the rank metric.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .caps import get_cap
from .errors import (
    DegreeTooLarge,
    EmptyCode,
    InvalidArgument,
    LengthMismatch,
    NotRightDivisor,
)
from .field import FiniteField, SubfieldEmbedding
from .linalg import in_row_space, left_kernel, rank, rref, solve_left
from .skew import SkewPolynomial, right_divmod


@dataclass(frozen=True)
class WeightReport:
    metric: str                   # "hamming" or "rank:<q'>"
    d: int
    witness: tuple[int, ...]
    message: tuple[int, ...]
    exhaustive: bool
    method: str
    examined: int = 0

    def as_dict(self, F: FiniteField) -> dict:
        return {
            "metric": self.metric,
            "d": self.d,
            "witness": [F.format_element(c) for c in self.witness],
            "message": [F.format_element(c) for c in self.message],
            "exhaustive": self.exhaustive,
            "method": self.method,
            "examined": self.examined,
        }


class SkewCode:
    def __init__(self, f: SkewPolynomial, g: SkewPolynomial):
        f._same(g)
        if f.degree < 1 or not f.is_monic():
            raise InvalidArgument("modulus must be monic of degree >= 1")
        if not g.is_monic():
            raise InvalidArgument("generator must be monic")
        if not right_divmod(f, g)[1].is_zero():
            raise NotRightDivisor(f"{g} does not right-divide {f}")
        self.f, self.g = f, g
        self.ring = f.ring
        self.field = f.ring.field
        self.n = f.degree
        self.k = self.n - g.degree
        F = self.field
        # x^n - f, the vector abar
        self.abar = tuple(F.neg(c) for c in f.coeffs[: self.n])
        self._rref = None
        self._gm = None

    def __repr__(self) -> str:
        return f"SkewCode[n={self.n}, k={self.k}] over GF({self.field.q})"

    # -- matrices and encoding ---------------------------------------------

    def generator_matrix(self) -> list[list[int]]:
        if self.k == 0:
            raise EmptyCode("the zero code has no generator matrix")
        if self._gm is None:
            R = self.ring
            g = self.g.coeffs
            rows = []
            for i in range(self.k):
                row = [0] * self.n
                for j, c in enumerate(g):
                    row[i + j] = R.sigma(c, i)
                rows.append(row)
            self._gm = rows
        return [list(r) for r in self._gm]

    def generator_matrix_by_products(self) -> list[list[int]]:
        """Rows as coefficient vectors of x^i g, computed by ring multiplication."""
        R = self.ring
        return [list((R.x(i) * self.g).padded(self.n)) for i in range(self.k)]

    def encode(self, message) -> tuple[int, ...]:
        if isinstance(message, SkewPolynomial):
            m = message
        else:
            m = self.ring(message)
        if m.degree >= self.k:
            raise DegreeTooLarge(f"message degree {m.degree} >= k = {self.k}")
        return (m * self.g).padded(self.n)

    def contains(self, v) -> bool:
        v = list(v)
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        if self.k == 0:
            return not any(v)
        if self._rref is None:
            self._rref = rref(self.field, self.generator_matrix())
        return in_row_space(self.field, self._rref, v)

    def message_of(self, v) -> list[int] | None:
        return solve_left(self.field, self.generator_matrix(), list(v))

    def polycyclic_shift(self, v) -> tuple[int, ...]:
        v = list(v)
        if len(v) != self.n:
            raise LengthMismatch(f"expected length {self.n}, got {len(v)}")
        return polycyclic_shift_vector(self.ring, self.abar, v)

    def codewords(self):
        """All codewords, by brute force (small codes only)."""
        G = self.generator_matrix() if self.k else []
        F = self.field
        for msg in itertools.product(range(F.q), repeat=self.k):
            c = [0] * self.n
            for mi, row in zip(msg, G):
                if mi:
                    c = [F.add(a, F.mul(mi, b)) for a, b in zip(c, row)]
            yield tuple(c)

    # -- distances ------------------------------------------------------------

    def kernel_args(self, emb: SubfieldEmbedding | None):
        F = self.field
        G = np.array(self.generator_matrix(), dtype=np.int64)
        vals = np.arange(F.q, dtype=np.int64)
        rowmul = F.mul_arr(vals[None, :, None], G[:, None, :])
        dummy2 = np.zeros((1, 1), dtype=np.int64)
        dummy1 = np.zeros(1, dtype=np.int64)
        decbits = dummy1
        dec = dummy2
        sadd = smul = dummy2
        sneg = sinv = dummy1
        if emb is None:
            metric = _kernels.HAMMING
        elif emb.t == 1 and F.p == 2:
            metric = _kernels.RANK_BITS
            decbits = np.arange(F.q, dtype=np.int64)  # digits of a are its bits
        else:
            metric = _kernels.RANK_TABLE
            dec = np.ascontiguousarray(emb.index_coord_table)
            sadd, smul, sneg, sinv = emb.sub_tables
        return (np.ascontiguousarray(rowmul), F.q, F.p, max(F.order, 1), F.exp_table, F.log_table,
                F.zech_table, metric, decbits, dec, sadd, smul, sneg, sinv)

    def normalized_count(self) -> int:
        q = self.field.q
        return (q ** self.k - 1) // (q - 1)


def polycyclic_shift_vector(ring, abar, v) -> tuple[int, ...]:
    """(0, s(v_0), ..., s(v_{n-2})) + s(v_{n-1}) abar."""
    F = ring.field
    n = len(v)
    out = [0] + [ring.sigma(c) for c in v[: n - 1]]
    last = ring.sigma(v[n - 1])
    if last:
        out = [F.add(a, F.mul(last, b)) for a, b in zip(out, abar)]
    return tuple(out)


def build_code(f: SkewPolynomial, g: SkewPolynomial) -> SkewCode:
    return SkewCode(f, g)


def generator_matrix(code: SkewCode) -> list[list[int]]:
    return code.generator_matrix()


def encode(code: SkewCode, message) -> tuple[int, ...]:
    return code.encode(message)


def polycyclic_shift(code: SkewCode, v) -> tuple[int, ...]:
    return code.polycyclic_shift(v)


def hamming_weight(v) -> int:
    return sum(1 for c in v if c)


def rank_weight(v, emb: SubfieldEmbedding) -> int:
    rows = [emb.decompose(c) for c in v]
    return rank(emb.field, rows) if rows else 0


def _metric_name(emb: SubfieldEmbedding | None) -> str:
    return "hamming" if emb is None else f"rank:{emb.sub_q}"


def _weight_fn(emb: SubfieldEmbedding | None):
    return hamming_weight if emb is None else (lambda v: rank_weight(v, emb))


def min_distance_exhaustive(code: SkewCode, emb: SubfieldEmbedding | None = None,
                            budget: int | None = None, lower: int = 1,
                            use_numba: bool | None = None) -> WeightReport:
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    budget = get_cap("budget") if budget is None else budget
    best, msg, count = _kernels.scan_min_weight(code.kernel_args(emb), lower, budget, use_numba)
    msg = tuple(int(c) for c in msg)
    witness = code.encode(list(msg))
    exhaustive = count >= code.normalized_count() or best <= lower
    return WeightReport(_metric_name(emb), best, witness, msg, exhaustive, "exhaustive", count)


def weight_distribution(code: SkewCode, emb: SubfieldEmbedding | None = None,
                        use_numba: bool | None = None) -> list[int]:
    """Counts of every weight over all q^k codewords (zero word included)."""
    if code.k == 0:
        return [1] + [0] * code.n
    hist = _kernels.weight_histogram(code.kernel_args(emb), use_numba)
    hist = hist * (code.field.q - 1)
    hist[0] += 1
    return [int(h) for h in hist]


def _support_candidates(code: SkewCode, w: int):
    """Yields (support, left-kernel basis) for supports of size w admitting a codeword."""
    G = code.generator_matrix()
    F = code.field
    n, k = code.n, code.k
    for S in itertools.combinations(range(n), w):
        rest = [j for j in range(n) if j not in S]
        sub = [[row[j] for j in rest] for row in G]
        if not rest or rank(F, sub) < k:
            ker = left_kernel(F, sub) if rest else [[1] + [0] * (k - 1)]
            yield S, ker


def min_distance_structured_hamming(code: SkewCode) -> WeightReport:
    """Smallest w such that some w columns leave the rest of G rank deficient."""
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    F = code.field
    G = code.generator_matrix()
    for w in range(1, code.n - code.k + 2):
        for S, ker in _support_candidates(code, w):
            m = ker[0]
            # normalize the first nonzero message coordinate
            lead = next(c for c in m if c)
            m = [F.div(c, lead) for c in m]
            c = tuple(_combine(F, m, G))
            return WeightReport("hamming", hamming_weight(c), c, tuple(m), True, "supports")
    raise AssertionError("Singleton bound violated")  # unreachable


def _combine(F, coeffs, rows):
    out = [0] * len(rows[0])
    for a, row in zip(coeffs, rows):
        if a:
            out = [F.add(x, F.mul(a, y)) for x, y in zip(out, row)]
    return out


def rref_matrices(F: FiniteField, elements, r: int, d: int):
    """All r x d reduced row echelon matrices of rank r over the sub-field ``elements``."""
    for pivots in itertools.combinations(range(d), r):
        free = [(i, j) for i in range(r) for j in range(d) if j > pivots[i] and j not in pivots]
        for vals in itertools.product(elements, repeat=len(free)):
            M = [[0] * d for _ in range(r)]
            for i, pc in enumerate(pivots):
                M[i][pc] = 1
            for (i, j), v in zip(free, vals):
                M[i][j] = v
            yield M


def min_distance_structured_rank(code: SkewCode, emb: SubfieldEmbedding) -> WeightReport:
    """Smallest t such that some t-dim F_{q'}-subspace V has C cap V^n != 0.

    V is described by an annihilator H (rows of the dual); a codeword lies in
    V^n iff H kills the coordinates of every entry, an F_{q'}-linear condition
    on the kd-dimensional F_{q'}-span of {lambda_a x^i g}.
    """
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    F = code.field
    d = emb.degree
    G = code.generator_matrix()
    span = [[F.mul(lam, c) for c in row] for row in G for lam in emb.basis]
    coords = [[emb.decompose(c) for c in vec] for vec in span]
    if d == 1:
        c = tuple(G[0])
        return WeightReport(_metric_name(emb), 1, c, tuple([1] + [0] * (code.k - 1)), True, "subspaces")
    for t in range(1, min(d, code.n) + 1):
        if t == d:
            c = tuple(G[0])
            return WeightReport(_metric_name(emb), rank_weight(c, emb), c,
                                tuple([1] + [0] * (code.k - 1)), True, "subspaces")
        for H in rref_matrices(F, emb.elements, d - t, d):
            rows = []
            for vec in coords:
                row = []
                for y in vec:
                    for h in H:
                        acc = 0
                        for hj, yj in zip(h, y):
                            if hj and yj:
                                acc = F.add(acc, F.mul(hj, yj))
                        row.append(acc)
                rows.append(row)
            ker = left_kernel(F, rows)
            if ker:
                comb = ker[0]
                c = tuple(_combine(F, comb, span))
                msg = solve_left(F, G, list(c))
                lead = next(v for v in msg if v)
                c = tuple(F.div(v, lead) for v in c)
                msg = tuple(F.div(v, lead) for v in msg)
                return WeightReport(_metric_name(emb), rank_weight(c, emb), c, msg, True, "subspaces")
    raise AssertionError("rank weight exceeds min(n, m)")  # unreachable


def min_distance(code: SkewCode, metric: str = "hamming", emb: SubfieldEmbedding | None = None,
                 budget: int | None = None, deep: bool = False, method: str = "auto",
                 use_numba: bool | None = None) -> WeightReport:
    """Exact minimum distance.

    method: "exhaustive", "structured", or "auto". Auto scans exhaustively when
    the normalized codeword count is within the shallow cap (or deep is set),
    and otherwise uses the structured route.
    """
    if code.k == 0:
        raise EmptyCode("the zero code has no minimum distance")
    if metric == "rank" and emb is None:
        raise InvalidArgument("rank metric needs a subfield")
    use_emb = emb if metric == "rank" else None
    if method == "auto":
        small = code.normalized_count() <= get_cap("shallow")
        method = "exhaustive" if (small or deep) else "structured"
    if method == "exhaustive":
        return min_distance_exhaustive(code, use_emb, budget, use_numba=use_numba)
    if method == "structured":
        if use_emb is None:
            return min_distance_structured_hamming(code)
        return min_distance_structured_rank(code, use_emb)
    raise InvalidArgument(f"unknown method {method!r}")


def singleton_check(code: SkewCode, d_h: int, d_r: int | None = None,
                    emb: SubfieldEmbedding | None = None) -> tuple[bool, bool | None]:
    """(is MDS, is MRD); MRD needs the sub-field to know m."""
    is_mds = d_h == code.n - code.k + 1
    if d_r is None or emb is None:
        return is_mds, None
    m = emb.degree
    dim = code.k * m
    is_mrd = dim == max(code.n, m) * (min(code.n, m) - d_r + 1)
    return is_mds, is_mrd


def rank_singleton_bound(n: int, k: int, m: int) -> int:
    """Largest d allowed by k m <= max(n, m)(min(n, m) - d + 1)."""
    big, small = max(n, m), min(n, m)
    return small + 1 - -(-k * m // big)


def right_divisors(f: SkewPolynomial, degree: int | None = None):
    """Monic right divisors of f, brute force over coefficient vectors."""
    R = f.ring
    F = R.field
    degrees = range(f.degree + 1) if degree is None else [degree]
    for dg in degrees:
        if F.q ** dg > get_cap("divisors"):
            raise InvalidArgument(f"divisor enumeration q^{dg} exceeds the cap")
        for tail in itertools.product(range(F.q), repeat=dg):
            g = R(tail + (1,))
            if right_divmod(f, g)[1].is_zero():
                yield g


def gl_rank_distance(code: SkewCode, emb: SubfieldEmbedding) -> int:
    """d_R as min over invertible M over F_{q'} of d_H(C M). Tiny sizes only."""
    F = code.field
    n = code.n
    sub = emb.elements
    words = [c for c in code.codewords() if any(c)]
    best = n + 1
    for entries in itertools.product(sub, repeat=n * n):
        M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if rank(F, M) < n:
            continue
        for c in words:
            img = [0] * n
            for i, ci in enumerate(c):
                if ci:
                    img = [F.add(a, F.mul(ci, b)) for a, b in zip(img, M[i])]
            best = min(best, hamming_weight(img))
    return best
