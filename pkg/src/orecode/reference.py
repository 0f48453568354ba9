"""Reference computations with fixed expected values.

A degree-10 skew polynomial over GF(2^6) with sigma the Frobenius, its
length-12 extension frame, a [10, 6] code with defining set {2, 3, 8, 9},
and a grid of equivalence-class counts. ``run_checks`` recomputes every
item and compares it against the recorded value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import gcd

from .bounds import search
from .codes import SkewCode, hamming_weight, min_distance, rank_weight
from .equiv import count_hamming_classes, count_rank_classes, hamming_representatives
from .field import FieldAutomorphism, SubfieldEmbedding, make_field
from .frame import ExtensionFrame, is_mu_closed, representative_set
from .skew import SkewRing, lclm_all, right_exponent

FIELD_MODULUS = (1, 1, 0, 1, 1, 0, 1)
BIG_MODULUS = (1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1)
NORMAL_EXPONENT = 5
F_TEXT = "x^10 + g^40*x^9 + g^39*x^8 + g^12*x^6 + g^46*x^5 + g^42*x^4 + g^60*x^2 + g^7*x + g^54"
G_TEXT = "x^4 + g^52*x^3 + g^46*x^2 + g^23*x + g^33"
ORBIT_POLYS = (
    "x^2 + g^38*x + g^58", "x^2 + g^13*x + g^53", "x^2 + g^26*x + g^43",
    "x^2 + g^52*x + g^23", "x^2 + g^41*x + g^46", "x^2 + g^19*x + g^29",
)
DEFINING_SET = frozenset({2, 3, 8, 9})
CODEWORD_LOGS = (None, None, 0, None, None, None, 37, 57, None, 7)  # None marks a zero entry
EXPECTED = {"exponent": 12, "d_hamming": 4, "d_rank": 4, "codeword_rank": 4,
            "lenient_value": 4, "strict_bch_value": 3}

# (p, s, r, n, l, expected count)
HAMMING_GRID = (
    (2, 2, 1, 5, 3, 3), (2, 2, 1, 7, 1, 3),
    (2, 2, 1, 4, 2, 9), (2, 2, 1, 6, 2, 9),
    (2, 2, 1, 5, 2, 3), (2, 2, 1, 7, 4, 3),
    (2, 2, 1, 4, 1, 3), (2, 2, 1, 6, 3, 3),
    (2, 3, 1, 4, 2, 7), (2, 3, 1, 5, 1, 7), (2, 3, 1, 7, 5, 7),
    (3, 2, 1, 5, 3, 8), (3, 2, 1, 7, 1, 8), (3, 2, 1, 3, 1, 8),
)
RANK_GRID = tuple((2, s, r, n, l) for s in (2, 3, 4, 5) for r in range(1, s)
                  if gcd(r, s) == 1 for n, l in ((4, 1), (5, 2)))


@dataclass
class CheckItem:
    name: str
    expected: object
    actual: object
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        diff = "" if self.passed else f" (expected {self.expected!r}, got {self.actual!r})"
        return f"{tag} {self.name}{diff}"


@dataclass
class WorkedExample:
    field: object
    aut: FieldAutomorphism
    ring: SkewRing
    f: object
    g: object
    code: SkewCode
    emb: SubfieldEmbedding
    codeword: list = field(default_factory=list)


def worked_example() -> WorkedExample:
    F = make_field(2, 6, list(FIELD_MODULUS))
    aut = FieldAutomorphism(F, 1)
    R = SkewRing(aut)
    f, g = R.parse(F_TEXT), R.parse(G_TEXT)
    c = [0 if k is None else F.exp(k) for k in CODEWORD_LOGS]
    return WorkedExample(F, aut, R, f, g, SkewCode(f, g), aut.fixed_subfield(), c)


def worked_frame(ex: WorkedExample, embed_index: int = 0) -> ExtensionFrame:
    B = make_field(2, 12, list(BIG_MODULUS))
    return ExtensionFrame(ex.aut, 12, list(BIG_MODULUS), embed_index, alpha=B.exp(NORMAL_EXPONENT))


def run_checks(deep: bool = False, progress=None) -> list[CheckItem]:
    items: list[CheckItem] = []

    def add(name, expected, compute):
        t = time.perf_counter()
        actual = compute()
        item = CheckItem(name, expected, actual, time.perf_counter() - t)
        items.append(item)
        if progress:
            progress(item)

    ex = worked_example()
    add("right exponent of f", EXPECTED["exponent"], lambda: right_exponent(ex.f))
    frame = worked_frame(ex)
    B = frame.big_ring
    add("x^12 - 1 is the lclm of its 12 linear factors", True,
        lambda: lclm_all(frame.factor_unity()) == B.binomial(12, 1))
    add("orbit polynomials (embedding 0, alpha = gamma^5)", list(ORBIT_POLYS),
        lambda: [str(frame.orbit_min_poly(i)) for i in range(frame.mu)])
    add("g right-divides f", True, lambda: ex.g.right_divides(ex.f))
    add("defining set of g", sorted(DEFINING_SET), lambda: sorted(frame.defining_set(ex.g)))
    add("defining set is mu-closed", True, lambda: is_mu_closed(DEFINING_SET, frame.mu, frame.e))
    add("representative set S_T", [2, 3], lambda: sorted(representative_set(DEFINING_SET, frame.mu, frame.e)))
    add("lenient Roos value", EXPECTED["lenient_value"], lambda: search(DEFINING_SET, 12, mode="lenient").value)
    add("strict best certificate (BCH value)", ("BCH", EXPECTED["strict_bch_value"]),
        lambda: (lambda c: (c.kind, c.value))(search(DEFINING_SET, 12, mode="strict")))
    add("code parameters [n, k]", [10, 6], lambda: [ex.code.n, ex.code.k])
    add("listed codeword is in the code", True, lambda: ex.code.contains(ex.codeword))
    add("listed codeword rank weight over GF(2)", EXPECTED["codeword_rank"],
        lambda: rank_weight(ex.codeword, ex.emb))
    add("listed codeword Hamming weight", 4, lambda: hamming_weight(ex.codeword))
    add("minimum Hamming distance", EXPECTED["d_hamming"],
        lambda: min_distance(ex.code, "hamming", deep=deep).d)
    add("minimum rank distance over GF(2)", EXPECTED["d_rank"],
        lambda: min_distance(ex.code, "rank", ex.emb, deep=deep).d)

    for p, s, r, n, l, want in HAMMING_GRID:
        aut = FieldAutomorphism(make_field(p, s), r)
        add(f"Hamming classes GF({p}^{s}) r={r} n={n} l={l}", want,
            lambda aut=aut, n=n, l=l: count_hamming_classes(n, l, aut))
    for p, s, r, n, l in RANK_GRID:
        aut = FieldAutomorphism(make_field(p, s), r)
        add(f"rank classes GF({p}^{s}) r={r} n={n} l={l} over GF(2)", (p ** s - 1) ** 2,
            lambda aut=aut, n=n, l=l: count_rank_classes(n, l, aut, aut.fixed_subfield()))
    aut4 = FieldAutomorphism(make_field(2, 2), 1)
    F4 = aut4.field
    add("GF(4) n=5 l=3 representatives", ["x^5 - x^3 - 1", "x^5 - g^1*x^3 - 1", "x^5 - g^2*x^3 - 1"],
        lambda: [s.format(F4) for s in hamming_representatives(5, 3, aut4)])
    add("GF(4) n=5 l=2 representatives",
        ["x^5 - x^2 - 1", f"x^5 - x^2 - {F4.format_element(F4.exp(aut4.bracket(5)))}",
         f"x^5 - x^2 - {F4.format_element(F4.exp(2 * aut4.bracket(5)))}"],
        lambda: [s.format(F4) for s in hamming_representatives(5, 2, aut4)])
    add("GF(4) n=4 l=1 representatives", ["x^4 - x - 1", "x^4 - x - g^1", "x^4 - x - g^2"],
        lambda: [s.format(F4) for s in hamming_representatives(4, 1, aut4)])
    return items
