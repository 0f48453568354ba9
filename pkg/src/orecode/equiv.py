"""Scale isometries phi_alpha(f)(x) = f(alpha x) between skew polycyclic ambients.

Convention: a shape with lower part abar stands for the modulus
x^n - sum_i abar_i x^i. A witness alpha for src ~ dst satisfies
a_i N_{n-i}(sigma^i(alpha)) = b_i on the common support, equivalently
phi_alpha(dst) = N_n(alpha) src, so phi_alpha maps F[x;sigma]/<dst> onto
F[x;sigma]/<src>. For the rank metric over F_{q'} alpha is drawn from F_{q'}^*.

All counts work with discrete logs modulo q - 1 (or q' - 1); the bracket
[i]_r is reduced before any gcd.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd

from .codes import SkewCode, weight_distribution
from .errors import InternalError, InvalidArgument, ShapeMismatch, SupportMismatch
from .field import FieldAutomorphism, FiniteField, SubfieldEmbedding
from .skew import SkewPolynomial, SkewRing, evaluate_right, gcrd, scale_map


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


# -- shapes ------------------------------------------------------------------

@dataclass(frozen=True)
class TrinomialShape:
    """x^n - al x^l - a0."""
    n: int
    l: int
    a0: int
    al: int

    def __post_init__(self):
        if not 0 < self.l < self.n:
            raise InvalidArgument(f"need 0 < l < n, got n={self.n}, l={self.l}")
        if self.a0 == 0 or self.al == 0:
            raise InvalidArgument("trinomial coefficients must be nonzero")

    @property
    def support(self) -> tuple[int, ...]:
        return (0, self.l)

    @property
    def values(self) -> tuple[int, ...]:
        return (self.a0, self.al)

    def as_poly_shape(self) -> "PolyShape":
        return PolyShape(self.n, self.support, self.values)

    def modulus(self, ring: SkewRing) -> SkewPolynomial:
        return self.as_poly_shape().modulus(ring)

    @classmethod
    def from_poly(cls, f: SkewPolynomial) -> "TrinomialShape":
        s = PolyShape.from_poly(f)
        if len(s.support) != 2 or s.support[0] != 0:
            raise ShapeMismatch(f"{f} is not of the form x^n - b x^l - a")
        return cls(s.n, s.support[1], s.values[0], s.values[1])

    def format(self, F: FiniteField) -> str:
        return self.as_poly_shape().format(F)


@dataclass(frozen=True)
class PolyShape:
    """x^n - sum_j values[j] x^support[j]."""
    n: int
    support: tuple[int, ...]
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "support", tuple(self.support))
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.support) != len(self.values):
            raise InvalidArgument("support and values differ in length")
        if any(x >= y for x, y in zip(self.support, self.support[1:])):
            raise InvalidArgument("support must be strictly increasing")
        if self.support and not 0 <= self.support[0] <= self.support[-1] < self.n:
            raise InvalidArgument("support indices must lie in [0, n)")
        if any(v == 0 for v in self.values):
            raise InvalidArgument("support values must be nonzero")

    @property
    def m(self) -> int:
        return len(self.support)

    def modulus(self, ring: SkewRing) -> SkewPolynomial:
        F = ring.field
        coeffs = [0] * (self.n + 1)
        for i, v in zip(self.support, self.values):
            coeffs[i] = F.neg(v)
        coeffs[self.n] = 1
        return ring(coeffs)

    @classmethod
    def from_poly(cls, f: SkewPolynomial) -> "PolyShape":
        if f.degree < 1 or not f.is_monic():
            raise ShapeMismatch("modulus must be monic of degree >= 1")
        F = f.ring.field
        n = f.degree
        sup = tuple(i for i in range(n) if f.coeff(i))
        return cls(n, sup, tuple(F.neg(f.coeff(i)) for i in sup))

    def format(self, F: FiniteField) -> str:
        terms = [f"x^{self.n}"]
        for i, v in sorted(zip(self.support, self.values), reverse=True):
            c = "" if v == 1 and i else F.format_element(v) + ("*" if i else "")
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            terms.append(f"{c}{mono}")
        return " - ".join(terms)


def _poly_shape(shape) -> PolyShape:
    return shape.as_poly_shape() if isinstance(shape, TrinomialShape) else shape


# -- witnesses ----------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceWitness:
    alpha: int
    metric: str  # "hamming" or "rank:<q'>"
    sub_q: int
    src: object
    dst: object

    def alpha_text(self, F: FiniteField) -> str:
        return F.format_element(self.alpha)

    def as_dict(self, F: FiniteField) -> dict:
        return {"alpha": self.alpha_text(F), "metric": self.metric,
                "src": self.src.format(F), "dst": self.dst.format(F)}


@dataclass(frozen=True)
class ClassReport:
    count: int
    generator: tuple[int, ...]
    subgroup_order: int
    representatives: tuple

    def as_dict(self, F: FiniteField) -> dict:
        return {"class_count": self.count,
                "generator": [F.format_element(g) for g in self.generator],
                "subgroup_order": self.subgroup_order,
                "representatives": [r.format(F) for r in self.representatives]}


def _alpha_candidates(aut: FieldAutomorphism, emb: SubfieldEmbedding | None):
    """Nonzero elements of F_{q'} (F_q when emb is None) in ascending discrete log."""
    F = aut.field
    step = 1 if emb is None else emb.n_prime
    return [F.exp(k * step) for k in range((F.order) // step)]


def _metric(emb: SubfieldEmbedding | None) -> tuple[str, int]:
    return ("hamming", 0) if emb is None else (f"rank:{emb.sub_q}", emb.sub_q)


def _check_pair(src, dst) -> tuple[PolyShape, PolyShape]:
    a, b = _poly_shape(src), _poly_shape(dst)
    if a.n != b.n:
        raise ShapeMismatch(f"lengths differ: {a.n} vs {b.n}")
    if a.support != b.support:
        raise SupportMismatch(f"supports differ: {list(a.support)} vs {list(b.support)}")
    return a, b


def witness_equations_hold(src, dst, alpha: int, aut: FieldAutomorphism) -> bool:
    """a_i N_{n-i}(sigma^i(alpha)) = b_i on the support."""
    a, b = _check_pair(src, dst)
    F = aut.field
    return all(F.mul(ai, aut.norm(aut.apply(alpha, i), a.n - i)) == bi
               for i, ai, bi in zip(a.support, a.values, b.values))


def _search(src, dst, aut: FieldAutomorphism, emb: SubfieldEmbedding | None,
            verify: bool) -> EquivalenceWitness | None:
    a, b = _check_pair(src, dst)
    metric, sub_q = _metric(emb)
    for alpha in _alpha_candidates(aut, emb):
        if witness_equations_hold(a, b, alpha, aut):
            w = EquivalenceWitness(alpha, metric, sub_q, src, dst)
            if verify and not verify_scale_isometry(w, aut, samples=32):
                raise InternalError("witness equations hold but the isometry check failed")
            return w
    return None


def trinomial_hamming_witness(src: TrinomialShape, dst: TrinomialShape, aut: FieldAutomorphism,
                              verify: bool = True) -> EquivalenceWitness | None:
    if (src.n, src.l) != (dst.n, dst.l):
        raise ShapeMismatch(f"(n, l) differ: {(src.n, src.l)} vs {(dst.n, dst.l)}")
    return _search(src, dst, aut, None, verify)


def trinomial_rank_witness(src: TrinomialShape, dst: TrinomialShape, aut: FieldAutomorphism,
                           emb: SubfieldEmbedding, verify: bool = True) -> EquivalenceWitness | None:
    if (src.n, src.l) != (dst.n, dst.l):
        raise ShapeMismatch(f"(n, l) differ: {(src.n, src.l)} vs {(dst.n, dst.l)}")
    if emb.field != aut.field:
        raise InvalidArgument("subfield embedding lives in another field")
    w = _search(src, dst, aut, emb, verify)
    if w is not None and emb.t == aut.g:
        # over the fixed subfield the norms collapse to plain powers
        F = aut.field
        for i, ai, bi in zip(src.support, src.values, dst.values):
            if F.mul(ai, F.pow(w.alpha, src.n - i)) != bi:
                raise InternalError("fixed-subfield power form disagrees with the norm form")
    return w


def general_hamming_witness(src: PolyShape, dst: PolyShape, aut: FieldAutomorphism,
                            emb: SubfieldEmbedding | None = None,
                            verify: bool = True) -> EquivalenceWitness | None:
    """Raises SupportMismatch (a definitive non-equivalence) on different supports."""
    return _search(src, dst, aut, emb, verify)


def fixed_subfield_gcrd_witness(src: TrinomialShape, dst: TrinomialShape,
                                aut: FieldAutomorphism) -> int | None:
    """Smallest alpha in (F_q^sigma)^* that right-annihilates gcrd(a_0x^n - b_0, a_lx^{n-l} - b_l)."""
    if (src.n, src.l) != (dst.n, dst.l):
        raise ShapeMismatch(f"(n, l) differ: {(src.n, src.l)} vs {(dst.n, dst.l)}")
    R = SkewRing(aut)
    F = aut.field
    polys = []
    for i, ai, bi in zip(src.support, src.values, dst.values):
        coeffs = [0] * (src.n - i + 1)
        coeffs[0] = F.neg(bi)
        coeffs[-1] = ai
        polys.append(R(coeffs))
    d = gcrd(polys[0], polys[1])
    if d.degree < 1:
        return None
    for alpha in _alpha_candidates(aut, aut.fixed_subfield()):
        if evaluate_right(d, alpha) == 0:
            return alpha
    return None


def standard_trinomial_witness(shape: TrinomialShape, aut: FieldAutomorphism,
                               emb: SubfieldEmbedding | None = None) -> EquivalenceWitness | None:
    """alpha with N_n(alpha) = a_0 and a_0 = N_l(alpha) a_l: phi_alpha relates x^n - x^l - 1 and shape."""
    F = aut.field
    metric, sub_q = _metric(emb)
    one = TrinomialShape(shape.n, shape.l, 1, 1)
    for alpha in _alpha_candidates(aut, emb):
        if aut.norm(alpha, shape.n) == shape.a0 and \
                F.mul(aut.norm(alpha, shape.l), shape.al) == shape.a0:
            return EquivalenceWitness(alpha, metric, sub_q, one, shape)
    return None


# -- subgroup H and counts -------------------------------------------------------

def _exponents(n: int, support, aut: FieldAutomorphism, modulus: int, shifted: bool = False):
    """Discrete logs (mod `modulus`) of N_{n-i}(sigma^i(zeta)) in terms of zeta's log."""
    F = aut.field
    pr = pow(F.p, aut.r, modulus) if modulus > 1 else 0
    out = []
    for i in support:
        e = aut.bracket(n - i, modulus) if modulus != F.order else aut.bracket(n - i)
        if shifted:
            e = e * pow(pr, i, modulus) % modulus if modulus > 1 else 0
        out.append(e % modulus if modulus > 1 else 0)
    return out


def _sub_order(emb: SubfieldEmbedding | None, aut: FieldAutomorphism) -> int:
    return aut.field.order if emb is None else emb.sub_q - 1


def subgroup_generator(n: int, support, aut: FieldAutomorphism,
                       emb: SubfieldEmbedding | None = None) -> tuple[int, ...]:
    """(N_{n-i}(sigma^i(zeta)))_i with zeta generating F_{q'}^* (F_q^* when emb is None)."""
    F = aut.field
    zeta = F.primitive if emb is None else emb.zeta
    return tuple(aut.norm(aut.apply(zeta, i), n - i) for i in support)


def subgroup_membership(n: int, support, aut: FieldAutomorphism, ratio,
                        emb: SubfieldEmbedding | None = None) -> bool:
    """Is `ratio` (b_i / a_i on the support) in the cyclic group generated by subgroup_generator?

    Solved as a linear congruence in the exponent of zeta, independent of the alpha scan.
    """
    F = aut.field
    if isinstance(support, int):
        support = (0, support)
    support = tuple(support)
    if len(ratio) != len(support) or any(c == 0 for c in ratio):
        raise InvalidArgument("ratio must be nonzero with one entry per support index")
    Q = F.order
    step = 1 if emb is None else emb.n_prime
    qs = Q // step
    gens = [F.log(g) for g in subgroup_generator(n, support, aut, emb)]
    targets = [F.log(c) for c in ratio]
    # k ranges over Z_{qs}; the first component pins k modulo its period, which divides qs
    ks = range(qs)
    if gens:
        g0, t0 = gens[0], targets[0]
        d = gcd(g0, Q)
        if t0 % d:
            return False
        period = Q // d
        k0 = (t0 // d) * pow(g0 // d, -1, period) % period if period > 1 else 0
        ks = range(k0, qs, period)
    return any(all(k * g % Q == t for g, t in zip(gens, targets)) for k in ks)


def _class_count(n: int, support, aut: FieldAutomorphism, qm1: int, sub: int,
                 shifted: bool) -> int:
    exps = _exponents(n, support, aut, sub, shifted)
    order = 1
    for e in exps:
        order = _lcm(order, sub // gcd(e, sub))
    total = qm1 ** len(support)
    if total % order:
        raise InternalError("subgroup order does not divide the group order")
    return total // order


def count_general_classes(n: int, support, aut: FieldAutomorphism,
                          emb: SubfieldEmbedding | None = None) -> int:
    support = tuple(support)
    Q = aut.field.order
    sub = _sub_order(emb, aut)
    plain = _class_count(n, support, aut, Q, sub, False)
    shifted = _class_count(n, support, aut, Q, sub, True)
    if plain != shifted:
        raise InternalError(f"bracket forms disagree: {plain} vs {shifted}")
    return plain


def count_hamming_classes(n: int, l: int, aut: FieldAutomorphism, central: bool = False) -> int:
    """(q-1)^2 / lcm((q-1)/gcd([n]_r, q-1), (q-1)/gcd([n-l]_r, q-1)).

    central=True gives the two-sided variant with q_0 in place of q.
    """
    if not 0 < l < n:
        raise InvalidArgument(f"need 0 < l < n, got n={n}, l={l}")
    if central:
        q0m1 = aut.q0 - 1
        return _class_count(n, (0, l), aut, q0m1, q0m1, False)
    return count_general_classes(n, (0, l), aut)


def count_rank_classes(n: int, l: int, aut: FieldAutomorphism, emb: SubfieldEmbedding) -> int:
    if not 0 < l < n:
        raise InvalidArgument(f"need 0 < l < n, got n={n}, l={l}")
    return count_general_classes(n, (0, l), aut, emb)


def class_report(n: int, l: int, aut: FieldAutomorphism,
                 emb: SubfieldEmbedding | None = None) -> ClassReport:
    gen = subgroup_generator(n, (0, l), aut, emb)
    F = aut.field
    order = 1
    for g in gen:
        order = _lcm(order, F.order // gcd(F.log(g), F.order))
    if emb is None:
        count, reps = count_hamming_classes(n, l, aut), hamming_representatives(n, l, aut)
    else:
        count, reps = count_rank_classes(n, l, aut, emb), rank_representatives(n, l, aut, emb)
    if count * order != F.order ** 2:
        raise InternalError("count x |H| differs from (q-1)^2")
    return ClassReport(count, gen, order, tuple(reps))


def _rep_params(n: int, l: int, aut: FieldAutomorphism, sub: int):
    b_n = aut.bracket(n, sub) if sub != aut.field.order else aut.bracket(n)
    b_nl = aut.bracket(n - l, sub) if sub != aut.field.order else aut.bracket(n - l)
    d0, dl = gcd(b_n, sub), gcd(b_nl, sub)
    d = gcd(sub // d0, sub // dl)
    return b_n, d0, dl, d


def hamming_representatives(n: int, l: int, aut: FieldAutomorphism) -> list[TrinomialShape]:
    """x^n - xi^j x^l - xi^(i + h[n]_r) for i < d_0, j < d_l, h < d, ordered by (h, i, j)."""
    if not 0 < l < n:
        raise InvalidArgument(f"need 0 < l < n, got n={n}, l={l}")
    F = aut.field
    b_n, d0, dl, d = _rep_params(n, l, aut, F.order)
    return [TrinomialShape(n, l, F.exp(i + h * b_n), F.exp(j))
            for h in range(d) for i in range(d0) for j in range(dl)]


def rank_representatives(n: int, l: int, aut: FieldAutomorphism,
                         emb: SubfieldEmbedding) -> list[TrinomialShape]:
    """x^n - xi^(b + n'j) x^l - xi^(a + n'(i + h[n]_r)), a, b < n', the d's taken mod q'-1."""
    if not 0 < l < n:
        raise InvalidArgument(f"need 0 < l < n, got n={n}, l={l}")
    F = aut.field
    sub = emb.sub_q - 1
    npr = emb.n_prime
    b_n, d0, dl, d = _rep_params(n, l, aut, sub)
    return [TrinomialShape(n, l, F.exp(a + npr * (i + h * b_n)), F.exp(b + npr * j))
            for h in range(d) for i in range(d0) for j in range(dl)
            for a in range(npr) for b in range(npr)]


def classify(shape, aut: FieldAutomorphism, emb: SubfieldEmbedding | None = None):
    """(representative, witness src=shape -> dst=representative)."""
    if not isinstance(shape, TrinomialShape):
        raise ShapeMismatch("classification is implemented for trinomial shapes")
    reps = hamming_representatives(shape.n, shape.l, aut) if emb is None \
        else rank_representatives(shape.n, shape.l, aut, emb)
    for rep in reps:
        w = _search(shape, rep, aut, emb, verify=False)
        if w is not None:
            return rep, w
    raise InternalError("representatives do not cover the shape")


def brute_force_class_count(n: int, support, aut: FieldAutomorphism,
                            emb: SubfieldEmbedding | None = None) -> int:
    """Orbits of the alpha-action on (F_q^*)^m, by direct enumeration."""
    F = aut.field
    support = tuple(support)
    mults = [tuple(aut.norm(aut.apply(alpha, i), n - i) for i in support)
             for alpha in _alpha_candidates(aut, emb)]
    seen: set = set()
    orbits = 0
    for vals in itertools.product(F.nonzero(), repeat=len(support)):
        if vals in seen:
            continue
        orbits += 1
        for mu in mults:
            seen.add(tuple(F.mul(v, c) for v, c in zip(vals, mu)))
    return orbits


# -- constacyclic reduction -------------------------------------------------------

@dataclass(frozen=True)
class ConstacyclicStep:
    index: int
    length: int
    alpha: int
    in_subgroup: bool
    power_identity: bool
    equations_hold: bool


def constacyclic_reduction(witness: EquivalenceWitness, aut: FieldAutomorphism,
                           emb: SubfieldEmbedding | None = None) -> list[ConstacyclicStep]:
    """Per support index i: sigma^i(alpha) relates x^{n-i} - a_i and x^{n-i} - b_i."""
    F = aut.field
    a, b = _check_pair(witness.src, witness.dst)
    sub = _sub_order(emb, aut)
    steps = []
    for i, ai, bi in zip(a.support, a.values, b.values):
        length = a.n - i
        ai_alpha = aut.apply(witness.alpha, i)
        ratio = F.div(bi, ai)
        gen = aut.norm(aut.apply(F.primitive if emb is None else emb.zeta, i), length)
        in_sub = _in_cyclic(F, gen, ratio)
        d_i = sub // gcd(aut.bracket(length, sub) if sub != F.order else aut.bracket(length), sub)
        eq = F.mul(ai, aut.norm(ai_alpha, length)) == bi
        steps.append(ConstacyclicStep(i, length, ai_alpha, in_sub, F.pow(ratio, d_i) == 1, eq))
    return steps


def _in_cyclic(F: FiniteField, gen: int, x: int) -> bool:
    d = gcd(F.log(gen), F.order)
    return F.log(x) % d == 0


# -- isometry checks and code transport -------------------------------------------

def _moduli(witness: EquivalenceWitness, aut: FieldAutomorphism):
    R = SkewRing(aut)
    return R, _poly_shape(witness.src).modulus(R), _poly_shape(witness.dst).modulus(R)


def verify_scale_isometry(witness: EquivalenceWitness, aut: FieldAutomorphism,
                          samples: int | None = 64, pairs: str = "sampled",
                          seed: int = 0) -> bool:
    """phi_alpha(dst) = N_n(alpha) src, weights preserved, and
    phi(f g rmod dst) = phi(f) phi(g) rmod src.

    pairs: "sampled" (random pairs), "all" (every pair of degree < n), or
    "left-basis" (f over x^i, every g; complete because both sides are
    left F_q-linear in f).
    """
    R, src, dst = _moduli(witness, aut)
    F = aut.field
    n = src.degree
    alpha = witness.alpha
    if scale_map(dst, alpha) != aut.norm(alpha, n) * src:
        return False
    if witness.sub_q:
        emb = SubfieldEmbedding(F, _degree_of(F, witness.sub_q))
        if not all(emb.contains(aut.norm(alpha, i)) for i in range(n)):
            return False

    def ok(f, g):
        lhs = scale_map((f * g).rmod(dst), alpha)
        rhs = (scale_map(f, alpha) * scale_map(g, alpha)).rmod(src)
        return lhs == rhs

    if pairs == "sampled":
        rng = random.Random(seed)
        for _ in range(samples or 0):
            f = R([rng.randrange(F.q) for _ in range(n)])
            g = R([rng.randrange(F.q) for _ in range(n)])
            if not ok(f, g):
                return False
        return True
    polys = [R(c) for c in itertools.product(range(F.q), repeat=n)]
    lefts = polys if pairs == "all" else [R.x(i) for i in range(n)]
    if pairs not in ("all", "left-basis"):
        raise InvalidArgument(f"unknown pairs mode {pairs!r}")
    return all(ok(f, g) for f in lefts for g in polys)


def _degree_of(F: FiniteField, sub_q: int) -> int:
    t = 1
    while F.p ** t != sub_q:
        t += 1
    return t


def transport_code(code: SkewCode, witness: EquivalenceWitness, aut: FieldAutomorphism) -> SkewCode:
    """Image of a code over dst under phi_alpha, a code over src with generator monic(phi(g))."""
    R, src, dst = _moduli(witness, aut)
    if code.f != dst:
        raise ShapeMismatch("code modulus differs from the witness target")
    g = scale_map(code.g, witness.alpha).monic()
    if not g.right_divides(src):
        raise InternalError("transported generator does not divide the source modulus")
    return SkewCode(src, g)


def transport_preserves_weights(code: SkewCode, witness: EquivalenceWitness,
                                aut: FieldAutomorphism, emb: SubfieldEmbedding | None = None) -> bool:
    image = transport_code(code, witness, aut)
    if image.k != code.k:
        return False
    return weight_distribution(code, emb) == weight_distribution(image, emb)


def schur(x, y, F: FiniteField) -> tuple[int, ...]:
    x, y = list(x), list(y)
    if len(x) != len(y):
        raise InvalidArgument("schur product needs equal lengths")
    return tuple(F.mul(a, b) for a, b in zip(x, y))


__all__ = [
    "TrinomialShape", "PolyShape", "EquivalenceWitness", "ClassReport", "ConstacyclicStep",
    "trinomial_hamming_witness", "trinomial_rank_witness", "general_hamming_witness",
    "fixed_subfield_gcrd_witness", "standard_trinomial_witness", "witness_equations_hold",
    "subgroup_generator", "subgroup_membership", "count_hamming_classes", "count_rank_classes",
    "count_general_classes", "class_report", "hamming_representatives", "rank_representatives",
    "classify", "brute_force_class_count", "constacyclic_reduction", "verify_scale_isometry",
    "transport_code", "transport_preserves_weights", "schur",
]
