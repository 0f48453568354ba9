"""Exact arithmetic in GF(p^s).

Elements are plain ints: the polynomial-basis coordinates (c_0, ..., c_{s-1})
are packed as c_0 + c_1 p + ... + c_{s-1} p^{s-1}. Multiplication goes through
exp/log tables, addition through XOR (p = 2) or Zech logarithms (p odd).
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property
from math import gcd

import numpy as np

from .caps import get_cap
from .errors import (
    CapExceeded,
    DivisionByZero,
    FieldMismatch,
    InvalidArgument,
    InvalidCharacteristic,
    InvalidModulus,
    ParseError,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over Z_p, ascending lists, used only at construction --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p) if p > 2 else 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(base, m, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), m, p)
        base = _pmod(_pmul(base, base, p), m, p)
        e >>= 1
    return result


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over Z_p."""
    s = len(modulus) - 1
    if s < 1:
        return False
    if s == 1:
        return True
    # a root in Z_p means a linear factor
    for c in range(p):
        if sum(m * pow(c, i, p) for i, m in enumerate(modulus)) % p == 0:
            return False
    x = [0, 1]
    if _ppowmod(x, p ** s, modulus, p) != _pmod(x, modulus, p):
        return False
    for ell in prime_factors(s):
        h = _ppowmod(x, p ** (s // ell), modulus, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(modulus, _trim(diff), p)) != 1:
            return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible, compared as (c_0, ..., c_{s-1})."""
    for low in itertools.product(range(p), repeat=s):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise InvalidModulus(f"no irreducible of degree {s} over Z_{p}")  # unreachable


class FiniteField:
    """GF(p^s) with a fixed polynomial basis and primitive element."""

    def __init__(self, p: int, s: int, modulus=None, primitive: int | None = None):
        if not is_prime(p):
            raise InvalidCharacteristic(f"{p} is not prime")
        if s < 1:
            raise InvalidArgument("extension degree must be >= 1")
        q = p ** s
        if q > get_cap("field"):
            raise CapExceeded(f"field size {q} exceeds cap {get_cap('field')}")
        if modulus is None:
            modulus = smallest_irreducible(p, s)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != s + 1 or modulus[-1] != 1:
            raise InvalidModulus(f"modulus must be monic of degree {s}")
        if not is_irreducible(list(modulus), p):
            raise InvalidModulus(f"modulus {modulus} is reducible over Z_{p}")
        self.p, self.s, self.q = p, s, q
        self.modulus = modulus
        self.order = q - 1
        self.primitive = self._find_primitive() if primitive is None else self._check_primitive(primitive)
        self._build_tables()

    # -- construction ------------------------------------------------------

    def to_poly(self, a: int) -> list[int]:
        out = []
        for _ in range(self.s):
            out.append(a % self.p)
            a //= self.p
        return _trim(out)

    def from_poly(self, coeffs) -> int:
        v = 0
        for c in reversed(list(coeffs)):
            v = v * self.p + (c % self.p)
        return v

    def _has_full_order(self, a: int) -> bool:
        if a == 0:
            return False
        if self.order == 1:
            return a == 1
        m = list(self.modulus)
        base = self.to_poly(a)
        for ell in prime_factors(self.order):
            if _ppowmod(base, self.order // ell, m, self.p) == [1]:
                return False
        return True

    def _find_primitive(self) -> int:
        for a in range(1, self.q):
            if self._has_full_order(a):
                return a
        raise InvalidModulus("no primitive element found")  # unreachable

    def _check_primitive(self, a: int) -> int:
        if not 0 < a < self.q or not self._has_full_order(a):
            raise InvalidArgument(f"{a} is not a primitive element")
        return a

    def _build_tables(self) -> None:
        p, s, q = self.p, self.s, self.q
        m = list(self.modulus)
        xi = self.to_poly(self.primitive)
        # images of the basis monomials under multiplication by the primitive
        images = [self.from_poly(_pmod(_pmul([0] * j + [1], xi, p), m, p)) for j in range(s)]
        exp = [0] * self.order
        v = 1
        if p == 2:
            for k in range(self.order):
                exp[k] = v
                w, j = 0, 0
                while v:
                    if v & 1:
                        w ^= images[j]
                    v >>= 1
                    j += 1
                v = w
        else:
            img = np.array([self.to_poly(x) + [0] * (s - len(self.to_poly(x))) for x in images],
                           dtype=np.int64)
            weights = p ** np.arange(s, dtype=np.int64)
            digits = np.zeros(s, dtype=np.int64)
            digits[0] = 1
            for k in range(self.order):
                exp[k] = int(digits @ weights)
                digits = (digits @ img) % p
        log = [-1] * q
        for k, a in enumerate(exp):
            log[a] = k
        if any(l < 0 for l in log[1:]):
            raise InvalidModulus("primitive element does not generate the field")
        self._exp = exp
        self._log = log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        if p != 2:
            # zech[d] = log(1 + xi^d), -1 when 1 + xi^d = 0
            zech = [0] * self.order
            for d in range(self.order):
                a = exp[d]
                c0 = a % p
                b = a - c0 + (c0 + 1) % p
                zech[d] = log[b]
            self._zech = zech
            self.zech_table = np.array(zech, dtype=np.int64)
            self._half = self.order // 2
        else:
            self._zech = None
            self.zech_table = np.zeros(max(self.order, 1), dtype=np.int64)
            self._half = 0

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.order]

    def neg(self, a: int) -> int:
        if self.p == 2 or a == 0:
            return a
        return self._exp[(self._log[a] + self._half) % self.order]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[(-self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.order]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % self.order]

    def frobenius(self, a: int, k: int) -> int:
        """a^(p^k), k reduced mod s."""
        if a == 0:
            return 0
        k %= self.s
        return self._exp[(self._log[a] * pow(self.p, k, self.order)) % self.order] if self.order > 1 else a

    def prime_element(self, c: int) -> int:
        """Image of c in Z_p."""
        return c % self.p

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> list[int]:
        """Nonzero elements in ascending discrete-log order."""
        return list(self._exp)

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise FieldMismatch(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    # -- vectorized arithmetic on int64 arrays ------------------------------

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la, lb = self.log_table[a], self.log_table[b]
        out = self.exp_table[(la + lb) % max(self.order, 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def add_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        la, lb = self.log_table[a], self.log_table[b]
        z = self.zech_table[(lb - la) % self.order]
        out = np.where(z < 0, 0, self.exp_table[(la + z) % self.order])
        out = np.where(a == 0, b, np.where(b == 0, a, out))
        return out

    def neg_arr(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a
        out = self.exp_table[(self.log_table[a] + self._half) % self.order]
        return np.where(a == 0, 0, out)

    # -- text --------------------------------------------------------------

    def format_element(self, a: int) -> str:
        if a == 0:
            return "0"
        if a == 1:
            return "1"
        return f"g^{self._log[a]}"

    def parse_element(self, text: str) -> int:
        t = text.strip().replace(" ", "")
        if t == "0":
            return 0
        if t == "1":
            return 1
        if t == "g":
            return self.primitive
        m = re.fullmatch(r"g\^(\d+)", t)
        if m:
            return self.exp(int(m.group(1)))
        raise ParseError(f"bad element literal {text!r}")

    def spec(self) -> str:
        return f"{self.p}^{self.s} mod=" + ",".join(str(c) for c in self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.s}, modulus={list(self.modulus)})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, FiniteField) and self.p == other.p and self.s == other.s
                and self.modulus == other.modulus and self.primitive == other.primitive)

    def __hash__(self) -> int:
        return hash((self.p, self.s, self.modulus, self.primitive))


def make_field(p: int, s: int, modulus=None, primitive: int | None = None) -> FiniteField:
    return FiniteField(p, s, modulus, primitive)


def parse_field_spec(text: str) -> FiniteField:
    """Parse ``p^s`` with optional ``mod=c0,...,cs``."""
    m = re.fullmatch(r"\s*(\d+)\s*\^\s*(\d+)\s*(?:mod\s*=\s*([\d,\s]+))?\s*", text)
    if not m:
        m2 = re.fullmatch(r"\s*(\d+)\s*", text)
        if not m2:
            raise ParseError(f"bad field spec {text!r}")
        return make_field(int(m2.group(1)), 1)
    p, s = int(m.group(1)), int(m.group(2))
    modulus = None
    if m.group(3):
        modulus = [int(c) for c in m.group(3).replace(" ", "").split(",") if c != ""]
    return make_field(p, s, modulus)


class FieldAutomorphism:
    """sigma(a) = a^(p^r) on a field, 0 <= r < s."""

    def __init__(self, field: FiniteField, r: int):
        if not 0 <= r < field.s:
            raise InvalidArgument(f"Frobenius power must satisfy 0 <= r < {field.s}")
        self.field = field
        self.r = r
        self.g = gcd(r, field.s)  # gcd(0, s) = s
        self.mu = field.s // self.g
        self.q0 = field.p ** self.g
        qm1 = field.order
        pr = pow(field.p, r, qm1) if qm1 > 1 else 0
        # partial sums of the geometric series p^{r j} mod (q - 1), j < mu
        partial = [0]
        for j in range(self.mu):
            partial.append((partial[-1] + pow(pr, j, qm1)) % qm1 if qm1 > 1 else 0)
        self._partial = partial

    def apply(self, a: int, power: int = 1) -> int:
        return self.field.frobenius(a, (self.r * power) % self.field.s)

    def bracket(self, i: int, modulus: int | None = None) -> int:
        """[i]_r = (p^{ri} - 1)/(p^r - 1) (= i when r = 0), reduced mod q-1 by default."""
        if i < 0:
            raise InvalidArgument("bracket needs i >= 0")
        if modulus is None:
            modulus = self.field.order
        if modulus == self.field.order and modulus > 1:
            full, rest = divmod(i, self.mu)
            return (full * self._partial[self.mu] + self._partial[rest]) % modulus
        p_r = self.field.p ** self.r
        if self.r == 0:
            return i % modulus if modulus else i
        value = sum(pow(p_r, j, modulus) for j in range(i)) if modulus else (p_r ** i - 1) // (p_r - 1)
        return value % modulus if modulus else value

    def norm(self, a: int, i: int) -> int:
        """N_i(a) = sigma^{i-1}(a) ... sigma(a) a, through the exponent [i]_r."""
        F = self.field
        if i < 0:
            if a == 0:
                raise DivisionByZero("negative norm index of zero")
            return self.apply(F.inv(self.norm(a, -i)), i)
        if i == 0:
            return 1
        if a == 0:
            return 0
        return F.exp(F.log(a) * self.bracket(i))

    def norm_product(self, a: int, i: int) -> int:
        """N_i(a) as the explicit product; independent of the exponent route."""
        F = self.field
        if i < 0:
            if a == 0:
                raise DivisionByZero("negative norm index of zero")
            return self.apply(F.inv(self.norm_product(a, -i)), i)
        out = 1
        for j in range(i):
            out = F.mul(out, self.apply(a, j))
        return out

    def fixed_subfield(self) -> "SubfieldEmbedding":
        return SubfieldEmbedding(self.field, self.g)

    def is_identity(self) -> bool:
        return self.r == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldAutomorphism) and self.r == other.r and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.field, self.r))

    def __repr__(self) -> str:
        return f"FieldAutomorphism(r={self.r}, mu={self.mu}, q0={self.q0})"


def apply_automorphism(aut: FieldAutomorphism, a: int, power: int = 1) -> int:
    return aut.apply(aut.field.check(a), power)


def sigma_norm(aut: FieldAutomorphism, a: int, i: int) -> int:
    a = aut.field.check(a)
    value = aut.norm(a, i)
    if aut.norm_product(a, i) != value:  # both routes are cheap at desk scale
        raise AssertionError("norm routes disagree")
    return value


def fixed_subfield(aut: FieldAutomorphism) -> "SubfieldEmbedding":
    return aut.fixed_subfield()


class SubfieldEmbedding:
    """GF(p^t) inside GF(p^s), t | s, with basis 1, x, ..., x^{s/t - 1}.

    Sub-field elements are represented by their super-field ints. ``index``
    gives each sub-field element a small id (its position in ascending int
    order), used by the compiled kernels.
    """

    def __init__(self, field: FiniteField, t: int):
        if t < 1 or field.s % t:
            raise InvalidArgument(f"GF({field.p}^{t}) is not a subfield of GF({field.q})")
        self.field = field
        self.t = t
        self.sub_q = field.p ** t
        self.degree = field.s // t
        self.n_prime = field.order // (self.sub_q - 1)
        self.zeta = field.exp(self.n_prime)
        elems = [0] + sorted(field.exp(k * self.n_prime) for k in range(self.sub_q - 1))
        self.elements = elems
        self.index = {a: i for i, a in enumerate(elems)}
        gen = field.p if field.s > 1 else 1
        self.basis = [field.pow(gen, j) for j in range(self.degree)]

    def contains(self, a: int) -> bool:
        return a in self.index

    @cached_property
    def coord_table(self) -> np.ndarray:
        """q x degree array of coordinates (as super-field ints)."""
        F = self.field
        if self.t == 1:
            digits = np.zeros((F.q, F.s), dtype=np.int64)
            vals = np.arange(F.q, dtype=np.int64)
            for j in range(F.s):
                digits[:, j] = vals % F.p
                vals //= F.p
            return digits
        sub = np.array(self.elements, dtype=np.int64)
        grids = np.meshgrid(*([sub] * self.degree), indexing="ij")
        coords = np.stack([g.ravel() for g in grids], axis=1)
        values = np.zeros(len(coords), dtype=np.int64)
        for j, b in enumerate(self.basis):
            values = F.add_arr(values, F.mul_arr(coords[:, j], b))
        table = np.zeros((F.q, self.degree), dtype=np.int64)
        table[values] = coords
        if len(np.unique(values)) != F.q:
            raise InvalidArgument("basis is not independent over the subfield")
        return table

    @cached_property
    def index_coord_table(self) -> np.ndarray:
        """Coordinates as sub-field indices."""
        lookup = np.full(self.field.q, -1, dtype=np.int64)
        for a, i in self.index.items():
            lookup[a] = i
        return lookup[self.coord_table]

    @cached_property
    def sub_tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        """(add, mul, neg, inv) tables over sub-field indices."""
        F, els, idx = self.field, self.elements, self.index
        n = len(els)
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        neg = np.zeros(n, dtype=np.int64)
        inv = np.zeros(n, dtype=np.int64)
        for i, a in enumerate(els):
            neg[i] = idx[F.neg(a)]
            inv[i] = idx[F.inv(a)] if a else 0
            for j, b in enumerate(els):
                add[i, j] = idx[F.add(a, b)]
                mul[i, j] = idx[F.mul(a, b)]
        return add, mul, neg, inv

    def decompose(self, a: int) -> tuple[int, ...]:
        return tuple(int(c) for c in self.coord_table[self.field.check(a)])

    def recompose(self, coords) -> int:
        F = self.field
        v = 0
        for c, b in zip(coords, self.basis):
            v = F.add(v, F.mul(c, b))
        return v

    def __repr__(self) -> str:
        return f"SubfieldEmbedding(GF({self.sub_q}) in GF({self.field.q}))"


def subfield_decompose(emb: SubfieldEmbedding, a: int) -> tuple[int, ...]:
    return emb.decompose(a)
