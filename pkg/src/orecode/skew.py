"""The skew polynomial ring F_q[x; sigma] with xa = sigma(a)x.

Polynomials are immutable coefficient tuples in ascending order; the zero
polynomial is the empty tuple. Coefficients sit on the left of powers of x.
"""

from __future__ import annotations

import re

from .caps import get_cap
from .errors import (
    CapExceeded,
    ContextMismatch,
    DivisionByZero,
    InvalidScale,
    ParseError,
    Undefined,
)
from .field import FieldAutomorphism, FiniteField


class _PowerView:
    __slots__ = ("aut", "k")

    def __init__(self, aut: FieldAutomorphism, k: int):
        self.aut, self.k = aut, k

    def __getitem__(self, a: int) -> int:
        return self.aut.apply(a, self.k)


class SkewRing:
    def __init__(self, aut: FieldAutomorphism):
        self.aut = aut
        self.field: FiniteField = aut.field
        F = self.field
        # sigma^k as lookup lists, k < mu; large rings compute on demand
        if F.q * aut.mu <= 1 << 22:
            self._sig = [[aut.apply(a, k) for a in range(F.q)] for k in range(aut.mu)]
        else:
            self._sig = [_PowerView(aut, k) for k in range(aut.mu)]
        self._siginv = [self._sig[(-k) % aut.mu] for k in range(aut.mu)]

    def sigma(self, a: int, k: int = 1) -> int:
        return self._sig[k % self.aut.mu][a]

    def __call__(self, coeffs) -> "SkewPolynomial":
        return SkewPolynomial(self, coeffs)

    def zero(self) -> "SkewPolynomial":
        return SkewPolynomial(self, ())

    def one(self) -> "SkewPolynomial":
        return SkewPolynomial(self, (1,))

    def x(self, k: int = 1) -> "SkewPolynomial":
        return SkewPolynomial(self, (0,) * k + (1,))

    def monomial(self, c: int, k: int) -> "SkewPolynomial":
        return SkewPolynomial(self, (0,) * k + (c,))

    def linear(self, a: int) -> "SkewPolynomial":
        """x - a."""
        return SkewPolynomial(self, (self.field.neg(a), 1))

    def binomial(self, n: int, a: int = 1) -> "SkewPolynomial":
        """x^n - a."""
        return SkewPolynomial(self, (self.field.neg(a),) + (0,) * (n - 1) + (1,))

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewRing) and self.aut == other.aut

    def __hash__(self) -> int:
        return hash(self.aut)

    def __repr__(self) -> str:
        return f"SkewRing(GF({self.field.q}), r={self.aut.r})"

    # -- raw tuple arithmetic --------------------------------------------------

    def _add(self, a: tuple, b: tuple) -> tuple:
        F = self.field
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return _trim(out)

    def _neg(self, a: tuple) -> tuple:
        F = self.field
        return tuple(F.neg(c) for c in a)

    def _scale_left(self, c: int, a: tuple) -> tuple:
        F = self.field
        return _trim([F.mul(c, v) for v in a])

    def _mul(self, f: tuple, g: tuple) -> tuple:
        if not f or not g:
            return ()
        F = self.field
        exp, log, order = F._exp, F._log, F.order
        mu = self.aut.mu
        out = [0] * (len(f) + len(g) - 1)
        char2 = F.p == 2
        for i, fi in enumerate(f):
            if fi == 0:
                continue
            lf = log[fi]
            sig = self._sig[i % mu]
            for j, gj in enumerate(g):
                if gj == 0:
                    continue
                t = exp[(lf + log[sig[gj]]) % order]
                if char2:
                    out[i + j] ^= t
                else:
                    out[i + j] = F.add(out[i + j], t)
        return _trim(out)

    def _right_divmod(self, f: tuple, g: tuple) -> tuple[tuple, tuple]:
        """f = quo * g + rem."""
        if not g:
            raise DivisionByZero("right division by the zero polynomial")
        F = self.field
        dg = len(g) - 1
        rem = list(f)
        quo = [0] * max(len(f) - dg, 0)
        mu = self.aut.mu
        while len(rem) - 1 >= dg:
            d = len(rem) - 1
            k = d - dg
            sig = self._sig[k % mu]
            t = F.div(rem[-1], sig[g[-1]])
            quo[k] = t
            for j, gj in enumerate(g):
                if gj:
                    rem[k + j] = F.sub(rem[k + j], F.mul(t, sig[gj]))
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return _trim(quo), tuple(rem)

    def _left_divmod(self, f: tuple, g: tuple) -> tuple[tuple, tuple]:
        """f = g * quo + rem."""
        if not g:
            raise DivisionByZero("left division by the zero polynomial")
        F = self.field
        dg = len(g) - 1
        rem = list(f)
        quo = [0] * max(len(f) - dg, 0)
        mu = self.aut.mu
        lead_inv = F.inv(g[-1])
        while len(rem) - 1 >= dg:
            d = len(rem) - 1
            k = d - dg
            # g * (t x^k) has leading coefficient g_dg * sigma^dg(t)
            t = self._siginv[dg % mu][F.mul(lead_inv, rem[-1])]
            quo[k] = t
            for j, gj in enumerate(g):
                if gj:
                    rem[k + j] = F.sub(rem[k + j], F.mul(gj, self._sig[j % mu][t]))
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return _trim(quo), tuple(rem)

    # -- text ------------------------------------------------------------------

    def format(self, coeffs: tuple) -> str:
        F = self.field
        if not coeffs:
            return "0"
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                terms.append(F.format_element(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{F.format_element(c)}*{mono}")
        return " + ".join(terms)

    _TERM = re.compile(r"^(?P<coef>g\^\d+|g|\d+)?(?:\*?(?P<x>x)(?:\^(?P<exp>\d+))?)?$")

    def parse(self, text: str) -> "SkewPolynomial":
        F = self.field
        t = text.replace(" ", "")
        if not t:
            raise ParseError("empty polynomial")
        # allow '-' as a convenience: a - b is a + (-b)
        pieces = re.findall(r"[+-]?[^+-]+", t)
        if "".join(pieces) != t:
            raise ParseError(f"bad polynomial {text!r}")
        coeffs: dict[int, int] = {}
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-")
            m = self._TERM.match(body)
            if not m or (m.group("coef") is None and m.group("x") is None):
                raise ParseError(f"bad term {piece!r} in {text!r}")
            coef_txt = m.group("coef")
            if coef_txt is None:
                c = 1
            elif coef_txt in ("0", "1"):
                c = int(coef_txt)
            elif coef_txt.isdigit():
                raise ParseError(f"integer literal {coef_txt!r}: use 0, 1 or g^k")
            else:
                c = F.parse_element(coef_txt)
            if sign < 0:
                c = F.neg(c)
            k = 0 if m.group("x") is None else int(m.group("exp") or 1)
            coeffs[k] = F.add(coeffs.get(k, 0), c)
        deg = max(coeffs) if coeffs else -1
        return SkewPolynomial(self, tuple(coeffs.get(i, 0) for i in range(deg + 1)))


def _trim(a) -> tuple:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


class SkewPolynomial:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: SkewRing, coeffs=()):
        self.ring = ring
        self.coeffs = _trim(int(c) for c in coeffs)

    # -- basic properties ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, n: int) -> tuple:
        return self.coeffs + (0,) * (n - len(self.coeffs))

    def monic(self) -> "SkewPolynomial":
        if not self.coeffs:
            raise Undefined("zero polynomial has no monic associate")
        return SkewPolynomial(self.ring, self.ring._scale_left(self.ring.field.inv(self.lead), self.coeffs))

    def _same(self, other: "SkewPolynomial") -> None:
        if not isinstance(other, SkewPolynomial) or other.ring != self.ring:
            raise ContextMismatch("polynomials live in different skew rings")

    # -- operators -------------------------------------------------------------

    def __add__(self, other):
        self._same(other)
        return SkewPolynomial(self.ring, self.ring._add(self.coeffs, other.coeffs))

    def __neg__(self):
        return SkewPolynomial(self.ring, self.ring._neg(self.coeffs))

    def __sub__(self, other):
        self._same(other)
        return SkewPolynomial(self.ring, self.ring._add(self.coeffs, self.ring._neg(other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, int):
            other = SkewPolynomial(self.ring, (other,))
        self._same(other)
        return SkewPolynomial(self.ring, self.ring._mul(self.coeffs, other.coeffs))

    def __rmul__(self, c: int):
        return SkewPolynomial(self.ring, self.ring._scale_left(c, self.coeffs))

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPolynomial) and other.ring == self.ring and other.coeffs == self.coeffs

    def __hash__(self) -> int:
        return hash((self.ring, self.coeffs))

    def __repr__(self) -> str:
        return f"SkewPolynomial({self})"

    def __str__(self) -> str:
        return self.ring.format(self.coeffs)

    def right_divmod(self, g):
        return right_divmod(self, g)

    def left_divmod(self, g):
        return left_divmod(self, g)

    def rmod(self, g) -> "SkewPolynomial":
        return right_divmod(self, g)[1]

    def right_divides(self, f) -> bool:
        """self |_r f."""
        return right_divmod(f, self)[1].is_zero()


def skew_mul(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    return f * g


def right_divmod(f: SkewPolynomial, g: SkewPolynomial) -> tuple[SkewPolynomial, SkewPolynomial]:
    f._same(g)
    q, r = f.ring._right_divmod(f.coeffs, g.coeffs)
    return SkewPolynomial(f.ring, q), SkewPolynomial(f.ring, r)


def left_divmod(f: SkewPolynomial, g: SkewPolynomial) -> tuple[SkewPolynomial, SkewPolynomial]:
    f._same(g)
    q, r = f.ring._left_divmod(f.coeffs, g.coeffs)
    return SkewPolynomial(f.ring, q), SkewPolynomial(f.ring, r)


def _euclid(f: SkewPolynomial, g: SkewPolynomial):
    """Right Euclidean remainder sequence with left cofactors.

    Returns (d, u, v, u_next, v_next): d = u f + v g is the last nonzero
    remainder and u_next f + v_next g = 0.
    """
    R = f.ring
    r0, r1 = f.coeffs, g.coeffs
    u0, u1 = (1,), ()
    v0, v1 = (), (1,)
    while r1:
        quo, rem = R._right_divmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, R._add(u0, R._neg(R._mul(quo, u1)))
        v0, v1 = v1, R._add(v0, R._neg(R._mul(quo, v1)))
    return r0, u0, v0, u1, v1


def gcrd_extended(f: SkewPolynomial, g: SkewPolynomial):
    """(d, u, v) with d = u f + v g monic, d the greatest common right divisor."""
    f._same(g)
    if f.is_zero() and g.is_zero():
        raise Undefined("gcrd(0, 0) is undefined")
    R = f.ring
    d, u, v, _, _ = _euclid(f, g)
    c = R.field.inv(d[-1])
    return (SkewPolynomial(R, R._scale_left(c, d)), SkewPolynomial(R, R._scale_left(c, u)),
            SkewPolynomial(R, R._scale_left(c, v)))


def gcrd(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    return gcrd_extended(f, g)[0]


def lclm(f: SkewPolynomial, g: SkewPolynomial) -> SkewPolynomial:
    """Monic least common left multiple, read off the Euclidean cofactors."""
    f._same(g)
    if f.is_zero() or g.is_zero():
        raise Undefined("lclm with the zero polynomial")
    R = f.ring
    _, _, _, u_next, _ = _euclid(f, g)
    return SkewPolynomial(R, R._mul(u_next, f.coeffs)).monic()


def lclm_all(polys) -> SkewPolynomial:
    polys = list(polys)
    out = polys[0].monic()
    for p in polys[1:]:
        out = lclm(out, p)
    return out


def evaluate_right(f: SkewPolynomial, a: int) -> int:
    """f(a) = sum f_i N_i(a): the remainder of f on right division by x - a."""
    R = f.ring
    F = R.field
    aut = R.aut
    out = 0
    for i, c in enumerate(f.coeffs):
        if c:
            out = F.add(out, F.mul(c, aut.norm(a, i)))
    return out


def evaluate_by_division(f: SkewPolynomial, a: int) -> int:
    rem = right_divmod(f, f.ring.linear(a))[1]
    return rem.coeff(0)


def strip_x_power(f: SkewPolynomial) -> tuple[int, SkewPolynomial]:
    """Write f = x^h g with g(0) != 0; returns (h, g)."""
    if f.is_zero():
        raise Undefined("zero polynomial")
    R = f.ring
    h = 0
    while f.coeffs[h] == 0:
        h += 1
    g = tuple(R.sigma(c, -h) for c in f.coeffs[h:])
    return h, SkewPolynomial(R, g)


def default_exponent_cap(f: SkewPolynomial) -> int:
    R = f.ring
    return R.field.q ** max(f.degree, 1) * R.aut.mu


def right_exponent(f: SkewPolynomial, cap: int | None = None) -> int:
    """Least e >= 1 with f |_r x^e - 1 (after stripping a power of x)."""
    if f.is_zero():
        raise Undefined("zero polynomial has no exponent")
    _, g = strip_x_power(f)
    if cap is None:
        cap = get_cap("exponent") or default_exponent_cap(g)
    R = g.ring
    F = R.field
    if g.degree == 0:
        return 1
    gm = g.monic().coeffs
    n = len(gm) - 1
    r = [1] + [0] * (n - 1)
    for e in range(1, cap + 1):
        # x * r, then reduce the x^n term with the monic g
        shifted = [0] + [R.sigma(c) for c in r]
        top = shifted.pop()
        if top:
            for j in range(n):
                if gm[j]:
                    shifted[j] = F.sub(shifted[j], F.mul(top, gm[j]))
        r = shifted
        if r[0] == 1 and not any(r[1:]):
            return e
    raise CapExceeded(f"right exponent exceeds cap {cap}")


def is_central(f: SkewPolynomial) -> bool:
    aut = f.ring.aut
    for i, c in enumerate(f.coeffs):
        if c and (i % aut.mu or aut.apply(c) != c):
            return False
    return True


def is_invariant(f: SkewPolynomial) -> bool:
    """f x and f xi both lie in the left ideal generated by f."""
    if f.is_zero():
        return True
    R = f.ring
    xi = R(( R.field.primitive,))
    return f.right_divides(f * R.x()) and f.right_divides(f * xi)


def is_invariant_by_definition(f: SkewPolynomial, max_degree: int = 2) -> bool:
    """Check F_q[x;s] f = f F_q[x;s] on all right factors of degree <= max_degree."""
    import itertools
    R = f.ring
    for deg in range(max_degree + 1):
        for tail in itertools.product(range(R.field.q), repeat=deg + 1):
            h = R(tail)
            if not f.right_divides(f * h):
                return False
    return True


def minimal_polynomial_of_set(A, ring: SkewRing) -> SkewPolynomial:
    A = list(A)
    if not A:
        return ring.one()
    return lclm_all(ring.linear(a) for a in A)


def vanishing_set(g: SkewPolynomial) -> list[int]:
    return [a for a in range(g.ring.field.q) if evaluate_right(g, a) == 0]


def is_w_polynomial(g: SkewPolynomial) -> bool:
    return minimal_polynomial_of_set(vanishing_set(g), g.ring) == g


def scale_map(f: SkewPolynomial, alpha: int) -> SkewPolynomial:
    """phi_alpha(f)(x) = f(alpha x): coefficient i is scaled by N_i(alpha)."""
    if alpha == 0:
        raise InvalidScale("scale factor must be nonzero")
    R = f.ring
    F = R.field
    return SkewPolynomial(R, (F.mul(c, R.aut.norm(alpha, i)) for i, c in enumerate(f.coeffs)))
