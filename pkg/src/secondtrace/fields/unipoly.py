"""Univariate polynomials over a described field."""

from __future__ import annotations

import itertools

from ..errors import FieldMismatchError, UnsupportedFieldError
from .tower import AlgebraicLayer, FieldValue, format_poly


class UniPoly:
    """Dense polynomial with little-endian coefficients in ``field``.

    ``raw`` is a payload of ``field.poly_ring``; ``var`` only affects printing.
    """

    __slots__ = ("field", "raw", "var")

    def __init__(self, field, raw, var="x"):
        self.field = field
        self.raw = raw
        self.var = var

    @classmethod
    def from_coeffs(cls, field, coeffs, var="x"):
        ring = field.poly_ring
        return cls(field, ring.from_coeffs([field(c).raw for c in coeffs]), var)

    @classmethod
    def gen(cls, field, var="x"):
        return cls(field, field.poly_ring.x, var)

    @classmethod
    def constant(cls, field, c, var="x"):
        return cls(field, field.poly_ring.constant(field(c).raw), var)

    @classmethod
    def parse(cls, field, text, var="x"):
        from .parse import parse_poly
        return parse_poly(field, text, var)

    @property
    def ring(self):
        return self.field.poly_ring

    @property
    def coeffs(self):
        return tuple(FieldValue(self.field, c) for c in self.ring.coeffs(self.raw))

    def coeff(self, i):
        cs = self.ring.coeffs(self.raw)
        return FieldValue(self.field, cs[i] if 0 <= i < len(cs) else self.field.zero_raw)

    @property
    def degree(self):
        return self.ring.degree(self.raw)

    @property
    def lc(self):
        return FieldValue(self.field, self.ring.lc(self.raw))

    def is_zero(self):
        return self.ring.is_zero(self.raw)

    def is_monic(self):
        return not self.is_zero() and self.ring.lc(self.raw) == self.field.one_raw

    def monic(self):
        return UniPoly(self.field, self.ring.monic(self.raw), self.var)

    def with_var(self, var):
        return UniPoly(self.field, self.raw, var)

    def _lift(self, other):
        if isinstance(other, UniPoly):
            if other.field != self.field:
                raise FieldMismatchError(f"{other} and {self} have different coefficient fields")
            return other.raw
        if isinstance(other, (FieldValue, int)):
            return self.ring.constant(self.field(other).raw)
        return None

    def _wrap(self, raw):
        return UniPoly(self.field, raw, self.var)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ring.add(self.raw, o))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._wrap(self.ring.mul(self.raw, o))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        return self._wrap(self.ring.pow(self.raw, e))

    def __divmod__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        q, r = self.ring.divmod(self.raw, o)
        return self._wrap(q), self._wrap(r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if isinstance(other, UniPoly):
            if other.degree != 0:
                return NotImplemented
            other = other.lc
        c = self.field(other)
        return self._wrap(self.ring.scale(self.raw, self.field._inv(c.raw)))

    def derivative(self):
        return self._wrap(self.ring.deriv(self.raw))

    def __call__(self, v):
        """Evaluate at ``v``, which may live in an extension of ``field``."""
        if isinstance(v, int):
            v = self.field(v)
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * v + c
        if acc is None:
            return v.field.zero
        return v.field.coerce(acc)

    def map_coeffs(self, fn, field):
        return UniPoly.from_coeffs(field, [fn(c) for c in self.coeffs], self.var)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (FieldValue, int)):
            try:
                return self.raw == self._lift(other)
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.raw))

    def __str__(self):
        return format_poly(self.ring, self.raw, self.var, self.field._format)

    def __repr__(self):
        return f"UniPoly({str(self)!r}, {self.field.describe()!r})"


def poly_gcd(f, g):
    """Monic gcd of two polynomials over the same field."""
    if f.field != g.field:
        raise FieldMismatchError("polynomials over different fields")
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return UniPoly(f.field, f.ring.gcd(f.raw, g.raw), f.var)


def is_separable(p):
    if p.degree < 1:
        raise ValueError("separability is undefined for constants")
    return poly_gcd(p, p.derivative()).degree == 0


# Specialization and root search limits for function-field irreducibility.
_MAX_PLACE_DEGREE = 2
_MAX_PLACES = 16
_ROOT_SEARCH_LIMIT = 4096


def is_irreducible(p):
    """Irreducibility of ``p``: True, False, or None when undecided.

    Exact over finite fields (Rabin).  Over ``K(t)`` with ``K`` finite the
    answer is True when Eisenstein's criterion applies or some specialization
    of ``t`` stays irreducible, False when a root is found, and None otherwise.
    """
    if p.degree < 1:
        raise ValueError("irreducibility is undefined for constants")
    F = p.field
    if F.is_finite:
        return F.poly_ring.is_irreducible_finite(p.raw, F.order)
    if F.is_function_field:
        return _irreducible_over_function_field(p.monic())
    raise UnsupportedFieldError(f"irreducibility test not available over {F}")


def _cleared_coefficients(p):
    """Raw ``K[t]`` coefficients of ``L^n p(y/L)``, a monic polynomial in y with
    polynomial coefficients and the same splitting behaviour as ``p``."""
    K = p.field
    R = K.ring
    n = p.degree
    cs = p.coeffs
    L = R.one
    for c in cs[:-1]:
        d = c.raw[1]
        L = R.quo(R.mul(L, d), R.gcd(L, d))
    Lv = K.value((L, R.one))
    out = []
    for i, c in enumerate(cs):
        v = c * Lv ** (n - i)
        assert R.is_one(v.raw[1])
        out.append(v.raw[0])
    return out


def _irreducible_over_function_field(p):
    K = p.field
    F = K.base
    R = K.ring
    n = p.degree
    if n == 1:
        return True
    P = _cleared_coefficients(p)
    if R.is_zero(P[0]):
        return False

    # Eisenstein at a prime dividing every lower coefficient exactly once in P[0]
    g = R.zero
    for c in P[:-1]:
        g = R.gcd(g, c)
    simple = R.squarefree_decomposition(P[0]).get(1, R.one)
    if R.degree(R.gcd(g, simple)) > 0:
        return True

    # specialization t -> root of a low-degree place
    tried = 0
    for d in range(1, _MAX_PLACE_DEGREE + 1):
        for tail in itertools.product(range(F.order), repeat=d):
            if tried >= _MAX_PLACES:
                break
            cs = [F._from_bits([(i >> k) & 1 for k in range(F.degree)]) for i in tail] + [F.one_raw]
            place = R.from_coeffs(cs)
            if not R.is_irreducible_finite(place, F.order):
                continue
            tried += 1
            if d == 1:
                root = cs[0]
                Fp = F
                red = [R.evaluate(c, root) for c in P]
            else:
                Fp = AlgebraicLayer(F, "_s", UniPoly(F, place, "_s"))
                red = [R.mod(c, place) for c in P]
            Rp = Fp.poly_ring
            rp = Rp.from_coeffs(red)
            if Rp.degree(rp) == n and Rp.is_irreducible_finite(rp, Fp.order):
                return True

    # roots lie in K[t] and have degree at most max(deg P_i / (n - i))
    bound = max(R.degree(c) // (n - i) for i, c in enumerate(P[:-1]) if not R.is_zero(c))
    if F.order ** (bound + 1) > _ROOT_SEARCH_LIMIT:
        return None
    for r in _all_polys(F, R, bound):
        acc = R.zero
        for c in reversed(P):
            acc = R.add(R.mul(acc, r), c)
        if R.is_zero(acc):
            return False
    if n <= 3:
        return True
    return None


def _all_polys(F, R, max_degree):
    for tup in itertools.product(range(F.order), repeat=max_degree + 1):
        yield R.from_coeffs([F._from_bits([(i >> k) & 1 for k in range(F.degree)]) for i in tup])
