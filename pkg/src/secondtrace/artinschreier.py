"""Membership in the Artin-Schreier group {x^2 + x} and canonical class
representatives.

Over GF(2^d) membership is decided by the absolute trace and certificates
come from solving the GF(2)-linear equation x^2 + x = b.  Over K(t) with K
finite, even-order poles are removed one place at a time (including the place
at infinity); what remains is a member exactly when it is a constant that is a
member over K.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import FieldMismatchError, PoleOrderError, UnsupportedFieldError
from .fields import GF2, FieldValue
from . import linalg

INFINITY = "inf"


@dataclass(frozen=True)
class PMembership:
    """Outcome of a membership test for ``b``.

    ``reduced_form == b + shift**2 + shift`` always holds.  When ``member`` is
    true, ``reduced_form`` is zero and ``certificate`` (equal to ``shift``)
    satisfies ``certificate**2 + certificate == b``.
    """

    member: bool
    certificate: FieldValue | None
    reduced_form: FieldValue
    shift: FieldValue


def _require_supported(F):
    if not (F.is_finite or F.is_function_field):
        raise UnsupportedFieldError(f"Artin-Schreier membership is not available over {F}")


def pmember(b):
    F = b.field
    _require_supported(F)
    if F.is_finite:
        return _pmember_finite(b)
    return _pmember_function_field(b)


def pclass_equal(x, y):
    if x.field != y.field:
        raise FieldMismatchError("values belong to different fields")
    return pmember(x + y).member


def class_representative(b):
    """Deterministic representative of ``b`` modulo x^2 + x (zero for members)."""
    return pmember(b).reduced_form


# -- finite fields ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _as_matrix(F):
    """Matrix of x -> x^2 + x on GF(2)-coordinates, plus the unit vectors."""
    d = F.degree
    units = [F.from_bits([int(i == j) for i in range(d)]) for j in range(d)]
    cols = [F.to_bits(u * u + u) for u in units]
    two = GF2()
    M = [[two(cols[j][i]) for j in range(d)] for i in range(d)]
    return M, units


@lru_cache(maxsize=None)
def canonical_nontrivial(F):
    """The element with lexicographically smallest bit vector among those of
    absolute trace one: the unit vector of the last trace-one coordinate."""
    _, units = _as_matrix(F)
    for u in reversed(units):
        if F.absolute_trace(u):
            return u
    raise AssertionError("trace form vanishes identically")


def solve_artin_schreier(b):
    """A root of x^2 + x = b in a finite field (smallest bit vector), or None."""
    F = b.field
    M, units = _as_matrix(F)
    two = GF2()
    sol = linalg.solve(M, [two(x) for x in F.to_bits(b)], two)
    if sol is None:
        return None
    return F.from_bits([int(s.raw) for s in sol])


def _pmember_finite(b):
    F = b.field
    if not F.absolute_trace(b):
        c = solve_artin_schreier(b)
        assert c is not None and c * c + c == b
        return PMembership(True, c, F.zero, c)
    rep = canonical_nontrivial(F)
    h = solve_artin_schreier(b + rep)
    assert h is not None
    return PMembership(False, None, rep, h)


# -- rational function fields ----------------------------------------------------

def sqrt_mod(R, a, D):
    """Square root of ``a`` modulo a square-free ``D`` over a perfect field."""
    F = R.field
    cs = R.coeffs(R.mod(a, D))
    A = R.from_coeffs([F._sqrt(c) for c in cs[0::2]])
    B = R.from_coeffs([F._sqrt(c) for c in cs[1::2]])
    ds = R.coeffs(D)
    E = R.from_coeffs([F._sqrt(c) for c in ds[0::2]])
    O = R.from_coeffs([F._sqrt(c) for c in ds[1::2]])
    # D = E^2 + t O^2, so E/O is a square root of t modulo D
    sqrt_t = R.mulmod(E, R.inv_mod(O, D), D)
    return R.mod(R.add(A, R.mul(B, sqrt_t)), D)


def _reduce_finite(b, D, order):
    K = b.field
    R = K.ring
    num, den = b.raw
    rest = R.exact_quo(den, R.pow(D, order))
    s0 = R.mulmod(R.mod(num, D), R.inv_mod(rest, D), D)
    s = sqrt_mod(R, s0, D)
    h = K.value(K.fraction(s, R.pow(D, order // 2)))
    return b + h * h + h, h


def _reduce_infinite(b):
    K = b.field
    R = K.ring
    num, den = b.raw
    d = R.degree(num) - R.degree(den)
    c = K.base._mul(R.lc(num), K.base._inv(R.lc(den)))
    h = K.value(K.fraction(R.monomial(K.base._sqrt(c), d // 2), R.one))
    return b + h * h + h, h


def pole_order(b, place=INFINITY):
    """Order of the pole of ``b`` at ``place`` (negative for a zero)."""
    K = b.field
    R = K.ring
    num, den = b.raw
    if place is INFINITY or place == INFINITY:
        if R.is_zero(num):
            return float("-inf")
        return R.degree(num) - R.degree(den)
    P = place.raw
    if R.is_zero(num):
        return float("-inf")
    return R.valuation(den, P) - R.valuation(num, P)


def reduce_pole(b, place=INFINITY):
    """Lower an even-order pole of ``b`` at ``place``.

    ``place`` is ``INFINITY`` or a monic square-free polynomial over the
    constant field all of whose prime factors are poles of the same even
    order.  Returns ``(b + h^2 + h, h)``.
    """
    K = b.field
    if not K.is_function_field:
        raise UnsupportedFieldError("pole reduction needs a rational function field")
    R = K.ring
    if place is INFINITY or place == INFINITY:
        order = pole_order(b)
        if order <= 0 or order % 2:
            raise PoleOrderError(f"{b} has pole order {order} at infinity; need a positive even order")
        return _reduce_infinite(b)
    if place.field != K.base:
        raise FieldMismatchError("place must be a polynomial over the constant field")
    P = place.monic().raw
    if R.degree(P) < 1 or R.degree(R.gcd(P, R.deriv(P))) > 0:
        raise ValueError("place must be a nonconstant square-free polynomial")
    num, den = b.raw
    order = R.valuation(den, P)
    if order == 0 or order % 2 or R.degree(R.gcd(R.quo(den, R.pow(P, order)), P)) > 0:
        raise PoleOrderError(f"{b} does not have a uniform even-order pole at {place}")
    return _reduce_finite(b, P, order)


def _pmember_function_field(b):
    K = b.field
    R = K.ring
    H = K.zero
    cur = b
    while True:
        num, den = cur.raw
        parts = R.squarefree_decomposition(den)
        even = [m for m in parts if m % 2 == 0]
        if even:
            m = max(even)
            cur, h = _reduce_finite(cur, parts[m], m)
            H = H + h
            continue
        d = R.degree(num) - R.degree(den)
        if not R.is_zero(num) and d > 0 and d % 2 == 0:
            cur, h = _reduce_infinite(cur)
            H = H + h
            continue
        break
    if K.is_constant(cur):
        inner = _pmember_finite(K.constant_value(cur))
        shift = H + K(inner.shift)
        if inner.member:
            return PMembership(True, shift, K.zero, shift)
        return PMembership(False, None, K(inner.reduced_form), shift)
    return PMembership(False, None, cur, H)


def has_only_odd_poles(v):
    """True when every pole of ``v`` (including infinity) has odd order."""
    K = v.field
    R = K.ring
    num, den = v.raw
    if any(m % 2 == 0 for m in R.squarefree_decomposition(den)):
        return False
    d = R.degree(num) - R.degree(den)
    return R.is_zero(num) or d <= 0 or d % 2 == 1


def is_constant_class(b):
    """Whether the class of ``b`` modulo x^2 + x contains a constant."""
    F = b.field
    if F.is_finite:
        return True
    return F.is_constant(pmember(b).reduced_form)
