"""Square classes and constant-extension norms in K(t), K finite."""

from __future__ import annotations

from .errors import UnsupportedFieldError


def _require(K):
    if not K.is_function_field:
        raise UnsupportedFieldError(f"{K} is not a rational function field")


def square_class(v):
    """Monic square-free polynomial generating the class of ``v`` in
    K(t)* / K(t)*^2.  Constants of a finite K are squares, so only the odd
    part of ``num * den`` matters."""
    K = v.field
    _require(K)
    if not v:
        raise ValueError("zero has no square class")
    R = K.ring
    num, den = v.raw
    return R.odd_part(R.mul(num, den))


def is_square(v):
    K = v.field
    _require(K)
    return K.ring.is_one(square_class(v))


def is_constant_norm(v):
    """Whether ``v`` is a norm from L(t), L the quadratic extension of K.

    Primes of odd degree stay inert in L(t), primes of even degree split and
    every constant is a norm, so ``v`` is a norm exactly when no odd-degree
    prime divides it to an odd power.
    """
    K = v.field
    _require(K)
    R = K.ring
    kern = square_class(v)
    if R.is_one(kern):
        return True
    parts = R.distinct_degree(kern, K.base.order)
    return all(d % 2 == 0 for d in parts)
