"""Simple algebras E = F[x]/(p), characteristic polynomials and the two
second trace forms.

For ``a`` in ``E`` write ``det(xI - M_a) = x^n + T1 x^(n-1) + ... + Tn``
(signs are irrelevant in characteristic two).  ``T1`` is the trace, ``Tn`` the
norm, and ``T2`` is the quadratic form studied here.  Its polar form is
``T1(xy) + T1(x) T1(y)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InseparableError, SingularFormError
from .fields import AlgebraicLayer, FieldValue, UniPoly, is_irreducible, is_separable
from .fields.parse import parse_poly
from .quadspace import QuadSpace
from . import linalg


class ExtensionAlgebra:
    """``E = base[x]/(modulus)`` for a monic separable modulus.

    ``irreducible`` is True, False or None (undecided, function fields only).
    A separable reducible modulus still gives an etale algebra on which every
    trace-form computation here is valid; ``is_field`` tells the two apart.
    Elements are values of ``self.field`` (an ``AlgebraicLayer`` built without
    an irreducibility check).
    """

    def __init__(self, base, modulus, name=None):
        if isinstance(modulus, str):
            modulus = parse_poly(base, modulus, "x")
        if modulus.field != base:
            raise ValueError("modulus must have coefficients in the base field")
        if modulus.degree < 2 or not modulus.is_monic():
            raise ValueError("modulus must be monic of degree at least 2")
        if not is_separable(modulus):
            raise InseparableError(f"{modulus} is not separable over {base}")
        self.base = base
        self.modulus = modulus
        self.n = modulus.degree
        self.name = name or modulus.var
        if self.name in base.gens():
            raise ValueError(f"generator name {self.name!r} is already used by {base}")
        self.irreducible = is_irreducible(modulus) if (base.is_finite or base.is_function_field) else None
        self.field = AlgebraicLayer(base, self.name, modulus, check=False)
        self.alpha = self.field.gen
        self.power_basis = tuple(self.alpha ** i for i in range(self.n))
        # T1 on the power basis, so traces are a single dot product
        self.trace_vector = tuple(
            sum((m[i][i] for i in range(self.n)), base.zero)
            for m in (self._matrix(b) for b in self.power_basis)
        )

    @property
    def is_field(self):
        return self.irreducible is True

    def __repr__(self):
        return f"ExtensionAlgebra({self.base.describe()!r}, {str(self.modulus)!r})"

    def __str__(self):
        return f"{self.base.describe()}[{self.name}]/({self.modulus.with_var(self.name)})"

    def __call__(self, x):
        return self.field(x)

    def element(self, coords):
        return self.field.from_coords(coords)

    def coords(self, a):
        return self.field.coords(a)

    def _matrix(self, a):
        a = self.field.coerce(a)
        cols = [self.coords(a * b) for b in self.power_basis]
        return [[cols[j][i] for j in range(self.n)] for i in range(self.n)]

    @cached_property
    def multiplication_table(self):
        """``table[i][j]`` = coordinates of ``alpha^(i+j)``."""
        return tuple(tuple(self.coords(bi * bj) for bj in self.power_basis) for bi in self.power_basis)


@dataclass(frozen=True)
class CharPolyCoeffs:
    """``T[k-1]`` is ``T_k``; ``det(xI - M) = x^n + T1 x^(n-1) + ... + Tn``."""

    T: tuple

    def as_poly(self, var="x"):
        F = self.T[0].field
        return UniPoly.from_coeffs(F, list(reversed(self.T)) + [F.one], var)

    def __getitem__(self, k):
        return self.T[k - 1]

    def __str__(self):
        return str(self.as_poly())


def mult_matrix(E, a):
    """Matrix of ``x -> a x``; column ``j`` holds the coordinates of ``a alpha^j``."""
    return E._matrix(a)


def _principal_minors(M, F):
    acc = F.zero
    n = len(M)
    for i in range(n):
        for j in range(i + 1, n):
            acc = acc + M[i][i] * M[j][j] + M[i][j] * M[j][i]
    return acc


def char_poly(E, a):
    """Berkowitz coefficients, with ``T2`` checked against the principal minors."""
    M = mult_matrix(E, a)
    coeffs = linalg.charpoly_berkowitz(M, E.base)
    if coeffs[2] != _principal_minors(M, E.base):
        raise ArithmeticError("T2 from the characteristic polynomial disagrees with the principal minors")
    return CharPolyCoeffs(tuple(coeffs[1:]))


def trace(E, a):
    return linalg.dot(E.coords(a), E.trace_vector)


def norm(E, a):
    return char_poly(E, a).T[-1]


def second_coefficient(E, a):
    """``T2(a)`` as the sum of the 2x2 principal minors of the multiplication matrix."""
    return _principal_minors(mult_matrix(E, a), E.base)


def polar(E, x, y):
    """Polar form of ``T2``: ``T1(xy) + T1(x) T1(y)``."""
    return trace(E, x * y) + trace(E, x) * trace(E, y)


def frobenius(E, a):
    a = E.field.coerce(a)
    return a * a


def trace_pivot(E):
    """Index of the first power-basis element with nonzero trace."""
    for j, t in enumerate(E.trace_vector):
        if t:
            return j
    raise InseparableError("trace vanishes identically; the algebra is not separable")


def kernel_of_trace(E):
    """Basis ``alpha^k - (T1(alpha^k)/T1(alpha^p)) alpha^p`` (k != p) of Ker T1."""
    p = trace_pivot(E)
    tp = E.trace_vector[p]
    out = []
    for k in range(E.n):
        if k == p:
            continue
        c = E.trace_vector[k] / tp
        out.append(E.power_basis[k] + c * E.power_basis[p])
    return out


def in_trace_kernel_coords(E, a):
    """Coordinates of ``a`` (with ``T1(a) = 0``) in the ``kernel_of_trace`` basis."""
    if trace(E, a):
        raise ValueError(f"{a} does not lie in the trace kernel")
    p = trace_pivot(E)
    cs = E.coords(a)
    return [c for k, c in enumerate(cs) if k != p]


def revoy_basis(E):
    return list(E.power_basis) if E.n % 2 == 0 else kernel_of_trace(E)


def revoy_coords(E, a):
    """Coordinates of ``a`` in the basis of ``second_trace_form(E)``."""
    return list(E.coords(a)) if E.n % 2 == 0 else in_trace_kernel_coords(E, a)


def form_on(E, basis):
    m = len(basis)
    F = E.base
    rows = [[F.zero] * m for _ in range(m)]
    traces = [trace(E, v) for v in basis]
    for i in range(m):
        rows[i][i] = second_coefficient(E, basis[i])
        for j in range(i + 1, m):
            rows[i][j] = trace(E, basis[i] * basis[j]) + traces[i] * traces[j]
    return QuadSpace(F, rows, basis)


def second_trace_form(E):
    """``(E, T2)`` for even degree, ``(Ker T1, T2)`` for odd degree."""
    q = form_on(E, revoy_basis(E))
    if not q.is_nonsingular():
        raise SingularFormError(f"second trace form of {E} is singular")
    return q


def bm_form(E):
    """``T2`` on ``E`` (even degree) or on ``E x F`` (odd degree).

    On ``E x F`` the value at ``(e, f)`` is the second coefficient of
    ``p_e(x) (x - f)``, i.e. ``T2(e) + T1(e) f``.  Coordinates: the power
    basis of ``E`` followed by ``(0, 1)``.
    """
    if E.n % 2 == 0:
        return second_trace_form(E)
    F = E.base
    inner = form_on(E, list(E.power_basis))
    n = E.n
    rows = [list(r) + [F.zero] for r in inner.Q] + [[F.zero] * (n + 1)]
    for i in range(n):
        rows[i][n] = E.trace_vector[i]
    basis = [(b, F.zero) for b in E.power_basis] + [(E.field.zero, F.one)]
    return QuadSpace(F, rows, basis)


def element_of(E, value):
    """Accept algebra elements given as text, base values or FieldValues."""
    if isinstance(value, FieldValue):
        return E.field.coerce(value)
    return E.field(value)
