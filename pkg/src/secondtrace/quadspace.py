"""Quadratic spaces given by upper-triangular coefficient matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatchError, ParseError
from .fields import FieldValue
from . import linalg


class QuadSpace:
    """``q(v) = sum_{i <= j} Q[i][j] v_i v_j`` over ``field``.

    The polar form is ``B = Q + Q^T``; in characteristic two its diagonal
    vanishes, so ``Q`` (not ``B``) is what determines ``q``.  ``basis`` may
    hold the vectors (e.g. algebra elements) the coordinates refer to.
    """

    def __init__(self, field, matrix, basis=None):
        m = len(matrix)
        if any(len(row) != m for row in matrix):
            raise ValueError("coefficient matrix must be square")
        Q = tuple(tuple(field(x) for x in row) for row in matrix)
        for i in range(m):
            for j in range(i):
                if Q[i][j]:
                    raise ValueError("coefficient matrix must be upper triangular")
        if basis is not None and len(basis) != m:
            raise ValueError("basis length does not match the dimension")
        self.field = field
        self.Q = Q
        self.dim = m
        self.basis = tuple(basis) if basis is not None else None

    # -- constructors ----------------------------------------------------------
    @classmethod
    def parse(cls, field, text):
        """Rows separated by ``;``, entries by ``,`` (``"1,1;0,1"`` is [1,1])."""
        rows = text.strip().split(";")
        matrix = [[field(x.strip()) for x in r.split(",")] for r in rows]
        if any(len(r) != len(matrix) for r in matrix):
            raise ParseError(f"form matrix {text!r} is not square")
        try:
            return cls(field, matrix)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def binary(cls, field, a, b):
        """The plane ``[a, b]: a x^2 + x y + b y^2``."""
        return cls(field, [[a, 1], [0, b]])

    @classmethod
    def hyperbolic(cls, field, planes=1):
        return orthogonal_sum(*[cls.binary(field, 0, 0) for _ in range(planes)], field=field)

    @classmethod
    def from_vectors(cls, q, vectors, basis=None):
        """Restriction of ``q`` to the span of ``vectors``, in those coordinates."""
        m = len(vectors)
        F = q.field
        rows = [[F.zero] * m for _ in range(m)]
        for i in range(m):
            rows[i][i] = q.evaluate(vectors[i])
            for j in range(i + 1, m):
                rows[i][j] = q.bilinear(vectors[i], vectors[j])
        return cls(F, rows, basis)

    # -- evaluation ------------------------------------------------------------
    def _vec(self, v):
        if len(v) != self.dim:
            raise ValueError(f"vector of length {len(v)} for a form of dimension {self.dim}")
        return [self.field(x) for x in v]

    def evaluate(self, v):
        v = self._vec(v)
        acc = self.field.zero
        for i, row in enumerate(self.Q):
            vi = v[i]
            if not vi:
                continue
            s = self.field.zero
            for j in range(i, self.dim):
                if row[j] and v[j]:
                    s = s + row[j] * v[j]
            acc = acc + vi * s
        return acc

    def bilinear(self, u, v):
        u, v = self._vec(u), self._vec(v)
        acc = self.field.zero
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                c = self.Q[i][j]
                if c:
                    acc = acc + c * (u[i] * v[j] + u[j] * v[i])
        return acc

    def gram(self):
        m = self.dim
        return [[self.Q[i][j] + self.Q[j][i] for j in range(m)] for i in range(m)]

    def is_nonsingular(self):
        return self.dim % 2 == 0 and bool(linalg.det(self.gram(), self.field))

    # -- transformations -------------------------------------------------------
    def over(self, field):
        """The same coefficients read in an extension field."""
        try:
            return QuadSpace(field, [[field.coerce(x) for x in row] for row in self.Q])
        except FieldMismatchError:
            raise FieldMismatchError(f"{field} does not contain {self.field}") from None

    def scaled(self, c):
        c = self.field(c)
        return QuadSpace(self.field, [[c * x for x in row] for row in self.Q], self.basis)

    def matrix_text(self):
        return ";".join(",".join(str(x) for x in row) for row in self.Q)

    def __eq__(self, other):
        return isinstance(other, QuadSpace) and self.field == other.field and self.Q == other.Q

    def __hash__(self):
        return hash((self.field.key, self.Q))

    def __str__(self):
        return f"QuadSpace[{self.matrix_text()}]"

    __repr__ = __str__


def orthogonal_sum(*spaces, field=None):
    if field is None:
        field = spaces[0].field
    m = sum(s.dim for s in spaces)
    rows = [[field.zero] * m for _ in range(m)]
    off = 0
    for s in spaces:
        if s.field != field:
            raise FieldMismatchError("orthogonal sum of forms over different fields")
        for i in range(s.dim):
            for j in range(s.dim):
                rows[off + i][off + j] = s.Q[i][j]
        off += s.dim
    return QuadSpace(field, rows)


@dataclass(frozen=True)
class BinaryForm:
    """The plane ``[a, b]``: ``a x^2 + x y + b y^2`` (polar pairing 1)."""

    a: FieldValue
    b: FieldValue

    @property
    def field(self):
        return self.a.field

    @property
    def arf(self):
        return self.a * self.b

    def to_space(self):
        return QuadSpace.binary(self.field, self.a, self.b)

    @classmethod
    def parse(cls, field, text):
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")) or s.count(",") != 1:
            raise ParseError(f"binary form must look like [a,b]: {text!r}")
        a, b = s[1:-1].split(",")
        return cls(field(a.strip()), field(b.strip()))

    def __str__(self):
        return f"[{self.a},{self.b}]"
