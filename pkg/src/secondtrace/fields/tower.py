"""Characteristic-two field towers and their elements.

A tower starts at GF(2), climbs through zero or more algebraic layers
``K[a]/(m(a))`` and may end in one rational-function layer ``K(t)``.  Each
layer manipulates raw payloads (ints, tuples, or numerator/denominator
pairs); ``FieldValue`` wraps a payload together with its field and supplies
the operators.
"""

from __future__ import annotations

from functools import cached_property

from ..errors import (
    FieldMismatchError,
    NotASquareError,
    ReducibleError,
    UnsupportedFieldError,
)
from .polyring import GenericPolyRing, GF2PolyRing


def format_poly(ring, p, var, fmt):
    cs = ring.coeffs(p)
    terms = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == ring.field.zero_raw:
            continue
        s = fmt(c)
        if k == 0:
            terms.append(s)
            continue
        mono = var if k == 1 else f"{var}^{k}"
        if s == "1":
            terms.append(mono)
        elif "+" in s or "/" in s:
            terms.append(f"({s})*{mono}")
        else:
            terms.append(f"{s}*{mono}")
    return "+".join(terms) if terms else "0"


class Field:
    """Common interface of every layer in a tower.

    Subclasses implement the raw protocol (``_add``, ``_mul``, ``_inv``,
    ``_sqrt``, ``_random``, ``_format``, ``_embed``) on payloads; the public
    methods work on ``FieldValue``.
    """

    base = None
    zero_raw = 0
    one_raw = 1
    is_finite = True

    # -- identity ------------------------------------------------------------
    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return self is other or (isinstance(other, Field) and self.key == other.key)

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return self.describe()

    def __repr__(self):
        return f"Field({self.describe()!r})"

    # -- construction of values -----------------------------------------------
    def __call__(self, x):
        if isinstance(x, FieldValue):
            return self.coerce(x)
        if isinstance(x, bool) or isinstance(x, int):
            return self.one if x % 2 else self.zero
        if isinstance(x, str):
            from .parse import parse_element
            return parse_element(self, x)
        raise TypeError(f"cannot convert {type(x).__name__} to a field element")

    def value(self, raw):
        return FieldValue(self, raw)

    @cached_property
    def zero(self):
        return FieldValue(self, self.zero_raw)

    @cached_property
    def one(self):
        return FieldValue(self, self.one_raw)

    @cached_property
    def poly_ring(self):
        return GenericPolyRing(self)

    def coerce(self, v):
        """Embed ``v`` from this field or one of its subfields."""
        if v.field is self:
            return v
        if v.field == self:
            return FieldValue(self, v.raw)
        if self.base is None:
            raise FieldMismatchError(f"{v} does not belong to {self}")
        try:
            inner = self.base.coerce(v)
        except FieldMismatchError:
            raise FieldMismatchError(f"{v} (in {v.field}) does not belong to {self}") from None
        return FieldValue(self, self._embed(inner.raw))

    def tower(self):
        """Layers from GF(2) upward, ending with this field."""
        out = []
        f = self
        while f is not None:
            out.append(f)
            f = f.base
        return out[::-1]

    def gens(self):
        """Generator names of every layer, mapped to their image in this field."""
        out = {} if self.base is None else {k: self.coerce(v) for k, v in self.base.gens().items()}
        if self.name is not None:
            out[self.name] = self.gen
        return out

    name = None
    gen = None

    # -- arithmetic on values --------------------------------------
    def _check(self, *xs):
        for x in xs:
            if not isinstance(x, FieldValue) or x.field != self:
                raise FieldMismatchError(f"{x!r} is not an element of {self}")

    def add(self, x, y):
        self._check(x, y)
        return FieldValue(self, self._add(x.raw, y.raw))

    def mul(self, x, y):
        self._check(x, y)
        return FieldValue(self, self._mul(x.raw, y.raw))

    def neg(self, x):
        self._check(x)
        return x

    def inv(self, x):
        self._check(x)
        return FieldValue(self, self._inv(x.raw))

    def sqrt(self, x):
        self._check(x)
        return FieldValue(self, self._sqrt(x.raw))

    def random(self, rng, **kw):
        return FieldValue(self, self._random(rng, **kw))

    # -- finite-field helpers --------------------------------------------------
    def _require_finite(self):
        if not self.is_finite:
            raise UnsupportedFieldError(f"{self} is not a finite field")

    @property
    def order(self):
        self._require_finite()
        return 2 ** self.degree

    def to_bits(self, v):
        """Coordinates of ``v`` over GF(2) in the tower's monomial basis."""
        self._require_finite()
        return tuple(self._to_bits(self.coerce(v).raw))

    def from_bits(self, bits):
        self._require_finite()
        return FieldValue(self, self._from_bits(list(bits)))

    def elements(self):
        """All elements, in increasing order of their bit vectors read as
        little-endian binary numbers."""
        self._require_finite()
        for i in range(self.order):
            yield self.from_bits([(i >> k) & 1 for k in range(self.degree)])

    def absolute_trace(self, v):
        """Trace to GF(2), as an element of this field (0 or 1)."""
        self._require_finite()
        v = self.coerce(v)
        acc = v
        x = v
        for _ in range(self.degree - 1):
            x = x * x
            acc = acc + x
        return acc

    @property
    def is_function_field(self):
        return False


class GF2(Field):
    """The prime field; payloads are the ints 0 and 1."""

    degree = 1

    @property
    def key(self):
        return ("GF2",)

    def describe(self):
        return "GF(2)"

    @cached_property
    def poly_ring(self):
        return GF2PolyRing(self)

    def _add(self, a, b):
        return a ^ b

    def _mul(self, a, b):
        return a & b

    def _inv(self, a):
        if not a:
            raise ZeroDivisionError("division by zero in GF(2)")
        return 1

    def _sqrt(self, a):
        return a

    def _random(self, rng, **kw):
        return rng.getrandbits(1)

    def _format(self, a):
        return str(a)

    def _to_bits(self, a):
        return [a]

    def _from_bits(self, bits):
        return bits[0] & 1


class AlgebraicLayer(Field):
    """``base[name]/(modulus)`` with ``modulus`` monic irreducible over ``base``.

    Payloads are ``base.poly_ring`` payloads of degree below ``n``.
    ``check=False`` skips the irreducibility test; extension algebras over a
    function field use it when irreducibility could not be certified.
    """

    def __init__(self, base, name, modulus, check=True):
        if modulus.field != base:
            raise FieldMismatchError("modulus must have coefficients in the base field")
        if modulus.degree < 2 or not modulus.is_monic():
            raise ValueError("modulus must be monic of degree at least 2")
        self.base = base
        self.name = name
        self.modulus = modulus.with_var(name)
        self.n = modulus.degree
        self.ring = base.poly_ring
        self._m = modulus.raw
        self.is_finite = base.is_finite
        if check:
            from .unipoly import is_irreducible
            verdict = is_irreducible(modulus)
            if verdict is False:
                raise ReducibleError(f"{modulus} is reducible over {base}")
            if verdict is None:
                raise ReducibleError(f"could not certify irreducibility of {modulus} over {base}")

    @property
    def key(self):
        return ("alg", self.base.key, self.name, self._m)

    def describe(self):
        return f"{self.base.describe()}[{self.name}]/({self.modulus})"

    @property
    def degree(self):
        self._require_finite()
        return self.base.degree * self.n

    @cached_property
    def gen(self):
        return FieldValue(self, self.ring.x)

    @cached_property
    def zero_raw(self):
        return self.ring.zero

    @cached_property
    def one_raw(self):
        return self.ring.one

    def _add(self, a, b):
        return self.ring.add(a, b)

    def _mul(self, a, b):
        return self.ring.mod(self.ring.mul(a, b), self._m)

    def _inv(self, a):
        if a == self.ring.zero:
            raise ZeroDivisionError(f"division by zero in {self}")
        return self.ring.inv_mod(a, self._m)

    def _sqrt(self, a):
        if not self.is_finite:
            raise UnsupportedFieldError(f"square roots are not available in {self}")
        for _ in range(self.degree - 1):
            a = self._mul(a, a)
        return a

    def _random(self, rng, **kw):
        return self.ring.from_coeffs([self.base._random(rng, **kw) for _ in range(self.n)])

    def _embed(self, c):
        return self.ring.constant(c)

    def _format(self, a):
        return format_poly(self.ring, a, self.name, self.base._format)

    def coords(self, v):
        """Coefficients of ``v`` on ``1, gen, ..., gen^(n-1)`` (base values)."""
        cs = self.ring.coeffs(self.coerce(v).raw)
        cs = cs + [self.base.zero_raw] * (self.n - len(cs))
        return tuple(FieldValue(self.base, c) for c in cs)

    def from_coords(self, cs):
        return FieldValue(self, self.ring.from_coeffs([self.base.coerce(self.base(c)).raw for c in cs]))

    def _to_bits(self, a):
        cs = self.ring.coeffs(a)
        cs = cs + [self.base.zero_raw] * (self.n - len(cs))
        out = []
        for c in cs:
            out.extend(self.base._to_bits(c))
        return out

    def _from_bits(self, bits):
        d = self.base.degree
        return self.ring.from_coeffs(
            [self.base._from_bits(bits[i * d:(i + 1) * d]) for i in range(self.n)]
        )


class RationalFunctionField(Field):
    """``base(name)`` for a finite ``base``; payloads are ``(num, den)`` in
    lowest terms with monic denominator."""

    is_finite = False

    def __init__(self, base, name):
        if not base.is_finite:
            raise UnsupportedFieldError("only one transcendental layer is supported")
        self.base = base
        self.name = name
        self.ring = base.poly_ring

    @property
    def key(self):
        return ("rat", self.base.key, self.name)

    def describe(self):
        inner = self.base.describe()
        if isinstance(self.base, GF2):
            return f"{inner}({self.name})"
        return f"({inner})({self.name})"

    @property
    def is_function_field(self):
        return True

    @property
    def degree(self):
        raise UnsupportedFieldError(f"{self} is not a finite field")

    @cached_property
    def zero_raw(self):
        return (self.ring.zero, self.ring.one)

    @cached_property
    def one_raw(self):
        return (self.ring.one, self.ring.one)

    @cached_property
    def gen(self):
        return FieldValue(self, (self.ring.x, self.ring.one))

    def _normalize(self, num, den):
        R = self.ring
        if R.is_zero(den):
            raise ZeroDivisionError(f"division by zero in {self}")
        if R.is_zero(num):
            return (R.zero, R.one)
        g = R.gcd(num, den)
        if not R.is_one(g):
            num = R.quo(num, g)
            den = R.quo(den, g)
        c = R.lc(den)
        if c != self.base.one_raw:
            c = self.base._inv(c)
            num, den = R.scale(num, c), R.scale(den, c)
        return (num, den)

    def fraction(self, num, den):
        """Payload for ``num/den`` given raw polynomials."""
        return self._normalize(num, den)

    def _add(self, a, b):
        R = self.ring
        (n1, d1), (n2, d2) = a, b
        if R.is_zero(n1):
            return b
        if R.is_zero(n2):
            return a
        if d1 == d2:
            return self._normalize(R.add(n1, n2), d1)
        return self._normalize(R.add(R.mul(n1, d2), R.mul(n2, d1)), R.mul(d1, d2))

    def _mul(self, a, b):
        R = self.ring
        (n1, d1), (n2, d2) = a, b
        if R.is_zero(n1) or R.is_zero(n2):
            return self.zero_raw
        # cross-cancel first to keep intermediate degrees small
        g1 = R.gcd(n1, d2)
        g2 = R.gcd(n2, d1)
        if not R.is_one(g1):
            n1, d2 = R.quo(n1, g1), R.quo(d2, g1)
        if not R.is_one(g2):
            n2, d1 = R.quo(n2, g2), R.quo(d1, g2)
        num, den = R.mul(n1, n2), R.mul(d1, d2)
        c = R.lc(den)
        if c != self.base.one_raw:
            c = self.base._inv(c)
            num, den = R.scale(num, c), R.scale(den, c)
        return (num, den)

    def _inv(self, a):
        return self._normalize(a[1], a[0])

    def _sqrt(self, a):
        try:
            return (self.ring.sqrt(a[0]), self.ring.sqrt(a[1]))
        except NotASquareError:
            raise NotASquareError("element is not a square") from None

    def _random(self, rng, max_degree=3, **kw):
        R = self.ring
        num = R.random(rng, rng.randint(0, max_degree))
        den = R.zero
        while R.is_zero(den):
            den = R.random(rng, rng.randint(0, max_degree))
        return self._normalize(num, den)

    def _embed(self, c):
        return self._normalize(self.ring.constant(c), self.ring.one)

    def _format(self, a):
        num, den = a
        n = format_poly(self.ring, num, self.name, self.base._format)
        if self.ring.is_one(den):
            return n
        d = format_poly(self.ring, den, self.name, self.base._format)
        if "+" in n:
            n = f"({n})"
        if "+" in d or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    # -- fraction access ------------------------------------------------------
    def numerator(self, v):
        from .unipoly import UniPoly
        return UniPoly(self.base, self.coerce(v).raw[0], self.name)

    def denominator(self, v):
        from .unipoly import UniPoly
        return UniPoly(self.base, self.coerce(v).raw[1], self.name)

    def from_polys(self, num, den=None):
        """The element ``num/den`` for polynomials over the base field."""
        d = self.ring.one if den is None else den.raw
        return FieldValue(self, self._normalize(num.raw, d))

    def is_constant(self, v):
        num, den = self.coerce(v).raw
        return self.ring.degree(num) <= 0 and self.ring.degree(den) == 0

    def constant_value(self, v):
        """The base-field value of a constant element."""
        if not self.is_constant(v):
            raise ValueError(f"{v} is not constant")
        return FieldValue(self.base, self.ring.lc(self.coerce(v).raw[0]))


class FieldValue:
    """An exact element of a described field.  Immutable."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    def _pair(self, other):
        if isinstance(other, FieldValue):
            F = self.field
            if other.field is F or other.field == F:
                return F, self.raw, other.raw
            try:
                return F, self.raw, F.coerce(other).raw
            except FieldMismatchError:
                G = other.field
                return G, G.coerce(self).raw, other.raw
        if isinstance(other, int):
            return self.field, self.raw, self.field(other).raw
        return None

    def __add__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return FieldValue(F, F._add(a, b))

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __pos__(self):
        return self

    def __mul__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return FieldValue(F, F._mul(a, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return FieldValue(F, F._mul(a, F._inv(b)))

    def __rtruediv__(self, other):
        p = self._pair(other)
        if p is None:
            return NotImplemented
        F, a, b = p
        return FieldValue(F, F._mul(b, F._inv(a)))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        F = self.field
        base = self.raw
        if e < 0:
            base = F._inv(base)
            e = -e
        result = F.one_raw
        while e:
            if e & 1:
                result = F._mul(result, base)
            e >>= 1
            if e:
                base = F._mul(base, base)
        return FieldValue(F, result)

    def inverse(self):
        return FieldValue(self.field, self.field._inv(self.raw))

    def sqrt(self):
        return FieldValue(self.field, self.field._sqrt(self.raw))

    def is_zero(self):
        return self.raw == self.field.zero_raw

    def is_one(self):
        return self.raw == self.field.one_raw

    def __bool__(self):
        return self.raw != self.field.zero_raw

    def __eq__(self, other):
        if isinstance(other, FieldValue):
            if other.field is self.field or other.field == self.field:
                return self.raw == other.raw
            try:
                return self.raw == self.field.coerce(other).raw
            except FieldMismatchError:
                pass
            try:
                return other.raw == other.field.coerce(self).raw
            except FieldMismatchError:
                return False
        if isinstance(other, int):
            return self.raw == self.field(other).raw
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.raw))

    def __str__(self):
        return self.field._format(self.raw)

    def __repr__(self):
        return f"FieldValue({str(self)!r}, {self.field.describe()!r})"

