"""Dense univariate polynomial arithmetic on raw field payloads.

Two representations share one algorithm layer:

* ``GF2PolyRing`` packs a polynomial over GF(2) into a Python int, bit ``i``
  holding the coefficient of ``t^i`` (the zero polynomial is ``0``).
* ``GenericPolyRing`` stores a tuple of base-field payloads, little-endian,
  with trailing zeros stripped (the zero polynomial is ``()``).

Everything above the primitives (gcd, modular powers, square-free and
distinct-degree factorization, Rabin's test) is written once in
``PolyRing`` and works for both.  All payloads are immutable.
"""

from __future__ import annotations

from ..errors import NotASquareError


def prime_factors(n):
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


class PolyRing:
    """Polynomials over ``field`` (which exposes the raw payload protocol)."""

    field = None
    zero = None
    one = None
    x = None

    # -- primitives, supplied by subclasses ---------------------------------
    def degree(self, p): raise NotImplementedError
    def coeffs(self, p): raise NotImplementedError
    def from_coeffs(self, cs): raise NotImplementedError
    def add(self, p, q): raise NotImplementedError
    def mul(self, p, q): raise NotImplementedError
    def scale(self, p, c): raise NotImplementedError
    def shift(self, p, k): raise NotImplementedError
    def divmod(self, p, q): raise NotImplementedError
    def deriv(self, p): raise NotImplementedError
    def sqrt(self, p): raise NotImplementedError

    # -- derived operations --------------------------------------------------
    def is_zero(self, p):
        return p == self.zero

    def is_one(self, p):
        return p == self.one

    def constant(self, c):
        return self.from_coeffs([c])

    def monomial(self, c, k):
        return self.shift(self.constant(c), k)

    def lc(self, p):
        cs = self.coeffs(p)
        return cs[-1] if cs else self.field.zero_raw

    def sub(self, p, q):
        return self.add(p, q)

    def mod(self, p, q):
        return self.divmod(p, q)[1]

    def quo(self, p, q):
        return self.divmod(p, q)[0]

    def exact_quo(self, p, q):
        qq, r = self.divmod(p, q)
        if not self.is_zero(r):
            raise ArithmeticError("inexact polynomial division")
        return qq

    def monic(self, p):
        if self.is_zero(p):
            return p
        return self.scale(p, self.field._inv(self.lc(p)))

    def gcd(self, p, q):
        while not self.is_zero(q):
            p, q = q, self.mod(p, q)
        return self.monic(p)

    def xgcd(self, p, q):
        """Return ``(g, s, u)`` with ``s*p + u*q = g`` and ``g`` monic."""
        r0, r1 = p, q
        s0, s1 = self.one, self.zero
        u0, u1 = self.zero, self.one
        while not self.is_zero(r1):
            qq, r = self.divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, self.sub(s0, self.mul(qq, s1))
            u0, u1 = u1, self.sub(u0, self.mul(qq, u1))
        if self.is_zero(r0):
            return r0, s0, u0
        c = self.field._inv(self.lc(r0))
        return self.scale(r0, c), self.scale(s0, c), self.scale(u0, c)

    def inv_mod(self, p, m):
        g, s, _ = self.xgcd(self.mod(p, m), m)
        if not self.is_one(g):
            raise ZeroDivisionError("polynomial is not invertible modulo the modulus")
        return self.mod(s, m)

    def mulmod(self, p, q, m):
        return self.mod(self.mul(p, q), m)

    def pow(self, p, e):
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, p)
            e >>= 1
            if e:
                p = self.mul(p, p)
        return result

    def pow_mod(self, p, e, m):
        result = self.mod(self.one, m)
        p = self.mod(p, m)
        while e:
            if e & 1:
                result = self.mulmod(result, p, m)
            e >>= 1
            if e:
                p = self.mulmod(p, p, m)
        return result

    def evaluate(self, p, c):
        F = self.field
        acc = F.zero_raw
        for a in reversed(self.coeffs(p)):
            acc = F._add(F._mul(acc, c), a)
        return acc

    def is_square(self, p):
        try:
            self.sqrt(p)
        except NotASquareError:
            return False
        return True

    def valuation(self, p, place):
        """Multiplicity of ``place`` in the nonzero polynomial ``p``."""
        v = 0
        while True:
            qq, r = self.divmod(p, place)
            if not self.is_zero(r):
                return v
            p = qq
            v += 1

    def squarefree_decomposition(self, f):
        """Map multiplicity -> monic square-free factor, for ``f`` over a perfect
        field of characteristic two.  Factors for distinct keys are coprime and
        ``monic(f) == prod(D**i)``."""
        f = self.monic(f)
        out = {}
        if self.degree(f) <= 0:
            return out
        c = self.gcd(f, self.deriv(f))
        w = self.quo(f, c)
        i = 1
        while not self.is_one(w):
            y = self.gcd(w, c)
            z = self.quo(w, y)
            if not self.is_one(z):
                out[i] = z
            i += 1
            w = y
            c = self.quo(c, y)
        if not self.is_one(c):
            for mult, fac in self.squarefree_decomposition(self.sqrt(c)).items():
                key = 2 * mult
                out[key] = self.mul(out[key], fac) if key in out else fac
        return out

    def odd_part(self, f):
        """Product of the primes dividing ``f`` to an odd power (monic)."""
        k = self.one
        for mult, fac in self.squarefree_decomposition(f).items():
            if mult % 2:
                k = self.mul(k, fac)
        return k

    def distinct_degree(self, f, q):
        """Distinct-degree factorization of a monic square-free ``f`` over
        GF(q): map degree -> product of the irreducible factors of that degree."""
        out = {}
        h = self.mod(self.x, f) if self.degree(f) > 0 else self.zero
        i = 1
        while self.degree(f) >= 2 * i:
            h = self.pow_mod(h, q, f)
            g = self.gcd(f, self.sub(h, self.x))
            if not self.is_one(g):
                out[i] = g
                f = self.quo(f, g)
                h = self.mod(h, f)
            i += 1
        if self.degree(f) > 0:
            out[self.degree(f)] = f
        return out

    def is_irreducible_finite(self, f, q):
        """Rabin's test over GF(q)."""
        n = self.degree(f)
        if n <= 0:
            raise ValueError("irreducibility is undefined for constants")
        if n == 1:
            return True
        f = self.monic(f)
        x = self.mod(self.x, f)
        frob = {0: x}
        h = x
        for i in range(1, n + 1):
            h = self.pow_mod(h, q, f)
            frob[i] = h
        if frob[n] != x:
            return False
        for ell in prime_factors(n):
            if not self.is_one(self.gcd(self.sub(frob[n // ell], x), f)):
                return False
        return True

    def random(self, rng, max_degree, monic=False):
        F = self.field
        cs = [F._random(rng) for _ in range(max_degree + 1)]
        if monic:
            cs[-1] = F.one_raw
        return self.from_coeffs(cs)


class GF2PolyRing(PolyRing):
    """Polynomials over GF(2) packed into ints."""

    zero = 0
    one = 1
    x = 2

    def __init__(self, field):
        self.field = field

    def degree(self, p):
        return p.bit_length() - 1

    def coeffs(self, p):
        return [(p >> i) & 1 for i in range(p.bit_length())]

    def from_coeffs(self, cs):
        p = 0
        for i, c in enumerate(cs):
            if c & 1:
                p |= 1 << i
        return p

    def lc(self, p):
        return 1 if p else 0

    def add(self, p, q):
        return p ^ q

    def mul(self, p, q):
        if p.bit_length() < q.bit_length():
            p, q = q, p
        r = 0
        while q:
            if q & 1:
                r ^= p
            p <<= 1
            q >>= 1
        return r

    def scale(self, p, c):
        return p if c else 0

    def shift(self, p, k):
        return p << k

    def monic(self, p):
        return p

    def divmod(self, p, q):
        if q == 0:
            raise ZeroDivisionError("polynomial division by zero")
        dq = q.bit_length()
        quo = 0
        while p.bit_length() >= dq:
            s = p.bit_length() - dq
            quo ^= 1 << s
            p ^= q << s
        return quo, p

    def deriv(self, p):
        return (p >> 1) & _even_mask(p.bit_length())

    def sqrt(self, p):
        if p & (_even_mask(p.bit_length() + 1) << 1):
            raise NotASquareError("polynomial is not a square")
        r = 0
        i = 0
        while p:
            if p & 1:
                r |= 1 << i
            p >>= 2
            i += 1
        return r

    def evaluate(self, p, c):
        if c & 1:
            return bin(p).count("1") & 1
        return p & 1


def _even_mask(nbits):
    # bits 0, 2, 4, ... set, covering at least nbits bits
    return int("01" * ((nbits + 1) // 2 + 1), 2)


class GenericPolyRing(PolyRing):
    """Polynomials over an arbitrary field as stripped tuples of payloads."""

    def __init__(self, field):
        self.field = field
        self.zero = ()
        self.one = (field.one_raw,)
        self.x = (field.zero_raw, field.one_raw)

    def _strip(self, cs):
        z = self.field.zero_raw
        n = len(cs)
        while n and cs[n - 1] == z:
            n -= 1
        return tuple(cs[:n])

    def degree(self, p):
        return len(p) - 1

    def coeffs(self, p):
        return list(p)

    def from_coeffs(self, cs):
        return self._strip(list(cs))

    def lc(self, p):
        return p[-1] if p else self.field.zero_raw

    def add(self, p, q):
        if len(p) < len(q):
            p, q = q, p
        add = self.field._add
        out = list(p)
        for i, c in enumerate(q):
            out[i] = add(out[i], c)
        return self._strip(out) if len(p) == len(q) else tuple(out)

    def mul(self, p, q):
        if not p or not q:
            return ()
        F = self.field
        add, mul, z = F._add, F._mul, F.zero_raw
        out = [z] * (len(p) + len(q) - 1)
        for i, a in enumerate(p):
            if a == z:
                continue
            for j, b in enumerate(q):
                if b != z:
                    out[i + j] = add(out[i + j], mul(a, b))
        return self._strip(out)

    def scale(self, p, c):
        F = self.field
        if c == F.zero_raw:
            return ()
        if c == F.one_raw:
            return p
        return self._strip([F._mul(a, c) for a in p])

    def shift(self, p, k):
        if not p:
            return p
        return (self.field.zero_raw,) * k + p

    def divmod(self, p, q):
        if not q:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        add, mul = F._add, F._mul
        dq = len(q) - 1
        if len(p) - 1 < dq:
            return (), p
        inv_lc = F._inv(q[-1])
        r = list(p)
        quo = [F.zero_raw] * (len(p) - dq)
        for k in range(len(p) - 1 - dq, -1, -1):
            c = r[k + dq]
            if c == F.zero_raw:
                continue
            c = mul(c, inv_lc)
            quo[k] = c
            for j in range(dq + 1):
                r[k + j] = add(r[k + j], mul(c, q[j]))
        return self._strip(quo), self._strip(r[:dq])

    def deriv(self, p):
        z = self.field.zero_raw
        return self._strip([p[i] if i % 2 else z for i in range(1, len(p))])

    def sqrt(self, p):
        F = self.field
        z = F.zero_raw
        if any(p[i] != z for i in range(1, len(p), 2)):
            raise NotASquareError("polynomial is not a square")
        return self._strip([F._sqrt(p[i]) for i in range(0, len(p), 2)])
