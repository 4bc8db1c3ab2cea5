"""Deciding whether a quadratic form is Witt equivalent to a second trace
form, explicit witness extensions, and end-to-end checks of the structure
results on concrete extensions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import extensions as ext
from .artinschreier import pmember
from .errors import ReducibleError, UncertifiedError, UnsupportedFieldError
from .fields import GF2, UniPoly, is_irreducible
from .quadforms import (
    WittReport, extend_scalars, is_symplectic, trace_normal_form, witt_decompose, witt_equivalent,
)
from .quadspace import QuadSpace, orthogonal_sum

YES, NO, UNKNOWN = "yes", "no", "unknown"
RADICAL_DEGREES = (3, 5, 7)


@dataclass
class AlgebraicityAnswer:
    answer: str
    witness: UniPoly | None = None
    reason: str = ""
    report: WittReport | None = None


@dataclass
class HyperbolicWitness:
    """An extension whose second trace form is hyperbolic, with explicit
    hyperbolic pairs given as algebra elements."""

    extension: ext.ExtensionAlgebra
    pairs: list
    report: WittReport


def _poly(F, text):
    return UniPoly.parse(F, text, "x")


def _require_field(E):
    if E.irreducible is False:
        raise ReducibleError(f"{E.modulus} is reducible over {E.base}")
    if E.irreducible is None:
        raise UncertifiedError(f"irreducibility of {E.modulus} over {E.base} is undecided")


def _check_pairs(E, pairs):
    """Verify elements of E0 (odd degree) or E forming hyperbolic pairs for T2."""
    q = ext.second_trace_form(E)
    vecs = [(ext.revoy_coords(E, u), ext.revoy_coords(E, w)) for u, w in pairs]
    for u, w in vecs:
        if q.evaluate(u) or q.evaluate(w):
            raise AssertionError("witness vector is not isotropic")
    if not is_symplectic(q, vecs):
        raise AssertionError("witness pairs are not symplectic")
    return q


def _supported(F):
    if not (F.is_finite or F.is_function_field):
        raise UnsupportedFieldError(f"no witness constructions over {F}")


def witness_hyperbolic_quartic(F):
    """``F[x]/(x^4 + x^3 + 1)`` with the hyperbolic pairs
    ``{alpha, 1 + alpha^3}`` and ``{alpha^2, alpha + alpha^2 + alpha^3}``."""
    _supported(F)
    E = ext.ExtensionAlgebra(F, _poly(F, "x^4+x^3+1"))
    _require_field(E)
    al = E.alpha
    pairs = [(al, 1 + al ** 3), (al ** 2, al + al ** 2 + al ** 3)]
    q = _check_pairs(E, pairs)
    report = witt_decompose(q)
    if not (report.certified and report.hyperbolic and report.witt_index == 2):
        raise AssertionError("quartic trace form failed to decompose as 2H")
    return HyperbolicWitness(E, pairs, report)


def witness_hyperbolic_radical(F, a, n):
    """``F[x]/(x^n + a)`` for odd ``n``; the planes ``<alpha^k, alpha^(n-k)>``
    split ``Ker T1`` into ``(n-1)/2`` hyperbolic planes."""
    _supported(F)
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and at least 3")
    a = F(a)
    if not a:
        raise ValueError("a must be nonzero")
    X = UniPoly.gen(F, "x")
    E = ext.ExtensionAlgebra(F, X ** n + UniPoly.constant(F, a, "x"))
    _require_field(E)
    al = E.alpha
    for k in range(1, n):
        if ext.second_coefficient(E, al ** k):
            raise AssertionError(f"T2(alpha^{k}) is nonzero")
    # B(alpha^k, alpha^(n-k)) = T1(alpha^n) = T1(a) = a for odd n
    pairs = [(al ** k, al ** (n - k) / a) for k in range(1, (n + 1) // 2)]
    q = _check_pairs(E, pairs)
    report = witt_decompose(q)
    if not (report.certified and report.hyperbolic and report.witt_index == (n - 1) // 2):
        raise AssertionError("radical trace form failed to decompose as a hyperbolic space")
    return HyperbolicWitness(E, pairs, report)


def _radical_candidates(F):
    """Small nonzero elements: generators, constants, then t + c."""
    seen = []

    def push(v):
        if v and v not in seen:
            seen.append(v)

    for g in F.gens().values():
        push(F(g))
    if F.is_finite:
        for v in F.elements():
            push(v)
    else:
        t = F.gen
        consts = [F(c) for c in F.base.elements()]
        for c in consts:
            push(c)
        for c, d in itertools.product(consts, repeat=2):
            if c:
                push(c * t + d)
    return seen


def find_radical_witness(F):
    for n in RADICAL_DEGREES:
        X = UniPoly.gen(F, "x")
        for a in _radical_candidates(F):
            if is_irreducible(X ** n + UniPoly.constant(F, a, "x")) is True:
                return witness_hyperbolic_radical(F, a, n)
    return None


def hyperbolic_witness(F):
    """A witness for the hyperbolic class, or None when none is known."""
    _supported(F)
    if F in (GF2(),) or (F.is_function_field and F.base == GF2()):
        return witness_hyperbolic_quartic(F)
    return find_radical_witness(F)


def is_2algebraic(q, **search):
    report = witt_decompose(q, **search)
    F = q.field
    if not report.certified:
        return AlgebraicityAnswer(UNKNOWN, None, "search-exhausted", report)
    if report.hyperbolic:
        w = hyperbolic_witness(F)
        if w is None:
            return AlgebraicityAnswer(UNKNOWN, None, "search-exhausted", report)
        # independent re-check: the witness form must be Witt equivalent to q
        if not witt_equivalent(ext.second_trace_form(w.extension), q):
            raise AssertionError("hyperbolic witness does not match")
        return AlgebraicityAnswer(YES, w.extension.modulus, "hyperbolic-witness", report)
    if report.residue_dim > 2:
        return AlgebraicityAnswer(NO, None, "residue-too-big", report)
    if report.represents_one is None:
        return AlgebraicityAnswer(UNKNOWN, None, "search-exhausted", report)
    if not report.represents_one:
        return AlgebraicityAnswer(NO, None, "binary-residue", report)
    b = report.residue.b
    witness = _poly(F, "x^2+x") + UniPoly.constant(F, b, "x")
    E = ext.ExtensionAlgebra(F, witness)
    if not witt_equivalent(ext.second_trace_form(E), q):
        raise AssertionError("binary witness does not match")
    return AlgebraicityAnswer(YES, witness, "binary-residue", report)


def verify_thm1(E):
    """The trace form and the form on ``E x F`` built from ``T1(alpha^i)`` are Witt equivalent."""
    revoy = ext.second_trace_form(E)
    bm = ext.bm_form(E)
    if E.n % 2 == 0:
        return revoy == bm
    if bm.dim != revoy.dim + 2:
        return False
    F = E.base
    n = E.n
    one = [F.one] + [F.zero] * n
    last = [F.zero] * n + [F.one]
    # F(1,0) + F(0,1) is a hyperbolic plane orthogonal to E0 x {0}
    if bm.evaluate(last) or not bm.bilinear(one, last).is_one():
        return False
    kernel = [list(E.coords(v)) + [F.zero] for v in ext.kernel_of_trace(E)]
    for v in kernel:
        if bm.bilinear(v, one) or bm.bilinear(v, last):
            return False
    if QuadSpace.from_vectors(bm, kernel).Q != revoy.Q:
        return False
    return witt_equivalent(revoy, bm)


def verify_thm2(E):
    """The second trace form is ``(m - 1)H + [1, a]`` for ``m`` planes."""
    nf = trace_normal_form(E)
    q = nf.form
    F = E.base
    m = nf.planes
    for i, (e, f) in enumerate(nf.pairs):
        if not ext.second_coefficient(E, e).is_one():
            return False
        if E.n % 2 and (ext.trace(E, e) or ext.trace(E, f)):
            return False
        for j, (e2, f2) in enumerate(nf.pairs):
            want = F.one if i == j else F.zero
            if ext.polar(E, e, f2) != want or (i != j and (ext.polar(E, e, e2) or ext.polar(E, f, f2))):
                return False
    target = orthogonal_sum(*([QuadSpace.hyperbolic(F, m - 1)] if m > 1 else []),
                            QuadSpace.binary(F, 1, nf.a), field=F)
    r = nf.report
    if r.hyperbolic != bool(pmember(nf.a).member) or not r.certified:
        return False
    return witt_equivalent(q, target)


# -- corpora ---------------------------------------------------------------------

def monic_polys(F, d):
    """Monic degree-``d`` polynomials; coefficients read high degree first as
    digits in the element order of ``F``."""
    elems = list(F.elements())
    for digits in itertools.product(elems, repeat=d):
        yield UniPoly.from_coeffs(F, list(reversed(digits)) + [F.one], "x")


def irreducible_polys(F, degree_bound, min_degree=2):
    if not F.is_finite:
        raise UnsupportedFieldError("enumeration needs a finite base field")
    for d in range(min_degree, degree_bound + 1):
        for p in monic_polys(F, d):
            if is_irreducible(p):
                yield p


@dataclass
class CorpusEntry:
    modulus: UniPoly
    extension: ext.ExtensionAlgebra
    normal_form: object

    @property
    def report(self):
        return self.normal_form.report


def enumerate_corpus(F, degree_bound, max_bound=12):
    """Stream ``CorpusEntry`` records for every monic irreducible modulus of
    degree 2..degree_bound over the finite field ``F``."""
    if degree_bound > max_bound:
        raise ValueError(f"degree bound {degree_bound} exceeds the configured maximum {max_bound}")
    for p in irreducible_polys(F, degree_bound):
        E = ext.ExtensionAlgebra(F, p)
        yield CorpusEntry(p, E, trace_normal_form(E))


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def necklace_count(q, n):
    """Number of monic irreducible polynomials of degree ``n`` over GF(q)."""
    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def extend_to_quadratic(q, b):
    """Extend ``q`` to ``F[x]/(x^2 + x + b)`` and decompose it there."""
    F = q.field
    E = ext.ExtensionAlgebra(F, _poly(F, "x^2+x") + UniPoly.constant(F, b, "x"))
    return E, witt_decompose(extend_scalars(q, E))
