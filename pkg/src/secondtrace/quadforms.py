"""Witt decomposition, Arf invariant and Witt equivalence of nonsingular
quadratic spaces in characteristic two.

Vectors are plain lists of field values in the coordinates of the space.
Every hyperbolic plane that is split off explicitly is returned as a pair
``(u, w)`` with ``q(u) = q(w) = 0`` and ``B(u, w) = 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from . import extensions as ext
from .artinschreier import class_representative, pclass_equal, pmember
from .errors import FieldMismatchError, SingularFormError, UncertifiedError, UnsupportedFieldError
from .funcfield import is_constant_norm, square_class
from .quadspace import BinaryForm, QuadSpace, orthogonal_sum

DEFAULT_SEARCH_DEGREE = 4
DEFAULT_SEARCH_BUDGET = 4096


def evaluate(q, v):
    return q.evaluate(v)


def bilinear(q, u, v):
    return q.bilinear(u, v)


# -- vector helpers ---------------------------------------------------------------

def _add(u, v):
    return [a + b for a, b in zip(u, v)]


def _scale(c, v):
    return [c * a for a in v]


def _is_zero(v):
    return not any(v)


def _unit(F, m, i):
    return [F.one if j == i else F.zero for j in range(m)]


# -- symplectic bases -------------------------------------------------------------

def _pair_up(q, vectors):
    """Symplectic pairs spanning the same space as ``vectors``.

    Vectors that become zero after orthogonalization are dropped; a nonzero
    vector without a partner lies in the radical.
    """
    rest = [list(v) for v in vectors]
    pairs = []
    while rest:
        e = rest.pop(0)
        if _is_zero(e):
            continue
        k = next((i for i, w in enumerate(rest) if q.bilinear(e, w)), None)
        if k is None:
            raise SingularFormError(
                f"polar form is degenerate: ({', '.join(map(str, e))}) lies in the radical", e)
        f = rest.pop(k)
        f = _scale(q.bilinear(e, f).inverse(), f)
        rest = [_add(w, _add(_scale(q.bilinear(w, f), e), _scale(q.bilinear(w, e), f))) for w in rest]
        pairs.append((e, f))
    return pairs


def symplectic_basis(q):
    """Pairs ``(e_i, f_i)`` with ``B(e_i, f_j) = delta_ij`` and all other pairings zero."""
    if q.dim % 2:
        raise SingularFormError(f"a form of odd dimension {q.dim} has a degenerate polar form")
    F = q.field
    return _pair_up(q, [_unit(F, q.dim, i) for i in range(q.dim)])


def is_symplectic(q, pairs):
    flat = [v for p in pairs for v in p]
    for i, u in enumerate(flat):
        for j, v in enumerate(flat):
            want = (i // 2 == j // 2 and i != j)
            if bool(q.bilinear(u, v)) != want or (want and not q.bilinear(u, v).is_one()):
                return False
    return True


def arf_of_basis(q, pairs):
    acc = q.field.zero
    for e, f in pairs:
        acc = acc + q.evaluate(e) * q.evaluate(f)
    return acc


def arf(q):
    """Arf invariant as the canonical representative of its class mod x^2 + x."""
    return class_representative(arf_of_basis(q, symplectic_basis(q)))


def symplectic_transvection(q, v, c):
    """``w -> w + c B(w, v) v``; preserves the polar form."""
    def apply(w):
        return _add(w, _scale(c * q.bilinear(w, v), v))
    return apply


# -- Witt decomposition -----------------------------------------------------------

@dataclass
class WittReport:
    """``q = witt_index * H + residue`` in the Witt group.

    ``hyperbolic_pairs`` holds the explicitly exhibited planes; it can be
    shorter than ``witt_index`` only when two anisotropic planes were shown
    to cancel by an exact norm test without a vector being found.
    ``residue_basis`` gives the residue's coordinates in the input space.
    ``represents_one`` is True/False/None for a binary residue.
    """

    dim: int
    witt_index: int
    residue: object
    arf: object
    hyperbolic: bool
    certified: bool
    hyperbolic_pairs: list = dc_field(default_factory=list)
    residue_basis: list = dc_field(default_factory=list)
    represents_one: object = None

    @property
    def residue_dim(self):
        return self.dim - 2 * self.witt_index

    def summary(self):
        return f"{self.witt_index}H" + ("" if self.residue is None else f" + {self.residue}")


def _plane_split(q, e, f):
    """Hyperbolic pair inside the plane spanned by a symplectic ``(e, f)``,
    or None when the plane is anisotropic."""
    a, b = q.evaluate(e), q.evaluate(f)
    if not a:
        return e, _add(f, _scale(b, e))
    if not b:
        return f, _add(e, _scale(a, f))
    r = pmember(a * b)
    if not r.member:
        return None
    c = r.certificate
    u = _add(_scale(c / a, e), f)
    w = _add(e, _scale(a, u))
    return u, w


def _search_polys(K, degree):
    """Polynomials of degree <= ``degree`` over the constants of ``K``, by degree."""
    R = K.ring
    consts = [c.raw for c in K.base.elements()]
    nonzero = consts[1:]
    out = [K.zero]
    for d in range(degree + 1):
        for lead in nonzero:
            for low in itertools.product(consts, repeat=d):
                out.append(K.value(K.fraction(R.from_coeffs(list(low) + [lead]), R.one)))
    return out


class _PlaneSearch:
    """Values represented by a binary plane over K(t), keyed by square class.

    Candidates ``x e + y f`` with polynomial ``x, y`` of bounded degree are
    generated lazily, so a lookup stops at the first hit.
    """

    def __init__(self, q, e, f, degree, budget):
        self.q, self.e, self.f = q, e, f
        self.degree, self.budget = degree, budget
        self.table = {}
        self.exhausted = False
        self._gen = self._candidates()

    def _candidates(self):
        q, e, f = self.q, self.e, self.f
        yield from (e, f, _add(e, f))
        polys = _search_polys(q.field, self.degree)
        count = 0
        for k in range(1, len(polys)):
            for j in range(k + 1):
                for x, y in ((polys[k], polys[j]), (polys[j], polys[k])):
                    if count >= self.budget:
                        return
                    v = _add(_scale(x, e), _scale(y, f))
                    if not _is_zero(v):
                        count += 1
                        yield v

    def step(self):
        """Examine one more candidate; return its key if it is new."""
        v = next(self._gen, None)
        if v is None:
            self.exhausted = True
            return None
        key = square_class(self.q.evaluate(v))
        if key in self.table:
            return None
        self.table[key] = v
        return key

    def find(self, key):
        while key not in self.table and not self.exhausted:
            self.step()
        return self.table.get(key)


def _common_value(q, P1, P2, ctx):
    """Vectors ``u1`` in plane 1 and ``u2`` in plane 2 with ``q(u1) = q(u2)``."""
    e1, e2 = P1[0], P2[0]
    F = q.field
    if F.is_finite:
        # nonsingular planes over a finite field are universal; anisotropic
        # ones have q(e) != 0, so both e's can be scaled to value one
        return _scale(q.evaluate(e1).sqrt().inverse(), e1), _scale(q.evaluate(e2).sqrt().inverse(), e2)
    s1 = ctx.search(P1)
    s2 = ctx.search(P2)
    hit = next((k for k in s1.table if k in s2.table), None)
    while hit is None and not (s1.exhausted and s2.exhausted):
        for mine, other in ((s1, s2), (s2, s1)):
            key = mine.step()
            if key is not None and key in other.table:
                hit = key
                break
    if hit is None:
        return None
    v1, v2 = s1.table[hit], s2.table[hit]
    ratio = q.evaluate(v1) / q.evaluate(v2)
    return v1, _scale(ratio.sqrt(), v2)


def _merge_planes(q, P1, P2, u1, u2):
    """Split a hyperbolic pair off ``P1 + P2`` using the isotropic ``u1 + u2``;
    return the pair and a symplectic pair for the complement."""
    x = _add(u1, u2)
    w0 = next(v for v in (P1[0], P1[1], P2[0], P2[1]) if q.bilinear(x, v))
    w0 = _scale(q.bilinear(x, w0).inverse(), w0)
    w = _add(w0, _scale(q.evaluate(w0), x))
    proj = []
    for v in (P1[0], P1[1], P2[0], P2[1]):
        proj.append(_add(v, _add(_scale(q.bilinear(v, w), x), _scale(q.bilinear(v, x), w))))
    rest = _pair_up(q, proj)
    assert len(rest) == 1
    return (x, w), rest[0]


def _plane_ab(q, P):
    return q.evaluate(P[0]), q.evaluate(P[1])


def _exactly_anisotropic(q, P1, P2):
    """True when ``P1 + P2`` is provably anisotropic, None when undecided.

    If both Arf classes are the nontrivial constant class, each plane is
    ``lambda_i`` times the norm form of the constant quadratic extension and
    the sum is isotropic iff ``lambda_1 / lambda_2`` is such a norm.
    Returns False when the planes cancel at class level.
    """
    a1, b1 = _plane_ab(q, P1)
    a2, b2 = _plane_ab(q, P2)
    K = q.field
    r1, r2 = pmember(a1 * b1), pmember(a2 * b2)
    if not (K.is_constant(r1.reduced_form) and K.is_constant(r2.reduced_form)):
        return None
    return not is_constant_norm(a1 / a2)


class _Context:
    def __init__(self, q, degree, budget):
        self.q, self.degree, self.budget = q, degree, budget
        self._cache = {}

    def search(self, P):
        key = tuple(tuple(v) for v in P)
        if key not in self._cache:
            self._cache[key] = _PlaneSearch(self.q, P[0], P[1], self.degree, self.budget)
        return self._cache[key]


def _normalize_binary(q, P, ctx):
    """Rewrite an anisotropic plane as ``[1, c]`` with ``c`` canonical.

    Returns ``(BinaryForm, basis, represents_one)``; when no vector of value
    one is available the plane is returned as ``[q(e), q(f)]``.
    """
    e, f = P
    a, b = _plane_ab(q, P)
    F = q.field
    u = None
    if F.is_finite:
        u = _scale(a.sqrt().inverse(), e)
    else:
        v = ctx.search(P).find(square_class(F.one))
        if v is not None:
            u = _scale(q.evaluate(v).sqrt().inverse(), v)
    if u is None:
        known = None
        if F.is_constant(pmember(a * b).reduced_form):
            # [a, b] = a [1, ab]; with a constant Arf class this represents 1
            # exactly when a is a norm from the constant quadratic extension
            known = is_constant_norm(a)
        return BinaryForm(a, b), [e, f], known
    w = e if q.bilinear(u, e) else f
    w = _scale(q.bilinear(u, w).inverse(), w)
    c = q.evaluate(w)
    r = pmember(c)
    w = _add(w, _scale(r.shift, u))
    assert q.evaluate(u).is_one() and q.bilinear(u, w).is_one()
    return BinaryForm(F.one, q.evaluate(w)), [u, w], True


def witt_decompose(q, search_degree=DEFAULT_SEARCH_DEGREE, search_budget=DEFAULT_SEARCH_BUDGET):
    F = q.field
    if not (F.is_finite or F.is_function_field):
        raise UnsupportedFieldError(f"Witt decomposition is not available over {F}")
    pairs = symplectic_basis(q)
    total_arf = class_representative(arf_of_basis(q, pairs))
    hyper = []
    aniso = []
    for e, f in pairs:
        s = _plane_split(q, e, f)
        if s is None:
            aniso.append((e, f))
        else:
            hyper.append(s)
    ctx = _Context(q, search_degree, search_budget)
    class_level = 0
    certified = True
    while len(aniso) >= 2:
        merged = False
        for i, j in itertools.combinations(range(len(aniso)), 2):
            P1, P2 = aniso[i], aniso[j]
            found = _common_value(q, P1, P2, ctx)
            if found is None:
                continue
            pair, rest = _merge_planes(q, P1, P2, *found)
            hyper.append(pair)
            aniso = [P for k, P in enumerate(aniso) if k not in (i, j)]
            s = _plane_split(q, *rest)
            if s is None:
                aniso.append(rest)
            else:
                hyper.append(s)
            merged = True
            break
        if merged:
            continue
        if len(aniso) == 2:
            verdict = _exactly_anisotropic(q, aniso[0], aniso[1])
            if verdict is False:
                class_level += 2
                aniso = []
            elif verdict is None:
                certified = False
        else:
            certified = False
        break
    for u, w in hyper:
        assert not q.evaluate(u) and not q.evaluate(w) and q.bilinear(u, w).is_one()
    r = len(hyper) + class_level
    report = WittReport(dim=q.dim, witt_index=r, residue=None, arf=total_arf,
                        hyperbolic=(2 * r == q.dim) and certified, certified=certified,
                        hyperbolic_pairs=hyper)
    if len(aniso) == 1:
        form, basis, rep1 = _normalize_binary(q, aniso[0], ctx)
        report.residue, report.residue_basis, report.represents_one = form, basis, rep1
    elif aniso:
        basis = [v for P in aniso for v in P]
        report.residue = QuadSpace.from_vectors(q, basis)
        report.residue_basis = basis
    return report


# -- comparisons and scalar extension ----------------------------------------------

def witt_equivalent(q1, q2, **search):
    """Witt equivalence via hyperbolicity of ``residue1 + residue2``
    (in characteristic two every form is its own negative)."""
    if q1.field != q2.field:
        raise FieldMismatchError("forms over different fields")
    r1 = witt_decompose(q1, **search)
    r2 = witt_decompose(q2, **search)
    if not (r1.certified and r2.certified):
        raise UncertifiedError("cannot compare forms whose decomposition is uncertified")
    if r1.residue_dim != r2.residue_dim:
        return False
    if r1.residue_dim == 0:
        return True
    res1 = r1.residue.to_space() if isinstance(r1.residue, BinaryForm) else r1.residue
    res2 = r2.residue.to_space() if isinstance(r2.residue, BinaryForm) else r2.residue
    if isinstance(r1.residue, BinaryForm) and isinstance(r2.residue, BinaryForm) \
            and r1.residue.a.is_one() and r2.residue.a.is_one():
        return pclass_equal(r1.residue.b, r2.residue.b)
    joint = witt_decompose(orthogonal_sum(res1, res2), **search)
    if not joint.certified:
        raise UncertifiedError("cannot decide whether the residues agree")
    return joint.hyperbolic


def extend_scalars(q, E):
    """``q`` read over the algebra ``E`` (an ``ExtensionAlgebra`` or a field)."""
    target = getattr(E, "field", E)
    return q.over(target)


# -- finite-field oracles ------------------------------------------------------------

def all_vectors(F, m):
    elems = list(F.elements())
    for combo in itertools.product(elems, repeat=m):
        yield list(combo)


def count_zeros(q):
    """Number of ``v`` (including 0) with ``q(v) = 0``, by full enumeration."""
    return sum(1 for v in all_vectors(q.field, q.dim) if not q.evaluate(v))


def hyperbolic_zero_count(Q, m):
    return Q ** (2 * m - 1) + Q ** m - Q ** (m - 1)


def is_hyperbolic_by_count(q):
    return count_zeros(q) == hyperbolic_zero_count(q.field.order, q.dim // 2)


# -- normal form of second trace forms ------------------------------------------------

@dataclass
class TraceNormalForm:
    """Result of normalizing the second trace form of ``extension``.

    ``pairs`` are algebra elements ``(e'_i, f'_i)`` with ``T2(e'_i) = 1``;
    each spans a plane ``[1, a_i]`` and ``a`` is the canonical representative
    of ``sum(a_i)``.
    """

    extension: object
    form: QuadSpace
    pairs: list
    a_values: list
    a: object
    report: WittReport

    @property
    def planes(self):
        return len(self.pairs)


def trace_normal_form(E):
    q = ext.second_trace_form(E)
    basis = q.basis
    F = E.base

    def element(v):
        acc = E.field.zero
        for c, b in zip(v, basis):
            if c:
                acc = acc + c * b
        return acc

    new_pairs = []
    for e, f in symplectic_basis(q):
        e, f = element(e), element(f)
        # first of e, f, e + f with nonzero T2, with a partner pairing to 1
        for x, y in ((e, f), (f, e), (e + f, e)):
            t2 = ext.second_coefficient(E, x)
            if t2:
                break
        new_pairs.append((x * x / t2, t2 * y * y))
    a_values = [ext.second_coefficient(E, fp) for _, fp in new_pairs]
    coords = [ext.revoy_coords(E, v) for p in new_pairs for v in p]
    reduced = QuadSpace.from_vectors(q, coords, [v for p in new_pairs for v in p])
    report = witt_decompose(reduced)
    # back to the coordinates of the second trace form
    def lift(v):
        acc = [F.zero] * q.dim
        for c, w in zip(v, coords):
            if c:
                acc = _add(acc, _scale(c, w))
        return acc
    report.hyperbolic_pairs = [(lift(u), lift(w)) for u, w in report.hyperbolic_pairs]
    report.residue_basis = [lift(v) for v in report.residue_basis]
    report.dim = q.dim
    total = F.zero
    for ai in a_values:
        total = total + ai
    return TraceNormalForm(E, q, new_pairs, a_values, class_representative(total), report)
