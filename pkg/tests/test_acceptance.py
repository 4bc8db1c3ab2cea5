"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines are repeated in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys

import pytest

from secondtrace import extensions as ext
from secondtrace.algebraicity import (
    enumerate_corpus, necklace_count, verify_thm1, witness_hyperbolic_radical,
)
from secondtrace.artinschreier import pclass_equal, pmember
from secondtrace.extensions import ExtensionAlgebra
from secondtrace.fields import UniPoly, parse_field
from secondtrace.quadforms import (
    arf_of_basis, extend_scalars, is_hyperbolic_by_count, is_symplectic, symplectic_basis,
    symplectic_transvection, witt_decompose, witt_equivalent,
)
from secondtrace.quadspace import BinaryForm, QuadSpace

F2_TEXT = "GF(2)"
F4_TEXT = "GF(2)[a]/(a^2+a+1)"
F2T_TEXT = "GF(2)(t)"

RESULTS = {}


def record(number, title, ok, detail=""):
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}" + (f" ({detail})" if detail else "")
    RESULTS[number] = line
    print(line)
    return ok


_CORPUS = {}


def corpus(text, bound):
    if text not in _CORPUS:
        _CORPUS[text] = list(enumerate_corpus(parse_field(text), bound))
    return _CORPUS[text]


# 1 -------------------------------------------------------------------------------

def criterion_1():
    F = parse_field(F4_TEXT)
    a = F("a")
    E = ExtensionAlgebra(F, "x^3+x+a", "b")
    cp = ext.char_poly(E, (1 + a) * E.alpha).as_poly()
    ok_cp = cp == UniPoly.parse(F, "x^3+a*x+a")
    r = witt_decompose(ext.second_trace_form(E))
    ok_res = r.certified and r.witt_index == 0 and r.residue == BinaryForm(F.one, a)
    neq = witt_equivalent(QuadSpace.binary(F, 1, a), QuadSpace.binary(F, 1, 1))
    return ok_cp and ok_res and neq is False, f"char poly {cp}, residue {r.residue}, [1,a]~[1,1] is {neq}"


# 2 -------------------------------------------------------------------------------

def criterion_2():
    details = []
    ok = True
    for text in (F2_TEXT, F2T_TEXT):
        F = parse_field(text)
        E = ExtensionAlgebra(F, "x^4+x^3+1")
        q = ext.second_trace_form(E)
        al = E.alpha
        elems = [(al, 1 + al ** 3), (al ** 2, al + al ** 2 + al ** 3)]
        pairs = [(ext.revoy_coords(E, u), ext.revoy_coords(E, w)) for u, w in elems]
        values = [q.evaluate(v) for p in pairs for v in p]
        r = witt_decompose(q)
        this = (E.irreducible is True and is_symplectic(q, pairs) and all(not v for v in values)
                and r.certified and r.hyperbolic and r.witt_index == 2)
        ok = ok and this
        details.append(f"{text}: witt_index={r.witt_index}")
    return ok, ", ".join(details)


# 3 -------------------------------------------------------------------------------

def criterion_3():
    ok = True
    details = []
    F = parse_field(F2T_TEXT)
    for n in (3, 5, 7):
        w = witness_hyperbolic_radical(F, F.gen, n)
        E = w.extension
        zeros = all(not ext.second_coefficient(E, E.alpha ** k) for k in range(1, n))
        r = witt_decompose(ext.second_trace_form(E))
        this = zeros and r.certified and r.hyperbolic and r.witt_index == (n - 1) // 2
        ok = ok and this and w.report.witt_index == (n - 1) // 2
        details.append(f"n={n}: {r.witt_index}H")
    F4 = parse_field(F4_TEXT)
    w = witness_hyperbolic_radical(F4, F4("a"), 3)
    r = witt_decompose(ext.second_trace_form(w.extension))
    ok = ok and r.hyperbolic and r.witt_index == 1
    details.append(f"F4 n=3: {r.witt_index}H")
    return ok, ", ".join(details)


# 4 -------------------------------------------------------------------------------

def criterion_4():
    ok = True
    details = []
    for text, bound in ((F2_TEXT, 6), (F4_TEXT, 3)):
        F = parse_field(text)
        entries = corpus(text, bound)
        expected = sum(necklace_count(F.order, d) for d in range(2, bound + 1))
        ok = ok and len(entries) == expected
        agree = 0
        for e in entries:
            r = e.report
            shape = (r.certified and r.residue_dim <= 2
                     and r.witt_index == e.normal_form.planes - (0 if r.hyperbolic else 1)
                     and (r.residue is None or (r.residue.a == 1 and pclass_equal(r.residue.b, e.normal_form.a))))
            if shape and r.hyperbolic == is_hyperbolic_by_count(e.normal_form.form):
                agree += 1
        ok = ok and agree == len(entries)
        details.append(f"{text}: {agree}/{len(entries)} agree, necklace count {expected}")
    return ok, "; ".join(details)


# 5 -------------------------------------------------------------------------------

def criterion_5():
    ok = True
    details = []
    for text, bound in ((F2_TEXT, 6), (F4_TEXT, 3)):
        odd = [e for e in corpus(text, bound) if e.extension.n % 2]
        passed = sum(1 for e in odd if verify_thm1(e.extension))
        ok = ok and passed == len(odd)
        details.append(f"{text}: {passed}/{len(odd)}")
    return ok, "; ".join(details)


# 6 -------------------------------------------------------------------------------

IDENTITY_FIXTURES = [
    (F2_TEXT, "x^2+x+1"), (F2_TEXT, "x^4+x^3+1"), (F2_TEXT, "x^5+x^2+1"),
    (F4_TEXT, "x^3+x+a"), (F4_TEXT, "x^3+a"),
    (F2T_TEXT, "x^4+x^3+1"), (F2T_TEXT, "x^3+t"),
]
IDENTITY_TRIALS = 1000


def criterion_6():
    failures = 0
    total = 0
    rng = random.Random(2024)
    for text, poly in IDENTITY_FIXTURES:
        F = parse_field(text)
        E = ExtensionAlgebra(F, poly)
        T2 = lambda v: ext.second_coefficient(E, v)
        for i in range(IDENTITY_TRIALS):
            x = E.element([F.random(rng, max_degree=2) for _ in range(E.n)])
            y = E.element([F.random(rng, max_degree=2) for _ in range(E.n)])
            b = ext.polar(E, x, y)
            total += 1
            if b != T2(x + y) + T2(x) + T2(y):
                failures += 1
            if ext.trace(E, x * x) != ext.trace(E, x) ** 2 or ext.polar(E, x * x, y * y) != b * b:
                failures += 1
            cp = ext.char_poly(E, x)
            if cp[2] != T2(x):
                failures += 1
            if i < 50 and cp.as_poly()(x) != E.field.zero:
                failures += 1
    return failures == 0, f"{total} pairs over {len(IDENTITY_FIXTURES)} extensions, {failures} failures"


# 7 -------------------------------------------------------------------------------

FINITE_TOWERS = ["GF(2)", F4_TEXT, "GF(2)[u]/(u^3+u+1)", "GF(2)[u]/(u^4+u+1)"]


def criterion_7():
    failures = 0
    for text in FINITE_TOWERS:
        F = parse_field(text)
        image = {x * x + x for x in F.elements()}
        for b in F.elements():
            r = pmember(b)
            if r.member != (b in image) or (r.member and r.certificate ** 2 + r.certificate != b):
                failures += 1
    F = parse_field(F2T_TEXT)
    rng = random.Random(7)
    for _ in range(500):
        c = F.random(rng, max_degree=5)
        r = pmember(c * c + c)
        if not r.member or r.certificate ** 2 + r.certificate != c * c + c:
            failures += 1
    if pmember(F.gen).member:
        failures += 1
    return failures == 0, f"{failures} failures"


# 8 -------------------------------------------------------------------------------

def criterion_8():
    checked = 0
    passed = 0
    for text, bound in ((F2_TEXT, 6), (F4_TEXT, 3)):
        F = parse_field(text)
        for e in corpus(text, bound):
            r = e.report
            if r.hyperbolic:
                continue
            b = r.residue.b
            checked += 1
            L = ExtensionAlgebra(F, UniPoly.parse(F, "x^2+x") + UniPoly.constant(F, b))
            plane = extend_scalars(r.residue.to_space(), L)
            whole = extend_scalars(e.normal_form.form, L)
            rp, rw = witt_decompose(plane), witt_decompose(whole)
            ok = L.irreducible is True and rp.hyperbolic and rw.hyperbolic
            # an explicit isotropic vector: (alpha, 1) for [1, b]
            ok = ok and not plane.evaluate([L.alpha, L.field.one])
            ok = ok and all(not whole.evaluate(u) for u, _ in rw.hyperbolic_pairs)
            passed += ok
    return checked > 0 and passed == checked, f"{passed}/{checked} residues split"


# 9 -------------------------------------------------------------------------------

def _basis_change(q, pairs, rng):
    F = q.field
    flat = [v for p in pairs for v in p]
    for _ in range(3):
        v = [F.zero] * q.dim
        for w in flat:
            c = F.random(rng)
            v = [x + c * y for x, y in zip(v, w)]
        tau = symplectic_transvection(q, v, F.random(rng))
        flat = [tau(w) for w in flat]
    return [(flat[2 * i], flat[2 * i + 1]) for i in range(len(pairs))]


def criterion_9():
    forms = []
    for text, poly in [(F4_TEXT, "x^3+x+a"), (F2_TEXT, "x^5+x^2+1"), (F2_TEXT, "x^6+x+1"),
                       (F2T_TEXT, "x^3+t*x+1"), (F2T_TEXT, "x^4+x^3+1")]:
        forms.append(ext.second_trace_form(ExtensionAlgebra(parse_field(text), poly)))
    F4 = parse_field(F4_TEXT)
    forms.append(QuadSpace.parse(F4, "1,1,0,0;0,1,0,0;0,0,1,1;0,0,0,a"))
    rng = random.Random(99)
    failures = 0
    changes = 0
    for q in forms:
        pairs = symplectic_basis(q)
        base = arf_of_basis(q, pairs)
        for _ in range(40):
            new = _basis_change(q, pairs, rng)
            changes += 1
            if not is_symplectic(q, new) or not pclass_equal(arf_of_basis(q, new), base):
                failures += 1
    return failures == 0 and changes >= 200, f"{changes} basis changes, {failures} failures"


CRITERIA = [
    (1, "cubic over F4 reproduction", criterion_1),
    (2, "quartic witness", criterion_2),
    (3, "radical witnesses", criterion_3),
    (4, "normal form corpus", criterion_4),
    (5, "trace form vs extended form corpus", criterion_5),
    (6, "identity suite", criterion_6),
    (7, "Artin-Schreier membership", criterion_7),
    (8, "scalar extension kills residues", criterion_8),
    (9, "Arf well-definedness", criterion_9),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    ok, detail = fn()
    assert record(number, title, ok, detail), RESULTS[number]


if __name__ == "__main__":
    status = 0
    for number, title, fn in CRITERIA:
        ok, detail = fn()
        record(number, title, ok, detail)
        status |= not ok
    sys.exit(status)
