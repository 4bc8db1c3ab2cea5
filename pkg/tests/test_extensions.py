import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import EXTENSION_FIXTURES, build, seeds
from secondtrace import extensions as ext
from secondtrace.errors import InseparableError
from secondtrace.extensions import ExtensionAlgebra
from secondtrace.fields import UniPoly
from secondtrace.quadforms import witt_decompose, witt_equivalent
from secondtrace.quadspace import QuadSpace


def leibniz_charpoly(M, F):
    """det(xI - M) by the permutation expansion, entries in F[x]."""
    n = len(M)
    X = UniPoly.gen(F)
    entries = [[(X if i == j else UniPoly.constant(F, 0)) + UniPoly.constant(F, M[i][j])
                for j in range(n)] for i in range(n)]
    total = UniPoly.constant(F, 0)
    for perm in itertools.permutations(range(n)):
        term = UniPoly.constant(F, 1)
        for i in range(n):
            term = term * entries[i][perm[i]]
        total = total + term
    return total


def random_element(E, rng):
    return E.element([E.base.random(rng) for _ in range(E.n)])


def test_cubic_f4_char_poly(cubic_f4, F4):
    a = F4("a")
    x = (1 + a) * cubic_f4.alpha
    cp = ext.char_poly(cubic_f4, x)
    assert cp.as_poly() == UniPoly.parse(F4, "x^3+a*x+a")
    assert cp[1] == 0 and cp[2] == a and cp[3] == a
    assert ext.norm(cubic_f4, x) == a
    assert ext.second_coefficient(cubic_f4, x) == a


def test_cubic_f4_modulus_is_reducible(cubic_f4, F4):
    # b = a + 1 is a root, so the algebra is not a field
    assert cubic_f4.irreducible is False
    assert UniPoly.parse(F4, "x^3+x+a")(F4("a+1")) == 0


def test_mult_matrix_examples(F2, F2t):
    E = ExtensionAlgebra(F2t, "x^3+t")
    t = F2t.gen
    assert ext.mult_matrix(E, E.alpha) == [[0, 0, t], [1, 0, 0], [0, 1, 0]]
    assert ext.mult_matrix(E, E.field.one) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    E2 = ExtensionAlgebra(F2, "x^2+x+1")
    assert ext.mult_matrix(E2, E2.alpha) == [[0, 1], [1, 1]]
    cp = ext.char_poly(E2, E2.alpha)
    assert cp[1] == 1 and cp[2] == 1


@pytest.mark.parametrize("n", [3, 5])
def test_radical_matrix_entries(F2t, n):
    # entries: 1 if j = i - k, a if j = n + i - k, 0 otherwise
    t = F2t.gen
    E = ExtensionAlgebra(F2t, UniPoly.parse(F2t, f"x^{n}+t"))
    for k in range(1, n):
        M = ext.mult_matrix(E, E.alpha ** k)
        for i in range(n):
            for j in range(n):
                want = 1 if j == i - k else (t if j == n + i - k else 0)
                assert M[i][j] == want
        assert ext.trace(E, E.alpha ** k) == 0


def test_trace_of_one(F2, F4):
    for F, p in [(F2, "x^3+x+1"), (F2, "x^4+x^3+1"), (F4, "x^2+x+a")]:
        E = ExtensionAlgebra(F, p)
        assert ext.trace(E, E.field.one) == E.n % 2


def test_kernel_of_trace(cubic_f4, F2, F4):
    a = cubic_f4.base("a")
    b = cubic_f4.alpha
    basis = ext.kernel_of_trace(cubic_f4)
    assert len(basis) == 2
    for v in (b * b, (1 + a) * b):
        assert ext.trace(cubic_f4, v) == 0
    assert all(ext.trace(cubic_f4, v) == 0 for v in basis)
    # b^2 and (1+a)b form a symplectic pair for the polar form
    assert ext.polar(cubic_f4, b * b, (1 + a) * b) == 1
    E = ExtensionAlgebra(F2, "x^2+x+1")
    assert ext.kernel_of_trace(E) == [E.field.one]


def test_second_trace_form_examples(F2, cubic_f4):
    E = ExtensionAlgebra(F2, "x^2+x+1")
    q = ext.second_trace_form(E)
    assert q == QuadSpace.parse(F2, "1,1;0,1")
    # q(c0 + c1 x) = c0^2 + c0 c1 + c1^2
    for c0, c1 in itertools.product([0, 1], repeat=2):
        assert q.evaluate([c0, c1]) == ext.second_coefficient(E, E.element([c0, c1]))
    r = witt_decompose(ext.second_trace_form(cubic_f4))
    assert str(r.residue) == "[1,a]"
    E4 = ExtensionAlgebra(F2, "x^4+x^3+1")
    r = witt_decompose(ext.second_trace_form(E4))
    assert r.hyperbolic and r.witt_index == 2


def test_bm_form(cubic_f4, F2):
    bm = ext.bm_form(cubic_f4)
    assert bm.dim == 4
    F = cubic_f4.base
    target = QuadSpace.parse(F, "0,1,0,0;0,0,0,0;0,0,1,1;0,0,0,a")
    assert witt_equivalent(bm, target)
    one = [F.one, F.zero, F.zero, F.zero]
    last = [F.zero, F.zero, F.zero, F.one]
    assert bm.evaluate(last) == 0 and bm.bilinear(one, last) == 1
    E = ExtensionAlgebra(F2, "x^4+x^3+1")
    assert ext.bm_form(E) == ext.second_trace_form(E)


def test_bm_values_match_product_polynomial(cubic_f4):
    # q(e, f) is the second coefficient of p_e(x) (x - f)
    rng = random.Random(5)
    bm = ext.bm_form(cubic_f4)
    F = cubic_f4.base
    for _ in range(50):
        e = random_element(cubic_f4, rng)
        f = F.random(rng)
        prod = ext.char_poly(cubic_f4, e).as_poly() * UniPoly.parse(F, "x") + \
            ext.char_poly(cubic_f4, e).as_poly() * UniPoly.constant(F, f)
        want = prod.coeff(cubic_f4.n - 1)
        assert bm.evaluate(list(cubic_f4.coords(e)) + [f]) == want


def test_frobenius(F2):
    E = ExtensionAlgebra(F2, "x^2+x+1")
    assert ext.frobenius(E, E.field.zero) == 0
    assert ext.frobenius(E, E.alpha) == E.alpha + 1


def test_rejects_bad_moduli(F2, F2t):
    with pytest.raises(InseparableError):
        ExtensionAlgebra(F2, "x^2+1")
    with pytest.raises(InseparableError):
        ExtensionAlgebra(F2t, "x^2+t")
    with pytest.raises(ValueError):
        ExtensionAlgebra(F2, "x+1")
    with pytest.raises(ValueError):
        ExtensionAlgebra(F2t, UniPoly.parse(F2t, "t*x^2+x+1"))


def test_irreducibility_flag(F2, F2t, F4):
    assert ExtensionAlgebra(F2, "x^4+x^3+1").irreducible is True
    assert ExtensionAlgebra(F4, "x^4+x^3+1").irreducible is False
    assert ExtensionAlgebra(F2t, "x^3+t").irreducible is True


def test_multiplication_table(F4):
    E = ExtensionAlgebra(F4, "x^3+x+a")
    for i, j in itertools.product(range(3), repeat=2):
        assert E.element(E.multiplication_table[i][j]) == E.alpha ** (i + j)


@pytest.mark.parametrize("field_text,poly", EXTENSION_FIXTURES)
def test_char_poly_against_leibniz(field_text, poly):
    E = build(field_text, poly)
    rng = random.Random(11)
    for _ in range(15):
        x = random_element(E, rng)
        M = ext.mult_matrix(E, x)
        assert ext.char_poly(E, x).as_poly() == leibniz_charpoly(M, E.base)


@pytest.mark.parametrize("field_text,poly", EXTENSION_FIXTURES)
def test_cayley_hamilton_and_minors(field_text, poly):
    E = build(field_text, poly)
    rng = random.Random(3)
    for _ in range(40):
        x = random_element(E, rng)
        cp = ext.char_poly(E, x)
        assert cp.as_poly()(x) == E.field.zero
        assert cp[2] == ext.second_coefficient(E, x)
        assert cp[1] == ext.trace(E, x)


@pytest.mark.parametrize("field_text,poly", EXTENSION_FIXTURES)
@settings(max_examples=25, deadline=None)
@given(seed=seeds())
def test_polar_and_frobenius_identities(field_text, poly, seed):
    E = build(field_text, poly)
    rng = random.Random(seed)
    x, y = random_element(E, rng), random_element(E, rng)
    T2 = lambda v: ext.second_coefficient(E, v)
    b = ext.polar(E, x, y)
    assert b == T2(x + y) + T2(x) + T2(y)
    assert ext.trace(E, x * x) == ext.trace(E, x) ** 2
    assert ext.polar(E, x * x, y * y) == b * b
    assert T2(x * x) == T2(x) ** 2
    assert ext.norm(E, x * y) == ext.norm(E, x) * ext.norm(E, y)


@pytest.mark.parametrize("field_text,poly", EXTENSION_FIXTURES)
def test_revoy_form_nonsingular(field_text, poly):
    E = build(field_text, poly)
    q = ext.second_trace_form(E)
    assert q.is_nonsingular()
    assert q.dim == (E.n if E.n % 2 == 0 else E.n - 1)
    rng = random.Random(2)
    for _ in range(10):
        x = random_element(E, rng)
        if E.n % 2:
            x = x + ext.trace(E, x) * E.field.one   # T1(1) = 1 in odd degree
        assert q.evaluate(ext.revoy_coords(E, x)) == ext.second_coefficient(E, x)
