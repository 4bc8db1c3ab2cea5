import random

import pytest
from hypothesis import strategies as st

from secondtrace.fields import parse_field
from secondtrace.extensions import ExtensionAlgebra

F2_TEXT = "GF(2)"
F4_TEXT = "GF(2)[a]/(a^2+a+1)"
F16_TEXT = "GF(2)[a]/(a^2+a+1)[c]/(c^2+c+a)"
F2T_TEXT = "GF(2)(t)"
F4T_TEXT = "(GF(2)[a]/(a^2+a+1))(t)"


@pytest.fixture(scope="session")
def F2():
    return parse_field(F2_TEXT)


@pytest.fixture(scope="session")
def F4():
    return parse_field(F4_TEXT)


@pytest.fixture(scope="session")
def F2t():
    return parse_field(F2T_TEXT)


@pytest.fixture(scope="session")
def F4t():
    return parse_field(F4T_TEXT)


@pytest.fixture(scope="session")
def cubic_f4(F4):
    return ExtensionAlgebra(F4, "x^3+x+a", "b")


def seeds():
    return st.integers(min_value=0, max_value=2 ** 32)


def rand(F, seed, **kw):
    return F.random(random.Random(seed), **kw)


# extensions used by the identity and property suites
EXTENSION_FIXTURES = [
    (F2_TEXT, "x^2+x+1"),
    (F2_TEXT, "x^3+x+1"),
    (F2_TEXT, "x^4+x^3+1"),
    (F2_TEXT, "x^5+x^2+1"),
    (F4_TEXT, "x^3+x+a"),
    (F4_TEXT, "x^2+x+a"),
    (F4_TEXT, "x^3+a"),
    (F2T_TEXT, "x^3+t"),
    (F2T_TEXT, "x^4+x^3+1"),
    (F2T_TEXT, "x^2+x+t"),
    (F2T_TEXT, "x^3+t*x+1"),
    (F4T_TEXT, "x^3+t"),
]


def build(field_text, poly_text):
    return ExtensionAlgebra(parse_field(field_text), poly_text)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
