import random

import pytest
from hypothesis import settings, strategies as st

from bracealg.algebra import Polynomial
from bracealg.notation import parse, parse_word
from bracealg.words import NormalWord, enumerate_normal

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def W(text: str) -> NormalWord:
    return parse_word(text)


def P(text: str) -> Polynomial:
    return parse(text)


@st.composite
def normal_words(draw, letters=("x1", "x2"), max_degree=4):
    deg = draw(st.integers(1, max_degree))
    return draw(st.sampled_from(enumerate_normal(list(letters), deg)))


@st.composite
def polynomials(draw, letters=("x1", "x2"), max_degree=3, max_terms=3, nonzero=True):
    n = draw(st.integers(1 if nonzero else 0, max_terms))
    terms = {}
    for _ in range(n):
        w = draw(normal_words(letters, max_degree))
        terms[w] = draw(st.sampled_from([-2, -1, 1, 2, 3])) * draw(st.sampled_from([1, 1, 2]))
    p = Polynomial(terms)
    if nonzero and not p:
        p = Polynomial({w: 1})
    return p


def random_word(rng: random.Random, letters, max_degree: int) -> NormalWord:
    deg = rng.randint(1, max_degree)
    return rng.choice(enumerate_normal(list(letters), deg))


def random_poly(rng: random.Random, letters, max_degree: int, max_terms: int = 3) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_word(rng, letters, max_degree)] = rng.choice([-2, -1, 1, 2, 3])
    p = Polynomial(terms)
    return p if p else Polynomial({random_word(rng, letters, max_degree): 1})


@pytest.fixture
def rng():
    return random.Random(20261017)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)
