"""Polynomials in the free brace algebra and the brace product on them.

Coefficients are exact ``Fraction`` values.  The product of normal words
expands a brace into a nested one by summing over every split of the
argument list into consecutive (possibly empty) blocks, recursing into the
blocks that get braced onto a child of the target.
"""

from __future__ import annotations

import contextvars
import functools
from collections import defaultdict
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product as cartesian
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .words import Brace, GeneralWord, NormalWord

DEFAULT_TERM_BUDGET = 10**6


# -- resource budget -------------------------------------------------------


class BudgetExceeded(RuntimeError):
    """Raised when an expansion produces more intermediate terms than allowed."""


@dataclass
class TermBudget:
    limit: int | None = DEFAULT_TERM_BUDGET
    spent: int = 0

    def charge(self, n: int = 1) -> None:
        self.spent += n
        if self.limit is not None and self.spent > self.limit:
            raise BudgetExceeded(f"term budget of {self.limit} exhausted")


_active: contextvars.ContextVar[TermBudget | None] = contextvars.ContextVar(
    "bracealg_budget", default=None
)


@contextmanager
def term_budget(limit: int | None = DEFAULT_TERM_BUDGET) -> Iterator[TermBudget]:
    """Run the enclosed computation under a fresh term budget."""
    budget = TermBudget(limit)
    token = _active.set(budget)
    try:
        yield budget
    finally:
        _active.reset(token)


def budgeted(fn):
    """Give each top-level call its own default budget unless one is active."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        if _active.get() is not None:
            return fn(*args, **kwargs)
        with term_budget():
            return fn(*args, **kwargs)

    return wrapper


def _charge(n: int) -> None:
    budget = _active.get()
    if budget is not None:
        budget.charge(n)


# -- polynomials -----------------------------------------------------------


def _plain(c: Fraction) -> Fraction | int:
    return c.numerator if c.denominator == 1 else c


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficient {c!r} is not an exact rational")


class Polynomial:
    """Finite combination of normal words with nonzero rational coefficients.

    Instances are immutable; arithmetic returns new polynomials.
    """

    __slots__ = ("_terms", "_lead")

    def __init__(self, terms: Mapping[NormalWord, object] | Iterable[tuple[NormalWord, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[NormalWord, Fraction] = {}
        for w, c in items:
            if not isinstance(w, NormalWord):
                raise TypeError(f"{w!r} is not a NormalWord")
            acc[w] = acc.get(w, 0) + _frac(c)
        self._terms = {w: c for w, c in acc.items() if c}
        self._lead: NormalWord | None = None

    @classmethod
    def _wrap(cls, terms: dict[NormalWord, Fraction]) -> "Polynomial":
        p = cls.__new__(cls)
        p._terms = terms
        p._lead = None
        return p

    @classmethod
    def word(cls, w: NormalWord | str, coeff=1) -> "Polynomial":
        if isinstance(w, str):
            w = NormalWord(w)
        return cls({w: coeff})

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._wrap({})

    @property
    def terms(self) -> Mapping[NormalWord, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> list[tuple[NormalWord, Fraction]]:
        """Terms in strictly decreasing word order."""
        return sorted(self._terms.items(), key=lambda t: t[0].key, reverse=True)

    def __iter__(self):
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, w: NormalWord) -> Fraction:
        return self._terms.get(w, Fraction(0))

    # leading-term data
    @property
    def lead_word(self) -> NormalWord:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        if self._lead is None:
            self._lead = max(self._terms, key=lambda w: w.key)
        return self._lead

    @property
    def lead_coeff(self) -> Fraction:
        return self._terms[self.lead_word]

    @property
    def degree(self) -> int:
        return self.lead_word.degree

    def letters(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for w in self._terms:
            out |= w.letters()
        return out

    def monic(self) -> "Polynomial":
        return self * (1 / self.lead_coeff)

    # arithmetic
    def _combine(self, other: "Polynomial", sign: int) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            v = acc.get(w, 0) + sign * c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        return Polynomial._wrap(acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Polynomial._wrap({w: -c for w, c in self._terms.items()})

    def __mul__(self, scalar):
        s = _frac(scalar)
        if not s:
            return Polynomial.zero()
        return Polynomial._wrap({w: s * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NormalWord):
            other = Polynomial.word(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "Polynomial(0)"
        body = " + ".join(f"{c}*{w}" for w, c in self.items())
        return f"Polynomial({body})"


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def sub(f: Polynomial, g: Polynomial) -> Polynomial:
    return f - g


def scale(f: Polynomial, c) -> Polynomial:
    return f * c


def as_polynomial(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (NormalWord, str)):
        return Polynomial.word(x)
    raise TypeError(f"cannot treat {x!r} as a polynomial")


# -- the brace product -----------------------------------------------------


def consecutive_splits(seq: Sequence, blocks: int) -> Iterator[tuple[tuple, ...]]:
    """Every way to cut ``seq`` into ``blocks`` consecutive, possibly empty pieces."""
    seq = tuple(seq)
    m = len(seq)
    for cuts in combinations_with_replacement(range(m + 1), blocks - 1):
        bounds = (0, *cuts, m)
        yield tuple(seq[bounds[i] : bounds[i + 1]] for i in range(blocks))


@functools.lru_cache(maxsize=1 << 17)
def _expand(args: tuple[NormalWord, ...], target: NormalWord) -> tuple[tuple[NormalWord, int], ...]:
    if not target.children:
        _charge(1)
        return ((NormalWord(target.head, args), 1),)
    n = len(target.children)
    acc: dict[NormalWord, int] = defaultdict(int)
    for blocks in consecutive_splits(args, 2 * n + 1):
        # blocks = (V_2n, V_2n-1, ..., V_0) in display order
        pieces: list[tuple[tuple[tuple[NormalWord, ...], int], ...]] = []
        for i, child in enumerate(target.children):
            free, nested = blocks[2 * i], blocks[2 * i + 1]
            if free:
                pieces.append(((free, 1),))
            if nested:
                pieces.append(tuple(((w,), c) for w, c in _expand(nested, child)))
            else:
                pieces.append((((child,), 1),))
        if blocks[-1]:
            pieces.append(((blocks[-1], 1),))
        for choice in cartesian(*pieces):
            kids: tuple[NormalWord, ...] = ()
            coeff = 1
            for ws, c in choice:
                kids += ws
                coeff *= c
            acc[NormalWord(target.head, kids)] += coeff
            _charge(1)
    return tuple(acc.items())


@budgeted
def product_words(args: Sequence[NormalWord], target: NormalWord) -> Polynomial:
    """Normal-form expansion of ``<args; target>`` for normal words."""
    args = tuple(args)
    if not args:
        raise ValueError("a brace product needs at least one argument")
    return Polynomial._wrap({w: Fraction(c) for w, c in _expand(args, target)})


@budgeted
def product(args: Sequence, target) -> Polynomial:
    """Multilinear brace product ``<args; target>`` of polynomials."""
    args = [as_polynomial(a) for a in args]
    target = as_polynomial(target)
    if not args:
        raise ValueError("a brace product needs at least one argument")
    # integral coefficients stay plain ints in the hot loop
    slots = [[(w, _plain(c)) for w, c in p.terms.items()] for p in [*args, target]]
    acc: dict[NormalWord, Fraction | int] = defaultdict(int)
    for choice in cartesian(*slots):
        coeff = 1
        for _, c in choice:
            coeff *= c
        words = tuple(w for w, _ in choice[:-1])
        expansion = _expand(words, choice[-1][0])
        _charge(len(expansion))
        for w, k in expansion:
            acc[w] += coeff * k
    return Polynomial._wrap({w: Fraction(c) for w, c in acc.items() if c})


@budgeted
def normalize(w: GeneralWord) -> Polynomial:
    """Expand a general brace word in the normal-word basis."""
    if isinstance(w, NormalWord):
        return Polynomial.word(w)
    if isinstance(w, str):
        return Polynomial.word(NormalWord(w))
    if not isinstance(w, Brace):
        raise TypeError(f"{w!r} is not a brace word")
    return product([normalize(a) for a in w.args], normalize(w.target))


def leading(f: Polynomial) -> tuple[NormalWord, Fraction]:
    if not f:
        raise ValueError("the zero polynomial has no leading term")
    return f.lead_word, f.lead_coeff


# -- leading words without expansion ---------------------------------------


def leading_product_word(args: Sequence[NormalWord], target: NormalWord) -> NormalWord:
    """Leading word of ``<args; target>`` computed without expanding it.

    The maximal summands keep every block braced onto a child empty, so the
    leading word is the largest interleaving of the argument list with the
    target's children, read from the right.  The largest interleaving comes
    from the greedy merge that compares remaining suffixes.
    """
    if not args:
        return target
    a = [w.key for w in reversed(args)]
    b = [w.key for w in reversed(target.children)]
    aw = list(reversed(args))
    bw = list(reversed(target.children))
    merged: list[NormalWord] = []
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i:] > b[j:]:
            merged.append(aw[i])
            i += 1
        else:
            merged.append(bw[j])
            j += 1
    merged.extend(aw[i:])
    merged.extend(bw[j:])
    return NormalWord(target.head, reversed(merged))


def substitute_leading(w: NormalWord, images: Mapping[str, NormalWord]) -> NormalWord:
    """Leading word of ``w`` after substituting polynomials with the given leading words."""
    target = images.get(w.head, None)
    if target is None:
        raise KeyError(f"no image for letter {w.head!r}")
    if not w.children:
        return target
    return leading_product_word([substitute_leading(c, images) for c in w.children], target)


# -- homomorphisms ---------------------------------------------------------


@dataclass(frozen=True)
class Homomorphism:
    """Brace homomorphism given by the images of generators."""

    images: Mapping[str, Polynomial]

    @classmethod
    def of(cls, **images) -> "Homomorphism":
        return cls({k: as_polynomial(v) for k, v in images.items()})

    def __call__(self, f) -> Polynomial:
        return apply_hom(self.images, f)


@budgeted
def apply_hom(images: Mapping[str, object] | Homomorphism, f) -> Polynomial:
    """Apply the homomorphism ``letter -> images[letter]`` to ``f``.

    Leaves are replaced bottom-up and every node is re-expanded by the brace
    product.
    """
    if isinstance(images, Homomorphism):
        images = images.images
    imgs = {k: as_polynomial(v) for k, v in images.items()}
    f = as_polynomial(f)
    memo: dict[NormalWord, Polynomial] = {}

    def ev(w: NormalWord) -> Polynomial:
        hit = memo.get(w)
        if hit is not None:
            return hit
        try:
            head = imgs[w.head]
        except KeyError:
            raise KeyError(f"no image for letter {w.head!r}") from None
        out = product([ev(c) for c in w.children], head) if w.children else head
        memo[w] = out
        return out

    acc: dict[NormalWord, Fraction | int] = defaultdict(int)
    for w, c in f.terms.items():
        c = _plain(c)
        for v, k in ev(w).terms.items():
            acc[v] += c * _plain(k)
    return Polynomial._wrap({v: Fraction(k) for v, k in acc.items() if k})
