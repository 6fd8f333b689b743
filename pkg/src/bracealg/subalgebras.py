"""Freeness of subalgebras generated by one or two elements.

A pair ``(f1, f2)`` is reduced by subtracting one-variable brace words in one
generator from the other until no leading word can be matched.  The surviving
pair (or single generator) freely generates the same subalgebra.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, apply_hom, as_polynomial, budgeted, substitute_leading
from .words import MARK, NormalWord, enumerate_normal

FORMAL = MARK


class Outcome(enum.Enum):
    FREE_RANK2 = "FREE_RANK2"
    FREE_RANK1 = "FREE_RANK1"
    ZERO_PAIR = "ZERO_PAIR"


@dataclass(frozen=True)
class ReductionStep:
    """``f[which] -= coefficient * q(f[other])``; ``which`` is 0 or 1."""

    which: int
    coefficient: Fraction
    q: NormalWord

    @property
    def other(self) -> int:
        return 1 - self.which


@dataclass(frozen=True)
class PairReport:
    steps: tuple[ReductionStep, ...]
    outcome: Outcome
    pair: tuple[Polynomial, Polynomial]

    @property
    def generator(self) -> Polynomial:
        """The free generator of a rank-one outcome."""
        if self.outcome is not Outcome.FREE_RANK1:
            raise ValueError(f"outcome is {self.outcome.value}")
        return self.pair[0] if self.pair[0] else self.pair[1]

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return tuple(p for p in self.pair if p)


def substitute(q: NormalWord, f: Polynomial) -> Polynomial:
    """``q(f)`` for a word ``q`` in the formal letter."""
    return apply_hom({FORMAL: f}, Polynomial.word(q))


def one_letter_words(deg: int) -> list[NormalWord]:
    return enumerate_normal([FORMAL], deg)


def find_q_reducer(target, base) -> NormalWord | None:
    """First one-letter word ``q`` with ``lead(q(base)) == lead(target)``, if any."""
    target = as_polynomial(target)
    base = as_polynomial(base)
    if not target or not base:
        raise ValueError("reducer search needs nonzero polynomials")
    k, rem = divmod(target.degree, base.degree)
    if rem:
        return None
    want = target.lead_word
    images = {FORMAL: base.lead_word}
    for q in one_letter_words(k):
        if substitute_leading(q, images) == want:
            return q
    return None


def apply_step(pair: tuple[Polynomial, Polynomial], step: ReductionStep) -> tuple[Polynomial, Polynomial]:
    out = list(pair)
    out[step.which] = pair[step.which] - substitute(step.q, pair[step.other]) * step.coefficient
    return out[0], out[1]


def undo_step(pair: tuple[Polynomial, Polynomial], step: ReductionStep) -> tuple[Polynomial, Polynomial]:
    out = list(pair)
    out[step.which] = pair[step.which] + substitute(step.q, pair[step.other]) * step.coefficient
    return out[0], out[1]


def replay(f1, f2, steps) -> tuple[Polynomial, Polynomial]:
    pair = (as_polynomial(f1), as_polynomial(f2))
    for s in steps:
        pair = apply_step(pair, s)
    return pair


@budgeted
def reduce_pair(f1, f2, max_steps: int | None = None) -> PairReport:
    """Reduce ``(f1, f2)`` to a free generating set of the same subalgebra."""
    pair = (as_polynomial(f1), as_polynomial(f2))
    steps: list[ReductionStep] = []
    while True:
        a, b = pair
        if not a and not b:
            return PairReport(tuple(steps), Outcome.ZERO_PAIR, pair)
        if not a or not b:
            return PairReport(tuple(steps), Outcome.FREE_RANK1, pair)
        order = (1, 0) if b.lead_word > a.lead_word else (0, 1)
        for which in order:
            target, base = pair[which], pair[1 - which]
            q = find_q_reducer(target, base)
            if q is not None:
                break
        else:
            return PairReport(tuple(steps), Outcome.FREE_RANK2, pair)
        qb = substitute(q, base)
        step = ReductionStep(which, target.lead_coeff / qb.lead_coeff, q)
        new = list(pair)
        new[which] = target - qb * step.coefficient
        pair = (new[0], new[1])
        steps.append(step)
        if max_steps is not None and len(steps) > max_steps:
            raise RuntimeError(f"pair reduction exceeded {max_steps} steps")


def is_algebraically_independent(f1, f2) -> bool:
    f1 = as_polynomial(f1)
    f2 = as_polynomial(f2)
    if not f1 or not f2:
        raise ValueError("independence is only asked of nonzero elements")
    return reduce_pair(f1, f2).outcome is Outcome.FREE_RANK2
