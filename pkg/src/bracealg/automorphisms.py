"""Endomorphisms of ``Br(x1, x2)`` and their decomposition into elementary ones.

An endomorphism is the pair of images ``(f1, f2)`` of ``x1`` and ``x2``.
Factor lists compose left to right: starting from ``(x1, x2)`` and applying
``apply_elementary`` with each factor in turn rebuilds the endomorphism, so
the list ``[e1, ..., ek]`` stands for the composite ``e1 o e2 o ... o ek``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Polynomial, apply_hom, as_polynomial, budgeted
from .subalgebras import FORMAL, Outcome, PairReport, one_letter_words, reduce_pair, substitute
from .words import NormalWord

X1, X2 = "x1", "x2"
GENERATORS = (X1, X2)


@dataclass(frozen=True)
class Endo2:
    f1: Polynomial
    f2: Polynomial

    @classmethod
    def identity(cls) -> "Endo2":
        return cls(Polynomial.word(X1), Polynomial.word(X2))

    @classmethod
    def of(cls, f1, f2) -> "Endo2":
        return cls(as_polynomial(f1), as_polynomial(f2))

    def __post_init__(self):
        for f in (self.f1, self.f2):
            extra = f.letters() - set(GENERATORS)
            if extra:
                raise ValueError(f"endomorphism images use letters {sorted(extra)}")

    def __getitem__(self, i: int) -> Polynomial:
        return (self.f1, self.f2)[i]

    def images(self) -> dict[str, Polynomial]:
        return {X1: self.f1, X2: self.f2}

    def __call__(self, f) -> Polynomial:
        return apply_hom(self.images(), f)


@dataclass(frozen=True)
class ElementaryAuto:
    """``x_index -> scalar * x_index + shift(x_other)``; ``shift`` is a polynomial in ``y``."""

    index: int
    scalar: Fraction
    shift: Polynomial

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError("index must be 1 or 2")
        object.__setattr__(self, "scalar", Fraction(self.scalar))
        if not self.scalar:
            raise ValueError("an elementary automorphism needs a nonzero scalar")
        shift = as_polynomial(self.shift)
        if not shift.letters() <= {FORMAL}:
            raise ValueError(f"shift must be a polynomial in {FORMAL!r} only")
        object.__setattr__(self, "shift", shift)

    def inverse(self) -> "ElementaryAuto":
        return ElementaryAuto(self.index, 1 / self.scalar, self.shift * (-1 / self.scalar))

    def as_endo(self) -> Endo2:
        return apply_elementary(self, Endo2.identity())

    def __str__(self) -> str:
        from .notation import serialize

        me, other = GENERATORS[self.index - 1], GENERATORS[2 - self.index]
        image = Polynomial.word(me) * self.scalar + apply_hom({FORMAL: Polynomial.word(other)}, self.shift)
        return f"{me} -> {serialize(image)}"


def apply_elementary(e: ElementaryAuto, phi: Endo2) -> Endo2:
    """Return ``phi o e``: the indexed image becomes ``scalar*f_i + shift(f_other)``."""
    i = e.index - 1
    new = phi[i] * e.scalar + apply_hom({FORMAL: phi[1 - i]}, e.shift)
    return Endo2(new, phi.f2) if i == 0 else Endo2(phi.f1, new)


@budgeted
def compose(phi: Endo2, psi: Endo2) -> Endo2:
    """``phi o psi``: first ``psi``, then ``phi`` applied to its images."""
    images = phi.images()
    return Endo2(apply_hom(images, psi.f1), apply_hom(images, psi.f2))


def compose_factors(factors: Sequence[ElementaryAuto]) -> Endo2:
    phi = Endo2.identity()
    for e in factors:
        phi = apply_elementary(e, phi)
    return phi


@dataclass(frozen=True)
class Decomposition:
    tame: bool
    factors: tuple[ElementaryAuto, ...] = ()
    report: PairReport | None = None

    def __bool__(self) -> bool:
        return self.tame


def _linear_coeffs(f: Polynomial) -> tuple[Fraction, Fraction] | None:
    a = b = Fraction(0)
    for w, c in f.terms.items():
        if w.degree != 1:
            return None
        if w.head == X1:
            a = c
        else:
            b = c
    return a, b


def _linear_elimination(g1: Polynomial, g2: Polynomial) -> list[ElementaryAuto] | None:
    """Elementary factors ``L`` with ``(g1, g2) o L1 o ... o Lk = (x1, x2)``."""
    r1, r2 = _linear_coeffs(g1), _linear_coeffs(g2)
    if r1 is None or r2 is None:
        return None
    (a, b), (c, d) = r1, r2
    if a * d - b * c == 0:
        return None
    y = Polynomial.word(FORMAL)
    out = []
    if a == 0:
        # g1 += g2 so that g1 involves x1
        out.append(ElementaryAuto(1, 1, y))
        a, b = a + c, b + d
    det = a * d - b * c
    if (c, d) != (0, 1):
        # g2 := (a/det) g2 - (c/det) g1 = x2
        out.append(ElementaryAuto(2, a / det, y * (-c / det)))
    if (a, b) != (1, 0):
        # g1 := g1/a - (b/a) x2 = x1
        out.append(ElementaryAuto(1, 1 / a, y * (-b / a) if b else Polynomial.zero()))
    return out


@budgeted
def decompose_tame(phi: Endo2) -> Decomposition:
    """Factor ``phi`` into elementary automorphisms, or report it is not an automorphism."""
    report = reduce_pair(phi.f1, phi.f2)
    if report.outcome is not Outcome.FREE_RANK2:
        return Decomposition(False, report=report)
    g1, g2 = report.pair
    linear = _linear_elimination(g1, g2)
    if linear is None:
        return Decomposition(False, report=report)
    # phi o E1 o ... o Er o L1 o ... o Ls = id, with Ej undoing reduction step j
    forward = []
    for s in report.steps:
        shift = Polynomial.word(s.q) * (-s.coefficient)
        forward.append(ElementaryAuto(s.which + 1, 1, shift))
    forward.extend(linear)
    return Decomposition(True, tuple(e.inverse() for e in reversed(forward)), report)


def _random_shift(rng: random.Random, max_deg: int) -> Polynomial:
    deg = rng.randint(1, max_deg)
    terms = {}
    for _ in range(rng.randint(1, 2)):
        d = rng.randint(1, deg)
        q = rng.choice(one_letter_words(d))
        terms[q] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.choice([1, 1, 2]))
    # make sure the top degree is present
    top = rng.choice(one_letter_words(deg))
    terms[top] = Fraction(rng.choice([-2, -1, 1, 2]))
    return Polynomial(terms)


def random_elementary(rng: random.Random, max_deg: int, index: int | None = None) -> ElementaryAuto:
    index = index if index is not None else rng.choice((1, 2))
    scalar = Fraction(rng.choice([-2, -1, 1, 1, 1, 2, 3]), rng.choice([1, 1, 2]))
    return ElementaryAuto(index, scalar, _random_shift(rng, max_deg))


def random_tame(
    seed: int, steps: int, max_deg: int, max_total_degree: int | None = None
) -> tuple[Endo2, list[ElementaryAuto]]:
    """A seeded composite of ``steps`` random elementary automorphisms.

    ``max_total_degree`` caps the degree of the composite: a factor whose
    shift would push either image past the cap is redrawn with a smaller
    shift degree.
    """
    rng = random.Random(seed)
    phi = Endo2.identity()
    factors: list[ElementaryAuto] = []
    for _ in range(steps):
        e = random_elementary(rng, max_deg)
        if max_total_degree is not None:
            other = phi[2 - e.index]
            room = max(1, max_total_degree // other.degree)
            if e.shift.degree > room:
                e = random_elementary(rng, min(room, max_deg), e.index)
        phi = apply_elementary(e, phi)
        factors.append(e)
    return phi, factors
