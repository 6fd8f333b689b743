"""Ideals generated by a single relator and the membership decision for them.

The ideal ``Id(f)`` of the free brace algebra is spanned by the substitutions
``y -> f`` into normal words that contain the marker ``y`` exactly once.  An
element is decided by repeatedly cancelling its leading word against such a
substitution; if no substitution shares the leading word the element is not
in the ideal.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import Polynomial, apply_hom, as_polynomial, budgeted, substitute_leading
from .words import MARK, NormalWord, alphabet, enumerate_marked


@dataclass(frozen=True)
class Certificate:
    """``h = sum(c * psi(u) for c, u in steps)`` against the monic relator."""

    steps: tuple[tuple[Fraction, NormalWord], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


@dataclass(frozen=True)
class Membership:
    member: bool
    certificate: Certificate | None = None

    def __bool__(self) -> bool:
        return self.member


class OneRelatorIdeal:
    """The ideal generated by one nonzero relator in ``Br(letters)``.

    The relator is kept monic; ``scale`` records the original leading
    coefficient.  Substitutions are cached per degree and shared between
    threads under a lock.
    """

    def __init__(self, relator, letters: Sequence[str] | int | None = None, prefilter: bool = False):
        f = as_polynomial(relator)
        if not f:
            raise ValueError("the relator must be nonzero")
        base = alphabet(letters) if letters is not None else alphabet(f.letters())
        if not f.letters() <= set(base):
            raise ValueError("relator uses letters outside the alphabet")
        if MARK in base:
            raise ValueError(f"the marker letter {MARK!r} cannot be a generator")
        self.letters = base
        self.scale = f.lead_coeff
        self.relator = f.monic()
        self.degree = self.relator.degree
        self.prefilter = prefilter
        self.enumerated_degrees = 0
        self._images = {x: Polynomial.word(x) for x in base}
        self._images[MARK] = self.relator
        self._lead_images = {x: NormalWord(x) for x in base}
        self._lead_images[MARK] = self.relator.lead_word
        self._cache: dict[int, list[tuple[NormalWord, Polynomial]]] = {}
        self._index: dict[int, dict[NormalWord, NormalWord]] = {}
        self._psi: dict[NormalWord, Polynomial] = {}
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"OneRelatorIdeal({self.relator!r}, letters={self.letters})"

    def psi(self, u: NormalWord) -> Polynomial:
        """Substitute the relator for the marker in ``u``."""
        with self._lock:
            hit = self._psi.get(u)
            if hit is None:
                hit = apply_hom(self._images, Polynomial.word(u))
                self._psi[u] = hit
            return hit

    def marked_degree(self, d: int) -> int:
        return d - self.degree + 1

    def b_elements(self, d: int) -> list[tuple[NormalWord, Polynomial]]:
        """All ``(u, psi(u))`` whose substitution has degree ``d``."""
        k = self.marked_degree(d)
        if k < 1:
            return []
        with self._lock:
            if d not in self._cache:
                self._cache[d] = [(u, self.psi(u)) for u in self._marked(k)]
            return self._cache[d]

    def _marked(self, k: int) -> list[NormalWord]:
        self.enumerated_degrees += 1
        return enumerate_marked(self.letters, k)

    def candidate(self, w: NormalWord) -> NormalWord | None:
        """The first marked word (in enumeration order) whose substitution leads with ``w``."""
        d = w.degree
        if self.marked_degree(d) < 1:
            return None
        with self._lock:
            index = self._index.get(d)
            if index is None:
                index = {}
                if self.prefilter:
                    for u in self._marked(self.marked_degree(d)):
                        index.setdefault(substitute_leading(u, self._lead_images), u)
                else:
                    for u, g in self.b_elements(d):
                        index.setdefault(g.lead_word, u)
                self._index[d] = index
            return index.get(w)

    @budgeted
    def decide(self, h) -> Membership:
        h = as_polynomial(h)
        extra = h.letters() - set(self.letters)
        if extra:
            raise ValueError(f"element uses letters outside the alphabet: {sorted(extra)}")
        steps: list[tuple[Fraction, NormalWord]] = []
        while h:
            if h.degree < self.degree:
                return Membership(False)
            u = self.candidate(h.lead_word)
            if u is None:
                return Membership(False)
            g = self.psi(u)
            c = h.lead_coeff / g.lead_coeff
            h = h - g * c
            steps.append((c, u))
        return Membership(True, Certificate(tuple(steps)))

    def combine(self, cert: Certificate | Iterable[tuple[Fraction, NormalWord]]) -> Polynomial:
        acc = Polynomial.zero()
        for c, u in cert:
            acc = acc + self.psi(u) * c
        return acc

    @budgeted
    def verify(self, h, cert: Certificate | Iterable[tuple[Fraction, NormalWord]]) -> bool:
        """Recompute the certificate's combination from scratch and compare with ``h``."""
        steps = list(cert)
        for _, u in steps:
            if u.count(MARK) != 1 or not u.letters() <= set(self.letters) | {MARK}:
                return False
        images = dict(self._images)
        acc = Polynomial.zero()
        for c, u in steps:
            acc = acc + apply_hom(images, Polynomial.word(u)) * c
        return acc == as_polynomial(h)


def b_elements(ideal: OneRelatorIdeal, d: int) -> list[tuple[NormalWord, Polynomial]]:
    return ideal.b_elements(d)


def decide_membership(ideal: OneRelatorIdeal, h) -> Membership:
    return ideal.decide(h)


def verify_certificate(ideal: OneRelatorIdeal, h, cert) -> bool:
    return ideal.verify(h, cert)


def certificate_leads_decrease(ideal: OneRelatorIdeal, cert: Certificate) -> bool:
    leads = [ideal.psi(u).lead_word for _, u in cert]
    return all(a > b for a, b in zip(leads, leads[1:]))


def freiheitssatz_probe(f, h, letters: Sequence[str] | int | None = None) -> bool:
    """Check that ``h``, free of the top letter, is not in the ideal of ``f``.

    ``f`` must involve the largest letter of the alphabet and ``h`` must be a
    nonzero element that avoids it.  Returns True iff ``h`` is not a member,
    which the free-subalgebra theorem guarantees.
    """
    f = as_polynomial(f)
    h = as_polynomial(h)
    if not f:
        raise ValueError("relator must be nonzero")
    if not h:
        raise ValueError("probe element must be nonzero")
    base = alphabet(letters) if letters is not None else alphabet(f.letters() | h.letters())
    top = base[-1]
    if top not in f.letters():
        raise ValueError(f"relator does not involve the top letter {top!r}")
    if top in h.letters():
        raise ValueError(f"probe element involves the top letter {top!r}")
    ideal = OneRelatorIdeal(f, base)
    return not ideal.decide(h).member
