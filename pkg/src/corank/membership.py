"""Degree-capped search for ideal membership certificates.

Deciding membership in a finitely generated ideal of a free algebra is not
possible in general, so the search here is a semi-procedure: it looks for
an expression ``target = sum(c * l * g * r)`` whose multiplier words ``l``
and ``r`` have length at most ``deg_cap``.  The candidate products span a
finite module and the question becomes one exact linear solve.  ``None``
means "no certificate within the cap", never "not a member".

When every generator is homogeneous for the letter-content grading (or, failing
that, for ordinary degree) the ideal is graded and only multiplier pairs of
matching grade can contribute; the search then runs one grade at a time,
which is what keeps the semigroup-ring regressions tractable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .free_algebra import Polynomial, enumerate_words, word_key
from .linalg import span_solve

SIDES = ("right", "left", "two_sided")


class SearchTooLarge(RuntimeError):
    """The capped search space exceeds the configured row budget."""


@dataclass(frozen=True)
class Summand:
    left: Polynomial
    gen_index: int
    right: Polynomial
    scalar: object


@dataclass(frozen=True)
class MembershipCertificate:
    summands: tuple
    target: Polynomial

    def evaluate(self, gens: Sequence[Polynomial]) -> Polynomial:
        """Re-expand the certificate in the generators' algebra."""
        t = self.target
        acc = Polynomial.zero(t.ring, t.alphabet, unital=True)
        for s in self.summands:
            acc = acc + (s.left * gens[s.gen_index].embed() * s.right).scale(s.scalar)
        return acc if t.unital else acc.strip_unit()

    def check(self, gens: Sequence[Polynomial]) -> bool:
        return self.evaluate(gens) == self.target


def _grading(gens: Sequence[Polynomial], n: int):
    """A grading making every generator homogeneous, or ``None``."""
    def content(w):
        c = [0] * n
        for i in w:
            c[i] += 1
        return tuple(c)

    for grade in (content, len):
        if all(len({grade(w) for w in g.terms}) <= 1 for g in gens):
            return grade
    return None


def _words_of_content(c: tuple) -> list:
    """All distinct words with letter multiplicities ``c``."""
    letters = [i for i, k in enumerate(c) for _ in range(k)]
    return sorted(set(itertools.permutations(letters)), key=word_key)


def _words_below(n, cap, bound, grade_kind):
    """Words of length <= cap whose grade does not exceed ``bound``."""
    out = []
    if grade_kind == "len":
        return enumerate_words(n, 0, min(cap, bound))
    for w in enumerate_words(n, 0, min(cap, sum(bound))):
        c = [0] * n
        for i in w:
            c[i] += 1
        if all(a <= b for a, b in zip(c, bound)):
            out.append(w)
    return out


def candidate_triples(gens, target, side, deg_cap, max_rows=250_000):
    """Multiplier triples ``(left word, gen index, right word)`` worth trying."""
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    n = len(target.alphabet)
    lefts_allowed = side in ("left", "two_sided")
    rights_allowed = side in ("right", "two_sided")
    grade = _grading(gens, n)
    triples = []

    def budget():
        if len(triples) > max_rows:
            raise SearchTooLarge(f"more than {max_rows} candidate products at cap {deg_cap}")

    if grade is None:
        words = enumerate_words(n, 0, deg_cap)
        lefts = words if lefts_allowed else [()]
        rights = words if rights_allowed else [()]
        for gi in range(len(gens)):
            if gens[gi].is_zero():
                continue
            for l in lefts:
                for r in rights:
                    triples.append((l, gi, r))
            budget()
        return triples

    kind = "len" if grade is len else "content"
    target_grades = sorted({grade(w) for w in target.terms})
    seen = set()
    for tg in target_grades:
        for gi, g in enumerate(gens):
            if g.is_zero():
                continue
            gg = grade(next(iter(g.terms)))
            if kind == "len":
                rest = tg - gg
                if rest < 0:
                    continue
            else:
                rest = tuple(a - b for a, b in zip(tg, gg))
                if any(x < 0 for x in rest):
                    continue
            lefts = _words_below(n, deg_cap, rest, kind) if lefts_allowed else [()]
            for l in lefts:
                if kind == "len":
                    need = rest - len(l)
                    if need > deg_cap or (need and not rights_allowed):
                        continue
                    rights = list(itertools.product(range(n), repeat=need))
                else:
                    lc = [0] * n
                    for i in l:
                        lc[i] += 1
                    need = tuple(a - b for a, b in zip(rest, lc))
                    if sum(need) > deg_cap or (sum(need) and not rights_allowed):
                        continue
                    rights = _words_of_content(need)
                for r in rights:
                    key = (l, gi, r)
                    if key not in seen:
                        seen.add(key)
                        triples.append(key)
            budget()
    return triples


def ideal_membership_bounded(
    gens: Sequence[Polynomial],
    target: Polynomial,
    side: str = "two_sided",
    deg_cap: int = 2,
    max_rows: int = 250_000,
) -> MembershipCertificate | None:
    """Search for a membership certificate with multiplier words of length <= ``deg_cap``.

    ``side="right"`` looks in the right ideal ``sum(g * K<X>^1)``,
    ``"left"`` in the left ideal and ``"two_sided"`` in the two-sided ideal.
    """
    ring, alphabet = target.ring, target.alphabet
    for g in gens:
        if g.alphabet != alphabet or g.ring != ring:
            raise TypeError("generators and target must share alphabet and ring")
    if target.is_zero():
        return MembershipCertificate((), target)
    triples = candidate_triples(gens, target, side, deg_cap, max_rows)
    rows = []
    for l, gi, r in triples:
        row = {}
        for w, c in gens[gi].terms.items():
            row[l + w + r] = c
        rows.append(row)
    sol = span_solve(rows, dict(target.terms), ring, key=word_key)
    if sol is None:
        return None
    summands = []
    for (l, gi, r), c in zip(triples, sol):
        if c != 0:
            summands.append(
                Summand(
                    Polynomial.monomial(ring, alphabet, l, unital=True),
                    gi,
                    Polynomial.monomial(ring, alphabet, r, unital=True),
                    c,
                )
            )
    return MembershipCertificate(tuple(summands), target)
