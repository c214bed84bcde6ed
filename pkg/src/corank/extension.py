"""Ideal extensions and restrictions around a presented right ideal.

* :func:`restrict_ideal_generators` turns a finite set of ideal generators
  of ``K<X>`` lying in ``R`` into generators of the same ideal *as an ideal
  of R*, written over the presentation's alphabet ``Y``.
* :func:`present_quotient_subalgebra` glues that onto the presentation of a
  two-sided ``R`` to present ``R / Id(i_gens)``.
* :func:`compose_extension` assembles generators of ``I`` from a presentation
  of ``B = R/I`` and witnesses ``p[x,y]``, ``p[y,x]`` found by capped search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .free_algebra import Alphabet, AlgebraHom, Polynomial, apply_hom, enumerate_words, parse_poly, word_key
from .linalg import span_solve
from .membership import MembershipCertificate, SearchTooLarge, Summand, ideal_membership_bounded
from .presentation import Presentation, build_symbol_tables, compute_U, phibar, present_right_ideal, psibar_eval
from .quotient_rep import CyclicModuleRep, IdealClass, bounded_member_basis, is_member, validate_rep


@dataclass(frozen=True)
class Restriction:
    """Generators of ``I`` as an ideal of ``R``.

    ``generators`` are polynomials over ``Y``; ``witnesses`` their images in
    ``K<X>``; ``certificates[i]`` shows ``witnesses[i]`` in the ideal of
    ``K<X>`` generated by the input; ``pruned`` lists input products
    certified redundant, each with the indices of the kept elements used.
    """

    generators: tuple
    witnesses: tuple
    certificates: tuple
    pruned: tuple


def _r_multipliers(rep, cap):
    ring, X = rep.ring, rep.alphabet
    words, vectors = bounded_member_basis(rep, cap)
    out = []
    for v in vectors:
        out.append(Polynomial(ring, X, {w: c for w, c in zip(words, v) if c != 0}))
    return out


def _in_r_ideal(kept, target, mults, ring):
    """Is ``target`` in ``span(kept) + M*kept + kept*M + M*kept*M`` (degree-bounded)?"""
    d = target.degree()
    left = [None] + mults
    rows = []
    for g in kept:
        for a in left:
            ga = g if a is None else a * g
            if ga.degree() > d:
                continue
            for b in left:
                p = ga if b is None else ga * b
                if p.degree() <= d and not p.is_zero():
                    rows.append(dict(p.terms))
    if not rows:
        return False
    return span_solve(rows, dict(target.terms), ring, key=word_key) is not None


def restrict_ideal_generators(
    rep: CyclicModuleRep,
    pres: Presentation,
    i_gens: Sequence[Polynomial],
    deg_cap: int = 4,
    u_vectors: Sequence | None = None,
) -> Restriction | None:
    """Generators over ``Y`` of ``Id_{K<X>}(i_gens)`` viewed as an ideal of ``R``.

    Every product ``u*g*v`` with ``u, v`` in ``{1} ∪ {r_b}`` is a candidate;
    together they generate the ideal over ``R`` because ``K<X>^1`` is ``R``
    plus the span of those multipliers.  A candidate already inside the
    ``R``-ideal of the earlier ones is dropped when a capped search (members
    of ``R`` up to degree ``deg_cap`` as multipliers) certifies it.
    """
    if deg_cap < 0:
        raise ValueError("deg_cap must be nonnegative")
    ring, X = rep.ring, rep.alphabet
    for g in i_gens:
        if g.alphabet != X or g.ring != ring:
            raise TypeError("ideal generators must be over the representation's alphabet and ring")
        if not is_member(rep, g):
            raise ValueError(f"ideal generator {g} is not a member of R")
    tables = build_symbol_tables(rep)
    udata = compute_U(rep, tables, u_vectors)
    if udata.Y.names != pres.alphabet.names:
        raise ValueError("presentation does not match the representation's generator alphabet")
    one = Polynomial.one(ring, X)
    multipliers = [("1", one)] + [(b, rep.representatives[b].embed()) for b in rep.labels[1:]]
    mults = _r_multipliers(rep, deg_cap)
    kept, certs, pruned = [], [], []
    seen = set()
    for gi, g in enumerate(i_gens):
        for (ul, u), (vl, v) in itertools.product(multipliers, repeat=2):
            c = (u * g.embed() * v).strip_unit()
            if c.is_zero() or c in seen:
                continue
            seen.add(c)
            if kept and _in_r_ideal(kept, c, mults, ring):
                pruned.append((str(c), ul, gi, vl))
                continue
            kept.append(c)
            certs.append(MembershipCertificate((Summand(u, gi, v, ring.one),), c))
    generators = tuple(phibar(udata, c) for c in kept)
    for y, c in zip(generators, kept):
        if psibar_eval(udata, y) != c:
            raise AssertionError("normal form does not evaluate back to the candidate")
    return Restriction(generators, tuple(kept), tuple(certs), tuple(pruned))


def present_quotient_subalgebra(
    rep: CyclicModuleRep,
    i_gens: Sequence[Polynomial],
    deg_cap: int = 4,
    simplify: bool = False,
) -> Presentation | None:
    """Presentation of ``R / Id(i_gens)`` for a two-sided ideal ``R``.

    The relations are those of ``R`` followed by the restricted generators;
    the witnesses stay in ``K<X>`` and are meant modulo ``Id(i_gens)``.
    """
    if validate_rep(rep) < IdealClass.TWO_SIDED_IDEAL:
        raise ValueError("the quotient construction needs a two-sided ideal")
    pres = present_right_ideal(rep)
    if not i_gens:
        return present_right_ideal(rep, simplify=True) if simplify else pres
    res = restrict_ideal_generators(rep, pres, i_gens, deg_cap)
    if res is None:
        return None
    out = Presentation(
        pres.alphabet,
        pres.witnesses,
        pres.relations + res.generators,
        tuple(pres.sections) + (("G", len(res.generators)),),
    )
    if simplify:
        from .presentation import simplify_presentation

        out = simplify_presentation(out)
    return out


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Extension:
    """Generators of ``I`` and the presentation ``<X | I-generators>`` of ``A``.

    ``witnesses`` maps ``(x, y, side)`` to the ``Y``-polynomial ``p`` found
    for ``x*ybar - pbar`` (side ``"left"``) or ``ybar*x - pbar`` (``"right"``).
    """

    i_generators: tuple
    presentation: Presentation
    witnesses: dict


def _search_witness(target, y_alphabet, y_images, ideal_gens, cap, ring, X):
    """``p`` over ``Y`` with ``target - pbar`` in ``Id(ideal_gens)``; ``None`` if not within ``cap``."""
    zero = Polynomial.zero(ring, y_alphabet)
    live = [g for g in ideal_gens if not g.is_zero()]
    if live:
        try:
            if ideal_membership_bounded(live, target, "two_sided", cap) is not None:
                return zero
        except SearchTooLarge:
            return None
    elif target.is_zero():
        return zero
    words = enumerate_words(len(X), 0, cap)
    rows, tags = [], []
    for gi, g in enumerate(live):
        for l in words:
            for r in words:
                rows.append({l + w + r: c for w, c in g.terms.items()})
                tags.append(None)
    hom = AlgebraHom(y_alphabet, X, list(y_images), ring)
    for yw in enumerate_words(len(y_alphabet), 1, cap):
        img = apply_hom(hom, Polynomial.monomial(ring, y_alphabet, yw))
        if not img.is_zero():
            rows.append(dict(img.terms))
            tags.append(yw)
    if not rows:
        return None
    sol = span_solve(rows, dict(target.terms), ring, key=word_key)
    if sol is None:
        return None
    return Polynomial(ring, y_alphabet, {yw: c for yw, c in zip(tags, sol) if yw is not None and c != 0})


def compose_extension(
    xalpha: Alphabet,
    r_gens: Sequence[tuple],
    b_relations: Sequence,
    deg_cap: int = 3,
    known_relations: Sequence[Polynomial] = (),
    ring=None,
) -> Extension | None:
    """Generators of ``I`` from ``B = R/I`` presented as ``<Y | W>`` with ``R = Id(Ybar)``.

    For every ``x`` and ``y`` a polynomial ``p`` over ``Y`` is sought with
    ``x*ybar - pbar`` (and ``ybar*x - pbar``) in the ideal generated by
    ``Wbar`` and ``known_relations`` (polynomials already known to lie in
    ``I``), using Y-words and multiplier words of length at most ``deg_cap``.
    The result is ``Wbar`` followed by those differences, zeros dropped;
    ``None`` signals an exhausted cap.
    """
    names = [n for n, _ in r_gens]
    images = [w for _, w in r_gens]
    if ring is None:
        if images:
            ring = images[0].ring
        elif known_relations:
            ring = known_relations[0].ring
        else:
            raise ValueError("ring cannot be inferred from empty inputs")
    y_alphabet = Alphabet(names)
    rels = [parse_poly(r, y_alphabet, ring) if isinstance(r, str) else r for r in b_relations]
    hom = AlgebraHom(y_alphabet, xalpha, images, ring)
    w_bar = [apply_hom(hom, r) for r in rels]
    ideal_gens = w_bar + list(known_relations)
    found = {}
    extra = []
    for xi, x in enumerate(xalpha.names):
        xv = Polynomial.variable(ring, xalpha, x)
        for yi, y in enumerate(names):
            for side, target in (("left", xv * images[yi]), ("right", images[yi] * xv)):
                p = _search_witness(target, y_alphabet, images, ideal_gens, deg_cap, ring, xalpha)
                if p is None:
                    return None
                found[(x, y, side)] = p
                extra.append(target - apply_hom(hom, p))
    i_gens = tuple(g for g in w_bar + extra if not g.is_zero())
    variables = tuple(Polynomial.variable(ring, xalpha, x) for x in xalpha.names)
    pres = Presentation(xalpha, variables, i_gens, (("W", len(w_bar)), ("closure", len(extra))))
    return Extension(i_gens, pres, found)
