"""Generators and defining relations for right ideals of finite co-rank.

The construction works with three derived alphabets.  ``T`` holds the
symbols ``t[a,x,b]`` for ``x`` in ``X`` and ``a, b`` ranging over the basis
labels (``1`` included); ``V`` holds ``v[b]``; ``U`` holds fresh symbols
``u[i]`` naming a generating set of the linear members of ``R`` in
``span(V)``.  The presentation lives over ``Y = T + U``.

Elements of ``K<T> + span(V)`` are :class:`MixedElement` values; the right
action ``*`` of ``K<X>^1`` on them, the section ``rho`` and the derived action
``⋆`` on ``K<T> + span(U)`` all follow the rewriting rules documented on the
individual functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .free_algebra import Alphabet, AlgebraHom, Polynomial, apply_hom, enumerate_words, word_key
from .linalg import LinearSolver, SparseEchelon, Submodule, is_zero_vector, kernel
from .membership import ideal_membership_bounded, MembershipCertificate, Summand
from .quotient_rep import (
    CyclicModuleRep,
    IdealClass,
    InvalidRepresentation,
    bounded_member_basis,
    bounded_member_lattice,
    coset_vector,
    is_member,
    random_member,
    validate_rep,
)


# ---------------------------------------------------------------------------
# Symbol tables and the action *
# ---------------------------------------------------------------------------

class SymbolTables:
    """The symbols ``T`` and ``V`` of a cyclic module representation and the map ``psi``."""

    def __init__(self, rep: CyclicModuleRep):
        cls = validate_rep(rep)
        if cls < IdealClass.RIGHT_IDEAL:
            raise InvalidRepresentation(["representation does not define a right ideal"])
        self.rep = rep
        ring, X = rep.ring, rep.alphabet
        self.ring = ring
        labels = rep.labels
        self.labels = labels
        n, m = len(X), len(labels)
        self.t_info = []
        self._t_index = {}
        names = []
        for a in range(m):
            for x in range(n):
                for b in range(m):
                    self._t_index[(a, x, b)] = len(names)
                    self.t_info.append((a, x, b))
                    names.append(f"t[{labels[a]},{X.names[x]},{labels[b]}]")
        self.T = Alphabet(names)
        self.V = Alphabet([f"v[{b}]" for b in labels])
        self.Z = self.T + self.V

        reps = [Polynomial.one(ring, X)] + [rep.representatives[b].embed() for b in labels[1:]]
        self.reps = reps
        # coset[b][x] = <r_b x>, a vector over the non-identity labels
        self.coset = []
        for b in range(m):
            row = []
            for x in range(n):
                rbx = reps[b] * Polynomial.variable(ring, X, X.names[x], unital=True)
                row.append(coset_vector(rep, rbx.strip_unit()))
            self.coset.append(row)
        self.psi_t = []
        for a, x, b in self.t_info:
            rax = reps[a] * Polynomial.variable(ring, X, X.names[x], unital=True)
            acc = rax
            for c, coeff in enumerate(self.coset[a][x], start=1):
                if coeff != 0:
                    acc = acc - reps[c].scale(coeff)
            self.psi_t.append(acc * reps[b])
        self.psi_v = reps
        self.psi_images = {name: img for name, img in zip(self.Z.names, self.psi_t + self.psi_v)}
        self._phi_cache: dict = {(): MixedElement(self.zero_t(), self.v_unit(0))}
        self._psi_cache: dict = {}

    @property
    def k(self) -> int:
        return len(self.labels) - 1

    def t_symbol(self, a: int, x: int, b: int) -> int:
        return self._t_index[(a, x, b)]

    def zero_t(self) -> Polynomial:
        return Polynomial.zero(self.ring, self.T)

    def v_unit(self, b: int) -> tuple:
        ring = self.ring
        return tuple(ring.one if i == b else ring.zero for i in range(self.k + 1))

    def zero(self) -> "MixedElement":
        return MixedElement(self.zero_t(), (self.ring.zero,) * (self.k + 1))

    def v(self, label: str) -> "MixedElement":
        return MixedElement(self.zero_t(), self.v_unit(self.labels.index(label)))

    def t(self, a: str, x: str, b: str) -> "MixedElement":
        idx = self.t_symbol(self.labels.index(a), self.rep.alphabet.index(x), self.labels.index(b))
        return MixedElement(Polynomial.monomial(self.ring, self.T, (idx,)), (self.ring.zero,) * (self.k + 1))

    # -- the action * ----------------------------------------------------
    def act_letter(self, s: "MixedElement", x: int) -> "MixedElement":
        """``s * x`` for a single variable ``x``.

        ``(r t[a,y,b]) * x = r (t[a,y,1] t[b,x,1] + sum_c <r_b x>_c t[a,y,c])``
        and ``v[b] * x = t[b,x,1] + sum_c <r_b x>_c v[c]``.
        """
        ring = self.ring
        out: dict = {}

        def add(w, c):
            s_ = ring.add(out.get(w, ring.zero), c)
            if s_ == 0:
                out.pop(w, None)
            else:
                out[w] = s_

        for w, c in s.t_part.terms.items():
            a, y, b = self.t_info[w[-1]]
            pre = w[:-1]
            add(pre + (self._t_index[(a, y, 0)], self._t_index[(b, x, 0)]), c)
            for ci, coeff in enumerate(self.coset[b][x], start=1):
                if coeff != 0:
                    add(pre + (self._t_index[(a, y, ci)],), ring.mul(c, coeff))
        v = [ring.zero] * (self.k + 1)
        for b, c in enumerate(s.v_part):
            if c == 0:
                continue
            add((self._t_index[(b, x, 0)],), c)
            for ci, coeff in enumerate(self.coset[b][x], start=1):
                if coeff != 0:
                    v[ci] = ring.add(v[ci], ring.mul(c, coeff))
        return MixedElement(Polynomial._raw(ring, self.T, out, False), tuple(v))

    def phi_word(self, w) -> "MixedElement":
        cache = self._phi_cache
        r = cache.get(w)
        if r is None:
            r = self.act_letter(self.phi_word(w[:-1]), w[-1])
            cache[w] = r
        return r

    def psi_t_word(self, w) -> Polynomial:
        cache = self._psi_cache
        r = cache.get(w)
        if r is None:
            if len(w) == 1:
                r = self.psi_t[w[0]]
            else:
                r = self.psi_t_word(w[:-1]) * self.psi_t[w[-1]]
            cache[w] = r
        return r


@dataclass(frozen=True)
class MixedElement:
    """An element of ``K<T> + span(V)``."""

    t_part: Polynomial
    v_part: tuple

    def __add__(self, other):
        ring = self.t_part.ring
        return MixedElement(self.t_part + other.t_part, tuple(ring.add(a, b) for a, b in zip(self.v_part, other.v_part)))

    def __sub__(self, other):
        ring = self.t_part.ring
        return MixedElement(self.t_part - other.t_part, tuple(ring.sub(a, b) for a, b in zip(self.v_part, other.v_part)))

    def scale(self, c):
        ring = self.t_part.ring
        c = ring(c)
        return MixedElement(self.t_part.scale(c), tuple(ring.mul(c, a) for a in self.v_part))

    def is_zero(self) -> bool:
        return self.t_part.is_zero() and is_zero_vector(self.v_part)

    def format(self, tables: SymbolTables) -> str:
        return str(_mixed_as_z(tables, self))


def _mixed_as_z(tables: SymbolTables, s: MixedElement) -> Polynomial:
    """``s`` written as a unital-free polynomial over ``Z = T + V``."""
    nT = len(tables.T)
    terms = dict(s.t_part.terms)
    for b, c in enumerate(s.v_part):
        if c != 0:
            terms[(nT + b,)] = c
    return Polynomial._raw(tables.ring, tables.Z, terms, False)


def build_symbol_tables(rep: CyclicModuleRep) -> SymbolTables:
    return SymbolTables(rep)


def _sum_mixed(tables, pairs) -> MixedElement:
    ring = tables.ring
    out: dict = {}
    v = [ring.zero] * (tables.k + 1)
    for c, s in pairs:
        if c == 0:
            continue
        for w, a in s.t_part.terms.items():
            x = ring.add(out.get(w, ring.zero), ring.mul(c, a))
            if x == 0:
                out.pop(w, None)
            else:
                out[w] = x
        for i, a in enumerate(s.v_part):
            if a != 0:
                v[i] = ring.add(v[i], ring.mul(c, a))
    return MixedElement(Polynomial._raw(ring, tables.T, out, False), tuple(v))


def _check_x(tables, p):
    if p.alphabet != tables.rep.alphabet or p.ring != tables.ring:
        raise TypeError("polynomial is not over the representation's alphabet and ring")


def star_act(tables: SymbolTables, s: MixedElement, p: Polynomial) -> MixedElement:
    """The right action ``s * p`` of ``K<X>^1`` on ``K<T> + span(V)``."""
    _check_x(tables, p)
    if s.t_part.alphabet != tables.T:
        raise TypeError("mixed element over the wrong symbol alphabet")
    cache = {(): s}

    def act(w):
        r = cache.get(w)
        if r is None:
            r = tables.act_letter(act(w[:-1]), w[-1])
            cache[w] = r
        return r

    return _sum_mixed(tables, [(c, act(w)) for w, c in p.terms.items()])


def phi(tables: SymbolTables, p: Polynomial) -> MixedElement:
    """``phi(p) = v[1] * p``."""
    _check_x(tables, p)
    return _sum_mixed(tables, [(c, tables.phi_word(w)) for w, c in p.terms.items()])


def psi_eval(tables: SymbolTables, q) -> Polynomial:
    """``psi`` of a mixed element or of a polynomial over ``Z``; the result is unital."""
    ring, X = tables.ring, tables.rep.alphabet
    if isinstance(q, MixedElement):
        t_terms, v_part = q.t_part.terms, q.v_part
    elif isinstance(q, Polynomial):
        if q.alphabet != tables.Z:
            raise TypeError("polynomial is not over the symbol alphabet Z")
        if q.unital and () in q.terms:
            raise TypeError("psi is evaluated on K<Z>")
        hom = AlgebraHom(tables.Z, X, list(tables.psi_t) + list(tables.psi_v), ring, unital=True)
        return apply_hom(hom, q).embed() if not q.unital else apply_hom(hom, q)
    else:
        raise TypeError(f"cannot evaluate psi on {type(q).__name__}")
    out: dict = {}
    for w, c in t_terms.items():
        for v, a in tables.psi_t_word(w).terms.items():
            s = ring.add(out.get(v, ring.zero), ring.mul(c, a))
            if s == 0:
                out.pop(v, None)
            else:
                out[v] = s
    result = Polynomial._raw(ring, X, out, True)
    for b, c in enumerate(v_part):
        if c != 0:
            result = result + tables.psi_v[b].scale(c)
    return result


# ---------------------------------------------------------------------------
# U, the section rho and the action ⋆
# ---------------------------------------------------------------------------

@dataclass
class UData:
    """Fresh symbols ``U`` with their images in ``span(V)`` and the module ``M``.

    ``pi_images[i]`` is ``pi(u[i+1])``; ``M`` is the module of linear
    relations among those images, as a submodule of ``K^U``.
    """

    tables: SymbolTables
    names: tuple
    pi_images: tuple
    Y: Alphabet
    M: Submodule
    solver: LinearSolver = field(repr=False)
    _psibar_cache: dict = field(default_factory=dict, repr=False)

    @property
    def ring(self):
        return self.tables.ring

    @property
    def t_count(self) -> int:
        return len(self.tables.T)

    def u_witness(self, i: int) -> Polynomial:
        t = self.tables
        acc = Polynomial.zero(t.ring, t.rep.alphabet, unital=True)
        for b, c in enumerate(self.pi_images[i]):
            if c != 0:
                acc = acc + t.psi_v[b].scale(c)
        return acc.strip_unit()

    def witness(self, y: int) -> Polynomial:
        """``psibar`` of the ``y``-th symbol of ``Y``."""
        nT = self.t_count
        if y < nT:
            return self.tables.psi_t[y].strip_unit()
        return self.u_witness(y - nT)


def linear_member_module(rep: CyclicModuleRep) -> Submodule:
    """``{c in K^V : c_1 = 0 and sum(c_b r_b) in R}``, canonically."""
    ring, k = rep.ring, rep.k
    rows = [rep.class_vector(rep.representatives[b]) for b in rep.labels[1:]] + list(rep.relations.basis)
    if not rows:
        return Submodule.zero(ring, k + 1)
    ker = kernel(rows, ring, len(rows), k + 1)
    return Submodule(ring, k + 1, [(ring.zero,) + tuple(c[:k]) for c in ker.basis])


def compute_U(rep: CyclicModuleRep, tables: SymbolTables, u_vectors: Sequence | None = None) -> UData:
    """Choose ``U``: the canonical basis of the linear members, or ``u_vectors`` if given.

    Caller-supplied vectors must span exactly the same module; they may be
    redundant, which is what makes ``M`` nonzero.
    """
    ring, k = rep.ring, rep.k
    target = linear_member_module(rep)
    if u_vectors is None:
        images = target.basis
    else:
        images = tuple(tuple(ring(a) for a in v) for v in u_vectors)
        if any(len(v) != k + 1 for v in images):
            raise ValueError(f"U-vectors must have length {k + 1}")
        if Submodule(ring, k + 1, images) != target:
            raise ValueError("supplied U-vectors do not span the linear members of R")
    names = tuple(f"u[{i + 1}]" for i in range(len(images)))
    Y = tables.T + Alphabet(names)
    if images:
        M = kernel(images, ring, len(images), k + 1)
    else:
        M = Submodule.zero(ring, 0)
    solver = LinearSolver(images, ring, len(images), k + 1)
    return UData(tables, names, tuple(images), Y, M, solver)


def pi_of(udata: UData, q: Polynomial) -> MixedElement:
    """``pi``: ``K<T> + span(U) -> K<T> + span(V)``."""
    tables, ring = udata.tables, udata.ring
    if q.alphabet != udata.Y:
        raise TypeError("polynomial is not over Y")
    nT = udata.t_count
    t_terms = {}
    v = [ring.zero] * (tables.k + 1)
    for w, c in q.terms.items():
        if all(s < nT for s in w):
            t_terms[w] = c
        elif len(w) == 1:
            for b, a in enumerate(udata.pi_images[w[0] - nT]):
                if a != 0:
                    v[b] = ring.add(v[b], ring.mul(c, a))
        else:
            raise ValueError("pi is only defined on K<T> + span(U)")
    return MixedElement(Polynomial._raw(ring, tables.T, t_terms, False), tuple(v))


def rho_section(udata: UData, s: MixedElement) -> Polynomial:
    """Replace the ``V``-part of ``s`` by its canonical expression over ``pi(U)``."""
    ring = udata.ring
    nT = udata.t_count
    terms = dict(s.t_part.terms)
    if not is_zero_vector(s.v_part):
        sol = udata.solver.solve(s.v_part) if udata.pi_images else None
        if sol is None:
            raise ValueError("V-part lies outside span(pi(U)); rho is undefined here")
        for i, c in enumerate(sol):
            if c != 0:
                terms[(nT + i,)] = c
    return Polynomial._raw(ring, udata.Y, terms, False)


def starbar_act(udata: UData, r: Polynomial, p: Polynomial) -> Polynomial:
    """``r ⋆ p``, with ``r ⋆ w = rho(pi(r) * w)`` on each word ``w`` of ``p``."""
    tables, ring = udata.tables, udata.ring
    _check_x(tables, p)
    base = pi_of(udata, r)
    cache = {(): base}

    def act(w):
        s = cache.get(w)
        if s is None:
            s = tables.act_letter(act(w[:-1]), w[-1])
            cache[w] = s
        return s

    out: dict = {}
    for w, c in p.terms.items():
        for v, a in rho_section(udata, act(w)).terms.items():
            x = ring.add(out.get(v, ring.zero), ring.mul(c, a))
            if x == 0:
                out.pop(v, None)
            else:
                out[v] = x
    return Polynomial._raw(ring, udata.Y, out, False)


def phibar(udata: UData, p: Polynomial) -> Polynomial:
    """The normal form ``rho(phi(p))`` of a member ``p`` of ``R``, over ``Y``."""
    rep = udata.tables.rep
    if p.unital:
        raise TypeError("phibar is defined on R, a subset of K<X>")
    if not is_member(rep, p):
        raise ValueError(f"{p} is not a member of the right ideal")
    return rho_section(udata, phi(udata.tables, p))


def psibar_eval(udata: UData, q: Polynomial) -> Polynomial:
    """``psibar = psi ∘ pi``, extended to all of ``K<Y>``; the result lies in ``R``."""
    ring = udata.ring
    X = udata.tables.rep.alphabet
    if q.alphabet != udata.Y:
        raise TypeError("polynomial is not over Y")
    if () in q.terms:
        raise TypeError("psibar is evaluated on K<Y>")
    cache = udata._psibar_cache

    def word(w):
        r = cache.get(w)
        if r is None:
            if len(w) == 1:
                r = udata.witness(w[0])
            else:
                r = word(w[:-1]) * word(w[-1:])
            cache[w] = r
        return r

    out: dict = {}
    for w, c in q.terms.items():
        for v, a in word(w).terms.items():
            x = ring.add(out.get(v, ring.zero), ring.mul(c, a))
            if x == 0:
                out.pop(v, None)
            else:
                out[v] = x
    return Polynomial._raw(ring, X, out, False)


# ---------------------------------------------------------------------------
# Presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Generators with witness polynomials and relations over the generator names.

    The presented algebra is ``K<names> / Id(relations)``; substituting
    witnesses sends every relation to zero.
    """

    alphabet: Alphabet
    witnesses: tuple
    relations: tuple
    sections: tuple = ()

    @property
    def generators(self) -> list:
        return list(zip(self.alphabet.names, self.witnesses))

    @property
    def ring(self):
        return self.witnesses[0].ring if self.witnesses else None

    def witness_hom(self, target: Alphabet, ring) -> AlgebraHom:
        return AlgebraHom(self.alphabet, target, list(self.witnesses), ring)

    def stats(self) -> dict:
        d = {"generators": len(self.witnesses), "relations": len(self.relations)}
        d.update(dict(self.sections))
        return d

    def render(self) -> str:
        lines = ["generators:"]
        for name, w in self.generators:
            lines.append(f"  {name} -> {w}")
        lines.append("relations:")
        for r in self.relations:
            lines.append(f"  {r}")
        return "\n".join(lines)


def relation_images(pres: Presentation, x_alphabet: Alphabet, ring) -> list:
    hom = pres.witness_hom(x_alphabet, ring)
    return [apply_hom(hom, r) for r in pres.relations]


def _assert_sound(pres: Presentation, x_alphabet, ring):
    for r, img in zip(pres.relations, relation_images(pres, x_alphabet, ring)):
        if not img.is_zero():
            raise AssertionError(f"relation {r} does not vanish under the witnesses: {img}")


def present_right_ideal(
    rep: CyclicModuleRep,
    u_vectors: Sequence | None = None,
    simplify: bool = False,
) -> Presentation:
    """Finite presentation ``<Y | W_U, W_Y, W_YY>`` of the right ideal ``R``.

    ``W_U`` lists the linear relations ``M`` among the ``u``-symbols,
    ``W_Y = {y - phibar(psibar(y))}`` and ``W_YY = {z*y - z ⋆ psibar(y)}``
    for ``z, y`` in ``Y`` (in that order).
    """
    tables = build_symbol_tables(rep)
    udata = compute_U(rep, tables, u_vectors)
    return _present(udata, simplify)


def _present(udata: UData, simplify: bool = False) -> Presentation:
    ring, Y = udata.ring, udata.Y
    X = udata.tables.rep.alphabet
    nT = udata.t_count
    witnesses = tuple(udata.witness(y) for y in range(len(Y)))
    w_u = []
    for m in udata.M.basis:
        w_u.append(Polynomial(ring, Y, {(nT + i,): c for i, c in enumerate(m)}))
    w_y = []
    for y in range(len(Y)):
        gen = Polynomial.monomial(ring, Y, (y,))
        w_y.append(gen - phibar(udata, witnesses[y]))
    w_yy = []
    for z in range(len(Y)):
        zpoly = Polynomial.monomial(ring, Y, (z,))
        for y in range(len(Y)):
            w_yy.append(Polynomial.monomial(ring, Y, (z, y)) - starbar_act(udata, zpoly, witnesses[y]))
    pres = Presentation(
        Y,
        witnesses,
        tuple(w_u + w_y + w_yy),
        (("W_U", len(w_u)), ("W_Y", len(w_y)), ("W_YY", len(w_yy))),
    )
    _assert_sound(pres, X, ring)
    if simplify:
        pres = simplify_presentation(pres)
        _assert_sound(pres, X, ring)
    return pres


def simplify_presentation(pres: Presentation) -> Presentation:
    """Drop every generator that appears alone as a relation (it is zero in the algebra)."""
    ring = pres.ring
    if ring is None:
        return pres
    dead = set()
    for r in pres.relations:
        if len(r.terms) == 1:
            (w, c), = r.terms.items()
            if len(w) == 1 and ring.is_unit(c):
                dead.add(w[0])
    if not dead:
        return pres
    keep = [i for i in range(len(pres.alphabet)) if i not in dead]
    new_index = {old: new for new, old in enumerate(keep)}
    alphabet = Alphabet([pres.alphabet.names[i] for i in keep])
    relations = []
    for r in pres.relations:
        terms = {}
        for w, c in r.terms.items():
            if any(s in dead for s in w):
                continue
            terms[tuple(new_index[s] for s in w)] = c
        if terms:
            p = Polynomial(ring, alphabet, terms)
            if p not in relations:
                relations.append(p)
    return Presentation(
        alphabet,
        tuple(pres.witnesses[i] for i in keep),
        tuple(relations),
        tuple(pres.sections) + (("removed", len(dead)),),
    )


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    sound: bool
    unsound_relations: list
    identity_passed: int
    identity_failed: int
    completeness: list  # (degree, expected dim, achieved dim)
    complete: bool
    deg_cap: int
    samples: int
    degree_compatible: bool = True

    @property
    def ok(self) -> bool:
        return self.sound and self.identity_failed == 0 and self.complete

    def as_dict(self) -> dict:
        return {
            "sound": self.sound,
            "unsound_relations": list(self.unsound_relations),
            "identity_checks": {"passed": self.identity_passed, "failed": self.identity_failed},
            "completeness": [
                {"degree": d, "expected": e, "achieved": a} for d, e, a in self.completeness
            ],
            "complete": self.complete,
            "degree_compatible": self.degree_compatible,
            "deg_cap": self.deg_cap,
            "samples": self.samples,
        }


def degree_compatible(tables: SymbolTables) -> bool:
    """Does every ``<r_b x>`` use only representatives of degree ``<= deg r_b + 1``?

    Under this condition ``phibar`` never raises witness degree, which is what
    makes the witness-degree-bounded completeness comparison exact.  Without
    it the comparison may undercount a complete presentation.
    """
    degs = [r.degree() for r in tables.reps]
    for b, row in enumerate(tables.coset):
        for vec in row:
            for c, coeff in enumerate(vec, start=1):
                if coeff != 0 and degs[c] > degs[b] + 1:
                    return False
    return True


def witness_degree_words(witnesses: Sequence[Polynomial], cap: int):
    """Words over the generators whose witness degrees add up to at most ``cap``.

    Generators with zero witness are skipped: every word through them
    evaluates to zero.
    """
    degs = [(i, w.degree()) for i, w in enumerate(witnesses) if not w.is_zero()]
    out = []

    def extend(prefix, budget):
        for i, d in degs:
            if d <= budget:
                w = prefix + (i,)
                out.append(w)
                extend(w, budget - d)

    extend((), cap)
    return sorted(out, key=word_key)


def generated_lattice(witnesses: Sequence[Polynomial], words_order: Sequence, cap: int, ring):
    """Span of the witness products of degree-bounded generator words, in ``words_order`` coordinates."""
    col = {w: i for i, w in enumerate(words_order)}
    ech = SparseEchelon(ring, track=False)
    cache = {}

    def value(w):
        r = cache.get(w)
        if r is None:
            r = witnesses[w[0]] if len(w) == 1 else value(w[:-1]) * witnesses[w[-1]]
            cache[w] = r
        return r

    for w in witness_degree_words(witnesses, cap):
        p = value(w)
        if p.degree() > cap:
            raise AssertionError("witness degree bound violated")
        ech.add({col[v]: c for v, c in p.terms.items()})
    rows = []
    for lead in sorted(ech.basis):
        vec, _ = ech.basis[lead]
        row = [ring.zero] * len(words_order)
        for c, a in vec.items():
            row[c] = a
        rows.append(tuple(row))
    return Submodule(ring, len(words_order), rows)


def degree_profile(lattice: Submodule, words_order, cap: int) -> list:
    """Rank of the degree-``<= d`` part for ``d = 1..cap`` (pivots are leading words)."""
    lengths = [len(words_order[j]) for j in lattice.pivots]
    return [sum(1 for n in lengths if n <= d) for d in range(1, cap + 1)]


def verify_presentation(
    rep: CyclicModuleRep,
    pres: Presentation,
    deg_cap: int = 5,
    samples: int = 20,
    seed: int = 0,
    u_vectors: Sequence | None = None,
) -> VerificationReport:
    """Check soundness, the normal-form identity and bounded-degree completeness."""
    import random

    ring, X = rep.ring, rep.alphabet
    unsound = []
    hom = pres.witness_hom(X, ring)
    for r in pres.relations:
        if not apply_hom(hom, r).is_zero():
            unsound.append(str(r))

    tables = build_symbol_tables(rep)
    udata = compute_U(rep, tables, u_vectors)
    rng = random.Random(seed)
    passed = failed = 0
    for _ in range(samples):
        p = random_member(rep, rng, max_deg=max(deg_cap, 1))
        if psibar_eval(udata, phibar(udata, p)) == p:
            passed += 1
        else:
            failed += 1

    words, expected = bounded_member_lattice(rep, deg_cap)
    achieved = generated_lattice(pres.witnesses, words, deg_cap, ring)
    e_prof = degree_profile(expected, words, deg_cap)
    a_prof = degree_profile(achieved, words, deg_cap)
    completeness = [(d, e, a) for d, e, a in zip(range(1, deg_cap + 1), e_prof, a_prof)]
    return VerificationReport(
        sound=not unsound,
        unsound_relations=unsound,
        identity_passed=passed,
        identity_failed=failed,
        completeness=completeness,
        complete=expected == achieved,
        deg_cap=deg_cap,
        samples=samples,
        degree_compatible=degree_compatible(tables),
    )
