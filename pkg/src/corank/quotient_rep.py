"""Finite descriptions of right ideals, ideals and subalgebras of finite co-rank.

Two representations are supported.

:class:`CyclicModuleRep`
    The cyclic right module ``K<X>^1 / R`` given by action matrices on
    ``K^(k+1) / N``.  Coordinate 0 is the class of the identity; coordinates
    ``1..k`` belong to the coset representatives ``r_b``.  The right ideal is
    ``R = {p in K<X> : class(p) in N}``.

:class:`AlgebraRep`
    A surjection ``pi: K<X> -> Q`` onto a finite-rank algebra given by
    structure constants on ``K^k / N_Q``, together with a marked submodule
    ``S``; the represented object is ``B = pi^-1(S + N_Q)``.

Vectors are row vectors and matrices act on the right, so the class of
``p * x`` is ``class(p) @ action[x]``.
"""

from __future__ import annotations

import enum
import random
import re
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .free_algebra import Alphabet, Polynomial, enumerate_words, linear_combination, term_key
from .linalg import (
    LinearSolver,
    Submodule,
    hnf,
    identity,
    is_zero_vector,
    kernel,
    quotient_presentation,
    vec_add,
    vec_mat,
    vec_scale,
)
from .rings import Ring


_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


class IdealClass(enum.IntEnum):
    SUBMODULE_ONLY = 0
    SUBALGEBRA = 1
    RIGHT_IDEAL = 2
    TWO_SIDED_IDEAL = 3

    @property
    def label(self) -> str:
        return {
            0: "submodule only",
            1: "subalgebra",
            2: "right ideal (not two-sided)",
            3: "two-sided ideal",
        }[int(self)]


class InvalidRepresentation(ValueError):
    """A representation violates one or more of its invariants."""

    def __init__(self, violations: Sequence[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


# ---------------------------------------------------------------------------
# Cyclic module representations
# ---------------------------------------------------------------------------

class CyclicModuleRep:
    """Right ideal of finite co-rank, via the cyclic module ``K<X>^1 / R``."""

    def __init__(
        self,
        ring: Ring,
        alphabet: Alphabet,
        labels: Sequence[str],
        representatives: Mapping[str, Polynomial | str],
        relations: Sequence | Submodule,
        action: Mapping[str, Sequence[Sequence]],
    ):
        from .free_algebra import parse_poly

        labels = tuple(labels)
        if not labels or labels[0] != "1":
            raise InvalidRepresentation(["basis labels must start with '1'"])
        if len(set(labels)) != len(labels):
            raise InvalidRepresentation(["duplicate basis labels"])
        bad = [b for b in labels if not _LABEL_RE.fullmatch(b)]
        if bad:
            raise InvalidRepresentation([f"basis labels must be alphanumeric, got {bad}"])
        self.ring = ring
        self.alphabet = alphabet
        self.labels = labels
        dim = len(labels)
        reps = {}
        for b in labels[1:]:
            if b not in representatives:
                raise InvalidRepresentation([f"no representative for basis label {b!r}"])
            r = representatives[b]
            if isinstance(r, str):
                r = parse_poly(r, alphabet, ring)
            if r.unital:
                raise InvalidRepresentation([f"representative of {b!r} must lie in K<X> (no constant term)"])
            reps[b] = r
        self.representatives = reps
        if isinstance(relations, Submodule):
            self.relations = relations
        else:
            self.relations = Submodule(ring, dim, relations)
        act = {}
        for x in alphabet.names:
            if x not in action:
                raise InvalidRepresentation([f"no action matrix for variable {x!r}"])
            m = tuple(tuple(ring(a) for a in row) for row in action[x])
            if len(m) != dim or any(len(row) != dim for row in m):
                raise InvalidRepresentation([f"action matrix of {x!r} must be {dim}x{dim}"])
            act[x] = m
        self.action = act
        self._action_by_index = [act[x] for x in alphabet.names]
        self._word_cache: dict = {(): tuple(ring.one if i == 0 else ring.zero for i in range(dim))}
        self._coset_solver = None
        self._class = None

    @property
    def k(self) -> int:
        return len(self.labels) - 1

    @property
    def dim(self) -> int:
        return len(self.labels)

    def unit_vector(self, i: int) -> tuple:
        ring = self.ring
        return tuple(ring.one if j == i else ring.zero for j in range(self.dim))

    def word_class(self, w) -> tuple:
        """``e @ rho(w)``: the class of a word in ``K^(k+1)``."""
        cache = self._word_cache
        v = cache.get(w)
        if v is None:
            v = vec_mat(self.word_class(w[:-1]), self._action_by_index[w[-1]], self.ring, self.dim)
            cache[w] = v
        return v

    def class_vector(self, p: Polynomial) -> tuple:
        """Class of ``p`` (unital or not) in ``K^(k+1)``, before reduction modulo ``N``."""
        self._check_poly(p)
        ring = self.ring
        acc = [ring.zero] * self.dim
        for w, c in p.terms.items():
            for i, a in enumerate(self.word_class(w)):
                if a != 0:
                    acc[i] = ring.add(acc[i], ring.mul(c, a))
        return tuple(acc)

    def _check_poly(self, p):
        if p.alphabet != self.alphabet or p.ring != self.ring:
            raise TypeError("polynomial is not over the representation's alphabet and ring")

    def representative(self, label: str, unital: bool = False) -> Polynomial:
        """``r_b``; the label ``"1"`` gives the identity (unital only)."""
        if label == "1":
            if not unital:
                raise ValueError("the identity is not an element of K<X>")
            return Polynomial.one(self.ring, self.alphabet)
        r = self.representatives[label]
        return r.embed() if unital else r

    def _solver(self):
        if self._coset_solver is None:
            ring, k = self.ring, self.k
            rows = [self.unit_vector(i) for i in range(1, k + 1)] + list(self.relations.basis)
            solver = LinearSolver(rows, ring, len(rows), self.dim)
            lattice = Submodule(ring, k, [v[:k] for v in solver.kernel.basis])
            self._coset_solver = (solver, lattice)
        return self._coset_solver

    def coset_of_class(self, v) -> tuple | None:
        """Canonical ``c`` with ``v = sum(c_b g_b) mod N``; ``None`` if impossible."""
        solver, lattice = self._solver()
        x = solver.solve(v)
        if x is None:
            return None
        return lattice.reduce(x[: self.k])


def coset_vector(rep: CyclicModuleRep, p: Polynomial) -> tuple:
    """The coset map: canonical coordinates of ``p`` over the representatives.

    ``p - sum(c_b * r_b)`` lies in ``R`` and the result is constant on
    ``R``-cosets; the zero polynomial maps to the zero vector.
    """
    if p.unital:
        raise TypeError("the coset map is defined on K<X>, not K<X>^1")
    c = rep.coset_of_class(rep.class_vector(p))
    if c is None:
        raise InvalidRepresentation([f"class of {p} is outside span(B) + N (V3/V4)"])
    return c


def is_member(rep, p: Polynomial) -> bool:
    """Exact membership of ``p`` in the represented object."""
    if isinstance(rep, AlgebraRep):
        return rep.marked_plus_relations.__contains__(rep.pi(p))
    if p.unital:
        raise TypeError("membership is tested for elements of K<X>")
    return rep.class_vector(p) in rep.relations


def _validate_cyclic(rep: CyclicModuleRep) -> list[str]:
    ring, dim = rep.ring, rep.dim
    problems = []
    N = rep.relations
    for b_idx, b in enumerate(rep.labels[1:], start=1):
        diff = tuple(ring.sub(a, c) for a, c in zip(rep.class_vector(rep.representatives[b]), rep.unit_vector(b_idx)))
        if diff not in N:
            problems.append(f"V1 violated: class of representative {b!r} is not its basis vector modulo N")
    for x, m in rep.action.items():
        for n in N.basis:
            if vec_mat(n, m, ring, dim) not in N:
                problems.append(f"V2 violated: N @ rho({x}) is not contained in N")
                break
    for x, m in rep.action.items():
        if rep.coset_of_class(m[0]) is None:
            problems.append(f"V3 violated: e @ rho({x}) is outside span(B) + N")
    for x, m in rep.action.items():
        for b_idx, b in enumerate(rep.labels[1:], start=1):
            if rep.coset_of_class(m[b_idx]) is None:
                problems.append(f"V4 violated: g_{b} @ rho({x}) is outside span(B) + N")
    return problems


def _matrix_algebra_closure(mats, ring, dim) -> Submodule:
    """K-span of all nonempty products of ``mats`` (flattened), by stabilisation."""
    flat = lambda m: tuple(a for row in m for a in row)  # noqa: E731
    unflat = lambda v: tuple(tuple(v[i * dim:(i + 1) * dim]) for i in range(dim))  # noqa: E731
    from .linalg import mat_mul

    span = Submodule(ring, dim * dim, [flat(m) for m in mats])
    while True:
        gens = list(span.basis)
        for b in span.basis:
            for m in mats:
                gens.append(flat(mat_mul(unflat(b), m, ring)))
        new = Submodule(ring, dim * dim, gens)
        if new == span:
            return span
        span = new


def _is_two_sided(rep: CyclicModuleRep) -> bool:
    ring, dim = rep.ring, rep.dim
    mats = [rep.action[x] for x in rep.alphabet.names]
    algebra = _matrix_algebra_closure(mats, ring, dim)
    s = len(algebra.basis)
    if s == 0:
        return True
    # H* = {m in A* : e @ m in N}; coordinates over the closure basis.
    e_rows = [tuple(b[:dim]) for b in algebra.basis]  # e @ m is the first row of m
    rows = e_rows + list(rep.relations.basis)
    ker = kernel(rows, ring, len(rows), dim)
    for coeffs in ker.basis:
        flat = [ring.zero] * (dim * dim)
        for c, b in zip(coeffs[:s], algebra.basis):
            if c != 0:
                flat = [ring.add(a, ring.mul(c, y)) for a, y in zip(flat, b)]
        h = tuple(tuple(flat[i * dim:(i + 1) * dim]) for i in range(dim))
        for m in mats:
            v = vec_mat(vec_mat(rep.unit_vector(0), m, ring, dim), h, ring, dim)
            if v not in rep.relations:
                return False
    return True


def validate_rep(rep) -> IdealClass:
    """Check every invariant of ``rep`` and classify the represented object.

    Raises :class:`InvalidRepresentation` naming each violated invariant.
    """
    if isinstance(rep, CyclicModuleRep):
        if rep._class is None:
            problems = _validate_cyclic(rep)
            if problems:
                raise InvalidRepresentation(problems)
            rep._class = IdealClass.TWO_SIDED_IDEAL if _is_two_sided(rep) else IdealClass.RIGHT_IDEAL
        return rep._class
    if isinstance(rep, AlgebraRep):
        if rep._class is None:
            problems = _validate_algebra(rep)
            if problems:
                raise InvalidRepresentation(problems)
            rep._class = _classify_algebra(rep)
        return rep._class
    raise TypeError(f"not a representation: {type(rep).__name__}")


def co_rank_invariants(rep) -> tuple:
    """Invariant factors of ``K<X> / R`` (or ``K<X> / B``); zero marks a free summand."""
    if isinstance(rep, CyclicModuleRep):
        k = rep.k
        _, lattice = rep._solver()
        return quotient_presentation(lattice).invariants
    return quotient_presentation(rep.marked_plus_relations).invariants


# ---------------------------------------------------------------------------
# Structure-constant algebras
# ---------------------------------------------------------------------------

class AlgebraRep:
    """Subalgebra ``B = pi^-1(S + N_Q)`` of ``K<X>`` for a surjection ``pi`` onto ``Q``."""

    def __init__(
        self,
        ring: Ring,
        alphabet: Alphabet,
        rank: int,
        structure_constants: Sequence[Sequence[Sequence]],
        images: Mapping[str, Sequence],
        marked_submodule: Sequence | Submodule = (),
        relations: Sequence | Submodule = (),
        labels: Sequence[str] | None = None,
    ):
        self.ring = ring
        self.alphabet = alphabet
        self.rank = rank
        self.labels = tuple(labels) if labels is not None else tuple(f"q{i + 1}" for i in range(rank))
        if len(self.labels) != rank:
            raise InvalidRepresentation(["label count differs from rank"])
        sc = []
        for i in range(rank):
            row = []
            for j in range(rank):
                try:
                    v = tuple(ring(a) for a in structure_constants[i][j])
                except (IndexError, TypeError):
                    raise InvalidRepresentation([f"structure constant q{i + 1}*q{j + 1} missing"]) from None
                if len(v) != rank:
                    raise InvalidRepresentation([f"structure constant q{i + 1}*q{j + 1} has wrong length"])
                row.append(v)
            sc.append(tuple(row))
        self.structure_constants = tuple(sc)
        imgs = {}
        for x in alphabet.names:
            if x not in images:
                raise InvalidRepresentation([f"no image for variable {x!r}"])
            v = tuple(ring(a) for a in images[x])
            if len(v) != rank:
                raise InvalidRepresentation([f"image of {x!r} has wrong length"])
            imgs[x] = v
        self.images = imgs
        self._image_by_index = [imgs[x] for x in alphabet.names]
        self.relations = relations if isinstance(relations, Submodule) else Submodule(ring, rank, relations)
        self.marked_submodule = (
            marked_submodule if isinstance(marked_submodule, Submodule) else Submodule(ring, rank, marked_submodule)
        )
        self.marked_plus_relations = self.marked_submodule + self.relations
        self._word_cache: dict = {}
        self._class = None
        self._spanning_words = None

    def unit_vector(self, i):
        ring = self.ring
        return tuple(ring.one if j == i else ring.zero for j in range(self.rank))

    def product(self, a, b) -> tuple:
        """Bilinear product in ``Q`` on coordinate vectors."""
        ring = self.ring
        acc = [ring.zero] * self.rank
        sc = self.structure_constants
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y == 0:
                    continue
                c = ring.mul(x, y)
                for l, z in enumerate(sc[i][j]):
                    if z != 0:
                        acc[l] = ring.add(acc[l], ring.mul(c, z))
        return tuple(acc)

    def word_image(self, w) -> tuple:
        if not w:
            raise ValueError("the empty word has no image in Q")
        v = self._word_cache.get(w)
        if v is None:
            if len(w) == 1:
                v = self._image_by_index[w[0]]
            else:
                v = self.product(self.word_image(w[:-1]), self._image_by_index[w[-1]])
            self._word_cache[w] = v
        return v

    def pi(self, p: Polynomial) -> tuple:
        if p.alphabet != self.alphabet or p.ring != self.ring:
            raise TypeError("polynomial is not over the representation's alphabet and ring")
        if () in p.terms:
            raise TypeError("pi is defined on K<X> (no constant term)")
        ring = self.ring
        acc = [ring.zero] * self.rank
        for w, c in p.terms.items():
            for i, a in enumerate(self.word_image(w)):
                if a != 0:
                    acc[i] = ring.add(acc[i], ring.mul(c, a))
        return tuple(acc)

    def spanning_words(self) -> list:
        """Words whose images span ``Q`` modulo ``N_Q`` (empty list if ``pi`` is not onto)."""
        if self._spanning_words is None:
            ring, k = self.ring, self.rank
            span = self.relations
            kept = []
            frontier = [(i,) for i in range(len(self.alphabet))]
            while frontier:
                nxt = []
                for w in frontier:
                    new = span + Submodule(ring, k, [self.word_image(w)])
                    if new != span:
                        span = new
                        kept.append(w)
                        nxt.extend(w + (i,) for i in range(len(self.alphabet)))
                frontier = nxt
            self._spanning_words = kept if span.is_full() else []
        return self._spanning_words

    def with_marked(self, marked: Submodule | Sequence) -> "AlgebraRep":
        return AlgebraRep(
            self.ring, self.alphabet, self.rank, self.structure_constants, self.images, marked, self.relations, self.labels
        )


def _validate_algebra(rep: AlgebraRep) -> list[str]:
    ring, k = rep.ring, rep.rank
    N = rep.relations
    problems = []
    basis = [rep.unit_vector(i) for i in range(k)]
    for n in N.basis:
        for q in basis:
            if rep.product(n, q) not in N or rep.product(q, n) not in N:
                problems.append("multiplication is not well defined modulo the relations")
                break
        else:
            continue
        break
    sc = rep.structure_constants
    bad_assoc = False
    for i in range(k):
        for j in range(k):
            for l in range(k):
                lhs = rep.product(sc[i][j], basis[l])
                rhs = rep.product(basis[i], sc[j][l])
                if tuple(ring.sub(a, b) for a, b in zip(lhs, rhs)) not in N:
                    bad_assoc = True
    if bad_assoc:
        problems.append("associativity violated modulo the relations")
    if not rep.spanning_words():
        problems.append("surjectivity violated: images of the variables do not generate Q")
    if rep.marked_submodule.rank != k:
        problems.append("marked submodule has the wrong ambient rank")
    return problems


def _classify_algebra(rep: AlgebraRep) -> IdealClass:
    S = rep.marked_plus_relations
    sb = S.basis
    if not all(rep.product(a, b) in S for a in sb for b in sb):
        return IdealClass.SUBMODULE_ONLY
    basis = [rep.unit_vector(i) for i in range(rep.rank)]
    right = all(rep.product(a, q) in S for a in sb for q in basis)
    left = all(rep.product(q, a) in S for a in sb for q in basis)
    if right and left:
        return IdealClass.TWO_SIDED_IDEAL
    if right:
        return IdealClass.RIGHT_IDEAL
    return IdealClass.SUBALGEBRA


CLOSURE_MODES = ("two_sided", "left_right_ideal", "right_ideal", "left_ideal", "subalgebra")


def closure_submodule(rep: AlgebraRep, seed: Submodule, mode: str = "two_sided") -> Submodule:
    """Smallest submodule containing ``seed`` closed under the requested products."""
    if mode not in CLOSURE_MODES:
        raise ValueError(f"mode must be one of {CLOSURE_MODES}")
    ring, k = rep.ring, rep.rank
    basis = [rep.unit_vector(i) for i in range(k)]
    current = Submodule(ring, k, seed.basis)
    while True:
        gens = list(current.basis)
        for s in current.basis:
            if mode == "subalgebra":
                gens.extend(rep.product(s, t) for t in current.basis)
                continue
            if mode in ("two_sided", "left_right_ideal", "right_ideal"):
                gens.extend(rep.product(s, q) for q in basis)
            if mode in ("two_sided", "left_right_ideal", "left_ideal"):
                gens.extend(rep.product(q, s) for q in basis)
        new = Submodule(ring, k, gens)
        if new == current:
            return current
        current = new


@dataclass(frozen=True)
class IdealReduction:
    """Data produced while shrinking a subalgebra to an ideal contained in it.

    ``h_kernel`` is the kernel of the map ``s -> (u s v + S)_{u,v}``,
    ``ideal`` the two-sided ideal of ``Q`` it generates (relations included),
    and ``rep`` the resulting representation over ``Q / ideal``.
    """

    h_kernel: Submodule
    ideal: Submodule
    multipliers: tuple
    rep: "AlgebraRep"


def ideal_in_subalgebra(rep: AlgebraRep) -> IdealReduction:
    cls = validate_rep(rep)
    if cls < IdealClass.SUBALGEBRA:
        raise InvalidRepresentation(["marked submodule does not define a subalgebra"])
    ring, k = rep.ring, rep.rank
    S = rep.marked_plus_relations
    qp = quotient_presentation(S)
    multipliers = (None,) + tuple(qp.lift)  # None stands for the adjoined identity

    def mul(u, s, v):
        if u is not None:
            s = rep.product(u, s)
        if v is not None:
            s = rep.product(s, v)
        return s

    sb = S.basis
    m = len(sb)
    pairs = [(u, v) for u in multipliers for v in multipliers]
    width = k * len(pairs)
    rows = []
    for s in sb:
        row = []
        for u, v in pairs:
            row.extend(mul(u, s, v))
        rows.append(tuple(row))
    for block in range(len(pairs)):
        for b in sb:
            row = [ring.zero] * width
            row[block * k:(block + 1) * k] = b
            rows.append(tuple(row))
    if m == 0:
        h_kernel = Submodule.zero(ring, k)
    else:
        ker = kernel(rows, ring, len(rows), width)
        gens = []
        for c in ker.basis:
            acc = (ring.zero,) * k
            for a, s in zip(c[:m], sb):
                if a != 0:
                    acc = vec_add(acc, vec_scale(a, s, ring), ring)
            gens.append(acc)
        h_kernel = Submodule(ring, k, gens)
    ideal = closure_submodule(rep, h_kernel + rep.relations, "two_sided")
    if not S.contains(ideal):
        raise AssertionError("ideal generated by the kernel escaped the subalgebra")
    return IdealReduction(h_kernel, ideal, multipliers, quotient_algebra(rep, ideal))


def quotient_algebra(rep: AlgebraRep, ideal: Submodule) -> AlgebraRep:
    """``rep`` pushed down to ``Q / ideal`` (``ideal`` must contain the relations)."""
    ring = rep.ring
    qp = quotient_presentation(ideal)
    n = qp.generator_count
    lifts = [qp.lift_vector(rep_unit) for rep_unit in identity(n, ring)]
    sc = [[qp.project(rep.product(a, b)) for b in lifts] for a in lifts]
    images = {x: qp.project(v) for x, v in rep.images.items()}
    marked = [qp.project(v) for v in rep.marked_submodule.basis]
    return AlgebraRep(ring, rep.alphabet, n, sc, images, marked, qp.relation_rows, [f"e{i + 1}" for i in range(n)])


def reduce_to_ideal(rep: AlgebraRep) -> AlgebraRep:
    """Representation over ``Q/J`` whose kernel ``I = pi^-1(J)`` is an ideal inside ``B``.

    The marked submodule of the result is ``S/J``, so the result still
    represents ``B``; the ideal ``I`` is the preimage of zero, available
    through :func:`kernel_ideal`.
    """
    return ideal_in_subalgebra(rep).rep


def kernel_ideal(rep: AlgebraRep) -> AlgebraRep:
    """The same surjection with zero marked submodule: represents ``ker pi``."""
    return rep.with_marked(Submodule.zero(rep.ring, rep.rank))


# ---------------------------------------------------------------------------
# Bounded-degree member spaces and random members
# ---------------------------------------------------------------------------

def _image_and_target(rep):
    if isinstance(rep, CyclicModuleRep):
        return rep.word_class, rep.relations, rep.dim
    return rep.word_image, rep.marked_plus_relations, rep.rank


def bounded_member_basis(rep, max_deg: int) -> tuple[list, list]:
    """A basis of ``{p : deg p <= max_deg, p a member}`` over monomial coordinates.

    Returns ``(words, vectors)``: the words of length ``1..max_deg`` in
    canonical order and the kernel basis vectors as coefficient tuples over
    those words.  Computed independently of any presentation.
    """
    image, target, dim = _image_and_target(rep)
    ring = rep.ring
    words = enumerate_words(rep.alphabet, 1, max_deg)
    rows = [image(w) for w in words] + list(target.basis)
    if not words:
        return words, []
    h, u = hnf(rows, ring, dim)
    n = len(words)
    vectors = [u[i][:n] for i in range(len(rows)) if is_zero_vector(h[i])]
    vectors = [v for v in vectors if not is_zero_vector(v)]
    return words, vectors


def bounded_member_lattice(rep, max_deg: int):
    """Canonical submodule of the member space in degrees ``<= max_deg``.

    Coordinates run over words in printing order (longest first), so the
    pivot of each canonical basis row is the leading word of that member.
    """
    words, vectors = bounded_member_basis(rep, max_deg)
    order = sorted(range(len(words)), key=lambda i: term_key(words[i]))
    lattice = Submodule(rep.ring, len(words), [tuple(v[i] for i in order) for v in vectors])
    return [words[i] for i in order], lattice


def random_member(rep, rng: random.Random, max_deg: int = 4, max_terms: int = 3) -> Polynomial:
    """A random member built from the coset map (or ``pi``) plus random right/left factors."""
    from .free_algebra import random_polynomial

    ring = rep.ring
    if isinstance(rep, CyclicModuleRep):
        q = random_polynomial(rng, ring, rep.alphabet, max_deg, max_terms)
        c = coset_vector(rep, q)
        p = q - linear_combination(ring, rep.alphabet, [(a, rep.representatives[b]) for a, b in zip(c, rep.labels[1:])])
        return p
    words, vectors = bounded_member_basis(rep, max_deg)
    if not vectors:
        return Polynomial.zero(ring, rep.alphabet)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        v = rng.choice(vectors)
        c = ring.random(rng) or ring.one
        for w, a in zip(words, v):
            if a != 0:
                terms[w] = ring.add(terms.get(w, ring.zero), ring.mul(c, a))
    return Polynomial(ring, rep.alphabet, terms)
