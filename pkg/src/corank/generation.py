"""Finite generating sets for subalgebras of finite co-rank, and rewriting into them.

Given ``B = pi^-1(S + N_Q)`` and variables ``Y`` whose images span ``Q``
modulo ``S + N_Q``, the map ``gamma`` picks a ``Y``-linear representative of
each ``B``-coset.  The elements ``w - gamma(w)`` for words of length one to
three, together with a basis ``Z`` of ``B ∩ span(Y)``, generate ``B`` as an
algebra; :func:`rewrite_member` produces the explicit expression by
induction on degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .free_algebra import Alphabet, Polynomial, enumerate_words, linear_combination
from .linalg import LinearSolver, Submodule
from .quotient_rep import AlgebraRep, IdealClass, InvalidRepresentation, is_member, validate_rep


class GenerationSpec:
    """A subalgebra representation together with the designated variables ``Y``."""

    def __init__(self, rep: AlgebraRep, y_subset: Sequence[str]):
        cls = validate_rep(rep)
        if cls < IdealClass.SUBALGEBRA:
            raise InvalidRepresentation(["marked submodule does not define a subalgebra"])
        for y in y_subset:
            if y not in rep.alphabet:
                raise InvalidRepresentation([f"{y!r} is not a variable"])
        self.rep = rep
        self.y_subset = tuple(y_subset)
        self.y_index = tuple(rep.alphabet.index(y) for y in self.y_subset)
        ring = rep.ring
        target = rep.marked_plus_relations
        images = [rep.images[y] for y in self.y_subset]
        if not (target + Submodule(ring, rep.rank, images)).is_full():
            raise InvalidRepresentation([
                "images of Y do not span Q modulo the marked submodule; "
                "add variables standing for the missing module generators"
            ])
        rows = images + list(target.basis)
        self._solver = LinearSolver(rows, ring, len(rows), rep.rank)
        m = len(images)
        # L = {c : sum(c_y pi(y)) in S + N_Q}
        self.linear_members = Submodule(ring, m, [c[:m] for c in self._solver.kernel.basis])

    def y_linear(self, coeffs) -> Polynomial:
        rep = self.rep
        terms = {(i,): c for i, c in zip(self.y_index, coeffs) if c != 0}
        return Polynomial(rep.ring, rep.alphabet, terms)


def gamma_coefficients(spec: GenerationSpec, p: Polynomial) -> tuple:
    m = len(spec.y_subset)
    sol = spec._solver.solve(spec.rep.pi(p))
    if sol is None:  # unreachable: the spanning condition was validated
        raise AssertionError("gamma is undefined on this polynomial")
    return spec.linear_members.reduce(sol[:m])


def gamma(spec: GenerationSpec, p: Polynomial) -> Polynomial:
    """The ``Y``-linear polynomial with ``p - gamma(p)`` in ``B``; constant on ``B``-cosets."""
    return spec.y_linear(gamma_coefficients(spec, p))


@dataclass(frozen=True)
class GeneratingSet:
    """``V = U ∪ Z`` with provenance.

    ``u_words[i]`` is the word ``w`` with ``u_part[i] = w - gamma(w)``;
    ``dropped`` counts words whose element vanished.
    """

    u_part: tuple
    u_words: tuple
    z_part: tuple
    z_coefficients: tuple
    dropped: int

    @property
    def generators(self) -> tuple:
        return self.u_part + self.z_part

    def provenance(self, alphabet: Alphabet) -> list:
        out = [{"word": alphabet.format_word(w), "kind": "U"} for w in self.u_words]
        out += [{"word": None, "kind": "Z"} for _ in self.z_part]
        return out


def finite_generating_set(spec: GenerationSpec) -> GeneratingSet:
    rep = spec.rep
    ring, X = rep.ring, rep.alphabet
    u_part, u_words, dropped = [], [], 0
    for w in enumerate_words(X, 1, 3):
        mono = Polynomial.monomial(ring, X, w)
        e = mono - gamma(spec, mono)
        if e.is_zero():
            dropped += 1
            continue
        u_part.append(e)
        u_words.append(w)
    z_coeffs = tuple(spec.linear_members.basis)
    z_part = tuple(spec.y_linear(c) for c in z_coeffs)
    gs = GeneratingSet(tuple(u_part), tuple(u_words), z_part, z_coeffs, dropped)
    for g in gs.generators:
        if not is_member(rep, g):
            raise AssertionError(f"generator {g} is not in B")
    return gs


# ---------------------------------------------------------------------------
# Algebra combinations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    index: int


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # (scalar, node)


def evaluate(node, generators: Sequence[Polynomial], ring, alphabet) -> Polynomial:
    if isinstance(node, Leaf):
        return generators[node.index]
    if isinstance(node, Product):
        acc = evaluate(node.factors[0], generators, ring, alphabet)
        for f in node.factors[1:]:
            acc = acc * evaluate(f, generators, ring, alphabet)
        return acc
    return linear_combination(ring, alphabet, [(c, evaluate(n, generators, ring, alphabet)) for c, n in node.terms])


def render(node, ring, names: Sequence[str] | None = None) -> str:
    """Parenthesised text form, generators written ``g1, g2, ...`` by default."""
    if isinstance(node, Leaf):
        return names[node.index] if names else f"g{node.index + 1}"
    if isinstance(node, Product):
        return "*".join(_paren(f, ring, names) for f in node.factors)
    if not node.terms:
        return "0"
    parts = []
    for i, (c, n) in enumerate(node.terms):
        neg = ring.kind != "Fp" and c < 0
        mag = -c if neg else c
        body = render(n, ring, names) if mag == 1 else f"{ring.format(mag)}*{_paren(n, ring, names)}"
        parts.append(("-" if neg else "") + body if i == 0 else (" - " if neg else " + ") + body)
    return "".join(parts)


def _paren(node, ring, names):
    text = render(node, ring, names)
    return f"({text})" if isinstance(node, Sum) and len(node.terms) > 1 else text


def _blocks(word):
    """Split a word of length >= 4 into blocks of length 2, the last of length 2 or 3."""
    n = len(word)
    cuts = list(range(0, n - 3, 2)) if n % 2 else list(range(0, n - 2, 2))
    blocks = [word[i:i + 2] for i in cuts]
    blocks.append(word[cuts[-1] + 2:] if cuts else word)
    return blocks


def rewrite_member(spec: GenerationSpec, genset: GeneratingSet, p: Polynomial):
    """Express a member ``p`` of ``B`` through ``genset`` by induction on degree."""
    rep = spec.rep
    if p.unital or p.alphabet != rep.alphabet:
        raise TypeError("expected a polynomial in K<X>")
    if not is_member(rep, p):
        raise ValueError(f"{p} is not a member of B")
    ring, X = rep.ring, rep.alphabet
    u_index = {w: i for i, w in enumerate(genset.u_words)}
    nu = len(genset.u_part)
    terms = []
    current = p
    while current.degree() > 3:
        m = current.degree()
        step = []
        for w, c in current.sorted_terms():
            if len(w) != m:
                break
            blocks = _blocks(w)
            step.append((c, Product(tuple(Leaf(u_index[b]) for b in blocks))))
        done = evaluate(Sum(tuple(step)), genset.generators, ring, X)
        nxt = current - done
        if not nxt.degree() < m:
            raise AssertionError("rewriting step did not lower the degree")
        terms.extend(step)
        current = nxt
    linear_rest = current
    for w, c in current.sorted_terms():
        if w in u_index:  # otherwise w - gamma(w) vanished and w is Y-linear
            terms.append((c, Leaf(u_index[w])))
            linear_rest = linear_rest - genset.u_part[u_index[w]].scale(c)
    # what is left is Y-linear and lies in B: write it over Z
    if not linear_rest.is_zero():
        if not all(len(w) == 1 and w[0] in spec.y_index for w in linear_rest.terms):
            raise AssertionError("remainder is not Y-linear")
        coeffs = [linear_rest.coefficient((i,)) for i in spec.y_index]
        z_basis = genset.z_coefficients
        solver = LinearSolver(z_basis, ring, len(z_basis), len(coeffs)) if z_basis else None
        sol = solver.solve(coeffs) if solver else None
        if sol is None:
            raise AssertionError("Y-linear remainder is not in the span of Z")
        for j, c in enumerate(sol):
            if c != 0:
                terms.append((c, Leaf(nu + j)))
    if len(terms) == 1 and terms[0][0] == ring.one:
        node = terms[0][1]
    else:
        node = Sum(tuple(terms))
    if evaluate(node, genset.generators, ring, X) != p:
        raise AssertionError("combination does not evaluate to the target")
    return node
