"""Named representations used by the tests, demos and golden documents, plus
a generator of random valid cyclic module representations.

Cyclic module fixtures
    ``AUG1``   kernel of the coefficient-sum character on QQ<x>
    ``ZEVEN``  polynomials over ZZ<x> with even coefficient sum
    ``RNT``    a right ideal of QQ<x,y> that is not two-sided
    ``AUG1_F2``, ``AUG2_F2``  augmentation ideals over GF(2)
    ``LAST_F5`` classes given by the last letter, over GF(5)

Algebra fixtures are small structure-constant algebras (truncated free
algebras, 2x2 matrices, cyclic group algebras, integer lattices).
"""

from __future__ import annotations

import random
from math import comb

from .free_algebra import Alphabet, Polynomial, parse_poly
from .quotient_rep import AlgebraRep, CyclicModuleRep
from .rings import GF, QQ, ZZ, Ring

F2, F5 = GF(2), GF(5)


def _aug(ring, names=("x",)):
    X = Alphabet(names)
    action = {x: [[0, 1], [0, 1]] for x in names}
    return CyclicModuleRep(ring, X, ["1", names[0]], {names[0]: names[0]}, [], action)


def aug1() -> CyclicModuleRep:
    return _aug(QQ)


def zeven() -> CyclicModuleRep:
    X = Alphabet(["x"])
    return CyclicModuleRep(ZZ, X, ["1", "x"], {"x": "x"}, [[0, 2]], {"x": [[0, 1], [0, 1]]})


def rnt() -> CyclicModuleRep:
    """``R = {p : class(p) = 0}`` with ``class(y) = 0`` but ``class(x*y) != 0``."""
    X = Alphabet(["x", "y"])
    return CyclicModuleRep(
        QQ, X, ["1", "x", "xy"], {"x": "x", "xy": "x*y"}, [],
        {"x": [[0, 1, 0], [0, 0, 0], [0, 1, 0]], "y": [[0, 0, 0], [0, 0, 1], [0, 0, 1]]},
    )


def aug1_f2() -> CyclicModuleRep:
    return _aug(F2)


def aug2_f2() -> CyclicModuleRep:
    return _aug(F2, ("x", "y"))


def last_f5() -> CyclicModuleRep:
    X = Alphabet(["x", "y"])
    return CyclicModuleRep(
        F5, X, ["1", "x", "y"], {"x": "x", "y": "y"}, [],
        {"x": [[0, 1, 0]] * 3, "y": [[0, 0, 1]] * 3},
    )


CYCLIC_FIXTURES = {
    "AUG1": aug1,
    "ZEVEN": zeven,
    "RNT": rnt,
    "AUG1_F2": aug1_f2,
    "AUG2_F2": aug2_f2,
    "LAST_F5": last_f5,
}


def random_cyclic_rep(rng: random.Random, ring: Ring, n_vars: int | None = None, k: int | None = None) -> CyclicModuleRep:
    """A random valid representation built from a spanning tree of representatives.

    Basis label ``b_j`` hangs off an earlier label through one variable; the
    representative is the path word.  All other transitions map sparsely into
    the span of non-identity basis vectors whose representatives are at most
    one letter longer than the source's, so the result is degree-compatible.  Over ZZ the relation
    lattice is either zero or ``d`` times that span.
    """
    n = n_vars or rng.randint(1, 3)
    k = k if k is not None else rng.randint(1, 3)
    names = ["x", "y", "z"][:n]
    X = Alphabet(names)
    labels = ["1"] + [f"b{j}" for j in range(1, k + 1)]
    words = {0: ()}
    tree = {}
    for j in range(1, k + 1):
        a = rng.randrange(j)
        x = rng.randrange(n)
        while (a, x) in tree:
            a, x = rng.randrange(j), rng.randrange(n)
        tree[(a, x)] = j
        words[j] = words[a] + (x,)
    action = {}
    for xi, x in enumerate(names):
        m = []
        for a in range(k + 1):
            row = [0] * (k + 1)
            # targets no deeper than one step below a keep the representatives degree-compatible
            near = [c for c in range(1, k + 1) if len(words[c]) <= len(words[a]) + 1]
            if (a, xi) in tree:
                row[tree[(a, xi)]] = 1
            elif near:
                roll = rng.random()
                if roll < 0.5:
                    row[rng.choice(near)] = rng.choice([1, 1, 2, -1])
                elif roll < 0.65:
                    for c in rng.sample(near, min(2, len(near))):
                        row[c] = rng.choice([1, -1, 2])
            m.append([ring(v) for v in row])
        action[x] = m
    reps = {labels[j]: Polynomial.monomial(ring, X, words[j]) for j in range(1, k + 1)}
    relations = []
    if ring == ZZ and rng.random() < 0.5:
        d = rng.choice([2, 3])
        relations = [[d if c == j else 0 for c in range(k + 1)] for j in range(1, k + 1)]
    return CyclicModuleRep(ring, X, labels, reps, relations, action)


def random_corpus(seed: int = 2024, count: int = 24) -> list:
    """``count`` random representations cycling through ZZ, QQ, GF(2) and GF(5)."""
    rng = random.Random(seed)
    rings = [ZZ, QQ, F2, F5]
    return [random_cyclic_rep(rng, rings[i % 4]) for i in range(count)]


# ---------------------------------------------------------------------------
# Structure-constant algebras
# ---------------------------------------------------------------------------

def _table(rank, products):
    """Structure constants from ``{(i, j): {l: c}}`` (missing products are zero)."""
    sc = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    for (i, j), vec in products.items():
        for l, c in vec.items():
            sc[i][j][l] = c
    return sc


def sub2(ring: Ring = QQ) -> AlgebraRep:
    """``Q = span(t, t^2)``, ``pi(x) = t``, ``S = <t^2>``: ``B = span(x^2, x^3, ...)``."""
    return AlgebraRep(ring, Alphabet(["x"]), 2, _table(2, {(0, 0): {1: 1}}), {"x": [1, 0]}, [[0, 1]], labels=["t", "t2"])


def trunc2(ring: Ring = QQ) -> AlgebraRep:
    """``K<x,y>`` modulo words of length 3, with ``S`` the quadratic part."""
    words = [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
    idx = {w: i for i, w in enumerate(words)}
    products = {}
    for i, a in enumerate(words):
        for j, b in enumerate(words):
            if a + b in idx:
                products[(i, j)] = {idx[a + b]: 1}
    S = [[1 if i == j else 0 for i in range(6)] for j in range(2, 6)]
    return AlgebraRep(ring, Alphabet(["x", "y"]), 6, _table(6, products), {"x": [1, 0, 0, 0, 0, 0], "y": [0, 1, 0, 0, 0, 0]}, S,
                      labels=["x", "y", "xx", "xy", "yx", "yy"])


def _matrix_units():
    # basis e11, e12, e21, e22; e_ij e_kl = delta_jk e_il
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    products = {}
    for a, (i, j) in enumerate(units):
        for b, (k, l) in enumerate(units):
            if j == k:
                products[(a, b)] = {units.index((i, l)): 1}
    return _table(4, products)


def m2_upper(ring: Ring = QQ) -> AlgebraRep:
    """``M_2(K)`` with ``pi(x) = e12``, ``pi(y) = e21``; ``S`` = upper triangular matrices."""
    return AlgebraRep(ring, Alphabet(["x", "y"]), 4, _matrix_units(), {"x": [0, 1, 0, 0], "y": [0, 0, 1, 0]},
                      [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1]], labels=["e11", "e12", "e21", "e22"])


def m2_diag(ring: Ring = ZZ) -> AlgebraRep:
    """``M_2(K)`` with ``S`` the diagonal matrices."""
    return AlgebraRep(ring, Alphabet(["x", "y"]), 4, _matrix_units(), {"x": [0, 1, 0, 0], "y": [0, 0, 1, 0]},
                      [[1, 0, 0, 0], [0, 0, 0, 1]], labels=["e11", "e12", "e21", "e22"])


def _cyclic_group(n):
    return _table(n, {(i, j): {(i + j) % n: 1} for i in range(n) for j in range(n)})


def c3_q(ring: Ring = QQ) -> AlgebraRep:
    """Group algebra of ``C_3`` with ``pi(x) = g`` and ``S = span(1, g + g^2)``."""
    return AlgebraRep(ring, Alphabet(["x"]), 3, _cyclic_group(3), {"x": [0, 1, 0]}, [[1, 0, 0], [0, 1, 1]],
                      labels=["1", "g", "g2"])


def c3_scalars_f2() -> AlgebraRep:
    """Group algebra of ``C_3`` over GF(2) with ``pi(x) = g``, ``pi(y) = g^2`` and ``S = span(1)``."""
    return AlgebraRep(F2, Alphabet(["x", "y"]), 3, _cyclic_group(3), {"x": [0, 1, 0], "y": [0, 0, 1]}, [[1, 0, 0]],
                      labels=["1", "g", "g2"])


def c2_z() -> AlgebraRep:
    """``ZZ[C_2]``, ``pi(x) = g``, ``S = <1 + g>`` (an ideal)."""
    return AlgebraRep(ZZ, Alphabet(["x"]), 2, _cyclic_group(2), {"x": [0, 1]}, [[1, 1]], labels=["1", "g"])


def z_even() -> AlgebraRep:
    """``Q = ZZ``, ``pi(x) = 1``, ``S = 2ZZ``."""
    return AlgebraRep(ZZ, Alphabet(["x"]), 1, [[[1]]], {"x": [1]}, [[2]], labels=["e"])


def z6_mod() -> AlgebraRep:
    """``Q = ZZ/6``, ``pi(x) = 1``, ``S = <2>``."""
    return AlgebraRep(ZZ, Alphabet(["x"]), 1, [[[1]]], {"x": [1]}, [[2]], relations=[[6]], labels=["e"])


def f2_sum() -> AlgebraRep:
    """``Q = GF(2)``, ``pi(x) = pi(y) = 1``, ``S = 0``."""
    return AlgebraRep(F2, Alphabet(["x", "y"]), 1, [[[1]]], {"x": [1], "y": [1]}, [], labels=["e"])


def t2_diag() -> AlgebraRep:
    """Upper triangular ``2x2`` matrices over QQ, ``pi(x) = e11``, ``pi(y) = e12 + e22``, ``S`` diagonal."""
    # basis e11, e12, e22
    products = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 2): {1: 1}, (2, 2): {2: 1}}
    return AlgebraRep(QQ, Alphabet(["x", "y"]), 3, _table(3, products), {"x": [1, 0, 0], "y": [0, 1, 1]},
                      [[1, 0, 0], [0, 0, 1]], labels=["e11", "e12", "e22"])


ALGEBRA_FIXTURES = {
    "SUB2": sub2,
    "TRUNC2": trunc2,
    "M2_UPPER": m2_upper,
    "M2_DIAG": m2_diag,
    "C3_Q": c3_q,
    "C3_SCALARS_F2": c3_scalars_f2,
    "C2_Z": c2_z,
    "Z_EVEN": z_even,
    "Z6_MOD": z6_mod,
    "F2_SUM": f2_sum,
    "T2_DIAG": t2_diag,
}

# Variables whose images span Q modulo S, per algebra fixture.
GENERATION_Y = {
    "SUB2": ["x"],
    "TRUNC2": ["x", "y"],
    "M2_UPPER": ["y"],
    "M2_DIAG": ["x", "y"],
    "C3_Q": ["x"],
    "C3_SCALARS_F2": ["x", "y"],
    "C2_Z": ["x"],
    "Z_EVEN": ["x"],
    "Z6_MOD": ["x"],
    "F2_SUM": ["x"],
    "T2_DIAG": ["y"],
}


# ---------------------------------------------------------------------------
# Semigroup ring and Lie bracket regressions
# ---------------------------------------------------------------------------

SEMIGROUP_WORDS = {"v": "b*a", "w": "b*a^2", "x": "a^3", "y": "a^2*c", "z": "a*c"}


def semigroup_relation(n: int, alphabet: Alphabet, ring: Ring = ZZ) -> Polynomial:
    """``v x^n y - w x^n z`` over ``alphabet``, which must contain ``v, w, x, y, z``."""
    text = "v*y - w*z" if n == 0 else f"v*x^{n}*y - w*x^{n}*z"
    return parse_poly(text, alphabet, ring)


def semigroup_substitution(ring: Ring = ZZ):
    """The substitution ``{v,w,x,y,z} -> ZZ<a,b,c>`` realising the subsemigroup generators."""
    from .free_algebra import AlgebraHom

    src = Alphabet(["v", "w", "x", "y", "z"])
    tgt = Alphabet(["a", "b", "c"])
    images = {k: parse_poly(t, tgt, ring) for k, t in SEMIGROUP_WORDS.items()}
    return src, tgt, AlgebraHom(src, tgt, images, ring)


def lie_bracket(n: int, ring: Ring = ZZ) -> Polynomial:
    """Left-normed ``[...[[y, x], x], ..., x]`` with ``n`` brackets, expanded in ``ZZ<x,y>``."""
    X = Alphabet(["x", "y"])
    x = Polynomial.variable(ring, X, "x")
    acc = Polynomial.variable(ring, X, "y")
    for _ in range(n):
        acc = acc * x - x * acc
    return acc


def lie_expansion_stated(n: int, ring: Ring = ZZ) -> Polynomial:
    """``x^n y + sum_{i=1..n} (-1)^(n-i) C(n,i) x^(n-i) y x^i``."""
    X = Alphabet(["x", "y"])
    terms = {(0,) * n + (1,): 1}
    for i in range(1, n + 1):
        w = (0,) * (n - i) + (1,) + (0,) * i
        terms[w] = terms.get(w, 0) + (-1) ** (n - i) * comb(n, i)
    return Polynomial(ring, X, terms)


def lie_expansion_corrected(n: int, ring: Ring = ZZ) -> Polynomial:
    """``sum_{i=0..n} (-1)^(n-i) C(n,i) x^(n-i) y x^i``: the leading coefficient carries ``(-1)^n``."""
    X = Alphabet(["x", "y"])
    terms = {}
    for i in range(n + 1):
        w = (0,) * (n - i) + (1,) + (0,) * i
        terms[w] = (-1) ** (n - i) * comb(n, i)
    return Polynomial(ring, X, terms)
