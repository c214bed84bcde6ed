"""Exact module computations over ZZ, QQ and GF(p).

Matrices are sequences of rows and every map acts on row vectors from the
left (``c -> c @ m``).  Over ZZ the canonical form of a row lattice is the
row Hermite normal form (positive pivots, entries above a pivot reduced into
``[0, pivot)``); over a field the same routine yields the reduced row echelon
form.  Everything downstream relies on these two conventions being fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rings import Ring

Vector = tuple
Matrix = tuple


def _rows(m, ring: Ring, ncols: int | None = None) -> list[list]:
    rows = [[ring(a) for a in r] for r in m]
    if ncols is not None:
        for r in rows:
            if len(r) != ncols:
                raise ValueError(f"row of length {len(r)} in matrix with {ncols} columns")
    elif rows:
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
    return rows


def _ncols(m, ncols):
    if ncols is not None:
        return ncols
    if not m:
        raise ValueError("column count of an empty matrix must be given")
    return len(m[0])


def identity(n: int, ring: Ring) -> Matrix:
    return tuple(tuple(ring.one if i == j else ring.zero for j in range(n)) for i in range(n))


def zeros(r: int, c: int, ring: Ring) -> Matrix:
    return tuple((ring.zero,) * c for _ in range(r))


def mat_mul(a, b, ring: Ring, inner: int | None = None) -> Matrix:
    if not a:
        return ()
    if not b:
        n = 0
    else:
        n = len(b[0])
    out = []
    for row in a:
        acc = [ring.zero] * n
        for k, x in enumerate(row):
            if x == 0:
                continue
            for j, y in enumerate(b[k]):
                if y != 0:
                    acc[j] = ring.add(acc[j], ring.mul(x, y))
        out.append(tuple(acc))
    return tuple(out)


def vec_mat(v, m, ring: Ring, ncols: int) -> Vector:
    acc = [ring.zero] * ncols
    for k, x in enumerate(v):
        if x == 0:
            continue
        for j, y in enumerate(m[k]):
            if y != 0:
                acc[j] = ring.add(acc[j], ring.mul(x, y))
    return tuple(acc)


def vec_add(a, b, ring: Ring) -> Vector:
    return tuple(ring.add(x, y) for x, y in zip(a, b))


def vec_sub(a, b, ring: Ring) -> Vector:
    return tuple(ring.sub(x, y) for x, y in zip(a, b))


def vec_scale(c, v, ring: Ring) -> Vector:
    return tuple(ring.mul(c, x) for x in v)


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)


def det(m, ring: Ring):
    """Determinant by fraction-free (Bareiss) elimination over ZZ, plain elimination over fields."""
    a = [list(r) for r in _rows(m, ring)]
    n = len(a)
    if n == 0:
        return ring.one
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    if ring.is_field:
        d = ring.one
        for i in range(n):
            piv = next((r for r in range(i, n) if a[r][i] != 0), None)
            if piv is None:
                return ring.zero
            if piv != i:
                a[i], a[piv] = a[piv], a[i]
                sign = -sign
            d = ring.mul(d, a[i][i])
            inv = ring.inv(a[i][i])
            for r in range(i + 1, n):
                f = ring.mul(a[r][i], inv)
                if f != 0:
                    a[r] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(a[r], a[i])]
        return d if sign == 1 else ring.neg(d)
    prev = 1
    for i in range(n - 1):
        piv = next((r for r in range(i, n) if a[r][i] != 0), None)
        if piv is None:
            return 0
        if piv != i:
            a[i], a[piv] = a[piv], a[i]
            sign = -sign
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Hermite normal form
# ---------------------------------------------------------------------------

def _hnf_inplace(a: list[list], u: list[list] | None, ring: Ring, ncols: int) -> list[int]:
    """Row-reduce ``a`` (and track the transform in ``u``); return pivot columns."""
    nrows = len(a)
    r = 0
    pivots = []
    for j in range(ncols):
        if r == nrows:
            break
        while True:
            nz = [i for i in range(r, nrows) if a[i][j] != 0]
            if not nz:
                break
            best = min(nz, key=lambda i: (ring.size(a[i][j]), i))
            if best != r:
                a[r], a[best] = a[best], a[r]
                if u is not None:
                    u[r], u[best] = u[best], u[r]
            p = a[r][j]
            done = True
            for i in range(r + 1, nrows):
                x = a[i][j]
                if x == 0:
                    continue
                q, rem = ring.divmod(x, p)
                a[i] = [ring.sub(s, ring.mul(q, t)) for s, t in zip(a[i], a[r])]
                if u is not None:
                    u[i] = [ring.sub(s, ring.mul(q, t)) for s, t in zip(u[i], u[r])]
                if rem != 0:
                    done = False
            if done:
                break
        if r < nrows and a[r][j] != 0:
            unit = ring.normal_unit(a[r][j])
            if unit != ring.one:
                a[r] = [ring.mul(unit, x) for x in a[r]]
                if u is not None:
                    u[r] = [ring.mul(unit, x) for x in u[r]]
            p = a[r][j]
            for i in range(r):
                if a[i][j] == 0:
                    continue
                q, _ = ring.divmod(a[i][j], p)
                if q != 0:
                    a[i] = [ring.sub(s, ring.mul(q, t)) for s, t in zip(a[i], a[r])]
                    if u is not None:
                        u[i] = [ring.sub(s, ring.mul(q, t)) for s, t in zip(u[i], u[r])]
            pivots.append(j)
            r += 1
    return pivots


def hnf(m, ring: Ring, ncols: int | None = None) -> tuple[Matrix, Matrix]:
    """Row Hermite normal form ``h`` of ``m`` with unimodular ``u``, ``u @ m == h``.

    Over a field this is the reduced row echelon form and ``u`` records the row
    operations.  Zero rows of ``h`` come last.
    """
    ncols = _ncols(m, ncols)
    a = _rows(m, ring, ncols)
    u = [list(r) for r in identity(len(a), ring)]
    _hnf_inplace(a, u, ring, ncols)
    return tuple(map(tuple, a)), tuple(map(tuple, u))


def echelon_basis(m, ring: Ring, ncols: int) -> tuple[Matrix, list[int]]:
    """Nonzero rows of the canonical form of ``m`` and their pivot columns."""
    a = _rows(m, ring, ncols)
    pivots = _hnf_inplace(a, None, ring, ncols)
    return tuple(tuple(r) for r in a[: len(pivots)]), pivots


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def snf(m, ring: Ring, ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: ``u @ m @ v == s`` with ``d1 | d2 | ...`` on the diagonal."""
    ncols = _ncols(m, ncols)
    a = _rows(m, ring, ncols)
    nrows = len(a)
    u = [list(r) for r in identity(nrows, ring)]
    v = [list(r) for r in identity(ncols, ring)]

    def row_op(i, k, q):  # row i -= q * row k
        a[i] = [ring.sub(x, ring.mul(q, y)) for x, y in zip(a[i], a[k])]
        u[i] = [ring.sub(x, ring.mul(q, y)) for x, y in zip(u[i], u[k])]

    def col_op(j, k, q):  # col j -= q * col k
        for row in a:
            row[j] = ring.sub(row[j], ring.mul(q, row[k]))
        for row in v:
            row[j] = ring.sub(row[j], ring.mul(q, row[k]))

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    for t in range(min(nrows, ncols)):
        while True:
            cands = [(ring.size(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j] != 0]
            if not cands:
                break
            _, i, j = min(cands)
            if i != t:
                a[t], a[i] = a[i], a[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                swap_cols(t, j)
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t] != 0:
                    q, rem = ring.divmod(a[i][t], p)
                    row_op(i, t, q)
                    if rem != 0:
                        clean = False
            for j in range(t + 1, ncols):
                if a[t][j] != 0:
                    q, rem = ring.divmod(a[t][j], p)
                    col_op(j, t, q)
                    if rem != 0:
                        clean = False
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) for j in range(t + 1, ncols) if ring.divmod(a[i][j], p)[1] != 0),
                None,
            )
            if bad is None:
                break
            a[t] = [ring.add(x, y) for x, y in zip(a[t], a[bad])]
            u[t] = [ring.add(x, y) for x, y in zip(u[t], u[bad])]
        if a[t][t] == 0:
            break
        unit = ring.normal_unit(a[t][t])
        if unit != ring.one:
            a[t] = [ring.mul(unit, x) for x in a[t]]
            u[t] = [ring.mul(unit, x) for x in u[t]]
    return tuple(map(tuple, a)), tuple(map(tuple, u)), tuple(map(tuple, v))


def inverse(m, ring: Ring) -> Matrix:
    """Inverse of an invertible (unimodular over ZZ) square matrix."""
    n = len(m)
    h, u = hnf(m, ring, n)
    if h != identity(n, ring):
        raise ValueError("matrix is not invertible over the ring")
    return u


# ---------------------------------------------------------------------------
# Submodules
# ---------------------------------------------------------------------------

class Submodule:
    """A submodule of ``ring^rank`` stored by its canonical basis.

    Two submodules compare equal exactly when they are equal as sets.
    """

    __slots__ = ("ring", "rank", "basis", "pivots", "_hash")

    def __init__(self, ring: Ring, rank: int, generators: Sequence = ()):
        basis, pivots = echelon_basis(generators, ring, rank)
        self.ring = ring
        self.rank = rank
        self.basis = basis
        self.pivots = tuple(pivots)
        self._hash = None

    @classmethod
    def zero(cls, ring: Ring, rank: int) -> "Submodule":
        return cls(ring, rank, ())

    @classmethod
    def full(cls, ring: Ring, rank: int) -> "Submodule":
        return cls(ring, rank, identity(rank, ring))

    @property
    def generators(self) -> Matrix:
        return self.basis

    def __len__(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.ring == other.ring
            and self.rank == other.rank
            and self.basis == other.basis
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rank, self.basis))
        return self._hash

    def __repr__(self):
        return f"Submodule({self.ring!r}, rank={self.rank}, basis={list(map(list, self.basis))})"

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.basis == identity(self.rank, self.ring)

    def reduce(self, v) -> Vector:
        """Canonical representative of ``v`` modulo this submodule."""
        ring = self.ring
        if len(v) != self.rank:
            raise ValueError(f"vector of length {len(v)} in ambient rank {self.rank}")
        w = [ring(x) for x in v]
        for row, j in zip(self.basis, self.pivots):
            if w[j] == 0:
                continue
            q, _ = ring.divmod(w[j], row[j])
            if q != 0:
                w = [ring.sub(x, ring.mul(q, y)) for x, y in zip(w, row)]
        return tuple(w)

    def __contains__(self, v) -> bool:
        return is_zero_vector(self.reduce(v))

    def contains(self, other: "Submodule") -> bool:
        return all(b in self for b in other.basis)

    def __add__(self, other: "Submodule") -> "Submodule":
        self._check(other)
        return Submodule(self.ring, self.rank, self.basis + other.basis)

    def intersect(self, other: "Submodule") -> "Submodule":
        return submodule_intersect(self, other)

    def _check(self, other):
        if self.ring != other.ring or self.rank != other.rank:
            raise ValueError("submodules live in different ambient modules")


def submodule_reduce(s: Submodule, v) -> tuple[Vector, bool]:
    residue = s.reduce(v)
    return residue, is_zero_vector(residue)


def kernel(m, ring: Ring, nrows: int | None = None, ncols: int | None = None) -> Submodule:
    """Left kernel ``{c : c @ m == 0}`` as a canonical submodule of ``ring^nrows``."""
    if nrows is None:
        nrows = len(m)
    if nrows == 0:
        return Submodule.zero(ring, 0)
    ncols = _ncols(m, ncols)
    h, u = hnf(m, ring, ncols)
    zero_rows = [u[i] for i in range(nrows) if is_zero_vector(h[i])]
    return Submodule(ring, nrows, zero_rows)


def submodule_intersect(a: Submodule, b: Submodule) -> Submodule:
    a._check(b)
    ring, n = a.ring, a.rank
    if a.is_zero() or b.is_zero():
        return Submodule.zero(ring, n)
    stacked = a.basis + b.basis
    k = kernel(stacked, ring, len(stacked), n)
    na = len(a.basis)
    gens = [vec_mat(c[:na], a.basis, ring, n) for c in k.basis]
    return Submodule(ring, n, gens)


class LinearSolver:
    """Canonical solutions of ``x @ m == target`` for a fixed ``m``.

    The particular solution is built by back-substitution through the Hermite
    form and then reduced modulo the kernel, so it depends only on ``m`` and
    ``target``.
    """

    def __init__(self, m, ring: Ring, nrows: int | None = None, ncols: int | None = None):
        self.ring = ring
        self.nrows = len(m) if nrows is None else nrows
        self.ncols = _ncols(m, ncols)
        if self.nrows:
            a = _rows(m, ring, self.ncols)
            u = [list(r) for r in identity(self.nrows, ring)]
            self.pivots = _hnf_inplace(a, u, ring, self.ncols)
            self.h = a
            self.u = u
            zero_rows = [tuple(u[i]) for i in range(len(self.pivots), self.nrows)]
        else:
            self.pivots, self.h, self.u, zero_rows = [], [], [], []
        self.kernel = Submodule(ring, self.nrows, zero_rows)

    def solve(self, target) -> Vector | None:
        ring = self.ring
        if len(target) != self.ncols:
            raise ValueError("target has the wrong length")
        r = [ring(x) for x in target]
        coeffs = []
        pivot_row = {j: i for i, j in enumerate(self.pivots)}
        for j in range(self.ncols):
            if r[j] == 0:
                continue
            i = pivot_row.get(j)
            if i is None:
                return None
            q = ring.exact_div(r[j], self.h[i][j])
            if q is None:
                return None
            coeffs.append((i, q))
            r = [ring.sub(x, ring.mul(q, y)) for x, y in zip(r, self.h[i])]
        x = [ring.zero] * self.nrows
        for i, q in coeffs:
            x = [ring.add(a, ring.mul(q, b)) for a, b in zip(x, self.u[i])]
        return self.kernel.reduce(x)


def solve_linear(m, target, ring: Ring, nrows: int | None = None) -> Vector | None:
    """Canonical ``x`` with ``x @ m == target``, or ``None`` when unsolvable over the ring."""
    return LinearSolver(m, ring, nrows, len(target)).solve(target)


@dataclass(frozen=True)
class ModulePresentation:
    """``ring^rank / s`` rewritten as ``ring^generator_count / relations``.

    ``projection`` maps ambient coordinates to the new generators (row
    ``i`` is the image of the ``i``-th ambient basis vector) and ``lift``
    sends each new generator back to an ambient vector.  ``invariants`` holds
    the nonunit invariant factors, one per generator, with zero marking a
    free summand.
    """

    ring: Ring
    generator_count: int
    relation_rows: Matrix
    invariants: tuple
    projection: Matrix
    lift: Matrix

    def project(self, v) -> Vector:
        return vec_mat(v, self.projection, self.ring, self.generator_count)

    def lift_vector(self, w) -> Vector:
        return vec_mat(w, self.lift, self.ring, len(self.projection))

    @property
    def relations(self) -> Submodule:
        return Submodule(self.ring, self.generator_count, self.relation_rows)


def quotient_presentation(s: Submodule) -> ModulePresentation:
    ring, n = s.ring, s.rank
    if s.is_zero():
        ident = identity(n, ring)
        return ModulePresentation(ring, n, (), (ring.zero,) * n, ident, ident)
    d, _, v = snf(s.basis, ring, n)
    diag = [d[i][i] if i < len(d) else ring.zero for i in range(n)]
    keep = [i for i in range(n) if not ring.is_unit(diag[i])]
    vinv = inverse(v, ring)
    projection = tuple(tuple(row[i] for i in keep) for row in v)
    lift = tuple(vinv[i] for i in keep)
    rels = []
    for pos, i in enumerate(keep):
        if diag[i] != 0:
            row = [ring.zero] * len(keep)
            row[pos] = diag[i]
            rels.append(tuple(row))
    invariants = tuple(diag[i] for i in keep)
    return ModulePresentation(ring, len(keep), tuple(rels), invariants, projection, lift)


def relations_among(generators, ring: Ring, rank: int) -> Submodule:
    """Relations among a (possibly redundant) generating list: the left kernel of its matrix."""
    return kernel(generators, ring, len(generators), rank)


# ---------------------------------------------------------------------------
# Sparse span solving
# ---------------------------------------------------------------------------

class SparseEchelon:
    """Incrementally built echelon basis of a row span of sparse vectors.

    Vectors are dictionaries ``{column: value}`` whose columns are integers;
    every inserted row may carry a tag, and the basis remembers how each of
    its vectors combines the tagged inputs.  Over ZZ colliding pivots are
    merged by extended gcd steps, so the basis always spans the same lattice
    as the inserted rows.
    """

    def __init__(self, ring: Ring, track: bool = True):
        self.ring = ring
        self.track = track
        self.basis: dict[int, tuple[dict, dict]] = {}

    def _axpy(self, v, w, q):  # v -= q * w
        ring = self.ring
        for c, x in w.items():
            y = ring.sub(v.get(c, ring.zero), ring.mul(q, x))
            if y == 0:
                v.pop(c, None)
            else:
                v[c] = y

    def add(self, row: dict, tag=None) -> bool:
        """Insert a row; return whether the span grew."""
        ring = self.ring
        v = {c: x for c, x in row.items() if x != 0}
        combo = {tag: ring.one} if self.track else {}
        grew = False
        while v:
            lead = min(v)
            if lead not in self.basis:
                self.basis[lead] = (v, combo)
                return True
            b, bc = self.basis[lead]
            a, p = v[lead], b[lead]
            q = ring.exact_div(a, p)
            if q is not None:
                self._axpy(v, b, q)
                self._axpy(combo, bc, q)
                continue
            g, s, t = ring.gcdex(a, p)
            nb, nbc, rv, rvc = {}, {}, {}, {}
            self._axpy(nb, v, ring.neg(s))
            self._axpy(nb, b, ring.neg(t))
            self._axpy(nbc, combo, ring.neg(s))
            self._axpy(nbc, bc, ring.neg(t))
            self._axpy(rv, v, ring.neg(p // g))
            self._axpy(rv, b, a // g)
            self._axpy(rvc, combo, ring.neg(p // g))
            self._axpy(rvc, bc, a // g)
            self.basis[lead] = (nb, nbc)
            v, combo = rv, rvc
            grew = True
        return grew

    def solve(self, target: dict) -> dict | None:
        """Tag coefficients expressing ``target`` in the span, or ``None``."""
        ring = self.ring
        t = {c: x for c, x in target.items() if x != 0}
        sol: dict = {}
        while t:
            lead = min(t)
            if lead not in self.basis:
                return None
            b, bc = self.basis[lead]
            q = ring.exact_div(t[lead], b[lead])
            if q is None:
                return None
            self._axpy(t, b, q)
            self._axpy(sol, bc, ring.neg(q))
        return sol

    def __contains__(self, target: dict) -> bool:
        ring = self.ring
        t = {c: x for c, x in target.items() if x != 0}
        while t:
            lead = min(t)
            if lead not in self.basis:
                return False
            b, _ = self.basis[lead]
            q = ring.exact_div(t[lead], b[lead])
            if q is None:
                return False
            self._axpy(t, b, q)
        return True

    def __len__(self):
        return len(self.basis)


def span_solve(rows: Sequence[dict], target: dict, ring: Ring, key=None) -> list | None:
    """Find coefficients ``c`` with ``sum(c[i] * rows[i]) == target`` over the ring.

    Rows and target are sparse vectors ``{column: value}``; columns may be any
    hashable sortable by ``key``.  Returns ``None`` when the target is not in
    the row span.
    """
    cols = set(target)
    for r in rows:
        cols.update(r)
    order = {c: i for i, c in enumerate(sorted(cols, key=key))}
    ech = SparseEchelon(ring)
    for idx, row in enumerate(rows):
        ech.add({order[c]: ring(x) for c, x in row.items()}, idx)
    sol = ech.solve({order[c]: ring(x) for c, x in target.items()})
    if sol is None:
        return None
    return [sol.get(i, ring.zero) for i in range(len(rows))]
