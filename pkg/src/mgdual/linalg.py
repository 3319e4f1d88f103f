"""Exact linear algebra over the rationals.

Matrices are plain lists of rows whose entries are ``fractions.Fraction`` (ints
are accepted on input).  Every subspace is kept in reduced row echelon form so
that two equal subspaces have identical representations; equality, containment
and memo lookups are then plain comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AmbientMismatch, DimensionMismatch

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_rows(matrix, ncols=None):
    rows = [[Fraction(x) for x in row] for row in matrix]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch(f"ragged matrix: expected {ncols} columns, got {len(row)}")
    return rows, ncols


def _rref_inplace(rows, ncols):
    """Reduce ``rows`` in place; returns (nonzero rows, pivot columns)."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        src = None
        for i in range(r, nrows):
            if rows[i][c]:
                src = i
                break
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = 1 / lead
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c + 1, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                row[c] = _ZERO
                for j in nz:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    del rows[r:]
    return rows, pivots


def rref(matrix, ncols=None):
    """Reduced row echelon form with zero rows dropped.

    >>> rref([[2, 4], [1, 2]])
    [[Fraction(1, 1), Fraction(2, 1)]]
    """
    rows, ncols = _as_rows(matrix, ncols)
    rows, _ = _rref_inplace(rows, ncols)
    return rows


def rank(matrix, ncols=None) -> int:
    return len(rref(matrix, ncols))


def _kernel_rows(rows, pivots, ncols):
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row, p in zip(rows, pivots):
            if row[f]:
                v[p] = -row[f]
        out.append(v)
    return out


@dataclass(frozen=True)
class Subspace:
    """A subspace of the span of ``basis``, stored as canonical RREF rows.

    ``basis`` labels the coordinates (exponent vectors for dual spaces, plain
    integers for anonymous coordinate spaces).
    """

    basis: tuple
    rows: tuple

    @classmethod
    def span(cls, basis, vectors):
        basis = tuple(basis)
        rows, n = _as_rows(vectors, len(basis))
        rows, _ = _rref_inplace(rows, n)
        return cls(basis, tuple(tuple(r) for r in rows))

    @classmethod
    def zero(cls, basis):
        return cls(tuple(basis), ())

    @classmethod
    def full(cls, basis):
        basis = tuple(basis)
        n = len(basis)
        rows = tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        return cls(basis, rows)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def ambient_dim(self) -> int:
        return len(self.basis)

    def is_full(self) -> bool:
        return len(self.rows) == len(self.basis)

    def pivots(self):
        return [next(j for j, x in enumerate(r) if x) for r in self.rows]

    def contains_vector(self, vec) -> bool:
        vec = [Fraction(x) for x in vec]
        if len(vec) != len(self.basis):
            raise DimensionMismatch("vector length does not match ambient dimension")
        for row, p in zip(self.rows, self.pivots()):
            f = vec[p]
            if f:
                for j, x in enumerate(row):
                    if x:
                        vec[j] -= f * x
        return not any(vec)

    def issubset(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(other.contains_vector(r) for r in self.rows)

    def as_dicts(self):
        """Rows as sparse ``{coordinate label: coefficient}`` maps."""
        return [{b: x for b, x in zip(self.basis, row) if x} for row in self.rows]

    def reindexed(self, basis) -> "Subspace":
        """Express the same vectors in a different ordering/superset of coordinates."""
        pos = {b: i for i, b in enumerate(basis)}
        vecs = []
        for d in self.as_dicts():
            v = [_ZERO] * len(basis)
            for b, x in d.items():
                v[pos[b]] = x
            vecs.append(v)
        return Subspace.span(basis, vecs)


def _check_ambient(u: Subspace, v: Subspace):
    if u.basis != v.basis:
        raise AmbientMismatch("subspaces live in different coordinate systems")


def kernel(matrix, ncols=None, basis=None) -> Subspace:
    """Right null space ``{x : M x = 0}`` as a canonical subspace."""
    rows, ncols = _as_rows(matrix, ncols)
    if basis is None:
        basis = tuple(range(ncols))
    elif len(basis) != ncols:
        raise DimensionMismatch("basis labels do not match the number of columns")
    rows, pivots = _rref_inplace(rows, ncols)
    return Subspace.span(basis, _kernel_rows(rows, pivots, ncols))


def annihilator(u: Subspace):
    """Rows spanning ``{q : q . v = 0 for all v in u}``."""
    n = len(u.basis)
    rows = [list(r) for r in u.rows]
    rows, pivots = _rref_inplace(rows, n)
    return _kernel_rows(rows, pivots, n)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    return Subspace.span(u.basis, list(u.rows) + list(v.rows))


def subspace_intersect(u: Subspace, v: Subspace) -> Subspace:
    _check_ambient(u, v)
    if u.is_full():
        return v
    if v.is_full():
        return u
    constraints = annihilator(u) + annihilator(v)
    return kernel(constraints, len(u.basis), u.basis)


def preimage(map_matrix: Sequence[Sequence], v: Subspace, domain_basis=None) -> Subspace:
    """``{x : map_matrix @ x in v}`` for an r x n matrix and a subspace of the codomain."""
    rows, _ = _as_rows(map_matrix, None)
    r = len(rows)
    if r != len(v.basis):
        raise DimensionMismatch(f"map has {r} rows but the target space has dimension {len(v.basis)}")
    n = len(rows[0]) if rows else (len(domain_basis) if domain_basis is not None else 0)
    if domain_basis is None:
        domain_basis = tuple(range(n))
    if len(domain_basis) != n:
        raise DimensionMismatch("domain basis does not match the number of map columns")
    q = annihilator(v)
    composed = [[sum((qi * rows[i][j] for i, qi in enumerate(qrow) if qi), _ZERO) for j in range(n)] for qrow in q]
    return kernel(composed, n, domain_basis)
