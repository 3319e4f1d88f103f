"""Z^k-gradings of a polynomial ring and the lattice combinatorics they induce.

A grading is given by an integer matrix ``A`` whose i-th column is the degree
of the i-th variable, together with a matrix ``B`` of inward facet normals of
the weight cone, so that a degree ``m`` is attained by some monomial exactly
when ``B @ m >= 0``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DimensionMismatch, InvalidB, NotInSemigroup, NotPointed
from .linalg import _kernel_rows, _rref_inplace, rank


@dataclass(frozen=True)
class Grading:
    var_names: tuple
    A: tuple  # k rows of N ints
    B: tuple  # p rows of k ints

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def rank(self) -> int:
        return len(self.A)

    def column(self, i) -> tuple:
        return tuple(row[i] for row in self.A)

    @property
    def columns(self):
        return tuple(self.column(i) for i in range(self.nvars))

    def level(self, m) -> int:
        """Sum of the facet inequalities; strictly positive on nonzero weights."""
        return sum(sum(b * x for b, x in zip(row, m)) for row in self.B)

    def __str__(self):
        degs = ", ".join(f"deg {v} = {_fmt(self.column(i))}" for i, v in enumerate(self.var_names))
        return f"Z^{self.rank}-grading ({degs})"


def _fmt(m):
    return str(m[0]) if len(m) == 1 else "(" + ",".join(str(x) for x in m) + ")"


def _primitive(vec):
    den = math.lcm(*(Fraction(x).denominator for x in vec))
    ints = [int(Fraction(x) * den) for x in vec]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _facet_normals(columns, k):
    if k == 1:
        out = set()
        for sign in (1, -1):
            if all(sign * c[0] >= 0 for c in columns):
                out.add((sign,))
        return sorted(out, reverse=True)
    normals = set()
    for subset in itertools.combinations(columns, k - 1):
        rows = [[Fraction(x) for x in c] for c in subset]
        rows, piv = _rref_inplace(rows, k)
        if len(piv) != k - 1:
            continue
        (normal,) = _kernel_rows(rows, piv, k)
        normal = _primitive(normal)
        for cand in (normal, tuple(-x for x in normal)):
            if all(_dot(cand, c) >= 0 for c in columns):
                normals.add(cand)
    return sorted(normals, reverse=True)


def validate_grading(A, B=None, var_names=None) -> Grading:
    """Check that ``A`` defines a positive grading and attach a facet matrix.

    When ``B`` is omitted the facets of the cone spanned by the columns of
    ``A`` are found by brute force over (k-1)-subsets of columns, which is
    fine for the small ranks met in practice.
    """
    A = tuple(tuple(int(x) for x in row) for row in A)
    if not A or not A[0]:
        raise DimensionMismatch("grading matrix must be nonempty")
    k, n = len(A), len(A[0])
    if any(len(row) != n for row in A):
        raise DimensionMismatch("grading matrix rows have different lengths")
    if var_names is None:
        var_names = tuple(f"x{i + 1}" for i in range(n))
    var_names = tuple(var_names)
    if len(var_names) != n:
        raise DimensionMismatch(f"{len(var_names)} variable names for {n} grading columns")
    if not any(any(row) for row in A):
        raise NotPointed("grading matrix is zero")
    columns = [tuple(row[i] for row in A) for i in range(n)]
    for name, col in zip(var_names, columns):
        if not any(col):
            raise NotPointed(f"variable {name} has degree 0, so degree-0 polynomials are not constants")
    if rank(A, n) < k:
        raise NotPointed("grading matrix does not have full row rank; the weight cone is not full-dimensional")

    if B is None:
        B = _facet_normals(columns, k)
        if not B or rank(B, k) < k:
            raise NotPointed("weight cone contains a line: some nonconstant polynomial has degree 0")
        B = tuple(B)
    else:
        B = tuple(tuple(int(x) for x in row) for row in B)
        if not B or any(len(row) != k for row in B):
            raise DimensionMismatch(f"cone matrix must have {k} columns")
        for name, col in zip(var_names, columns):
            if any(_dot(row, col) < 0 for row in B):
                raise InvalidB(f"cone inequalities exclude deg {name} = {_fmt(col)}")
        if rank(B, k) < k:
            raise InvalidB("cone matrix does not describe a pointed cone (rank deficient)")
    g = Grading(var_names, A, B)
    for col in columns:
        if g.level(col) <= 0:
            raise NotPointed("weight cone is not pointed on the variable degrees")
    return g


def degree_of(g: Grading, alpha) -> tuple:
    if len(alpha) != g.nvars:
        raise DimensionMismatch(f"exponent vector of length {len(alpha)} in {g.nvars} variables")
    return tuple(sum(a * x for a, x in zip(row, alpha)) for row in g.A)


def in_weight_semigroup(g: Grading, m) -> bool:
    return all(_dot(row, m) >= 0 for row in g.B)


def _check_degree(g, m):
    m = tuple(int(x) for x in m)
    if len(m) != g.rank:
        raise DimensionMismatch(f"degree {m} has length {len(m)}, grading rank is {g.rank}")
    return m


def monomials_of_degree(g: Grading, m) -> tuple:
    """All exponent vectors of degree ``m`` in descending graded-lex order."""
    return _monomials(g, _check_degree(g, m))


@lru_cache(maxsize=4096)
def _monomials(g, m):
    if not in_weight_semigroup(g, m):
        return ()
    n = g.nvars
    cols = g.columns
    out = []
    alpha = [0] * n

    def rec(i, rest):
        if i == n - 1:
            col = cols[i]
            # rest must be a nonnegative multiple of the last column
            t = None
            for c, r in zip(col, rest):
                if c == 0:
                    if r != 0:
                        return
                elif r % c:
                    return
                else:
                    q = r // c
                    if t is None:
                        t = q
                    elif t != q:
                        return
            if t is None or t < 0:
                return
            alpha[i] = t
            out.append(tuple(alpha))
            return
        col = cols[i]
        a = 0
        while in_weight_semigroup(g, rest):
            alpha[i] = a
            rec(i + 1, rest)
            a += 1
            rest = tuple(r - c for r, c in zip(rest, col))
        alpha[i] = 0

    rec(0, m)
    out.sort(key=lambda al: (sum(al), al), reverse=True)
    return tuple(out)


def _polytope_box(G, h):
    """Integer bounding box of the bounded polytope ``{y : G y >= h}``."""
    k = len(G[0])
    verts = []
    for subset in itertools.combinations(range(len(G)), k):
        rows = [[Fraction(x) for x in G[i]] + [Fraction(h[i])] for i in subset]
        rows, piv = _rref_inplace(rows, k + 1)
        if piv != list(range(k)):
            continue
        y = [rows[j][k] for j in range(k)]
        if all(_dot(G[i], y) >= h[i] for i in range(len(G))):
            verts.append(y)
    if not verts:
        return None
    lo = [math.ceil(min(v[j] for v in verts)) for j in range(k)]
    hi = [math.floor(max(v[j] for v in verts)) for j in range(k)]
    return lo, hi


def _lattice_points(G, h):
    box = _polytope_box(G, h)
    if box is None:
        return []
    lo, hi = box
    pts = []
    for s in itertools.product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if all(_dot(row, s) >= hv for row, hv in zip(G, h)):
            pts.append(s)
    return pts


def lattice_points_below(g: Grading, m) -> frozenset:
    """Weights ``s`` with ``0 <= s <= m`` in the weight-cone order (``Bm >= Bs >= 0``)."""
    m = _check_degree(g, m)
    if not in_weight_semigroup(g, m):
        raise NotInSemigroup(f"degree {_fmt(m)} is not in the weight semigroup")
    return _below(g, m)


@lru_cache(maxsize=1024)
def _below(g, m):
    G = [list(row) for row in g.B] + [[-x for x in row] for row in g.B]
    h = [0] * len(g.B) + [-_dot(row, m) for row in g.B]
    return frozenset(_lattice_points(G, h))


def lattice_points_up_to_level(g: Grading, level: int) -> frozenset:
    """Weights ``s`` in the semigroup with ``g.level(s) <= level``."""
    k = g.rank
    ell = [sum(row[j] for row in g.B) for j in range(k)]
    G = [list(row) for row in g.B] + [[-x for x in ell]]
    h = [0] * len(g.B) + [-level]
    return frozenset(_lattice_points(G, h))


def precedes(g: Grading, s, t) -> bool:
    """``s <= t`` in the weight-cone partial order."""
    return in_weight_semigroup(g, tuple(b - a for a, b in zip(s, t)))


def sort_lattice_points(g: Grading, m, reverse=False) -> list:
    """A linear extension of the weight order on the interval ``[0, m]``.

    Points are moved into the sorted list once every predecessor ``s - deg x_i``
    is either sorted already or outside the semigroup.  Each sweep visits the
    remaining points in graded-lex order (reversed when ``reverse`` is set,
    which yields a different but equally valid extension).

    The sweep relies on every point of the interval being a degree of some
    monomial.  When the semigroup has holes there (``A = [[2, 3]]`` misses 1)
    the points are ordered by ``level`` instead, which strictly increases
    along the weight order.
    """
    m = _check_degree(g, m)
    pts = lattice_points_below(g, m)
    zero = tuple([0] * g.rank)
    if not all(_monomials(g, s) for s in pts):
        order = sorted(pts, key=lambda s: (sum(s), s), reverse=reverse)
        return sorted(order, key=g.level)
    unsorted = sorted((s for s in pts if s != zero), key=lambda s: (sum(s), s), reverse=reverse)
    order = [zero]
    done = {zero}
    cols = g.columns
    while unsorted:
        remaining = []
        for s in unsorted:
            ok = True
            for col in cols:
                t = tuple(a - b for a, b in zip(s, col))
                if t not in done and in_weight_semigroup(g, t):
                    ok = False
                    break
            if ok:
                order.append(s)
                done.add(s)
            else:
                remaining.append(s)
        if len(remaining) == len(unsorted):
            raise RuntimeError("lattice point sort made no progress")  # unreachable for pointed cones
        unsorted = remaining
    return order
