"""Differential functionals at the origin and graded Macaulay dual spaces.

A functional ``sum c_a d[a]`` acts on a polynomial by pairing coefficients:
``d[a](f)`` is the coefficient of ``x^a`` in ``f``.  For an ideal generated by
homogeneous polynomials, the functionals killing the ideal split by degree, and
each degree-``m`` piece is computed from the already known pieces at
``m - deg x_i`` (closedness) plus the vanishing conditions of the generators of
degree ``m``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    GradingMismatch,
    IndexOutOfRange,
    MissingPrerequisite,
    NotHomogeneous,
    NotInSemigroup,
    ZeroPolynomial,
)
from .grading import (
    Grading,
    _check_degree,
    _fmt,
    degree_of,
    in_weight_semigroup,
    lattice_points_below,
    monomials_of_degree,
    sort_lattice_points,
)
from .linalg import Subspace, _rref_inplace, kernel, preimage, subspace_intersect
from .polynomial import Polynomial

_ZERO = Fraction(0)


class Functional:
    """A finite combination ``sum c_a d[a]`` of coefficient functionals at the origin."""

    __slots__ = ("terms", "degree")

    def __init__(self, terms, degree=None):
        self.terms = {tuple(a): Fraction(c) for a, c in terms.items() if c}
        self.degree = None if degree is None else tuple(degree)

    @classmethod
    def from_grading(cls, grading: Grading, terms):
        """Build a functional and check that all its terms share one degree."""
        f = cls(terms)
        degs = {degree_of(grading, a) for a in f.terms}
        if len(degs) > 1:
            raise NotHomogeneous(f"functional mixes degrees {sorted(degs)}")
        f.degree = degs.pop() if degs else None
        return f

    def __call__(self, poly: Polynomial) -> Fraction:
        small, big = (self.terms, poly.terms) if len(self.terms) <= len(poly.terms) else (poly.terms, self.terms)
        return sum((c * big[a] for a, c in small.items() if a in big), _ZERO)

    def __add__(self, other):
        terms = dict(self.terms)
        for a, c in other.terms.items():
            terms[a] = terms.get(a, 0) + c
        return Functional(terms, self.degree or other.degree)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, c):
        return Functional({a: c * x for a, x in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Functional) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)
        out = []
        for a, c in items:
            idx = "(" + ",".join(str(x) for x in a) + ")"
            out.append(f"{c} * d[{idx}]")
        return " + ".join(out).replace("+ -", "- ")

    __repr__ = __str__


def eval_functional(alpha, poly: Polynomial, y=None) -> Fraction:
    """``(1/alpha!) d^alpha poly / dx^alpha`` evaluated at ``y`` (the origin by default)."""
    alpha = tuple(alpha)
    if y is None:
        return poly.coeff(alpha)
    if len(y) != len(alpha):
        raise DimensionMismatch("point and exponent have different lengths")
    y = [Fraction(v) for v in y]
    total = _ZERO
    for beta, c in poly.terms.items():
        if any(b < a for a, b in zip(alpha, beta)):
            continue
        t = c
        for a, b, v in zip(alpha, beta, y):
            t *= math.comb(b, a) * v ** (b - a)
        total += t
    return total


def phi_i(func: Functional, i: int, grading: Grading | None = None) -> Functional:
    """Lower exponent ``i`` by one, dropping terms where it is already zero."""
    n = len(next(iter(func.terms))) if func.terms else None
    if grading is not None:
        n = grading.nvars
    if i < 0 or (n is not None and i >= n):
        raise IndexOutOfRange(f"variable index {i} out of range")
    terms = {}
    for a, c in func.terms.items():
        if a[i]:
            b = list(a)
            b[i] -= 1
            terms[tuple(b)] = c
    degree = None
    if func.degree is not None and grading is not None:
        degree = tuple(d - x for d, x in zip(func.degree, grading.column(i)))
    return Functional(terms, degree)


def phi_g(func: Functional, g: Polynomial) -> Functional:
    """The functional ``f -> func(g * f)``."""
    if not g.is_homogeneous():
        raise NotHomogeneous(f"{g} is not homogeneous")
    terms = {}
    gt = list(g.terms.items())
    for a, c in func.terms.items():
        for gam, gc in gt:
            d = tuple(x - y for x, y in zip(a, gam))
            if min(d) < 0:
                continue
            terms[d] = terms.get(d, 0) + c * gc
    degree = None
    if func.degree is not None and g.terms:
        degree = tuple(x - y for x, y in zip(func.degree, g.degree))
    return Functional(terms, degree)


def psi_g(beta, g: Polynomial) -> Functional:
    """A right inverse of ``phi_g`` applied to ``d[beta]``.

    With ``a0`` the lexicographically smallest exponent of ``g``, the
    coefficients are fixed from the lex-largest exponent downwards by
    ``c[a] = (delta(a - a0, beta) - sum_{gamma != a0} g[gamma] c[a - a0 + gamma]) / g[a0]``,
    which makes ``phi_g(psi_g(beta, g)) == d[beta]``.
    """
    if not g.terms:
        raise ZeroPolynomial("cannot invert multiplication by zero")
    if not g.is_homogeneous():
        raise NotHomogeneous(f"{g} is not homogeneous")
    beta = tuple(beta)
    grading = g.grading
    a0 = min(g.terms)
    g0 = g.terms[a0]
    others = [(gam, c) for gam, c in g.terms.items() if gam != a0]
    target = tuple(x + y for x, y in zip(degree_of(grading, beta), g.degree))
    support = [a for a in monomials_of_degree(grading, target) if all(x >= y for x, y in zip(a, a0))]
    support.sort(reverse=True)
    coef = {}
    for a in support:
        shift = tuple(x - y for x, y in zip(a, a0))
        v = Fraction(1) if shift == beta else _ZERO
        for gam, c in others:
            key = tuple(s + y for s, y in zip(shift, gam))
            ck = coef.get(key)
            if ck:
                v -= c * ck
        if v:
            coef[a] = v / g0
    return Functional(coef, target)


class GradedIdeal:
    """An ideal given by homogeneous generators in a fixed grading."""

    def __init__(self, grading: Grading, generators=(), name=None):
        self.grading = grading
        self.name = name
        gens = []
        for f in generators:
            if not isinstance(f, Polynomial):
                raise TypeError("generators must be Polynomial instances")
            if f.grading != grading:
                raise GradingMismatch("generator lives in a different grading")
            if not f.terms:
                continue
            if not f.is_homogeneous():
                raise NotHomogeneous(f"generator {f} is not homogeneous (term degrees {f.term_degrees()})")
            gens.append(f)
        self.generators = tuple(gens)
        self.degrees = tuple(f.degree for f in gens)

    def generators_of_degree(self, m):
        return [f for f, d in zip(self.generators, self.degrees) if d == m]

    def key(self):
        return (self.grading, frozenset(self.generators))

    def __repr__(self):
        label = self.name or "I"
        return f"{label} = <" + ", ".join(str(f) for f in self.generators) + ">"


@lru_cache(maxsize=4096)
def _mon_index(grading, m):
    return {a: i for i, a in enumerate(monomials_of_degree(grading, m))}


class DualTable:
    """Memo of the dual spaces of one ideal, keyed by degree.

    Not safe for concurrent mutation; use one table per task.
    """

    def __init__(self, ideal: GradedIdeal, method="integrate"):
        self.ideal = ideal
        self.grading = ideal.grading
        self.method = method
        self.memo = {}

    def __contains__(self, m):
        return tuple(m) in self.memo

    def at(self, m) -> Subspace:
        return dual_space(self.ideal, m, self)

    def hilbert(self, m) -> int:
        return self.at(m).dim


def _shift(alpha, i, d):
    b = list(alpha)
    b[i] += d
    return tuple(b)


def _predecessor_spaces(table: DualTable, m):
    g = table.grading
    spaces = []
    for i in range(g.nvars):
        s = tuple(x - y for x, y in zip(m, g.column(i)))
        if not in_weight_semigroup(g, s):
            spaces.append((s, None))
            continue
        if s not in table.memo:
            raise MissingPrerequisite(f"dual space at degree {_fmt(s)} needed before {_fmt(m)}")
        spaces.append((s, table.memo[s]))
    return spaces


def _solve_homogeneous(rows, ncols):
    """Kernel basis of the system given by an iterable of sparse rows ``{col: value}``."""
    pivots = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                inv = 1 / row[c]
                pivots[c] = {j: v * inv for j, v in row.items()}
                break
            f = row[c]
            for j, v in p.items():
                nv = row.get(j, _ZERO) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        if len(pivots) == ncols:
            return []
    # back substitution to reduced form
    order = sorted(pivots)
    for c in reversed(order):
        p = pivots[c]
        for c2 in order:
            if c2 >= c:
                break
            q = pivots[c2]
            f = q.get(c)
            if f:
                for j, v in p.items():
                    nv = q.get(j, _ZERO) - f * v
                    if nv:
                        q[j] = nv
                    else:
                        q.pop(j, None)
    out = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [_ZERO] * ncols
        v[free] = Fraction(1)
        for c, p in pivots.items():
            x = p.get(free)
            if x:
                v[c] = -x
        out.append(v)
    return out


def _closedness_vectors(table: DualTable, m):
    """Dense coordinate vectors (over the degree-``m`` monomials) spanning the closedness subspace."""
    g = table.grading
    n = g.nvars
    mons = monomials_of_degree(g, m)
    if not any(m):
        return [[Fraction(1)]]
    preds = _predecessor_spaces(table, m)
    constrained = []
    lam_offset = {}
    ncols = 0
    free_cols = {}
    for i, (s, space) in enumerate(preds):
        if space is not None and space.is_full():
            continue
        constrained.append(i)
    for a in mons:
        if not any(a[i] for i in constrained):
            free_cols[a] = ncols
            ncols += 1
    for i in constrained:
        lam_offset[i] = ncols
        space = preds[i][1]
        ncols += space.dim if space is not None else 0
    if ncols == 0:
        return []

    idx = {i: _mon_index(g, preds[i][0]) for i in constrained if preds[i][1] is not None}
    # transpose predecessor bases: for each lower monomial, its nonzero basis coefficients
    columns = {}
    for i in constrained:
        space = preds[i][1]
        if space is None or space.dim == 0:
            columns[i] = None
            continue
        cols = {}
        lower = space.basis
        for k, row in enumerate(space.rows):
            off = lam_offset[i] + k
            for pos, x in enumerate(row):
                if x:
                    cols.setdefault(lower[pos], {})[off] = x
        columns[i] = cols

    def value(i, a):
        cols = columns[i]
        if cols is None:
            return None
        return cols.get(_shift(a, i, -1))

    def equations():
        for a in mons:
            if a in free_cols:
                continue
            present = [i for i in constrained if a[i]]
            i0 = present[0]
            v0 = value(i0, a)
            for i in present[1:]:
                v = value(i, a)
                if not v0 and not v:
                    continue
                row = dict(v0) if v0 else {}
                if v:
                    for c, x in v.items():
                        row[c] = row.get(c, _ZERO) - x
                yield row

    params = _solve_homogeneous(equations(), ncols)
    vectors = []
    for lam in params:
        vec = [_ZERO] * len(mons)
        for pos, a in enumerate(mons):
            fc = free_cols.get(a)
            if fc is not None:
                vec[pos] = lam[fc]
                continue
            i0 = next(i for i in constrained if a[i])
            v0 = value(i0, a)
            if v0:
                vec[pos] = sum((x * lam[c] for c, x in v0.items()), _ZERO)
        vectors.append(vec)
    return vectors


def _phi_matrix(grading, m, i):
    """Matrix of ``phi_i`` from degree ``m`` to degree ``m - deg x_i`` in monomial coordinates."""
    src = monomials_of_degree(grading, m)
    dst_deg = tuple(x - y for x, y in zip(m, grading.column(i)))
    dst = _mon_index(grading, dst_deg)
    mat = [[_ZERO] * len(src) for _ in range(len(dst))]
    for j, a in enumerate(src):
        if a[i]:
            mat[dst[_shift(a, i, -1)]][j] = Fraction(1)
    return mat


def _closedness_by_preimage(table: DualTable, m):
    g = table.grading
    mons = monomials_of_degree(g, m)
    result = Subspace.full(mons)
    if not any(m):
        return result
    for i, (s, space) in enumerate(_predecessor_spaces(table, m)):
        # below the semigroup no degree-m monomial involves x_i, so phi_i is the zero map
        if space is None or space.is_full():
            continue
        result = subspace_intersect(result, preimage(_phi_matrix(g, m, i), space, mons))
    return result


def closedness_subspace(ideal: GradedIdeal, m, table: DualTable, method=None) -> Subspace:
    """Functionals of degree ``m`` whose images under every ``phi_i`` are already dual.

    ``method="integrate"`` parametrises candidates by their images under the
    ``phi_i`` (small systems); ``method="preimage"`` intersects the preimages
    of the lower dual spaces directly (dense, for cross-checking).
    """
    g = ideal.grading
    m = _check_degree(g, m)
    mons = monomials_of_degree(g, m)
    method = method or table.method
    if method == "preimage":
        return _closedness_by_preimage(table, m)
    return Subspace.span(mons, _closedness_vectors(table, m))


def _impose_generators(ideal, m, mons, vectors):
    gens = ideal.generators_of_degree(m)
    if not gens or not vectors:
        return vectors
    idx = _mon_index(ideal.grading, m)
    conds = []
    for f in gens:
        conds.append([sum((vec[idx[a]] * c for a, c in f.terms.items()), _ZERO) for vec in vectors])
    combos = kernel(conds, len(vectors)).rows
    out = []
    for comb in combos:
        v = [_ZERO] * len(mons)
        for w, vec in zip(comb, vectors):
            if w:
                for j, x in enumerate(vec):
                    if x:
                        v[j] += w * x
        out.append(v)
    return out


def _compute_degree(ideal, m, table):
    g = ideal.grading
    mons = monomials_of_degree(g, m)
    if table.method == "preimage":
        vectors = [list(r) for r in _closedness_by_preimage(table, m).rows]
    else:
        vectors = _closedness_vectors(table, m)
    vectors = _impose_generators(ideal, m, mons, vectors)
    return Subspace.span(mons, vectors)


def dual_space(ideal: GradedIdeal, m, table: DualTable | None = None, reverse=False) -> Subspace:
    """Basis (canonical RREF over the degree-``m`` monomials) of the degree-``m`` dual space.

    All degrees below ``m`` are visited along a linear extension of the weight
    order and memoized in ``table``.
    """
    g = ideal.grading
    m = _check_degree(g, m)
    if not in_weight_semigroup(g, m):
        raise NotInSemigroup(f"degree {_fmt(m)} is not in the weight semigroup")
    if table is None:
        table = DualTable(ideal)
    elif table.ideal is not ideal and table.ideal.key() != ideal.key():
        raise GradingMismatch("dual table belongs to a different ideal")
    hit = table.memo.get(m)
    if hit is not None:
        return hit
    for s in sort_lattice_points(g, m, reverse=reverse):
        if s not in table.memo:
            table.memo[s] = _compute_degree(ideal, s, table)
    return table.memo[m]


def basis_functionals(space: Subspace, degree=None) -> list:
    return [Functional(d, degree) for d in space.as_dicts()]


def _as_degree(grading, m):
    if isinstance(m, int):
        m = (m,)
    return _check_degree(grading, m)


def _region(grading, region):
    if isinstance(region, (list, set, frozenset)):
        return sorted({_as_degree(grading, m) for m in region}, key=lambda s: (sum(s), s))
    top = _as_degree(grading, region)
    return sorted(lattice_points_below(grading, top), key=lambda s: (sum(s), s))


def hilbert(source, m) -> int:
    """Dimension of the degree-``m`` dual space of an ideal, table or presentation."""
    return _space_of(source, m).dim


def _space_of(source, m):
    if isinstance(source, GradedIdeal):
        return dual_space(source, m)
    return source.at(m)


def hilbert_table(source, region) -> dict:
    """``{degree: dimension}`` over the order ideal below a degree, or an explicit degree list."""
    grading = source.grading
    if isinstance(source, GradedIdeal):
        source = DualTable(source)
    degrees = _region(grading, region)
    return {m: source.at(m).dim for m in degrees}
