"""Ideal operations carried out degreewise on dual spaces.

Ideals are combined through a small recipe tree whose nodes know how to
produce their dual space at a degree from their children's:

* ``I + J``    -> intersection of the dual spaces,
* ``I cap J``  -> sum of the dual spaces,
* ``I : g``    -> image of the dual space of ``I`` at ``m + deg g`` under ``phi_g``,
* ``I : J``    -> sum of the ``I : g_i`` over generators ``g_i`` of ``J``.

Each node memoizes its own results; a presentation is meant to be driven by
one task at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .dual import (
    DualTable,
    Functional,
    GradedIdeal,
    _as_degree,
    _region,
    basis_functionals,
    phi_g,
)
from .errors import GradingMismatch, NotHomogeneous, NotInSemigroup, WindowEmpty
from .grading import (
    _fmt,
    in_weight_semigroup,
    lattice_points_below,
    lattice_points_up_to_level,
    monomials_of_degree,
)
from .linalg import Subspace, kernel, subspace_intersect, subspace_sum
from .polynomial import Polynomial


class DualPresentation:
    """Base class of recipe nodes; ``at(m)`` returns the canonical dual space at ``m``."""

    def __init__(self, grading, children=()):
        self.grading = grading
        self.children = tuple(children)
        for c in self.children:
            if c.grading != grading:
                raise GradingMismatch("all parts of a recipe must share one grading")
        self.memo = {}

    def at(self, m) -> Subspace:
        m = _as_degree(self.grading, m)
        if not in_weight_semigroup(self.grading, m):
            raise NotInSemigroup(f"degree {_fmt(m)} is not in the weight semigroup")
        hit = self.memo.get(m)
        if hit is None:
            hit = self.memo[m] = self._compute(m)
        return hit

    def hilbert(self, m) -> int:
        return self.at(m).dim

    def hilbert_table(self, region) -> dict:
        return {m: self.hilbert(m) for m in _region(self.grading, region)}

    def functionals(self, m) -> list:
        m = _as_degree(self.grading, m)
        return basis_functionals(self.at(m), m)

    def leaf_degrees(self, m) -> dict:
        """Leaf ideal -> set of degrees whose dual spaces the query at ``m`` reads."""
        out = {}
        for child, cm in self._child_queries(_as_degree(self.grading, m)):
            for leaf, degs in child.leaf_degrees(cm).items():
                out.setdefault(leaf, set()).update(degs)
        return out

    def work(self, m) -> int:
        """Number of leaf dual spaces (over all lower degrees) the query at ``m`` needs."""
        total = 0
        for leaf, degs in self.leaf_degrees(m).items():
            pts = set()
            for d in degs:
                pts |= lattice_points_below(self.grading, d)
            total += len(pts)
        return total

    def _child_queries(self, m):
        return [(c, m) for c in self.children]

    def _compute(self, m):
        raise NotImplementedError

    # recipe builders
    def __add__(self, other):
        return IdealSum(self.grading, [self, as_presentation(other)])

    def __and__(self, other):
        return IdealIntersection(self.grading, [self, as_presentation(other)])

    def quotient(self, by):
        return quotient(self, by)


class Leaf(DualPresentation):
    def __init__(self, ideal: GradedIdeal, method="integrate"):
        super().__init__(ideal.grading)
        self.ideal = ideal
        self.table = DualTable(ideal, method=method)

    def _compute(self, m):
        return self.table.at(m)

    def leaf_degrees(self, m):
        return {self: {_as_degree(self.grading, m)}}

    def __repr__(self):
        return f"Leaf({self.ideal!r})"


class IdealSum(DualPresentation):
    def _compute(self, m):
        spaces = [c.at(m) for c in self.children]
        out = spaces[0]
        for s in spaces[1:]:
            out = subspace_intersect(out, s)
        return out


class IdealIntersection(DualPresentation):
    def _compute(self, m):
        spaces = [c.at(m) for c in self.children]
        out = spaces[0]
        for s in spaces[1:]:
            out = subspace_sum(out, s)
        return out


def _phi_g_image(space: Subspace, g: Polynomial, m) -> Subspace:
    mons = monomials_of_degree(g.grading, m)
    pos = {a: i for i, a in enumerate(mons)}
    vecs = []
    for f in basis_functionals(space):
        img = phi_g(f, g)
        if img:
            v = [Fraction(0)] * len(mons)
            for a, c in img.terms.items():
                v[pos[a]] = c
            vecs.append(v)
    return Subspace.span(mons, vecs)


class QuotientByPoly(DualPresentation):
    """``I : g`` read off ``phi_g`` of the dual space of ``I`` at ``m + deg g``."""

    def __init__(self, child, g: Polynomial):
        super().__init__(child.grading, [child])
        if not g.terms or not g.is_homogeneous():
            raise NotHomogeneous(f"quotient needs a nonzero homogeneous polynomial, got {g}")
        self.g = g
        self.shift = g.degree

    def _target(self, m):
        return tuple(a + b for a, b in zip(m, self.shift))

    def _child_queries(self, m):
        t = self._target(m)
        return [(self.children[0], t)] if in_weight_semigroup(self.grading, t) else []

    def _compute(self, m):
        t = self._target(m)
        if not in_weight_semigroup(self.grading, t):
            return Subspace.zero(monomials_of_degree(self.grading, m))
        return _phi_g_image(self.children[0].at(t), self.g, m)


class QuotientByIdeal(DualPresentation):
    """``I : J`` as the sum of the duals of ``I : g_i``."""

    def __init__(self, child, generators):
        gens = [g for g in generators if g.terms]
        parts = [QuotientByPoly(child, g) for g in gens]
        super().__init__(child.grading, parts)
        self.base = child
        self.generators = tuple(gens)

    def _compute(self, m):
        mons = monomials_of_degree(self.grading, m)
        out = Subspace.zero(mons)
        for part in self.children:
            out = subspace_sum(out, part.at(m))
        return out


def as_presentation(source, method="integrate") -> DualPresentation:
    if isinstance(source, DualPresentation):
        return source
    if isinstance(source, GradedIdeal):
        return Leaf(source, method=method)
    raise TypeError(f"cannot build a dual presentation from {type(source).__name__}")


def dual_at(source, m) -> Subspace:
    return as_presentation(source).at(m)


def ideal_sum(*sources) -> DualPresentation:
    parts = [as_presentation(s) for s in sources]
    return IdealSum(parts[0].grading, parts)


def ideal_intersection(*sources) -> DualPresentation:
    parts = [as_presentation(s) for s in sources]
    return IdealIntersection(parts[0].grading, parts)


def quotient(source, by) -> DualPresentation:
    """``source : by`` where ``by`` is a homogeneous polynomial or a graded ideal."""
    p = as_presentation(source)
    if isinstance(by, Polynomial):
        return QuotientByPoly(p, by)
    if isinstance(by, GradedIdeal):
        if by.grading != p.grading:
            raise GradingMismatch("quotient by an ideal in a different grading")
        return QuotientByIdeal(p, by.generators)
    return QuotientByIdeal(p, list(by))


def witness(g: Polynomial, source):
    """A basis functional of the dual space at ``deg g`` not killing ``g``, or None."""
    if not g.terms:
        return None
    if not g.is_homogeneous():
        raise NotHomogeneous(f"{g} is not homogeneous (term degrees {g.term_degrees()})")
    m = g.degree
    for f in as_presentation(source).functionals(m):
        if f(g):
            return f
    return None


def membership(g: Polynomial, source) -> bool:
    """Whether the homogeneous polynomial ``g`` lies in the ideal."""
    return witness(g, source) is None


def containment(inner, outer) -> bool:
    """Whether ideal ``inner`` is contained in ideal ``outer``.

    Only the generator degrees of the two ideals need checking.
    """
    if inner.grading != outer.grading:
        raise GradingMismatch("ideals live in different gradings")
    p, q = as_presentation(inner), as_presentation(outer)
    degrees = set(inner.degrees) | set(outer.degrees)
    return all(q.at(m).issubset(p.at(m)) for m in sorted(degrees))


def elements_of_degree(source, m) -> list:
    """Basis of the degree-``m`` part of the ideal: polynomials killed by every dual functional.

    Experimental; this recovers candidate generators degree by degree.
    """
    p = as_presentation(source)
    m = _as_degree(p.grading, m)
    space = p.at(m)
    mons = monomials_of_degree(p.grading, m)
    ker = kernel([list(r) for r in space.rows], len(mons), mons) if space.rows else Subspace.full(mons)
    return [Polynomial(p.grading, d) for d in ker.as_dicts()]


@dataclass
class Saturation:
    """Outcome of iterated quotients that stopped changing on a finite window.

    Equality of consecutive Hilbert tables is only certified on ``window``.
    """

    presentation: DualPresentation
    stabilized_at: int
    window: list
    chain: list = field(default_factory=list)  # Hilbert tables of I : J^p for p = 0, 1, ...
    window_stabilized: bool = True

    def __iter__(self):
        yield self.presentation
        yield self.stabilized_at


def saturate(source, by, window, max_power=64) -> Saturation:
    """Iterate ``I : J^p`` until two consecutive Hilbert tables agree on ``window``."""
    p0 = as_presentation(source)
    degrees = _region(p0.grading, window) if window is not None else []
    if not degrees:
        raise WindowEmpty("saturation needs a nonempty degree window")
    chain = [{m: p0.hilbert(m) for m in degrees}]
    current = quotient(p0, by)
    chain.append({m: current.hilbert(m) for m in degrees})
    power = 1
    while power <= max_power:
        nxt = quotient(current, by)
        table = {m: nxt.hilbert(m) for m in degrees}
        chain.append(table)
        if table == chain[-2]:
            return Saturation(current, power, degrees, chain)
        current = nxt
        power += 1
    raise RuntimeError(f"no stabilization on the window within {max_power} quotients")


def multiplicity(ideal, bound):
    """Sum of Hilbert values below ``bound`` and whether that sum is the full multiplicity.

    With ``level`` the sum of the facet inequalities (positive on nonzero
    weights) and ``L`` the largest level whose whole sublevel set lies below
    ``bound``, the count is complete when every dual space with level in
    ``(L - c, L]`` vanishes, ``c`` being the largest variable level: a nonzero
    degree whose predecessors all have zero dual space has zero dual space, so
    vanishing then propagates to every higher level.
    """
    p = as_presentation(ideal)
    g = p.grading
    top = _as_degree(g, bound)
    region = lattice_points_below(g, top)
    total = sum(p.hilbert(m) for m in region)
    top_level = g.level(top)
    outside = [g.level(s) for s in lattice_points_up_to_level(g, top_level) if s not in region]
    full_level = min(outside) - 1 if outside else top_level
    step = max(g.level(c) for c in g.columns)
    band = [s for s in region if full_level - step < g.level(s) <= full_level]
    complete = all(p.hilbert(s) == 0 for s in band)
    return total, complete
