"""Brute-force truncation checks that share no code with the dual-space machinery.

The degree-``m`` part of a homogeneous ideal is spanned by the products
``x^b * f`` with ``deg x^b = m - deg f``; ranks of the resulting coefficient
matrices give Hilbert values and membership directly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotHomogeneous, NotInSemigroup
from .grading import _fmt, in_weight_semigroup, monomials_of_degree
from .linalg import _kernel_rows, _rref_inplace, rank


def _degree(g, m):
    return (m,) if isinstance(m, int) else tuple(m)


def _spanning_rows(ideal, m):
    g = ideal.grading
    mons = monomials_of_degree(g, m)
    pos = {a: i for i, a in enumerate(mons)}
    rows = []
    for f, d in zip(ideal.generators, ideal.degrees):
        rest = tuple(a - b for a, b in zip(m, d))
        for beta in monomials_of_degree(g, rest):
            row = [Fraction(0)] * len(mons)
            for alpha, c in f.terms.items():
                row[pos[tuple(x + y for x, y in zip(alpha, beta))]] = c
            rows.append(row)
    return mons, rows


def oracle_hilbert(ideal, m) -> int:
    """``dim R_m - dim I_m`` by a rank computation."""
    m = _degree(ideal.grading, m)
    if not in_weight_semigroup(ideal.grading, m):
        raise NotInSemigroup(f"degree {_fmt(m)} is not in the weight semigroup")
    mons, rows = _spanning_rows(ideal, m)
    return len(mons) - (rank(rows, len(mons)) if rows else 0)


def oracle_membership(poly, ideal) -> bool:
    """Whether appending ``poly`` to the spanning set of ``I_m`` leaves the rank unchanged."""
    if not poly.terms:
        return True
    if not poly.is_homogeneous():
        raise NotHomogeneous(f"{poly} is not homogeneous")
    m = poly.degree
    mons, rows = _spanning_rows(ideal, m)
    pos = {a: i for i, a in enumerate(mons)}
    target = [Fraction(0)] * len(mons)
    for a, c in poly.terms.items():
        target[pos[a]] = c
    base = rank(rows, len(mons)) if rows else 0
    return rank(rows + [target], len(mons)) == base


def _annihilator_of_span(rows, n):
    """Rows ``q`` with ``q . r = 0`` for every spanning row ``r``."""
    red = [list(r) for r in rows]
    red, piv = _rref_inplace(red, n)
    return _kernel_rows(red, piv, n)


def oracle_quotient_hilbert(ideal, divisors, m) -> int:
    """Hilbert value of ``I : <divisors>`` at ``m`` from the multiplication maps.

    ``(I : J)_m`` is the set of ``f`` in ``R_m`` with ``f * g`` in ``I`` for every
    generator ``g`` of ``J``: the common kernel of multiplication by each ``g``
    followed by projection onto ``R / I``.
    """
    g = ideal.grading
    m = _degree(g, m)
    if not in_weight_semigroup(g, m):
        raise NotInSemigroup(f"degree {_fmt(m)} is not in the weight semigroup")
    src = monomials_of_degree(g, m)
    conditions = []
    for d in divisors:
        if not d.terms:
            continue
        target = tuple(a + b for a, b in zip(m, d.degree))
        tmons, trows = _spanning_rows(ideal, target)
        tpos = {a: i for i, a in enumerate(tmons)}
        ann = _annihilator_of_span(trows, len(tmons)) if trows else [
            [Fraction(int(i == j)) for j in range(len(tmons))] for i in range(len(tmons))
        ]
        # column j: coordinates of x^src[j] * d in the target degree
        images = []
        for beta in src:
            col = {}
            for alpha, c in d.terms.items():
                col[tpos[tuple(x + y for x, y in zip(alpha, beta))]] = c
            images.append(col)
        for q in ann:
            conditions.append([sum((q[i] * c for i, c in col.items()), Fraction(0)) for col in images])
    # H = dim R_m - dim (I:J)_m = rank of the stacked conditions
    return rank(conditions, len(src)) if conditions else 0
