"""Ideals shared by the unit and acceptance suites."""

from __future__ import annotations

import random
from fractions import Fraction

from mgdual import GradedIdeal, Polynomial, validate_grading


def variables(g):
    return [Polynomial.variable(g, i) for i in range(g.nvars)]


def go():
    """Two generators in deg x1 = 1, deg x2 = 2 with a triple root at the origin."""
    g = validate_grading([[1, 2]], var_names=["x1", "x2"])
    x1, x2 = variables(g)
    f1 = Fraction(29, 16) * x1**3 - 2 * x1 * x2
    f2 = x2 - x1**2
    return GradedIdeal(g, [f1, f2], name="I")


def memb_j(g=None):
    g = g or go().grading
    x1, x2 = variables(g)
    return GradedIdeal(g, [x2 - x1**2, x2**2], name="J")


def hirzebruch():
    return validate_grading([[1, 0, 1, 0], [-2, 1, 0, 1]], var_names=["x1", "x2", "x3", "x4"])


def hirzebruch_line():
    g = hirzebruch()
    x1, x2, x3, x4 = variables(g)
    return GradedIdeal(g, [x3 - x1 * x2**2], name="F")


def hirzebruch_curve():
    g = hirzebruch()
    x1, x2, x3, x4 = variables(g)
    return GradedIdeal(g, [x1**2 * x2**6 + x1**2 * x2**3 * x4**3 - x3**2 * x4**2], name="C")


# H_I(i, j) of the curve for j = 12 down to -8; None marks a dash
CURVE_GRID = [
    [13, None, None, None, None],
    [12, None, None, None, None],
    [11, 24, None, None, None],
    [10, 22, None, None, None],
    [9, 20, 26, None, None],
    [8, 18, 24, None, None],
    [7, 16, 22, 28, None],
    [6, 14, 20, 26, None],
    [5, 12, 18, 24, 30],
    [4, 10, 16, 22, 28],
    [3, 8, 14, 20, 26],
    [2, 6, 12, 18, 24],
    [1, 4, 9, 15, 21],
    [None, 2, 6, 12, 18],
    [None, 1, 4, 9, 15],
    [None, None, 2, 6, 12],
    [None, None, 1, 4, 9],
    [None, None, None, 2, 6],
    [None, None, None, 1, 4],
    [None, None, None, None, 2],
    [None, None, None, None, 1],
]


def _rational(rng):
    return Fraction(rng.randint(1, 30), rng.randint(1, 10))


def phosphorylation(seed=1):
    """One-site phosphorylation cycle, homogenized by ``t``, at seeded rational parameters."""
    rng = random.Random(seed)
    names = ["xE", "xX1", "xF", "xY1", "xS0", "xS1", "t"]
    g = validate_grading([[1] * 7], var_names=names)
    E, X1, F, Y1, S0, S1, t = variables(g)
    c = {key: _rational(rng) for key in ["E", "X1", "F", "Y1", "S0", "S1"]}
    k = {key: _rational(rng) for key in ["01", "10", "45", "34", "12", "43"]}
    gens = [
        E + X1 - (c["E"] + c["X1"]) * t,
        F + Y1 - (c["F"] + c["Y1"]) * t,
        S0 + S1 - E - F - (c["S0"] + c["S1"] - c["E"] - c["F"]) * t,
        -k["01"] * S0 * E + k["10"] * X1 * t + k["45"] * Y1 * t,
        -k["34"] * S1 * F + k["12"] * X1 * t + k["43"] * Y1 * t,
        k["01"] * S0 * E - (k["10"] + k["12"]) * X1 * t,
        k["34"] * S1 * F - (k["43"] + k["45"]) * Y1 * t,
    ]
    return GradedIdeal(g, gens, name="I"), t


def parameter_geography(seed=7):
    """The two-equation family in (u, v) with parameter sigma, bihomogenized in P^1 x P^2
    and sliced by a seeded (0,1) linear form.  Returns the ideal and the variables."""
    rng = random.Random(seed)
    g = validate_grading([[1, 1, 0, 0, 0], [0, 0, 1, 1, 1]], var_names=["s", "tau", "u", "v", "w"])
    s, tau, u, v, w = variables(g)
    t1, t2, t3, t4, t5, t6, t7, t8 = (_rational(rng) for _ in range(8))

    def hom(terms):
        # (c0, cs, a, b) stands for (c0 + cs * sigma) u^a v^b
        out = Polynomial.constant(g, 0)
        for c0, cs, a, b in terms:
            out = out + (c0 * tau + cs * s) * u**a * v**b * w ** (4 - a - b)
        return out

    p1 = hom([
        (t1, 0, 0, 2), (1, 0, 1, 1), (t2, 0, 2, 0),
        (t1 * t3 - t1 + t7, -t1 * t3, 1, 2),
        (t4 - 1 + t2 * t8, -t4, 2, 1),
        (t2 * t5 - t2, -t2 * t5, 3, 0),
        (t1 * t6, 0, 0, 3), (-(t1 * t3 + t7), 0, 2, 2), (-(t4 + t2 * t8), 0, 3, 1),
        (-t2 * t5, 0, 4, 0), (-t1 * t6, 0, 1, 3),
    ])
    p2 = hom([
        (t1, 0, 0, 2), (1, 0, 1, 1), (t2, 0, 2, 0),
        (t1 * t6 - t1, -t1 * t6, 0, 3),
        (t7 - 1 + t1 * t3, -t7, 1, 2),
        (t2 * t8 - t2 + t4, -t2 * t8, 2, 1),
        (t2 * t5, 0, 3, 0), (-(t1 * t3 + t7), 0, 1, 3), (-(t4 + t2 * t8), 0, 2, 2),
        (-t2 * t5, 0, 3, 1), (-t1 * t6, 0, 0, 4),
    ])
    slice_form = _rational(rng) * u + _rational(rng) * v + _rational(rng) * w
    return GradedIdeal(g, [p1, p2, slice_form], name="P"), (s, tau, u, v, w)


GO_TEXT = """\
vars: x1 x2
grading:
1 2
ideal I:
29/16*x1^3 - 2*x1*x2
x2 - x1^2
ideal J:
x2 - x1^2
x2^2
"""

HIRZ_TEXT = """\
vars: x1 x2 x3 x4
grading:
1 0 1 0
-2 1 0 1
ideal F:
x3 - x1*x2^2
ideal C:
x1^2*x2^6 + x1^2*x2^3*x4^3 - x3^2*x4^2
"""
