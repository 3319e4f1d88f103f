from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import go, hirzebruch_curve, hirzebruch_line, memb_j, variables
from mgdual import (
    Functional,
    GradedIdeal,
    Polynomial,
    dual_space,
    eval_functional,
    hilbert,
    hilbert_table,
    in_weight_semigroup,
    monomials_of_degree,
    phi_g,
    phi_i,
    psi_g,
    validate_grading,
)
from mgdual.dual import DualTable, basis_functionals, closedness_subspace
from mgdual.errors import IndexOutOfRange, MissingPrerequisite, NotHomogeneous, NotInSemigroup, ZeroPolynomial


def test_functional_text():
    f = Functional({(2, 0): 1, (0, 1): 1})
    assert str(f) == "1 * d[(2,0)] + 1 * d[(0,1)]"
    assert str(Functional({(1, 0): Fraction(-3, 16)})) == "-3/16 * d[(1,0)]"


def test_pairing_is_taylor_coefficient():
    I = go()
    f1 = I.generators[0]
    assert eval_functional((3, 0), f1) == Fraction(29, 16)
    # derivative at y = (1, 1): d/dx1 of 29/16 x1^3 - 2 x1 x2 is 87/16 - 2
    assert eval_functional((1, 0), f1, y=(1, 1)) == Fraction(87, 16) - 2


def test_phi_i_examples():
    f = Functional({(2, 0): 1, (0, 1): 1}, (2,))
    g = go().grading
    assert phi_i(f, 0, g) == Functional({(1, 0): 1})
    assert phi_i(f, 0, g).degree == (1,)
    assert phi_i(f, 1, g) == Functional({(0, 0): 1})
    with pytest.raises(IndexOutOfRange):
        phi_i(f, 2, g)


def test_phi_psi_errors():
    g = go().grading
    x1, x2 = variables(g)
    with pytest.raises(ZeroPolynomial):
        psi_g((0, 0), Polynomial.constant(g, 0))
    with pytest.raises(NotHomogeneous):
        psi_g((0, 0), x1 + x2)
    with pytest.raises(NotHomogeneous):
        phi_g(Functional({(1, 0): 1}), x1 + x2)


def test_go_dual_spaces():
    I = go()
    assert [hilbert(I, (k,)) for k in range(5)] == [1, 1, 1, 0, 0]
    (b,) = basis_functionals(dual_space(I, (2,)))
    assert b == Functional({(2, 0): 1, (0, 1): 1})


def test_zero_and_constant_ideals():
    g = go().grading
    zero = GradedIdeal(g, [])
    assert [hilbert(zero, (k,)) for k in range(5)] == [len(monomials_of_degree(g, (k,))) for k in range(5)]
    one = GradedIdeal(g, [Polynomial.constant(g, 1)])
    assert all(hilbert(one, (k,)) == 0 for k in range(4))


def test_hirzebruch_methods_agree():
    for ideal, top in [(hirzebruch_line(), (1, 1)), (hirzebruch_curve(), (3, 3))]:
        a, b = DualTable(ideal), DualTable(ideal, method="preimage")
        assert dual_space(ideal, top, a) == dual_space(ideal, top, b)


def test_outside_semigroup():
    with pytest.raises(NotInSemigroup):
        dual_space(hirzebruch_line(), (-1, 0))


def test_closedness_needs_predecessors():
    I = go()
    with pytest.raises(MissingPrerequisite):
        closedness_subspace(I, (3,), DualTable(I))


def test_hilbert_table_region_forms():
    I = memb_j()
    assert hilbert_table(I, (3,)) == {(0,): 1, (1,): 1, (2,): 1, (3,): 1}
    assert hilbert_table(I, [(4,), (1,)]) == {(1,): 1, (4,): 0}


def _rank_one_functionals():
    exps = st.tuples(st.integers(0, 4), st.integers(0, 2))
    return st.dictionaries(exps, st.integers(-3, 3), min_size=1, max_size=4)


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.integers(0, 3), st.integers(0, 2)), st.integers(1, 4), st.integers(-5, 5).filter(bool))
def test_psi_is_right_inverse(beta, d, c):
    g = validate_grading([[1, 2]])
    x1, x2 = variables(g)
    # a homogeneous polynomial of degree 2d with a couple of terms
    poly = c * x1 ** (2 * d) + x1 ** (2 * d - 2) * x2
    assert phi_g(psi_g(beta, poly), poly) == Functional({beta: 1})


@settings(max_examples=100, deadline=None)
@given(_rank_one_functionals(), st.integers(0, 1))
def test_phi_of_variable_is_phi_i(terms, i):
    g = validate_grading([[1, 1]])
    f = Functional(terms)
    assert phi_g(f, Polynomial.variable(g, i)) == phi_i(f, i)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_dual_functionals_kill_ideal(i, j):
    """Every dual functional vanishes on every degree-m element of the ideal."""
    I = hirzebruch_curve()
    m = (min(i, 3), j - 4)
    if not in_weight_semigroup(I.grading, m):
        return
    (f,) = I.generators
    space = dual_space(I, m)
    rest = tuple(a - b for a, b in zip(m, f.degree))
    for beta in monomials_of_degree(I.grading, rest):
        prod = Polynomial.monomial(I.grading, beta) * f
        for func in basis_functionals(space):
            assert func(prod) == 0
