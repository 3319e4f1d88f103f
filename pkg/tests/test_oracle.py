import ast
import inspect

import pytest

import mgdual.oracle as oracle
from fixtures import go, hirzebruch_curve, memb_j, variables
from mgdual import GradedIdeal, oracle_hilbert, oracle_membership, oracle_quotient_hilbert
from mgdual.errors import NotHomogeneous, NotInSemigroup


def test_oracle_is_independent_of_dual_code():
    tree = ast.parse(inspect.getsource(oracle))
    imported = {node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)}
    assert not any(name and ("dual" in name or "idealops" in name) for name in imported)


def test_oracle_values():
    assert [oracle_hilbert(go(), (k,)) for k in range(5)] == [1, 1, 1, 0, 0]
    assert oracle_hilbert(hirzebruch_curve(), (4, 4)) == 30
    g = go().grading
    assert oracle_hilbert(GradedIdeal(g, []), (4,)) == 3


def test_oracle_membership():
    J = memb_j()
    x1, x2 = variables(J.grading)
    assert not oracle_membership(x2, J)
    assert oracle_membership(J.generators[0], J)
    assert oracle_membership(x1 * x2 * J.generators[1], J)
    with pytest.raises(NotHomogeneous):
        oracle_membership(x1 + x2, J)


def test_oracle_quotient():
    I, J = go(), memb_j()
    assert [oracle_quotient_hilbert(J, I.generators, (k,)) for k in range(5)] == [1, 0, 0, 0, 0]


def test_oracle_rejects_outside_degrees():
    with pytest.raises(NotInSemigroup):
        oracle_hilbert(hirzebruch_curve(), (-1, 0))
