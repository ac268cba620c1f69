import json
import random
from fractions import Fraction as F

import pytest
import sympy as sp

from affine_filiform.catalog import (
    LnFamilyParams,
    closed_form_checks,
    generic_trace_coefficient,
    heisenberg_connection,
    ln_connection,
    ln_matrices,
    ln_representation,
    verify_paper,
)
from affine_filiform.connections import affine_rep, is_complete, right_operator
from affine_filiform.errors import BadDimension
from affine_filiform.exact_linalg import char_poly_coefficients, generic_vector
from affine_filiform.representations import is_nilpotent_rep

from oracles import int_nilpotent, random_points, sympy_char_poly


def unit(size, i, c=1):
    return tuple(F(c) if k == i - 1 else F(0) for k in range(size))


def test_params_validation():
    with pytest.raises(BadDimension):
        LnFamilyParams(2)
    p = LnFamilyParams(4, "1/2", -1, "3")
    assert p.a == F(1, 2) and p.beta == 3


def test_heisenberg_connection_examples():
    assert not is_complete(heisenberg_connection(LnFamilyParams(3, 1))).complete
    assert is_complete(heisenberg_connection(LnFamilyParams(3, 0))).complete
    with pytest.raises(BadDimension):
        heisenberg_connection(LnFamilyParams(4, 1))


def test_n3_family_is_the_heisenberg_module():
    for params in [(1, 2, 3), (0, 0, 0), (F(1, 2), -1, 1)]:
        p = LnFamilyParams(3, *params)
        assert ln_representation(p) == affine_rep(heisenberg_connection(p))


def test_rho_x3_on_l4():
    rho = ln_representation(LnFamilyParams(4, 1))
    x3 = rho.matrices[2]
    assert x3.column(4) == unit(5, 3)
    assert x3.column(0) == unit(5, 4, F(-1, 2))


@pytest.mark.parametrize("n", range(3, 9))
def test_a_zero_family_is_nilpotent(n):
    rho = ln_representation(LnFamilyParams(n, 0, 1, -1))
    assert is_nilpotent_rep(rho)
    rng = random.Random(n)
    assert all(int_nilpotent(rho.evaluate(x).rows) for x in random_points(rng, n, 50))


def test_ln_connection_examples():
    c4 = ln_connection(LnFamilyParams(4, 1))
    assert right_operator(c4, c4.algebra.basis_vector(0)).trace() == 2
    c5 = ln_connection(LnFamilyParams(5, 0))
    print("L5, a=0 complete:", is_complete(c5).complete)
    v = is_complete(ln_connection(LnFamilyParams(6, F(1, 2), -1, 7)))
    assert not v.complete and v.witness is not None and v.witness_value != 0


@pytest.mark.parametrize("n", [3, 4])
def test_generic_char_poly_second_coefficient_symbolic(n):
    # sympy oracle: coefficient of t^n in det(t - rho(x)) is -2a(x1+x2)
    a = F(3, 2)
    rho = ln_representation(LnFamilyParams(n, a, 1, 2))
    t = sp.Symbol("t")
    xs = sp.symbols(f"x1:{n + 1}")
    poly = sp.Poly(sympy_char_poly(rho.generic_matrix()), t)
    assert sp.expand(poly.coeff_monomial(t**n) + 2 * sp.Rational(3, 2) * (xs[0] + xs[1])) == 0
    ours = char_poly_coefficients(rho.generic_matrix())[1]
    assert ours == generic_trace_coefficient(LnFamilyParams(n, a, 1, 2))


@pytest.mark.parametrize("n", range(3, 9))
def test_generic_trace_all_n(n):
    x = generic_vector(n)
    for a in (1, -1, F(1, 2), 0):
        p = LnFamilyParams(n, a, 1, 0)
        assert -generic_trace_coefficient(p) == (x[0] + x[1]) * (2 * p.a)


@pytest.mark.parametrize("n", range(4, 10))
def test_closed_form_rules_hold_on_their_valid_range(n):
    checks = closed_form_checks(LnFamilyParams(n, 1, 2, 3))
    in_range = [c for c in checks if c.in_range]
    assert in_range and all(c.status == "match" for c in in_range)
    undefined = {(c.j, c.rule) for c in checks if c.status == "undefined"}
    assert len(undefined) == 3 * (n - 3)
    mismatched = [c for c in checks if c.status == "mismatch"]
    assert [(c.j, c.k) for c in mismatched] == [(n - 1, 3)]


def test_closed_form_rule_entry_details():
    checks = closed_form_checks(LnFamilyParams(6, 1))
    size = 7
    e3 = next(c for c in checks if c.j == 3 and c.k == 3 and c.rule.startswith("e3"))
    assert e3.observed == unit(size, 5, F(1, 6))
    gen = next(c for c in checks if c.j == 4 and c.rule.endswith("i=6"))
    # (j-2)!(i-j-1)!/(i-2)! = 2!1!/4! = 1/12 on e_{i-j+1} = e_3
    assert gen.k == 3 and gen.expected == unit(size, 6, F(1, 12)) and gen.status == "match"


def test_matrices_follow_commutator_recursion():
    mats = ln_matrices(LnFamilyParams(6, 1, 1, 1))
    for j in range(1, 5):
        assert mats[j + 1] == mats[0].commutator(mats[j])


@pytest.mark.parametrize("params", [(3, 1, 0, 0), (8, 1, 1, 1), (5, 1, 2, 3)])
def test_verify_paper_passes(params):
    report = verify_paper(LnFamilyParams(*params))
    assert report.passed, report.table()
    assert report["connection not complete"].verdict == "pass"
    assert report["representation not nilpotent"].verdict == "pass"
    json.dumps(report.as_dict())


def test_verify_paper_a_zero_records_verdicts():
    report = verify_paper(LnFamilyParams(4, 0, 0, 0))
    assert report.passed
    assert report["representation not nilpotent"].verdict == "n/a"
    assert report["representation not nilpotent"].detail["nilpotent"] is True
    assert report["connection not complete"].verdict == "n/a"
    assert report["connection not complete"].detail["complete"] is True
    names = [c.name for c in report.checks]
    assert len(names) == len(set(names))


def test_report_rejects_duplicate_names():
    report = verify_paper(LnFamilyParams(3, 1))
    with pytest.raises(ValueError):
        report.add("affine shape", "pass")
