from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from z2rep.graded_algebra import (AD_WEIGHT, DEGREE, GENERATORS, Element,
                                  STRUCTURE_TABLE, bracket, bracket_gens,
                                  degree_add, degree_dot, mutated_table,
                                  table_to_json, verify_axioms)


def el(name, coeff=1):
    return Element.gen(name, coeff)


def test_degree_add_examples():
    assert degree_add((1, 0), (1, 1)) == (0, 1)
    assert degree_add((0, 0), (1, 1)) == (1, 1)
    assert degree_add((1, 1), (1, 1)) == (0, 0)


def test_degree_dot_examples():
    assert degree_dot((1, 1), (1, 1)) == 0
    assert degree_dot((0, 1), (1, 1)) == 1
    assert degree_dot((0, 0), (1, 0)) == 0


def test_generator_degrees_and_weights():
    assert DEGREE["R"] == (0, 0) and DEGREE["Lp"] == (0, 0)
    assert DEGREE["ap"] == (0, 1) and DEGREE["atm"] == (1, 0)
    assert DEGREE["Rt"] == (1, 1) and DEGREE["Ltm"] == (1, 1)
    assert AD_WEIGHT["Ltp"] == 2 and AD_WEIGHT["am"] == -1
    # ad R weight is readable off the table itself
    for g in GENERATORS:
        expected = AD_WEIGHT[g] * el(g)
        assert bracket_gens("R", g) == expected


def test_bracket_examples():
    assert bracket(el("R"), el("Lp")) == 2 * el("Lp")
    assert bracket(el("ap"), el("am")) == 2 * el("R")
    assert bracket(el("R"), el("R")).is_zero()
    assert bracket(el("Lp"), el("Lm")) == -1 * el("R")


def test_bracket_anticommutator_symmetry():
    # odd-odd pairs anticommute, so both orderings agree
    assert bracket_gens("ap", "atp") == -1 * bracket_gens("atp", "ap")  # dot=0
    assert bracket_gens("ap", "am") == bracket_gens("am", "ap")  # dot=1


def test_structure_table_covers_all_pairs():
    assert len(STRUCTURE_TABLE) == 100
    for (x, y), entry in STRUCTURE_TABLE.items():
        want = degree_add(DEGREE[x], DEGREE[y])
        for g in entry.terms:
            assert DEGREE[g] == want


def test_verify_axioms_passes():
    report = verify_axioms()
    assert report.passed
    assert report.antisymmetry_pairs == 100
    assert report.degree_pairs == 100
    assert report.jacobi_triples == 1000
    assert report.failure is None


def test_verify_axioms_mutation_fails_jacobi():
    table = mutated_table({("R", "Lp"): el("Lp")})
    report = verify_axioms(table)
    assert not report.passed
    assert report.failure["check"] == "jacobi"
    x, y, z = report.failure["generators"]
    # the reported triple really violates the graded Jacobi identity
    s1 = -1 if degree_dot(DEGREE[x], DEGREE[z]) else 1
    s2 = -1 if degree_dot(DEGREE[y], DEGREE[x]) else 1
    s3 = -1 if degree_dot(DEGREE[z], DEGREE[y]) else 1
    residual = (s1 * bracket(el(x), table[(y, z)], table)
                + s2 * bracket(el(y), table[(z, x)], table)
                + s3 * bracket(el(z), table[(x, y)], table))
    assert not residual.is_zero()


def test_verify_axioms_mutation_without_antisymmetrize_fails_antisymmetry():
    table = mutated_table({("R", "Lp"): el("Lp")}, antisymmetrize=False)
    report = verify_axioms(table)
    assert not report.passed
    assert report.failure["check"] == "antisymmetry"


rational = st.fractions(min_value=-10, max_value=10, max_denominator=12)
gen_name = st.sampled_from(GENERATORS)
element = st.dictionaries(gen_name, rational, max_size=4).map(Element)


@settings(max_examples=60, deadline=None)
@given(element, element, element)
def test_bracket_bilinear(x, xp, y):
    lhs = bracket(x + xp, y)
    rhs = bracket(x, y) + bracket(xp, y)
    assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(element, element, rational)
def test_bracket_scalar_linearity(x, y, c):
    assert bracket(c * x, y) == c * bracket(x, y)
    assert bracket(x, c * y) == c * bracket(x, y)


def test_homogeneous_degree_queries():
    assert el("ap").homogeneous_degree() == (0, 1)
    assert (el("R") + el("Lp")).homogeneous_degree() == (0, 0)
    assert (el("R") + el("ap")).homogeneous_degree() is None
    assert Element.zero().homogeneous_degree() is None


def test_table_json_schema_and_rationals():
    rows = table_to_json()
    assert len(rows) == 100
    by_pair = {(row["x"], row["y"]): row["result"] for row in rows}
    assert by_pair[("R", "Lp")] == [{"gen": "Lp", "coeff": "2/1"}]
    assert by_pair[("R", "Rt")] == []
    for row in rows:
        for term in row["result"]:
            num, den = term["coeff"].split("/")
            frac = Fraction(int(num), int(den))
            assert int(den) > 0
            assert Fraction(int(num), int(den)) == frac


def test_element_rejects_unknown_generator():
    with pytest.raises(ValueError):
        Element({"bogus": 1})
