#!/usr/bin/env python3
"""
Tests for the Buchberger engine, ideal operations and zero-dimensional solving
"""

import logging
import random

import pytest
from sympy.polys.orderings import lex

from Summand_Lab.features.groebner import (
    Ideal,
    colon_ideal,
    contains,
    eliminate,
    ideals_equal,
    intersect,
    is_subset,
    monomial_order,
    normal_form,
    rational_points_zero_dim,
    reduced_groebner,
    saturate,
    standard_monomials,
    zero_dim_vector_dimension,
)
from Summand_Lab.features.groebner.orders import BlockOrder, WeightOrder, order_name
from Summand_Lab.features.poly_core import PolyRing, parse_polynomial
from Summand_Lab.utils.errors import BadParameters, BudgetExceeded, NotZeroDimensional, RingMismatch

# Set up logging
logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

XY = PolyRing.of("x,y")
XYZ = PolyRing.of("x,y,z")


def I(ring, *texts):
    return Ideal.parse(ring, texts)


def random_ideal(rng, ring, count):
    """Generators with up to three terms of total degree at most 2."""
    gens = []
    for _ in range(count):
        p = ring.zero()
        for _ in range(rng.randint(1, 3)):
            exps = [0] * ring.arity
            for _ in range(rng.randint(0, 2)):
                exps[rng.randrange(ring.arity)] += 1
            p = p + ring.monomial(exps, rng.choice([-3, -2, -1, 1, 2, 3]))
        gens.append(p)
    return Ideal.of(ring, gens)


def test_reduced_basis_of_textbook_ideal():
    G = reduced_groebner(I(XY, "x^3 - 2*x*y", "x^2*y - 2*y^2 + x"))
    assert [str(g) for g in G.basis] == ["x^2", "x*y", "y^2 - 1/2*x"]
    assert G.is_reduced()
    assert G.all_s_pairs_reduce_to_zero()
    assert G.s_pairs > 0


def test_lex_basis_solves_triangular_system():
    G = reduced_groebner(I(XY, "x^2 + y^2 - 1", "x - y"), lex)
    assert [str(g) for g in G.basis] == ["x - y", "y^2 - 1/2"]


def test_unit_ideal():
    G = reduced_groebner(I(XY, "x", "x + 1"))
    assert G.is_unit()
    assert [str(g) for g in G.basis] == ["1"]


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded) as info:
        reduced_groebner(I(XY, "x^3 - 2*x*y", "x^2*y - 2*y^2 + x"), use_cache=False, s_pair_budget=1)
    assert info.value.code == "budget_exceeded"


def test_reduced_basis_does_not_depend_on_generator_order():
    rng = random.Random(11)
    for _ in range(20):
        ideal = random_ideal(rng, XYZ, rng.randint(2, 3))
        shuffled = list(ideal.generators)
        rng.shuffle(shuffled)
        first = reduced_groebner(ideal, use_cache=False)
        second = reduced_groebner(Ideal.of(XYZ, shuffled), use_cache=False)
        assert first.basis == second.basis


def test_normal_form_is_idempotent_and_congruent():
    rng = random.Random(5)
    ideals = [random_ideal(rng, XYZ, 2) for _ in range(5)]
    for k in range(100):
        ideal = ideals[k % len(ideals)]
        p = random_ideal(rng, XYZ, 1).generators[0]
        once = normal_form(p, ideal)
        assert normal_form(once, ideal) == once
        assert contains(p - once, ideal)


def test_membership_and_inclusion():
    J = I(XY, "x^2", "y")
    assert contains(parse_polynomial("x^2*y + y^3", XY), J)
    assert not contains(parse_polynomial("x", XY), J)
    assert is_subset(I(XY, "x^2*y"), J)
    assert not is_subset(J, I(XY, "x^2*y"))
    assert ideals_equal(I(XY, "x + y", "x - y"), I(XY, "x", "y"))
    with pytest.raises(RingMismatch):
        is_subset(J, I(XYZ, "x"))


def test_elimination_recovers_the_cusp():
    T = PolyRing.of("t,x,y")
    elim = eliminate(I(T, "x - t^2", "y - t^3"), ["x", "y"])
    assert elim.ring == XY
    assert ideals_equal(elim, I(XY, "x^3 - y^2"))


def test_intersection_colon_and_saturation():
    assert ideals_equal(intersect(I(XY, "x"), I(XY, "y")), I(XY, "x*y"))
    assert ideals_equal(intersect(I(XY, "x^2", "y"), I(XY, "x")), I(XY, "x^2", "x*y"))
    assert ideals_equal(colon_ideal(I(XY, "x*y"), I(XY, "x")), I(XY, "y"))
    assert ideals_equal(saturate(I(XY, "x^2*y"), I(XY, "x")), I(XY, "y"))
    assert ideals_equal(saturate(I(XY, "x^2", "x*y"), I(XY, "x", "y")), I(XY, "x"))


def test_standard_monomials_and_dimension():
    G = reduced_groebner(I(XY, "x^2", "y^2"))
    assert standard_monomials(G) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert zero_dim_vector_dimension(I(XY, "x^2", "y^3")) == 6
    with pytest.raises(NotZeroDimensional):
        zero_dim_vector_dimension(I(XY, "x"))


def test_rational_points():
    found = rational_points_zero_dim(I(XY, "x^2 - 1", "y - x"))
    assert found.points == ((-1, -1), (1, 1))
    assert not found.has_nonrational

    irrational = rational_points_zero_dim(I(XY, "x^2 - 2", "y"))
    assert irrational.points == ()
    assert irrational.total_dimension == 2
    assert irrational.has_nonrational

    double = rational_points_zero_dim(I(XY, "x^2", "y"))
    assert double.points == ((0, 0),)
    assert double.rational_multiplicity == 2


def test_order_names():
    assert order_name(monomial_order("lex")) == "lex"
    assert order_name(monomial_order("degrevlex")) == "degrevlex"
    assert monomial_order("block:1") == BlockOrder(1)
    assert monomial_order("weight:1,2") == WeightOrder([1, 2])
    with pytest.raises(BadParameters):
        monomial_order("revlex")
    with pytest.raises(BadParameters):
        monomial_order("block:k")
