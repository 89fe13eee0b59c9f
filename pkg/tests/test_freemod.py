"""
Tests for linear combinations of trees
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree.errors import BasisKindError, TreeSyntaxError
from bracetree.freemod import (
    LinComb,
    add,
    bilinear_extend,
    flatten,
    linear_extend,
    multilinear_extend,
    parse_lincomb,
    scale,
)
from bracetree.products import brace
from bracetree.trees import DecorationAlphabet, enumerate_planar

ALPHABET = DecorationAlphabet.from_symbols("a,b")
BASIS = [t for n in range(1, 4) for t in enumerate_planar(n, ALPHABET)]

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
combinations = st.lists(st.tuples(st.sampled_from(BASIS), rationals), max_size=6).map(LinComb)


def test_add_cancels_to_zero(planar):
    t = LinComb.basis(planar("a[b]"))
    assert add(t * 2, t * -2) == LinComb.zero()
    assert not add(t * 2, t * -2)
    assert (t * 2 - t * 2).serialize() == "0"


def test_scale_by_zero(planar):
    x = LinComb([(planar("a"), 3), (planar("b[c]"), Fraction(1, 2))])
    assert scale(0, x) == LinComb.zero()
    assert len(scale(0, x)) == 0


def test_add_same_term(planar):
    t = LinComb.basis(planar("c"))
    assert add(t, t) == LinComb.basis(planar("c"), 2)
    assert add(t, t)[planar("c")] == 2


def test_no_zero_coefficients_are_stored(planar):
    x = LinComb([(planar("a"), 1), (planar("b"), 0), (planar("a"), -1)])
    assert len(x) == 0
    assert x.kind is None


def test_canonical_term_order(planar):
    x = LinComb([(planar("d[a]"), 1), (planar("b"), 1), (planar("a"), 1)])
    y = LinComb([(planar("a"), 1), (planar("d[a]"), 1), (planar("b"), 1)])
    assert x.serialize() == y.serialize() == "a + b + d[a]"
    assert hash(x) == hash(y)


def test_serialize_coefficients(planar):
    x = LinComb([(planar("a"), -1), (planar("b"), Fraction(3, 2)), (planar("c[d]"), -2)])
    assert x.serialize() == "-a + 3/2*b - 2*c[d]"


def test_mixing_basis_kinds_fails(planar, rooted):
    with pytest.raises(BasisKindError):
        LinComb([(planar("a"), 1), (rooted("a"), 1)])
    with pytest.raises(BasisKindError):
        LinComb.basis(planar("a")) + LinComb.basis(rooted("b"))
    with pytest.raises(BasisKindError):
        flatten(LinComb.basis(rooted("a")))


def test_forest_basis(planar):
    x = LinComb([((planar("a"), planar("b")), 1), ((), 2)])
    assert x.kind == "forest"
    assert x.serialize() == "2*() + (a,b)"


def test_flatten_cancels_embeddings(planar, rooted):
    x = LinComb([(planar("a[b,c]"), 1), (planar("a[c,b]"), -1)])
    assert flatten(x) == LinComb.zero()
    y = LinComb([(planar("a[b,c]"), 1), (planar("a[c,b]"), 1)])
    assert flatten(y) == LinComb.basis(rooted("a[b,c]"), 2)


def test_flatten_of_brace_with_repeated_decorations(one):
    """Six planar terms of <a,a; a[a]> land on fewer rooted trees."""
    a, target = enumerate_planar(1, one)[0], enumerate_planar(2, one)[0]
    planar_terms = brace([a, a], target)
    rooted_terms = flatten(planar_terms)
    assert planar_terms.total_multiplicity() == 6
    assert rooted_terms.total_multiplicity() == 6
    assert len(rooted_terms) < 6
    assert rooted_terms.weights() == {4}


def test_linear_extensions(planar):
    t1, t2, u = planar("a"), planar("b"), planar("c")

    def pair(x, y):
        return LinComb.basis(x.with_children((y,)))

    extended = bilinear_extend(pair)
    assert extended(LinComb.basis(t1), LinComb.basis(u)) == pair(t1, u)
    assert extended(LinComb.basis(t1, 2), LinComb.basis(u)) == pair(t1, u) * 2
    assert extended(LinComb.basis(t1) + LinComb.basis(t2), LinComb.basis(u)) == pair(t1, u) + pair(t2, u)

    doubled = linear_extend(lambda t: LinComb.basis(t, 2))
    assert doubled(LinComb.basis(t1) - LinComb.basis(t2)) == LinComb([(t1, 2), (t2, -2)])

    triple = multilinear_extend(lambda x, y, z: LinComb.basis(z.with_children((x, y))))
    result = triple(LinComb.basis(t1, 2), LinComb.basis(t2) + LinComb.basis(u), LinComb.basis(u, 3))
    assert result == LinComb([(planar("c[a,b]"), 6), (planar("c[a,c]"), 6)])


def test_parse_lincomb(abcd, planar, rooted):
    x = parse_lincomb("2*d[a,b] - 1/2*c + a", abcd)
    assert x == LinComb([(planar("d[a,b]"), 2), (planar("c"), Fraction(-1, 2)), (planar("a"), 1)])
    assert parse_lincomb("0", abcd) == LinComb.zero()
    assert parse_lincomb("-a", abcd) == LinComb.basis(planar("a"), -1)
    assert parse_lincomb("a[b,c] - a[c,b]", abcd, kind="rooted") == LinComb.zero()
    assert parse_lincomb(x.serialize(), abcd) == x


@pytest.mark.parametrize("text", ["", "2 a", "a +", "1/0*a", "a - - b"])
def test_parse_lincomb_errors(abcd, text):
    with pytest.raises(TreeSyntaxError):
        parse_lincomb(text, abcd)


@given(combinations, combinations, combinations)
@settings(max_examples=50, deadline=None)
def test_addition_is_associative_and_commutative(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)


@given(rationals, combinations, combinations)
@settings(max_examples=50, deadline=None)
def test_scaling_distributes(c, x, y):
    assert scale(c, x + y) == scale(c, x) + scale(c, y)
    assert x - x == LinComb.zero()


@given(combinations)
@settings(max_examples=50, deadline=None)
def test_flatten_is_linear_and_weight_preserving(x):
    assert flatten(x * 3) == flatten(x) * 3
    assert flatten(x).weights() <= x.weights()
