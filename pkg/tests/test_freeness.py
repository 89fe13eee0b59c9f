"""
Tests for the star-span elimination and the freeness certificates
"""
import sys
from fractions import Fraction
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree.errors import FreenessError
from bracetree.freemod import LinComb
from bracetree.freeness import (
    DegreeBasis,
    RowReducer,
    star_span,
    verify_freeness,
    verify_nap_freeness,
    verify_prelie_generation,
)
from bracetree.reports import DegreeReport, FreenessReport


def test_row_reducer_rank_and_pivots():
    reducer = RowReducer()
    assert reducer.insert({0: 2, 1: 4})
    assert reducer.insert({1: 1, 2: -3})
    assert not reducer.insert({0: 1, 1: 2})
    assert not reducer.insert({0: 2, 1: 5, 2: -3})
    assert not reducer.insert({})
    assert reducer.rank == 2
    assert reducer.pivots == (1, 2)


def test_row_reducer_pivots_ignore_insertion_order():
    vectors = [{0: 1, 2: 1}, {1: 1, 2: 1}, {0: 1, 1: -1}, {3: 2, 0: -1}]
    forward, backward = RowReducer(), RowReducer()
    for vector in vectors:
        forward.insert(vector)
    for vector in reversed(vectors):
        backward.insert(vector)
    assert forward.pivots == backward.pivots
    assert forward.rank == 3


def test_degree_basis_vector(one):
    basis = DegreeBasis.build(3, one)
    assert len(basis) == 2
    first, second = basis.trees
    combo = LinComb([(first, Fraction(1, 2)), (second, Fraction(-1, 3))])
    assert basis.vector(combo) == {0: 3, 1: -2}
    assert basis.vector(LinComb()) == {}


def test_star_span_low_degrees(one):
    first = star_span(1, one)
    assert (first.span_dim, len(first.complement)) == (0, 1)
    second = star_span(2, one)
    assert (second.span_dim, len(second.complement)) == (1, 0)


def test_star_span_degree_four_generator(one):
    span = star_span(4, one)
    assert len(span.complement) == 1
    assert [t.serialize() for t in span.complement_trees] == ["a[a,a[a]]"]


@pytest.mark.parametrize("degree", [1, 2, 3, 4, 5])
def test_rank_nullity_and_blocks(two, degree):
    span = star_span(degree, two)
    assert span.span_dim + len(span.complement) == span.dimension
    assert not set(span.pivots) & set(span.complement)
    assert sum(block.dim for block in span.blocks) == span.dimension
    assert sum(block.star_span for block in span.blocks) == span.span_dim
    for block in span.blocks:
        assert block.weight == degree
        if block.fertility == 0:
            assert block.star_span == 0
            assert degree == 1


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_complement_independent_of_insertion_order(one, seed):
    reference = star_span(6, one)
    shuffled = star_span(6, one, shuffle_seed=seed)
    assert shuffled.complement == reference.complement
    assert shuffled.span_dim == reference.span_dim


def test_nap_freeness_single_decoration(one):
    report = verify_nap_freeness(one, 6)
    assert [d.complement for d in report.degrees] == [1, 0, 0, 1, 3, 11]
    assert report.passed
    assert all(d.prelie_full_rank is None for d in report.degrees)


def test_nap_freeness_two_decorations(two):
    report = verify_nap_freeness(two, 4)
    assert [d.complement for d in report.degrees] == [2, 0, 2, 20]
    assert report.passed


def test_nap_freeness_degree_one(one):
    report = verify_nap_freeness(one, 1)
    assert [d.complement for d in report.degrees] == [1]


def test_prelie_generation_degree_two(one):
    report = verify_prelie_generation(one, 2)
    assert report.degrees[1].prelie_rank == 1
    assert report.degrees[1].prelie_full_rank


@pytest.mark.slow
def test_prelie_generation_single_decoration(one):
    report = verify_prelie_generation(one, 6)
    assert all(d.prelie_full_rank for d in report.degrees)
    assert report.passed


@pytest.mark.slow
def test_prelie_generation_two_decorations(two):
    report = verify_prelie_generation(two, 4)
    assert all(d.prelie_full_rank for d in report.degrees)


def test_graded_alphabet_freeness(graded):
    report = verify_freeness(graded, 5)
    report.raise_for_failures()
    assert [d.expected_generators for d in report.degrees] == [d.complement for d in report.degrees]


def test_freeness_report_is_deterministic(one):
    first = verify_freeness(one, 5)
    second = verify_freeness(one, 5)
    assert first.model_dump_json() == second.model_dump_json()
    assert first.degrees[3].complement_trees == ["a[a,a[a]]"]


@pytest.mark.slow
def test_parallel_matches_serial(one):
    serial = verify_freeness(one, 5)
    parallel = verify_freeness(one, 5, parallel=True, workers=2)
    assert parallel == serial


def test_raise_for_failures():
    failing = DegreeReport(
        n=3, dim=2, star_span=2, complement=0, expected_generators=1, failures=["complement mismatch"]
    )
    report = FreenessReport(alphabet=["a"], grades=[1], max_degree=3, degrees=[failing])
    assert not report.passed
    with pytest.raises(FreenessError) as exc_info:
        report.raise_for_failures()
    assert exc_info.value.degree == 3
    assert exc_info.value.expected == 1
    assert exc_info.value.actual == 0
