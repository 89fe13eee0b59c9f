"""
Integration tests for the full system
"""
import sys
import time
from collections import Counter
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from bracetree.axioms import run_axiom
from bracetree.freeness import verify_freeness
from bracetree.products import brace, prelie_rooted
from bracetree.series import Series, brace_hilbert, generator_hilbert, generator_polynomial, prelie_hilbert
from bracetree.trees import DecorationAlphabet, count_planar, count_rooted


def decorated_shape(tree):
    """Shape-and-decoration key with children as a multiset."""
    return (tree.decoration, tuple(sorted(decorated_shape(child) for child in tree.children)))


@pytest.mark.integration
def test_enumeration_and_series_agree(one):
    """Tree tables and Hilbert series give the same dimensions through weight 7."""
    started = time.perf_counter()
    planar = [count_planar(n, one) for n in range(1, 8)]
    rooted = [count_rooted(n, one) for n in range(1, 8)]
    assert planar[:5] == [1, 1, 2, 5, 14]
    assert rooted[:5] == [1, 1, 2, 4, 9]
    assert planar == brace_hilbert(Series.monomial(1, 7)).integers()[1:]
    assert rooted == prelie_hilbert(Series.monomial(1, 7)).integers()[1:]
    assert (planar[6], rooted[6]) == (132, 48)
    assert time.perf_counter() - started < 5


@pytest.mark.integration
@pytest.mark.parametrize("size", [1, 2, 3])
def test_generator_counts(size):
    g = generator_hilbert(Series.monomial(1, 7, size))
    assert [int(g[n]) for n in range(1, 8)] == [generator_polynomial(n, size) for n in range(1, 8)]


@pytest.mark.integration
@pytest.mark.parametrize(
    "f_d",
    [Series.monomial(1, 10), Series.monomial(1, 10, 2), Series.monomial(1, 10, 3), Series([0, 1, 1] + [0] * 8)],
)
def test_generators_regenerate_brace_algebra(f_d):
    assert prelie_hilbert(generator_hilbert(f_d)) == brace_hilbert(f_d)


@pytest.mark.integration
def test_worked_examples_as_multisets(rooted, planar):
    three = prelie_rooted(rooted("a"), rooted("d[b,c]"))
    assert Counter(decorated_shape(t) for t in three) == Counter(
        decorated_shape(rooted(text)) for text in ("d[a,b,c]", "d[b[a],c]", "d[b,c[a]]")
    )

    six = brace([planar("a"), planar("b")], planar("d[c]"))
    printed = ("d[a,b,c]", "d[a,c[b]]", "d[a,c,b]", "d[c[a,b]]", "d[c[a],b]", "d[c,a,b]")
    assert Counter(decorated_shape(t) for t in six) == Counter(decorated_shape(planar(text)) for text in printed)


@pytest.mark.integration
@pytest.mark.slow
def test_axiom_suites(one):
    """All suites with 100 seeded trials per configuration."""
    started = time.perf_counter()
    reports = []
    for name in ("prelie", "nap"):
        reports += run_axiom(name, one, max_weight=6, trials=100, seed=42)
    for name in ("brace", "e1", "shuffle"):
        reports += run_axiom(name, one, trials=100, seed=42)
    failing = [r for r in reports if not r.passed]
    assert failing == []
    assert time.perf_counter() - started < 60


@pytest.mark.integration
@pytest.mark.slow
@pytest.mark.parametrize("size, max_degree, complements", [(1, 6, [1, 0, 0, 1, 3, 11]), (2, 4, [2, 0, 2, 20])])
def test_freeness_at_desk_scale(size, max_degree, complements):
    report = verify_freeness(DecorationAlphabet.from_size(size), max_degree)
    report.raise_for_failures()
    assert [d.complement for d in report.degrees] == complements
    assert [d.complement for d in report.degrees] == [d.expected_generators for d in report.degrees]
    assert all(d.prelie_full_rank for d in report.degrees)
    assert all(d.prelie_rank == d.dim for d in report.degrees)


@pytest.mark.performance
@pytest.mark.slow
def test_default_degree_cap_single_decoration():
    """Degree 7 with one decoration: 132 planar trees."""
    started = time.perf_counter()
    report = verify_freeness(DecorationAlphabet.from_size(1))
    assert report.max_degree == 7
    assert report.degrees[-1].dim == 132
    assert report.degrees[-1].complement == 34
    assert report.passed
    assert time.perf_counter() - started < 120
