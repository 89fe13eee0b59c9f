"""
Degree-by-degree certificates that the free brace algebra is free as a
non-associative permutative algebra and as a pre-Lie algebra.

For each degree n the star products of lower-degree trees are row reduced
over the planar tree basis. Non-pivot trees form the graded complement V(n),
whose size must match the generator series; V(n) together with the pre-Lie
products of lower degrees must then span the whole degree.
"""
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Tuple

from bracetree.config import default_max_degree
from bracetree.freemod import LinComb
from bracetree.products import prelie_planar, star_planar
from bracetree.reports import BlockReport, DegreeReport, FreenessReport
from bracetree.series import generator_hilbert
from bracetree.trees import DecorationAlphabet, PlanarTree, enumerate_planar

logger = logging.getLogger(__name__)

Vector = Dict[int, int]


@dataclass(frozen=True)
class DegreeBasis:
    """Planar trees of one weight, in canonical order, with index lookup."""

    degree: int
    trees: Tuple[PlanarTree, ...]
    index: Dict[PlanarTree, int] = field(compare=False, repr=False)

    @classmethod
    def build(cls, degree: int, alphabet: DecorationAlphabet) -> "DegreeBasis":
        trees = tuple(enumerate_planar(degree, alphabet))
        return cls(degree, trees, {tree: i for i, tree in enumerate(trees)})

    def __len__(self) -> int:
        return len(self.trees)

    def vector(self, combo: LinComb) -> Vector:
        """Integer coordinates of a combination, denominators cleared."""
        scale = lcm(*(c.denominator for _, c in combo.items())) if combo else 1
        return {self.index[tree]: int(c * scale) for tree, c in combo.items()}


def _normalize(row: Vector) -> Vector:
    divisor = gcd(*row.values())
    if row[max(row)] < 0:
        divisor = -divisor
    return {col: value // divisor for col, value in row.items()}


class RowReducer:
    """
    Incremental echelon form over the integers.

    Each stored row is keyed by its leading column, the largest index in
    its support, so the pivot set depends only on the span inserted.
    """

    def __init__(self):
        self._rows: Dict[int, Vector] = {}

    def insert(self, vector: Vector) -> bool:
        """Add a vector; True if it increased the rank."""
        row = {col: value for col, value in vector.items() if value}
        while row:
            lead = max(row)
            pivot = self._rows.get(lead)
            if pivot is None:
                self._rows[lead] = _normalize(row)
                return True
            g = gcd(pivot[lead], row[lead])
            a, b = pivot[lead] // g, row[lead] // g
            reduced = {}
            for col in row.keys() | pivot.keys():
                value = a * row.get(col, 0) - b * pivot.get(col, 0)
                if value:
                    reduced[col] = value
            row = _normalize(reduced) if reduced else reduced
        return False

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(sorted(self._rows))


@dataclass(frozen=True)
class BlockSummary:
    weight: int
    fertility: int
    dim: int
    star_span: int

    @property
    def complement(self) -> int:
        return self.dim - self.star_span

    def to_report(self) -> BlockReport:
        return BlockReport(
            weight=self.weight,
            fertility=self.fertility,
            dim=self.dim,
            star_span=self.star_span,
            complement=self.complement,
        )


@dataclass(frozen=True)
class SpanResult:
    degree: int
    dimension: int
    span_dim: int
    pivots: Tuple[int, ...]
    complement: Tuple[int, ...]
    blocks: Tuple[BlockSummary, ...]
    basis: DegreeBasis = field(repr=False)

    @property
    def complement_trees(self) -> Tuple[PlanarTree, ...]:
        return tuple(self.basis.trees[i] for i in self.complement)


def _weight_split_pairs(degree: int, alphabet: DecorationAlphabet) -> Iterable[Tuple[PlanarTree, PlanarTree]]:
    for w in range(1, degree):
        for t1 in enumerate_planar(w, alphabet):
            for t2 in enumerate_planar(degree - w, alphabet):
                yield t1, t2


def star_span(
    degree: int, alphabet: DecorationAlphabet, shuffle_seed: Optional[int] = None
) -> SpanResult:
    """
    Row reduce all star products of total weight `degree`.

    Each product t1 * t2 lies in the block of root fertility
    fertility(t2) + 1, so every block is reduced on its own.
    `shuffle_seed` permutes the insertion order.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    basis = DegreeBasis.build(degree, alphabet)
    vectors = [
        (t2.fertility + 1, basis.vector(star_planar(t1, t2)))
        for t1, t2 in _weight_split_pairs(degree, alphabet)
    ]
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(vectors)

    reducers: Dict[int, RowReducer] = {}
    for fertility, vector in vectors:
        reducers.setdefault(fertility, RowReducer()).insert(vector)

    dims: Dict[int, int] = {}
    for tree in basis.trees:
        dims[tree.fertility] = dims.get(tree.fertility, 0) + 1
    blocks = tuple(
        BlockSummary(
            weight=degree,
            fertility=fertility,
            dim=dims[fertility],
            star_span=reducers[fertility].rank if fertility in reducers else 0,
        )
        for fertility in sorted(dims)
    )

    pivots = tuple(sorted(p for reducer in reducers.values() for p in reducer.pivots))
    pivot_set = set(pivots)
    complement = tuple(i for i in range(len(basis)) if i not in pivot_set)
    return SpanResult(
        degree=degree,
        dimension=len(basis),
        span_dim=len(pivots),
        pivots=pivots,
        complement=complement,
        blocks=blocks,
        basis=basis,
    )


def prelie_rank(span: SpanResult, alphabet: DecorationAlphabet) -> int:
    """Rank of V(n) together with all pre-Lie products of total weight n."""
    basis = span.basis
    reducer = RowReducer()
    for i in span.complement:
        reducer.insert({i: 1})
    for t1, t2 in _weight_split_pairs(span.degree, alphabet):
        if reducer.rank == span.dimension:
            break
        reducer.insert(basis.vector(prelie_planar(t1, t2)))
    return reducer.rank


def _degree_report(
    degree: int,
    alphabet: DecorationAlphabet,
    expected: int,
    check_nap: bool,
    check_prelie: bool,
) -> Tuple[DegreeReport, float]:
    started = time.perf_counter()
    span = star_span(degree, alphabet)
    failures: List[str] = []
    if check_nap and len(span.complement) != expected:
        failures.append(
            f"complement has {len(span.complement)} trees, generator series predicts {expected}"
        )

    full_rank: Optional[bool] = None
    rank: Optional[int] = None
    if check_prelie:
        rank = prelie_rank(span, alphabet)
        full_rank = rank == span.dimension
        if not full_rank:
            failures.append(
                f"V({degree}) and pre-Lie products span {rank} of {span.dimension} dimensions, "
                f"quotient dimension {span.dimension - rank}"
            )

    report = DegreeReport(
        n=degree,
        dim=span.dimension,
        star_span=span.span_dim,
        complement=len(span.complement),
        expected_generators=expected,
        prelie_full_rank=full_rank,
        prelie_rank=rank,
        complement_trees=[tree.serialize() for tree in span.complement_trees],
        blocks=[block.to_report() for block in span.blocks],
        failures=failures,
    )
    return report, time.perf_counter() - started


def _verify(
    alphabet: DecorationAlphabet,
    max_degree: Optional[int],
    check_nap: bool,
    check_prelie: bool,
    parallel: bool = False,
    workers: int = 0,
) -> FreenessReport:
    if max_degree is None:
        max_degree = default_max_degree(len(alphabet))
    if max_degree < 1:
        raise ValueError(f"max degree must be positive, got {max_degree}")
    cap = default_max_degree(len(alphabet))
    if max_degree > cap:
        logger.warning(
            f"Verifying up to degree {max_degree} with {len(alphabet)} decorations; "
            f"the default cap is {cap} and dense elimination may be slow"
        )

    generators = generator_hilbert(alphabet.hilbert_series(max_degree))
    expected = {n: int(generators[n]) for n in range(1, max_degree + 1)}
    degrees = range(1, max_degree + 1)

    if parallel and max_degree > 1:
        logger.info(f"Verifying degrees 1..{max_degree} in a process pool")
        with ProcessPoolExecutor(max_workers=workers or None) as pool:
            futures = [
                pool.submit(_degree_report, n, alphabet, expected[n], check_nap, check_prelie)
                for n in degrees
            ]
            results = [future.result() for future in futures]
    else:
        results = [_degree_report(n, alphabet, expected[n], check_nap, check_prelie) for n in degrees]

    reports = []
    for report, elapsed in sorted(results, key=lambda item: item[0].n):
        logger.info(
            f"Degree {report.n}: dim={report.dim} star_span={report.star_span} "
            f"complement={report.complement} expected={report.expected_generators} "
            f"in {elapsed:.3f}s"
        )
        for failure in report.failures:
            logger.error(f"Degree {report.n}: {failure}")
        reports.append(report)

    return FreenessReport(
        alphabet=list(alphabet.symbols),
        grades=list(alphabet.grades),
        max_degree=max_degree,
        degrees=reports,
    )


def verify_nap_freeness(
    alphabet: DecorationAlphabet, max_degree: Optional[int] = None, parallel: bool = False, workers: int = 0
) -> FreenessReport:
    """Check complement sizes against the generator series up to max_degree."""
    return _verify(alphabet, max_degree, check_nap=True, check_prelie=False, parallel=parallel, workers=workers)


def verify_prelie_generation(
    alphabet: DecorationAlphabet, max_degree: Optional[int] = None, parallel: bool = False, workers: int = 0
) -> FreenessReport:
    """Check that V(n) and pre-Lie products span every degree up to max_degree."""
    return _verify(alphabet, max_degree, check_nap=False, check_prelie=True, parallel=parallel, workers=workers)


def verify_freeness(
    alphabet: DecorationAlphabet, max_degree: Optional[int] = None, parallel: bool = False, workers: int = 0
) -> FreenessReport:
    """Both checks, merged into one report per degree."""
    return _verify(alphabet, max_degree, check_nap=True, check_prelie=True, parallel=parallel, workers=workers)
