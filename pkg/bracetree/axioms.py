"""
Seeded property suites for the algebraic identities of the products.
"""
import logging
import random
from itertools import product
from typing import Callable, List, Optional, Sequence, Tuple

from bracetree.freemod import LinComb, bilinear_extend
from bracetree.products import (
    brace_axiom_sides,
    graft,
    prelie_planar,
    prelie_rooted,
    shuffle,
    shuffle_product,
    star_planar,
    star_rooted,
)
from bracetree.reports import AxiomReport
from bracetree.series import Series, brace_hilbert
from bracetree.trees import (
    DecorationAlphabet,
    Forest,
    PlanarTree,
    RootedTree,
    TreeBase,
    b_planar,
    count_rooted,
    enumerate_forests,
    enumerate_planar,
    enumerate_rooted,
    serialize_forest,
)

logger = logging.getLogger(__name__)

AXIOMS = ("prelie", "nap", "brace", "e1", "shuffle")


class RandomTreeGenerator:
    """Uniform random planar trees, rooted trees and planar forests of a given weight."""

    def __init__(self, alphabet: DecorationAlphabet, seed: int = 42):
        self.alphabet = alphabet
        self.rng = random.Random(seed)
        self._order = 0
        self._trees: List[int] = [0]
        self._forests: List[int] = [1]

    def _ensure(self, weight: int) -> None:
        if weight <= self._order:
            return
        order = max(weight, 2 * self._order, 8)
        trees = brace_hilbert(self.alphabet.hilbert_series(order))
        forests = (Series.one(order) - trees).inverse()
        self._trees = trees.integers()
        self._forests = forests.integers()
        self._order = order

    def tree_count(self, weight: int) -> int:
        self._ensure(weight)
        return self._trees[weight] if weight >= 1 else 0

    def forest_count(self, weight: int) -> int:
        self._ensure(weight)
        return self._forests[weight] if weight >= 0 else 0

    def _pick(self, options: Sequence[Tuple[object, int]]):
        # count-weighted choice with exact integers
        ticket = self.rng.randrange(sum(count for _, count in options))
        for option, count in options:
            if ticket < count:
                return option
            ticket -= count
        raise AssertionError("ticket beyond total count")

    def planar_tree(self, weight: int) -> PlanarTree:
        if self.tree_count(weight) == 0:
            raise ValueError(f"no planar trees of weight {weight}")
        options = [
            (symbol, self.forest_count(weight - grade))
            for symbol, grade in zip(self.alphabet.symbols, self.alphabet.grades)
            if grade <= weight
        ]
        symbol = self._pick(options)
        forest = self.planar_forest(weight - self.alphabet.grade(symbol))
        return b_planar(symbol, forest, self.alphabet)

    def planar_forest(self, weight: int) -> Forest:
        if weight == 0:
            return ()
        if self.forest_count(weight) == 0:
            raise ValueError(f"no planar forests of weight {weight}")
        options = [
            (w, self.tree_count(w) * self.forest_count(weight - w)) for w in range(1, weight + 1)
        ]
        head = self._pick([(w, c) for w, c in options if c])
        return (self.planar_tree(head),) + self.planar_forest(weight - head)

    def planar_tree_up_to(self, max_weight: int) -> PlanarTree:
        return self.planar_tree(self.rng.choice([w for w in range(1, max_weight + 1) if self.tree_count(w)]))

    def planar_forest_up_to(self, max_weight: int) -> Forest:
        return self.planar_forest(self.rng.choice([w for w in range(0, max_weight + 1) if self.forest_count(w)]))

    def rooted_tree(self, weight: int) -> RootedTree:
        return self.rng.choice(enumerate_rooted(weight, self.alphabet))

    def weights(self, total: int, parts: int, counter: Callable[[int], int]) -> Optional[Tuple[int, ...]]:
        """Random composition of `total` into `parts` weights that all carry trees."""
        compositions = [
            c for c in _compositions(total, parts) if all(counter(w) for w in c)
        ]
        return self.rng.choice(compositions) if compositions else None


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    if parts == 1:
        return [(total,)] if total >= 1 else []
    return [
        (first,) + rest
        for first in range(1, total)
        for rest in _compositions(total - first, parts - 1)
    ]


def _describe(**values) -> str:
    parts = []
    for name, value in values.items():
        if isinstance(value, TreeBase):
            parts.append(f"{name}={value.serialize()}")
        else:
            parts.append(f"{name}={serialize_forest(value)}")
    return ", ".join(parts)


def _report(axiom: str, cases: int, counterexamples: List[str]) -> AxiomReport:
    if counterexamples:
        logger.error(f"{axiom}: {len(counterexamples)} counterexamples in {cases} cases")
    else:
        logger.info(f"{axiom}: {cases} cases passed")
    return AxiomReport(axiom=axiom, cases=cases, counterexamples=counterexamples)


def _random_triples(
    generator: RandomTreeGenerator,
    sample: Callable[[int], TreeBase],
    counter: Callable[[int], int],
    max_weight: int,
    trials: int,
):
    for total in range(3, max_weight + 1):
        for _ in range(trials):
            weights = generator.weights(total, 3, counter)
            if weights is None:
                break
            yield tuple(sample(w) for w in weights)


def check_prelie(
    alphabet: DecorationAlphabet, max_weight: int = 5, trials: int = 100, seed: int = 42
) -> List[AxiomReport]:
    """(x.y).z - x.(y.z) symmetric in x and y, on planar and rooted trees."""
    reports = []
    for kind, op in (("planar", prelie_planar), ("rooted", prelie_rooted)):
        generator = RandomTreeGenerator(alphabet, seed)
        sample: Callable[[int], TreeBase]
        counter: Callable[[int], int]
        if kind == "planar":
            sample, counter = generator.planar_tree, generator.tree_count
        else:
            sample, counter = generator.rooted_tree, (lambda w: count_rooted(w, alphabet))
        extended = bilinear_extend(op)

        def associator(a: LinComb, b: LinComb, c: LinComb) -> LinComb:
            return extended(extended(a, b), c) - extended(a, extended(b, c))

        cases, bad = 0, []
        for x, y, z in _random_triples(generator, sample, counter, max_weight, trials):
            cases += 1
            lx, ly, lz = LinComb.basis(x), LinComb.basis(y), LinComb.basis(z)
            if associator(lx, ly, lz) != associator(ly, lx, lz):
                bad.append(_describe(x=x, y=y, z=z))
        reports.append(_report(f"prelie-{kind}", cases, bad))
    return reports


def check_nap(
    alphabet: DecorationAlphabet, max_weight: int = 5, trials: int = 100, seed: int = 42
) -> List[AxiomReport]:
    """x*(y*z) = y*(x*z) for the root-grafting products."""
    reports = []

    generator = RandomTreeGenerator(alphabet, seed)
    star = bilinear_extend(star_planar)
    cases, bad = 0, []
    for x, y, z in _random_triples(generator, generator.planar_tree, generator.tree_count, max_weight, trials):
        cases += 1
        lx, ly, lz = LinComb.basis(x), LinComb.basis(y), LinComb.basis(z)
        if star(lx, star(ly, lz)) != star(ly, star(lx, lz)):
            bad.append(_describe(x=x, y=y, z=z))
    reports.append(_report("nap-planar", cases, bad))

    generator = RandomTreeGenerator(alphabet, seed)
    cases, bad = 0, []
    counter = lambda w: count_rooted(w, alphabet)  # noqa: E731
    for x, y, z in _random_triples(generator, generator.rooted_tree, counter, max_weight, trials):
        cases += 1
        if star_rooted(x, star_rooted(y, z)) != star_rooted(y, star_rooted(x, z)):
            bad.append(_describe(x=x, y=y, z=z))
    reports.append(_report("nap-rooted", cases, bad))
    return reports


def _trees_up_to(weight: int, alphabet: DecorationAlphabet) -> List[PlanarTree]:
    return [tree for w in range(1, weight + 1) for tree in enumerate_planar(w, alphabet)]


def check_brace(
    alphabet: DecorationAlphabet,
    max_weight: int = 3,
    trials: int = 0,
    seed: int = 42,
    arg_weight: int = 2,
) -> List[AxiomReport]:
    """
    Brace composition identity for one or two outer and inner arguments.

    Exhaustive over arguments of weight <= arg_weight and targets of weight
    <= max_weight; `trials` random instances per (m, n) are added on top.
    """
    arguments = _trees_up_to(arg_weight, alphabet)
    targets = _trees_up_to(max_weight, alphabet)
    cases, bad = 0, []

    def check(outer: Tuple[PlanarTree, ...], inner: Tuple[PlanarTree, ...], target: PlanarTree) -> None:
        nonlocal cases
        cases += 1
        left, right = brace_axiom_sides(outer, inner, target)
        if left != right:
            bad.append(_describe(outer=outer, inner=inner, target=target))

    for m, n in product((1, 2), repeat=2):
        for outer in product(arguments, repeat=m):
            for inner in product(arguments, repeat=n):
                for target in targets:
                    check(outer, inner, target)

    generator = RandomTreeGenerator(alphabet, seed)
    for m, n in product((1, 2), repeat=2):
        for _ in range(trials):
            outer = tuple(generator.planar_tree_up_to(arg_weight) for _ in range(m))
            inner = tuple(generator.planar_tree_up_to(arg_weight) for _ in range(n))
            target = generator.planar_tree_up_to(max_weight)
            check(outer, inner, target)

    return [_report("brace", cases, bad)]


def check_e1(alphabet: DecorationAlphabet, max_weight: int = 3) -> List[AxiomReport]:
    """x * B_d(y) = B_d(x shuffled into y), for every x and forest y up to max_weight."""
    cases, bad = 0, []
    forests = [f for w in range(0, max_weight + 1) for f in enumerate_forests(w, alphabet)]
    for x in _trees_up_to(max_weight, alphabet):
        for y in forests:
            for decoration in alphabet.symbols:
                cases += 1
                left = star_planar(x, b_planar(decoration, y, alphabet))
                right = graft(decoration, shuffle((x,), y), alphabet)
                if left != right:
                    bad.append(_describe(x=x, y=y) + f", d={decoration}")
    return [_report("e1", cases, bad)]


def check_shuffle(
    alphabet: DecorationAlphabet, max_weight: int = 3, trials: int = 100, seed: int = 42
) -> List[AxiomReport]:
    """Commutativity and associativity of the shuffle product on random forests."""
    generator = RandomTreeGenerator(alphabet, seed)
    cases, bad = 0, []
    for _ in range(trials):
        f1, f2, f3 = (generator.planar_forest_up_to(max_weight) for _ in range(3))
        cases += 1
        if shuffle(f1, f2) != shuffle(f2, f1):
            bad.append("commutativity: " + _describe(f1=f1, f2=f2))
        left = shuffle_product(shuffle(f1, f2), LinComb.basis(f3))
        right = shuffle_product(LinComb.basis(f1), shuffle(f2, f3))
        if left != right:
            bad.append("associativity: " + _describe(f1=f1, f2=f2, f3=f3))
    return [_report("shuffle", cases, bad)]


def run_axiom(
    name: str,
    alphabet: DecorationAlphabet,
    max_weight: Optional[int] = None,
    trials: int = 100,
    seed: int = 42,
) -> List[AxiomReport]:
    """Dispatch one named suite; max_weight defaults per suite."""
    if name == "prelie":
        return check_prelie(alphabet, max_weight or 5, trials, seed)
    if name == "nap":
        return check_nap(alphabet, max_weight or 5, trials, seed)
    if name == "brace":
        return check_brace(alphabet, max_weight or 3, trials, seed)
    if name == "e1":
        return check_e1(alphabet, max_weight or 3)
    if name == "shuffle":
        return check_shuffle(alphabet, max_weight or 3, trials, seed)
    raise ValueError(f"unknown axiom {name!r}; expected one of {', '.join(AXIOMS)}")
