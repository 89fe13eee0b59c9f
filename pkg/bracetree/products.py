"""
Products on decorated trees.

- prelie_rooted: grafting on every vertex, the free pre-Lie product
- brace / prelie_planar: the brace structure on planar trees
- star_planar / star_rooted: grafting on the root only (NAP products)
- shuffle: the shuffle product of forests
- graft: the B_d operator extended to combinations of forests

Every product of basis elements has positive integer coefficients and is
homogeneous of weight equal to the sum of the input weights.
"""
import logging
from collections import Counter
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from typing import List, Sequence, Tuple

from bracetree.freemod import LinComb, bilinear_extend, linear_extend, multilinear_extend
from bracetree.trees import DecorationAlphabet, Forest, PlanarTree, RootedTree, b_planar

logger = logging.getLogger(__name__)

CACHE_SIZE = 1 << 16

_Terms = Tuple[Tuple[PlanarTree, int], ...]


def _checked(result: LinComb) -> LinComb:
    if __debug__:
        assert result.is_nonnegative_integral(), f"non-positive coefficient in {result}"
    return result


@lru_cache(maxsize=CACHE_SIZE)
def _prelie_rooted_terms(t1: RootedTree, t2: RootedTree) -> Tuple[Tuple[RootedTree, int], ...]:
    counts: Counter = Counter()
    counts[t2.with_children(t2.children + (t1,))] += 1
    for i, child in enumerate(t2.children):
        for grafted, c in _prelie_rooted_terms(t1, child):
            counts[t2.with_children(t2.children[:i] + (grafted,) + t2.children[i + 1 :])] += c
    return tuple(counts.items())


def prelie_rooted(t1: RootedTree, t2: RootedTree) -> LinComb:
    """Sum over the vertices s of t2 of t2 with t1 grafted on s."""
    return _checked(LinComb(_prelie_rooted_terms(t1, t2)))


@lru_cache(maxsize=CACHE_SIZE)
def _brace_terms(args: Forest, target: PlanarTree) -> _Terms:
    if not args:
        return ((target, 1),)
    children = target.children
    m, k = len(children), len(args)
    counts: Counter = Counter()
    # 2m cut positions split args into A_0, B_1, A_1, ..., B_m, A_m
    for cuts in combinations_with_replacement(range(k + 1), 2 * m):
        bounds = (0,) + cuts + (k,)
        blocks = [args[bounds[j] : bounds[j + 1]] for j in range(2 * m + 1)]
        options = [_brace_terms(blocks[2 * i + 1], children[i]) for i in range(m)]
        for choice in product(*options):
            new_children: List[PlanarTree] = list(blocks[0])
            coefficient = 1
            for i, (tree, c) in enumerate(choice):
                new_children.append(tree)
                new_children.extend(blocks[2 * i + 2])
                coefficient *= c
            counts[target.with_children(new_children)] += coefficient
    return tuple(counts.items())


def brace(args: Sequence[PlanarTree], target: PlanarTree) -> LinComb:
    """Brace product <args; target>; brace([], t) is t."""
    return _checked(LinComb(_brace_terms(tuple(args), target)))


def prelie_planar(t1: PlanarTree, t2: PlanarTree) -> LinComb:
    return brace((t1,), t2)


def prelie_planar_inductive(t1: PlanarTree, t2: PlanarTree) -> LinComb:
    """
    Pre-Lie product by induction on t2 = B_d(t_1 ... t_n):
    every root insertion of t1 plus t1 grafted recursively into each t_i.
    """
    pairs = list(star_planar(t1, t2).items())
    children = t2.children
    for i, child in enumerate(children):
        for grafted, c in prelie_planar_inductive(t1, child).items():
            pairs.append((t2.with_children(children[:i] + (grafted,) + children[i + 1 :]), c))
    return LinComb(pairs)


def star_planar(t1: PlanarTree, t2: PlanarTree) -> LinComb:
    """Insert t1 among the root children of t2 in each of the n+1 gaps."""
    children = t2.children
    return _checked(
        LinComb(
            (t2.with_children(children[:i] + (t1,) + children[i:]), 1)
            for i in range(len(children) + 1)
        )
    )


def star_rooted(t1: RootedTree, t2: RootedTree) -> RootedTree:
    """Graft t1 on the root of t2."""
    return t2.with_children(t2.children + (t1,))


def shuffle(f1: Forest, f2: Forest) -> LinComb:
    """Sum of all interleavings of two words of trees."""
    n1, n2 = len(f1), len(f2)
    pairs = []
    for positions in combinations(range(n1 + n2), n1):
        chosen = set(positions)
        left, right = iter(f1), iter(f2)
        pairs.append((tuple(next(left) if j in chosen else next(right) for j in range(n1 + n2)), 1))
    return _checked(LinComb(pairs))


shuffle_product = bilinear_extend(shuffle)


def graft(decoration: str, forests: LinComb, alphabet: DecorationAlphabet) -> LinComb:
    """B_d applied to a combination of forests."""
    return linear_extend(lambda forest: LinComb.basis(b_planar(decoration, forest, alphabet)))(forests)


brace_multilinear = multilinear_extend(lambda *trees: brace(trees[:-1], trees[-1]))


def brace_axiom_sides(
    outer: Sequence[PlanarTree], inner: Sequence[PlanarTree], target: PlanarTree
) -> Tuple[LinComb, LinComb]:
    """
    Both sides of the brace composition identity

        <a_1..a_m; <b_1..b_n; c>> = sum <A_0, <A_1; b_1>, A_2, ..., <A_2n-1; b_n>, A_2n; c>

    where A_0 A_1 ... A_2n runs over the splittings of a_1..a_m into
    consecutive, possibly empty, blocks.
    """
    outer, inner = tuple(outer), tuple(inner)
    left_pairs = []
    for tree, c in brace(inner, target).items():
        left_pairs.extend((u, c * cu) for u, cu in brace(outer, tree).items())
    left = LinComb(left_pairs)

    m, n = len(outer), len(inner)
    right = LinComb()
    for cuts in combinations_with_replacement(range(m + 1), 2 * n):
        bounds = (0,) + cuts + (m,)
        blocks = [outer[bounds[j] : bounds[j + 1]] for j in range(2 * n + 1)]
        factors: List[LinComb] = [LinComb.basis(a) for a in blocks[0]]
        for i in range(n):
            factors.append(brace(blocks[2 * i + 1], inner[i]))
            factors.extend(LinComb.basis(a) for a in blocks[2 * i + 2])
        right = right + brace_multilinear(*factors, LinComb.basis(target))
    return left, right
