"""
Decorated planar and non-planar rooted trees.

PlanarTree values are the basis of the free brace algebra, RootedTree
values (children kept in canonical order) the basis of the free pre-Lie
and non-associative permutative algebras. Both are immutable.
"""
import logging
import re
from dataclasses import dataclass, replace
from functools import cached_property, lru_cache, total_ordering
from itertools import chain
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import pyparsing as pp

from bracetree.errors import DecorationError, TreeSyntaxError
from bracetree.series import Series

logger = logging.getLogger(__name__)

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")

GRAMMAR_HELP = (
    'Tree := Ident ( "[" Tree ("," Tree)* "]" )?   Ident := [A-Za-z_][A-Za-z0-9_]*\n'
    "Forest := ( Tree (\",\" Tree)* )?\n"
    "Combination := [+|-] [coeff \"*\"] Tree ( (+|-) [coeff \"*\"] Tree )*   coeff := int | int/int"
)


@dataclass(frozen=True)
class DecorationAlphabet:
    """Finite graded set of decorations, totally ordered by position."""

    symbols: Tuple[str, ...]
    grades: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        symbols = tuple(self.symbols)
        grades = tuple(self.grades) if self.grades else (1,) * len(symbols)
        if not symbols:
            raise DecorationError("alphabet must contain at least one symbol")
        if len(grades) != len(symbols):
            raise DecorationError(f"got {len(grades)} grades for {len(symbols)} symbols")
        if len(set(symbols)) != len(symbols):
            raise DecorationError(f"alphabet symbols must be distinct: {','.join(symbols)}")
        for symbol in symbols:
            if not IDENTIFIER.fullmatch(symbol):
                raise DecorationError(f"invalid decoration symbol: {symbol!r}")
        for symbol, grade in zip(symbols, grades):
            if grade < 1:
                raise DecorationError(f"decoration {symbol} has grade {grade}; grades must be >= 1")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "grades", tuple(int(g) for g in grades))

    @classmethod
    def from_size(cls, size: int) -> "DecorationAlphabet":
        """Alphabet x1..xD with every grade equal to 1."""
        if size < 1:
            raise DecorationError(f"alphabet size must be positive, got {size}")
        return cls(tuple(f"x{i}" for i in range(1, size + 1)))

    @classmethod
    def from_symbols(cls, text: str, grades: Optional[Sequence[int]] = None) -> "DecorationAlphabet":
        symbols = tuple(s.strip() for s in text.split(",") if s.strip())
        return cls(symbols, tuple(grades) if grades else ())

    @property
    def size(self) -> int:
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[str]:
        return iter(self.symbols)

    def __contains__(self, symbol: object) -> bool:
        return symbol in self._ranks

    @cached_property
    def _ranks(self) -> dict:
        return {symbol: rank for rank, symbol in enumerate(self.symbols)}

    def lookup(self, symbol: str) -> Tuple[int, int]:
        """(rank, grade) of a symbol."""
        try:
            rank = self._ranks[symbol]
        except KeyError:
            raise DecorationError(
                f"unknown decoration {symbol!r}; alphabet is {','.join(self.symbols)}"
            ) from None
        return rank, self.grades[rank]

    def grade(self, symbol: str) -> int:
        return self.lookup(symbol)[1]

    def hilbert_series(self, order: int) -> Series:
        """F_D = sum_n d_n x^n, d_n the number of symbols of grade n."""
        counts = [0] * (order + 1)
        for grade in self.grades:
            if grade <= order:
                counts[grade] += 1
        return Series(counts, order)


def alphabet_from_text(texts: Iterable[str]) -> DecorationAlphabet:
    """Grade-1 alphabet of every identifier occurring in the texts, sorted."""
    symbols = sorted(set(chain.from_iterable(IDENTIFIER.findall(text) for text in texts)))
    return DecorationAlphabet(tuple(symbols))


@total_ordering
@dataclass(frozen=True)
class TreeBase:
    """
    Shared structure of planar and rooted trees.

    `rank` and `grade` are the position and degree of the root decoration
    in its alphabet; they make the canonical order and the weight local
    to the tree.
    """

    decoration: str
    rank: int
    grade: int
    children: Tuple["TreeBase", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))

    @cached_property
    def weight(self) -> int:
        return self.grade + sum(child.weight for child in self.children)

    @property
    def fertility(self) -> int:
        return len(self.children)

    @cached_property
    def sort_key(self) -> tuple:
        # weight, then root decoration, then children lexicographically
        return (self.weight, self.rank, tuple(child.sort_key for child in self.children))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.sort_key < other.sort_key

    def with_children(self, children: Iterable["TreeBase"]):
        """Same root, new children."""
        return replace(self, children=tuple(children))

    def serialize(self) -> str:
        if not self.children:
            return self.decoration
        return f"{self.decoration}[{','.join(child.serialize() for child in self.children)}]"

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.serialize()!r})"


class PlanarTree(TreeBase):
    """Planar rooted tree: children are ordered left to right."""


class RootedTree(TreeBase):
    """Rooted tree with unordered children, stored in canonical order."""

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(sorted(self.children, key=_sort_key)))


Forest = Tuple[PlanarTree, ...]


def _sort_key(tree: TreeBase) -> tuple:
    return tree.sort_key


def weight(tree: TreeBase) -> int:
    return tree.weight


def root_fertility(tree: TreeBase) -> int:
    return tree.fertility


def forest_weight(forest: Sequence[TreeBase]) -> int:
    return sum(tree.weight for tree in forest)


def b_planar(decoration: str, forest: Iterable[PlanarTree], alphabet: DecorationAlphabet) -> PlanarTree:
    """Graft the forest, in order from left to right, on a new root."""
    rank, grade = alphabet.lookup(decoration)
    children = tuple(forest)
    for child in children:
        if not isinstance(child, PlanarTree):
            raise TypeError(f"b_planar expects planar trees, got {type(child).__name__}")
    return PlanarTree(decoration, rank, grade, children)


def b_rooted(decoration: str, trees: Iterable[RootedTree], alphabet: DecorationAlphabet) -> RootedTree:
    """Graft a multiset of rooted trees on a new root."""
    rank, grade = alphabet.lookup(decoration)
    children = tuple(trees)
    for child in children:
        if not isinstance(child, RootedTree):
            raise TypeError(f"b_rooted expects rooted trees, got {type(child).__name__}")
    return RootedTree(decoration, rank, grade, children)


@lru_cache(maxsize=65536)
def canonicalize(tree: PlanarTree) -> RootedTree:
    """Forget the planar embedding."""
    return RootedTree(
        tree.decoration,
        tree.rank,
        tree.grade,
        tuple(canonicalize(child) for child in tree.children),
    )


@lru_cache(maxsize=None)
def _planar_forests(alphabet: DecorationAlphabet, total: int) -> Tuple[Forest, ...]:
    if total == 0:
        return ((),)
    forests: List[Forest] = []
    for head_weight in range(1, total + 1):
        for head in _planar_table(alphabet, head_weight):
            for tail in _planar_forests(alphabet, total - head_weight):
                forests.append((head,) + tail)
    return tuple(forests)


@lru_cache(maxsize=None)
def _planar_table(alphabet: DecorationAlphabet, n: int) -> Tuple[PlanarTree, ...]:
    trees = [
        PlanarTree(symbol, rank, grade, forest)
        for rank, (symbol, grade) in enumerate(zip(alphabet.symbols, alphabet.grades))
        if grade <= n
        for forest in _planar_forests(alphabet, n - grade)
    ]
    logger.debug(f"Enumerated {len(trees)} planar trees of weight {n}")
    return tuple(sorted(trees))


@lru_cache(maxsize=None)
def _rooted_table(alphabet: DecorationAlphabet, n: int) -> Tuple[RootedTree, ...]:
    trees = [
        RootedTree(symbol, rank, grade, children)
        for rank, (symbol, grade) in enumerate(zip(alphabet.symbols, alphabet.grades))
        if grade <= n
        for children in _rooted_multisets(alphabet, n - grade)
    ]
    logger.debug(f"Enumerated {len(trees)} rooted trees of weight {n}")
    return tuple(sorted(trees))


@lru_cache(maxsize=None)
def _rooted_multisets(alphabet: DecorationAlphabet, total: int) -> Tuple[Tuple[RootedTree, ...], ...]:
    # pool is ascending in canonical order, hence ascending in weight
    pool = tuple(chain.from_iterable(_rooted_table(alphabet, w) for w in range(1, total + 1)))

    def extend(remaining: int, start: int) -> Iterator[Tuple[RootedTree, ...]]:
        if remaining == 0:
            yield ()
            return
        for index in range(start, len(pool)):
            tree = pool[index]
            if tree.weight > remaining:
                break
            for rest in extend(remaining - tree.weight, index):
                yield (tree,) + rest

    return tuple(extend(total, 0))


def enumerate_planar(n: int, alphabet: DecorationAlphabet) -> List[PlanarTree]:
    """All planar trees of weight n, in canonical order."""
    if n < 1:
        logger.warning(f"No planar trees of weight {n}; returning an empty list")
        return []
    return list(_planar_table(alphabet, n))


def enumerate_rooted(n: int, alphabet: DecorationAlphabet) -> List[RootedTree]:
    """All rooted trees of weight n, in canonical order."""
    if n < 1:
        logger.warning(f"No rooted trees of weight {n}; returning an empty list")
        return []
    return list(_rooted_table(alphabet, n))


def enumerate_forests(n: int, alphabet: DecorationAlphabet) -> List[Forest]:
    """All planar forests (words of planar trees) of total weight n >= 0."""
    if n < 0:
        return []
    return list(_planar_forests(alphabet, n))


def count_planar(n: int, alphabet: DecorationAlphabet) -> int:
    return len(_planar_table(alphabet, n)) if n >= 1 else 0


def count_rooted(n: int, alphabet: DecorationAlphabet) -> int:
    return len(_rooted_table(alphabet, n)) if n >= 1 else 0


# Text grammar

_IDENT = pp.Word(pp.alphas + "_", pp.alphanums + "_")
_LBRACK, _RBRACK = pp.Suppress("["), pp.Suppress("]")
TREE = pp.Forward()
TREE <<= pp.Group(_IDENT + pp.Group(pp.Optional(_LBRACK - (pp.DelimitedList(TREE) + _RBRACK))))
FOREST = pp.Optional(pp.DelimitedList(TREE))


def tree_from_tokens(node: pp.ParseResults, alphabet: DecorationAlphabet) -> PlanarTree:
    decoration, children = node[0], node[1]
    return b_planar(decoration, [tree_from_tokens(child, alphabet) for child in children], alphabet)


def parse_grammar(grammar: pp.ParserElement, text: str) -> pp.ParseResults:
    try:
        return grammar.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise TreeSyntaxError(text, e.loc, e.msg) from None


def parse(text: str, alphabet: DecorationAlphabet) -> PlanarTree:
    """Parse `d[a,c[b]]` style text into a planar tree."""
    return tree_from_tokens(parse_grammar(TREE, text)[0], alphabet)


def parse_rooted(text: str, alphabet: DecorationAlphabet) -> RootedTree:
    return canonicalize(parse(text, alphabet))


def parse_forest(text: str, alphabet: DecorationAlphabet) -> Forest:
    """Parse a comma-separated word of planar trees; empty text is the empty forest."""
    return tuple(tree_from_tokens(node, alphabet) for node in parse_grammar(FOREST, text))


def serialize(tree: TreeBase) -> str:
    return tree.serialize()


def serialize_forest(forest: Sequence[TreeBase]) -> str:
    return "(" + ",".join(tree.serialize() for tree in forest) + ")"
