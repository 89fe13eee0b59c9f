"""
Finite linear combinations of basis trees with exact rational coefficients.

A LinComb holds one kind of basis element: planar trees, rooted trees or
planar forests (tuples of planar trees). Terms are kept in canonical order
so equal combinations serialize identically.
"""
import logging
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, Optional, Tuple, Union

import pyparsing as pp

from bracetree.errors import BasisKindError, TreeSyntaxError
from bracetree.trees import (
    TREE,
    DecorationAlphabet,
    PlanarTree,
    RootedTree,
    canonicalize,
    forest_weight,
    parse_grammar,
    serialize_forest,
    tree_from_tokens,
)

logger = logging.getLogger(__name__)

Basis = Union[PlanarTree, RootedTree, Tuple[PlanarTree, ...]]
Coefficient = Union[int, Fraction]

PLANAR, ROOTED, FOREST = "planar", "rooted", "forest"


def basis_kind(element: object) -> str:
    if isinstance(element, PlanarTree):
        return PLANAR
    if isinstance(element, RootedTree):
        return ROOTED
    if isinstance(element, tuple) and all(isinstance(t, PlanarTree) for t in element):
        return FOREST
    raise BasisKindError(f"not a basis element: {element!r}")


def basis_key(element: Basis) -> tuple:
    if isinstance(element, tuple):
        return (forest_weight(element), tuple(tree.sort_key for tree in element))
    return element.sort_key


def basis_weight(element: Basis) -> int:
    if isinstance(element, tuple):
        return forest_weight(element)
    return element.weight


def serialize_basis(element: Basis) -> str:
    if isinstance(element, tuple):
        return serialize_forest(element)
    return element.serialize()


class LinComb:
    """Immutable element of the free vector space on trees or forests."""

    __slots__ = ("_kind", "_terms")

    def __init__(self, pairs: Iterable[Tuple[Basis, Coefficient]] = ()):
        kind: Optional[str] = None
        acc: Dict[Basis, Fraction] = {}
        for element, coefficient in pairs:
            element_kind = basis_kind(element)
            if kind is None:
                kind = element_kind
            elif element_kind != kind:
                raise BasisKindError(f"cannot mix {kind} and {element_kind} basis elements")
            acc[element] = acc.get(element, Fraction(0)) + Fraction(coefficient)
        terms = {b: c for b, c in acc.items() if c}
        self._kind = kind if terms else None
        self._terms = dict(sorted(terms.items(), key=lambda item: basis_key(item[0])))

    @classmethod
    def zero(cls) -> "LinComb":
        return cls()

    @classmethod
    def basis(cls, element: Basis, coefficient: Coefficient = 1) -> "LinComb":
        return cls([(element, coefficient)])

    @property
    def kind(self) -> Optional[str]:
        """Basis kind, None for the zero combination."""
        return self._kind

    def items(self) -> Iterator[Tuple[Basis, Fraction]]:
        return iter(self._terms.items())

    def __iter__(self) -> Iterator[Basis]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __getitem__(self, element: Basis) -> Fraction:
        return self._terms.get(element, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def _check_kind(self, other: "LinComb") -> None:
        if self._kind and other._kind and self._kind != other._kind:
            raise BasisKindError(f"cannot combine {self._kind} and {other._kind} combinations")

    def __add__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        self._check_kind(other)
        return LinComb(list(self._terms.items()) + list(other._terms.items()))

    def __sub__(self, other: "LinComb") -> "LinComb":
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "LinComb":
        return LinComb((b, -c) for b, c in self._terms.items())

    def __mul__(self, scalar: Coefficient) -> "LinComb":
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LinComb((b, scalar * c) for b, c in self._terms.items())

    __rmul__ = __mul__

    def total_multiplicity(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    def is_nonnegative_integral(self) -> bool:
        return all(c.denominator == 1 and c > 0 for c in self._terms.values())

    def weights(self) -> set:
        return {basis_weight(b) for b in self._terms}

    def serialize(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for index, (element, coefficient) in enumerate(self._terms.items()):
            text = serialize_basis(element)
            magnitude = abs(coefficient)
            if magnitude != 1:
                text = f"{magnitude}*{text}"
            if index == 0:
                parts.append(f"-{text}" if coefficient < 0 else text)
            else:
                parts.append(f"- {text}" if coefficient < 0 else f"+ {text}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.serialize()

    def __repr__(self) -> str:
        return f"LinComb({self.serialize()!r})"


def add(x: LinComb, y: LinComb) -> LinComb:
    return x + y


def scale(c: Coefficient, x: LinComb) -> LinComb:
    return x * c


def linear_extend(f: Callable[[Basis], LinComb]) -> Callable[[LinComb], LinComb]:
    """Extend a map on basis elements linearly."""

    def extended(x: LinComb) -> LinComb:
        pairs = []
        for element, coefficient in x.items():
            pairs.extend((b, coefficient * c) for b, c in f(element).items())
        return LinComb(pairs)

    return extended


def bilinear_extend(f: Callable[[Basis, Basis], LinComb]) -> Callable[[LinComb, LinComb], LinComb]:
    """Extend a map on pairs of basis elements bilinearly."""

    def extended(x: LinComb, y: LinComb) -> LinComb:
        pairs = []
        for (b1, c1), (b2, c2) in product(x.items(), y.items()):
            pairs.extend((b, c1 * c2 * c) for b, c in f(b1, b2).items())
        return LinComb(pairs)

    return extended


def multilinear_extend(f: Callable[..., LinComb]) -> Callable[..., LinComb]:
    """Extend a map of any number of basis arguments multilinearly."""

    def extended(*xs: LinComb) -> LinComb:
        pairs = []
        for chosen in product(*(x.items() for x in xs)):
            weight = Fraction(1)
            for _, coefficient in chosen:
                weight *= coefficient
            pairs.extend((b, weight * c) for b, c in f(*(b for b, _ in chosen)).items())
        return LinComb(pairs)

    return extended


def flatten(x: LinComb) -> LinComb:
    """Forget planarity term by term, merging coefficients."""
    if x.kind not in (None, PLANAR):
        raise BasisKindError(f"flatten expects a planar combination, got {x.kind}")
    return LinComb((canonicalize(tree), c) for tree, c in x.items())


# Text grammar: [+|-] [coeff "*"] Tree ( (+|-) [coeff "*"] Tree )*

_COEFF = pp.Combine(pp.Word(pp.nums) + pp.Optional("/" + pp.Word(pp.nums)))
_SIGN = pp.one_of("+ -")
_SIGNED_TERM = pp.Group(_SIGN + pp.Optional(_COEFF + pp.Suppress("*"), default="1") + TREE)
_FIRST_TERM = pp.Group(
    pp.Optional(_SIGN, default="+") + pp.Optional(_COEFF + pp.Suppress("*"), default="1") + TREE
)
LINCOMB = pp.Suppress(pp.Literal("0") + pp.StringEnd()) | (_FIRST_TERM + pp.ZeroOrMore(_SIGNED_TERM))


def parse_lincomb(text: str, alphabet: DecorationAlphabet, kind: str = PLANAR) -> LinComb:
    """Parse `2*d[a,b] - 1/2*c` style text; `0` is the empty combination."""
    if kind not in (PLANAR, ROOTED):
        raise BasisKindError(f"combinations can be parsed as planar or rooted, not {kind}")
    pairs = []
    for sign, coefficient, node in parse_grammar(LINCOMB, text):
        try:
            value = Fraction(coefficient)
        except ZeroDivisionError:
            raise TreeSyntaxError(text, text.find(coefficient), f"zero denominator in {coefficient}") from None
        tree = tree_from_tokens(node, alphabet)
        pairs.append((canonicalize(tree) if kind == ROOTED else tree, -value if sign == "-" else value))
    return LinComb(pairs)
