"""
Truncated formal power series with exact rational coefficients.

Houses the Poincare-Hilbert series of the free pre-Lie, brace and
non-associative permutative algebras, the Euler transform between a
generator-dimension sequence and its product form, and the generator
series certifying that the free brace algebra is free as a pre-Lie
algebra.
"""
import logging
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence, Union

from sympy.ntheory import divisors, mobius

from bracetree.errors import SeriesError
from bracetree.reports import SeriesPayload

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]


class Series:
    """Power series known up to degree `order` (coefficients 0..order)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Number], order: Optional[int] = None):
        values = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise SeriesError("a series needs a nonnegative truncation order")
        values = values[: order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        self._coeffs = tuple(values)

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient: Number = 1) -> "Series":
        coeffs: List[Number] = [0] * (order + 1)
        if degree <= order:
            coeffs[degree] = coefficient
        return cls(coeffs, order)

    @classmethod
    def from_integers(cls, values: Sequence[int], order: Optional[int] = None) -> "Series":
        return cls(values, order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, degree: int) -> Fraction:
        if degree < 0:
            return Fraction(0)
        if degree > self.order:
            raise IndexError(f"degree {degree} beyond truncation order {self.order}")
        return self._coeffs[degree]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(format_coefficient(c) for c in self._coeffs)
        return f"Series([{shown}], order={self.order})"

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self._coeffs, order)

    def _aligned(self, other: "Series") -> int:
        order = min(self.order, other.order)
        if self.order != other.order:
            logger.debug(f"Truncating series operation from orders {self.order}/{other.order} to {order}")
        return order

    def __add__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = self._aligned(other)
        return Series((self[k] + other[k] for k in range(order + 1)), order)

    def __sub__(self, other: "Series") -> "Series":
        if not isinstance(other, Series):
            return NotImplemented
        order = self._aligned(other)
        return Series((self[k] - other[k] for k in range(order + 1)), order)

    def __neg__(self) -> "Series":
        return Series((-c for c in self._coeffs), self.order)

    def __mul__(self, other: Union["Series", Number]) -> "Series":
        if isinstance(other, (int, Fraction)):
            return Series((other * c for c in self._coeffs), self.order)
        if not isinstance(other, Series):
            return NotImplemented
        order = self._aligned(other)
        out = [Fraction(0)] * (order + 1)
        for i in range(order + 1):
            a = self._coeffs[i]
            if not a:
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return Series(out, order)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        """Multiplicative inverse; the constant term must be nonzero."""
        c0 = self._coeffs[0]
        if not c0:
            raise SeriesError("series with zero constant term is not invertible")
        out = [Fraction(0)] * (self.order + 1)
        out[0] = 1 / c0
        for n in range(1, self.order + 1):
            acc = sum((self._coeffs[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out[n] = -acc / c0
        return Series(out, self.order)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def integers(self) -> List[int]:
        """Coefficients as Python integers; raises if any is not integral."""
        if not self.is_integral():
            raise SeriesError(f"series has non-integral coefficients: {self!r}")
        return [int(c) for c in self._coeffs]

    def to_payload(self) -> SeriesPayload:
        return SeriesPayload(order=self.order, coeffs=[format_coefficient(c) for c in self._coeffs])

    def to_json(self) -> str:
        return self.to_payload().model_dump_json()

    def serialize(self) -> str:
        return ", ".join(format_coefficient(c) for c in self._coeffs)


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _require_no_constant(series: Series, name: str) -> None:
    if series[0]:
        raise SeriesError(f"{name} must have coefficient 0 in degree 0, got {series[0]}")


def _require_nonnegative_integers(series: Series, name: str) -> None:
    if not series.is_integral() or any(c < 0 for c in series):
        raise SeriesError(f"{name} must have nonnegative integer coefficients")


def _binomial_power(step: int, exponent: int, order: int) -> Dict[int, Fraction]:
    """Nonzero coefficients of (1 - x^step)^exponent up to `order`."""
    terms = {0: Fraction(1)}
    coefficient = Fraction(1)
    for k in range(1, order // step + 1):
        coefficient = coefficient * (exponent - k + 1) / k
        if not coefficient:
            break
        terms[step * k] = coefficient if k % 2 == 0 else -coefficient
    return terms


def _multiply_sparse(dense: List[Fraction], sparse: Dict[int, Fraction], order: int) -> List[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, a in enumerate(dense):
        if not a:
            continue
        for k, b in sparse.items():
            if i + k > order:
                continue
            out[i + k] += a * b
    return out


def euler_product(exponents: Series, order: Optional[int] = None) -> Series:
    """
    Product of (1 - x^i)^{a_i} for i = 1..order, truncated at `order`.

    The degree-0 coefficient of `exponents` is ignored.
    """
    order = exponents.order if order is None else min(order, exponents.order)
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for i in range(1, order + 1):
        a = exponents[i]
        if a.denominator != 1:
            raise SeriesError(f"Euler exponent in degree {i} is not an integer: {a}")
        if a:
            out = _multiply_sparse(out, _binomial_power(i, int(a), order), order)
    return Series(out, order)


def inv_euler(product: Series, order: Optional[int] = None) -> Series:
    """
    Exponent sequence a with prod_i (1 - x^i)^{-a_i} = product.

    Uses the logarithmic derivative x p'/p = sum_n c_n x^n together with
    Moebius inversion of c_n = sum_{d | n} d a_d.
    """
    order = product.order if order is None else min(order, product.order)
    product = product.truncate(order)
    if product[0] != 1:
        raise SeriesError(f"inverse Euler transform needs constant term 1, got {product[0]}")
    derivative = Series((k * c for k, c in enumerate(product)), order)
    log_derivative = derivative * product.inverse()

    exponents = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        total = sum(
            (int(mobius(n // d)) * log_derivative[d] for d in divisors(n)), Fraction(0)
        )
        value = total / n
        if value.denominator != 1:
            raise SeriesError(f"series is not an Euler product: exponent {value} in degree {n}")
        exponents[n] = value
    return Series(exponents, order)


def prelie_hilbert(f_d: Series, order: Optional[int] = None) -> Series:
    """
    Dimensions t_n of the free pre-Lie algebra on a graded set.

    Solves F = F_D / prod_i (1 - x^i)^{t_i} degree by degree; the same
    series counts the free non-associative permutative algebra.
    """
    order = f_d.order if order is None else min(order, f_d.order)
    _require_no_constant(f_d, "F_D")
    _require_nonnegative_integers(f_d, "F_D")

    dims = [Fraction(0)] * (order + 1)
    # prod_{i < n} (1 - x^i)^{-t_i}: only earlier dimensions reach degree n
    running = [Fraction(0)] * (order + 1)
    running[0] = Fraction(1)
    for n in range(1, order + 1):
        t_n = sum((f_d[j] * running[n - j] for j in range(1, n + 1)), Fraction(0))
        dims[n] = t_n
        if t_n:
            running = _multiply_sparse(running, _binomial_power(n, -int(t_n), order), order)
    return Series(dims, order)


def brace_hilbert(f_d: Series, order: Optional[int] = None) -> Series:
    """Dimensions t'_n of the free brace algebra: the solution of F - F^2 = F_D."""
    order = f_d.order if order is None else min(order, f_d.order)
    _require_no_constant(f_d, "F_D")

    dims = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        dims[n] = f_d[n] + sum((dims[i] * dims[n - i] for i in range(1, n)), Fraction(0))
    return Series(dims, order)


def generator_hilbert(f_d: Series, order: Optional[int] = None) -> Series:
    """
    Generator counts of the free brace algebra as a free NAP / pre-Lie algebra.

    G = F_Br * prod_i (1 - x^i)^{t'_i}. Feeding G back into the pre-Lie
    dimension solver must return F_Br exactly.
    """
    brace_dims = brace_hilbert(f_d, order)
    generators = brace_dims * euler_product(brace_dims)
    _require_nonnegative_integers(generators, "generator series")

    regenerated = prelie_hilbert(generators)
    if regenerated != brace_dims:
        raise SeriesError(
            f"free pre-Lie algebra on the generators has dimensions {regenerated.serialize()}, "
            f"expected {brace_dims.serialize()}"
        )
    return generators


def star_span_hilbert(f_d: Series, order: Optional[int] = None) -> Series:
    """Series of the span of all star products: F_Br * (1 - prod_i (1 - x^i)^{t'_i})."""
    brace_dims = brace_hilbert(f_d, order)
    return brace_dims - generator_hilbert(f_d, order)


def _single_degree_alphabet(f_d: Series) -> Optional[Fraction]:
    if any(f_d[k] for k in range(2, f_d.order + 1)):
        return None
    return f_d[1] if f_d.order >= 1 and f_d[1] else None


def w_sequence(f_d: Series, order: Optional[int] = None) -> Series:
    """
    Dimensions w_i of the generating space W of the shuffle algebra on planar trees.

    The shuffle algebra is free commutative on W, so 1/(1 - F_Br) is the
    Euler product of w. For F_D = D x the identity 1/(1 - F_Br) = F_Br/(D x)
    is checked on the way.
    """
    brace_dims = brace_hilbert(f_d, order)
    words = (Series.one(brace_dims.order) - brace_dims).inverse()

    size = _single_degree_alphabet(f_d)
    if size is not None:
        for n in range(brace_dims.order):
            if words[n] != brace_dims[n + 1] / size:
                raise SeriesError(
                    f"shuffle algebra series disagrees with F_Br/(Dx) in degree {n}"
                )
    return inv_euler(words)


def shuffle_quotient_hilbert(f_d: Series, order: Optional[int] = None) -> Series:
    """Series of S(W / K T_P): prod_i (1 - x^i)^{-(w_i - t'_i)}."""
    brace_dims = brace_hilbert(f_d, order)
    w = w_sequence(f_d, order)
    return euler_product(brace_dims - w)


_GENERATOR_POLYNOMIALS: Dict[int, Callable[[Fraction], Fraction]] = {
    1: lambda d: d,
    2: lambda d: Fraction(0),
    3: lambda d: d**2 * (d - 1) / 2,
    4: lambda d: d**2 * (2 * d - 1) * (2 * d + 1) / 3,
    5: lambda d: d**2 * (31 * d**3 - 2 * d**2 - 3 * d - 2) / 8,
    6: lambda d: d**2 * (356 * d**4 - 20 * d**3 - 5 * d**2 + 5 * d - 6) / 30,
    7: lambda d: d**2 * (5441 * d**5 - 279 * d**4 - 91 * d**3 - 129 * d**2 - 22 * d - 24) / 144,
}


def generator_polynomial(degree: int, alphabet_size: int) -> int:
    """Closed-form number of generators in degree 1..7 for D symbols of grade 1."""
    if degree not in _GENERATOR_POLYNOMIALS:
        raise SeriesError(f"no closed-form generator count for degree {degree}")
    value = _GENERATOR_POLYNOMIALS[degree](Fraction(alphabet_size))
    if value.denominator != 1:
        raise SeriesError(f"generator polynomial gave {value} in degree {degree}")
    return int(value)
