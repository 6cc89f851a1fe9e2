from fractions import Fraction
from typing import Iterable, List, Tuple, Union

from leafdist.errors import DomainException
from leafdist.helpers import format_ratio
from leafdist.resources.resource import Resource

Scalar = Union[int, Fraction]


class PowerSeries(Resource):
    """Formal power series truncated after x^order, with exact rational coefficients."""

    def __init__(self, coefficients: Iterable[Scalar], order: int):
        if order < 0:
            raise DomainException(f"Series order must be non-negative, got {order}.")
        coefficients = [Fraction(c) for c in coefficients][: order + 1]
        coefficients += [Fraction(0)] * (order + 1 - len(coefficients))
        self.coefficients: Tuple[Fraction, ...] = tuple(coefficients)
        self.order = order

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls([1], order)

    def __getitem__(self, degree: int) -> Fraction:
        if degree > self.order:
            raise DomainException(f"Coefficient of x^{degree} was truncated, series order is {self.order}.")
        if degree < 0:
            return Fraction(0)
        return self.coefficients[degree]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise DomainException(f"Cannot extend a series of order {self.order} to order {order}.")
        return PowerSeries(self.coefficients, order)

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries([other], self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        return PowerSeries([self[d] + other[d] for d in range(order + 1)], order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coefficients], self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        order = min(self.order, other.order)
        left, right = self.coefficients, other.coefficients
        # skip the leading zeros, B(x)^j starts at x^j
        left_start = next((d for d, c in enumerate(left) if c), order + 1)
        right_start = next((d for d, c in enumerate(right) if c), order + 1)
        product: List[Fraction] = [Fraction(0)] * (order + 1)
        for degree in range(left_start + right_start, order + 1):
            product[degree] = sum(
                (left[j] * right[degree - j] for j in range(left_start, degree - right_start + 1)), Fraction(0)
            )
        return PowerSeries(product, order)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.order, self.coefficients))

    def as_dict(self):
        return {"order": self.order, "coefficients": [format_ratio(c) for c in self.coefficients]}

    def __repr__(self):
        terms = [f"{format_ratio(c)}*x^{d}" for d, c in enumerate(self.coefficients) if c]
        return f"<PowerSeries[{' + '.join(terms) or '0'} + O(x^{self.order + 1})]>"
