import logging
import re
from fractions import Fraction
from typing import Type, TypeVar, Union

import pendulum

from leafdist.errors import DomainException

log = logging.getLogger(__name__)

T = TypeVar("T")

RATIO_PATTERN = re.compile(r"(-?\d+)\s*/\s*(\d+)")


class SingletonMeta(type):
    __instance: T

    def __init__(cls, *args, **kwargs):
        super().__init__(*args, **kwargs)
        cls.__instance = None

    def get_instance(cls: Type[T]) -> T:
        if cls.__instance is None:
            cls.set_instance(cls())
        return cls.__instance

    def set_instance(cls: Type[T], instance: T):
        cls.__instance = instance


def parse_ratio(text: str, *, allow_decimal: bool = False) -> Fraction:
    """Parse "num/den" exactly; plain decimals like 0.75 only when `allow_decimal` is set."""
    match = RATIO_PATTERN.fullmatch(str(text).strip())
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise DomainException(f"Denominator of {text!r} is zero.")
        return Fraction(numerator, denominator)
    if allow_decimal:
        try:
            return Fraction(str(text).strip())
        except ValueError:
            pass
    expected = "'num/den' or a decimal" if allow_decimal else "'num/den'"
    raise DomainException(f"Cannot parse {text!r} as {expected}.")


def format_ratio(value: Union[int, Fraction]) -> str:
    """Render an exact value losslessly: integers as decimal strings, everything else as "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float) -> str:
    return f"{value:.15g}"


def elapsed_seconds(start: pendulum.DateTime) -> float:
    return (pendulum.now() - start).total_seconds()
