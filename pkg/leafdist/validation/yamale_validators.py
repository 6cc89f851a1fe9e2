from functools import wraps

from yamale.validators import DefaultValidators, Enum, Integer, Validator

from leafdist.errors import DomainException
from leafdist.helpers import parse_ratio


def all_validators() -> dict:
    validators = DefaultValidators.copy()
    validators[StringEnum.tag] = StringEnum
    validators[U64.tag] = U64
    validators[Ratio.tag] = Ratio

    return validators


def catch_value_errors(validate):
    """method decorator to catch ValueErrors for casts and return an error"""

    @wraps(validate)
    def wrapper(self, value):
        try:
            return validate(self, value)
        except ValueError:
            return [f"'{value}' could not be casted to {self.tag[2:]}"]

    return wrapper


class StringEnum(Enum):
    tag = "s_enum"

    def __init__(self, *args, case_sensitive: bool = True, **kwargs):
        if not case_sensitive:
            args = [arg.lower() for arg in args]
        super().__init__(*args, **kwargs)

    @catch_value_errors
    def validate(self, value):
        if not isinstance(value, str):
            raise TypeError(f"Value {value} has to be a string, but is {type(value).__name__}")
        return super().validate(value.lower())


class U64(Integer):
    """Unsigned 64-bit integer, as taken by the seeded random generator."""

    tag = "u64"

    def _is_valid(self, value) -> bool:
        return super()._is_valid(value) and 0 <= value < 2 ** 64

    def fail(self, value):
        return f"'{value}' is not an unsigned 64-bit integer"


class Ratio(Validator):
    """
    Validates a probability written as an exact fraction 'num/den' strictly between 0 and 1 (e.g. `'9/10'`).
    """

    tag = "ratio"

    def _is_valid(self, value) -> bool:
        if not isinstance(value, str):
            return False
        try:
            ratio = parse_ratio(value)
        except DomainException:
            return False
        return 0 < ratio < 1

    def fail(self, value):
        return f"'{value}' is not a fraction 'num/den' between 0 and 1"
