"""Package to handle gflab entities validation.

It is an adapter over the ``attrs`` external dependency.

"""
import math
from numbers import Real
from typing import (
    TYPE_CHECKING,
    Any,
    Callable,
    Generic,
    Optional,
    Tuple,
    Type,
    TypeVar,
    Union,
    cast,
)

import attr
import numpy as np


_T = TypeVar("_T")
_TEntity = TypeVar("_TEntity", bound="BaseEntity")

if TYPE_CHECKING:
    from attr.__init__ import Attribute  # isort:skip
else:

    class Attribute(Generic[_T]):
        """Class for typing when not using mypy, for example when using ``get_type_hints``.

        :meta private:
        """


def optional_field(
    field_type: Union[Type[_T], Tuple[Type[Any], ...]],
    converter: Optional[Callable[[Any], Any]] = None,
    frozen: bool = False,
) -> Optional[_T]:
    """Define an optional field of the specified `field_type`.

    Parameters
    ----------
    field_type : Union[type, Tuple[type, ...]]
        The expected type(s) of the field.
    converter : Optional[Callable]
        An optional callable applied to the value at init time, before validation.
    frozen : bool
        If set to ``True``, the field cannot be changed after init.

    Returns
    -------
    Any
        An ``attrs`` attribute, with a default value set to ``None``, and a validator checking
        that this field is optional and, if set, of the correct type.

    Examples
    --------
    >>> from gflab.domain.utils.entity import optional_field, validated, BaseEntity
    >>>
    >>> @validated()
    ... class MyEntity(BaseEntity):
    ...     my_field: str = optional_field(str)
    >>>
    >>> from gflab.domain.utils.testing.validation import check_field_nullable
    >>> check_field_nullable(MyEntity, 'my_field', my_field='foo')

    """
    kwargs: dict = {
        "default": None,
        "validator": attr.validators.optional(attr.validators.instance_of(field_type)),
    }
    if converter is not None:
        kwargs["converter"] = attr.converters.optional(converter)
    if frozen:
        kwargs["on_setattr"] = attr.setters.frozen

    return attr.ib(**kwargs)  # type: ignore


def required_field(
    field_type: Union[Type[_T], Tuple[Type[Any], ...]],
    frozen: bool = False,
    converter: Optional[Callable[[Any], Any]] = None,
    default: Any = attr.NOTHING,
) -> _T:
    """Define a required field of the specified `field_type`.

    Parameters
    ----------
    field_type : Union[type, Tuple[type, ...]]
        The expected type(s) of the field.
    frozen : bool
        If set to ``False`` (the default), the field can be updated after being set at init time.
        If set to ``True``, the field can be set at init time but cannot be changed later, else a
        ``FrozenAttributeError`` exception will be raised.
    converter : Optional[Callable]
        An optional callable applied to the value at init time, before validation.
    default : Any
        A default value. The field stays "required" in the sense that ``None`` is refused.

    Returns
    -------
    Any
        An ``attrs`` attribute, and a validator checking that this field is of the correct type.

    Examples
    --------
    >>> from gflab.domain.utils.entity import required_field, validated, BaseEntity
    >>>
    >>> @validated()
    ... class MyEntity(BaseEntity):
    ...     my_field: str = required_field(str)
    >>>
    >>> from gflab.domain.utils.testing.validation import check_field_not_nullable
    >>> check_field_not_nullable(MyEntity, 'my_field', my_field='foo')

    """
    kwargs: dict = {"validator": attr.validators.instance_of(field_type)}
    if converter is not None:
        kwargs["converter"] = converter
    if default is not attr.NOTHING:
        kwargs["default"] = default
    if frozen:
        kwargs["on_setattr"] = attr.setters.frozen

    return attr.ib(**kwargs)  # type: ignore


def validated() -> Any:
    """Decorate an entity to handle validation.

    This will let ``attrs`` manage the class, using slots for fields, and forcing attributes to
    be passed as named arguments (this allows to not have to defined all required fields first, then
    optional ones, and resolves problems with inheritance where we can't handle the order)

    Returns
    -------
    type
        The decorated class.

    Examples
    --------
    >>> from gflab.domain.utils.entity import required_field, validated, BaseEntity
    >>>
    >>> @validated()
    ... class MyEntity(BaseEntity):
    ...     my_field: str = required_field(str)
    >>>
    >>> MyEntity.__slots__
    ('my_field',)
    >>> instance = MyEntity(my_field='foo')
    >>> instance.my_field
    'foo'
    >>> instance.validate()
    >>> instance.my_field = None
    >>> instance.validate()
    Traceback (most recent call last):
        ...
    TypeError: ("'my_field' must be <class 'str'>...

    """
    return attr.s(slots=True, kw_only=True, eq=False)


TValidateMethod = TypeVar(
    "TValidateMethod", bound=Callable[[Any, "Attribute[_T]", _T], None]
)


class field_validator:  # pylint: disable=invalid-name
    """Decorate an entity method to make it a validator of the given `field`.

    Notes
    -----
    It's easier to implement as a function but we couldn't make mypy work with it.

    Parameters
    ----------
    field : Any
        The field to validate.

    Examples
    --------
    >>> from gflab.domain.utils.entity import field_validator, required_field, BaseEntity
    >>>
    >>> @validated()
    ... class MyEntity(BaseEntity):
    ...    my_field: float = required_field(float)
    ...
    ...    @field_validator(my_field)
    ...    def validate_my_field(self, field, value):
    ...        if value > 1:
    ...            raise ValueError(f'{self.__class__.__name__}.my_field must be at most 1')
    >>>
    >>> instance = MyEntity(my_field=2.0)
    Traceback (most recent call last):
        ...
    ValueError: MyEntity.my_field must be at most 1
    >>> instance = MyEntity(my_field=0.5)
    >>> instance.my_field = 3.0
    >>> instance.validate()
    Traceback (most recent call last):
        ...
    ValueError: MyEntity.my_field must be at most 1

    """

    def __init__(self, field: "Attribute[_T]") -> None:
        """Save the given field."""
        self.field = field

    def __call__(self, func: TValidateMethod) -> TValidateMethod:
        """Decorate the given function.

        Parameters
        ----------
        func: Callable
            The validation method to decorate

        Returns
        -------
        Callable
            The decorated method.

        """
        return cast(TValidateMethod, self.field.validator(func))


def validate_instance(instance: Any) -> Any:
    """Validate a whole instance.

    Parameters
    ----------
    instance : Any
        The instance to validate.

    Raises
    ------
    TypeError, ValueError
        If a field in the `instance` is not valid.

    """
    attr.validate(instance)


def to_float(value: Any) -> Any:
    """Convert real numbers (python or numpy, but not booleans) to ``float``.

    Other values are returned untouched so that type validators can reject them.

    Examples
    --------
    >>> to_float(1)
    1.0
    >>> to_float(np.float32(0.5))
    0.5
    >>> to_float("foo")
    'foo'
    >>> to_float(True)
    True

    """
    if isinstance(value, (bool, np.bool_)):
        return value
    if isinstance(value, Real):
        return float(value)
    return value


def to_float_tuple(value: Any) -> Any:
    """Convert a sequence of real numbers to a tuple of floats.

    Values that are not lists, tuples or numpy arrays are returned untouched.

    Examples
    --------
    >>> to_float_tuple([1, 2.5])
    (1.0, 2.5)
    >>> to_float_tuple(np.array([0.0, 3.0]))
    (0.0, 3.0)
    >>> to_float_tuple("foo")
    'foo'

    """
    if isinstance(value, np.ndarray):
        value = value.tolist()
    if isinstance(value, (list, tuple)):
        return tuple(to_float(item) for item in value)
    return value


def _check_real(value: Any, none_allowed: bool, display_name: str, what: str) -> bool:
    if none_allowed and value is None:
        return False
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise TypeError(f"{display_name} must be {what}")
    if math.isnan(value):
        raise ValueError(f"{display_name} must be {what}")
    return True


def validate_positive_integer(
    value: Any, none_allowed: bool, display_name: str
) -> None:
    """Validate that the given `value` is a positive integer (``None`` accepted if `none_allowed`).

    Parameters
    ----------
    value : Any
        The value to validate as a positive integer.
    none_allowed : bool
        If ``True``, the value can be ``None``. If ``False``, the value must be a positive integer.
    display_name : str
        The name of the field to display in errors.

    Raises
    ------
    TypeError
        If `value` is not of type ``int``.
    ValueError
        If `value` is not a positive integer (ie > 0), or ``None`` if `none_allowed` is ``True``.

    Examples
    --------
    >>> from gflab.domain.utils.entity import field_validator, required_field, BaseEntity
    >>>
    >>> @validated()
    ... class MyEntity(BaseEntity):
    ...    my_field: int = required_field(int)
    ...
    ...    @field_validator(my_field)
    ...    def validate_my_field(self, field, value):
    ...        validate_positive_integer(
    ...            value=value,
    ...            none_allowed=False,
    ...            display_name=f"{self.__class__.__name__}.my_field",
    ...        )
    >>>
    >>> instance = MyEntity(my_field=-2)
    Traceback (most recent call last):
        ...
    ValueError: MyEntity.my_field must be a positive integer
    >>> instance = MyEntity(my_field=0)
    Traceback (most recent call last):
        ...
    ValueError: MyEntity.my_field must be a positive integer
    >>> instance = MyEntity(my_field=1)

    """
    if none_allowed and value is None:
        return

    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{display_name} must be a positive integer")
    if value <= 0:
        raise ValueError(f"{display_name} must be a positive integer")


def validate_positive_real(value: Any, none_allowed: bool, display_name: str) -> None:
    """Validate that the given `value` is a finite real number strictly above 0.

    ``math.inf`` is refused: use :obj:`validate_positive_extended_real` when "unbounded" is a
    meaningful value.

    Parameters
    ----------
    value : Any
        The value to validate.
    none_allowed : bool
        If ``True``, the value can be ``None``.
    display_name : str
        The name of the field to display in errors.

    Raises
    ------
    TypeError
        If `value` is not a real number.
    ValueError
        If `value` is not finite or not strictly positive.

    Examples
    --------
    >>> validate_positive_real(0.5, False, "Ball.radius")
    >>> validate_positive_real(0, False, "Ball.radius")
    Traceback (most recent call last):
        ...
    ValueError: Ball.radius must be a positive real
    >>> validate_positive_real("1", False, "Ball.radius")
    Traceback (most recent call last):
        ...
    TypeError: Ball.radius must be a positive real

    """
    if not _check_real(value, none_allowed, display_name, "a positive real"):
        return
    if not math.isfinite(value) or value <= 0:
        raise ValueError(f"{display_name} must be a positive real")


def validate_positive_extended_real(
    value: Any, none_allowed: bool, display_name: str
) -> None:
    """Validate that the given `value` is a real number strictly above 0, ``math.inf`` allowed.

    Examples
    --------
    >>> validate_positive_extended_real(math.inf, False, "Marked.sub_exponent")
    >>> validate_positive_extended_real(-1.0, False, "Marked.sub_exponent")
    Traceback (most recent call last):
        ...
    ValueError: Marked.sub_exponent must be a positive real or infinity

    """
    if not _check_real(value, none_allowed, display_name, "a positive real or infinity"):
        return
    if value <= 0:
        raise ValueError(f"{display_name} must be a positive real or infinity")


def validate_nonnegative_real(
    value: Any, none_allowed: bool, display_name: str
) -> None:
    """Validate that the given `value` is a finite real number, 0 included.

    Examples
    --------
    >>> validate_nonnegative_real(0.0, False, "Point.coords")
    >>> validate_nonnegative_real(-0.1, False, "Point.coords")
    Traceback (most recent call last):
        ...
    ValueError: Point.coords must be a nonnegative real

    """
    if not _check_real(value, none_allowed, display_name, "a nonnegative real"):
        return
    if not math.isfinite(value) or value < 0:
        raise ValueError(f"{display_name} must be a nonnegative real")


def validate_real_in_range(
    value: Any,
    none_allowed: bool,
    display_name: str,
    low: float,
    high: float,
    low_inclusive: bool = False,
    high_inclusive: bool = False,
) -> None:
    """Validate that the given `value` is a real number inside an interval.

    Parameters
    ----------
    value : Any
        The value to validate.
    none_allowed : bool
        If ``True``, the value can be ``None``.
    display_name : str
        The name of the field to display in errors.
    low, high : float
        Bounds of the interval.
    low_inclusive, high_inclusive : bool
        Whether each bound belongs to the interval.

    Examples
    --------
    >>> validate_real_in_range(0.5, False, "fbm H", 0, 1, high_inclusive=True)
    >>> validate_real_in_range(1.0, False, "fbm H", 0, 1, high_inclusive=True)
    >>> validate_real_in_range(0.0, False, "fbm H", 0, 1, high_inclusive=True)
    Traceback (most recent call last):
        ...
    ValueError: fbm H must be a real in (0, 1]

    """
    interval = f"{'[' if low_inclusive else '('}{low:g}, {high:g}{']' if high_inclusive else ')'}"
    what = f"a real in {interval}"
    if not _check_real(value, none_allowed, display_name, what):
        return
    above = value >= low if low_inclusive else value > low
    below = value <= high if high_inclusive else value < high
    if not (above and below):
        raise ValueError(f"{display_name} must be {what}")


@validated()
class BaseEntity:
    """A base entity without any field, that is able to validate itself."""

    def validate(self) -> None:
        """Validate all fields of the current instance.

        Raises
        ------
        TypeError, ValueError
            If a field is not valid.

        """
        validate_instance(self)

    def evolve(self: _TEntity, **changes: Any) -> _TEntity:
        """Return a copy of the instance with the given fields changed, validated again.

        Raises
        ------
        TypeError, ValueError
            If a changed field is not valid.

        """
        return attr.evolve(self, **changes)


@validated()
class BaseNamedEntity(BaseEntity):
    """A base entity with a frozen :obj:`~BaseNamedEntity.name`, that is able to validate itself.

    Attributes
    ----------
    name : str
        The name of the instance, used for hashing and equality. Cannot be empty.

    """

    name: str = required_field(str, frozen=True)

    @field_validator(name)
    def validate_name_is_not_empty(  # noqa  # pylint: disable=unused-argument
        self, field: "Attribute[_T]", value: _T
    ) -> None:
        """Validate that the :obj:`BaseNamedEntity.name` field is not blank.

        Parameters
        ----------
        field : Any
            The field to validate.
        value : Any
            The value to validate for the `field`.

        Raises
        ------
        ValueError
            If the name is empty or only made of spaces.

        """
        if not str(value).strip():
            raise ValueError(f"{self.__class__.__name__}.name must not be empty")

    def __hash__(self) -> int:
        """Compute the hash of the entity, based on its name only.

        Returns
        -------
        int
            The hash for the entity

        """
        return hash(self.name)

    def __eq__(self, other: Any) -> bool:
        """Check if the `other` object is an entity of the same class with the same name.

        Parameters
        ----------
        other : Any
            The object to compare with the actual entity.

        Returns
        -------
        bool
            ``True`` if `other` is an instance of the same class, with the same name.

        """
        return self.__class__ is other.__class__ and self.name == other.name
