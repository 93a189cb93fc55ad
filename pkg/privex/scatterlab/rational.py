"""
Exact rational scalars.

All geometry in the core is carried by :class:`fractions.Fraction`, exposed as :data:`Rat`. Rationals are
serialized as ``"p/q"`` strings (reduced, ``q > 0``), including integers (``"3/1"``).
"""
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, List

from privex.scatterlab.exceptions import TermValidationError

Rat = Fraction

_RAT_RE = re.compile(r'^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$')


def rat(value) -> Fraction:
    """
    Convert ``value`` into an exact :class:`.Rat`. Accepts ints, Fractions, and ``"p/q"`` / ``"p"`` strings.
    Floats are refused, since no floating point may enter the core.

        >>> rat('3/6')
        Fraction(1, 2)

    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TermValidationError(f'Booleans are not rationals: {value!r}')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        m = _RAT_RE.match(value)
        if not m:
            raise TermValidationError(f'Not a rational string: {value!r}', details=dict(value=value))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise TermValidationError(f'Zero denominator: {value!r}', details=dict(value=value))
        return Fraction(int(m.group(1)), den)
    raise TermValidationError(
        f'Cannot convert {type(value).__name__} into an exact rational', details=dict(value=repr(value))
    )


def rat_str(value) -> str:
    v = rat(value)
    return f'{v.numerator}/{v.denominator}'


def rat_list(values: Iterable) -> List[Fraction]:
    return [rat(v) for v in values]


def pow2(k: int) -> Fraction:
    """``2 ** k`` as an exact rational, for negative ``k`` too"""
    return Fraction(2) ** k


def window_start(k: int) -> Fraction:
    """Left end ``1 - 2^(1-k)`` of the compression window ``W_k``"""
    return 1 - pow2(1 - k)


def window_end(k: int) -> Fraction:
    """Right end ``1 - 2^(-k)`` of the compression window ``W_k``"""
    return 1 - pow2(-k)


def window_index(x: Fraction) -> int:
    """
    The window ``k >= 1`` with ``W_k.start <= x < W_k.end``, for ``0 <= x < 1``. A shared endpoint
    ``1 - 2^(-k)`` belongs to window ``k + 1`` here.
    """
    k = 1
    while x >= window_end(k):
        k += 1
    return k
