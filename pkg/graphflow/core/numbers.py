"""Exact rational coefficients. Everything is stored as an element of sympy's
rational field QQ."""

from sympy import QQ

from graphflow.exceptions import FormatError

ZERO = QQ(0)
ONE = QQ(1)


def to_qq(value):
    if isinstance(value, str):
        return parse_qq(value)
    if isinstance(value, int):
        return QQ(value)
    if hasattr(value, 'p') and hasattr(value, 'q'):
        return QQ(int(value.p), int(value.q))
    if hasattr(value, 'numerator') and hasattr(value, 'denominator'):
        return QQ(int(value.numerator), int(value.denominator))
    raise FormatError('Not an exact rational: {!r}'.format(value))


def parse_qq(text: str):
    text = text.strip()
    try:
        if '/' in text:
            p, q = text.split('/')
            q = int(q)
            if q == 0:
                raise FormatError('Zero denominator in {!r}'.format(text))
            return QQ(int(p), q)
        return QQ(int(text))
    except ValueError:
        raise FormatError('Not an exact rational: {!r}'.format(text))


def format_qq(c) -> str:
    c = to_qq(c)
    if c.denominator == 1:
        return str(c.numerator)
    return '{}/{}'.format(c.numerator, c.denominator)


def sign_of_permutation(values) -> int:
    """Parity sign of the permutation sorting a sequence of distinct values."""
    values = list(values)
    inversions = 0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[j] < values[i]:
                inversions += 1
    return -1 if inversions % 2 else 1
