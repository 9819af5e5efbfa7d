"""Exact rational scalars.

Every quantity in this library is an exact rational number; floating point
never appears.  We use gmpy2's mpq when available (much faster) and fall
back to the stdlib Fraction, which has an identical arithmetic surface for
our purposes (construction from ints or "a/b" strings, str() rendering as
"a/b" or "a").
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    from fractions import Fraction as Q

ZERO = Q(0)
ONE = Q(1)


def rat(value, den=None):
    """Build an exact rational from ints, a rational, or an 'a/b' string."""
    if den is not None:
        return Q(value, den)
    return Q(value)


def parse_rat(token: str):
    """Parse a rational literal like '3', '-2' or '7/3'.

    Raises ValueError with the offending token named.
    """
    token = token.strip()
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            d = int(den)
            if d == 0:
                raise ValueError
            return Q(int(num), d)
        return Q(int(token))
    except (ValueError, TypeError):
        raise ValueError(f"malformed rational {token!r}") from None


def format_rat(q) -> str:
    """Render a rational exactly, e.g. '-3/2' or '5'."""
    return str(q)
