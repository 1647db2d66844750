"""Parsing and canonical formatting of exact rational literals."""

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse a decimal ("2.5", "-20") or ratio ("5/2") literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical text form: integers bare, everything else as "p/q"."""
    return str(value)
