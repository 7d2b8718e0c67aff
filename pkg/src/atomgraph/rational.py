"""Serialization helpers for exact rationals ("p/q" strings)."""

from fractions import Fraction


def to_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing to coerce float {x!r} to an exact rational")
    return Fraction(x)


def fmt(x):
    """Canonical ``p/q`` form: lowest terms, positive denominator."""
    x = to_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_float(x):
    return format(float(x), ".17g")


def parse(s):
    if isinstance(s, bool):
        raise ValueError(f"not a rational: {s!r}")
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"not a rational string: {s!r}")
    try:
        return Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational string: {s!r}") from exc


def fmt_vector(v, as_float=False):
    f = fmt_float if as_float else fmt
    return [f(x) for x in v]


def fmt_matrix(m, as_float=False):
    return [fmt_vector(row, as_float) for row in m]


def parse_vector(items):
    return tuple(parse(s) for s in items)


def parse_matrix(rows):
    m = tuple(parse_vector(r) for r in rows)
    if m and len({len(r) for r in m}) != 1:
        raise ValueError("matrix rows have unequal lengths")
    return m
