from typing import Iterable, Tuple

import sympy
from sympy import Poly, QQ, Rational

t = sympy.Symbol('t')

# Polynomials in t with exact rational coefficients.
PolyRational = Poly


def poly(expression) -> PolyRational:
    return Poly(expression, t, domain=QQ)


def from_coefficients(coefficients: Iterable) -> PolyRational:
    """Build from ascending coefficients; coefficients[k] multiplies t^k."""
    descending = [Rational(c) for c in coefficients][::-1]
    return Poly.from_list(descending or [0], t, domain=QQ)


def parse_coefficients(text: str) -> PolyRational:
    """Comma-separated ascending coefficients, e.g. '-1/3,0,1' for t^2 - 1/3."""
    try:
        return from_coefficients(Rational(token.strip()) for token in text.split(","))
    except (TypeError, ValueError, ZeroDivisionError, sympy.SympifyError) as e:
        raise ValueError(f"Cannot read polynomial coefficients from {text!r}: {e}") from e


def degree(f: PolyRational) -> int:
    """Degree with -1 for the zero polynomial."""
    return -1 if f.is_zero else int(f.degree())


def coefficients(f: PolyRational) -> Tuple[Rational, ...]:
    """Ascending coefficients, empty for the zero polynomial."""
    return tuple(f.all_coeffs()[::-1]) if not f.is_zero else ()


def format_poly(f: PolyRational) -> str:
    return sympy.sstr(f.as_expr())


T = poly(t)


def simplex_shift_square(d: int) -> PolyRational:
    """(t + 1/d)^2."""
    return poly((t + Rational(1, d)) ** 2)


def etf_dev_square(d: int) -> PolyRational:
    """(t^2 - 1/(d+2))^2."""
    return poly((t ** 2 - Rational(1, d + 2)) ** 2)
