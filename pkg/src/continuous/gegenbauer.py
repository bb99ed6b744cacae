import logging
from functools import lru_cache
from typing import Tuple

from sympy import Rational, S

from .polynomials import PolyRational, poly, t, degree
from ..utils.errors import UnsupportedDegreeError, NotCertifiableError

logger = logging.getLogger(__name__)

MAX_DEGREE = 6


def sphere_moment(j: int, d: int) -> Rational:
    """
    E[t^j] for t the first coordinate of a uniform point on S^(d-1).

    Odd moments vanish; the moment of t^(2i) is (2i-1)!! / (d (d+2) ... (d+2i-2)).
    This is the weight (1 - t^2)^((d-3)/2) on [-1, 1], normalized, including d = 2.
    """
    if j % 2:
        return S.Zero
    value = S.One
    for l in range(j // 2):
        value *= Rational(2 * l + 1, d + 2 * l)
    return value


def sphere_inner(f: PolyRational, g: PolyRational, d: int) -> Rational:
    return sum((c * sphere_moment(k, d) for (k,), c in (f * g).terms()), S.Zero)


def _check(k: int, d: int) -> None:
    if k > MAX_DEGREE:
        raise UnsupportedDegreeError(f"Degrees up to {MAX_DEGREE} are supported, got {k}")
    if k < 0:
        raise ValueError(f"Degree must be nonnegative, got {k}")
    if d < 2:
        raise ValueError(f"Sphere dimension d must be at least 2, got {d}")


@lru_cache(maxsize=None)
def gegenbauer_monic(k: int, d: int) -> PolyRational:
    """
    Monic degree-k orthogonal polynomial for the sphere S^(d-1).

    Gram-Schmidt on 1, t, t^2, ... with exact moments.

    Raises:
        UnsupportedDegreeError: If k > 6.
    """
    _check(k, d)
    monomial = poly(t ** k)
    result = monomial
    for j in range(k):
        lower = gegenbauer_monic(j, d)
        result = result - lower.mul_ground(sphere_inner(monomial, lower, d) / sphere_inner(lower, lower, d))
    return result


def expand(f: PolyRational, d: int) -> Tuple[Rational, ...]:
    """
    Exact coefficients of f over gegenbauer_monic(0..deg f, d).

    Monic basis elements allow back-substitution from the top degree.
    """
    top = degree(f)
    _check(max(top, 0), d)
    if top < 0:
        return (S.Zero,)
    result = [S.Zero] * (top + 1)
    remainder = f
    for k in range(top, -1, -1):
        a = remainder.coeff_monomial(t ** k)
        result[k] = a
        if a:
            remainder = remainder - gegenbauer_monic(k, d).mul_ground(a)
    if not remainder.is_zero:
        raise ArithmeticError(f"Expansion left a remainder {remainder.as_expr()}")
    return tuple(result)


def resum(coefficients, d: int) -> PolyRational:
    """Inverse of expand."""
    total = poly(0)
    for k, a in enumerate(coefficients):
        total = total + gegenbauer_monic(k, d).mul_ground(Rational(a))
    return total


def is_positive_definite(f: PolyRational, d: int) -> bool:
    """Sufficient certificate: every expansion coefficient is nonnegative."""
    return all(bool(a >= 0) for a in expand(f, d))


def energy_lower_bound_gegenbauer(f: PolyRational, d: int) -> Rational:
    """
    Lower bound on I_f(mu) over probability measures on S^(d-1): the constant coefficient.

    Raises:
        NotCertifiableError: If some nonconstant coefficient is negative.
    """
    coefficients = expand(f, d)
    negative = [k for k, a in enumerate(coefficients) if k > 0 and a < 0]
    if negative:
        raise NotCertifiableError(f"Negative Gegenbauer coefficients at degrees {negative} for d={d}")
    return coefficients[0]
