import logging

from .vector_files import load_vectors
from ..core.configuration import Configuration
from ..frames.builders import repeated_onb, simplex, etf, repeat_config, hybrid_simplex
from ..utils.errors import ConstructorSpecError

logger = logging.getLogger(__name__)

SYNTAX = "onb:DxN | simplex:D | etf:D,N | hybrid:D,K | repeat:(SPEC)xN | file:PATH"


def _ints(text: str, sep: str, count: int, spec: str):
    parts = text.split(sep) if sep else [text]
    if len(parts) != count:
        raise ConstructorSpecError(f"Malformed constructor {spec!r}; expected {SYNTAX}")
    try:
        values = [int(part.strip()) for part in parts]
    except ValueError:
        raise ConstructorSpecError(f"Non-integer field in constructor {spec!r}") from None
    if any(v < 1 for v in values):
        raise ConstructorSpecError(f"Fields of {spec!r} must be positive integers")
    return values


def _split_repeat(body: str, spec: str):
    """'(inner)xN' -> ('inner', N) with balanced parentheses."""
    if not body.startswith("("):
        raise ConstructorSpecError(f"repeat needs a parenthesised inner constructor in {spec!r}")
    depth = 0
    for i, char in enumerate(body):
        depth += char == "("
        depth -= char == ")"
        if depth == 0:
            inner, rest = body[1:i], body[i + 1:]
            break
    else:
        raise ConstructorSpecError(f"Unbalanced parentheses in {spec!r}")
    if not rest.startswith("x"):
        raise ConstructorSpecError(f"repeat needs a trailing xN in {spec!r}")
    (N,) = _ints(rest[1:], "", 1, spec)
    return inner, N


def parse_construction(spec: str) -> Configuration:
    """
    Build a configuration from the constructor mini-language.

    Args:
        spec: One of onb:DxN, simplex:D, etf:D,N, hybrid:D,K, repeat:(SPEC)xN, file:PATH.

    Raises:
        ConstructorSpecError: If the text does not follow the grammar.
    """
    spec = spec.strip()
    kind, sep, body = spec.partition(":")
    if not sep:
        raise ConstructorSpecError(f"Malformed constructor {spec!r}; expected {SYNTAX}")

    if kind == "onb":
        d, N = _ints(body, "x", 2, spec)
        return repeated_onb(d, N)
    if kind == "simplex":
        (d,) = _ints(body, "", 1, spec)
        return simplex(d)
    if kind == "etf":
        d, N = _ints(body, ",", 2, spec)
        return etf(d, N)
    if kind == "hybrid":
        d, k = _ints(body, ",", 2, spec)
        if k > d:
            raise ConstructorSpecError(f"hybrid needs K <= D in {spec!r}")
        return hybrid_simplex(d, k)
    if kind == "repeat":
        inner, N = _split_repeat(body, spec)
        return repeat_config(parse_construction(inner), N)
    if kind == "file":
        if not body:
            raise ConstructorSpecError("file constructor needs a path")
        return load_vectors(body)
    raise ConstructorSpecError(f"Unknown constructor {kind!r}; expected {SYNTAX}")
