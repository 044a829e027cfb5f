"""JSON and LaTeX formats.

Order ideals are read from one of::

    {"dim": n, "generators": [[a1, ..., an], ...]}   downward closure
    {"dim": n, "elements":   [[a1, ..., an], ...]}   must be division-closed
    {"partition": [l1, ..., lm]}                     two-variable staircase

Generating functions are written as ``{"num": [[e1, ..., en, "p/q"], ...],
"den": [e1, ..., en]}`` meaning ``num / prod (1 - y_i)^den_i``; numerator
terms appear in graded order.  Decompositions use ``{"cones": [{"anchor":
[...], "free": [i, ...]}, ...]}`` with 0-based direction indices.
Rationals are always strings ``"p/q"`` or integers, never decimals.
"""
from __future__ import annotations

import json
from collections.abc import Iterable
from fractions import Fraction

import numpy as np

from .decomposition import Cone, StanleyDecomposition
from .gf import Polynomial, RationalGF, SeriesTable
from .index import IndexTable
from .lattice import (
    DimensionMismatch,
    InvalidOrderIdeal,
    OrderIdeal,
    order_ideal_from_generators,
    order_ideal_from_partition,
    validate_order_ideal,
)


class FormatError(ValueError):
    """Input that does not match any of the documented JSON layouts."""


def format_fraction(c) -> str | int:
    c = Fraction(c)
    if c.denominator == 1:
        return c.numerator
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise FormatError(f"expected an integer or 'p/q' string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"not an exact rational: {text!r}") from exc


def _int_list(v, what: str) -> list[int]:
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise FormatError(f"{what} must be a list of integers, got {v!r}")
    return v


# order ideals


def order_ideal_from_json(data) -> OrderIdeal:
    """Build an ideal from parsed JSON.

    Raises ``FormatError`` for structural problems and ``InvalidOrderIdeal``
    when the data is well-formed but does not describe an order ideal.
    """
    if not isinstance(data, dict):
        raise FormatError("order ideal JSON must be an object")
    if "partition" in data:
        parts = _int_list(data["partition"], "partition")
        try:
            return order_ideal_from_partition(parts)
        except ValueError as exc:
            raise InvalidOrderIdeal(str(exc)) from exc
    if "dim" not in data:
        raise FormatError("missing 'dim'")
    dim = data["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(f"'dim' must be a positive integer, got {dim!r}")
    key = "generators" if "generators" in data else "elements" if "elements" in data else None
    if key is None:
        raise FormatError("expected one of 'generators', 'elements' or 'partition'")
    if not isinstance(data[key], list):
        raise FormatError(f"'{key}' must be a list")
    vecs = [_int_list(v, key[:-1]) for v in data[key]]
    try:
        if key == "generators":
            return order_ideal_from_generators(dim, vecs)
        return validate_order_ideal(dim, vecs)
    except DimensionMismatch as exc:
        raise FormatError(str(exc)) from exc
    except InvalidOrderIdeal:
        raise
    except ValueError as exc:
        raise InvalidOrderIdeal(str(exc)) from exc


def order_ideal_to_json(O: OrderIdeal) -> dict:
    return {"dim": O.dim, "elements": [list(a) for a in O]}


def load_order_ideal(path) -> OrderIdeal:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return order_ideal_from_json(data)


# polynomials and generating functions


def _var(i: int) -> str:
    return f"y{i + 1}"


def _monomial_text(alpha, latex=False) -> str:
    parts = []
    for i, e in enumerate(alpha):
        if e == 0:
            continue
        name = f"y_{{{i + 1}}}" if latex else _var(i)
        if e == 1:
            parts.append(name)
        else:
            parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return ("" if latex else "*").join(parts)


def _coefficient_text(c: Fraction, latex: bool) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return f"\\frac{{{c.numerator}}}{{{c.denominator}}}"
    return f"{c.numerator}/{c.denominator}"


def _polynomial_text(p: Polynomial, latex: bool) -> str:
    if p.is_zero():
        return "0"
    out = []
    for alpha, c in p.sorted_terms():
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = _monomial_text(alpha, latex)
        if not mono:
            body = _coefficient_text(mag, latex)
        elif mag == 1:
            body = mono
        else:
            body = _coefficient_text(mag, latex) + (" " if latex else "*") + mono
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def polynomial_to_text(p: Polynomial) -> str:
    return _polynomial_text(p, latex=False)


def polynomial_to_latex(p: Polynomial) -> str:
    return _polynomial_text(p, latex=True)


def gf_to_text(g: RationalGF) -> str:
    num = polynomial_to_text(g.numerator)
    factors = [
        f"(1 - {_var(i)})" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g.den) if e
    ]
    if not factors:
        return num
    return f"({num}) / ({'*'.join(factors)})"


def gf_to_latex(g: RationalGF) -> str:
    num = polynomial_to_latex(g.numerator)
    factors = [
        f"(1 - y_{{{i + 1}}})" + (f"^{{{e}}}" if e > 1 else "")
        for i, e in enumerate(g.den)
        if e
    ]
    if not factors:
        return num
    return f"\\frac{{{num}}}{{{''.join(factors)}}}"


def gf_to_json(g: RationalGF) -> dict:
    return {
        "num": [list(alpha) + [str(format_fraction(c))] for alpha, c in g.numerator.sorted_terms()],
        "den": list(g.den),
    }


def gf_from_json(data) -> RationalGF:
    if not isinstance(data, dict) or "num" not in data or "den" not in data:
        raise FormatError("generating function JSON needs 'num' and 'den'")
    den = _int_list(data["den"], "den")
    terms = []
    for row in data["num"]:
        if not isinstance(row, list) or len(row) != len(den) + 1:
            raise FormatError(f"numerator term {row!r} does not match {len(den)} variables")
        terms.append((_int_list(row[:-1], "exponent"), parse_fraction(row[-1])))
    try:
        return RationalGF(Polynomial(len(den), terms), tuple(den))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# tables


def index_table_to_json(t: IndexTable) -> dict:
    return {"bounds": list(t.bounds), "values": t.values.tolist()}


def index_table_from_json(data) -> IndexTable:
    bounds = tuple(_int_list(data["bounds"], "bounds"))
    values = np.asarray(data["values"], dtype=np.int64)
    if values.shape != tuple(b + 1 for b in bounds):
        raise FormatError(f"values of shape {values.shape} do not fit bounds {bounds}")
    return IndexTable(bounds, values)


def series_table_to_json(s: SeriesTable) -> dict:
    return {
        "bounds": list(s.bounds),
        "coeffs": np.vectorize(lambda c: str(format_fraction(c)), otypes=[object])(s.coeffs).tolist(),
    }


# decompositions


def cone_to_json(c: Cone) -> dict:
    return {"anchor": list(c.anchor), "free": sorted(c.free)}


def decomposition_to_json(d: StanleyDecomposition) -> dict:
    return {"dim": d.dim, "cones": [cone_to_json(c) for c in d.cones]}


def decomposition_from_json(data, dim: int | None = None) -> StanleyDecomposition:
    if not isinstance(data, dict) or not isinstance(data.get("cones"), list):
        raise FormatError("decomposition JSON needs a 'cones' list")
    cones = []
    for entry in data["cones"]:
        if not isinstance(entry, dict) or "anchor" not in entry:
            raise FormatError(f"bad cone entry {entry!r}")
        try:
            cones.append(Cone(_int_list(entry["anchor"], "anchor"), _int_list(entry.get("free", []), "free")))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    dim = data.get("dim", dim)
    if dim is None:
        if not cones:
            raise FormatError("empty decomposition needs 'dim'")
        dim = cones[0].dim
    try:
        return StanleyDecomposition(dim, cones)
    except DimensionMismatch as exc:
        raise FormatError(str(exc)) from exc


def load_decomposition(path, dim: int | None = None) -> StanleyDecomposition:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: {exc}") from exc
    return decomposition_from_json(data, dim)


def parse_vector(text: str) -> tuple[int, ...]:
    """``"7,7"`` -> ``(7, 7)``."""
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError as exc:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from exc


def parse_rationals(text: str) -> tuple[Fraction, ...]:
    return tuple(parse_fraction(x.strip()) for x in text.split(",")) if text.strip() else ()


def vectors_to_json(vecs: Iterable) -> list[list[int]]:
    return [list(v) for v in sorted(vecs, key=lambda a: (sum(a), a))]
