"""Parameter grids for verification sweeps.

A grid file is a JSON object of named lists, e.g.::

    {"n": [0, 1, 2, 3], "u": ["2", "-1/2"], "x": ["0", "1/2"], "s": [2]}

Omitted keys fall back to the defaults below. Integer lists may also be
given as ``{"min": a, "max": b}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..errors import GridError
from ..exact_arith import as_rational, format_rational

INT_KEYS = ("n", "s", "padic_p", "padic_n", "padic_precision", "shift_levels")
RATIONAL_KEYS = ("u", "x", "padic_u", "padic_x")


@dataclass(frozen=True)
class Caps:
    max_n: int = 8
    max_s: int = 3
    max_u_height: int = 16
    max_shift_terms: int = 3**6


def _ints(*vals: int) -> tuple[int, ...]:
    return tuple(vals)


def _rats(*vals: str) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in vals)


@dataclass(frozen=True)
class Grid:
    n: tuple[int, ...] = _ints(*range(9))
    u: tuple[Fraction, ...] = _rats("2", "3", "5", "-1/2", "5/3")
    x: tuple[Fraction, ...] = _rats("0", "1", "2", "-1", "1/2")
    s: tuple[int, ...] = _ints(2, 3)
    padic_p: tuple[int, ...] = _ints(3)
    padic_u: tuple[Fraction, ...] = _rats("4", "7")
    padic_n: tuple[int, ...] = _ints(*range(9))
    padic_x: tuple[Fraction, ...] = _rats("0", "1/2")
    padic_precision: tuple[int, ...] = _ints(8)
    shift_levels: tuple[int, ...] = _ints(1, 2)

    @classmethod
    def empty(cls) -> "Grid":
        return cls(**{f.name: () for f in fields(cls)})

    @classmethod
    def from_mapping(cls, data: dict[str, Any]) -> "Grid":
        if not isinstance(data, dict):
            raise GridError("grid must be a JSON object")
        unknown = set(data) - {f.name for f in fields(cls)}
        if unknown:
            raise GridError("unknown grid keys: %s" % ", ".join(sorted(unknown)))
        kwargs = {}
        for key, raw in data.items():
            if key in INT_KEYS:
                kwargs[key] = _parse_ints(key, raw)
            else:
                kwargs[key] = _parse_rationals(key, raw)
        return cls(**kwargs)

    @classmethod
    def load(cls, path: str | Path) -> "Grid":
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise GridError("cannot read grid file %s: %s" % (path, exc)) from exc
        return cls.from_mapping(data)

    def describe(self) -> dict[str, Any]:
        out: dict[str, Any] = {}
        for f in fields(self):
            vals = getattr(self, f.name)
            if f.name in INT_KEYS:
                out[f.name] = list(vals)
            else:
                out[f.name] = [format_rational(v) for v in vals]
        return out

    def validate(self, caps: Caps) -> None:
        for key in ("n", "padic_n"):
            for v in getattr(self, key):
                if v < 0 or v > caps.max_n:
                    raise GridError("%s=%d outside [0, %d]" % (key, v, caps.max_n))
        for s in self.s:
            if s < 1 or s > caps.max_s:
                raise GridError("s=%d outside [1, %d]" % (s, caps.max_s))
        for key in ("u", "padic_u"):
            for v in getattr(self, key):
                if abs(v.numerator) > caps.max_u_height or v.denominator > caps.max_u_height:
                    raise GridError(
                        "%s=%s exceeds height cap %d" % (key, format_rational(v), caps.max_u_height)
                    )
        for p in self.padic_p:
            for N in self.shift_levels:
                if N < 1 or p**N > caps.max_shift_terms:
                    raise GridError("shift level %d^%d exceeds term cap" % (p, N))
        for M in self.padic_precision:
            if M < 1:
                raise GridError("padic precision must be positive")


def _parse_ints(key: str, raw: Any) -> tuple[int, ...]:
    if isinstance(raw, dict):
        try:
            lo, hi = int(raw["min"]), int(raw["max"])
        except (KeyError, TypeError, ValueError) as exc:
            raise GridError("%s: range needs integer min and max" % key) from exc
        return tuple(range(lo, hi + 1))
    if not isinstance(raw, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in raw):
        raise GridError("%s must be a list of integers" % key)
    return tuple(sorted(set(raw)))


def _parse_rationals(key: str, raw: Any) -> tuple[Fraction, ...]:
    if not isinstance(raw, list):
        raise GridError("%s must be a list of rationals" % key)
    out = []
    for v in raw:
        try:
            out.append(as_rational(v))
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise GridError("%s: bad rational %r" % (key, v)) from exc
    return tuple(sorted(set(out)))


DEFAULT_GRID = Grid()
DEFAULT_CAPS = Caps()
