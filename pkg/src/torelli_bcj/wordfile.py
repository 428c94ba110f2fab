"""JSON encoding of Torelli words.

Schema::

    {"genus": 4, "letters": [
        {"type": "bscc", "pairs": [[c, d], ...]},
        {"type": "bp", "e": e, "pairs": [[c, d], ...]},
        {"type": "twist", "class": x, "power": -1},
        {"type": "conj", "by": {"matrix": [[...], ...]}, "inner": {...}}
    ]}

Homology classes are length-2g integer lists in (a_1..a_g, b_1..b_g) order.
"""

from __future__ import annotations

import json
from typing import Any

from .symplectic import HClass, SpMatrix
from .words import BP, BSCC, Conj, GeneratorSpec, TorelliWord, Twist


class WordParseError(ValueError):
    def __init__(self, message: str, index: int | None = None):
        self.index = index
        where = f"letter {index}: " if index is not None else ""
        super().__init__(where + message)


def _class(value: Any, g: int, what: str) -> HClass:
    if not isinstance(value, list) or len(value) != 2 * g or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
        raise ValueError(f"{what} must be a list of {2 * g} integers")
    return HClass(g, value)


def _pairs(value: Any, g: int) -> tuple:
    if not isinstance(value, list) or not value:
        raise ValueError("pairs must be a nonempty list")
    out = []
    for k, pair in enumerate(value):
        if not isinstance(pair, list) or len(pair) != 2:
            raise ValueError(f"pair {k} must be [c, d]")
        out.append((_class(pair[0], g, f"pair {k} c"), _class(pair[1], g, f"pair {k} d")))
    return tuple(out)


def letter_from_json(obj: Any, g: int) -> GeneratorSpec:
    if not isinstance(obj, dict):
        raise ValueError("letter must be an object")
    kind = obj.get("type")
    if kind == "bscc":
        return BSCC(_pairs(obj.get("pairs"), g))
    if kind == "bp":
        return BP(_class(obj.get("e"), g, "e"), _pairs(obj.get("pairs"), g))
    if kind == "twist":
        power = obj.get("power", 1)
        if not isinstance(power, int) or isinstance(power, bool):
            raise ValueError("power must be an integer")
        return Twist(_class(obj.get("class"), g, "class"), power)
    if kind == "conj":
        by = obj.get("by")
        if not isinstance(by, dict) or "matrix" not in by:
            raise ValueError('conj needs "by": {"matrix": ...}')
        try:
            f = SpMatrix(g, by["matrix"])
        except (TypeError, ValueError) as exc:
            raise ValueError(f"conjugator: {exc}") from None
        return Conj(f, letter_from_json(obj.get("inner"), g))
    raise ValueError(f"unknown letter type {kind!r}")


def word_from_json(obj: Any) -> TorelliWord:
    if not isinstance(obj, dict):
        raise WordParseError("word file must be a JSON object")
    g = obj.get("genus")
    if not isinstance(g, int) or isinstance(g, bool) or g < 1:
        raise WordParseError("genus must be a positive integer")
    letters = obj.get("letters", [])
    if not isinstance(letters, list):
        raise WordParseError("letters must be a list")
    out = []
    for i, item in enumerate(letters):
        try:
            out.append(letter_from_json(item, g))
        except ValueError as exc:
            raise WordParseError(str(exc), i) from None
    return TorelliWord(g, tuple(out))


def parse_word(text: str) -> TorelliWord:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WordParseError(f"invalid JSON: {exc}") from None
    return word_from_json(obj)


def load_word(path: str) -> TorelliWord:
    with open(path, encoding="utf-8") as fh:
        return parse_word(fh.read())


def letter_to_json(spec: GeneratorSpec) -> dict:
    if isinstance(spec, BSCC):
        return {"type": "bscc", "pairs": [[list(c.coords), list(d.coords)] for c, d in spec.pairs]}
    if isinstance(spec, BP):
        return {
            "type": "bp",
            "e": list(spec.e.coords),
            "pairs": [[list(c.coords), list(d.coords)] for c, d in spec.pairs],
        }
    if isinstance(spec, Twist):
        return {"type": "twist", "class": list(spec.x.coords), "power": spec.power}
    if isinstance(spec, Conj):
        return {"type": "conj", "by": {"matrix": spec.f.tolist()}, "inner": letter_to_json(spec.inner)}
    raise TypeError(f"unknown letter type {type(spec).__name__}")


def word_to_json(w: TorelliWord) -> dict:
    return {"genus": w.genus, "letters": [letter_to_json(s) for s in w.letters]}


def render_word(w: TorelliWord) -> str:
    return json.dumps(word_to_json(w), sort_keys=True)


def word_key(w: TorelliWord) -> str:
    """Canonical compact string, usable as a table key."""
    return json.dumps(word_to_json(w), sort_keys=True, separators=(",", ":"))
