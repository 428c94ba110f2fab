"""The Birman-Craggs-Johnson homomorphism and the Rohlin invariant.

On generators:

* twist about a separating curve cutting off pairs ``(c_i, d_i)``:
  ``sigma = sum c_i d_i``
* bounding pair map with ``[beta] = e``: ``sigma = sum c_i d_i (e + 1)``
* conjugate ``f w f^{-1}``: ``sigma = f . sigma(w)``

where products are taken in the Boolean algebra of :mod:`.boolean`.  The
Rohlin invariant of a Torelli gluing word is the constant coefficient of
its sigma image.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .boolean import BoolElement, bar, multiply, sp_action, stabilize
from .symplectic import HClass, SpMatrix, omega
from .words import (
    BP,
    BSCC,
    Conj,
    GeneratorSpec,
    InvalidLetter,
    TorelliWord,
    Twist,
    validate,
)


class SigmaUndefined(ValueError):
    """Raised when sigma is asked for on a non-Torelli letter."""


def _pairs_sum(pairs, g: int) -> BoolElement:
    acc = BoolElement.zero(g)
    for c, d in pairs:
        acc = acc + multiply(bar(c), bar(d))
    return acc


def _sigma_unchecked(spec: GeneratorSpec) -> BoolElement:
    if isinstance(spec, BSCC):
        return _pairs_sum(spec.pairs, spec.genus)
    if isinstance(spec, BP):
        g = spec.genus
        return multiply(_pairs_sum(spec.pairs, g), bar(spec.e) + BoolElement.one(g))
    if isinstance(spec, Conj):
        return sp_action(spec.f, _sigma_unchecked(spec.inner))
    if isinstance(spec, Twist):
        raise SigmaUndefined("sigma is only defined on Torelli letters; got a plain Dehn twist")
    raise TypeError(f"unknown letter type {type(spec).__name__}")


def sigma_spec(spec: GeneratorSpec) -> BoolElement:
    report = validate(spec)
    if not report.ok:
        raise ValueError("invalid letter: " + "; ".join(report.violations))
    return _sigma_unchecked(spec)


@functools.lru_cache(maxsize=4096)
def _letter_sigma(letter: GeneratorSpec) -> BoolElement | tuple[str, list[str]]:
    report = validate(letter)
    if not report.ok:
        return ("invalid", report.violations)
    try:
        return _sigma_unchecked(letter)
    except SigmaUndefined as exc:
        return ("undefined", [str(exc)])


def sigma_word(w: TorelliWord) -> BoolElement:
    """Sum of sigma over the letters.

    Inverse letters are not tracked: the target has exponent 2.
    """
    acc = BoolElement.zero(w.genus)
    for i, letter in enumerate(w.letters):
        value = _letter_sigma(letter)
        if isinstance(value, tuple):
            kind, msgs = value
            if kind == "invalid":
                raise InvalidLetter(i, msgs)
            raise SigmaUndefined(f"letter {i}: {msgs[0]}")
        acc = acc + value
    return acc


def transport(f: SpMatrix, spec: GeneratorSpec) -> GeneratorSpec:
    """The letter ``f spec f^{-1}`` written out in transported classes."""
    if not isinstance(f, SpMatrix):
        raise TypeError("transport needs a symplectic matrix")
    if f.genus != spec.genus:
        raise ValueError(f"genus mismatch: {f.genus} != {spec.genus}")
    if isinstance(spec, BSCC):
        return BSCC(tuple((f.apply(c), f.apply(d)) for c, d in spec.pairs))
    if isinstance(spec, BP):
        return BP(f.apply(spec.e), tuple((f.apply(c), f.apply(d)) for c, d in spec.pairs))
    if isinstance(spec, Twist):
        return Twist(f.apply(spec.x), spec.power)
    if isinstance(spec, Conj):
        return Conj(f @ spec.f, spec.inner)
    raise TypeError(f"unknown letter type {type(spec).__name__}")


def conjugate_word(f: SpMatrix, w: TorelliWord) -> TorelliWord:
    return TorelliWord(w.genus, tuple(transport(f, letter) for letter in w.letters))


def pi0(p: BoolElement) -> int:
    """Coefficient of the unit monomial."""
    return p.coefficient(0)


def rohlin(w: TorelliWord) -> int:
    return pi0(sigma_word(w))


@dataclass(frozen=True)
class TwoTorsionGroup:
    """``(Z/2)^rank`` with labelled basis; elements are bitmask ints."""

    rank: int
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        labels = tuple(self.labels) or tuple(f"x{i + 1}" for i in range(self.rank))
        if len(labels) != self.rank:
            raise ValueError("need one label per basis element")
        object.__setattr__(self, "labels", labels)

    zero = 0

    def basis(self, i: int) -> int:
        if not 0 <= i < self.rank:
            raise IndexError(i)
        return 1 << i

    def element(self, coords: Sequence[int]) -> int:
        if len(coords) != self.rank:
            raise ValueError("wrong number of coordinates")
        return sum((c % 2) << i for i, c in enumerate(coords))

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < (1 << self.rank)

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def elements(self) -> list[int]:
        return list(range(1 << self.rank))

    def format(self, x: int) -> str:
        if x == 0:
            return "0"
        return " + ".join(lab for i, lab in enumerate(self.labels) if (x >> i) & 1)


def mu_x(w: TorelliWord, x: int, group: TwoTorsionGroup | None = None) -> int:
    """``x`` if the Rohlin invariant of ``w`` is 1, else the zero element."""
    if group is not None and not group.contains(x):
        raise ValueError(f"{x!r} is not an element of the two-torsion group")
    if not isinstance(x, int) or x < 0:
        raise ValueError("two-torsion elements are nonnegative bitmask ints")
    return x if rohlin(w) else 0


def stabilized_sigma(w: TorelliWord, to_genus: int) -> BoolElement:
    return stabilize(sigma_word(w), to_genus)


def search_rohlin_nontrivial(
    g: int,
    coeffs: Iterable[int] = (-1, 0, 1),
    max_results: int = 1,
) -> list[BSCC]:
    """Genus-1 separating twists with Rohlin invariant 1.

    Enumerates pairs ``(c, d)`` with coordinates drawn from ``coeffs`` in
    lexicographic order and ``omega(c, d) = 1``.  The order is fixed, so the
    output is reproducible.
    """
    coeffs = tuple(coeffs)
    classes = [HClass(g, v) for v in itertools.product(coeffs, repeat=2 * g)]
    classes = [x for x in classes if any(x.coords)]
    found: list[BSCC] = []
    for c in classes:
        for d in classes:
            if omega(c, d) != 1:
                continue
            spec = BSCC(((c, d),))
            if rohlin(TorelliWord(g, (spec,))):
                found.append(spec)
                if len(found) >= max_results:
                    return found
    return found


def mixed_bscc(g: int = 2) -> BSCC:
    """Separating twist on ``(a1 + b1 + a2, -(a1 + b1 + b2))``; Rohlin invariant 1."""
    if g < 2:
        raise ValueError("needs genus >= 2")
    c = [0] * (2 * g)
    d = [0] * (2 * g)
    c[0], c[g], c[1] = 1, 1, 1
    d[0], d[g], d[g + 1] = -1, -1, -1
    return BSCC(((HClass(g, c), HClass(g, d)),))
