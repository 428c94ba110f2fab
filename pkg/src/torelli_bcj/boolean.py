"""The Boolean polynomial algebra on ``H_1(surface; Z/2)``.

Generators are ``bar(x)`` for mod-2 classes ``x`` subject to

    bar(x + y) = bar(x) + bar(y) + omega(x, y)   (mod 2)
    bar(x)^2 = bar(x)

so the square-free monomials in ``a1, ..., ag, b1, ..., bg`` form a basis.
A monomial is stored as a bitmask over the ``2g`` generators (bit ``j`` is
``a_{j+1}`` for ``j < g`` and ``b_{j-g+1}`` otherwise); the empty mask is the
unit.  Elements are frozensets of such masks with GF(2) coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from typing import Iterable, Iterator

from .gf2 import F2Vector
from .symplectic import HClass, SpMatrix

MAX_GENUS = 16


def generator_names(g: int) -> list[str]:
    return [f"a{i + 1}" for i in range(g)] + [f"b{i + 1}" for i in range(g)]


def monomial_indices(mask: int) -> tuple[int, ...]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def monomial_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), monomial_indices(mask))


def monomials(g: int, max_degree: int, min_degree: int = 0) -> list[int]:
    """All monomial masks with ``min_degree <= degree <= max_degree``.

    Ordered by degree, then lexicographically by generator index.
    """
    out = []
    for d in range(min_degree, min(max_degree, 2 * g) + 1):
        for idx in combinations(range(2 * g), d):
            out.append(sum(1 << j for j in idx))
    return out


def format_monomial(mask: int, g: int) -> str:
    if mask == 0:
        return "1"
    names = generator_names(g)
    return "*".join(names[j] for j in monomial_indices(mask))


@dataclass(frozen=True)
class BoolElement:
    genus: int
    terms: frozenset[int]

    def __post_init__(self):
        if not 1 <= self.genus <= MAX_GENUS:
            raise ValueError(f"genus must be in 1..{MAX_GENUS}")
        terms = frozenset(int(t) for t in self.terms)
        limit = 1 << (2 * self.genus)
        if any(t < 0 or t >= limit for t in terms):
            raise ValueError("monomial outside the generator range")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, g: int) -> BoolElement:
        return cls(g, frozenset())

    @classmethod
    def one(cls, g: int) -> BoolElement:
        return cls(g, frozenset([0]))

    @classmethod
    def from_masks(cls, g: int, masks: Iterable[int]) -> BoolElement:
        """Sum of monomials; repeated masks cancel in pairs."""
        acc: set[int] = set()
        for m in masks:
            acc ^= {m}
        return cls(g, frozenset(acc))

    @classmethod
    def generator(cls, g: int, j: int) -> BoolElement:
        return cls(g, frozenset([1 << j]))

    @classmethod
    def parse(cls, text: str, g: int) -> BoolElement:
        """Inverse of :meth:`render`, e.g. ``"1 + a1*b1"``."""
        text = text.strip()
        if text == "0":
            return cls.zero(g)
        names = {n: j for j, n in enumerate(generator_names(g))}
        masks = []
        for term in text.split("+"):
            term = term.strip()
            if term == "1":
                masks.append(0)
                continue
            mask = 0
            for factor in term.split("*"):
                factor = factor.strip()
                if factor not in names:
                    raise ValueError(f"unknown generator {factor!r} for genus {g}")
                mask |= 1 << names[factor]
            masks.append(mask)
        return cls.from_masks(g, masks)

    def _check(self, other: BoolElement) -> None:
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} != {other.genus}")

    def __add__(self, other: BoolElement) -> BoolElement:
        self._check(other)
        return BoolElement(self.genus, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: BoolElement) -> BoolElement:
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mask: int) -> int:
        return int(mask in self.terms)

    def sorted_terms(self) -> list[int]:
        return sorted(self.terms, key=monomial_sort_key)

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(m, self.genus) for m in self.sorted_terms())

    def supports(self) -> list[list[int]]:
        """Monomials as sorted lists of generator indices (JSON form)."""
        return [list(monomial_indices(m)) for m in self.sorted_terms()]

    def truncate(self, min_degree: int) -> BoolElement:
        """Drop monomials of degree below ``min_degree``."""
        return BoolElement(self.genus, frozenset(m for m in self.terms if m.bit_count() >= min_degree))

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"BoolElement(g={self.genus}, {self.render()})"


def bar(x) -> BoolElement:
    """The generator attached to a mod-2 homology class.

    Expanding over the support in index order gives
    ``bar(sum e_i) = sum bar(e_i) + sum_{i<j} omega(e_i, e_j)``; the only
    odd pairings are ``(a_k, b_k)``.
    """
    if isinstance(x, HClass):
        g = x.genus
        bits = x.mod2().bits
    elif isinstance(x, F2Vector):
        if x.length % 2:
            raise ValueError("mod-2 class must have even length")
        g = x.length // 2
        bits = x.bits
    else:
        raise TypeError(f"expected HClass or F2Vector, got {type(x).__name__}")
    lo = bits & ((1 << g) - 1)
    hi = bits >> g
    terms = {1 << j for j in range(2 * g) if (bits >> j) & 1}
    if (lo & hi).bit_count() & 1:
        terms.add(0)
    return BoolElement(g, frozenset(terms))


def multiply(p: BoolElement, q: BoolElement) -> BoolElement:
    p._check(q)
    acc: set[int] = set()
    for m in p.terms:
        for n in q.terms:
            acc ^= {m | n}
    return BoolElement(p.genus, frozenset(acc))


def product(factors: Iterable[BoolElement], g: int) -> BoolElement:
    return reduce(multiply, factors, BoolElement.one(g))


def degree(p: BoolElement) -> float:
    """Largest monomial degree; ``-inf`` for the zero element."""
    if not p.terms:
        return -math.inf
    return max(m.bit_count() for m in p.terms)


def generator_images(M: SpMatrix) -> list[BoolElement]:
    """``bar(M e_j)`` for each basis class ``e_j``."""
    cols = M.entries.T % 2
    return [bar(F2Vector.from_list(col.tolist())) for col in cols]


def act_on_monomial(images: list[BoolElement], mask: int, g: int) -> BoolElement:
    return product((images[j] for j in monomial_indices(mask)), g)


def sp_action(M: SpMatrix, p: BoolElement) -> BoolElement:
    if not isinstance(M, SpMatrix):
        raise TypeError("sp_action needs an SpMatrix")
    if M.genus != p.genus:
        raise ValueError(f"genus mismatch: {M.genus} != {p.genus}")
    images = generator_images(M)
    out: set[int] = set()
    for m in p.terms:
        out ^= act_on_monomial(images, m, p.genus).terms
    return BoolElement(p.genus, frozenset(out))


def stabilize_mask(mask: int, g: int, to_genus: int) -> int:
    lo = mask & ((1 << g) - 1)
    hi = mask >> g
    return lo | (hi << to_genus)


def stabilize(p: BoolElement, to_genus: int) -> BoolElement:
    if to_genus < p.genus:
        raise ValueError(f"cannot stabilize genus {p.genus} down to {to_genus}")
    return BoolElement(to_genus, frozenset(stabilize_mask(m, p.genus, to_genus) for m in p.terms))


def iter_basis(g: int, max_degree: int) -> Iterator[BoolElement]:
    for m in monomials(g, max_degree):
        yield BoolElement(g, frozenset([m]))

