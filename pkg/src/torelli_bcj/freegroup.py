"""Free groups and their automorphisms given by generator images.

A word is a tuple of nonzero ints: ``i`` stands for ``alpha_i`` and ``-i``
for its inverse (1-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


def reduce_word(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class FreeGroupWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise ValueError(f"letter {x} outside rank {self.rank}")
        object.__setattr__(self, "letters", reduce_word(letters))

    @classmethod
    def from_pairs(cls, rank: int, pairs: Sequence[tuple[int, int]]) -> FreeGroupWord:
        """From ``(generator index, exponent)`` pairs with exponents ``+-1``."""
        letters = []
        for i, e in pairs:
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            letters.append(i * e)
        return cls(rank, tuple(letters))

    @classmethod
    def generator(cls, rank: int, i: int) -> FreeGroupWord:
        return cls(rank, (i,))

    def __mul__(self, other: FreeGroupWord) -> FreeGroupWord:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return FreeGroupWord(self.rank, self.letters + other.letters)

    def inverse(self) -> FreeGroupWord:
        return FreeGroupWord(self.rank, tuple(-x for x in reversed(self.letters)))

    def pairs(self) -> list[tuple[int, int]]:
        return [(abs(x), 1 if x > 0 else -1) for x in self.letters]

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return "*".join(f"a{x}" if x > 0 else f"a{-x}^-1" for x in self.letters)


@dataclass(frozen=True)
class FreeAutomorphism:
    """Endomorphism of the free group determined by generator images.

    Invertibility is not checked here; see :meth:`is_inverse_of`.
    """

    rank: int
    images: tuple[FreeGroupWord, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != self.rank:
            raise ValueError(f"need {self.rank} images, got {len(images)}")
        for w in images:
            if w.rank != self.rank:
                raise ValueError("image has the wrong rank")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> FreeAutomorphism:
        return cls(rank, tuple(FreeGroupWord.generator(rank, i) for i in range(1, rank + 1)))

    @classmethod
    def from_mapping(cls, rank: int, changes: Mapping[int, Sequence[int]]) -> FreeAutomorphism:
        """Identity except for ``alpha_i -> changes[i]`` (signed-int words)."""
        images = []
        for i in range(1, rank + 1):
            images.append(FreeGroupWord(rank, tuple(changes.get(i, (i,)))))
        return cls(rank, tuple(images))

    def apply(self, w: FreeGroupWord) -> FreeGroupWord:
        if w.rank != self.rank:
            raise ValueError("rank mismatch")
        out: list[int] = []
        for x in w.letters:
            img = self.images[abs(x) - 1]
            out.extend(img.letters if x > 0 else img.inverse().letters)
        return FreeGroupWord(self.rank, tuple(out))

    def __call__(self, w: FreeGroupWord) -> FreeGroupWord:
        return self.apply(w)

    def __matmul__(self, other: FreeAutomorphism) -> FreeAutomorphism:
        return compose(self, other)

    def is_inverse_of(self, other: FreeAutomorphism) -> bool:
        ident = FreeAutomorphism.identity(self.rank)
        return compose(self, other) == ident and compose(other, self) == ident


def compose(phi: FreeAutomorphism, psi: FreeAutomorphism) -> FreeAutomorphism:
    """``phi o psi``: first ``psi``, then ``phi``."""
    if phi.rank != psi.rank:
        raise ValueError(f"rank mismatch: {phi.rank} != {psi.rank}")
    return FreeAutomorphism(phi.rank, tuple(phi.apply(w) for w in psi.images))


def conjugating_automorphism(rank: int, i: int, j: int) -> FreeAutomorphism:
    """``K_ij``: ``alpha_i -> alpha_j alpha_i alpha_j^{-1}``, other generators fixed."""
    if i == j:
        raise ValueError("K_ij needs i != j")
    return FreeAutomorphism.from_mapping(rank, {i: (j, i, -j)})
