"""First homology of the genus-g surface with one boundary component.

Coordinates are always in the order ``(a_1, ..., a_g, b_1, ..., b_g)`` and
the intersection form satisfies ``omega(b_i, a_i) = -omega(a_i, b_i) = 1``.
Matrices act on column vectors, so column ``j`` of a matrix is the image of
the ``j``-th basis class and ``Psi(f g) = Psi(f) @ Psi(g)``.

Handle numbers in the helpers ``a``, ``b``, ``E`` and ``SE`` are 1-based to
match the usual notation ``a_1``, ``E_12`` and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .gf2 import F2Matrix, F2Vector


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class HClass:
    """Integral homology class of a genus-``genus`` surface."""

    genus: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be positive")
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != 2 * self.genus:
            raise ValueError(f"expected {2 * self.genus} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, g: int) -> HClass:
        return cls(g, (0,) * (2 * g))

    @property
    def a_part(self) -> tuple[int, ...]:
        return self.coords[: self.genus]

    @property
    def b_part(self) -> tuple[int, ...]:
        return self.coords[self.genus :]

    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def mod2(self) -> F2Vector:
        return F2Vector.from_list([c % 2 for c in self.coords])

    def is_zero_mod2(self) -> bool:
        return all(c % 2 == 0 for c in self.coords)

    def stabilize(self, to_genus: int) -> HClass:
        if to_genus < self.genus:
            raise ValueError(f"cannot stabilize genus {self.genus} down to {to_genus}")
        pad = (0,) * (to_genus - self.genus)
        return HClass(to_genus, self.a_part + pad + self.b_part + pad)

    def _check(self, other: HClass) -> None:
        if self.genus != other.genus:
            raise ValueError(f"genus mismatch: {self.genus} != {other.genus}")

    def __add__(self, other: HClass) -> HClass:
        self._check(other)
        return HClass(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: HClass) -> HClass:
        self._check(other)
        return HClass(self.genus, tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> HClass:
        return HClass(self.genus, tuple(-x for x in self.coords))

    def __rmul__(self, k: int) -> HClass:
        return HClass(self.genus, tuple(k * x for x in self.coords))

    def __eq__(self, other) -> bool:
        return isinstance(other, HClass) and self.genus == other.genus and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.genus, self.coords))

    def __repr__(self) -> str:
        return f"HClass({format_class(self)}, g={self.genus})"


def a(g: int, i: int) -> HClass:
    """The class ``a_i`` (1-based handle index)."""
    if not 1 <= i <= g:
        raise ValueError(f"handle {i} out of range for genus {g}")
    c = [0] * (2 * g)
    c[i - 1] = 1
    return HClass(g, tuple(c))


def b(g: int, i: int) -> HClass:
    """The class ``b_i`` (1-based handle index)."""
    if not 1 <= i <= g:
        raise ValueError(f"handle {i} out of range for genus {g}")
    c = [0] * (2 * g)
    c[g + i - 1] = 1
    return HClass(g, tuple(c))


def format_class(x: HClass) -> str:
    names = [f"a{i + 1}" for i in range(x.genus)] + [f"b{i + 1}" for i in range(x.genus)]
    parts = []
    for c, name in zip(x.coords, names):
        if c == 0:
            continue
        if c == 1:
            parts.append(f"+{name}")
        elif c == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{c:+d}*{name}")
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s.startswith("+") else s


def gram_matrix(g: int) -> np.ndarray:
    """Gram matrix ``J`` with ``J[i, j] = omega(e_i, e_j)``."""
    J = np.zeros((2 * g, 2 * g), dtype=np.int64)
    for i in range(g):
        J[i, g + i] = -1
        J[g + i, i] = 1
    return J


def omega(x: HClass, y: HClass) -> int:
    x._check(y)
    g = x.genus
    xs, ys = x.coords, y.coords
    return sum(xs[g + i] * ys[i] - xs[i] * ys[g + i] for i in range(g))


def is_symplectic(M) -> bool:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    if M.shape[0] % 2:
        raise ValueError("matrix size must be even")
    J = gram_matrix(M.shape[0] // 2)
    return bool(np.array_equal(M.T @ J @ M, J))


@dataclass(frozen=True, eq=False)
class SpMatrix:
    """Integral symplectic matrix of size ``2g``."""

    genus: int
    entries: np.ndarray

    def __post_init__(self):
        M = _frozen(self.entries)
        if M.shape != (2 * self.genus, 2 * self.genus):
            raise ValueError(f"expected shape {(2 * self.genus,) * 2}, got {M.shape}")
        if not is_symplectic(M):
            raise ValueError("matrix does not preserve the intersection form")
        object.__setattr__(self, "entries", M)

    @classmethod
    def identity(cls, g: int) -> SpMatrix:
        return cls(g, np.eye(2 * g, dtype=np.int64))

    @classmethod
    def from_blocks(cls, A, B, C, D) -> SpMatrix:
        """``[[A, B], [C, D]]`` with ``C`` the block sending a-coordinates to b-coordinates."""
        M = np.block([[np.asarray(A), np.asarray(B)], [np.asarray(C), np.asarray(D)]])
        return cls(M.shape[0] // 2, M)

    def __matmul__(self, other):
        if isinstance(other, SpMatrix):
            if other.genus != self.genus:
                raise ValueError(f"genus mismatch: {self.genus} != {other.genus}")
            return SpMatrix(self.genus, self.entries @ other.entries)
        if isinstance(other, HClass):
            return self.apply(other)
        return NotImplemented

    def apply(self, x: HClass) -> HClass:
        if x.genus != self.genus:
            raise ValueError(f"genus mismatch: {self.genus} != {x.genus}")
        return HClass(self.genus, tuple(int(v) for v in self.entries @ x.array()))

    def inverse(self) -> SpMatrix:
        J = gram_matrix(self.genus)
        return SpMatrix(self.genus, -J @ self.entries.T @ J)

    def blocks(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        g = self.genus
        M = self.entries
        return M[:g, :g], M[:g, g:], M[g:, :g], M[g:, g:]

    def stabilize(self, to_genus: int) -> SpMatrix:
        """Extend by the identity on the new handles."""
        g = self.genus
        if to_genus < g:
            raise ValueError(f"cannot stabilize genus {g} down to {to_genus}")
        idx = list(range(g)) + list(range(to_genus, to_genus + g))
        M = np.eye(2 * to_genus, dtype=np.int64)
        M[np.ix_(idx, idx)] = self.entries
        return SpMatrix(to_genus, M)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.entries, np.eye(2 * self.genus, dtype=np.int64)))

    def tolist(self) -> list[list[int]]:
        return self.entries.tolist()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SpMatrix)
            and self.genus == other.genus
            and bool(np.array_equal(self.entries, other.entries))
        )

    def __hash__(self) -> int:
        return hash((self.genus, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"SpMatrix(g={self.genus}, {self.entries.tolist()})"


@dataclass(frozen=True, eq=False)
class GLMatrix:
    """Unimodular integer ``g x g`` matrix."""

    entries: np.ndarray

    def __post_init__(self):
        G = _frozen(self.entries)
        if G.ndim != 2 or G.shape[0] != G.shape[1]:
            raise ValueError("matrix must be square")
        if abs(_int_det(G)) != 1:
            raise ValueError("matrix is not unimodular")
        object.__setattr__(self, "entries", G)

    @property
    def size(self) -> int:
        return self.entries.shape[0]

    def __matmul__(self, other: GLMatrix) -> GLMatrix:
        return GLMatrix(self.entries @ other.entries)

    def inverse(self) -> GLMatrix:
        return GLMatrix(_int_inverse(self.entries))

    def __eq__(self, other) -> bool:
        return isinstance(other, GLMatrix) and bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())


def _int_det(G: np.ndarray) -> int:
    # Bareiss fraction-free elimination; exact on integers.
    M = [[int(v) for v in row] for row in G]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _int_inverse(G: np.ndarray) -> np.ndarray:
    """Inverse of a unimodular matrix via the adjugate."""
    n = G.shape[0]
    det = _int_det(G)
    if abs(det) != 1:
        raise ValueError("matrix is not unimodular")
    adj = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(G, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * _int_det(minor)
    return adj * det


def E(g: int, i: int, j: int) -> np.ndarray:
    """Elementary ``g x g`` matrix with a single 1 at (i, j), 1-based."""
    M = np.zeros((g, g), dtype=np.int64)
    M[i - 1, j - 1] = 1
    return M


def SE(g: int, i: int, j: int) -> np.ndarray:
    """Symmetric elementary matrix ``E_ij + E_ji`` for ``i != j``."""
    if i == j:
        raise ValueError("SE_ij needs i != j")
    return E(g, i, j) + E(g, j, i)


def lower_unipotent(S) -> SpMatrix:
    """``[[Id, 0], [S, Id]]`` for a symmetric ``g x g`` matrix ``S``."""
    S = np.asarray(S, dtype=np.int64)
    g = S.shape[0]
    I = np.eye(g, dtype=np.int64)
    Z = np.zeros((g, g), dtype=np.int64)
    return SpMatrix.from_blocks(I, Z, S, I)


def transvection_power(x: HClass, k: int = 1) -> SpMatrix:
    """Action of ``T_x^k`` on homology: ``y -> y + k * omega(y, x) * x``."""
    g = x.genus
    xv = x.array()
    # omega(y, x) = y . (J x)
    functional = gram_matrix(g) @ xv
    M = np.eye(2 * g, dtype=np.int64) + k * np.outer(xv, functional)
    return SpMatrix(g, M)


def gl_embed(G) -> SpMatrix:
    """Block matrix ``diag(G, G^{-T})``."""
    if not isinstance(G, GLMatrix):
        G = GLMatrix(np.asarray(G))
    g = G.size
    Z = np.zeros((g, g), dtype=np.int64)
    return SpMatrix.from_blocks(G.entries, Z, Z, _int_inverse(G.entries).T)


def gl_elementary(g: int, i: int, j: int, sign: int = 1) -> GLMatrix:
    """``Id + sign * E_ij`` (1-based, ``i != j``)."""
    if i == j:
        raise ValueError("elementary transvection needs i != j")
    return GLMatrix(np.eye(g, dtype=np.int64) + sign * E(g, i, j))


def permutation_matrix(perm: Sequence[int]) -> GLMatrix:
    """Matrix sending basis vector ``k`` to ``perm[k]`` (0-based)."""
    n = len(perm)
    P = np.zeros((n, n), dtype=np.int64)
    for k, p in enumerate(perm):
        P[p, k] = 1
    return GLMatrix(P)


def handle_swap(g: int, i: int, j: int) -> SpMatrix:
    """Symplectic matrix exchanging handles ``i`` and ``j`` (1-based)."""
    perm = list(range(g))
    perm[i - 1], perm[j - 1] = j - 1, i - 1
    return gl_embed(permutation_matrix(perm))


def reduce_mod2(M) -> F2Matrix:
    if isinstance(M, SpMatrix):
        M = M.entries
    return F2Matrix.from_array(np.asarray(M) % 2)
