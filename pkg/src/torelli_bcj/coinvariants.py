"""Coinvariants of finite-dimensional GF(2) modules.

For a group generated by matrices ``G_1, ..., G_s`` acting on ``GF(2)^n``
the coinvariant quotient is ``GF(2)^n / span{G_t v - v}``.  Since the
augmentation ideal is generated by ``G_t - 1`` as a left ideal, it is enough
to take ``v`` over a basis and ``G_t`` over the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .boolean import act_on_monomial, format_monomial, generator_images, monomials
from .gf2 import EchelonBasis, F2Matrix, F2Vector
from .symplectic import SpMatrix, gl_elementary, gl_embed, reduce_mod2


@dataclass(frozen=True)
class ActionPresentation:
    """Generators acting on column vectors: column ``j`` of each matrix is the image of basis vector ``j``."""

    dimension: int
    labels: tuple[str, ...]
    generators: tuple[F2Matrix, ...]
    generator_names: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(self.labels) != self.dimension:
            raise ValueError("need one label per basis vector")
        for t, G in enumerate(self.generators):
            if G.shape != (self.dimension, self.dimension):
                raise ValueError(f"generator {t} has shape {G.shape}, expected {(self.dimension,) * 2}")
        names = tuple(self.generator_names) or tuple(f"g{t}" for t in range(len(self.generators)))
        object.__setattr__(self, "generator_names", names)

    @classmethod
    def from_images(cls, labels: Sequence[str], images: Sequence[Sequence[int]], names: Sequence[str] = ()):
        """Build from per-generator lists of packed column images."""
        n = len(labels)
        gens = tuple(F2Matrix(tuple(cols), n).transpose() for cols in images)
        return cls(n, tuple(labels), gens, tuple(names))

    def image(self, t: int, j: int) -> int:
        """Packed image of basis vector ``j`` under generator ``t``."""
        G = self.generators[t]
        out = 0
        for i, row in enumerate(G.rows):
            if (row >> j) & 1:
                out |= 1 << i
        return out

    def check_invertible(self) -> None:
        for t, G in enumerate(self.generators):
            if not G.is_invertible():
                raise ValueError(f"generator {self.generator_names[t]} is not invertible")


@dataclass(frozen=True)
class CoinvariantResult:
    dimension: int
    module_dimension: int
    relations: F2Matrix
    representatives: tuple[int, ...]
    labels: tuple[str, ...]
    _reducer: tuple[tuple[int, int, int], ...] = field(repr=False, default=())

    @property
    def representative_labels(self) -> list[str]:
        return [self.labels[j] for j in self.representatives]

    def reduce(self, bits: int) -> int:
        """Quotient coordinates of a packed module element, packed."""
        table = {p: (row, tag) for p, row, tag in self._reducer}
        acc = 0
        while bits:
            low = (bits & -bits).bit_length() - 1
            row, tag = table[low]
            bits ^= row
            acc ^= tag
        return acc


def coinvariants(act: ActionPresentation) -> CoinvariantResult:
    act.check_invertible()
    n = act.dimension
    rel = EchelonBasis(n)
    for G in act.generators:
        cols = G.transpose().rows
        for j in range(n):
            rel.add(cols[j] ^ (1 << j))
    relations = rel.to_matrix()

    combined: dict[int, tuple[int, int]] = {}

    def insert(bits: int, tag: int) -> bool:
        while bits:
            low = (bits & -bits).bit_length() - 1
            hit = combined.get(low)
            if hit is None:
                combined[low] = (bits, tag)
                return True
            bits ^= hit[0]
            tag ^= hit[1]
        return False

    for r in relations.rows:
        if r:
            insert(r, 0)
    reps = []
    for j in range(n):
        if insert(1 << j, 1 << len(reps)):
            reps.append(j)
    reducer = tuple((p, row, tag) for p, (row, tag) in sorted(combined.items()))
    return CoinvariantResult(
        dimension=len(reps),
        module_dimension=n,
        relations=F2Matrix(tuple(r for r in relations.rows if r), n),
        representatives=tuple(reps),
        labels=act.labels,
        _reducer=reducer,
    )


def quotient_class(result: CoinvariantResult, p) -> tuple[int, ...]:
    """Coordinates of ``p`` in the quotient basis given by the representatives."""
    if isinstance(p, F2Vector):
        if p.length != result.module_dimension:
            raise ValueError(f"expected length {result.module_dimension}, got {p.length}")
        bits = p.bits
    elif isinstance(p, int):
        if p < 0 or p >> result.module_dimension:
            raise ValueError("packed element exceeds module dimension")
        bits = p
    else:
        raise TypeError("expected F2Vector or packed int")
    acc = result.reduce(bits)
    return tuple((acc >> k) & 1 for k in range(result.dimension))


def gl_generators(g: int) -> list[tuple[str, SpMatrix]]:
    """Embedded elementary transvections ``Id + E_ij``, ``i != j``."""
    out = []
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            if i != j:
                out.append((f"Id+E{i}{j}", gl_embed(gl_elementary(g, i, j))))
    return out


def boolean_action(
    g: int,
    matrices: Sequence[tuple[str, SpMatrix]],
    max_degree: int,
    min_degree: int = 0,
) -> ActionPresentation:
    """Action on monomials of degree in ``[min_degree, max_degree]``.

    With ``min_degree > 0`` this is the action on the filtration quotient
    ``B_max / B_{min-1}``, which is well defined only for degree-preserving
    matrices such as the GL embeddings.
    """
    basis = monomials(g, max_degree, min_degree)
    index = {m: k for k, m in enumerate(basis)}
    labels = [format_monomial(m, g) for m in basis]
    all_images = []
    for name, M in matrices:
        gens = generator_images(M)
        cols = []
        for m in basis:
            img = act_on_monomial(gens, m, g)
            packed = 0
            for t in img.terms:
                d = t.bit_count()
                if d < min_degree:
                    continue
                if d > max_degree:
                    raise ValueError(f"{name} raises the degree of {format_monomial(m, g)}")
                packed ^= 1 << index[t]
            cols.append(packed)
        all_images.append(cols)
    return ActionPresentation.from_images(labels, all_images, [n for n, _ in matrices])


def gl_action_on_boolean(g: int, max_degree: int, extra: Sequence[tuple[str, SpMatrix]] = ()) -> ActionPresentation:
    if not 2 <= g <= 8:
        raise ValueError(f"genus must be in 2..8, got {g}")
    if not 0 <= max_degree <= 2 * g:
        raise ValueError(f"degree must be in 0..{2 * g}, got {max_degree}")
    return boolean_action(g, gl_generators(g) + list(extra), max_degree)


def gl_action_on_boolean_graded(g: int, degree: int) -> ActionPresentation:
    """Action on the filtration quotient ``B_degree / B_{degree-1}``."""
    if not 2 <= g <= 8:
        raise ValueError(f"genus must be in 2..8, got {g}")
    return boolean_action(g, gl_generators(g), degree, degree)


def wedge_labels(g: int) -> list[str]:
    names = [f"a{i + 1}" for i in range(g)] + [f"b{i + 1}" for i in range(g)]
    return ["^".join(names[t] for t in tri) for tri in combinations(range(2 * g), 3)]


def lambda3_action(g: int, matrices: Sequence[tuple[str, SpMatrix]]) -> ActionPresentation:
    triples = list(combinations(range(2 * g), 3))
    index = {t: k for k, t in enumerate(triples)}
    all_images = []
    for _, M in matrices:
        cols2 = reduce_mod2(M).transpose().rows
        supports = [[r for r in range(2 * g) if (c >> r) & 1] for c in cols2]
        cols = []
        for i, j, k in triples:
            packed = 0
            for p in supports[i]:
                for q in supports[j]:
                    if q == p:
                        continue
                    for r in supports[k]:
                        if r == p or r == q:
                            continue
                        packed ^= 1 << index[tuple(sorted((p, q, r)))]
            cols.append(packed)
        all_images.append(cols)
    return ActionPresentation.from_images(wedge_labels(g), all_images, [n for n, _ in matrices])


def gl_action_on_lambda3(g: int) -> ActionPresentation:
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    return lambda3_action(g, gl_generators(g))


@dataclass
class DegreeRow:
    degree: int
    dimension: int
    representatives: list[str]
    expected_dimension: int | None = None
    expected_representatives: list[str] | None = None

    @property
    def asserted(self) -> bool:
        return self.expected_dimension is not None

    @property
    def ok(self) -> bool:
        if self.expected_dimension is not None and self.dimension != self.expected_dimension:
            return False
        if self.expected_representatives is not None and self.representatives != self.expected_representatives:
            return False
        return True


@dataclass
class CoinvariantTable:
    genus: int
    rows: list[DegreeRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    def dims(self) -> tuple[int, ...]:
        return tuple(r.dimension for r in self.rows)

    def as_dict(self) -> dict:
        return {
            "genus": self.genus,
            "ok": self.ok,
            "degrees": [
                {
                    "degree": r.degree,
                    "dimension": r.dimension,
                    "representatives": r.representatives,
                    "asserted": r.asserted,
                    "expected_dimension": r.expected_dimension,
                    "expected_representatives": r.expected_representatives,
                    "ok": r.ok,
                }
                for r in self.rows
            ],
        }


def published_expectation(g: int, k: int) -> tuple[int | None, list[str] | None]:
    """Published values for the GL coinvariants of ``B_k`` at genus ``g``."""
    if k == 0 and g >= 3:
        return 1, ["1"]
    if k == 1 and g >= 3:
        return 1, ["1"]
    if k == 2 and g >= 3:
        return 2, ["1", "a1*b1"]
    if k == 3 and g >= 4:
        return 1, ["1"]
    return None, None


def verify_lemma_coinvariants(g: int, max_degree: int = 3) -> CoinvariantTable:
    if g < 3:
        raise ValueError(f"genus must be at least 3, got {g}")
    rows = []
    for k in range(max_degree + 1):
        res = coinvariants(gl_action_on_boolean(g, k))
        exp_dim, exp_reps = published_expectation(g, k)
        rows.append(DegreeRow(k, res.dimension, res.representative_labels, exp_dim, exp_reps))
    return CoinvariantTable(g, rows)


def unit_functional_vanishes_on_relations(result: CoinvariantResult) -> bool:
    """True if every relation row has zero coefficient on the unit monomial.

    Assumes the basis starts with the unit monomial, as the Boolean-algebra
    presentations here do.
    """
    if not result.labels or result.labels[0] != "1":
        raise ValueError("presentation basis does not start with the unit monomial")
    return all(not (r & 1) for r in result.relations.rows)
