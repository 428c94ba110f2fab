"""Generator specifications and words in the mapping class group.

Letters carry homology-level data only: the symplectic pairs spanning the
subsurface cut off by a bounding curve, the class of a bounding pair, or the
class and power of a plain Dehn twist.  That is all the symplectic
representation and the BCJ homomorphism need.

A word ``[l1, l2, ..., ln]`` denotes the composite ``l1 l2 ... ln`` of
mapping classes, so its symplectic image is ``Psi(l1) @ ... @ Psi(ln)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .symplectic import HClass, SpMatrix, a, b, format_class, omega, transvection_power

Pair = tuple[HClass, HClass]


def _as_pairs(pairs: Iterable[Sequence[HClass]]) -> tuple[Pair, ...]:
    return tuple((c, d) for c, d in pairs)


@dataclass(frozen=True)
class BSCC:
    """Twist about a separating curve cutting off the span of ``pairs``."""

    pairs: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))
        if not self.pairs:
            raise ValueError("BSCC needs at least one symplectic pair")

    @property
    def genus(self) -> int:
        return self.pairs[0][0].genus

    @property
    def subsurface_genus(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class BP:
    """Bounding-pair map ``T_beta T_beta'^{-1}`` with ``[beta] = e``."""

    e: HClass
    pairs: tuple[Pair, ...]

    def __post_init__(self):
        object.__setattr__(self, "pairs", _as_pairs(self.pairs))
        if not self.pairs:
            raise ValueError("BP needs at least one symplectic pair")

    @property
    def genus(self) -> int:
        return self.e.genus

    @property
    def subsurface_genus(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class Twist:
    """Plain Dehn twist power ``T_x^power``; not Torelli in general."""

    x: HClass
    power: int = 1

    @property
    def genus(self) -> int:
        return self.x.genus


@dataclass(frozen=True)
class Conj:
    """Formal conjugate ``f inner f^{-1}`` by a symplectic matrix."""

    f: SpMatrix
    inner: "GeneratorSpec"

    @property
    def genus(self) -> int:
        return self.f.genus


GeneratorSpec = Union[BSCC, BP, Twist, Conj]


def is_torelli_letter(spec: GeneratorSpec) -> bool:
    if isinstance(spec, Conj):
        return is_torelli_letter(spec.inner)
    return isinstance(spec, (BSCC, BP))


@dataclass(frozen=True)
class TorelliWord:
    genus: int
    letters: tuple[GeneratorSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for i, letter in enumerate(self.letters):
            if letter.genus != self.genus:
                raise ValueError(f"letter {i} has genus {letter.genus}, word has genus {self.genus}")

    def __add__(self, other: TorelliWord) -> TorelliWord:
        if other.genus != self.genus:
            raise ValueError(f"genus mismatch: {self.genus} != {other.genus}")
        return TorelliWord(self.genus, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GeneratorSpec]:
        return iter(self.letters)

    def is_torelli(self) -> bool:
        return all(is_torelli_letter(letter) for letter in self.letters)


@dataclass
class ValidationReport:
    ok: bool = True
    violations: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.violations.append(msg)

    def __bool__(self) -> bool:
        return self.ok


def _check_pairs(pairs: tuple[Pair, ...], g: int, report: ValidationReport, where: str) -> None:
    labels = []
    classes = []
    for i, (c, d) in enumerate(pairs, start=1):
        for name, x in ((f"c{i}", c), (f"d{i}", d)):
            if x.genus != g:
                report.fail(f"{where}{name} has genus {x.genus}, expected {g}")
                return
            labels.append(name)
            classes.append(x)
    for i, (c, d) in enumerate(pairs, start=1):
        w = omega(c, d)
        # orientation of the pair is not fixed; only a unimodular pairing is required
        if abs(w) != 1:
            report.fail(f"{where}omega(c{i}, d{i}) = {w}, expected +-1")
    for s in range(len(classes)):
        for t in range(s + 1, len(classes)):
            if s // 2 == t // 2:
                continue
            w = omega(classes[s], classes[t])
            if w != 0:
                report.fail(f"{where}omega({labels[s]}, {labels[t]}) = {w}, expected 0")


def validate(spec: GeneratorSpec, _where: str = "") -> ValidationReport:
    report = ValidationReport()
    _validate_into(spec, report, _where)
    return report


def _validate_into(spec: GeneratorSpec, report: ValidationReport, where: str) -> None:
    if isinstance(spec, BSCC):
        _check_pairs(spec.pairs, spec.genus, report, where)
    elif isinstance(spec, BP):
        g = spec.genus
        _check_pairs(spec.pairs, g, report, where)
        if not report.ok:
            return
        if spec.e.is_zero_mod2():
            report.fail(f"{where}e = {format_class(spec.e)} is zero mod 2")
        for i, (c, d) in enumerate(spec.pairs, start=1):
            for name, x in ((f"c{i}", c), (f"d{i}", d)):
                w = omega(spec.e, x)
                if w != 0:
                    report.fail(f"{where}omega(e, {name}) = {w}, expected 0")
    elif isinstance(spec, Twist):
        pass
    elif isinstance(spec, Conj):
        if not isinstance(spec.f, SpMatrix):
            report.fail(f"{where}conjugator is not a symplectic matrix")
            return
        if spec.inner.genus != spec.f.genus:
            report.fail(f"{where}conjugator genus {spec.f.genus} != inner genus {spec.inner.genus}")
            return
        _validate_into(spec.inner, report, where + "inner: ")
    else:
        report.fail(f"{where}unknown letter type {type(spec).__name__}")


def validate_word(w: TorelliWord) -> ValidationReport:
    report = ValidationReport()
    for i, letter in enumerate(w.letters):
        _validate_into(letter, report, f"letter {i}: ")
    return report


class InvalidLetter(ValueError):
    def __init__(self, index: int, violations: list[str]):
        self.index = index
        self.violations = violations
        super().__init__(f"letter {index} is invalid: " + "; ".join(violations))


def psi_of_spec(spec: GeneratorSpec) -> SpMatrix:
    if isinstance(spec, (BSCC, BP)):
        return SpMatrix.identity(spec.genus)
    if isinstance(spec, Twist):
        return transvection_power(spec.x, spec.power)
    if isinstance(spec, Conj):
        return spec.f @ psi_of_spec(spec.inner) @ spec.f.inverse()
    raise TypeError(f"unknown letter type {type(spec).__name__}")


def psi_of_word(w: TorelliWord) -> SpMatrix:
    M = SpMatrix.identity(w.genus)
    for i, letter in enumerate(w.letters):
        report = validate(letter)
        if not report.ok:
            raise InvalidLetter(i, report.violations)
        M = M @ psi_of_spec(letter)
    return M


def conj_by_word(f_word: TorelliWord, inner: GeneratorSpec) -> Conj:
    """Conjugate ``inner`` by the mapping class presented by ``f_word``."""
    return Conj(psi_of_word(f_word), inner)


def standard_pairs(g: int, handles: Iterable[int]) -> tuple[Pair, ...]:
    return tuple((a(g, i), b(g, i)) for i in handles)


def standard_bscc(g: int, k: int) -> BSCC:
    """Separating curve around the first ``k`` handles."""
    if not 1 <= k <= g:
        raise ValueError(f"BSCC genus must be in 1..{g}, got {k}")
    return BSCC(standard_pairs(g, range(1, k + 1)))


def standard_bp(g: int, k: int) -> BP:
    """Bounding pair of genus ``k`` around the first ``k`` handles.

    Both curves are meridians of handle ``k + 1`` (class ``b_{k+1}``), so the
    pair bounds disks in the inner handlebody.
    """
    if not 1 <= k <= g - 1:
        raise ValueError(f"BP genus must be in 1..{g - 1}, got {k}")
    return BP(b(g, k + 1), standard_pairs(g, range(1, k + 1)))


def standard_bp_genus(spec: GeneratorSpec) -> int | None:
    """``k`` if ``spec`` equals ``standard_bp(g, k)``, else None."""
    if not isinstance(spec, BP):
        return None
    g, k = spec.genus, spec.subsurface_genus
    if not 1 <= k <= g - 1:
        return None
    return k if spec == standard_bp(g, k) else None


def decompose_bp(spec: BP) -> list[BP]:
    """Split a standard genus-k bounding pair into k genus-1 pieces.

    Intermediate curves zeta_1, ..., zeta_{k-1} are all homologous to beta;
    the piece between zeta_{i-1} and zeta_i cuts off handle ``i`` alone.
    """
    k = standard_bp_genus(spec)
    if k is None:
        raise ValueError("decomposition is only available for standard-position bounding pairs")
    g = spec.genus
    return [BP(spec.e, standard_pairs(g, [i])) for i in range(1, k + 1)]


def stabilize_spec(spec: GeneratorSpec, to_genus: int) -> GeneratorSpec:
    if isinstance(spec, BSCC):
        return BSCC(tuple((c.stabilize(to_genus), d.stabilize(to_genus)) for c, d in spec.pairs))
    if isinstance(spec, BP):
        return BP(
            spec.e.stabilize(to_genus),
            tuple((c.stabilize(to_genus), d.stabilize(to_genus)) for c, d in spec.pairs),
        )
    if isinstance(spec, Twist):
        return Twist(spec.x.stabilize(to_genus), spec.power)
    if isinstance(spec, Conj):
        return Conj(spec.f.stabilize(to_genus), stabilize_spec(spec.inner, to_genus))
    raise TypeError(f"unknown letter type {type(spec).__name__}")


def stabilize_word(w: TorelliWord, to_genus: int) -> TorelliWord:
    if to_genus < w.genus:
        raise ValueError(f"cannot stabilize genus {w.genus} down to {to_genus}")
    return TorelliWord(to_genus, tuple(stabilize_spec(s, to_genus) for s in w.letters))


def twist_word(g: int, *twists: tuple[HClass, int]) -> TorelliWord:
    return TorelliWord(g, tuple(Twist(x, k) for x, k in twists))


def sg_lift_word(g: int, i: int, j: int | None = None) -> TorelliWord:
    """Word whose symplectic image is ``[[Id, 0], [E_ii, Id]]`` or ``[[Id, 0], [SE_ij, Id]]``.

    ``E_ii`` lifts to ``T_{beta_i}^{-1}``.  ``SE_ij`` lifts to
    ``T_{beta_i}^{-1} T_gamma T_{beta_j}^{-1}`` where ``gamma`` has class
    ``b_i - b_j``; with ``b_i + b_j`` the same word gives ``-SE_ij``.
    """
    if j is None or j == i:
        return twist_word(g, (b(g, i), -1))
    return twist_word(g, (b(g, i), -1), (b(g, i) - b(g, j), 1), (b(g, j), -1))
