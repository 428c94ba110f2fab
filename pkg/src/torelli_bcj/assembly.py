"""Harness for 2-cocycles on Torelli words and their trivializations.

Coefficients live in an elementary abelian 2-group written as bitmask ints,
so addition and subtraction are both XOR.  The product of two words is
their concatenation, and ``f . w`` is the letterwise conjugate.

Every group-level statement is checked on finite samples only; reports say
"sampled" and never claim a proof.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .bcj import conjugate_word, mu_x, rohlin
from .symplectic import SpMatrix, gl_elementary, gl_embed, handle_swap
from .words import TorelliWord, standard_bp, standard_bscc, stabilize_word

WordEvaluator = Callable[[TorelliWord], int]
PairEvaluator = Callable[[TorelliWord, TorelliWord], int]


@dataclass(frozen=True)
class CocycleOracle:
    genus: int
    evaluator: PairEvaluator

    def __call__(self, phi: TorelliWord, psi: TorelliWord) -> int:
        return int(self.evaluator(phi, psi))


@dataclass(frozen=True)
class TrivializationOracle:
    genus: int
    evaluator: WordEvaluator

    def __call__(self, w: TorelliWord) -> int:
        return int(self.evaluator(w))


def zero_evaluator(w: TorelliWord) -> int:
    return 0


def zero_cocycle(g: int) -> CocycleOracle:
    return CocycleOracle(g, lambda phi, psi: 0)


def word_length_parity(w: TorelliWord) -> int:
    """Number of letters mod 2.  Additive under concatenation."""
    return len(w) % 2


def letter_pair_parity(w: TorelliWord) -> int:
    """``binom(len(w), 2)`` mod 2; its coboundary is ``len(phi) len(psi)`` mod 2."""
    n = len(w)
    return (n * (n - 1) // 2) % 2


def coboundary(F: WordEvaluator, g: int) -> CocycleOracle:
    """``(phi, psi) -> F(phi) + F(psi) - F(phi psi)``."""
    return CocycleOracle(g, lambda phi, psi: F(phi) ^ F(psi) ^ F(phi + psi))


def add_evaluators(*Fs: WordEvaluator) -> WordEvaluator:
    def total(w: TorelliWord) -> int:
        acc = 0
        for F in Fs:
            acc ^= int(F(w))
        return acc

    return total


# -- samples ----------------------------------------------------------------


def mirror_matrix(g: int) -> SpMatrix:
    """``a_i -> b_i``, ``b_i -> -a_i``; exchanges the two Lagrangians."""
    z = np.zeros((g, g), dtype=np.int64)
    I = np.eye(g, dtype=np.int64)
    return SpMatrix.from_blocks(z, -I, I, z)


def random_gl_embedded(rng: np.random.Generator, g: int, max_length: int = 6) -> SpMatrix:
    """Random product of embedded elementary matrices ``diag(G, G^{-T})``.

    These preserve both Lagrangians, so they are the symplectic images
    available to mapping classes extending over both handlebodies.
    """
    M = SpMatrix.identity(g)
    for _ in range(int(rng.integers(1, max_length + 1))):
        i, j = rng.choice(np.arange(1, g + 1), size=2, replace=False)
        M = M @ gl_embed(gl_elementary(g, int(i), int(j), sign=int(rng.choice([-1, 1]))))
    return M


@dataclass
class Samples:
    genus: int
    words: list[TorelliWord]
    conjugators: list[SpMatrix]
    tb_words: list[TorelliWord]
    ta_words: list[TorelliWord]
    stabilize_to: int | None = None

    @classmethod
    def standard(cls, g: int, n_words: int = 12, seed: int = 0, max_letters: int = 3) -> Samples:
        """Generator samples at genus ``g``.

        The inner-handlebody samples are the standard separating twists and
        standard bounding pairs whose curves are meridians; their mirrors
        under :func:`mirror_matrix` serve for the outer handlebody.  The
        general words are random products of transported standard letters
        and include one nontrivial-Rohlin letter.  Conjugators are
        GL-embedded, since only those preserve both Lagrangians.
        """
        from .bcj import mixed_bscc
        from .checks import random_spec
        from .words import stabilize_spec

        rng = np.random.default_rng(seed)
        tb = [TorelliWord(g, (standard_bscc(g, k),)) for k in range(1, g + 1)]
        tb += [TorelliWord(g, (standard_bp(g, k),)) for k in range(1, g)]
        J = mirror_matrix(g)
        ta = [conjugate_word(J, w) for w in tb]
        words = [TorelliWord(g, ())]
        if g >= 2:
            words.append(TorelliWord(g, (stabilize_spec(mixed_bscc(2), g),)))
        while len(words) < n_words:
            n = int(rng.integers(1, max_letters + 1))
            words.append(TorelliWord(g, tuple(random_spec(rng, g) for _ in range(n))))
        conj = [gl_embed(gl_elementary(g, i, j)) for i, j in itertools.permutations(range(1, g + 1), 2)][: 2 * g]
        if g >= 2:
            conj.append(handle_swap(g, 1, 2))
        conj.append(random_gl_embedded(rng, g, 6))
        return cls(g, words, conj, tb, ta, g + 1)


# -- reports ----------------------------------------------------------------


@dataclass
class Violation:
    condition: str
    detail: str


@dataclass
class HarnessReport:
    name: str
    checked: dict[str, int] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    def tick(self, condition: str) -> None:
        self.checked[condition] = self.checked.get(condition, 0) + 1

    def fail(self, condition: str, detail: str) -> None:
        self.violations.append(Violation(condition, detail))

    def passed(self, condition: str) -> bool:
        return not any(v.condition == condition for v in self.violations)

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "status": "sampled-pass" if self.ok else "sampled-fail",
            "checked": dict(sorted(self.checked.items())),
            "violations": [{"condition": v.condition, "detail": v.detail} for v in self.violations],
        }


def _label(samples: Samples, w: TorelliWord) -> str:
    for name, pool in (("word", samples.words), ("tb", samples.tb_words), ("ta", samples.ta_words)):
        for i, x in enumerate(pool):
            if x == w:
                return f"{name}[{i}]"
    return f"<{len(w)} letters>"


def check_cocycle_identity(C: CocycleOracle, samples: Samples) -> HarnessReport:
    """``C(psi,eta) - C(phi psi, eta) + C(phi, psi eta) - C(phi, psi) = 0`` on sampled triples."""
    report = HarnessReport("cocycle identity")
    pool = samples.words + samples.tb_words[:2] + samples.ta_words[:2]
    for phi, psi, eta in itertools.product(pool, repeat=3):
        report.tick("cocycle")
        if C(psi, eta) ^ C(phi + psi, eta) ^ C(phi, psi + eta) ^ C(phi, psi):
            report.fail("cocycle", f"({_label(samples, phi)}, {_label(samples, psi)}, {_label(samples, eta)})")
    return report


def check_conditions(C: CocycleOracle, samples: Samples) -> HarnessReport:
    """Conditions (1) stabilization, (2) conjugation invariance, (3) handlebody vanishing."""
    report = HarnessReport("cocycle conditions")
    pool = samples.words + samples.tb_words + samples.ta_words
    pairs = list(itertools.product(pool, repeat=2))
    h = samples.stabilize_to
    if h is not None:
        for phi, psi in pairs:
            report.tick("1")
            lhs = C(stabilize_word(phi, h), stabilize_word(psi, h))
            if lhs != C(phi, psi):
                report.fail("1", f"({_label(samples, phi)}, {_label(samples, psi)}) to genus {h}")
    for t, f in enumerate(samples.conjugators):
        for phi, psi in pairs:
            report.tick("2")
            if C(conjugate_word(f, phi), conjugate_word(f, psi)) != C(phi, psi):
                report.fail("2", f"conjugator {t} on ({_label(samples, phi)}, {_label(samples, psi)})")
    for phi in samples.ta_words:
        for psi in pool:
            report.tick("3")
            if C(phi, psi):
                report.fail("3", f"TA sample ({_label(samples, phi)}, {_label(samples, psi)})")
    for phi in pool:
        for psi in samples.tb_words:
            report.tick("3")
            if C(phi, psi):
                report.fail("3", f"TB sample ({_label(samples, phi)}, {_label(samples, psi)})")
    return report


def check_trivialization(q: TrivializationOracle, C: CocycleOracle, samples: Samples) -> HarnessReport:
    """``q(phi) + q(psi) - q(phi psi) = C(phi, psi)`` on sampled pairs."""
    report = HarnessReport("trivialization")
    pool = samples.words + samples.tb_words + samples.ta_words
    for phi, psi in itertools.product(pool, repeat=2):
        report.tick("trivialization")
        if q(phi) ^ q(psi) ^ q(phi + psi) != C(phi, psi):
            report.fail("trivialization", f"({_label(samples, phi)}, {_label(samples, psi)})")
    return report


def torsor_cochain(q: TrivializationOracle, f: SpMatrix) -> WordEvaluator:
    """``w -> q(f w f^{-1}) - q(w)``."""
    return lambda w: q(conjugate_word(f, w)) ^ q(w)


def check_torsor(q: TrivializationOracle, samples: Samples) -> HarnessReport:
    """Whether every sampled torsor cochain vanishes on every sampled word."""
    report = HarnessReport("torsor")
    pool = samples.words + samples.tb_words + samples.ta_words
    for t, f in enumerate(samples.conjugators):
        rho = torsor_cochain(q, f)
        for w in pool:
            report.tick("torsor")
            if rho(w):
                report.fail("torsor", f"conjugator {t} on {_label(samples, w)}")
    return report


class TrivializationFailed(ValueError):
    def __init__(self, report: HarnessReport):
        self.report = report
        first = report.violations[0].detail if report.violations else ""
        super().__init__(f"trivialization check failed, first witness {first}")


def assemble(
    q: TrivializationOracle,
    x: int,
    samples: Samples,
    C: CocycleOracle | None = None,
) -> tuple[WordEvaluator, HarnessReport]:
    """The candidate invariant ``F = q + mu^x`` and its sampled well-definedness report.

    ``C`` defaults to the zero cocycle.  Raises :class:`TrivializationFailed`
    if ``q`` does not trivialize ``C`` on the samples.
    """
    if C is None:
        C = zero_cocycle(q.genus)
    triv = check_trivialization(q, C, samples)
    if not triv.ok:
        raise TrivializationFailed(triv)

    def F(w: TorelliWord) -> int:
        return q(w) ^ mu_x(w, x)

    report = HarnessReport("assembly")
    for w in samples.tb_words + samples.ta_words:
        report.tick("vanishing")
        if F(w):
            report.fail("vanishing", f"{_label(samples, w)} evaluates to {F(w)}")
    for phi in samples.words:
        for psi in samples.tb_words:
            report.tick("right TB coset")
            if F(phi + psi) != F(phi):
                report.fail("right TB coset", f"({_label(samples, phi)}, {_label(samples, psi)})")
        for psi in samples.ta_words:
            report.tick("left TA coset")
            if F(psi + phi) != F(phi):
                report.fail("left TA coset", f"({_label(samples, psi)}, {_label(samples, phi)})")
    if samples.stabilize_to is not None:
        for w in samples.words:
            report.tick("stabilization")
            if F(stabilize_word(w, samples.stabilize_to)) != F(w):
                report.fail("stabilization", _label(samples, w))
    return F, report


def rohlin_evaluator(w: TorelliWord) -> int:
    return rohlin(w)


def mu_evaluator(x: int) -> WordEvaluator:
    return lambda w: mu_x(w, x)


def evaluate_all(F: WordEvaluator, words: Sequence[TorelliWord]) -> list[int]:
    return [int(F(w)) for w in words]
