"""Machine checks of the concrete identities used in the proofs.

Each ``verify_*`` function returns a :class:`CheckReport` listing every
sub-identity it tested, in a fixed order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .bcj import sigma_spec, sigma_word, transport
from .boolean import sp_action
from .coinvariants import coinvariants, gl_action_on_boolean_graded, gl_action_on_lambda3, verify_lemma_coinvariants
from .freegroup import FreeAutomorphism, compose, conjugating_automorphism
from .symplectic import (
    E,
    SE,
    HClass,
    SpMatrix,
    b,
    gl_elementary,
    gl_embed,
    lower_unipotent,
    omega,
    transvection_power,
)
from .words import BP, BSCC, Conj, TorelliWord, psi_of_word, sg_lift_word, standard_bscc, standard_pairs


@dataclass
class CheckItem:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    suite: str
    items: list[CheckItem] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.items.append(CheckItem(name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    @property
    def first_failure(self) -> CheckItem | None:
        return next((item for item in self.items if not item.ok), None)

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        first = self.first_failure
        return {
            "suite": self.suite,
            "ok": self.ok,
            "first_failure": first.name if first else None,
            "items": [{"name": i.name, "ok": i.ok, "detail": i.detail} for i in self.items],
        }


# -- free group relation in IA ---------------------------------------------


def ia_automorphism_f(rank: int) -> tuple[FreeAutomorphism, FreeAutomorphism]:
    """``f: alpha_3 -> alpha_3 alpha_2`` and its inverse ``alpha_3 -> alpha_3 alpha_2^{-1}``."""
    f = FreeAutomorphism.from_mapping(rank, {3: (3, 2)})
    f_inv = FreeAutomorphism.from_mapping(rank, {3: (3, -2)})
    return f, f_inv


def verify_ia_relation(g: int, f: FreeAutomorphism | None = None, f_inv: FreeAutomorphism | None = None) -> CheckReport:
    """Check ``f K_13 f^{-1} = K_12 K_13`` generator by generator."""
    if g < 3:
        raise ValueError(f"rank must be at least 3, got {g}")
    if f is None:
        f, f_inv = ia_automorphism_f(g)
    elif f_inv is None:
        raise ValueError("an explicit f needs its inverse")
    report = CheckReport("ia")
    report.add("f * f^-1 = id", f_inv.is_inverse_of(f))
    K12 = conjugating_automorphism(g, 1, 2)
    K13 = conjugating_automorphism(g, 1, 3)
    lhs = compose(f, compose(K13, f_inv))
    rhs = compose(K12, K13)
    for i in range(g):
        left, right = lhs.images[i], rhs.images[i]
        report.add(f"alpha_{i + 1}", left == right, f"lhs={left} rhs={right}")
    return report


# -- symplectic identities ------------------------------------------------


def verify_sg_lifts(g: int) -> CheckReport:
    """Lift words of the generators ``E_ii``, ``SE_ij`` of symmetric matrices."""
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    report = CheckReport("sg-lifts")
    for i in range(1, g + 1):
        got = psi_of_word(sg_lift_word(g, i))
        want = lower_unipotent(E(g, i, i))
        report.add(f"E{i}{i}", got == want, f"got lower block {got.blocks()[2].tolist()}")
    for i, j in itertools.combinations(range(1, g + 1), 2):
        got = psi_of_word(sg_lift_word(g, i, j))
        want = lower_unipotent(SE(g, i, j))
        report.add(f"SE{i}{j}", got == want, f"got lower block {got.blocks()[2].tolist()}")
    assert len(report.items) == g + comb(g, 2)
    return report


def conjugating_psi_f(g: int) -> SpMatrix:
    """``[[Id - E_34, 0], [0, Id + E_43]]``."""
    return gl_embed(gl_elementary(g, 3, 4, sign=-1))


def verify_luft_conjugation(g: int, psi_f: SpMatrix | None = None) -> CheckReport:
    """``Psi(f) [[Id,0],[SE_13,Id]] Psi(f)^{-1} = [[Id,0],[SE_13 + SE_14,Id]]``."""
    if g < 4:
        raise ValueError(f"genus must be at least 4, got {g}")
    if psi_f is None:
        psi_f = conjugating_psi_f(g)
    report = CheckReport("luft")
    I = np.eye(g, dtype=np.int64)
    A, B, C, D = psi_f.blocks()
    report.add("Psi(f) block form", np.array_equal(A, I - E(g, 3, 4)) and np.array_equal(D, I + E(g, 4, 3))
               and not B.any() and not C.any(), f"a-block {A.tolist()}, b-block {D.tolist()}")
    lift13 = lower_unipotent(SE(g, 1, 3))
    lift14 = lower_unipotent(SE(g, 1, 4))
    report.add("lift SE13 from word", psi_of_word(sg_lift_word(g, 1, 3)) == lift13)
    report.add("lift SE14 from word", psi_of_word(sg_lift_word(g, 1, 4)) == lift14)
    lhs = psi_f @ lift13 @ psi_f.inverse()
    rhs = lift13 @ lift14
    report.add("conjugation identity", lhs == rhs, f"lhs lower block {lhs.blocks()[2].tolist()}")
    report.add("lower block = SE13 + SE14", np.array_equal(lhs.blocks()[2], SE(g, 1, 3) + SE(g, 1, 4)))
    return report


# -- lantern relations ----------------------------------------------------

# Classes of the curves in the two lantern configurations, read off the
# figure of the standardly embedded surface: zeta_1 and zeta'_1 are meridians
# of handle 2, zeta_2 and zeta'_2 meridians of handle 1, zeta_3 and zeta'_3
# arcs joining holes 1 and 2; xi_i likewise for holes 3 and 4.  gamma cuts off
# handles 1 and 2.  Each entry is a coordinate vector in (a1..a4, b1..b4).
LANTERN_CURVES: dict[str, tuple[int, ...]] = {
    "zeta1": (0, 0, 0, 0, 0, 1, 0, 0),
    "zeta2": (0, 0, 0, 0, 1, 0, 0, 0),
    "zeta3": (0, 0, 0, 0, 1, 1, 0, 0),
    "xi1": (0, 0, 0, 0, 0, 0, 1, 0),
    "xi2": (0, 0, 0, 0, 0, 0, 0, 1),
    "xi3": (0, 0, 0, 0, 0, 0, 1, 1),
}

# Frozen output of search_lantern_pairs(): for each genus-1 pair zeta_i the
# first (c, d) in lexicographic order over {-1,0,1}^4 on handles 1-2 such that
# omega(c, d) = +-1, both are orthogonal to [zeta_i], and span{c, d, zeta_i}
# contains the other two zeta classes mod 2.  Coordinates on (a1, a2, b1, b2).
LANTERN_ZETA_PAIRS: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = {
    "zeta1": ((-1, 0, -1, -1), (-1, 0, 0, -1)),
    "zeta2": ((0, -1, -1, -1), (0, -1, -1, 0)),
    "zeta3": ((-1, 1, -1, -1), (-1, 1, -1, 0)),
}


def _lift(g: int, coords4: tuple[int, ...]) -> HClass:
    """Embed (a1, a2, b1, b2) coordinates into genus ``g``."""
    c = [0] * (2 * g)
    c[0], c[1], c[g], c[g + 1] = coords4
    return HClass(g, c)


def _curve(g: int, name: str) -> HClass:
    return HClass(4, LANTERN_CURVES[name]).stabilize(g)


def _mod2_span(vectors: list[HClass]) -> set[int]:
    basis = [v.mod2().bits for v in vectors]
    out = {0}
    for v in basis:
        out |= {x ^ v for x in out}
    return out


def lantern_candidates(g: int, name: str) -> list[tuple[HClass, HClass]]:
    """All figure-consistent symplectic pairs for the genus-1 pair ``name``."""
    e = _curve(g, name)
    others = [_curve(g, n) for n in ("zeta1", "zeta2", "zeta3") if n != name]
    vecs = [_lift(g, v) for v in itertools.product((-1, 0, 1), repeat=4)]
    vecs = [v for v in vecs if any(v.coords)]
    out = []
    for c in vecs:
        if omega(c, e) != 0:
            continue
        for d in vecs:
            if abs(omega(c, d)) != 1 or omega(d, e) != 0:
                continue
            span = _mod2_span([c, d, e])
            if all(o.mod2().bits in span for o in others):
                out.append((c, d))
    return out


def search_lantern_pairs(g: int = 4) -> dict[str, tuple[tuple[int, ...], tuple[int, ...]]]:
    """Recompute the frozen table ``LANTERN_ZETA_PAIRS``."""
    out = {}
    for name in ("zeta1", "zeta2", "zeta3"):
        c, d = lantern_candidates(g, name)[0]
        pick = lambda x: (x.coords[0], x.coords[1], x.coords[g], x.coords[g + 1])  # noqa: E731
        out[name] = (pick(c), pick(d))
    return out


def lantern_letters(g: int = 4) -> dict[str, BSCC | BP]:
    if g < 4:
        raise ValueError(f"genus must be at least 4, got {g}")
    letters: dict[str, BSCC | BP] = {}
    for name, (c, d) in LANTERN_ZETA_PAIRS.items():
        letters[name] = BP(_curve(g, name), ((_lift(g, c), _lift(g, d)),))
    left = standard_pairs(g, (1, 2))
    for name in ("xi1", "xi2", "xi3"):
        letters[name] = BP(_curve(g, name), left)
    letters["gamma"] = standard_bscc(g, 2)
    return letters


def verify_lantern_sigma(g: int = 4) -> CheckReport:
    """Sigma- and Psi-level consistency of both lantern relations and their combination."""
    L = lantern_letters(g)
    report = CheckReport("lantern")
    report.add("frozen pairs match search", search_lantern_pairs(g) == LANTERN_ZETA_PAIRS)
    for name in ("zeta1", "zeta2", "zeta3"):
        values = {sigma_spec(BP(_curve(g, name), ((c, d),))) for c, d in lantern_candidates(g, name)}
        report.add(f"sigma({name}) independent of pair choice", len(values) == 1, f"{len(values)} distinct values")
    word = lambda *names: TorelliWord(g, tuple(L[n] for n in names))  # noqa: E731
    relations = {
        "zeta lantern": (word("zeta2", "zeta1", "zeta3"), word("gamma")),
        "xi lantern": (word("xi1", "xi2", "xi3"), word("gamma")),
        "combined": (word("zeta1"), word("zeta2", "zeta3", "xi1", "xi2", "xi3")),
    }
    for rel, (lhs, rhs) in relations.items():
        s_l, s_r = sigma_word(lhs), sigma_word(rhs)
        report.add(f"{rel}: sigma", s_l == s_r, f"lhs={s_l.render()} rhs={s_r.render()}")
        report.add(f"{rel}: Psi", psi_of_word(lhs).is_identity() and psi_of_word(rhs).is_identity())
    return report


# -- equivariance -----------------------------------------------------------


def random_class(rng: np.random.Generator, g: int, nonzero_mod2: bool = False) -> HClass:
    while True:
        x = HClass(g, rng.integers(-1, 2, size=2 * g).tolist())
        if any(x.coords) and (not nonzero_mod2 or not x.is_zero_mod2()):
            return x


def random_symplectic(rng: np.random.Generator, g: int, max_length: int = 10) -> SpMatrix:
    """Product of at most ``max_length`` GL-embedded and symplectic transvections."""
    M = SpMatrix.identity(g)
    for _ in range(int(rng.integers(1, max_length + 1))):
        if rng.random() < 0.5:
            i, j = rng.choice(np.arange(1, g + 1), size=2, replace=False)
            M = M @ gl_embed(gl_elementary(g, int(i), int(j), sign=int(rng.choice([-1, 1]))))
        else:
            M = M @ transvection_power(random_class(rng, g), int(rng.choice([-1, 1])))
    return M


def random_spec(rng: np.random.Generator, g: int):
    """A valid BSCC, BP or conjugated letter in general position."""
    kind = rng.integers(0, 3)
    if kind == 0:
        base = standard_bscc(g, int(rng.integers(1, g + 1)))
    else:
        k = int(rng.integers(1, g))
        e = b(g, k + 1)
        if g > k + 1 and rng.random() < 0.5:
            e = e + b(g, k + 2)
        base = BP(e, standard_pairs(g, range(1, k + 1)))
    moved = transport(random_symplectic(rng, g, 4), base)
    if kind == 2:
        return Conj(random_symplectic(rng, g, 3), moved)
    return moved


def verify_equivariance(g: int, cases: int = 500, seed: int = 0, max_length: int = 10) -> CheckReport:
    """``sigma(f spec f^{-1}) = f . sigma(spec)`` on random cases."""
    rng = np.random.default_rng(seed)
    report = CheckReport("equivariance")
    failures = 0
    first = ""
    for t in range(cases):
        f = random_symplectic(rng, g, max_length)
        spec = random_spec(rng, g)
        lhs = sigma_spec(transport(f, spec))
        rhs = sp_action(f, sigma_spec(spec))
        if lhs != rhs:
            failures += 1
            first = first or f"case {t}: {lhs.render()} != {rhs.render()}"
    report.add(f"g={g}: {cases} random cases", failures == 0, first or f"{failures} failures")
    return report


# -- coinvariant suites -----------------------------------------------------


def verify_lemma_coinv(genera=(3, 4, 5)) -> CheckReport:
    report = CheckReport("lemma-coinv")
    for g in genera:
        table = verify_lemma_coinvariants(g)
        for row in table.rows:
            if row.asserted:
                report.add(
                    f"g={g} degree {row.degree}",
                    row.ok,
                    f"dim {row.dimension} reps {row.representatives}",
                )
    for g in genera:
        if g < 4:
            continue
        lam = coinvariants(gl_action_on_lambda3(g)).dimension
        top = coinvariants(gl_action_on_boolean_graded(g, 3)).dimension
        report.add(f"g={g} Lambda^3 H_2 coinvariants vanish", lam == 0, f"dim {lam}")
        report.add(f"g={g} Lambda^3 matches B3/B2", lam == top, f"{lam} vs {top}")
    return report


def lambda3_matches_top_boolean(g: int) -> bool:
    """The degree-3 graded piece of B and Lambda^3 H_2 carry the same GL action."""
    lam = gl_action_on_lambda3(g)
    top = gl_action_on_boolean_graded(g, 3)
    if [l.replace("^", "*") for l in lam.labels] != list(top.labels):
        return False
    return all(x == y for x, y in zip(lam.generators, top.generators))


SUITES = ("sg-lifts", "luft", "ia", "lantern", "equivariance", "lemma-coinv")


def run_suite(name: str, g: int = 4) -> list[CheckReport]:
    if name == "all":
        return [r for s in SUITES for r in run_suite(s, g)]
    if name == "sg-lifts":
        return [verify_sg_lifts(g)]
    if name == "luft":
        return [verify_luft_conjugation(g)]
    if name == "ia":
        return [verify_ia_relation(g)]
    if name == "lantern":
        return [verify_lantern_sigma(g)]
    if name == "equivariance":
        return [verify_equivariance(g)]
    if name == "lemma-coinv":
        return [verify_lemma_coinv()]
    raise KeyError(name)

