# # Cocycles, trivializations and the assembled invariant
#
# F -> C = F(phi) + F(psi) - F(phi psi) measures how far F is from a
# homomorphism.  A trivialization q has coboundary C; adding mu^x to a
# trivialization keeps it one.  Everything here is checked on samples.

from torelli_bcj.assembly import (
    Samples,
    TrivializationOracle,
    assemble,
    check_conditions,
    check_torsor,
    coboundary,
    letter_pair_parity,
    rohlin_evaluator,
    zero_cocycle,
    zero_evaluator,
)
from torelli_bcj.bcj import mu_x

g = 3
S = Samples.standard(g)
print(f"{len(S.words)} words, {len(S.tb_words)} inner and {len(S.ta_words)} outer handlebody samples")

# ## The three conditions

for name, C in [
    ("zero", zero_cocycle(g)),
    ("coboundary of rohlin", coboundary(rohlin_evaluator, g)),
    ("coboundary of binom(len, 2)", coboundary(letter_pair_parity, g)),
]:
    rep = check_conditions(C, S)
    print(f"{name}: (1) {rep.passed('1')} (2) {rep.passed('2')} (3) {rep.passed('3')}")

# ## Assembling q + mu^x

F, rep = assemble(TrivializationOracle(g, zero_evaluator), 1, S)
print("report:", rep.as_dict()["status"], rep.as_dict()["checked"])
print("values:", [F(w) for w in S.words])
print("equals mu^1:", all(F(w) == mu_x(w, 1) for w in S.words))

# ## Torsor of q = mu
#
# Conjugating by the GL-embedded samples never changes mu, so the sampled
# torsor cochains all vanish.

print("torsor trivial on samples:", check_torsor(TrivializationOracle(g, rohlin_evaluator), S).ok)
