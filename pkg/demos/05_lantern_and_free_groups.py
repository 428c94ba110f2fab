# # Relations behind the genus-4 argument
#
# A free-group identity among conjugating automorphisms, a symplectic
# conjugation identity, and lantern relations checked through sigma.

from torelli_bcj.bcj import sigma_spec
from torelli_bcj.checks import (
    lantern_candidates,
    lantern_letters,
    ia_automorphism_f,
    verify_ia_relation,
    verify_lantern_sigma,
    verify_luft_conjugation,
)
from torelli_bcj.freegroup import FreeGroupWord, compose, conjugating_automorphism

# ## f K13 f^-1 = K12 K13

f, f_inv = ia_automorphism_f(3)
lhs = compose(f, compose(conjugating_automorphism(3, 1, 3), f_inv))
print("alpha_1 ->", lhs(FreeGroupWord(3, (1,))))
print("all generators agree:", verify_ia_relation(3).ok)

# ## Conjugating a lift of SE13

rep = verify_luft_conjugation(4)
for item in rep.items:
    print(f"{item.name}: {item.ok}")

# ## Lanterns
#
# Each genus-1 bounding pair needs a symplectic pair (c, d) for the handle it
# cuts off.  Every choice consistent with the picture gives the same sigma.

L = lantern_letters(4)
for name in ("zeta1", "zeta2", "zeta3", "xi1", "xi2", "xi3", "gamma"):
    print(f"sigma({name}) = {sigma_spec(L[name])}")
print("candidate pairs for zeta3:", len(lantern_candidates(4, "zeta3")))
print("all lantern checks pass:", verify_lantern_sigma(4).ok)
