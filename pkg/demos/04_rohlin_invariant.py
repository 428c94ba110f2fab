# # The Rohlin invariant of a gluing word
#
# A Torelli word glues two handlebodies into a homology sphere; its Rohlin
# invariant is the constant coefficient of sigma.

import numpy as np

from torelli_bcj.bcj import TwoTorsionGroup, mixed_bscc, mu_x, rohlin, search_rohlin_nontrivial, sigma_word
from torelli_bcj.checks import random_spec
from torelli_bcj.words import TorelliWord, stabilize_word, standard_bp, standard_bscc

# ## Standard generators glue back the sphere

g = 3
for k in (1, 2, 3):
    print(f"standard separating twist, genus {k}: rohlin = {rohlin(TorelliWord(g, (standard_bscc(g, k),)))}")
print("standard bounding pair:", rohlin(TorelliWord(g, (standard_bp(g, 1),))))

# ## A curve in mixed position
#
# Both classes of this pair carry a 1 in their generator expansion, so their
# product has constant term 1.

w = TorelliWord(2, (mixed_bscc(2),))
print("sigma =", sigma_word(w))
print("rohlin =", rohlin(w))
print("search finds:", search_rohlin_nontrivial(2)[0])

# ## Homomorphism and stability

rng = np.random.default_rng(4)
u = TorelliWord(3, tuple(random_spec(rng, 3) for _ in range(3)))
v = TorelliWord(3, tuple(random_spec(rng, 3) for _ in range(2)))
print(rohlin(u + v), "=", rohlin(u), "+", rohlin(v))
print("after stabilizing to genus 5:", rohlin(stabilize_word(u, 5)))

# ## Valued in a two-torsion group

A = TwoTorsionGroup(2, ("s", "t"))
x = A.element([1, 1])
print("mu^x of the mixed word:", A.format(mu_x(w, x, A)))
