# # Homology, the intersection form and Dehn twists
#
# Classes are integer vectors in the basis (a_1..a_g, b_1..b_g).  A Dehn twist
# about a curve of class x acts by the transvection y -> y + k*omega(y, x)*x.

import numpy as np

from torelli_bcj.symplectic import E, SE, a, b, gl_elementary, gl_embed, lower_unipotent, omega, transvection_power
from torelli_bcj.words import psi_of_word, sg_lift_word

g = 3
print("omega(b1, a1) =", omega(b(g, 1), a(g, 1)))
print("omega(a1, b1) =", omega(a(g, 1), b(g, 1)))

# ## A single twist
#
# Twisting about a_1 moves b_1 and nothing else.

T = transvection_power(a(g, 1), 1)
for x in (a(g, 1), b(g, 1), b(g, 2)):
    print(f"T_a1: {x} -> {T.apply(x)}")

# ## Embedding GL_g
#
# A unimodular G acts as G on the a-span and as its inverse transpose on the
# b-span.

M = gl_embed(gl_elementary(2, 2, 1))
print("b-block of Id + E21 embedded:\n", M.blocks()[3])

# ## Lifting symmetric matrices
#
# Inverse twists about the b_i, and a twist about b_i - b_j, realise the
# lower-unipotent matrices [[Id, 0], [S, Id]] for the generators of the
# symmetric integer matrices.

for i, j in [(1, None), (2, None), (1, 2), (2, 3)]:
    target = lower_unipotent(E(g, i, i) if j is None else SE(g, i, j))
    got = psi_of_word(sg_lift_word(g, i, j))
    print(f"lift of {'E%d%d' % (i, i) if j is None else 'SE%d%d' % (i, j)}: matches = {got == target}")

assert np.array_equal(psi_of_word(sg_lift_word(g, 1, 3)).blocks()[2], SE(g, 1, 3))
