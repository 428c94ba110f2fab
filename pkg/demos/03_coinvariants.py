# # GL coinvariants of the Boolean filtration
#
# The quotient of a module by span{G v - v} for the elementary matrices
# Id + E_ij acting through their symplectic embedding.

from torelli_bcj.coinvariants import (
    coinvariants,
    gl_action_on_boolean,
    gl_action_on_boolean_graded,
    gl_action_on_lambda3,
    quotient_class,
    verify_lemma_coinvariants,
)

# ## The tables for g = 3, 4, 5
#
# Degree-3 at g = 3 is computed but has no published value to compare with.

for g in (3, 4, 5):
    table = verify_lemma_coinvariants(g)
    for row in table.rows:
        flag = "checked" if row.asserted else "reported"
        print(f"g={g} degree<={row.degree}: dim {row.dimension} {row.representatives} ({flag})")

# ## The top graded piece and Lambda^3
#
# Both have no coinvariants once g >= 4, which is what forces the degree-3
# quotient down to the constants.

for g in (3, 4, 5):
    lam = coinvariants(gl_action_on_lambda3(g)).dimension
    top = coinvariants(gl_action_on_boolean_graded(g, 3)).dimension
    print(f"g={g}: Lambda^3 coinvariants {lam}, B3/B2 coinvariants {top}")

# ## Reading off the constant term
#
# At g = 4 every element of B_3 is congruent to its constant coefficient.

res = coinvariants(gl_action_on_boolean(4, 3))
labels = gl_action_on_boolean(4, 3).labels
for j in (0, 1, 9, 40):
    print(f"{labels[j]:>10} -> {quotient_class(res, 1 << j)}")
