# # The Boolean algebra and the BCJ homomorphism
#
# Every mod-2 class x has a generator bar(x), with bar(x)^2 = bar(x) and
# bar(x + y) = bar(x) + bar(y) + omega(x, y).  Elements are sums of square-free
# monomials in the basis generators.

from torelli_bcj.bcj import sigma_spec, sigma_word, transport
from torelli_bcj.boolean import BoolElement, bar, sp_action
from torelli_bcj.symplectic import a, b, handle_swap, transvection_power
from torelli_bcj.words import TorelliWord, decompose_bp, standard_bp, standard_bscc

g = 3
print("bar(a1 + b1) =", bar(a(g, 1) + b(g, 1)))
p = BoolElement.parse("a1 + 1", g)
print("(a1 + 1)^2 =", p * p)

# ## Sigma on generators
#
# A separating twist cutting off pairs (c_i, d_i) maps to sum c_i d_i.  A
# bounding pair of class e maps to sum c_i d_i (e + 1).

print("separating, genus 1:", sigma_spec(standard_bscc(g, 1)))
print("separating, genus 2:", sigma_spec(standard_bscc(g, 2)))
print("bounding pair, genus 1:", sigma_spec(standard_bp(g, 1)))

# ## Genus-k bounding pairs split into genus-1 pieces

g = 5
big = standard_bp(g, 3)
parts = decompose_bp(big)
total = sum((sigma_spec(s) for s in parts), BoolElement.zero(g))
print(f"sigma(genus-3 BP) = {sigma_spec(big)}")
print(f"sum over {len(parts)} pieces agrees: {total == sigma_spec(big)}")

# ## Equivariance
#
# Moving the curves by a symplectic f moves sigma by the induced algebra map.

g = 3
f = transvection_power(a(g, 2) + b(g, 1), 1) @ handle_swap(g, 1, 3)
spec = standard_bp(g, 1)
print("sigma(f spec f^-1) =", sigma_spec(transport(f, spec)))
print("f . sigma(spec)    =", sp_action(f, sigma_spec(spec)))

w = TorelliWord(g, (spec, standard_bscc(g, 2), spec))
print("a letter repeated twice cancels:", sigma_word(w))
