"""Schur functions, the star involution and Bott's algorithm."""

from tcakit import SchurElement, bott_infinite, bott_sort, bwb_pushforward, star
from tcakit.bott import dual_weight
from tcakit.schur import hook_content_dimension

s = SchurElement.basis

# Products in the Schur basis are Littlewood-Richardson expansions.
x = s((2,)) * s((1,))
print("s2 * s1 =", x)

# star transposes every partition and twists by (-1)^degree.
print("star(s2 * s1) =", star(x))
print("star(s2) * star(s1) =", star(s((2,))) * star(s((1,))))

# Dimensions multiply the same way: check it on C^3.
lhs = hook_content_dimension((2,), 3) * hook_content_dimension((1,), 3)
rhs = sum(c * hook_content_dimension(p, 3) for p, c in x.items())
print("dim check on C^3:", lhs, "=", rhs)

# Bott's algorithm sorts v + rho; a repeat means the cohomology vanishes.
for v in [(0, 1), (0, 2), (1, 0, 3)]:
    print(f"bott{v}:", bott_sort(v))

# On P^1 = Gr_1(C^2), O(-2) is S_(-2)(Q) and carries H^1 only.
print("H*(P^1, O(-2)):", bwb_pushforward((-2,), (0,), 2))

# S_a(Q*) (x) S_{a^T}(R) on Gr_1(C^3) lands in degree |a|.
print("a=(2), r=1, d=3:", bwb_pushforward(dual_weight((2,), 1), (1, 1), 3))

# The infinite version appends a partition mu after a finite head.
print("[(0), (2)] ->", bott_infinite((0,), (2,)))
print("[(2), (1)] ->", bott_infinite((2,), (1,)))
