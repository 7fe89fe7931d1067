"""The Grothendieck group of A-modules and the Fourier transform."""

from tcakit import basis_class, fourier, maximal_chain, pairing_matrix
from tcakit.ktheory import GrKClass, rank_cells, serre_dual_gr
from tcakit.schur import SchurElement

d = 2
print("rank of K(A) over Lambda, d=2:", rank_cells(d))
print("pairing matrix Gr_1(C^3):", pairing_matrix(3, 1))

# Serre duality on P^1 in the basis (O, O(1)).
for lam in [(), (1,)]:
    print(f"D(S{list(lam)}(Q)) =", serre_dual_gr(GrKClass.basis_vector(2, 1, lam)).coeffs)

# Fourier swaps the class of C with the class of A.
C = basis_class(0, (), (), d)
A = basis_class(d, (), (), d)
print("fourier([C]) == [A]:", fourier(C) == A)

# It is star-semilinear and reverses blocks.
x = SchurElement.basis((2,)) * basis_class(1, (1,), (), d)
print("x =", x)
print("fourier(x) =", fourier(x))
print("fourier(fourier(x)) == x:", fourier(fourier(x)) == x)

chain = maximal_chain(3)
print("maximal chain in Gr(C^3):", " < ".join(map(str, chain)), f"(length {len(chain) - 1})")
