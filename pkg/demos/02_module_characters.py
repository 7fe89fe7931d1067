"""Equivariant characters of A = Sym(E (x) V) and some of its modules."""

from tcakit import cauchy_A, derived_saturation, k_module_character, saturation_closed_form
from tcakit.characters import dimension_series

d = 2
A = cauchy_A(d, 3)
print("A up to degree 3 (dim E = 2):")
for (e, v), m in A.items():
    print(f"  {m} * S{list(e)}(E) x S{list(v)}(V)")

# Hilbert function of A with dim V = 3: binom(6 + k - 1, k).
print("dim A_k, dim V = 3:", dimension_series(A, 3))

# K_{1,(1)} keeps only the E-constituents with at most one row.
K = k_module_character(1, (1,), d, 3)
print("K_{1,(1)}:", [(list(e), list(v)) for (e, v), _ in K.items()])

# Saturation of S_mu(K): degree 0 agrees with the closed form.
mu = (2,)
print("R^0 S(S_(2)(K)) == closed form:", derived_saturation(mu, 1, 0, 4) == saturation_closed_form(mu, 1, 4))
print("R^1 S(S_(2)(K)), d=1:", [(list(e), list(v)) for (e, v), _ in derived_saturation(mu, 1, 1, 4).items()])
