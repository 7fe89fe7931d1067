"""Betti tables of row truncations of A via the geometric technique."""

from tcakit import betti_table, regularity_report
from tcakit.resolutions import regularity_bound, resolution_character
from tcakit.characters import truncated_module_character

# n = 1, dim E = 2: the ideal of 2x2 minors, resolved by Eagon-Northcott.
t = betti_table((), 1, 2, 4)
print(t.render())
print(regularity_report((), 1, 2, 4))

# Large first part kills the higher strands.
print(regularity_report((2,), 1, 2, 4))

# A truncation that is A itself: the bound 3 is not reached.
print(regularity_report((), 3, 2, regularity_bound((), 3, 2) + 2))

# Exactness: the alternating sum of Tor characters times A gives back the module.
t = betti_table((1,), 2, 2, 4)
print("Euler identity holds:", resolution_character(t, 5) == truncated_module_character((1,), 2, 2, 5))
