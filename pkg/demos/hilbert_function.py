"""Dimensions of invariants of a binary quartic, counted two ways."""
from hilbpoly.slmod import hilbert_values, hilbert_values_qbin, weight_table

values = hilbert_values((4,), 25)
print("H(I_4, n), n < 25:", values)

# the same numbers from the Gaussian binomial
assert values == hilbert_values_qbin(4, 25)

# weight multiplicities of S^3(V_4); H(3) = omega(3,0) - omega(3,2)
row = weight_table((4,), 3).row(3)
print("weights of S^3(V_4):", dict(sorted(row.items())))
print("H(I_4, 3) =", row[0], "-", row[2], "=", row[0] - row[2])

# a pair of forms: a quadric and a cubic
print("H(I_(2,3), n), n < 13:", hilbert_values((2, 3), 13))
