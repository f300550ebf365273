"""Multiplying in the extended bicyclic monoid and its Bruck-Reilly extensions."""
from bruckreilly.extensions import mul_ext_bicyclic
from bruckreilly.oracles import mul_by_shifts
from bruckreilly.recipes import build_semigroup

# pairs multiply by a three-way case split on the inner indices
print(mul_ext_bicyclic((2, 3), (1, 4)), mul_ext_bicyclic((1, 4), (2, 3)))

# the same product, read as composition of partial shifts of the integers
print(mul_by_shifts((2, 3), (1, 4)))

# over a carrier monoid the middle coordinate is twisted by powers of theta
br = build_semigroup("zbr", "c2", "identity")
print(br.mul((0, 1, 3), (1, 1, 0)))

# the Warne construction adds the cocycle f_{m,n} built from the u sequence
W = build_semigroup("warne", "c6", "scale(2)", {-1: 1, -2: 3})
x, y = (1, 2, 4), (2, 5, 0)
z = W.mul(x, y)
print(z, "grading:", z[0] - z[2] == x[0] - x[2] + y[0] - y[2])
