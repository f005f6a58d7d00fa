"""Tour of the truncated series engine.

Series are dense coefficient vectors over either the exact integers or Z/mZ,
known up to a truncation order.  Everything is immutable; binary operations
truncate to the shorter operand.
"""

from overq import EXACT, Zmod, euler_product, make_series, one

# A series is a ring plus coefficients.  Inputs are canonicalized on entry:
# mod 4, the coefficients 5 and -1 become 1 and 3.
s = make_series(Zmod(4), [5, -1], 3)
print("canonical form: ", s)

# Exact series keep arbitrary-precision integers.
geo = make_series(EXACT, [1, -1], 10).invert()
print("1/(1-q)       = ", geo)

# Multiplication is a truncated Cauchy product; (1-q) telescopes against it.
back = geo * make_series(EXACT, [1, -1], 10)
print("times (1-q)   = ", back)
assert back == one(EXACT, 10)

# Inverting the Euler product f1 = prod (1-q^n) yields partition numbers.
partitions = euler_product(1, EXACT, 12).invert()
print("partitions    = ", list(partitions.coeffs))

# Powers use binary exponentiation; negative powers invert first.
cube = make_series(EXACT, [1, 1], 6) ** 3
print("(1+q)^3       = ", cube)
assert (cube ** -1) * cube == one(EXACT, 6)

# Dissection extracts an arithmetic progression of coefficients ...
ramp = make_series(EXACT, list(range(12)), 12)
print("odd-index part            =", list(ramp.dissect(2, 1).coeffs))

# ... and the three reindexing moves reassemble the original series.  The
# sum truncates to the shortest slice, as every binary operation does.
rebuilt = None
for r in range(3):
    piece = ramp.dissect(3, r).substitute_power(3).shift(r)
    rebuilt = piece if rebuilt is None else rebuilt + piece
print("reassembled from 3 slices =", list(rebuilt.coeffs), f"(order {rebuilt.order})")
assert rebuilt == ramp.truncate(rebuilt.order)

# Exact series map onto modular ones coefficientwise.
sq = euler_product(1, EXACT, 8) ** 2
print("f1^2 exact    = ", sq)
print("f1^2 mod 4    = ", sq.reduce_ring(4))
