"""Run the identity registry and show how failures are reported.

Each case stores both sides as recipe trees (data, not code), so a report can
say exactly what was evaluated.  Exact cases compare integer coefficients;
congruence cases compare residues.
"""

from overq import IdentityCase, builtin_identities, identity_registry, verify_identity
from overq.expr import eta_series

print(f"{'KEY':10} {'MODE':8} {'LHS':44} STATUS")
for case in builtin_identities():
    result = verify_identity(case, order=300)
    print(f"{case.key:10} {case.mode:8} {str(case.lhs)[:44]:44} {result.status}")

# The collapse case R13 is registered mod 2 because that is the congruence
# that actually holds: over the exact integers the sides differ already at
# q^1, as the failure report of a synthetic exact-mode copy shows.
r13 = identity_registry()["R13"]
exact_copy = IdentityCase("R13-as-exact", r13.lhs, r13.rhs, modulus=None)
failure = verify_identity(exact_copy, order=20)
print("\nexact-mode copy of R13:", failure.status, "--", failure.describe())

# Mismatches always carry the first differing exponent and both values.
toy = IdentityCase("toy", eta_series("f1"), eta_series("f2"))
print("deliberately false case:", verify_identity(toy, order=10).describe())
