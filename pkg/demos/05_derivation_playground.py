"""Locally nilpotent derivations and the one-parameter flows they generate.

A derivation sends each variable to a polynomial and extends by the Leibniz
rule.  When repeated application kills every variable it is locally
nilpotent, and exponentiating it gives a polynomial substitution depending
on a flow parameter.  Everything below is exact rational arithmetic: the
nilpotency orders are found by search, the flows by the finite exponential
series, and the group law by composing and comparing substitutions.
"""

from horoflex import (
    Derivation,
    compose_substitutions,
    exp_lnd,
    is_locally_nilpotent_bounded,
    parse_polynomial,
    variable,
)

# the translation derivation d/dx: x -> 1
d = Derivation({"x": 1})
check = is_locally_nilpotent_bounded(d, 8)
print(f"d(x) = 1: certified nilpotent of order {check.order}")
flow = exp_lnd(d, "t")
print(f"  flow: x -> {flow['x']}")

# a triangular derivation on three variables: x -> y^2, y -> z, z -> 0
d = Derivation({"x": parse_polynomial("y^2"), "y": variable("z")})
check = is_locally_nilpotent_bounded(d, 8)
print(f"triangular example: certified {check.certified}, order {check.order}")
for var, order in check.variable_orders:
    print(f"  {var} dies after {order} applications")

flow = exp_lnd(d, "t")
print("  flow:")
for var in ("x", "y", "z"):
    print(f"    {var} -> {flow[var]}")

# flowing for time t then time s equals flowing for time t + s
first = exp_lnd(d, "t")
second = exp_lnd(d, "s")
combined = compose_substitutions(second, first)
total = exp_lnd(d, "r")
for var in ("x", "y", "z"):
    expected = total[var].substitute({"r": parse_polynomial("t + s")})
    assert combined[var] == expected, var
print("  group law exp(t d) . exp(s d) = exp((t+s) d): verified")

# the Euler derivation x -> x is not locally nilpotent; the search says so
# honestly: not certified within the bound, which proves nothing either way
euler = Derivation({"x": variable("x")})
check = is_locally_nilpotent_bounded(euler, 12)
print(f"Euler derivation x -> x: certified {check.certified} (bound {check.bound})")
