"""Saturation: when a weight semigroup misses lattice points of its cone.

The numerical semigroup <2, 3> misses only the number 1: every integer from
2 on is a sum of twos and threes.  That single missing element already
destroys normality of the associated variety, and the certificate machinery
refuses to certify it.  Closing the semigroup repairs everything.
"""

from horoflex import (
    HorosphericalDatum,
    flexibility_verdict,
    is_saturated,
    saturate,
    semigroup_member,
)

# the coordinate ring of the plane curve cut out by a square equal to a cube
cusp = HorosphericalDatum(torus_rank=1, dominant_rank=0, generators=[[2], [3]])

print("membership in <2, 3>:")
for n in range(8):
    print(f"  {n}: {semigroup_member(cusp.generators, [n])}")

check = is_saturated(cusp)
print(f"\nsaturated: {check.saturated}, first gap: {check.gap}")

verdict = flexibility_verdict(cusp)
print(f"verdict: {verdict.status.value} (gap {verdict.saturation_gap})")

# the closure adds every cone lattice point that was missing
closed = saturate(cusp)
print(f"\nclosure generators: {closed.generators}")
print(f"closure saturated: {is_saturated(closed).saturated}")

reverdict = flexibility_verdict(closed)
print(f"closure verdict: {reverdict.status.value}")
for w in reverdict.witnesses:
    print(f"  face rays {w.face.span_rays}: functional {w.functional}")

# saturation is idempotent: closing twice changes nothing
assert saturate(closed).generators == closed.generators
print("\nclosing twice changes nothing, as it must")
