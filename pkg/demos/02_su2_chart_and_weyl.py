"""The SU(2) chart: blowup generators, the Weyl involution, averaging.

For SU(2) the branch is presented on an affine blowup chart that adjoins
u = (z - 1)/tau with the relation tau*u = z - 1.  The Weyl involution acts
by z -> 1/z, tau -> -tau, u -> u/z; averaging over it projects onto
invariants.  With the standard representation the matter subring is
generated on the chart by

    x = mu*u - z,  y = mu*v - 1/z,  w = (x - y)/tau,   v = u/z,

and w collapses to the chart polynomial mu*u*v - u - v.
"""

from coulombalg import (
    CoulombProblem,
    ambient_table,
    blowup_equal,
    blowup_presentation,
    expand,
    format_element,
    format_polynomial,
    matter_membership,
    reynolds,
    standard_block_generators,
    to_blowup_polynomial,
)

problem = CoulombProblem.make(torus_rank=0, su2_blocks=1, weights=[(1,), (-1,)])
ring = ambient_table(problem)
chart = blowup_presentation(problem)

print("== the blowup chart ==")
print("variables:", ", ".join(chart.table.names))
for relation in chart.relations:
    print("relation:", format_polynomial(relation))
for name, value in chart.derived:
    print(f"derived {name} =", format_element(value))

print()
print("== the Weyl involution ==")
(weyl,) = chart.weyl
for name in ("z", "tau", "u"):
    print(f"{name} ->", format_element(weyl.images[name]))

print()
print("== Reynolds averages ==")
z = ring.fraction(ring.z(0))
for label, element in [("z", z), ("tau", ring.fraction(ring.tau(0))), ("tau*(z - 1/z)", ring.fraction(ring.tau(0)) * (z - z ** -1))]:
    print(f"average of {label}:", format_element(reynolds(ring, element)))

print()
print("== the standard-representation generators ==")
gens = standard_block_generators(ring)
for name, g in gens:
    result = matter_membership(ring, g)
    print(f"{name} = {format_element(g)}  [member: {result.member}]")

print()
print("== w is a chart polynomial ==")
w = dict(gens)["w"]
w_poly = to_blowup_polynomial(ring, expand(ring, w))
print("w as a chart element:", format_polynomial(w_poly))
u = ring.fraction(ring.u(0))
v = u * z ** -1
print("equals mu*u*v - u - v:", blowup_equal(ring, w, ring.fraction(ring.mu()) * u * v - u - v))

print()
print("== the Weyl action permutes the generators ==")
by_name = dict(gens)
print("w(x) == y:", weyl(expand(ring, by_name["x"])) == expand(ring, by_name["y"]))
print("w(w) == w:", weyl(expand(ring, by_name["w"])) == expand(ring, by_name["w"]))
