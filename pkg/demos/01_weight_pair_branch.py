"""Walk through the weight-pair example on U(1).

The massive pure branch of U(1) is the Laurent ring Q[z, 1/z, tau, mu].
A representation with weights +1 and -1 deforms it: translating z by the
section (mu + tau)/(mu - tau) and keeping only elements whose translate
stays regular cuts out a subring generated by

    x = z*(mu - tau),  y = (1/z)*(mu + tau),  mu,  tau

with the single relation x*y = mu^2 - tau^2.  At mu = 0 the relation
degenerates to x*y = -tau^2, the familiar quadric cone.
"""

from coulombalg import (
    CoulombProblem,
    ambient_table,
    euler_translation,
    format_element,
    format_polynomial,
    matter_membership,
    matter_presentation,
    mu_zero_fiber,
    pure_branch,
)

problem = CoulombProblem.make(torus_rank=1, su2_blocks=0, weights=[(1,), (-1,)])
ring = ambient_table(problem)

print("== the massive pure branch ==")
pres = pure_branch(problem)
print("variables:", ", ".join(pres.table.names))
print("declared denominators:", ", ".join(format_polynomial(f) for f in ring.factors.factors))

print()
print("== translation along the Euler section ==")
eps = euler_translation(ring)
print("z ->", format_element(eps.images["z"]))

print()
print("== membership: which elements keep a regular translate? ==")
x = ring.z(0) * (ring.mu() - ring.tau(0))
y = ring.z(0) ** -1 * (ring.mu() + ring.tau(0))
for name, element in [("x = z*(mu - tau)", x), ("y = (1/z)*(mu + tau)", y), ("z", ring.z(0))]:
    result = matter_membership(ring, element)
    if result.member:
        print(f"{name}: member, translate {format_element(result.translated)}")
    else:
        print(f"{name}: NOT a member, pole along {format_polynomial(result.offending)}")

print()
print("== the presentation by generators and relations ==")
generators = [
    ("x", ring.fraction(x)),
    ("y", ring.fraction(y)),
    ("mu", ring.fraction(ring.mu())),
    ("tau", ring.fraction(ring.tau(0))),
]
presentation = matter_presentation(ring, generators)
for relation in presentation.relations:
    print("relation:", format_polynomial(relation))

print()
print("== the fiber over mu = 0 ==")
fiber = mu_zero_fiber(presentation)
print("variables:", ", ".join(fiber.table.names))
for relation in fiber.relations:
    print("relation:", format_polynomial(relation))
