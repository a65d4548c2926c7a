"""The equivariant model of the representation ball, and the diagram check.

Each weight nu contributes a rotation operator mu + <nu, eta> on the
equivariant cohomology of the unit ball; inverting their product computes
the ball's equivariant symplectic cohomology as a localization.  Branch
elements map into it by evaluation on the Euler section, and elements of
the matter subring always land in the polynomial (non-localized) part.

The converse direction is generic rather than automatic: the demo ends
with an element tuned so that the poles of its section image cancel even
though its translate is genuinely singular.
"""

from coulombalg import (
    CoulombProblem,
    acceleration_membership,
    ambient_table,
    diagonal_seidel,
    equivariant_ring,
    format_element,
    format_polynomial,
    matter_membership,
    section_homomorphism,
    seidel_operator,
    standard_block_generators,
    symplectic_cohomology,
    verify_diagram,
)

problem = CoulombProblem.make(torus_rank=1, su2_blocks=0, weights=[(1,), (-1,)])
ring = ambient_table(problem)
ball = equivariant_ring(problem)

print("== rotation operators ==")
for weight in problem.weights:
    print(f"weight {list(weight)}:", format_polynomial(seidel_operator(ball, weight)))
print("diagonal operator:", format_polynomial(diagonal_seidel(ball)))
sh = symplectic_cohomology(problem)
print("inverted forms:", ", ".join(format_polynomial(f) for f in sh.inverted_factors()))

print()
print("== section images of the weight-pair generators ==")
x = ring.z(0) * (ring.mu() - ring.tau(0))
y = ring.z(0) ** -1 * (ring.mu() + ring.tau(0))
for label, element in [("x", x), ("y", y), ("x*y", x * y), ("z", ring.z(0))]:
    image = section_homomorphism(ring, element)
    tag = "polynomial" if acceleration_membership(image) else "localized only"
    print(f"S({label}) = {format_element(image)}  [{tag}]")

print()
print("== the SU(2) diagram ==")
su2 = ambient_table(CoulombProblem.make(0, 1, [(1,), (-1,)]))
report = verify_diagram(su2, standard_block_generators(su2))
for entry in report.entries:
    print(f"S({entry.name}) = {format_element(entry.image)}")
print("diagram passes:", report.passed)

print()
print("== a tuned cancellation (the converse is only generic) ==")
f = ring.z(0) * ring.mu().scaled(-2) + ring.z(0) ** 2 * (ring.mu() - ring.tau(0))
result = matter_membership(ring, f)
image = section_homomorphism(ring, f)
print("f = -2*mu*z + (mu - tau)*z^2")
print("member:", result.member, "| pole along:", format_polynomial(result.offending))
print("S(f) =", format_element(image), "| polynomial image:", acceleration_membership(image))
