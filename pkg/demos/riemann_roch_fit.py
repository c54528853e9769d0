"""
Recovering the Riemann-Roch polynomial from lattice counts
==========================================================

Count lattice points in 30 moment polytopes, solve for the quadratic in
(a1, ..., a5) through those counts, and evaluate it where no polytope
exists: the regular pentagon.
"""

from pentaspace import REGULAR, fit_rr_polynomial, moment_lattice_count, sample_tuples
from pentaspace.invariants import MONOMIALS, symplectic_volume

tuples = sample_tuples(30, seed=0)
samples = [(a, moment_lattice_count(a)) for a in tuples]
for a, n in samples[:5]:
    print([int(v) for v in a], "->", n)

poly = fit_rr_polynomial(samples)
for m in MONOMIALS[:8]:
    print(f"{poly.coefficient(m)!s:>5}  {m}")

# symmetric in all five edges, though the polytopes are not
print("symmetric:", poly.is_symmetric())

# leading part is the symplectic volume
q = poly.homogeneous_part(2)
print("volume check:", all(q(a) == symplectic_volume(a) for a in tuples))

# (1,1,1,1,1) has a1 == a2, so there is no polytope to count; the polynomial still applies
print("RR at the regular pentagon:", poly(REGULAR))
