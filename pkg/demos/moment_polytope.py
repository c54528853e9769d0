"""
Moment polytope of a pentagon space
===================================

Build the heptagon for edge lengths (3, 2, 3, 3, 2), count its lattice
points two ways and write an SVG picture to the working directory.
"""

from pathlib import Path

from pentaspace import EdgeLengths, moment_polytope, render_polytope_svg
from pentaspace.geometry import area, boundary_lattice_count, lattice_count_brute, pick_count

a = EdgeLengths((3, 2, 3, 3, 2))
mp = moment_polytope(a)
P = mp.polygon

print("vertices:", [(int(v.x), int(v.y)) for v in P])
print("cut corners:", sorted(mp.cut_corners))

# Pick: points = area + boundary/2 + 1
print("area", area(P), "boundary", boundary_lattice_count(P))
print("pick", pick_count(P), "scan", lattice_count_brute(P))

# the same polygon comes out when a1<->a2 and a4<->a5 are swapped
swapped = moment_polytope(EdgeLengths((2, 3, 3, 2, 3)))
print("swap flags:", swapped.swapped, "same polygon:", swapped.polygon == P)

out = Path("moment_polytope.svg")
out.write_text(render_polytope_svg(mp))
print("wrote", out)
