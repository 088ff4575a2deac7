"""The geometric reading of the polar form.

A point is built from the real axis by a chain of in-plane rotations: each
step tilts the current position toward the next imaginary axis inside the
2-plane they span.  The endpoint coincides with the trigonometric
conversion, every intermediate keeps the radius (rotations are isometries),
and axes orthogonal to a rotation plane are exactly fixed -- the absorption
property that makes the coefficient expression work.
"""

import math

from hyperspace import Orientation, PolarHC, build_by_rotations, from_polar
from hyperspace.rotation import RotationChain, apply_plane_rotation, trajectory

# Two quarter turns send the real axis onto the second imaginary axis.
chain = RotationChain(2.0, ((1, math.pi / 2), (2, math.pi / 2)), 3)
print("two quarter turns ->", build_by_rotations(chain))

# A generic chain agrees with from_polar step for step.
p = PolarHC(1.5, (0.9, -0.4, 0.7, 0.2), Orientation.ANTICLOCKWISE)
chain = RotationChain(p.modulus, tuple((k + 1, a) for k, a in enumerate(p.angles)), 5)
print("chain endpoint    =", build_by_rotations(chain))
print("from_polar        =", from_polar(p))

print("radii along the way:")
for step, point in enumerate(trajectory(chain)):
    print(f"  after step {step}: |P| = {math.hypot(*point):.15f}")

# Absorption: the rotation below never moves an axis above it.
e3 = (0.0, 0.0, 0.0, 1.0, 0.0)
u = (0.3, -1.2, 0.0, 0.0, 0.0)  # a plane spanned inside the first axes
rotated = apply_plane_rotation(e3, u, 2, 1.234)
print("axis 3 after a rotation in the (u, axis-2) plane:", rotated)
print("unchanged bit for bit:", rotated == e3)
