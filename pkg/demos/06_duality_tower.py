"""Growing dimensions one coefficient at a time.

A nonzero n-dimensional number lifts to n+1 dimensions by adjoining a dual
imaginary copy of itself scaled by a new coefficient.  In coordinates this
appends the coefficient; in polar terms the modulus grows like a hypotenuse
and the angle chain gains one link while the old links stay put.  Iterating
from the plane rebuilds any number whose leading two coefficients are not
both zero.
"""

import math

from hyperspace import CartesianHC, lift, modulus, to_polar

# The 3-4-5 triangle grows into the 5-12-13 one.
base = CartesianHC((3.0, 4.0))
print("base      =", base, " |.| =", modulus(base))
grown = lift(base, 12.0)
print("lifted    =", grown, " |.| =", modulus(grown))

# Angle bookkeeping: old chain preserved, one link appended.
print("old chain =", to_polar(base).angles)
print("new chain =", to_polar(grown).angles)
print("appended  =", math.atan2(12.0, modulus(base)))

# A full tower from the plane to dimension 6.
tower = CartesianHC((1.0, 1.0))
for coefficient in (2.0, -3.0, 0.5, 4.0):
    tower = lift(tower, coefficient)
    print(f"dim {tower.dim}: {tower}  |.| = {modulus(tower):.6f}")

# The lift needs a direction to copy, so the zero number stays grounded.
try:
    lift(CartesianHC((0.0, 0.0)), 1.0)
except ZeroDivisionError as err:
    print("lift of zero ->", err)
