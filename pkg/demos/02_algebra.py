"""Arithmetic: moduli multiply, angle chains add.

Products, quotients, powers and roots are defined on the polar form.  The
polar-level primitives compose exactly; the coordinate projection is a
many-to-one view from dimension 3 upward, which is why chained products
should stay in polar form until display.
"""

from hyperspace import (
    CartesianHC,
    PolarHC,
    add,
    div_polar,
    from_polar,
    mul,
    mul_polar,
    nth_roots,
    nth_roots_polar,
    pow_int,
    pow_int_polar,
    to_polar,
)

# Classic sanity check: (1+i)^2 = 2i.
one_plus_i = CartesianHC((1.0, 1.0))
print("(1+i)^2        =", mul(one_plus_i, one_plus_i))

# The same machinery in dimension 4.
s1 = CartesianHC((1.0, 2.0, -1.0, 0.5))
s2 = CartesianHC((0.5, -1.0, 2.0, 1.0))
prod = mul(s1, s2)
print("s1 * s2        =", prod)
print("moduli         =", to_polar(s1).modulus * to_polar(s2).modulus,
      "vs", to_polar(prod).modulus)

# Quotient roundtrip, composed at the angle level (a coordinate-form
# intermediate would forget which chain produced it).
q = div_polar(to_polar(s1), to_polar(s2))
print("quotient check =", from_polar(mul_polar(q, to_polar(s2))))

# Integer powers follow the de Moivre pattern: modulus to the n, angles
# times n.  Compare against an explicit fold at the angle level.
p1 = to_polar(s1)
acc = PolarHC(1.0, (0.0, 0.0, 0.0))
for _ in range(5):
    acc = mul_polar(acc, p1)
print("s1^5           =", pow_int(s1, 5))
print("fold of five   =", from_polar(acc))

# All n-th roots: the chains pick up 2*pi*m/n in every angle.  Each root
# powers back to the radicand along its own chain.
radicand = CartesianHC((0.0, 0.0, 8.0))
for m, (chain, point) in enumerate(
    zip(nth_roots_polar(to_polar(radicand), 3), nth_roots(radicand, 3))
):
    back = from_polar(pow_int_polar(chain, 3))
    print(f"cube root {m}    = {point}  -> cubed: {back}")

# Addition is coordinatewise, as in any vector space.
print("s1 + s2        =", add(s1, s2))
