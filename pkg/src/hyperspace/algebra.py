"""Normative arithmetic for N-dimensional space complex numbers.

Addition and subtraction act coefficientwise on the coordinate form.
Multiplication, division, integer powers and n-th roots are defined on the
polar form: moduli combine multiplicatively and angle chains add (or
subtract, or scale) componentwise.

The polar-level primitives (``mul_polar`` and friends) perform no
canonicalization, so the compositional identities of the system --
associativity, de Moivre power-vs-fold, division/multiplication round trips
-- hold there to floating-point accuracy.  The coordinate-form wrappers
(``mul`` and friends) accept operands in either representation, convert
Cartesian operands to canonical polar once, and project the result back to
coordinates.  Projecting and re-deriving canonical angles between successive
products is *not* the same thing as staying in polar form: the coordinate
projection is many-to-one for N >= 3, which is precisely what the audit
module measures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    CartesianHC,
    DimensionMismatchError,
    Orientation,
    PolarHC,
    from_polar,
    to_polar,
)

HCNumber = CartesianHC | PolarHC


@dataclass(frozen=True, slots=True)
class RootSet:
    """All n-th roots of a radicand, indexed m = 0 ... n-1.

    Each element, raised to the n-th power along its construction chain
    (``pow_int_polar`` on the matching ``nth_roots_polar`` entry), reproduces
    the radicand; the principal root (m = 0) also powers back directly from
    its coordinate form, since its chain is canonical.  For a nonzero
    radicand the elements are pairwise distinct.
    """

    roots: tuple[CartesianHC, ...]

    def __post_init__(self) -> None:
        if not self.roots:
            raise ValueError("a root set holds at least one root")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, m: int) -> CartesianHC:
        return self.roots[m]


def add(s1: CartesianHC, s2: CartesianHC) -> CartesianHC:
    """Coefficientwise sum."""
    if s1.dim != s2.dim:
        raise DimensionMismatchError(f"dimension mismatch: {s1.dim} != {s2.dim}")
    return CartesianHC(tuple(x + y for x, y in zip(s1.coeffs, s2.coeffs)))


def negate(s: CartesianHC) -> CartesianHC:
    """Coefficientwise negation."""
    return CartesianHC(tuple(-x for x in s.coeffs))


def sub(s1: CartesianHC, s2: CartesianHC) -> CartesianHC:
    """s1 - s2, i.e. add(s1, negate(s2))."""
    return add(s1, negate(s2))


def _resolve_orientation(
    orientation: Orientation | None, *operands: HCNumber
) -> Orientation:
    seen = {p.orientation for p in operands if isinstance(p, PolarHC)}
    if orientation is not None:
        seen.add(orientation)
    if len(seen) > 1:
        raise ValueError(f"conflicting orientations: {sorted(o.value for o in seen)}")
    return seen.pop() if seen else Orientation.ANTICLOCKWISE


def as_polar(x: HCNumber, orientation: Orientation | None = None) -> PolarHC:
    """Polar view of ``x``: canonical conversion for Cartesian, pass-through
    for polar (the carried chain is preserved, not re-canonicalized)."""
    o = _resolve_orientation(orientation, x)
    if isinstance(x, PolarHC):
        return x
    return to_polar(x, o)


def as_cartesian(x: HCNumber) -> CartesianHC:
    """Coordinate view of ``x``."""
    return x if isinstance(x, CartesianHC) else from_polar(x)


def _check_dims(*xs: HCNumber) -> None:
    dims = {x.dim for x in xs}
    if len(dims) > 1:
        raise DimensionMismatchError(f"dimension mismatch: {sorted(dims)}")


def mul_polar(p1: PolarHC, p2: PolarHC) -> PolarHC:
    """Moduli multiply, angle chains add; no canonicalization."""
    _check_dims(p1, p2)
    o = _resolve_orientation(None, p1, p2)
    return PolarHC(
        p1.modulus * p2.modulus,
        tuple(a + b for a, b in zip(p1.angles, p2.angles)),
        o,
    )


def div_polar(p1: PolarHC, p2: PolarHC) -> PolarHC:
    """Moduli divide, angle chains subtract; raises on a zero divisor."""
    _check_dims(p1, p2)
    o = _resolve_orientation(None, p1, p2)
    if p2.modulus == 0.0:
        raise ZeroDivisionError("division by a zero-modulus number")
    return PolarHC(
        p1.modulus / p2.modulus,
        tuple(a - b for a, b in zip(p1.angles, p2.angles)),
        o,
    )


def pow_int_polar(p: PolarHC, n: int) -> PolarHC:
    """Modulus to the n-th power, every chain angle scaled by n."""
    n = int(n)
    if p.modulus == 0.0 and n < 0:
        raise ZeroDivisionError("negative power of a zero-modulus number")
    return PolarHC(
        math.pow(p.modulus, n),
        tuple(n * a for a in p.angles),
        p.orientation,
    )


def nth_roots_polar(p: PolarHC, n: int) -> tuple[PolarHC, ...]:
    """The n chains ((theta_k + 2*m*pi)/n for every k), m = 0 ... n-1."""
    n = int(n)
    if n < 1:
        raise ValueError(f"root order must be >= 1, got {n}")
    r = math.pow(p.modulus, 1.0 / n)
    out = []
    for m in range(n):
        shift = 2.0 * math.pi * m
        out.append(
            PolarHC(r, tuple((a + shift) / n for a in p.angles), p.orientation)
        )
    return tuple(out)


def mul(
    s1: HCNumber, s2: HCNumber, orientation: Orientation | None = None
) -> CartesianHC:
    """Product in coordinate form; the result modulus is |s1|*|s2|."""
    _check_dims(s1, s2)
    o = _resolve_orientation(orientation, s1, s2)
    return from_polar(mul_polar(as_polar(s1, o), as_polar(s2, o)))


def div(
    s1: HCNumber, s2: HCNumber, orientation: Orientation | None = None
) -> CartesianHC:
    """Quotient in coordinate form; raises on a zero divisor."""
    _check_dims(s1, s2)
    o = _resolve_orientation(orientation, s1, s2)
    return from_polar(div_polar(as_polar(s1, o), as_polar(s2, o)))


def pow_int(
    s: HCNumber, n: int, orientation: Orientation | None = None
) -> CartesianHC:
    """Integer power in coordinate form (negative n needs a nonzero modulus)."""
    o = _resolve_orientation(orientation, s)
    return from_polar(pow_int_polar(as_polar(s, o), n))


def nth_roots(
    s: HCNumber, n: int, orientation: Orientation | None = None
) -> RootSet:
    """All n-th roots in coordinate form (roots of zero are all zero)."""
    o = _resolve_orientation(orientation, s)
    chains = nth_roots_polar(as_polar(s, o), n)
    return RootSet(tuple(from_polar(p) for p in chains))
