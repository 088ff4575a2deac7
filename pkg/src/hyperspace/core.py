"""Value types for N-dimensional space complex numbers.

A number lives in an N-dimensional right-angular coordinate system with one
real axis and N-1 imaginary axes.  It can be written as a coefficient vector
(a_0, ..., a_{N-1}) or in polar form as a modulus together with a chain of
N-1 rotation angles.  Two angle conventions exist, distinguished by the
order in which the rotation chain is accumulated:

* anticlockwise -- the chain climbs from the real axis upward; the angle
  adjacent to the real axis (theta_1) carries the full range [0, 2*pi), the
  remaining angles are ratios against a nonnegative running sub-modulus and
  live in [-pi/2, pi/2].
* clockwise -- the mirror convention; theta_{N-1} carries the full range.

``to_polar`` always returns angles in those canonical ranges.  ``PolarHC``
itself is deliberately lenient: angle chains produced by arithmetic (sums,
scalings) may leave the canonical ranges and are still meaningful inputs to
``from_polar``, which is 2*pi-periodic in every angle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi


class DimensionMismatchError(ValueError):
    """Raised when two numbers of different dimension are combined."""


class Orientation(Enum):
    """Direction in which the rotation chain is accumulated."""

    ANTICLOCKWISE = "ccw"
    CLOCKWISE = "cw"


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Absolute/relative comparison budget for floating-point equality."""

    abs_eps: float = 1e-12
    rel_eps: float = 1e-9

    def __post_init__(self) -> None:
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise ValueError("tolerance components must be strictly positive")


DEFAULT_TOLERANCE = Tolerance()


@dataclass(frozen=True, slots=True)
class CartesianHC:
    """Coordinate form: finite real coefficients (a_0, ..., a_{N-1}), N >= 2."""

    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) < 2:
            raise ValueError(f"need at least 2 coefficients, got {len(coeffs)}")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError(f"coefficients must be finite, got {coeffs}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> float:
        return self.coeffs[k]

    def __repr__(self) -> str:
        body = ",".join(format(c, ".17g") for c in self.coeffs)
        return f"c[{body}]"


@dataclass(frozen=True, slots=True)
class PolarHC:
    """Polar form: modulus >= 0 plus the angle chain (theta_1 ... theta_{N-1}).

    Canonical instances (as produced by :func:`to_polar`) keep the full-range
    angle in [0, 2*pi), the remaining angles in [-pi/2, pi/2], and force all
    angles to zero when the modulus is zero.  Non-canonical chains are legal
    values; :func:`canonicalize` maps them to the canonical representative of
    the same point.
    """

    modulus: float
    angles: tuple[float, ...]
    orientation: Orientation = Orientation.ANTICLOCKWISE

    def __post_init__(self) -> None:
        modulus = float(self.modulus)
        angles = tuple(float(a) for a in self.angles)
        if not (math.isfinite(modulus) and modulus >= 0.0):
            raise ValueError(f"modulus must be finite and >= 0, got {modulus}")
        if len(angles) < 1:
            raise ValueError("need at least one angle (dim >= 2)")
        if not all(math.isfinite(a) for a in angles):
            raise ValueError(f"angles must be finite, got {angles}")
        if not isinstance(self.orientation, Orientation):
            raise TypeError(f"bad orientation: {self.orientation!r}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "angles", angles)

    @property
    def dim(self) -> int:
        return len(self.angles) + 1

    def is_canonical(self, slack: float = 0.0) -> bool:
        full = self._full_range_index()
        if self.modulus == 0.0:
            return all(a == 0.0 for a in self.angles)
        for k, a in enumerate(self.angles):
            if k == full:
                if not (-slack <= a < TWO_PI + slack):
                    return False
            elif not (-HALF_PI - slack <= a <= HALF_PI + slack):
                return False
        return True

    def _full_range_index(self) -> int:
        return 0 if self.orientation is Orientation.ANTICLOCKWISE else len(self.angles) - 1

    def __repr__(self) -> str:
        body = ",".join(format(a, ".17g") for a in self.angles)
        tag = self.orientation.value
        return f"p[{format(self.modulus, '.17g')}; {body}; {tag}]"


def modulus(s: CartesianHC) -> float:
    """Euclidean norm of the coefficient vector; zero iff all coefficients are."""
    return math.hypot(*s.coeffs)


def arguments(
    s: CartesianHC, orientation: Orientation = Orientation.ANTICLOCKWISE
) -> tuple[float, ...]:
    """Canonical component arguments of ``s`` under the given orientation.

    Anticlockwise: theta_1 is the quadrant-resolved angle of (a_0, a_1)
    shifted to [0, 2*pi); for k >= 2, theta_k = atan2(a_k, m_{k-1}) against
    the running sub-modulus m_{k-1} = sqrt(a_0^2 + ... + a_{k-1}^2) >= 0, so
    it lands in [-pi/2, pi/2].  Clockwise mirrors the index order.  A zero
    sub-modulus degenerates to +-pi/2 by the sign of a_k (0 when a_k = 0),
    and a zero number yields the all-zero chain.
    """
    c = s.coeffs
    n = len(c)
    if modulus(s) == 0.0:
        return (0.0,) * (n - 1)
    if orientation is Orientation.ANTICLOCKWISE:
        full = math.atan2(c[1], c[0])
        if full < 0.0:
            full += TWO_PI
        angles = [full]
        m = math.hypot(c[0], c[1])
        for k in range(2, n):
            angles.append(math.atan2(c[k], m))
            m = math.hypot(m, c[k])
        return tuple(angles)
    full = math.atan2(c[n - 1], c[0])
    if full < 0.0:
        full += TWO_PI
    m = math.hypot(c[0], c[n - 1])
    rest: list[float] = []
    for k in range(n - 2, 0, -1):
        rest.append(math.atan2(c[k], m))
        m = math.hypot(m, c[k])
    rest.reverse()
    return tuple(rest) + (full,)


def to_polar(
    s: CartesianHC, orientation: Orientation = Orientation.ANTICLOCKWISE
) -> PolarHC:
    """Canonical polar form of ``s``: (modulus, component arguments)."""
    return PolarHC(modulus(s), arguments(s, orientation), orientation)


def from_polar(p: PolarHC) -> CartesianHC:
    """Coordinate form of a polar value.

    Anticlockwise: a_0 = r * prod(cos theta_k), a_k = r * sin(theta_k) *
    prod_{j>k} cos(theta_j); clockwise uses the leading cosine product
    instead.  Defined for arbitrary finite angle chains (2*pi-periodic in
    each angle), not just canonical ones.
    """
    th = p.angles
    n = len(th) + 1
    r = p.modulus
    cos = [math.cos(a) for a in th]
    sin = [math.sin(a) for a in th]
    out = [0.0] * n
    if p.orientation is Orientation.ANTICLOCKWISE:
        # suffix[k] = prod_{j >= k} cos(theta_j), 1-indexed angles
        suffix = [1.0] * (n + 1)
        for j in range(n - 1, 0, -1):
            suffix[j] = suffix[j + 1] * cos[j - 1]
        out[0] = r * suffix[1]
        for k in range(1, n):
            out[k] = r * sin[k - 1] * suffix[k + 1]
    else:
        prefix = [1.0] * (n + 1)
        for j in range(1, n):
            prefix[j] = prefix[j - 1] * cos[j - 1]
        out[0] = r * prefix[n - 1]
        for k in range(1, n):
            out[k] = r * sin[k - 1] * prefix[k - 1]
    return CartesianHC(tuple(out))


def canonicalize(p: PolarHC) -> PolarHC:
    """Canonical representative of the point ``p`` denotes."""
    return to_polar(from_polar(p), p.orientation)


def conjugate(s: CartesianHC) -> CartesianHC:
    """Flip the sign of every imaginary coefficient.

    Equivalently: same modulus, every chain angle negated (then
    canonicalized).
    """
    c = s.coeffs
    return CartesianHC((c[0],) + tuple(-x for x in c[1:]))


def approx_eq(
    s1: CartesianHC, s2: CartesianHC, tol: Tolerance = DEFAULT_TOLERANCE
) -> bool:
    """Coefficientwise comparison within max(abs_eps, rel_eps * max magnitude).

    The scale is the largest coefficient magnitude across both operands, so
    components that should vanish are judged against the size of the number,
    not against themselves.
    """
    if s1.dim != s2.dim:
        raise DimensionMismatchError(f"dimension mismatch: {s1.dim} != {s2.dim}")
    scale = max(max(abs(x) for x in s1.coeffs), max(abs(x) for x in s2.coeffs))
    allow = max(tol.abs_eps, tol.rel_eps * scale)
    return all(abs(x - y) <= allow for x, y in zip(s1.coeffs, s2.coeffs))


def to_dict(number: CartesianHC | PolarHC) -> dict:
    """JSON-ready encoding; round-trips bit-exactly for finite doubles."""
    if isinstance(number, CartesianHC):
        return {"kind": "cartesian", "coeffs": list(number.coeffs)}
    if isinstance(number, PolarHC):
        return {
            "kind": "polar",
            "modulus": number.modulus,
            "angles": list(number.angles),
            "orientation": number.orientation.value,
        }
    raise TypeError(f"not a hyperspace number: {number!r}")


def from_dict(payload: dict) -> CartesianHC | PolarHC:
    """Inverse of :func:`to_dict`."""
    kind = payload.get("kind")
    if kind == "cartesian":
        return CartesianHC(tuple(payload["coeffs"]))
    if kind == "polar":
        return PolarHC(
            payload["modulus"],
            tuple(payload["angles"]),
            Orientation(payload["orientation"]),
        )
    raise ValueError(f"unknown number kind: {kind!r}")
