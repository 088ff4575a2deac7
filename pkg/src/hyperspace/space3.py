"""Three-dimensional space complex numbers in polar coordinates.

A number s = a + i*b + j*c combines a real part, a master imaginary part on
the classic complex plane C_xy, and a slave imaginary part on the third
axis.  The slave unit j is the composition of the two plane units (j = i *
i_j) and its powers cycle with period four: j^2 = -1, j^3 = -j, j^4 = 1.

Polar form uses a master argument theta (angle off the real axis, canonical
range [0, pi] because the in-plane radius sqrt(b^2 + c^2) is nonnegative)
and a slave argument phi (azimuth inside the imaginary plane, [0, 2*pi)).
The normative product/quotient act on the exponent form: moduli multiply and
both angles add.  The expanded coefficient formulas (``mul3_coeffs`` /
``div3_coeffs``) are evaluated literally for the audit harness and are not
used by the normative route.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import TWO_PI, Tolerance, DEFAULT_TOLERANCE


@dataclass(frozen=True, slots=True)
class Space3:
    """Coordinate form (a, b, c) on axes x, y, z."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, name, v)

    @property
    def coeffs(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def __repr__(self) -> str:
        return f"s3[{self.a:.17g},{self.b:.17g},{self.c:.17g}]"


@dataclass(frozen=True, slots=True)
class Space3Polar:
    """Exponent form: modulus, master angle theta, slave angle phi.

    Canonical instances keep theta in [0, pi] and phi in [0, 2*pi), with
    phi = 0 whenever theta is polar (0 or pi) and theta = phi = 0 for the
    zero number.  Like the N-dimensional polar type, arbitrary finite angle
    pairs are legal values for the angle-level arithmetic.
    """

    modulus: float
    theta: float
    phi: float

    def __post_init__(self) -> None:
        m = float(self.modulus)
        if not (math.isfinite(m) and m >= 0.0):
            raise ValueError(f"modulus must be finite and >= 0, got {m}")
        th, ph = float(self.theta), float(self.phi)
        if not (math.isfinite(th) and math.isfinite(ph)):
            raise ValueError(f"angles must be finite, got {th}, {ph}")
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "theta", th)
        object.__setattr__(self, "phi", ph)

    def __repr__(self) -> str:
        return f"s3p[{self.modulus:.17g}; {self.theta:.17g}, {self.phi:.17g}]"


@dataclass(frozen=True, slots=True)
class SlaveDecomposition:
    """Slave coefficient split against the master phase: c_r = c*cos(theta),
    c_i = c*sin(theta), so c_r^2 + c_i^2 = c^2."""

    c_r: float
    c_i: float


ONE = Space3(1.0, 0.0, 0.0)
I_UNIT = Space3(0.0, 1.0, 0.0)
J_UNIT = Space3(0.0, 0.0, 1.0)


def j_pow(n: int) -> Space3:
    """The four-cycle of slave-unit powers: 1, j, -1, -j for n mod 4."""
    table = (ONE, J_UNIT, Space3(-1.0, 0.0, 0.0), Space3(0.0, 0.0, -1.0))
    return table[int(n) % 4]


def modulus3(s: Space3) -> float:
    return math.hypot(s.a, s.b, s.c)


def to_polar3(s: Space3) -> Space3Polar:
    """Canonical polar form: theta = atan2(sqrt(b^2+c^2), a) in [0, pi],
    phi = atan2(c, b) shifted to [0, 2*pi); poles collapse phi to 0."""
    r = modulus3(s)
    if r == 0.0:
        return Space3Polar(0.0, 0.0, 0.0)
    r_yz = math.hypot(s.b, s.c)
    theta = math.atan2(r_yz, s.a)
    if r_yz == 0.0:
        return Space3Polar(r, theta, 0.0)
    phi = math.atan2(s.c, s.b)
    if phi < 0.0:
        phi += TWO_PI
    return Space3Polar(r, theta, phi)


def from_polar3(p: Space3Polar) -> Space3:
    """a = r*cos(theta), b = r*sin(theta)*cos(phi), c = r*sin(theta)*sin(phi)."""
    r = p.modulus
    st = math.sin(p.theta)
    return Space3(
        r * math.cos(p.theta),
        r * st * math.cos(p.phi),
        r * st * math.sin(p.phi),
    )


def slave_decompose(s: Space3) -> SlaveDecomposition:
    """Split the slave coefficient against the number's own master argument."""
    theta = to_polar3(s).theta
    return SlaveDecomposition(s.c * math.cos(theta), s.c * math.sin(theta))


def conj3(s: Space3) -> Space3:
    """Both imaginary parts negated: (a, -b, -c)."""
    return Space3(s.a, -s.b, -s.c)


def conj3_polar(p: Space3Polar) -> Space3Polar:
    """Conjugate chain (r, -theta, phi): negating the master angle negates
    both imaginary coefficients while the azimuth is untouched.  The chain is
    non-canonical for theta > 0; it exists so the conjugate identity
    s * conj(s) = |s|^2 can be evaluated at the angle level, where the master
    angles cancel exactly."""
    return Space3Polar(p.modulus, -p.theta, p.phi)


S3Number = Space3 | Space3Polar


def _as_polar3(x: S3Number) -> Space3Polar:
    return x if isinstance(x, Space3Polar) else to_polar3(x)


def mul3_polar(p1: Space3Polar, p2: Space3Polar) -> Space3Polar:
    """Moduli multiply, master and slave angles add; no canonicalization."""
    return Space3Polar(
        p1.modulus * p2.modulus, p1.theta + p2.theta, p1.phi + p2.phi
    )


def div3_polar(p1: Space3Polar, p2: Space3Polar) -> Space3Polar:
    """Moduli divide, both angles subtract; raises on a zero divisor."""
    if p2.modulus == 0.0:
        raise ZeroDivisionError("division by a zero-modulus number")
    return Space3Polar(
        p1.modulus / p2.modulus, p1.theta - p2.theta, p1.phi - p2.phi
    )


def mul3(s1: S3Number, s2: S3Number) -> Space3:
    """Normative product via the exponent form."""
    return from_polar3(mul3_polar(_as_polar3(s1), _as_polar3(s2)))


def div3(s1: S3Number, s2: S3Number) -> Space3:
    """Normative quotient via the exponent form."""
    return from_polar3(div3_polar(_as_polar3(s1), _as_polar3(s2)))


def pow_roots3(s: S3Number, n: int) -> tuple[Space3, tuple[Space3, ...]]:
    """n-th power (angles scaled by n) and all n roots (angles
    (angle + 2*m*pi)/n for m = 0 ... n-1, applied to theta and phi alike)."""
    n = int(n)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    p = _as_polar3(s)
    power = from_polar3(
        Space3Polar(math.pow(p.modulus, n), n * p.theta, n * p.phi)
    )
    r = math.pow(p.modulus, 1.0 / n)
    roots = tuple(
        from_polar3(
            Space3Polar(
                r,
                (p.theta + 2.0 * math.pi * m) / n,
                (p.phi + 2.0 * math.pi * m) / n,
            )
        )
        for m in range(n)
    )
    return power, roots


@dataclass(frozen=True, slots=True)
class Space3Breakdown:
    """Literal output of the expanded coefficient formulas.

    ``a``, ``b``, ``c`` and ``theta`` are the raw formula values; ``c_r`` /
    ``c_i`` are the direct slave-component formulas (diagnostics -- on
    general operands they need not agree with c*e^(i*theta)).  ``assembled``
    folds the slave part to a coordinate triple: a half-turn of the master
    phase is extracted as a scalar sign (e^(i*theta) = -e^(i*(theta-pi)))
    and the residual rotation is absorbed, giving z = c * sign(cos theta).
    """

    a: float
    b: float
    c: float
    theta: float
    c_r: float
    c_i: float

    @property
    def assembled(self) -> Space3:
        z = self.c if math.cos(self.theta) >= 0.0 else -self.c
        return Space3(self.a, self.b, z)


def mul3_coeffs(s1: Space3, s2: Space3) -> Space3Breakdown:
    """Expanded product coefficients, evaluated literally (audit route).

    a = a1*a2 - b1*b2 - c1r*c2r + c1i*c2i
    b = b1*a2 + b2*a1 - c1r*c2i - c1i*c2r
    c = c1*r2 + c2*r1 with r_k = sqrt(a_k^2 + b_k^2)
    theta = theta1 + theta2
    c_r, c_i by the componentwise slave product.
    """
    d1, d2 = slave_decompose(s1), slave_decompose(s2)
    t1, t2 = to_polar3(s1).theta, to_polar3(s2).theta
    r1 = math.hypot(s1.a, s1.b)
    r2 = math.hypot(s2.a, s2.b)
    a = s1.a * s2.a - s1.b * s2.b - d1.c_r * d2.c_r + d1.c_i * d2.c_i
    b = s1.b * s2.a + s2.b * s1.a - d1.c_r * d2.c_i - d1.c_i * d2.c_r
    c = s1.c * r2 + s2.c * r1
    c_r = d1.c_r * s2.a + d2.c_r * s1.a - d1.c_i * s2.b - d2.c_i * s1.b
    c_i = d1.c_i * s2.a + d2.c_i * s1.a + d1.c_r * s2.b + d2.c_r * s1.b
    return Space3Breakdown(a, b, c, t1 + t2, c_r, c_i)


def div3_coeffs(s1: Space3, s2: Space3) -> Space3Breakdown:
    """Expanded quotient coefficients, evaluated literally (audit route).

    a = (a1*a2 + b1*b2 + c1r*c2r + c1i*c2i) / |s2|^2
    b = (b1*a2 - b2*a1 + c1r*c2i - c1i*c2r) / |s2|^2
    c = (c1*r2 - c2*r1) / |s2|^2
    theta = theta1 - theta2
    The b numerator follows the expansion (b1*a2 - b2*a1), which is the
    version consistent with the classic quotient on the c = 0 subplane.
    """
    m2 = modulus3(s2)
    if m2 == 0.0:
        raise ZeroDivisionError("division by a zero-modulus number")
    inv = 1.0 / (m2 * m2)
    d1, d2 = slave_decompose(s1), slave_decompose(s2)
    t1, t2 = to_polar3(s1).theta, to_polar3(s2).theta
    r1 = math.hypot(s1.a, s1.b)
    r2 = math.hypot(s2.a, s2.b)
    a = inv * (s1.a * s2.a + s1.b * s2.b + d1.c_r * d2.c_r + d1.c_i * d2.c_i)
    b = inv * (s1.b * s2.a - s2.b * s1.a + d1.c_r * d2.c_i - d1.c_i * d2.c_r)
    c = inv * (s1.c * r2 - s2.c * r1)
    c_r = (d1.c_r * s2.a - d2.c_r * s1.a) + (d1.c_i * s2.b - d2.c_i * s1.b)
    c_i = (d1.c_i * s2.a + d2.c_i * s1.a) - (d1.c_r * s2.b + d2.c_r * s1.b)
    return Space3Breakdown(a, b, c, t1 - t2, c_r, c_i)


def approx_eq3(s1: Space3, s2: Space3, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """Coefficientwise comparison, scaled like the N-dimensional version."""
    scale = max(abs(v) for v in s1.coeffs + s2.coeffs)
    allow = max(tol.abs_eps, tol.rel_eps * scale)
    return all(abs(x - y) <= allow for x, y in zip(s1.coeffs, s2.coeffs))


def to_dict3(number: Space3 | Space3Polar) -> dict:
    """JSON-ready encoding of a 3D number."""
    if isinstance(number, Space3):
        return {"kind": "space3", "a": number.a, "b": number.b, "c": number.c}
    if isinstance(number, Space3Polar):
        return {
            "kind": "space3polar",
            "modulus": number.modulus,
            "theta": number.theta,
            "phi": number.phi,
        }
    raise TypeError(f"not a 3D space number: {number!r}")


def from_dict3(payload: dict) -> Space3 | Space3Polar:
    """Inverse of :func:`to_dict3`."""
    kind = payload.get("kind")
    if kind == "space3":
        return Space3(payload["a"], payload["b"], payload["c"])
    if kind == "space3polar":
        return Space3Polar(payload["modulus"], payload["theta"], payload["phi"])
    raise ValueError(f"unknown number kind: {kind!r}")
