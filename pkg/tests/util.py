"""Shared comparison helpers for the test suite."""

import math

TWO_PI = 2.0 * math.pi


def close(x: float, y: float, rel: float = 1e-9, abs_eps: float = 1e-12) -> bool:
    return abs(x - y) <= max(abs_eps, rel * max(abs(x), abs(y)))


def angle_close(x: float, y: float, tol: float = 1e-9) -> bool:
    """Closeness modulo a full turn."""
    d = abs(x - y) % TWO_PI
    return min(d, TWO_PI - d) <= tol


def vec_close(xs, ys, rel: float = 1e-9, abs_eps: float = 1e-12) -> bool:
    """Componentwise closeness against the joint magnitude scale."""
    xs, ys = tuple(xs), tuple(ys)
    assert len(xs) == len(ys)
    scale = max(max(abs(v) for v in xs), max(abs(v) for v in ys), 0.0)
    allow = max(abs_eps, rel * scale)
    return all(abs(a - b) <= allow for a, b in zip(xs, ys))
