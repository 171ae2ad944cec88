"""Singularity-aware numeric quadrature for log-tangent integrals.

This is the independent numeric oracle for the closed forms elsewhere in the
package.  Integration uses tanh-sinh (double-exponential) node clustering on
each side of a split at ``pi/4``, which absorbs the logarithmic endpoint
singularities of ``log tan`` without any special-casing.  Nodes never touch
the interval endpoints; points near ``pi/2`` are represented through their
distance to the endpoint so the weight stays accurate there.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .core import PI_FRACTION, Polynomial

HALF_PI = math.pi / 2
QUARTER_PI = math.pi / 4

DEFAULT_MAX_LEVELS = 12
MAX_LEVELS_ENV = "LOGTAN_MAX_LEVELS"

_T_MAX = 6.1


class QuadratureError(ArithmeticError):
    """Raised when an integrand sample is not finite."""


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate; est_error is the difference of the last two levels."""

    value: float
    est_error: float
    levels_used: int


class FunctionSpec:
    """A named integrand from the fixed catalog, evaluable on ``(0, pi/2)``.

    Kinds: ``polynomial``, ``monomial``, ``sqrt``, ``exp2z``, ``cos2z``,
    ``sinh_shift``, ``logtan_power``, ``logsine_x``.  Construct through the
    classmethods.  ``value(x, dist_top)`` evaluates at ``x``; ``dist_top`` is
    the distance to ``pi/2``, used to keep ``log tan`` accurate near that
    endpoint.
    """

    __slots__ = ("kind", "param", "_coeffs_desc")

    def __init__(self, kind: str, param=None, coeffs=None):
        self.kind = kind
        self.param = param
        self._coeffs_desc = coeffs

    @classmethod
    def polynomial(cls, poly: Polynomial) -> "FunctionSpec":
        if not isinstance(poly, Polynomial):
            raise TypeError("polynomial spec needs a Polynomial")
        # Coefficients folded to exact rationals (pi replaced by a 60-digit
        # rational) so Horner evaluation is cancellation-free; stored
        # highest degree first.
        coeffs = tuple(c.to_fraction(PI_FRACTION) for c in reversed(poly.coeffs))
        return cls("polynomial", poly, coeffs)

    @classmethod
    def monomial(cls, n: int) -> "FunctionSpec":
        if not isinstance(n, int) or n < 0:
            raise ValueError("monomial degree must be an integer >= 0")
        return cls("monomial", n)

    @classmethod
    def sqrt(cls) -> "FunctionSpec":
        return cls("sqrt")

    @classmethod
    def exp2z(cls, z: float) -> "FunctionSpec":
        return cls("exp2z", _finite(z))

    @classmethod
    def cos2z(cls, z: float) -> "FunctionSpec":
        return cls("cos2z", _finite(z))

    @classmethod
    def sinh_shift(cls, z: float) -> "FunctionSpec":
        return cls("sinh_shift", _finite(z))

    @classmethod
    def logtan_power(cls, p: int) -> "FunctionSpec":
        if p not in (1, 2):
            raise ValueError("logtan power must be 1 or 2")
        return cls("logtan_power", p)

    @classmethod
    def logsine_x(cls) -> "FunctionSpec":
        return cls("logsine_x")

    def value(self, x: float, dist_top: float | None = None) -> float:
        kind = self.kind
        if kind == "polynomial":
            acc = Fraction(0)
            xf = Fraction(x)
            for c in self._coeffs_desc:
                acc = acc * xf + c
            return float(acc)
        if kind == "monomial":
            return x**self.param
        if kind == "sqrt":
            return math.sqrt(x)
        if kind == "exp2z":
            return math.exp(2.0 * self.param * x)
        if kind == "cos2z":
            return math.cos(2.0 * self.param * x)
        if kind == "sinh_shift":
            return math.sinh(self.param * (2.0 * x - HALF_PI))
        if kind == "logtan_power":
            if dist_top is None:
                dist_top = HALF_PI - x
            lt = _log_tan(x, dist_top)
            return lt if self.param == 1 else lt * lt
        if kind == "logsine_x":
            return x * math.log(math.sin(x))
        raise ValueError(f"unknown kind {kind!r}")

    def describe(self) -> str:
        kind = self.kind
        if kind == "polynomial":
            return f"polynomial(degree={self.param.degree})"
        if kind == "monomial":
            return {0: "1", 1: "x"}.get(self.param, f"x^{self.param}")
        if kind == "sqrt":
            return "sqrt(x)"
        if kind == "exp2z":
            return f"exp(2*{self.param}*x)"
        if kind == "cos2z":
            return f"cos(2*{self.param}*x)"
        if kind == "sinh_shift":
            return f"sinh({self.param}*(2x - pi/2))"
        if kind == "logtan_power":
            return "log(tan x)" if self.param == 1 else "log(tan x)^2"
        return "x*log(sin x)"

    def __repr__(self) -> str:
        return f"FunctionSpec({self.describe()})"


def _finite(z: float) -> float:
    z = float(z)
    if not math.isfinite(z):
        raise ValueError("parameter must be finite")
    return z


def _log_tan(x: float, dist_top: float) -> float:
    # For x past the midpoint, log tan x = -log tan(pi/2 - x); evaluating at
    # the exact distance avoids the precision loss of tan near pi/2.
    if x <= 0.8:
        return math.log(math.tan(x))
    return -math.log(math.tan(dist_top))


# ---------------------------------------------------------------------------
# tanh-sinh node tables, shared across all integrals.
#
# For t > 0 let y = (pi/2) sinh t.  Stored per node: the endpoint gap
# d = 1 - tanh y (so the node pair sits at a + half*d and b - half*d) and the
# weight w = (pi/2) cosh t / cosh^2 y.  Both via exp(-2y) to dodge overflow.

_NODE_CACHE: dict[int, tuple[tuple[float, float], ...]] = {}


def _level_nodes(level: int) -> tuple[tuple[float, float], ...]:
    nodes = _NODE_CACHE.get(level)
    if nodes is not None:
        return nodes
    if level == 0:
        ts = [float(k) for k in range(1, int(_T_MAX) + 1)]
    else:
        h = 2.0**-level
        ts = []
        t = h
        while t < _T_MAX:
            ts.append(t)
            t += 2.0 * h
    out = []
    for t in ts:
        y = HALF_PI * math.sinh(t)
        e2 = math.exp(-2.0 * y)
        d = 2.0 * e2 / (1.0 + e2)
        w = HALF_PI * math.cosh(t) * 4.0 * e2 / ((1.0 + e2) * (1.0 + e2))
        if d == 0.0 or w == 0.0:
            continue
        out.append((d, w))
    _NODE_CACHE[level] = tuple(out)
    return _NODE_CACHE[level]


def _tanh_sinh(g, a: float, b: float, tol: float, max_levels: int):
    """Integrate ``g(x, dist_top)`` over (a, b); returns (value, est, levels)."""
    mid = 0.5 * (a + b)
    half = 0.5 * (b - a)
    top_a = HALF_PI - a
    top_b = HALF_PI - b

    def sample(x: float, dist_top: float) -> float:
        try:
            v = g(x, dist_top)
        except OverflowError:
            raise QuadratureError(f"integrand overflow at x={x!r}") from None
        if not math.isfinite(v):
            raise QuadratureError(f"integrand sample not finite at x={x!r}")
        return v

    parts = [HALF_PI * sample(mid, HALF_PI - mid)]
    for d, w in _level_nodes(0):
        delta = half * d
        parts.append(
            w * (sample(a + delta, top_a - delta) + sample(b - delta, top_b + delta))
        )
    raw = math.fsum(parts)  # plain sum of weighted samples, all levels so far
    value = half * raw
    est = math.inf
    levels = 1
    h = 1.0
    for level in range(1, max_levels):
        h *= 0.5
        parts = []
        for d, w in _level_nodes(level):
            delta = half * d
            parts.append(
                w * (sample(a + delta, top_a - delta) + sample(b - delta, top_b + delta))
            )
        raw += math.fsum(parts)
        new_value = half * h * raw
        est = abs(new_value - value)
        value = new_value
        levels = level + 1
        if est <= tol or est <= 5e-16 * abs(value):
            break
    return value, est, levels


def _resolve_max_levels(max_levels: int | None) -> int:
    if max_levels is None:
        raw = os.environ.get(MAX_LEVELS_ENV)
        if raw is None:
            return DEFAULT_MAX_LEVELS
        try:
            max_levels = int(raw)
        except ValueError as exc:
            raise ValueError(f"{MAX_LEVELS_ENV} must be an integer, got {raw!r}") from exc
    if max_levels < 1:
        raise ValueError("max_levels must be >= 1")
    return max_levels


def _check_inputs(a: float, b: float, tol: float) -> None:
    if not (0.0 <= a < b <= HALF_PI + 1e-15):
        raise ValueError(f"need 0 <= a < b <= pi/2, got a={a}, b={b}")
    if tol < 1e-13:
        raise ValueError("tol must be >= 1e-13")


def _integrate_split(g, a: float, b: float, tol: float, max_levels: int) -> QuadratureResult:
    if a < QUARTER_PI < b:
        spans = [(a, QUARTER_PI), (QUARTER_PI, b)]
    else:
        spans = [(a, b)]
    total = 0.0
    est = 0.0
    levels = 0
    piece_tol = tol / len(spans)
    for lo, hi in spans:
        v, e, lv = _tanh_sinh(g, lo, hi, piece_tol, max_levels)
        total += v
        est += e
        levels = max(levels, lv)
    return QuadratureResult(total, est, levels)


def integrate_logtan(
    f: FunctionSpec,
    a: float = 0.0,
    b: float = HALF_PI,
    tol: float = 1e-10,
    max_levels: int | None = None,
) -> QuadratureResult:
    """``integral_a^b f(x) log(tan x) dx`` with the log-tan weight built in."""
    _check_inputs(a, b, tol)
    levels = _resolve_max_levels(max_levels)

    def g(x: float, dist_top: float) -> float:
        return f.value(x, dist_top) * _log_tan(x, dist_top)

    return _integrate_split(g, a, b, tol, levels)


def integrate_plain(
    f: FunctionSpec,
    a: float = 0.0,
    b: float = HALF_PI,
    tol: float = 1e-10,
    max_levels: int | None = None,
) -> QuadratureResult:
    """``integral_a^b f(x) dx`` on the same node scheme."""
    _check_inputs(a, b, tol)
    levels = _resolve_max_levels(max_levels)
    return _integrate_split(f.value, a, b, tol, levels)


def inner_product(
    f: FunctionSpec,
    g: FunctionSpec,
    tol: float = 1e-12,
    max_levels: int | None = None,
) -> QuadratureResult:
    """``(2/pi) integral_0^{pi/2} f(x) g(x) dx``."""
    if tol < 1e-13:
        raise ValueError("tol must be >= 1e-13")
    levels = _resolve_max_levels(max_levels)

    def product(x: float, dist_top: float) -> float:
        return f.value(x, dist_top) * g.value(x, dist_top)

    res = _integrate_split(product, 0.0, HALF_PI, tol * HALF_PI, levels)
    scale = 2.0 / math.pi
    return QuadratureResult(res.value * scale, res.est_error * scale, res.levels_used)
