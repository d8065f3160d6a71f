"""Scalar quaternion arithmetic.

A quaternion q = q0 + q1*i + q2*j + q3*k is held as four floats.  The three
imaginary units obey the Hamilton rules

    i*i = j*j = k*k = i*j*k = -1
    i*j = -j*i = k,   j*k = -k*j = i,   k*i = -i*k = j

All values are immutable and every operation is a pure function, so the
module is safe under arbitrary concurrency.  Angles are radians throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

# |norm - 1| tolerance accepted when an operation requires a unit quaternion.
# Inputs often arrive from text or JSON with finite precision.
UNIT_TOL = 1e-9


class Axis(Enum):
    """One of the three base vector quaternions, used to select a
    partial-conjugation axis."""

    I = "i"
    J = "j"
    K = "k"

    @property
    def unit(self) -> "Quaternion":
        return _AXIS_UNITS[self]


@dataclass(frozen=True)
class Quaternion:
    q0: float = 0.0
    q1: float = 0.0
    q2: float = 0.0
    q3: float = 0.0

    # -- construction / serialization ------------------------------------

    @classmethod
    def from_list(cls, values) -> "Quaternion":
        """Build from a 4-element sequence [q0, q1, q2, q3]."""
        vals = [float(v) for v in values]
        if len(vals) != 4:
            raise ValueError("quaternion needs exactly 4 components")
        return cls(*vals)

    @classmethod
    def from_text(cls, text: str) -> "Quaternion":
        """Parse the comma-separated text form "q0,q1,q2,q3"."""
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated reals, got {text!r}")
        try:
            return cls(*(float(p.strip()) for p in parts))
        except ValueError as exc:
            raise ValueError(f"bad quaternion text {text!r}") from exc

    def to_list(self) -> list:
        return [self.q0, self.q1, self.q2, self.q3]

    def to_text(self) -> str:
        # repr() of a float is the shortest digit string that round-trips,
        # which is at least 15 significant digits of fidelity.
        return ",".join(repr(c) for c in self.to_list())

    def __str__(self) -> str:
        terms = []
        for value, unit in zip(self.to_list(), ("", "i", "j", "k")):
            terms.append(f"{value:+g}{unit}")
        return "".join(terms)

    def __iter__(self):
        yield from self.to_list()

    # -- parts ------------------------------------------------------------

    @property
    def scalar(self) -> float:
        return self.q0

    def vector(self) -> "Quaternion":
        return Quaternion(0.0, self.q1, self.q2, self.q3)

    def vector_norm(self) -> float:
        return math.hypot(self.q1, self.q2, self.q3)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            p0, p1, p2, p3 = self.q0, self.q1, self.q2, self.q3
            q0, q1, q2, q3 = other.q0, other.q1, other.q2, other.q3
            return Quaternion(
                p0 * q0 - p1 * q1 - p2 * q2 - p3 * q3,
                p0 * q1 + q0 * p1 + (p2 * q3 - p3 * q2),
                p0 * q2 + q0 * p2 + (p3 * q1 - p1 * q3),
                p0 * q3 + q0 * p3 + (p1 * q2 - p2 * q1),
            )
        if isinstance(other, (int, float)):
            return Quaternion(self.q0 * other, self.q1 * other,
                              self.q2 * other, self.q3 * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        """Right division p / q = p * conj(q) / |q|^2 (scalars divide
        componentwise)."""
        if isinstance(other, Quaternion):
            n2 = other.norm_sq()
            if n2 == 0.0:
                raise ValueError("division by zero quaternion")
            return (self * other.conjugate()) * (1.0 / n2)
        if isinstance(other, (int, float)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1.0 / other)
        return NotImplemented

    def left_div(self, other: "Quaternion") -> "Quaternion":
        """Left division self \\ other = conj(self) * other / |self|^2,
        the x solving self * x = other."""
        n2 = self.norm_sq()
        if n2 == 0.0:
            raise ValueError("division by zero quaternion")
        return (self.conjugate() * other) * (1.0 / n2)

    # -- conjugations -------------------------------------------------------

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def partial_conjugate(self, axis: Axis) -> "Quaternion":
        """Negate only the `axis` component of the vector part.

        Equals -v * conj(q) * v for the base vector v of `axis`.
        """
        if axis is Axis.I:
            return Quaternion(self.q0, -self.q1, self.q2, self.q3)
        if axis is Axis.J:
            return Quaternion(self.q0, self.q1, -self.q2, self.q3)
        return Quaternion(self.q0, self.q1, self.q2, -self.q3)

    def double_conjugate(self, kept: Axis) -> "Quaternion":
        """Negate the two vector components other than `kept`.

        Equals -v * q * v for the base vector v of `kept` (note: no inner
        conjugate, unlike the single partial conjugate).
        """
        if kept is Axis.I:
            return Quaternion(self.q0, self.q1, -self.q2, -self.q3)
        if kept is Axis.J:
            return Quaternion(self.q0, -self.q1, self.q2, -self.q3)
        return Quaternion(self.q0, -self.q1, -self.q2, self.q3)

    # -- norms ---------------------------------------------------------------

    def norm_sq(self) -> float:
        return (self.q0 * self.q0 + self.q1 * self.q1
                + self.q2 * self.q2 + self.q3 * self.q3)

    def norm(self) -> float:
        return math.hypot(self.q0, self.q1, self.q2, self.q3)

    def __abs__(self) -> float:
        return self.norm()

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero quaternion")
        return self * (1.0 / n)

    def is_unit(self, tol: float = UNIT_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def is_vector(self, tol: float = UNIT_TOL) -> bool:
        return abs(self.q0) <= tol

    # -- transcendental -------------------------------------------------------

    def exp(self) -> "Quaternion":
        """Quaternion exponential e^(q0) * (cos|v| + v_hat sin|v|) with v the
        vector part.  For a unit vector v, exp(v*t) = cos t + v sin t."""
        a = self.vector_norm()
        s = math.exp(self.q0)
        if a == 0.0:
            return Quaternion(s, 0.0, 0.0, 0.0)
        f = s * math.sin(a) / a
        return Quaternion(s * math.cos(a), f * self.q1, f * self.q2, f * self.q3)

    def log(self) -> "Quaternion":
        """Principal logarithm; the vector angle atan2(|v|, q0) lies in [0, pi].

        A negative real quaternion (zero vector part, q0 < 0) has no preferred
        axis; by convention the i axis is returned with angle pi.
        """
        n = self.norm()
        if n == 0.0:
            raise ValueError("zero quaternion has no logarithm")
        a = self.vector_norm()
        if a == 0.0:
            if self.q0 > 0.0:
                return Quaternion(math.log(n), 0.0, 0.0, 0.0)
            return Quaternion(math.log(n), math.pi, 0.0, 0.0)
        theta = math.atan2(a, self.q0)
        f = theta / a
        return Quaternion(math.log(n), f * self.q1, f * self.q2, f * self.q3)


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)

_AXIS_UNITS = {Axis.I: I, Axis.J: J, Axis.K: K}


def dot(p: Quaternion, q: Quaternion) -> float:
    """Component dot product p0q0 + p1q1 + p2q2 + p3q3 = Sc(p conj(q))."""
    return p.q0 * q.q0 + p.q1 * q.q1 + p.q2 * q.q2 + p.q3 * q.q3


def is_orthogonal(p: Quaternion, q: Quaternion, tol: float = 1e-9) -> bool:
    """True when Sc(p conj(q)) vanishes relative to |p||q|."""
    return abs(dot(p, q)) <= tol * p.norm() * q.norm()


def precess(q: Quaternion, v: Quaternion, theta: float) -> Quaternion:
    """exp(-v theta) * q * exp(v theta) for unit vector quaternion v.

    The scalar part and the vector-part magnitude are preserved; the vector
    part is rotated by angle 2*theta about axis v.
    """
    _require_unit_vector(v)
    c = math.cos(theta)
    s = math.sin(theta)
    e_pos = Quaternion(c, v.q1 * s, v.q2 * s, v.q3 * s)
    e_neg = Quaternion(c, -v.q1 * s, -v.q2 * s, -v.q3 * s)
    return e_neg * q * e_pos


def allclose(p: Quaternion, q: Quaternion, tol: float = 1e-12) -> bool:
    """Componentwise absolute agreement within tol."""
    return (abs(p.q0 - q.q0) <= tol and abs(p.q1 - q.q1) <= tol
            and abs(p.q2 - q.q2) <= tol and abs(p.q3 - q.q3) <= tol)


def _require_unit(q: Quaternion, what: str = "quaternion") -> None:
    if not q.is_unit():
        raise ValueError(f"{what} must be a unit quaternion, |q| = {q.norm()!r}")


def _require_unit_vector(v: Quaternion, what: str = "axis") -> None:
    if v.q0 != 0.0 and abs(v.q0) > UNIT_TOL:
        raise ValueError(f"{what} must have zero scalar part")
    if not v.is_unit():
        raise ValueError(f"{what} must be a unit vector quaternion")
