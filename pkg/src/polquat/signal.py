"""Optical signal representations and conversions.

A fully polarized, single-frequency optical field is carried as a quaternion
q = q0 + q1*i + q2*j + q3*k.  Four equivalent descriptions interconvert here:

* quaternion        q = Ex + Ey*j, with Ex, Ey complex in the i unit
* Jones vector      (Ex, Ey), complex field components
* Stokes vector     phase-blind SOP + power description
* ellipse           magnitude R, phase phi, ellipticity epsilon, orientation
                    theta, via q = R * e^(i phi) * e^(k epsilon) * e^(j theta)

Component-order warning: the vector quaternion s = i * q^(dag i) * q carries
the Stokes information with its 2nd and 3rd components exchanged relative to
the conventional (S1, S2, S3) ordering, i.e. s1 = S1, s2 = S3, s3 = S2.
Two distinct types keep the orderings from being mixed up silently.

Sign conventions implied by the representation: the left circular state
(quaternion 1 + k) has epsilon = +pi/4 and conventional S3 = -R^2; right
circular (1 - k) has epsilon = -pi/4 and S3 = +R^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .quaternion import (
    Axis,
    I,
    J,
    Quaternion,
    _require_unit,
)

_PI = math.pi


@dataclass(frozen=True)
class JonesVector:
    """Complex transverse field components (arbitrary field units)."""

    ex: complex
    ey: complex

    def to_json_obj(self) -> dict:
        return {"ex": [self.ex.real, self.ex.imag],
                "ey": [self.ey.real, self.ey.imag]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "JonesVector":
        ex = obj["ex"]
        ey = obj["ey"]
        return cls(complex(float(ex[0]), float(ex[1])),
                   complex(float(ey[0]), float(ey[1])))


@dataclass(frozen=True)
class EllipseParams:
    """Polarization ellipse description of a signal.

    r        field magnitude, >= 0
    phi      optical phase, in (-pi, pi]
    epsilon  angle of ellipticity, in [-pi/4, pi/4]; +-pi/4 are the circular
             states (orientation is then degenerate with phase)
    theta    orientation of the major axis, in (-pi/2, pi/2]
    """

    r: float
    phi: float
    epsilon: float
    theta: float

    def __post_init__(self):
        if not self.r >= 0.0:
            raise ValueError(f"magnitude must be nonnegative, got {self.r!r}")
        if not -_PI < self.phi <= _PI:
            raise ValueError(f"phase {self.phi!r} outside (-pi, pi]")
        if not -_PI / 4 <= self.epsilon <= _PI / 4:
            raise ValueError(f"ellipticity {self.epsilon!r} outside [-pi/4, pi/4]")
        if not -_PI / 2 < self.theta <= _PI / 2:
            raise ValueError(f"orientation {self.theta!r} outside (-pi/2, pi/2]")

    def to_json_obj(self) -> dict:
        return {"r": self.r, "phi": self.phi,
                "epsilon": self.epsilon, "theta": self.theta}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EllipseParams":
        return cls(float(obj["r"]), float(obj["phi"]),
                   float(obj["epsilon"]), float(obj["theta"]))


@dataclass(frozen=True)
class StokesQuaternion:
    """Vector quaternion i * q^(dag i) * q: components along (i, j, k).

    Quaternion ordering: (s1, s2, s3) = (S1, S3, S2) of the conventional
    Stokes vector.  The scalar part is identically zero and is not stored.
    """

    s1: float
    s2: float
    s3: float

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.s1, self.s2, self.s3)

    def norm(self) -> float:
        return math.hypot(self.s1, self.s2, self.s3)

    def __neg__(self) -> "StokesQuaternion":
        return StokesQuaternion(-self.s1, -self.s2, -self.s3)

    def to_json_obj(self) -> dict:
        return {"s1": self.s1, "s2": self.s2, "s3": self.s3}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "StokesQuaternion":
        return cls(float(obj["s1"]), float(obj["s2"]), float(obj["s3"]))


@dataclass(frozen=True)
class ClassicalStokes:
    """Conventional Stokes components (field-squared units).

    S1 = |Ex|^2 - |Ey|^2, S2 = 2 Re(Ex Ey*), S3 = 2 Im(Ex Ey*).
    """

    S1: float
    S2: float
    S3: float


class OrthogonalityClass(Enum):
    """How two signals relate, read off the product m = p * conj(q)."""

    QUATERNION_ORTHOGONAL = "quaternion_orthogonal"   # m0 = 0
    ORTHOGONAL_SOP = "orthogonal_sop"                 # m0 = m1 = 0
    SAME_SOP = "same_sop"                             # m2 = m3 = 0
    SAME_SOP_ORTHOGONAL_PHASE = "same_sop_orthogonal_phase"  # m0 = m2 = m3 = 0
    NONE = "none"


# -- Jones <-> quaternion ----------------------------------------------------

def from_jones(v: JonesVector) -> Quaternion:
    """q = Ex + Ey*j with Ex, Ey read as complex numbers in i."""
    return Quaternion(v.ex.real, v.ex.imag, v.ey.real, v.ey.imag)


def to_jones(q: Quaternion) -> JonesVector:
    return JonesVector(complex(q.q0, q.q1), complex(q.q2, q.q3))


# -- Stokes ------------------------------------------------------------------

def stokes(q: Quaternion) -> StokesQuaternion:
    """Stokes vector quaternion s = i * q^(dag i) * q.

    Phase-blind: stokes(e^(i phi) * q) == stokes(q).  The scalar part of the
    product is zero by construction (exactly, including in floating point).
    """
    s = I * q.partial_conjugate(Axis.I) * q
    return StokesQuaternion(s.q1, s.q2, s.q3)


def to_classical(s: StokesQuaternion) -> ClassicalStokes:
    """Reorder quaternion components (s1, s2, s3) -> (S1, S2, S3) = (s1, s3, s2)."""
    return ClassicalStokes(s.s1, s.s3, s.s2)


def from_classical(S: ClassicalStokes) -> StokesQuaternion:
    return StokesQuaternion(S.S1, S.S3, S.S2)


def classical_from_jones(v: JonesVector) -> ClassicalStokes:
    """Conventional Stokes components straight from the field components."""
    ax2 = v.ex.real * v.ex.real + v.ex.imag * v.ex.imag
    ay2 = v.ey.real * v.ey.real + v.ey.imag * v.ey.imag
    c = v.ex * v.ey.conjugate()
    return ClassicalStokes(ax2 - ay2, 2.0 * c.real, 2.0 * c.imag)


# -- phase and SOP manipulation ----------------------------------------------

def apply_phase(q: Quaternion, phi: float) -> Quaternion:
    """Left multiplication by e^(i phi): shifts the optical phase by phi."""
    return Quaternion(math.cos(phi), math.sin(phi), 0.0, 0.0) * q


def orthogonal_sop(q: Quaternion, phi: float = 0.0) -> Quaternion:
    """A state orthogonal in polarization to q: e^(i phi) * j * q.

    Its Stokes vector quaternion is the negative of stokes(q); phi sweeps the
    full set of orthogonal states.
    """
    return apply_phase(J * q, phi)


def classify_orthogonality(p: Quaternion, q: Quaternion,
                           tol: float = 1e-9) -> OrthogonalityClass:
    """Classify the relation of two nonzero signals from m = p * conj(q).

    The tolerance is relative to |m|, so the answer is invariant under global
    phase and positive scaling of either argument.  The most specific class
    that matches is returned.
    """
    if p.norm() == 0.0 or q.norm() == 0.0:
        raise ValueError("cannot classify the zero signal")
    m = p * q.conjugate()
    t = tol * m.norm()
    z0 = abs(m.q0) <= t
    z1 = abs(m.q1) <= t
    z2 = abs(m.q2) <= t
    z3 = abs(m.q3) <= t
    if z0 and z2 and z3:
        return OrthogonalityClass.SAME_SOP_ORTHOGONAL_PHASE
    if z0 and z1:
        return OrthogonalityClass.ORTHOGONAL_SOP
    if z2 and z3:
        return OrthogonalityClass.SAME_SOP
    if z0:
        return OrthogonalityClass.QUATERNION_ORTHOGONAL
    return OrthogonalityClass.NONE


# -- polarization ellipse ------------------------------------------------------

# Orientation is treated as undefined (and set to 0) when |cos 2 epsilon|
# drops below this fraction; the residual orientation folds into the phase.
_CIRCULAR_TOL = 1e-9

# The recovered phase factor must be a pure e^(i phi); leftover j/k components
# above this bound indicate a range or branch bug and raise immediately.
_PHASE_RESIDUAL_TOL = 1e-9


def from_ellipse(e: EllipseParams) -> Quaternion:
    """q = R * e^(i phi) * e^(k epsilon) * e^(j theta).

    The exponential order i-k-j is what makes the three angles be the phase,
    ellipticity and orientation; other orders describe the same state with
    different parameter meanings.
    """
    phase = Quaternion(math.cos(e.phi), math.sin(e.phi), 0.0, 0.0)
    ell = Quaternion(math.cos(e.epsilon), 0.0, 0.0, math.sin(e.epsilon))
    ori = Quaternion(math.cos(e.theta), 0.0, math.sin(e.theta), 0.0)
    return (phase * ell * ori) * e.r


def to_ellipse(q: Quaternion) -> EllipseParams:
    """Extract (R, phi, epsilon, theta) from a nonzero signal quaternion.

    Uses sin(2 epsilon) = -s2 / R^2 and tan(2 theta) = s3 / s1 in the
    quaternion component ordering, then recovers phi from the residual
    q * e^(-j theta) * e^(-k epsilon) / R, which must be a pure phase factor.
    For circular states theta is undefined and reported as 0.
    """
    r = q.norm()
    if r == 0.0:
        raise ValueError("zero signal has no ellipse parameters")
    r2 = r * r
    s = stokes(q)
    # two-argument form of sin(2 eps) = -s2 / R^2: the in-plane magnitude
    # hypot(s1, s3) equals R^2 cos(2 eps) >= 0, and atan2 stays accurate
    # where asin would be ill-conditioned (the circular states)
    epsilon = 0.5 * math.atan2(-s.s2, math.hypot(s.s1, s.s3))
    if math.hypot(s.s1, s.s3) <= _CIRCULAR_TOL * r2:
        theta = 0.0
    else:
        theta = 0.5 * math.atan2(s.s3, s.s1)
        if theta <= -_PI / 2:
            theta += _PI
    undo_ori = Quaternion(math.cos(theta), 0.0, -math.sin(theta), 0.0)
    undo_ell = Quaternion(math.cos(epsilon), 0.0, 0.0, -math.sin(epsilon))
    res = (q * undo_ori * undo_ell) * (1.0 / r)
    if max(abs(res.q2), abs(res.q3)) > _PHASE_RESIDUAL_TOL:
        raise ValueError(
            f"phase residual is not a pure phase factor: {res}")
    phi = math.atan2(res.q1, res.q0)
    if phi == -_PI:
        phi = _PI
    return EllipseParams(r, phi, epsilon, theta)


# -- waveplate for a prescribed SOP jump ----------------------------------------

def waveplate_to_orthogonal(q: Quaternion, phi: float = 0.0) -> Quaternion:
    """The waveplate transform p with q * p = e^(i phi) * j * q.

    Sends the (unit) signal q to a state orthogonal in polarization; p is a
    unit quaternion, hence a valid waveplate.
    """
    _require_unit(q, "signal")
    return q.left_div(orthogonal_sop(q, phi))
