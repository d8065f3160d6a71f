"""Closed-form design of a three-plate (QWP-HWP-QWP) endless phase shifter.

Given a unit input signal q, a unit output signal r and a desired phase shift
phi, the plate stack must realize the unit transform

    p = exp(s * phi) * conj(q) * r,    s = Stokes unit vector quaternion of q,

because q * p = e^(i phi) * r.  Writing the rotated stack as a product of
exponentials, the four components of p split into two complex numbers in j,

    c1 = p0 + p2*j = -e^(j(psi_c - psi_a)) * cos(-psi_a + 2 psi_b - psi_c)
    c2 = p1 + p3*j =  j e^(j(psi_a + psi_c)) * sin(-psi_a + 2 psi_b - psi_c)

which invert in closed form.  Away from |c1| = 0 or |c2| = 0 there are
exactly two angle triples (branch 1 and branch 2); at those singular
conditions one constraint disappears and a one-parameter family of triples
solves the problem instead.

All plate angles are reduced modulo pi into (-pi/2, pi/2]; the physical
plates are pi-periodic so the reduction never changes the transform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Sequence

from .components import compose, hwp, qwp
from .quaternion import Quaternion, _require_unit
from .signal import apply_phase, stokes, to_ellipse

_PI = math.pi
_HALF_PI = math.pi / 2

# |c1| or |c2| at or below this is treated as exactly singular.
DEFAULT_SINGULAR_TOL = 1e-7
# Below this the regular solve is still returned but the sample is flagged:
# the angle sensitivity diverges as the singularity is approached.
NEAR_SINGULAR_TOL = 1e-4
# A per-angle step of at least this size between consecutive ramp samples
# marks a singular crossing (the characteristic jump size is pi/2).
JUMP_FLAG_STEP = math.pi / 4


class Classification(Enum):
    REGULAR = "regular"
    SINGULAR_A = "singular_a"   # p0 = p2 = 0
    SINGULAR_B = "singular_b"   # p1 = p3 = 0


@dataclass(frozen=True)
class WaveplateAngles:
    """Orientations of the three plates, each in (-pi/2, pi/2]."""

    psi_a: float
    psi_b: float
    psi_c: float

    def as_tuple(self) -> tuple:
        return (self.psi_a, self.psi_b, self.psi_c)


@dataclass(frozen=True)
class ShifterProblem:
    """Input SOP, output SOP (both unit quaternions) and desired phase."""

    q_in: Quaternion
    r_out: Quaternion
    phi: float

    def __post_init__(self):
        _require_unit(self.q_in, "input signal")
        _require_unit(self.r_out, "output signal")

    def target(self) -> Quaternion:
        return target_transform(self.q_in, self.r_out, self.phi)

    def to_json_obj(self) -> dict:
        return {"q": self.q_in.to_list(), "r": self.r_out.to_list(),
                "phi": self.phi}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "ShifterProblem":
        return cls(Quaternion.from_list(obj["q"]),
                   Quaternion.from_list(obj["r"]), float(obj["phi"]))


@dataclass(frozen=True)
class ShifterSolution:
    """Either two regular branches or a one-parameter singular family.

    For singular cases `family` maps the free parameter (alpha for the A
    case, psi_b itself for the B case) to an angle triple, and
    `family_samples` holds 16 evenly spaced triples for serialization.
    """

    classification: Classification
    branches: Optional[tuple] = None
    family: Optional[Callable[[float], WaveplateAngles]] = None
    family_samples: Optional[tuple] = None


@dataclass(frozen=True)
class RampPoint:
    """One sample of a ramp trajectory.

    branch is 1 or 2 for a regular solve and 0 for a singular-family point;
    flagged marks singular or near-singular samples and the pi/2-scale jump
    a crossing forces.  residual = |q * forward(angles) - e^(i phi) r|.
    """

    phi: float
    angles: WaveplateAngles
    branch: int
    residual: float
    flagged: bool

    @property
    def branch_label(self) -> str:
        return "singular" if self.flagged or self.branch == 0 else str(self.branch)


def reduce_angle(psi: float) -> float:
    """Reduce modulo pi into (-pi/2, pi/2]."""
    r = math.remainder(psi, _PI)
    if r <= -_HALF_PI:
        r += _PI
    return r


def angle_distance(a: float, b: float) -> float:
    """Distance between plate orientations under the modulo-pi metric."""
    return abs(math.remainder(a - b, _PI))


def triple_distance(a: WaveplateAngles, b: WaveplateAngles) -> float:
    """Max per-angle modulo-pi distance between two triples."""
    return max(angle_distance(x, y) for x, y in zip(a.as_tuple(), b.as_tuple()))


def target_transform(q_in: Quaternion, r_out: Quaternion, phi: float) -> Quaternion:
    """The unit transform p = exp(s phi) conj(q) r with q p = e^(i phi) r."""
    _require_unit(q_in, "input signal")
    _require_unit(r_out, "output signal")
    s = stokes(q_in).as_quaternion().normalized()
    c = math.cos(phi)
    n = math.sin(phi)
    e_s_phi = Quaternion(c, n * s.q1, n * s.q2, n * s.q3)
    return e_s_phi * q_in.conjugate() * r_out


def forward_transform(angles: WaveplateAngles) -> Quaternion:
    """Transform of the stack qwp(psi_a), hwp(psi_b), qwp(psi_c)."""
    return compose([qwp(angles.psi_a), hwp(angles.psi_b), qwp(angles.psi_c)]).q


def is_singular(p: Quaternion, tol: float = DEFAULT_SINGULAR_TOL) -> Classification:
    """Classify a unit transform: regular, p0 = p2 = 0, or p1 = p3 = 0."""
    _require_unit(p, "target transform")
    if math.hypot(p.q0, p.q2) <= tol:
        return Classification.SINGULAR_A
    if math.hypot(p.q1, p.q3) <= tol:
        return Classification.SINGULAR_B
    return Classification.REGULAR


def solve_angles(p: Quaternion, tol: float = DEFAULT_SINGULAR_TOL) -> ShifterSolution:
    """All plate angle solutions realizing the unit transform p exactly.

    Regular case: the two branches

        branch 1: psi_a = A/2 - B/2 + pi/4   branch 2: psi_a = A/2 - B/2 - pi/4
                  psi_b = A/2 - t/2                    psi_b = A/2 + t/2
                  psi_c = A/2 + B/2 + pi/4             psi_c = A/2 + B/2 - pi/4

    with A = arg(p1 + p3 j), B = arg(p0 + p2 j) and t = arctan(|c1| / |c2|)
    taken in [0, pi/2].  Singular cases return the one-parameter family.
    The solver targets the signed p: p and -p differ by a global pi phase.
    """
    _require_unit(p, "target transform")
    c1 = math.hypot(p.q0, p.q2)
    c2 = math.hypot(p.q1, p.q3)
    if c1 <= tol:
        a_half = 0.5 * math.atan2(p.q3, p.q1)

        def family_a(alpha: float, _a=a_half) -> WaveplateAngles:
            return WaveplateAngles(reduce_angle(_a + _PI / 4 + alpha),
                                   reduce_angle(_a),
                                   reduce_angle(_a + _PI / 4 - alpha))

        return ShifterSolution(Classification.SINGULAR_A, family=family_a,
                               family_samples=_sample_family(family_a))
    if c2 <= tol:
        b_half = 0.5 * math.atan2(p.q2, p.q0)

        def family_b(psi_b: float, _b=b_half) -> WaveplateAngles:
            return WaveplateAngles(reduce_angle(psi_b - _b + _PI / 2),
                                   reduce_angle(psi_b),
                                   reduce_angle(psi_b + _b + _PI / 2))

        return ShifterSolution(Classification.SINGULAR_B, family=family_b,
                               family_samples=_sample_family(family_b))
    a_half = 0.5 * math.atan2(p.q3, p.q1)
    b_half = 0.5 * math.atan2(p.q2, p.q0)
    t_half = 0.5 * math.atan2(c1, c2)
    branch1 = WaveplateAngles(reduce_angle(a_half - b_half + _PI / 4),
                              reduce_angle(a_half - t_half),
                              reduce_angle(a_half + b_half + _PI / 4))
    branch2 = WaveplateAngles(reduce_angle(a_half - b_half - _PI / 4),
                              reduce_angle(a_half + t_half),
                              reduce_angle(a_half + b_half - _PI / 4))
    return ShifterSolution(Classification.REGULAR, branches=(branch1, branch2))


def _sample_family(family: Callable[[float], WaveplateAngles],
                   count: int = 16) -> tuple:
    return tuple(family(-_HALF_PI + _PI * m / count) for m in range(count))


def singular_signal_conditions(q_in: Quaternion, target_out: Quaternion,
                               tol: float = DEFAULT_SINGULAR_TOL) -> Classification:
    """Predict the singularity class from ellipse parameters alone.

    target_out is the full output including phase, t = e^(i phi) * r.  The
    p0 = p2 = 0 case occurs iff eps_out = -eps_in with the phase advanced by
    +-pi/2; the p1 = p3 = 0 case iff eps_out = eps_in with the phase advanced
    by 0 or pi.  Agrees with is_singular(conj(q) * t).
    """
    e_in = to_ellipse(q_in)
    e_out = to_ellipse(target_out)
    dphi = math.remainder(e_out.phi - e_in.phi, 2.0 * _PI)
    if abs(e_out.epsilon + e_in.epsilon) <= tol:
        off = min(abs(math.remainder(dphi - _HALF_PI, 2.0 * _PI)),
                  abs(math.remainder(dphi + _HALF_PI, 2.0 * _PI)))
        if off <= tol:
            return Classification.SINGULAR_A
    if abs(e_out.epsilon - e_in.epsilon) <= tol:
        off = min(abs(math.remainder(dphi, 2.0 * _PI)),
                  abs(math.remainder(dphi - _PI, 2.0 * _PI)))
        if off <= tol:
            return Classification.SINGULAR_B
    return Classification.REGULAR


def _best_family_point(family: Callable[[float], WaveplateAngles],
                       prev: WaveplateAngles) -> WaveplateAngles:
    """Family point minimizing the max angular change from `prev`.

    Each angle is base +- x or constant in the free parameter, so every
    per-angle distance is a unit-slope triangle wave of period pi in x.  The
    minimum of their max therefore sits at a wave zero or at a crossing of
    two waves, and crossings lie at midpoints of zeros shifted by 0 or pi/2.
    """
    probe = family(0.0)
    step = 1e-3
    probe2 = family(step)
    zeros = []
    for idx in range(3):
        base = probe.as_tuple()[idx]
        slope = math.remainder(probe2.as_tuple()[idx] - base, _PI) / step
        target = prev.as_tuple()[idx]
        if abs(slope) < 0.5:
            continue  # angle does not move with the parameter
        # solve base + slope * x = target (mod pi), slope is +-1
        zeros.append(math.remainder((target - base) / slope, _PI))
    candidates = list(zeros)
    for ii in range(len(zeros)):
        for jj in range(ii + 1, len(zeros)):
            mid = 0.5 * (zeros[ii] + zeros[jj])
            candidates.append(mid)
            candidates.append(mid + _HALF_PI)
    if not candidates:
        candidates = [0.0]
    best = None
    best_d = math.inf
    for x in candidates:
        trip = family(x)
        d = triple_distance(trip, prev)
        if d < best_d - 1e-15:
            best, best_d = trip, d
    return best


def ramp_trajectory(q_in: Quaternion, r_out: Quaternion,
                    phi_samples: Sequence[float],
                    tol: float = DEFAULT_SINGULAR_TOL) -> list:
    """Solve the stack along a phase ramp, keeping the angles trackable.

    Regular samples stay on one branch family; crossing a singularity then
    shows up as the physical pi/2-scale jump in plate orientation, which is
    flagged (as are samples with |c1| or |c2| below NEAR_SINGULAR_TOL).
    Exactly singular samples pick the family point closest to the previous
    triple under the max modulo-pi metric.
    """
    _require_unit(q_in, "input signal")
    _require_unit(r_out, "output signal")
    points = []
    prev: Optional[WaveplateAngles] = None
    prev_was_family = False
    branch_id = 1
    for phi in phi_samples:
        p = target_transform(q_in, r_out, phi)
        sol = solve_angles(p, tol)
        near = min(math.hypot(p.q0, p.q2), math.hypot(p.q1, p.q3)) <= NEAR_SINGULAR_TOL
        if sol.classification is Classification.REGULAR:
            if prev is not None and prev_was_family:
                d1 = triple_distance(sol.branches[0], prev)
                d2 = triple_distance(sol.branches[1], prev)
                branch_id = 1 if d1 <= d2 else 2
            choice = sol.branches[branch_id - 1]
            bid = branch_id
            prev_was_family = False
        else:
            choice = sol.family(0.0) if prev is None else _best_family_point(sol.family, prev)
            bid = 0
            prev_was_family = True
        step = 0.0 if prev is None else triple_distance(choice, prev)
        flagged = near or bid == 0 or step >= JUMP_FLAG_STEP
        residual = (q_in * forward_transform(choice) - apply_phase(r_out, phi)).norm()
        points.append(RampPoint(phi, choice, bid, residual, flagged))
        prev = choice
    return points
