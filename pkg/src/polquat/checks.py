"""Self-check groups behind the `polquat check` CLI command.

Each group raises AssertionError on failure.  This module (like the jones
oracle it drives) is part of the verification surface, not of any production
code path.
"""

from __future__ import annotations

import math
import random

import numpy as np

from . import jones, shifter
from .components import (
    PartialPolarizer,
    Waveplate,
    compose,
    hwp,
    polarizer_apply,
    qwp,
    waveplate_from_axis,
)
from .quaternion import I, J, K, ONE, Quaternion, allclose
from .signal import (
    classical_from_jones,
    from_ellipse,
    from_jones,
    stokes,
    to_classical,
    to_ellipse,
    to_jones,
)

FIG5_Q = Quaternion(-8 / 9, 2 / 9, 1 / 3, 2 / 9)
FIG5_R = Quaternion(2 / 7, -3 / 7, 0.0, -6 / 7)
FIG7_Q = Quaternion(-5 / 6, 1 / 6, 1 / 2, 1 / 6)
FIG7_R = Quaternion(1 / 3, -2 / 3, 0.0, -2 / 3)


def _rand_quat(rng: random.Random) -> Quaternion:
    return Quaternion(*(rng.gauss(0.0, 1.0) for _ in range(4)))


def _rand_unit(rng: random.Random) -> Quaternion:
    while True:
        q = _rand_quat(rng)
        if q.norm() > 1e-3:
            return q.normalized()


def check_eq1_table() -> None:
    units = (ONE, I, J, K)
    names = "1ijk"
    expected = {
        "11": ONE, "1i": I, "1j": J, "1k": K,
        "i1": I, "ii": -ONE, "ij": K, "ik": -J,
        "j1": J, "ji": -K, "jj": -ONE, "jk": I,
        "k1": K, "ki": J, "kj": -I, "kk": -ONE,
    }
    for a, na in zip(units, names):
        for b, nb in zip(units, names):
            got = a * b
            want = expected[na + nb]
            assert got == want, f"{na}*{nb} = {got}, expected {want}"


def check_table1_golden() -> None:
    s = math.sqrt(0.5)
    qwp_h = Quaternion(s, s, 0.0, 0.0)
    assert allclose(waveplate_from_axis(ONE, math.pi / 4).q, qwp_h, 1e-15)
    assert allclose(waveplate_from_axis(ONE, math.pi / 2).q, I, 1e-15)
    twice = compose([qwp(0.0), qwp(0.0)])
    assert allclose(twice.q, I, 1e-15), "two quarter plates must make a half plate"
    assert allclose(hwp(0.0).q, I, 1e-15)


def check_table2_golden() -> None:
    s = math.sqrt(0.5)
    cases = [ONE, I, J, K, Quaternion(s, 0, s, 0) * math.sqrt(2),
             Quaternion(1, 0, 0, 1), Quaternion(1, 0, 0, -1)]
    for q in cases:
        assert allclose(from_jones(to_jones(q)), q, 0.0), f"jones round trip {q}"
        assert allclose(from_ellipse(to_ellipse(q)), q, 1e-12), f"ellipse round trip {q}"


def check_stokes_equivalence() -> None:
    rng = random.Random(11)
    for _ in range(200):
        q = _rand_quat(rng)
        s = to_classical(stokes(q))
        c = classical_from_jones(to_jones(q))
        assert max(abs(s.S1 - c.S1), abs(s.S2 - c.S2), abs(s.S3 - c.S3)) <= 1e-12
        shifted = stokes(Quaternion(math.cos(1.3), math.sin(1.3), 0, 0) * q)
        base = stokes(q)
        assert max(abs(shifted.s1 - base.s1), abs(shifted.s2 - base.s2),
                   abs(shifted.s3 - base.s3)) <= 1e-12, "phase must not move Stokes"


def check_eq4_symmetry() -> None:
    rng = random.Random(12)
    for _ in range(200):
        plate = Waveplate(_rand_unit(rng))
        m = jones.quat_to_matrix(plate.q)
        assert jones.is_waveplate_matrix(m), "plate image must have retarder symmetry"
        assert abs(np.linalg.det(m) - 1.0) <= 1e-12, "unit plate must have det 1"


def check_oracle_differential() -> None:
    rng = random.Random(13)
    for _ in range(200):
        q = _rand_quat(rng)
        plate = Waveplate(_rand_unit(rng))
        via_quat = to_jones(q * plate.q)
        via_mat = jones.oracle_apply(to_jones(q), plate)
        assert (abs(via_quat.ex - via_mat.ex) <= 1e-12
                and abs(via_quat.ey - via_mat.ey) <= 1e-12)
        pol = PartialPolarizer(_rand_unit(rng), rng.random())
        r_quat = to_jones(polarizer_apply(q, pol))
        r_mat = jones.oracle_polarizer(to_jones(q), pol)
        assert (abs(r_quat.ex - r_mat.ex) <= 1e-12
                and abs(r_quat.ey - r_mat.ey) <= 1e-12)


def check_shifter_inversion() -> None:
    rng = random.Random(14)
    for _ in range(200):
        p = _rand_unit(rng)
        sol = shifter.solve_angles(p)
        if sol.classification is not shifter.Classification.REGULAR:
            continue
        for angles in sol.branches:
            assert (shifter.forward_transform(angles) - p).norm() <= 1e-9


def check_fig5_ramp() -> None:
    n = 256
    phis = [2.0 * math.pi * k / (n - 1) for k in range(n)]
    points = shifter.ramp_trajectory(FIG5_Q, FIG5_R, phis)
    thetas, epss = [], []
    for pt in points:
        assert pt.residual <= 1e-9, f"residual {pt.residual} at phi={pt.phi}"
        assert not pt.flagged, "no singular crossing expected for these states"
        ell = to_ellipse(FIG5_Q * shifter.forward_transform(pt.angles))
        thetas.append(ell.theta)
        epss.append(ell.epsilon)
    assert max(thetas) - min(thetas) <= 1e-8, "output orientation must stay constant"
    assert max(epss) - min(epss) <= 1e-8, "output ellipticity must stay constant"


def check_fig7_singular() -> None:
    n = 256
    phis = [2.0 * math.pi * k / (n - 1) for k in range(n)]
    points = shifter.ramp_trajectory(FIG7_Q, FIG7_R, phis)
    flagged = [pt for pt in points if pt.flagged]
    assert len(flagged) == 2, f"expected 2 singular crossings, saw {len(flagged)}"
    for pt in points:
        assert pt.residual <= 1e-9


CHECK_GROUPS = [
    ("eq1-table", check_eq1_table),
    ("table1-golden", check_table1_golden),
    ("table2-golden", check_table2_golden),
    ("stokes-equivalence", check_stokes_equivalence),
    ("eq4-symmetry", check_eq4_symmetry),
    ("oracle-differential", check_oracle_differential),
    ("shifter-inversion", check_shifter_inversion),
    ("fig5-ramp", check_fig5_ramp),
    ("fig7-singular", check_fig7_singular),
]
