#!/usr/bin/env python3
"""Waveplates as unit quaternions: composition, rotation, precession.

A plate of retardance 2*eta with slow axis s (a Stokes unit vector) is the
exponential exp(s * eta).  On the Poincare sphere it precesses the Stokes
vector of the input by the retardance about that axis.
"""

import math

import numpy as np

from polquat import (
    apply, axis_retardance, compose, hwp, qwp, rotate_element,
    stokes, to_classical, waveplate_from_axis, from_ellipse, EllipseParams,
)

print("=== the standard plates ===")
print(f"  qwp(0)      {qwp(0.0).q}")
print(f"  hwp(0)      {hwp(0.0).q}")
print(f"  hwp(pi/4)   {hwp(math.pi / 4).q}")

print("\n=== two quarter plates make a half plate ===")
print(f"  qwp(0) * qwp(0) = {compose([qwp(0.0), qwp(0.0)]).q}")

print("\n=== axis + retardance form ===")
for psi in (0.0, 0.3, 1.0):
    form = axis_retardance(qwp(psi))
    print(f"  qwp({psi:.1f}): axis {form.axis}, retardance {form.retardance:.6f}")

print("\n=== rotation preserves retardance, moves the axis ===")
plate = waveplate_from_axis(from_ellipse(EllipseParams(1, 0, 0.35, 0.2)), 0.8)
for psi in (0.0, 0.5, 1.0):
    form = axis_retardance(rotate_element(plate, psi))
    print(f"  psi={psi:.1f}: axis ({form.axis.q1:+.4f}, {form.axis.q2:+.4f}, "
          f"{form.axis.q3:+.4f}), 2*eta={form.retardance:.6f}")

print("\n=== precession on the Poincare sphere ===")
signal = from_ellipse(EllipseParams(1.0, 0.0, 0.0, math.pi / 4))
s_in = to_classical(stokes(signal))
print(f"  input Stokes   ({s_in.S1:+.4f}, {s_in.S2:+.4f}, {s_in.S3:+.4f})")
plate = qwp(0.0)  # rotation by pi/2 about the S1 axis
out = apply(signal, plate)
s_out = to_classical(stokes(out))
print(f"  after qwp(0)   ({s_out.S1:+.4f}, {s_out.S2:+.4f}, {s_out.S3:+.4f})")
print("  the 45-degree linear state moves to the circular pole")

print("\n=== a stack acts like one plate ===")
rng = np.random.default_rng(5)
stack = [qwp(rng.uniform(-1, 1)) for _ in range(4)]
combined = compose(stack)
probe = from_ellipse(EllipseParams(1, 0.2, -0.1, 0.7))
step = probe
for p in stack:
    step = apply(step, p)
print(f"  sequential: {step}")
print(f"  composed:   {apply(probe, combined)}")
