#!/usr/bin/env python3
"""Partial polarizers: polarization dependent loss with quaternions.

No single right-factor quaternion can attenuate one SOP and pass the
orthogonal one; the polarizer needs the two-term expression
r = ((1+mu) q - (1-mu) i q s) / 2, with s the Stokes unit vector of the pass
axis.  This script sweeps the extinction and shows the eigenbehavior.
"""

from polquat import (
    ONE, J, PartialPolarizer, apply_phase, orthogonal_sop, polarizer_apply,
    stokes, to_classical, from_ellipse, EllipseParams,
)

pass_axis = from_ellipse(EllipseParams(1.0, 0.0, 0.15, 0.6))
print(f"pass axis (unit signal): {pass_axis}")

print("\n=== eigenbehavior across the extinction range ===")
print("  mu     |pass out|   |block out|")
for mu in (0.0, 0.25, 0.5, 0.75, 1.0):
    pol = PartialPolarizer(pass_axis, mu)
    on_axis = apply_phase(pass_axis, 0.7)
    blocked = apply_phase(orthogonal_sop(pass_axis), 0.7)
    print(f"  {mu:.2f}   {polarizer_apply(on_axis, pol).norm():10.6f}"
          f"   {polarizer_apply(blocked, pol).norm():10.6f}")

print("\nideal polarizer (mu = 0) projects a mixed input onto the pass axis:")
pol = PartialPolarizer(ONE, 0.0)
mixed = ONE + J
print(f"  input  {mixed}")
print(f"  output {polarizer_apply(mixed, pol)}")

print("\npower balance of a general input through mu = 0.5:")
pol = PartialPolarizer(pass_axis, 0.5)
for label, q in (("pass-axis", pass_axis),
                 ("blocked", orthogonal_sop(pass_axis)),
                 ("mixed", mixed)):
    r = polarizer_apply(q, pol)
    s = to_classical(stokes(r))
    print(f"  {label:10s} in-power {q.norm_sq():.4f}  out-power {r.norm_sq():.4f}"
          f"  out S=(%+.3f, %+.3f, %+.3f)" % (s.S1, s.S2, s.S3))
