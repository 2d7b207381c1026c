"""Pose versus force control of a peg held above the table.

Run: python demos/controller_modes.py

Prints a free-space pose step, then the peg pressing into the table under
force control on z.  The force law is purely proportional, so the steady
contact force sits below the target by the factor m*k_f / (1 + m*k_f).
"""
from __future__ import annotations

import numpy as np

from matchrl.controller import ControlCommand, ControllerGains, Plant, SensorConfig, pose_command, run_lowlevel
from matchrl.dynamics import MassConfig, make_state

plant = Plant(sensor=SensorConfig(noise=0.0))

print("pose step of +2 cm on z (one row per policy step, 15 Hz)")
s = make_state([0.0, 0.0, 0.05])
cmd = pose_command(s.ee_pos + [0.0, 0.0, 0.02], 0.0)
for k in range(10):
    s = run_lowlevel(cmd, s, plant, 8).state
    print(f"  t={(k + 1) / 15:.3f} s  dz={1000 * (s.ee_pos[2] - 0.05):7.3f} mm")

print("\nforce control on z against the table, target 5 N")
s = make_state([0.05, 0.0, 0.0])
cmd = ControlCommand(np.array([True, True, False]), s.ee_pos.copy(), np.asarray(0.0), np.array([0.0, 0.0, -5.0]))
f_prev = None
for k in range(8):
    res = run_lowlevel(cmd, s, plant, 8, f_prev=f_prev)
    s, f_prev = res.state, res.f_ee
    print(f"  t={(k + 1) / 15:.3f} s  contact force z={s.contact_force[2]:.3f} N")

gain = MassConfig().mass * ControllerGains().k_f[2]
print(f"  proportional steady state: 5 * {gain:.2f} / (1 + {gain:.2f}) = {5 * gain / (1 + gain):.3f} N")

print("\nthe same 5 N push on the hole rim while moving down fast breaks the peg")
s = make_state([0.006, 0.0, 0.004], ee_vel=[0.0, 0.0, -0.3])
cmd = ControlCommand(np.array([True, True, False]), s.ee_pos.copy(), np.asarray(0.0), np.array([0.0, 0.0, -5.0]))
res = run_lowlevel(cmd, s, plant, 8)
print(f"  broken={bool(res.state.broken)}  peak force={float(res.max_force):.1f} N")
