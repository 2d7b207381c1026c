"""Where MATCH and the joint (Hybrid-Basic) likelihood differ.

Run: python demos/mode_aware_likelihood.py

Draws one action, then shows that the joint log-probability moves when the
head of the branch that was not executed changes, while the MATCH
log-probability does not.  Also prints the head gradients on that branch.
"""
from __future__ import annotations

import numpy as np

from matchrl.action_spaces import Mode, PolicyHeads, log_prob_joint, log_prob_match, sample
from matchrl.diffnet import Tape, autodiff as ad

rng = np.random.default_rng(1)
p_force = np.array([[0.1, 0.1, 0.9]])
heads = PolicyHeads(mu_x=np.zeros((1, 3)), sigma_x=np.full((1, 3), 0.5), mu_yaw=np.zeros(1), sigma_yaw=np.ones(1),
                    mu_f=np.zeros((1, 3)), sigma_f=np.full((1, 3), 0.5), sel_logit=np.log1p(-p_force) - np.log(p_force))
smp = sample(heads, Mode.MATCH, rng)
print("selection (True = pose):", smp.selection[0])
print("pose delta (mm):", np.round(1000 * smp.x_delta[0], 3), " force target (N):", np.round(smp.f_d[0], 3))

for shift in (0.0, 0.5, 1.0):
    moved = PolicyHeads(**{**heads.__dict__, "mu_f": heads.mu_f + shift * smp.selection})
    print(f"force means on pose-controlled axes shifted by {shift}: "
          f"MATCH {float(log_prob_match(moved, smp)[0]):+.6f}  joint {float(log_prob_joint(moved, smp)[0]):+.6f}")

for name, fn in (("MATCH", log_prob_match), ("joint", log_prob_joint)):
    tape = Tape()
    mu_f = ad.leaf(heads.mu_f, tape)
    ad.backward(tape, ad.sum(fn(PolicyHeads(**{**heads.__dict__, "mu_f": mu_f}), smp)))
    print(f"{name:5s} d log p / d mu_f:", np.round(mu_f.grad[0], 6))
