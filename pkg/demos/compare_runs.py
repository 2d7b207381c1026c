"""Side-by-side evaluation of trained runs: outcomes, selection use and phase split.

Run: python demos/compare_runs.py RUN_DIR [RUN_DIR ...] [--episodes N]

Each run directory is one written by ``matchrl train`` (it holds
``config.yaml`` and ``checkpoints/best.npz``).  The acceptance tests leave
four such runs under ``runs/acceptance``.
"""
from __future__ import annotations

import argparse
from pathlib import Path

from matchrl.config import load_config
from matchrl.evaluation import (
    EvalConfig,
    PolicyAgent,
    evaluate,
    group_trajectories,
    noise_sweep,
    phase_profile,
    selection_contact_stats,
)
from matchrl.policy import load_policy


def pct(v) -> str:
    return "   -" if v is None else f"{v:5.1f}"


parser = argparse.ArgumentParser()
parser.add_argument("runs", nargs="+")
parser.add_argument("--episodes", type=int, default=100)
args = parser.parse_args()

print(f"{'run':40s} {'succ':>5s} {'break':>5s} {'F_all':>5s} {'F_con':>5s} {'%in':>5s} {'%free':>5s} "
      f"{'appr':>5s} {'cont':>5s} {'ins':>5s} {'s@7.5':>5s}")
for run in map(Path, args.runs):
    cfg = load_config(run / "config.yaml")
    policy, _, _ = load_policy(run / "checkpoints" / "best.npz")
    agent = PolicyAgent(policy, True)
    ecfg = EvalConfig(episodes=args.episodes)
    m, _, steps = evaluate(cfg.env_config(), agent, ecfg)
    trajs = group_trajectories(steps)
    sel = selection_contact_stats(trajs)
    frac = phase_profile(trajs, cfg.task.geometry).fractions
    swept = noise_sweep(cfg.env_config(), agent, [0.0075], args.episodes, ecfg.seed, ecfg.n_envs)[0.0075]
    con = "-" if m.mean_contact_force is None else f"{m.mean_contact_force:5.2f}"
    print(f"{run.name:40s} {m.success_rate:5.2f} {m.break_rate:5.2f} {m.mean_force:5.2f} {con:>5s} "
          f"{pct(sel['in_contact_force_pct'])} {pct(sel['free_space_force_pct'])} "
          + " ".join("    -" if frac[p] is None else f"{frac[p]:5.2f}" for p in ("approach", "contact", "insertion"))
          + f" {swept.success_rate:5.2f}")
