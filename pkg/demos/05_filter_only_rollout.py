"""Filter-only control: LQR through the barrier filter on cart-pole tracking.

Runs the whole artifact pipeline at a small data budget (no learning), then
rolls the LQR nominal controller through the filter and prints per-episode
diagnostics: violations, interventions, slack, and the minimum barrier value.
"""

import json

from safelift.experiments import RunConfig, run_pipeline

cfg = RunConfig(
    env="cartpole_track",
    nominal="lqr",
    seeds=(0,),
    budget=0,
    data_steps=6000,
    cal_size=1200,
    action_repeat=3,
    final_eval_episodes=10,
    trace=True,
)
run_dir = run_pipeline(cfg, "runs_demo")
with open(run_dir / "summary.json") as f:
    summary = json.load(f)

seed = summary["seeds"][0]
print(f"artifacts under {run_dir}")
print(f"rho per barrier: { {k: round(v, 5) for k, v in seed['rho'].items()} }")
print(f"control authority per barrier: { {k: round(v, 5) for k, v in seed['barrier_authority'].items()} }")
final = seed["final"]
print(
    f"10 episodes: violation={final['violation_rate']:.4f} "
    f"intervention={final['intervention_rate']:.4f} slack={final['slack_rate']:.4f} "
    f"min_h={final['min_h']:.4f} return={final['return_mean']:.1f}"
)
print("regimes:", {k: round(v, 3) for k, v in final["regime_fractions"].items()})
print(f"per-step filter trace: {run_dir / 'seed0' / 'trace.csv'}")
