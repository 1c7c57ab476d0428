"""End-to-end safe training at toy scale.

Runs the full pipeline -- collect, fit, calibrate, train the actor-critic
through the filter, evaluate -- on cart-pole stabilization with a reduced
budget so it finishes in a couple of minutes.  The acceptance-scale equivalent
(30k-step budget, 3 seeds, 100 eval episodes) lives in
tests/test_acceptance.py; the CLI equivalent of this script is

    safelift train --config <cfg.json> --out runs
"""

import json

from safelift.experiments import RunConfig, run_pipeline

cfg = RunConfig(
    env="cartpole_stab",
    nominal="agent",
    seeds=(0,),
    budget=12_000,
    data_steps=6000,
    cal_size=1200,
    action_repeat=3,
    eval_every=3000,
    eval_episodes=3,
    final_eval_episodes=5,
    start_steps=400,
    update_after=400,
    gradient_steps=3,
)
run_dir = run_pipeline(cfg, "runs_demo")
with open(run_dir / "summary.json") as f:
    summary = json.load(f)

final = summary["seeds"][0]["final"]
print(f"run id        {summary['run_id']}")
print(f"rho           {summary['rho_max']['mean']:.5f}")
print(f"return        {final['return_mean']:.1f}")
print(f"violations    {final['violation_rate']:.4f}")
print(f"interventions {final['intervention_rate']:.4f}")
print(f"min h         {final['min_h']:.4f}")
print(f"artifacts     {run_dir}")
print("render figures with:  plot --kind curves --in", run_dir, "--out curves.png")
