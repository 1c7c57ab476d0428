"""Fit a lifted linear predictor of the cart-pole from random rollouts.

Collects exploration transitions, places RBF centers by k-means, fits
z+ = A z + B u by ridge regression, and reports one-step and ten-step
open-loop prediction error plus a serialization round trip.
"""

import tempfile
from pathlib import Path

import numpy as np

from safelift import fit_centers, fit_model, lift, load_model, residual, save_model
from safelift.experiments import RunConfig, collect_transitions, make_run_env

cfg = RunConfig(env="cartpole_stab", action_repeat=3, data_steps=6000)
env = make_run_env(cfg)
rng = np.random.default_rng(0)
transitions = collect_transitions(env, cfg.data_steps // cfg.action_repeat, rng)
print(f"collected {len(transitions)} transitions at a {cfg.action_repeat * 0.02:.2f}s control step")

states = np.stack([t.y for t in transitions])
dictionary = fit_centers(states, 32, seed=0)
model = fit_model(dictionary, transitions, ridge_lambda=1e-4)
print(f"lifted dim {model.lifted_dim} (4 raw coordinates + {dictionary.n_rbf} RBF features)")
print(f"one-step  MSE  {model.fit_mse1:.3e}")
print(f"ten-step  MSE  {model.fit_mseH:.3e}")

# residual of a held-out step, and the defining identity it satisfies
t = transitions[-1]
r = residual(model, t)
z_next = model.A @ lift(dictionary, t.y) + model.B @ t.u + r
print(f"max |psi(y+) - (Az + Bu + r)| = {np.max(np.abs(lift(dictionary, t.y_plus) - z_next)):.2e}")

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    print(f"round trip bit-identical: {loaded.A.tobytes() == model.A.tobytes()}")
