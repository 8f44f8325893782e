"""Where the curriculum starts episodes.

The reset curriculum runs the flat (position, velocity, acceleration)
dynamics backwards from states at the gate. Every intermediate state is a
point from which the gate is reachable along a feasible trajectory. Those
states, a replay buffer of older ones, and the ordinary start box are then
mixed with fixed probabilities.

Run:  python3 demos/02_reset_curriculum.py
"""

from collections import Counter
from pathlib import Path

import numpy as np

from aerobatic_rl.config import load_config
from aerobatic_rl.curriculum import (
    CurriculumConfig,
    ResetSets,
    expand_flats,
    flat_to_state,
    initial_resets,
    sample_reset,
    state_to_flat,
)
from aerobatic_rl.rotations import body_z
from aerobatic_rl.track import to_local, track_from_section

CONFIGS = Path(__file__).resolve().parents[1] / "configs"
rng = np.random.default_rng(0)

# 1. Backward expansion of a single hover state under random jerk.
p, v = np.zeros((1, 3)), np.array([[3.0, 0.0, 0.0]])
q = np.array([[1.0, 0.0, 0.0, 0.0]])
flat = state_to_flat(p, q, v, np.array([9.81]))
exp = expand_flats(flat, K=100, dt=0.01, jerk_range=60.0, rng=rng)
last = exp.flats.take(-1)
print("one second back in time from the goal:")
print(f"  p = {np.round(last.p[0], 3)}, v = {np.round(last.v[0], 3)}")
states = flat_to_state(exp.flats.take(np.s_[::25, 0]))
print("  body z-axis along the way:", np.round(body_z(states.q), 2).tolist())

# 2. The initial reset set of the Split-S gate, expressed in the gate frame.
cfg = load_config(CONFIGS / "splits_single.toml")
track = track_from_section(cfg["track"])
cc = CurriculumConfig.from_config(cfg["curriculum"])
resets = initial_resets(track, cc, rng)
gate = track.waypoints[0]
local = to_local(resets.p, (gate.position, gate.quat))
dist = np.linalg.norm(local, axis=1)
print(f"\n{len(resets)} initial reset states for splits_single")
print(f"  distance to gate: median {np.median(dist):.2f} m, 90th pct {np.percentile(dist, 90):.2f} m")
print(f"  all in front of the gate plane: {bool(np.all(local[:, 0] <= 0))}")

# 3. Biased sampling between the current set, the buffer and the start box.
sets = ResetSets(rho1=cc.rho1, rho2=cc.rho2, capacity=cc.buffer_capacity, start_sampler=lambda r: None)
sets.set_current(resets)
counts = Counter(sample_reset(sets, rng).source for _ in range(20000))
print("\nreset sources over 20000 draws:", {k: round(n / 20000, 3) for k, n in sorted(counts.items())})
