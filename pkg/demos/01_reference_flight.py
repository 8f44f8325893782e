"""Fly the bundled gate tasks with a hand-written controller.

Before any learning, it helps to see that the simulator, the gate-crossing
check and the evaluation protocol behave sensibly. ``GateSeeker`` is a small
PD law that steers toward the target gate using only the observation vector,
so it exercises exactly the interface a learned policy sees.

Run:  python3 demos/01_reference_flight.py
"""

from pathlib import Path

import numpy as np

from aerobatic_rl.baselines import GateSeeker, constant_policy
from aerobatic_rl.config import load_config
from aerobatic_rl.evaluation import export_trajectory, run_episodes, run_eval
from aerobatic_rl.learner import TrainSetup
from aerobatic_rl.track import track_from_section

CONFIGS = Path(__file__).resolve().parents[1] / "configs"
OUT = Path(__file__).resolve().parent / "out"


def load(name):
    cfg = load_config(CONFIGS / f"{name}.toml")
    return track_from_section(cfg["track"]), TrainSetup.from_config(cfg)


# A gate one metre ahead of a tight start box: the controller should pass every time,
# while a policy that only climbs leaves the arena.
track, setup = load("hover_gate")
print("hover_gate")
print("  seeker   ", run_eval(GateSeeker(), track, 20, 0.0, 0, setup).to_dict())
print("  climb    ", run_eval(constant_policy([1.0, 0, 0, 0]), track, 5, 0.0, 0, setup).terminations)

# The Split-S gate is inverted, 3 m away, with a random yaw at the start and a gate that
# may oscillate. The PD law has no notion of the required flip, so it manages only part
# of the episodes; a trained policy should do better.
track, setup = load("splits_single")
print("splits_single (seeker)")
for mv in (0.0, 0.5, 1.0):
    m = run_eval(GateSeeker(), track, 40, mv, 1, setup)
    print(f"  gate speed {mv:.1f} m/s: success {m.success_rate:.2f}  Aer.P {m.aer_p:.3f} m  "
          f"Aer.A {m.aer_a:.1f} deg  {m.terminations}")

# Record one successful episode and write it out as CSV for plotting.
episodes = run_episodes(GateSeeker(), track, 10, 0.0, 2, setup, record=True)
ok = [ep for ep in episodes if ep["success"]]
if ok:
    path = export_trajectory(ok[0], OUT / "seeker_splits_single.csv")
    traj = np.array(ok[0]["trajectory"])
    print(f"wrote {path} ({len(traj)} rows, {traj[-1, 0]:.2f} s of flight)")
