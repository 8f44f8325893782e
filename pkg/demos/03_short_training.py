"""A few minutes of PPO on the easy gate.

``hover_gate`` is small enough that the learner reaches a high success rate
in a handful of iterations on a laptop CPU. The same ``train`` call, with a
different config, drives the full strategy comparison.

Run:  python3 demos/03_short_training.py [iterations]
"""

import sys
from pathlib import Path

from aerobatic_rl.config import load_config
from aerobatic_rl.evaluation import run_eval
from aerobatic_rl.learner import TrainSetup, train
from aerobatic_rl.track import track_from_section

CONFIGS = Path(__file__).resolve().parents[1] / "configs"
OUT = Path(__file__).resolve().parent / "out" / "hover_gate_sp"

iterations = int(sys.argv[1]) if len(sys.argv) > 1 else 10
cfg = load_config(CONFIGS / "hover_gate.toml")
track, setup = track_from_section(cfg["track"]), TrainSetup.from_config(cfg)
print(setup.describe())


def show(row):
    print(f"iter {row['iteration']:3d}  steps {row['env_steps']:8d}  "
          f"eval return {row['eval_reward']:7.3f}  success {row['eval_success_rate']:.2f}")


params, rows, trainer = train(track, setup, mode="sp", seed=0, out_dir=OUT, iterations=iterations, progress=show)
final = run_eval(trainer.policy(), track, 50, 0.0, 123, setup)
print(f"\nfinal: success {final.success_rate:.2f} over 50 episodes, mean flight time {final.flight_time:.2f} s")
print(f"checkpoint and log in {OUT}")
