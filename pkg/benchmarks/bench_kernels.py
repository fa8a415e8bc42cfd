"""Time each compiled kernel against its numpy fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends are imported in-process: the numba functions from
``nsdt.kernels`` and the ``*_numpy`` reference functions beside them.
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from nsdt import kernels
from nsdt.gridworld import case2_default
from nsdt.theory.mdp import mdp_from_env


def best_of(fn, repeat: int) -> float:
    fn()  # warm-up (and JIT compile)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def cases():
    rng = np.random.default_rng(0)
    h = w = 64
    passable = rng.random((h, w)) > 0.2
    passable[0, 0] = True
    blocked = np.zeros_like(passable)
    yield ("distance_field 64x64",
           lambda: kernels.distance_field(passable, blocked, blocked, 0, 0),
           lambda: kernels.distance_field_numpy(passable, blocked, blocked, 0, 0))

    mdp = mdp_from_env(case2_default(), 0.95)
    v = rng.normal(size=mdp.n_states)
    args = (mdp.next_states, mdp.probs, mdp.rewards, v, mdp.gamma)
    yield (f"bellman_backup S={mdp.n_states}",
           lambda: kernels.bellman_backup(*args),
           lambda: kernels.bellman_backup_numpy(*args))

    policy = rng.integers(0, mdp.n_actions, size=mdp.n_states)
    starts = np.zeros(5000, dtype=np.int64)
    cum = np.cumsum(mdp.probs, axis=-1)
    roll = (mdp.next_states, cum, mdp.rewards, mdp.terminal, policy, starts, 0.95, 200, 0)
    yield ("rollouts 5000x200",
           lambda: kernels.rollouts(*roll),
           lambda: kernels.rollouts_numpy(*roll))

    x = rng.normal(size=(128, 42, 512)).astype(np.float32)
    t = np.tanh(x)
    g = rng.normal(size=x.shape).astype(np.float32)
    yield ("gelu_grad 128x42x512",
           lambda: kernels.gelu_grad(x, t, g),
           lambda: kernels.gelu_grad_numpy(x, t, g))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not kernels.HAVE_NUMBA:
        print("numba backend disabled (NSDT_KERNELS=numpy or numba missing); nothing to compare")
        return
    rows = []
    for name, fast, ref in cases():
        tn, tp = best_of(fast, args.repeat), best_of(ref, args.repeat)
        rows.append({"kernel": name, "numba_ms": tn * 1e3, "numpy_ms": tp * 1e3, "speedup": tp / tn})
        print(f"{name:<24} numba {tn * 1e3:9.3f} ms   numpy {tp * 1e3:9.3f} ms   x{tp / tn:6.1f}")
    print(json.dumps(rows))


if __name__ == "__main__":
    main()
