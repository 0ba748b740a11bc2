"""Compare spectral frame bounds with frame-operator eigenvalues on random graphs.

For each trial a random connected weighted graph and ``M`` random generators
are drawn; the script reports the worst scaled gap between the spectral bounds
and the assembled-operator bounds, and how often the two verdicts disagree.

Usage: python3 scripts/random_trials.py --trials 1000 --n-max 12 --generators 3
"""

import argparse
import time
from dataclasses import dataclass

import numpy as np

from graph_frames import Graph, decompose, laplacian
from graph_frames.frames import multi_generator_frame_bounds
from graph_frames.spectral import igft


@dataclass
class TrialConfig:
    trials: int = 1000
    n_max: int = 12
    generators: int = 3
    sparsity: float = 0.2
    seed: int = 0


def random_graph(rng, n, p=0.5):
    edges = {}
    order = rng.permutation(n) + 1
    for k in range(1, n):
        a, b = int(order[k]), int(order[rng.integers(0, k)])
        edges[(min(a, b), max(a, b))] = rng.uniform(0.1, 3.0)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i, j) not in edges and rng.random() < p:
                edges[(i, j)] = rng.uniform(0.1, 3.0)
    return Graph.from_edges(n, [(i, j, w) for (i, j), w in edges.items()])


def run(cfg: TrialConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    worst, disagree, frames = 0.0, 0, 0
    for _ in range(cfg.trials):
        basis = decompose(laplacian(random_graph(rng, int(rng.integers(1, cfg.n_max + 1)))))
        gens = []
        for _ in range(int(rng.integers(1, cfg.generators + 1))):
            c = rng.standard_normal(basis.n) + 1j * rng.standard_normal(basis.n)
            c[rng.random(basis.n) < cfg.sparsity] = 0
            gens.append(igft(basis, c))
        r = multi_generator_frame_bounds(basis, gens)
        scale = 1 + r.oracle_bounds.upper
        worst = max(worst, r.max_deviation / scale)
        disagree += r.verdict != r.details["oracle_verdict"]
        frames += r.verdict == "frame"
    return {"trials": cfg.trials, "frames": frames, "verdict_disagreements": disagree,
            "max_scaled_bound_gap": worst}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(TrialConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default), default=default)
    cfg = TrialConfig(**vars(p.parse_args()))
    t0 = time.perf_counter()
    out = run(cfg)
    for k, v in out.items():
        print(f"{k}: {v:.3g}" if isinstance(v, float) else f"{k}: {v}")
    print(f"elapsed: {time.perf_counter() - t0:.2f}s")


if __name__ == "__main__":
    main()
