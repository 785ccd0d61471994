"""Show where iterative refinement helps over the plain one-engine run.

Fuzzy ART is order-sensitive: early samples carve out boxes that later
samples then distort, often leaving small spurious clusters behind.  The
refinement loop detects clusters whose membership shrinks between full
passes, deletes them, reassigns their samples, and relaxes each
cluster's vigilance slightly, so fragments get absorbed into their
stable neighbors.

This script runs both engines on the bundled flag dataset over ten
random presentation orders at the vigilance where refinement reaches a
perfect partition, then prints a side-by-side table.
"""

import numpy as np

from irart import HyperParams, load_flag, prepare_inputs, run_fuzzy_art, run_ir_art, scores


def main():
    raw = load_flag()
    coded = prepare_inputs(raw)
    params = HyperParams(alpha=0.001, beta=0.5, rho0=0.4, tau=0.01)

    print(f"flag dataset: {raw.n_samples} samples, 3 true clusters, rho0={params.rho0}")
    print(f"{'seed':>4} {'baseline ARI':>13} {'k':>3} {'refined ARI':>12} {'k':>3} {'iters':>6}")

    base_aris, ref_aris = [], []
    for seed in range(10):
        order = np.random.default_rng(seed).permutation(raw.n_samples)
        data, labels = coded[order], raw.labels[order]

        fa_model, fa_assign, _ = run_fuzzy_art(data, params)
        _, fa_ari = scores(labels, fa_assign)

        ir_model, ir_assign, trace = run_ir_art(data, params)
        _, ir_ari = scores(labels, ir_assign)

        base_aris.append(fa_ari)
        ref_aris.append(ir_ari)
        print(
            f"{seed:>4} {fa_ari:>13.3f} {len(fa_model):>3} "
            f"{ir_ari:>12.3f} {len(ir_model):>3} {trace.iterations:>6}"
        )

    print(f"mean {np.mean(base_aris):>13.3f}     {np.mean(ref_aris):>12.3f}")


if __name__ == "__main__":
    main()
