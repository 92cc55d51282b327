"""Economic dispatch of the six-source benchmark across a demand sweep.

For each total demand the closed-form equal-incremental-cost split is
computed, checked against its KKT conditions, and compared with a naive
proportional-to-rating split to show the cost gap. Saves a plot of the
per-source shares when matplotlib is available.
"""
import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
from conftest import build_benchmark_spec  # noqa: E402

from dcgrid import kkt_residual, solve_eic  # noqa: E402


def total_cost(gens, I):
    return sum(g.alpha * x ** 2 + g.beta * x + g.gamma
               for g, x in zip(gens, I))


def main():
    spec = build_benchmark_spec()
    gens = spec.gens
    rated = np.array([g.I_rated for g in gens])

    demands = np.linspace(2.0, 40.0, 20)
    lam = np.zeros_like(demands)
    shares = np.zeros((demands.size, len(gens)))
    gap = np.zeros_like(demands)

    print(f"{'demand (A)':>10} {'lambda ($/A)':>13} {'cost ($)':>10} "
          f"{'naive gap ($)':>14} {'KKT spread':>11}")
    for n, d in enumerate(demands):
        sol = solve_eic(gens, d)
        lam[n] = sol.lambda_opt
        shares[n] = sol.I_G / d
        naive = rated / rated.sum() * d
        gap[n] = total_cost(gens, naive) - sol.total_cost
        spread, _ = kkt_residual(gens, sol.I_G)
        print(f"{d:10.2f} {sol.lambda_opt:13.6f} {sol.total_cost:10.4f} "
              f"{gap[n]:14.6f} {spread:11.2e}")

    # the optimal split never loses to the rating-proportional heuristic
    assert gap.min() >= -1e-12
    print("\nshares drift with demand: the beta offsets dominate when "
          "demand is low")
    print("  max share drift over the sweep:",
          f"{np.abs(shares - shares[-1]).max():.2e}")
    print("  share of source 1 at 2 A vs 40 A:",
          f"{shares[0, 0]:.4f} vs {shares[-1, 0]:.4f}")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping the plot")
        return
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    for i in range(len(gens)):
        ax1.plot(demands, shares[:, i], label=f"source {i + 1}")
    ax1.set_xlabel("total demand (A)")
    ax1.set_ylabel("share of demand")
    ax1.legend(fontsize=8)
    ax2.plot(demands, lam)
    ax2.set_xlabel("total demand (A)")
    ax2.set_ylabel("incremental cost ($/A)")
    fig.tight_layout()
    out = os.path.join(os.path.dirname(__file__), "out")
    os.makedirs(out, exist_ok=True)
    path = os.path.join(out, "dispatch_curves.png")
    fig.savefig(path, dpi=120)
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
