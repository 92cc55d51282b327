"""Steady states of the benchmark network straight from the algebraic
solvers, no simulation involved.

Shows four configurations side by side: droop only, droop with the full
ZIP load, secondary consensus, and secondary consensus with one source
unplugged. The consensus column pins the cost-weighted average terminal
voltage at nominal and equalizes incremental costs; droop does neither.
"""
import os
import sys

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "tests"))
from conftest import build_benchmark_comm, build_benchmark_spec  # noqa: E402

from dcgrid import (ControllerConfig, LoadMask,  # noqa: E402
                    SpecValidationError, solve_closed_loop_equilibrium,
                    solve_droop_equilibrium, weighted_average_voltage)
from dcgrid.control import incremental_costs  # noqa: E402


def describe(spec, name, eq):
    act = eq.gen_active
    lam = incremental_costs(spec, eq.I_G)
    wavg = weighted_average_voltage(
        [g for g, a in zip(spec.gens, act) if a], eq.V_gen[act])
    print(f"\n{name}")
    print(f"  residual {eq.residual_norm:.2e}, "
          f"weighted average voltage {wavg:.6f} V")
    if eq.lambda_opt is not None:
        print(f"  optimal incremental cost {eq.lambda_opt:.9f} $/A")
    print(f"  lambda spread over active sources: "
          f"{lam[act].max() - lam[act].min():.3e} $/A")
    print(f"  bus voltage range: {eq.V_N.min():.3f} .. {eq.V_N.max():.3f} V")
    if eq.low_voltage:
        print("  WARNING: a bus sits below the low-voltage fraction")


def main():
    spec = build_benchmark_spec()
    cfg = ControllerConfig(k_P=2.0, comm=build_benchmark_comm())
    nN = spec.graph.n_buses
    zi = LoadMask.zi_only(nN)
    zip_all = LoadMask.all_on(nN)

    describe(spec, "droop only, impedance + current loads",
             solve_droop_equilibrium(spec, zi))
    describe(spec, "droop only, full ZIP load",
             solve_droop_equilibrium(spec, zip_all))
    describe(spec, "secondary consensus, impedance + current loads",
             solve_closed_loop_equilibrium(spec, cfg, zi))
    act = np.ones(spec.graph.n_gens, bool)
    act[3] = False
    describe(spec, "secondary consensus, source 4 unplugged",
             solve_closed_loop_equilibrium(spec, cfg, zi, act))

    # the consensus equilibrium is dispatch-optimal: removing any source
    # strictly raises the optimal incremental cost
    base = solve_closed_loop_equilibrium(spec, cfg, zi)
    print("\nlambda_opt after unplugging each source in turn:")
    for i in range(spec.graph.n_gens):
        act = np.ones(spec.graph.n_gens, bool)
        act[i] = False
        try:
            eq = solve_closed_loop_equilibrium(spec, cfg, zi, act)
        except SpecValidationError:
            # agent 2 is a cut vertex of the exchange graph
            print(f"  without source {i + 1}: exchange graph disconnects, "
                  "no consensus equilibrium")
            continue
        print(f"  without source {i + 1}: {eq.lambda_opt:.6f} "
              f"(+{eq.lambda_opt - base.lambda_opt:.6f})")


if __name__ == "__main__":
    main()
