# %% [markdown]
# # Spanning sets
#
# A spanning set maximizes a span measure, optionally with at most m objects.
# Exhaustive search is exact up to 20 objects; greedy and local search are
# heuristics that never beat it.

# %%
import random

from roughspan import InformationSystem, SolverConfig, solve_exhaustive, solve_greedy, solve_local

rng = random.Random(0)
ids = list(range(1, 13))
sys = InformationSystem.from_rows(
    ids, ["a", "b"], [[str(rng.randrange(3)), str(rng.randrange(2))] for _ in ids]
)

# %%
for measure in ("delta", "delta_prime", "hybrid"):
    cfg = SolverConfig(measure, 0.5, max_size=4)
    exact = solve_exhaustive(sys, ["a", "b"], cfg)
    greedy = solve_greedy(sys, ["a", "b"], cfg)
    local = solve_local(sys, ["a", "b"], cfg, seed=[1, 2])
    print(f"{measure:12s} exhaustive {exact.span.value:.4f} {exact.sorted_subset()}  "
          f"greedy {greedy.span.value:.4f}  local {local.span.value:.4f}")

# %% [markdown]
# Without a size bound the upper span is maximized by the whole universe
# (span 1) whenever w1 > 0.

# %%
print(solve_exhaustive(sys, ["a", "b"], SolverConfig("delta_prime", 0.3)).span.value)

# %% [markdown]
# The boundary-span optimum never exceeds the upper-span optimum.

# %%
for w1 in (0.1, 0.5, 0.9):
    z = solve_exhaustive(sys, ["a"], SolverConfig("delta", w1, max_size=3)).span.value
    zp = solve_exhaustive(sys, ["a"], SolverConfig("delta_prime", w1, max_size=3)).span.value
    print(f"w1={w1}: best delta {z:.4f} <= best delta' {zp:.4f}")
