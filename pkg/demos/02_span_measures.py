# %% [markdown]
# # Boundary span versus upper span
#
# The boundary span weighs the lower approximation against the boundary
# region; the upper span weighs it against the full upper approximation.
# The two differ by exactly w2 * |lower| / |U|.

# %%
from roughspan import (
    InformationSystem, approximate, complete_span, hybrid_span, span_delta, span_delta_prime,
)

sys = InformationSystem.from_rows(
    [1, 2, 3, 4, 5, 6], ["colour", "size"],
    [["red", "s"], ["red", "s"], ["green", "m"], ["green", "l"], ["blue", "l"], ["blue", "l"]],
)
x = {1, 2, 3}

# %%
for w1 in (0.2, 0.5, 0.8):
    d = span_delta(sys, ["colour"], x, w1).value
    dp = span_delta_prime(sys, ["colour"], x, w1).value
    lower = len(approximate(sys, ["colour"], x).lower)
    print(f"w1={w1}: delta={d:.4f} delta'={dp:.4f} "
          f"delta + w2*|lower|/|U| = {d + (1 - w1) * lower / sys.size:.4f}")

# %% [markdown]
# Refining the attribute set can only shrink the upper approximation, so the
# upper span may drop as attributes are added.

# %%
y = {1, 2, 3, 4}
for p in (["size"], ["colour", "size"]):
    appr = approximate(sys, p, y)
    print(p, sorted(appr.lower), sorted(appr.upper), round(span_delta_prime(sys, p, y, 0.5).value, 4))

# %% [markdown]
# Per-attribute sums: the complete span, optionally with the whole-set
# boundary span, and the hybrid span with the whole-set upper span.

# %%
p = ["colour", "size"]
print("complete              :", complete_span(sys, p, x, 0.5).value)
print("complete + full-set   :", complete_span(sys, p, x, 0.5, include_full_set=True).value)
print("hybrid                :", hybrid_span(sys, p, x, 0.5).value)
