# %% [markdown]
# # Rough approximations of a set of objects
#
# Six objects described by one categorical attribute fall into three
# indiscernibility classes. We approximate the set {1, 2, 3} from below and
# above.

# %%
from roughspan import InformationSystem, accuracy, approximate, partition, roughness

sys = InformationSystem.from_rows(
    [1, 2, 3, 4, 5, 6], ["colour"],
    [["red"], ["red"], ["green"], ["green"], ["blue"], ["blue"]],
)
print("granules:", [sorted(c) for c in partition(sys, ["colour"])])

# %%
x = {1, 2, 3}
appr = approximate(sys, ["colour"], x)
print("lower   :", sorted(appr.lower))
print("upper   :", sorted(appr.upper))
print("boundary:", sorted(appr.boundary))

# %% [markdown]
# Accuracy is |lower| / |upper|; roughness is its complement.

# %%
print("accuracy :", accuracy(sys, ["colour"], x))
print("roughness:", roughness(sys, ["colour"], x))

# %% [markdown]
# With no attributes every object is indiscernible, so the only granule is
# the whole universe.

# %%
print(partition(sys, []))
