# %% [markdown]
# # Span-guided feature selection
#
# Forward selection adds the attribute that most raises the mean upper span
# of the decision classes. With k decision classes, w1 above (k - 1) / k
# makes consistent attribute subsets score highest.

# %%
import random

from roughspan import InformationSystem, select_features

rng = random.Random(3)
n = 12
key = [str(rng.randrange(4)) for _ in range(n)]
decision = ["yes" if v in ("0", "1") else "no" for v in key]
rows = [[str(rng.randrange(3)), key[i], str(rng.randrange(2))] for i in range(n)]
sys = InformationSystem.from_rows(list(range(n)), ["noise", "key", "coin"], rows, "play", decision)

# %%
result = select_features(sys, 0.8)
print("selected:", result.selected)
for step in result.trace:
    print(f"  +{step.attribute:6s} criterion={step.criterion:.4f} mean accuracy={step.mean_accuracy:.4f}")

# %% [markdown]
# At low w1 the criterion rewards coarse granules, so selection stops after
# the first attribute.

# %%
print(select_features(sys, 0.2).selected)
