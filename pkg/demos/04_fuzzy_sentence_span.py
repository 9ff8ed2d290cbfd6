# %% [markdown]
# # Fuzzy-rough span of two sentences
#
# The universe is nine domain words. Each sentence's fuzzy lower and upper
# approximations come from a word-similarity relation; the vectors ship with
# the package. The sentence with the higher span covers the domain better at
# every weight.

# %%
from roughspan import FuzzyRelation, FuzzySet, fuzzy_approximate, fuzzy_span, validate_relation
from roughspan import table1

for sentence in ("S1", "S2"):
    print(sentence, table1.SENTENCES[sentence])

# %%
for w1, *_ in table1.PUBLISHED:
    s1 = fuzzy_span(*table1.sentence_approximations("S1"), w1).value
    s2 = fuzzy_span(*table1.sentence_approximations("S2"), w1).value
    print(f"w1={w1:.1f}  S1={s1:.4f}  S2={s2:.4f}")

# %%
for cell in table1.reproduce():
    if not cell.matches_published:
        print(f"printed {cell.published} for {cell.sentence} at w1={cell.w1}; "
              f"the weighted sum gives {cell.computed:.4f}")

# %% [markdown]
# Computing approximations from a relation: a small hand-made similarity
# over three words and a sentence membership vector.

# %%
words = ("kids", "boys", "yard")
rel = FuzzyRelation(words, [[1.0, 0.8, 0.1], [0.8, 1.0, 0.1], [0.1, 0.1, 1.0]])
print("valid relation:", validate_relation(rel, "warn").valid)
sentence = FuzzySet(words, [0.0, 1.0, 1.0])
pair = fuzzy_approximate(rel, sentence, "I")
print("lower:", pair.lower.membership, "upper:", pair.upper.membership)
print("span :", round(fuzzy_span(pair.lower, pair.upper, 0.5).value, 4))
