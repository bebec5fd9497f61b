# %% [markdown]
# # Standard forms and the vertical-vector order

# %%
from nctl import linear_coxeter, linear_extension, standard_form, vertical_vector, extract_w, phi
from nctl.stdform import cover_relations, fc_subwords
from nctl.tables import hasse_dot

c = linear_coxeter(3)
for x in linear_extension(c):
    print(f"{str(x):12} {str(standard_form(x)):36} {vertical_vector(x)}  {extract_w(x)}")

# %% [markdown]
# The extracted subword always spells phi(x).

# %%
assert all(extract_w(x) == phi(x) for x in linear_extension(c))

# %% [markdown]
# Every FC element hidden in a standard form comes from something lower in the order.

# %%
x = linear_extension(c)[-1]
print(x, sorted(str(w) for w in fc_subwords(x)))

# %%
print(len(cover_relations(c)), "cover relations")
print(hasse_dot(c))
