# %% [markdown]
# # Braid lifts and the Temperley-Lieb base change

# %%
from nctl import from_cycle, lift_standard_form, linear_extension, base_change, check_triangular
from nctl.tl import R

c = from_cycle([1, 2, 5, 4, 3])
x = linear_extension(c)[-1]
print(x, "lifts to", lift_standard_form(x))
print(R(x))

# %% [markdown]
# The matrix of R_x in the diagram basis, ordered by a linear extension, is unitriangular up to signs.

# %%
report = check_triangular(base_change(c))
print("triangular:", report.triangular, "rank:", report.rank, "sign pattern:", report.sign_pattern)
for name, entry in report.diagonal[:6]:
    print(f"  {name:12} {entry}")
