# %% [markdown]
# # Noncrossing partitions and fully commutative elements
#
# Walk through the objects for the Coxeter element c = (1,3,4,2) in S_4.

# %%
from nctl import from_cycle, enumerate_nc, enumerate_fc, phi, involution, psi1, psi2
from nctl.fc import fc_str

c = from_cycle([1, 3, 4, 2])
print("c =", c, "word", c.word(), "left set", sorted(c.left_set))

# %% [markdown]
# Both sets have 14 elements.

# %%
ncs = enumerate_nc(c)
print(len(ncs), len(enumerate_fc(c.n)))

# %% [markdown]
# The involution, the two sequence pairs and the image in FC, row by row.

# %%
for x in ncs:
    w = phi(x)
    print(f"{str(x):12} {str(involution(x)):12} {str(psi1(x)):18} {str(psi2(x)):18} {fc_str(w)}")
