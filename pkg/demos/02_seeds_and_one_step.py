# %% [markdown]
# Quasi-polynomial seeds and the one-step transform
#
# Each of the eight gauge classes turns a classical polynomial at permuted
# parameters into an eigenfunction xi_d(x) p(x) of H.  The gauge factor is
# never evaluated; only its two rational ratios are used.

# %%
from xbannaito import DEFAULT_PARAMS, build_seed, verify_intertwining, xbi_family
from xbannaito.gauge import GAUGE_CLASSES, conjugated_operator, gauge_class

p = DEFAULT_PARAMS
for d in GAUGE_CLASSES:
    g = gauge_class(d, p)
    conjugated_operator(d, p)  # raises if xi^-1 H xi differs from the table
    print(f"d={d}: eta = {g.eta}, C = {g.C}, sign = {g.sign:+d}")

# %% [markdown]
# A seed fixes the transform.  The four operator identities are checked as
# exact equalities of normal forms.

# %%
seed = build_seed((3, 1), p)
print("mu =", seed.mu)
for name, ok in verify_intertwining(seed, n_max=6).checks.items():
    print(f"  {name:28s} {ok}")

# %% [markdown]
# The exceptional family has a gap in its degree sequence; for a class 1
# seed of degree m the polynomial at n = m is identically zero.

# %%
fam = xbi_family((3, 1), 8, p)
print("degrees for (3,1):", fam.degree_set)
fam = xbi_family((1, 3), 8, p)
print("degrees for (1,3):", fam.degree_set, " zero at n =", fam.zero_indices)
