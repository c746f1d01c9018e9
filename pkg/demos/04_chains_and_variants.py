# %% [markdown]
# Multistep chains and alternative annihilators

# %%
from xbannaito import DEFAULT_PARAMS, bi_eigenvalue, build_seed
from xbannaito.multistep import (build_chain, chain_eigenfunction, chain_intertwining,
                                 check_determinant)
from xbannaito.variants import CASES, proportional, variant_spec, variant_xbi

p = DEFAULT_PARAMS
chain = build_chain([1, 3], p)
for m in range(6):
    f = chain_eigenfunction(chain, m)
    if f.is_zero():
        print(f"m={m}: annihilated (seed)")
        continue
    check_determinant(chain, m)
    ok = (chain.top.apply(f) - bi_eigenvalue(m, p) * f).is_zero()
    print(f"m={m}: eigen-equation {ok}, determinant form agrees")
print("composite intertwining:", chain_intertwining(chain))

# %% [markdown]
# Changing the annihilator keeps the spectrum but changes the family.

# %%
seed = build_seed((3, 1), p)
fams = {c: variant_xbi(variant_spec(c, p), seed, 4) for c in CASES}
for c, P in fams.items():
    print(c, "degree", P.degree)
print("5.2 vs 5.5 proportional:", proportional(fams["5.2"], fams["5.5"]))
