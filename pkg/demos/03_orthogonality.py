# %% [markdown]
# Orthogonality on the exceptional grid
#
# With the odd truncation r2 = rho2 + 7/2, the class-3 family of degree-1
# seeds is orthogonal on seven grid points.  The weight is the classical one
# times a rational multiplier, propagated point to point.

# %%
from xbannaito import DEFAULT_PARAMS, build_seed, truncate
from xbannaito.orthogonality import (exceptional_grid, exceptional_weight, gram_matrix,
                                     norm_law_factor, norm_ratio_closed_form,
                                     positivity_scan, predicted_null_indices)

N = 7
q = truncate(DEFAULT_PARAMS, N)
seed = build_seed((3, 1), q)
grid = exceptional_grid(seed, N)
weights = exceptional_weight(seed, grid)
rep = gram_matrix(seed, grid, weights)
print("window indices:", list(grid.index_window))
print("off-diagonal entries:", rep.off_diagonal)
for n in range(1, N):
    print(f"h_{n}/h_{n - 1} = {rep.norms[n] / rep.norms[n - 1]}",
          rep.norms[n] / rep.norms[n - 1] == norm_ratio_closed_form(n, N, q))

# %% [markdown]
# Norms scale like (lambda_n - mu)(lambda_n - beta) times the classical
# ones, so a norm vanishes whenever that factor does.  Class 5 at N = 7 is
# such a case.

# %%
s5 = build_seed((5, 1), q)
r5 = gram_matrix(s5, exceptional_grid(s5, N), strict=False)
print("class 5 zero norms:", r5.zero_norms, " predicted:", predicted_null_indices(s5, r5.indices))
print("factor at n=5:", norm_law_factor(s5, 5))

# %% [markdown]
# The sign of the weight splits into the sign of E = E1 E2 E3 and the sign
# of the classical weight, which need not be positive.

# %%
scan = positivity_scan(3, N, q)
print("E signs:        ", ["+" if e > 0 else "-" for e in scan.E])
print("classical signs:", ["+" if c > 0 else "-" for c in scan.classical if c is not None])
