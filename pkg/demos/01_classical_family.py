# %% [markdown]
# Classical Bannai-Ito polynomials
#
# The operator H = alpha(x)(R - I) + beta(x)(TR - I) acts on polynomials,
# where R reflects x -> -x and TR sends x -> -x - 1.  Its monic
# eigenpolynomials are found by a triangular solve, in exact arithmetic.

# %%
from xbannaito import (DEFAULT_PARAMS, bi_eigenvalue, bi_grid, bi_operator, bi_weight,
                       solve_bi_polynomial, truncate, validate_genericity)
from xbannaito.exact import RatFunc

p = DEFAULT_PARAMS
print("parameters:", p.to_json())
print("generic up to degree 12:", validate_genericity(p, 12).ok)

# %%
H = bi_operator(p)
for n in range(5):
    B = solve_bi_polynomial(n, p)
    residual = H.apply(B) - bi_eigenvalue(n, p) * RatFunc(B)
    print(f"B_{n} = {B}")
    print(f"   lambda_{n} = {bi_eigenvalue(n, p)}, residual zero: {residual.is_zero()}")

# %% [markdown]
# Imposing r2 = rho2 + N/2 (N odd) makes B_N vanish on a finite grid.
# The weight is propagated along the grid from w(x_0) = 1.

# %%
N = 5
q = truncate(p, N)
grid = bi_grid(N, q)
w = bi_weight(grid, q).values
for s, (x, ws) in enumerate(zip(grid.points, w)):
    print(f"x_{s} = {x!s:>8}   w = {ws}")

# %%
vals = {n: [solve_bi_polynomial(n, q)(x) for x in grid.points] for n in range(N)}
gram = [[sum(a * u * v for a, u, v in zip(w, vals[n], vals[m])) for m in range(N)]
        for n in range(N)]
print("diagonal Gram matrix:", all(gram[i][j] == 0 for i in range(N) for j in range(N) if i != j))
