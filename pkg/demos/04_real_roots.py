# %% [markdown]
# Real roots: sign scan, then bisection handing over to Newton.

# %%
from transcend import Interval, algebraicity_probe, bracket_scan, solve_real

scan = bracket_scan("e^x + x - 12 = 0", Interval(0, 5), 0.5)
print(scan)
root = solve_real("e^x + x - 12 = 0", scan[0])
print(f"x = {root.value:.12g}, |F| = {root.residual:.1e}")

# %%
print(solve_real("pi^x + 4*x = 49", Interval(3, 3.5)).value)
print(solve_real("x*e^x = -x + 12", Interval(1.7, 1.8)).value)

# %%
# No sign change anywhere on [-30, 30]: F(x) = e^x - x + 7 bottoms out at F(0) = 8.
print(bracket_scan("e^x - x + 7 = 0", Interval(-30, 30), 0.1))

# %%
# A sanity screen: no small integer polynomial vanishes at the root.
print(algebraicity_probe(root.value, 3, 10, 1e-7))
print(algebraicity_probe(2 ** 0.5, 2, 2))
