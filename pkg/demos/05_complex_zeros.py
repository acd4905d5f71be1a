# %% [markdown]
# Complex zeros by the argument principle.
#
# The number of zeros inside a rectangle is (1/2 pi i) times the integral of
# F'/F around it. Rectangles are split until each holds one zero, which is
# then polished with Newton.

# %%
from transcend import Region, min_modulus_zero, solve_complex_all, winding_count

eq = "e^x - x + 7 = 0"
print(winding_count(eq, Region(0, 3, 1, 4)), winding_count(eq, Region(-3, 0, 1, 4)))

# %%
for r in solve_complex_all(eq, Region(-15, 15, -15, 15)):
    print(f"{r.value:.10f}   |z| = {abs(r.value):.6f}")

# %%
best = min_modulus_zero(eq, 10)
print("least modulus:", best.value, abs(best.value))

# %%
# Zero counts by radius grow, and the zeros stay well apart.
roots = [r.value for r in solve_complex_all(eq, Region(-15, 15, -15, 15))]
print({R: sum(abs(z) <= R for z in roots) for R in (5, 10, 15)})
