# %% [markdown]
# Expressions: parsing, printing, derivatives, evaluation.
#
# Everything downstream works on the same tree. Constants stay exact
# (Fractions) until a number is actually needed.

# %%
from transcend import differentiate, evaluate, parse, simplify_constants, to_text
from transcend.expr import compile_numpy
import numpy as np

eq = parse("e^x + x - 12 = 0")
print(eq)
print("residual:", to_text(eq.residual()))

# %%
# Non-integer exponents are rewritten through exp and ln, so pi^x is exp(x*ln(pi)).
print(parse("pi^x + 4*x"))
print(simplify_constants(parse("1/3 + 1/6 + 0*sin(x)")))

# %%
F = eq.residual()
dF = differentiate(F)
print("F'(x) =", to_text(dF))
print("F(2.27472787147) =", evaluate(F, 2.27472787147).real)

# %%
# The vectorized form is what the contour integrals use.
f = compile_numpy(F)
z = np.array([0, 1j, 2 + 3j])
print(f(z))
