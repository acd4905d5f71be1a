# %% [markdown]
# Exact arithmetic in Q[tau, 1/tau].
#
# tau is a formal transcendental: nothing numeric is assumed about it until a
# value is supplied explicitly.

# %%
from transcend import LaurentPoly, classify_element, dense_approx, grade_decompose, same_class
import math

p = LaurentPoly.parse("tau + tau^-1")
q = LaurentPoly.parse("tau - tau^-1")
print("p*q =", p * q)
print("(3 tau)(1/3 tau^-1) =", LaurentPoly.parse("3*tau") * LaurentPoly.parse("1/3*tau^-1"))

# %%
# Level k collects tau^k and tau^-k. A product of levels j and k lands in j+k and |j-k|.
r = LaurentPoly.parse("tau^2 + tau^-2") * q
for comp in grade_decompose(r):
    print(f"level {comp.level}: {comp.part}")

# %%
# Anything non-constant in tau is transcendental; the certificate says why.
print(classify_element(LaurentPoly.parse("3*tau^2 - tau^-1")).render())
print(classify_element(LaurentPoly.parse("5/7")).render())

# %%
# Two elements are equivalent when they differ by a rational.
print(same_class(LaurentPoly.parse("tau + 1/2"), LaurentPoly.parse("tau - 3")))
print(same_class(LaurentPoly.monomial(2), LaurentPoly.monomial(1)))

# %%
# The class of tau is dense: tau + q gets within eps of any target.
for target in (3.0, 0.0, -7.5):
    approx = dense_approx(target, 1e-6, math.e)
    print(target, "~", approx, " error", abs(approx.evaluate(math.e) - target))
