# %% [markdown]
# Certificates for equations and numbers.
#
# Each verdict comes with a tree of the facts it rests on. Solutions the
# rule cannot cover (exceptional candidates) are checked one by one.

# %%
from transcend import classify_equation, classify_number, match_rule

for text in ["e^x + x - 12 = 0", "x*e^x = -x + 12", "(exp(x^2) + 1)^2 = x + 4", "atan(x) = x^2 - x"]:
    print(text, "->", type(match_rule(text)).__name__)

# %%
print(classify_equation("sin(x) = x").render())

# %%
# cos^2 is rewritten as 1 - sin^2, which turns this into a polynomial in sin(x).
print(classify_equation("2*cos(x)^2 + sin(x) - 1 = 0").render())

# %%
# Outside every rule shape the answer is honest.
print(classify_equation("pi^x + 4*x = 49").render())

# %%
for text in ["e + 4", "e + pi*i", "cos(1)^2 + sin(1)^2", "e*pi"]:
    cert = classify_number(text)
    print(f"{text:22s} {cert.status.value:15s} {cert.rule}")

# %%
import json
print(json.dumps(classify_equation("ln(x) = x - 1").to_dict(), indent=1)[:600])
