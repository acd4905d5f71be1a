"""Reference values computed independently of the package and frozen here.

Real and complex roots: mpmath.findroot at 30 significant digits.
Winding numbers: phase tracking along the boundary with 20000 samples per
edge (see ``phase_winding`` below), no quadrature involved.
Probe result: plain itertools enumeration of every integer polynomial of
degree <= 3 and height <= 10.
"""

import cmath
import math

ROOT_EXP_LINEAR = 2.27472787148009609405843387235      # e^x + x - 12
ROOT_PI_POWER = 3.14096869332900133336649723283         # pi^x + 4x - 49
ROOT_X_EXP = 1.76059301420391843636018832506            # x e^x + x - 12

# zeros of e^z - z + 7 in the upper half plane, by increasing modulus
EXP_SHIFT_ZEROS = (
    complex("1.77016142015870819557643187901+2.66961359135710585529989206514j"),
    complex("2.26346830895805919289303057381+8.36899686349357253487831435217j"),
    complex("2.71138434666682305736129782437+14.4261275072990025788687074499j"),
    complex("3.04386779506198883379120949431+20.6099975975749074366075727334j"),
)
EXP_SHIFT_MIN_MODULUS = 3.20317158150744076251502369623

# zeros of e^z - z + 7 (both half planes) with |z| <= 5, 10, 15
EXP_SHIFT_DISK_COUNTS = {5: 2, 10: 4, 15: 6}

# phase_winding results, rounded
WINDING = {
    ("exp(x) - x + 7 = 0", (0, 3, 1, 4)): 1,
    ("exp(x) - x + 7 = 0", (-3, 0, 1, 4)): 0,
    ("x^2 + 1 = 0", (-1, 1, 0.5, 1.5)): 1,
}

PROBE_ROUNDED_ROOT = 2.27472787147
PROBE_ROUNDED_HITS = ()        # no polynomial of degree <= 3, height <= 10 within 1e-7


def phase_winding(f, re_lo, re_hi, im_lo, im_hi, n=20000):
    """Winding number of f around the rectangle by summing phase increments."""
    corners = [complex(re_lo, im_lo), complex(re_hi, im_lo), complex(re_hi, im_hi), complex(re_lo, im_hi)]
    total = 0.0
    for k in range(4):
        a, b = corners[k], corners[(k + 1) % 4]
        prev = cmath.phase(f(a))
        for j in range(1, n + 1):
            cur = cmath.phase(f(a + (b - a) * j / n))
            total += (cur - prev + math.pi) % (2 * math.pi) - math.pi
            prev = cur
    return total / (2 * math.pi)
