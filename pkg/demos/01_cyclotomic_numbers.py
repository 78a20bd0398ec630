# Exact arithmetic in Q(zeta_8), the field every Clifford matrix entry lives in.

# %%
from fractions import Fraction

from cliffinv.cyclo import I, INV_SQRT2, SQRT2, ZETA, Cyclo8, as_rational

print("zeta^2 =", ZETA**2, "  (this is i)")
print("zeta^4 =", ZETA**4)
print("sqrt2 * sqrt2 =", SQRT2 * SQRT2)

# %%
# 1/sqrt(2) is what the Hadamard gate needs; it has denominator 2 in the power basis
print("1/sqrt2 =", INV_SQRT2, " denominator", INV_SQRT2.denominator)
print("(1 + i)/sqrt2 =", (1 + I) * INV_SQRT2, " equals zeta:", (1 + I) * INV_SQRT2 == ZETA)

# %%
# inverses go through the product of the Galois conjugates
a = Cyclo8(1, 2, 0, Fraction(-1, 3))
print("a =", a)
print("norm(a) =", a.norm())
print("a * a^-1 =", a * a.inverse())

# %%
# a group average is only trusted once it lands back in Q
print(as_rational(SQRT2 * INV_SQRT2 * 7))
try:
    as_rational(SQRT2)
except ValueError as exc:
    print("refused:", exc)
