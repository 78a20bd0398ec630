# Full and complete conjugate weight enumerators, MacWilliams, and the
# Moebius inversion between ccwe and nu.

# %%
from cliffinv.codes import LinearCode, dual, glue, parse_code, subcodes_with_allones
from cliffinv.enumerators import ccwe, fwe, macwilliams_transform, nu_by_inversion, nu_direct

g11 = parse_code("split 1 1\n1|1\n")
g44 = parse_code("split 4 4\n1001|0110\n0101|0101\n0011|0011\n0000|1111\n")

f1 = ccwe(g11, 1)
print("f1 =", f1.to_text().replace("\n", "  "))

# %%
f4 = ccwe(g44, 1)
print(len(f4), "monomials in ccwe(g44, m=1), coefficient sum", f4.coefficient_sum())
print(f4.to_text())

# %%
# glueing codes multiplies their enumerators
print(ccwe(glue(g11, g44), 1) == f1 * f4)

# %%
# MacWilliams on a code that is not self-dual
C = LinearCode.span(3, 2, [0b11000, 0b00111])
w = macwilliams_transform(fwe(C, 2), C.size**2)
print("transform of fwe(C) is fwe(C^perp):", w == fwe(dual(C), 2))

# %%
# nu_m(D) from its definition and from Moebius inversion over subcodes containing 1
for D in list(subcodes_with_allones(g44))[:4]:
    print(D.dim, nu_direct(D, 2) == nu_by_inversion(D, 2), len(nu_direct(D, 2)), "terms")
