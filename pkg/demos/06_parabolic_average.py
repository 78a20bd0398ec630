# Averaging h (x) I ... over the parabolic subgroup: ccwe(C(m)) goes to a
# combination of itself and its doubly-even index-2 overcodes.

# %%
from cliffinv.classify import enumerate_sdde
from cliffinv.clifford import xp_lemma_sides
from cliffinv.codes import subcodes_with_allones

g44 = enumerate_sdde(4, 4)[0].representative
codes = {}
for C in subcodes_with_allones(g44):
    codes.setdefault(C.dim, C)

# %%
# (2^(m-r) - 2^r)/(2^m - 1), sized for all 2^(2r) - 1 overcodes, against the
# coefficient sized for the doubly-even ones only
for dim, C in sorted(codes.items()):
    for m in (1, 2):
        lhs, rhs_p, r = xp_lemma_sides(C, m)
        _, rhs_c, _ = xp_lemma_sides(C, m, coefficient="de-overcodes")
        print(f"dim {dim} r={r} m={m}: all-overcodes {lhs == rhs_p}, de-overcodes {lhs == rhs_c}")

# %%
# the de-overcodes self-coefficient stays below 1 whenever r > 0
from cliffinv.clifford import _xp_self_coefficient

for r in range(4):
    print(r, [str(_xp_self_coefficient(r, m, "de-overcodes")) for m in (1, 2, 3)])
