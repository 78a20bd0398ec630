# The complex Clifford group X_m and the invariance of ccwe(C(m)) for
# doubly-even self-dual C.

# %%
from cliffinv.classify import enumerate_sdde
from cliffinv.clifford import act, average, clifford_group, gen_hadamard, parabolic_subgroup, closure_generators
from cliffinv.codes import LinearCode
from cliffinv.enumerators import ccwe
from cliffinv.polynomial import ConjMonomial, ConjPolynomial

G1 = clifford_group(1)
print("|X_1| =", G1.order, " |P_1| =", parabolic_subgroup(1).order)
print("all unitary:", all(g.is_unitary() for g in G1))

# %%
# every generator fixes the enumerator of every code class, at genus 1 and 2
for m in (1, 2):
    for c in enumerate_sdde(4, 4):
        p = ccwe(c.representative, m)
        print(m, all(act(g, p) == p for g in closure_generators(m)))

# %%
# a code that is not self-dual is moved by the Hadamard gate
p = ccwe(LinearCode.span(2, 2, [0b1111]), 1)
print(act(gen_hadamard(1), p) == p)

# %%
# averaging a monomial over X_1 projects it onto the invariants
mono = ConjPolynomial(1, (2, 2), {ConjMonomial((2, 0), (2, 0)): 1})
print(average(G1, mono).to_text())
