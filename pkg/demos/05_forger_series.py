# Forger series: dimensions of the degree (N1, N2) conjugate invariants,
# compared with the code counts a_{N1,N2}.

# %%
import time

from cliffinv.classify import count_sdde
from cliffinv.clifford import clifford_group
from cliffinv.forger import compare_with_codes, forger_series, golden_series

x1 = forger_series(clifford_group(1))
print("X_1:", x1.render())
print("matches the shipped series:", x1 == golden_series(1))

# %%
# genus 2 needs the full 92160-element group; about a minute
t0 = time.perf_counter()
x2 = forger_series(clifford_group(2))
print("X_2:", x2.render(), f"({time.perf_counter() - t0:.0f}s)")

# %%
counts = {(n, n): count_sdde(n, n) for n in range(7)}
for m, s, nxt in ((1, x1, x2), (2, x2, None)):
    rep = compare_with_codes(s, counts, m, next_series=nxt)
    print(f"m={m} ok={rep.ok} equalities={rep.equalities}")
    for line in rep.observations:
        print("   ", line)
