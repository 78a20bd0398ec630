# Doubly-even self-dual codes of split length (N1, N2), up to permutations
# inside each block.

# %%
from math import prod

from cliffinv.classify import enumerate_sdde
from cliffinv.codes import format_code

for split in [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (6, 6), (8, 0)]:
    classes = enumerate_sdde(*split)
    print(split, "->", len(classes), "classes, sizes", [c.class_size_hint for c in classes])

# %%
# the labelled counts add up to the mass formula prod_{i < n/2 - 1} (2^i + 1)
classes = enumerate_sdde(6, 6)
print(sum(c.class_size_hint for c in classes), "=", prod(2**i + 1 for i in range(5)))

# %%
# the canonical representatives, in the text format the CLI reads and writes
for c in enumerate_sdde(4, 4):
    print(format_code(c.representative))

# %%
# lengths with N1 - N2 not divisible by 4 carry no such code at all
print(enumerate_sdde(2, 1), enumerate_sdde(5, 1))
