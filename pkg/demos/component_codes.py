# # Component codes and coset labels
#
# Three ambient spaces of quadruples, each with 256 words:
# H(4,4) with the Hamming metric, D(2,0) (two Shrikhande pairs) and D(1,2)
# (one pair plus two K4 symbols). Each carries a nested pair of additive
# codes: a 16-word code of distance 3 inside a 64-word code of distance 2.

from __future__ import annotations

import numpy as np

from doobcodes import coset_structure, lemma3_counting, min_distance
from doobcodes.component_codes import component_code, substitution_map
from doobcodes.metrics import index_to_word, quad_space

for name in ("E''", "E'", "D''", "D'", "C''", "C'"):
    code = component_code(name)
    print(f"{name:4} in {code.ambient}: {len(code):3} words, min distance {min_distance(code)}")

# The small code in D(1,2), written out.

print(sorted(component_code("C''").words))

# ## Coset labels
#
# Every word gets (outer, inner, element): which coset of the big code, which
# coset of the small code inside it, and the rank within that small coset.

cs = coset_structure("D")
print("labels of the first eight words")
print(cs.labels[:8])
print("outer cosets", cs.n_outer, "inner per outer", cs.n_inner)

# ## Neighbour counting
#
# A word sees exactly one neighbour in each small coset lying outside its own
# big coset. This is what keeps balls from overlapping after substitution.

for pair in ("C", "D", "E"):
    print(pair, lemma3_counting(pair).passed)

dist = quad_space(cs.ambient).distance_table
x = 37
hits = [
    int((dist[x, cs.index_of[o, i]] == 1).sum())
    for o in range(cs.n_outer)
    for i in range(cs.n_inner)
    if o != cs.labels[x, 0]
]
print("word", index_to_word(x), "neighbours per foreign small coset:", hits)

# ## Substitutions
#
# phi sends H(4,4) quadruples into D(2,0) and psi into D(1,2), matching
# coset labels. The first lines of the exported tables:

phi = substitution_map("phi")
print("\n".join(phi.export().splitlines()[:4]))
print("phi is a bijection:", np.array_equal(np.sort(phi.forward), np.arange(256)))
