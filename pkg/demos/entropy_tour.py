"""Entropies of two granules on {t1, t2} and of their fusion table.

The product table is the maximum-entropy joint law with the sources as
margins, so H(M) = H(M1) + H(M2).  The generalized entropy weighs each
mass by the strength of its proposition and can go negative.
"""

from dsmt import (
    Frame, conditional_entropy, entropy_of_combined, fusion_table, generalized_entropy,
    joint_entropy, make_granule, shannon,
)
from dsmt.entropy import whitening_grid

f = Frame.of_size(2)


def granule(a, b, u, i):
    return make_granule(f, {"t1": a, "t2": b, "t1 | t2": u, "t1 & t2": i}, allow_unnormalized=True)


m1, m2 = granule(.6, .2, .1, .1), granule(.5, .2, .1, .2)
t = fusion_table(m1, m2)
print(f"H(M1) = {shannon(m1):.4f}   H(M2) = {shannon(m2):.4f}")
print(f"H(M)  = {joint_entropy(t):.4f}   H(M2|M1) = {conditional_entropy(t, 'm1'):.4f}")
print(f"entropy after collapsing the table: {entropy_of_combined(t.collapse()):.5f}")

print("\ngeneralized entropy")
for m in [(0, 0, 0, 1), (1, 0, 0, 0), (.5, .5, 0, 0), (0, 0, 1, 0), (.25, .25, .25, .25)]:
    print(f"  {m}: {generalized_entropy(granule(*m)):+.4f}")
best, where = whitening_grid(20)
print(f"grid maximum {best:.4f} at {where}")
