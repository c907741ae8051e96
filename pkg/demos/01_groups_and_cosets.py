# Groups as Cayley tables, subgroups, cosets and transversals.
import numpy as np

from hopfq.groups import (Subgroup, Transversal, canonical_transversal, clifford_group_3,
                          left_cosets, symmetric_group)
from hopfq.octonions import x_group

# %% S3 on permutations of "012"; (pq)(i) = p(q(i))
s3 = symmetric_group(3)
print(s3.names)
print(np.array(s3.rows))

# %% the subgroup generated by the transposition 102 and its left cosets Gs
g = Subgroup.generated(s3, [s3.index("102")])
print("G =", [s3.label(i) for i in g.members])
for coset in left_cosets(s3, g):
    print("  coset", [s3.label(i) for i in coset])

# %% a transversal picks one representative per coset, the identity first
m = canonical_transversal(s3, g)
print("M =", [s3.label(r) for r in m.reps])
# every x factors uniquely as x = u s
for x in range(s3.order):
    u, s = m.factor[x]
    print(f"  {s3.label(x)} = {g.group.label(u)} * {s3.label(m.reps[s])}")

# %% Cl3: signed monomials in e1, e2, e3 with e_i^2 = -1
cl = clifford_group_3()
print("center:", [cl.label(c) for c in cl.center()])
commutators = {cl.commutator(a, b) for a in range(16) for b in range(16)}
print("derived subgroup:", [cl.label(c) for c in cl.generated(sorted(commutators))])

# %% X = Z2^3 x| Cl3, where g_i flips the sign of e_i
X = x_group()
print(X, "first elements:", X.names[:4])
