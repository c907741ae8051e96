# Enumerate transversals and classify the resulting bicrossproducts.
from hopfq.cli import classify, enumerate_transversals, transversal_count
from hopfq.groups import Subgroup, cyclic, direct_product, symmetric_group
from hopfq.matched_pair import extract

for x, gens in ((symmetric_group(3), ["102"]), (direct_product(cyclic(2), symmetric_group(3)),
                                                 ["r0|102"])):
    g = Subgroup.generated(x, [x.index(n) for n in gens])
    print(f"{x.name}: |G| = {len(g)}, {transversal_count(x, g)} transversals")
    census = {}
    for m in enumerate_transversals(x, g):
        row = classify(extract(x, g, m))
        key = (row["ip"], row["thm42"], row["hopf"])
        census[key] = census.get(key, 0) + 1
        assert row["criterion_agrees"]
    for (ip, thm, hopf), n in sorted(census.items()):
        print(f"  {n:3d}  IP={ip!s:5} tau condition={thm!s:5} Hopf={hopf}")
