# Coset data from S3 and the four transversals of an order-2 subgroup.
from hopfq import bicrossproduct as bc
from hopfq.groups import Subgroup, Transversal, symmetric_group
from hopfq.matched_pair import (check_right_inverses, extract, verify_identities, verify_ip)
from hopfq.quasigroups import is_ip_quasigroup

s3 = symmetric_group(3)
g = Subgroup.generated(s3, [s3.index("102")])

# %% the four choices of representatives for the cosets {021, 120} and {201, 210}
for reps in ([0, 1, 4], [0, 1, 5], [0, 3, 4], [0, 3, 5]):
    mp = extract(s3, g, Transversal(g, reps))
    print("M =", mp.m_names)
    print("  dot ", mp.dot)
    print("  tau ", mp.tau)
    print("  |>  ", mp.lact)
    print("  <|  ", mp.ract)
    assert verify_identities(mp).ok  # always true for coset data

    crit = check_right_inverses(mp)
    ip = verify_ip(mp)
    tau_cond = bc.check_hopf_condition(mp)
    hopf = bc.verify_hopf_quasigroup(bc.build(mp)).ok
    print(f"  right inverses={crit.right_inverses} IP={ip.ok} tau condition={tau_cond.ok} "
          f"Hopf quasigroup={hopf}")
    if not ip.ok:
        bad = ip.first_failure()
        s, t = bad.witness
        print(f"  first IP failure: {bad.name} at s={mp.m_label(s)}, t={mp.m_label(t)}")
        print("  table oracle agrees:", is_ip_quasigroup(mp.magma())[0] is False)
