# kG_O >|< k(Z2^3): extraction, Hopf quasigroup axioms, cocycle, dual.
import time

from hopfq import bicrossproduct as bc
from hopfq import octonions as oc
from hopfq.matched_pair import reconstruct_group, verify_identities, verify_ip

# %% build X, G = Z2^3 and M = G_O and read off the coset tables
ex = oc.build_octonion_example()  # raises if a table differs from its closed form
mp = ex.mp
print(mp, "tau(+e100, +e010) =", mp.g_label(mp.tau[0b100][0b010]))
print("+e011 <| g^110 =", mp.m_label(mp.ract[0b011][0b110]))
print(verify_identities(mp).format())
print("IP:", verify_ip(mp).ok, "tau condition:", bc.check_hopf_condition(mp).ok)

# %% X rebuilt from the tables alone
print(reconstruct_group(mp).report.format())

# %% the 128-dimensional bicrossproduct
sc = bc.build(mp)
t0 = time.perf_counter()
print(bc.verify_hopf_quasigroup(sc).format())
print(f"({time.perf_counter() - t0:.1f}s)")
print(bc.verify_antimultiplicativity(sc).format())
print(bc.verify_involutive_antipode(sc).format())

# %% coquasi-Hopf 3-cocycle built from tau
phi = bc.build_cocycle(mp, sc)
print(bc.verify_coquasi(sc, phi).format())

# %% Moufang-type identity (reported only) and the dual Hopf coquasigroup
print(bc.verify_moufang(sc).format())
dual = bc.dualize(sc)
print(bc.verify_hopf_coquasigroup(dual).format())
print("dualize twice is the identity:", bc.dualize(dual) == sc)
