# The 16-element octonion loop G_O = {+-e_a}.
import itertools

from hopfq import octonions as oc
from hopfq.quasigroups import associator_defect, is_ip_quasigroup, is_moufang

# %% sign table F(a, b) in binary order 000 .. 111
print(oc.sign_table())

q = oc.octonion_quasigroup()
e = {a: oc.element(a) for a in range(8)}
print("e001 e010 =", q.label(q.mul(e[0b001], e[0b010])))
print("e010 e001 =", q.label(q.mul(e[0b010], e[0b001])))

# %% inverse property and Moufang, but not associative
ok, inverses = is_ip_quasigroup(q)
print("IP:", ok, "inverse of +e011:", q.label(inverses[0b011]))
print("Moufang:", is_moufang(q)[0])

# %% (st)r = -s(tr) exactly for linearly independent vectors
defect = associator_defect(q)
independent = [(s, t, r) for s, t, r in itertools.product(range(16), repeat=3)
               if oc.det(s & 7, t & 7, r & 7)]
print(len(defect), "non-associative triples; equal to det != 0 set:", defect == independent)
