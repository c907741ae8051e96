# Writing and reading the JSON files used by the command line.
import json
import tempfile
from pathlib import Path

from hopfq import bicrossproduct as bc
from hopfq import serialize
from hopfq.groups import Subgroup, Transversal, symmetric_group
from hopfq.matched_pair import extract, same_tables

s3 = symmetric_group(3)
g = Subgroup(s3, [0, 2])
mp = extract(s3, g, Transversal(g, [0, 3, 4]))
sc = bc.build(mp)

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    serialize.dump(mp, tmp / "mp.json")
    serialize.dump(sc, tmp / "sc.json")
    d = json.loads((tmp / "sc.json").read_text())
    print({k: d[k] for k in ("hopfq-schema", "kind", "dim", "is_dual")})
    print("first product entries:", d["product"][:3])
    print("matched pair reloads:", same_tables(serialize.load(tmp / "mp.json"), mp))
    print("structure reloads:", serialize.load(tmp / "sc.json") == sc)
