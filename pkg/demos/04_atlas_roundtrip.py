"""
Atlas files
===========

Export the fixtures to JSON, read them back (every table is revalidated),
and add a ring by hand.
"""

import json
import tempfile
from pathlib import Path

from skewarm import default_corpus, enumerate_endomorphisms
from skewarm.atlas import export_fixtures, load_atlas, ring_from_dict, save_atlas

tmp = Path(tempfile.mkdtemp())
atlas = export_fixtures(default_corpus())
save_atlas(atlas, tmp / "fixtures.json")
back = load_atlas(tmp / "fixtures.json")
print(len(back.rings), "rings,", len(back.maps), "maps; identical:", back.dumps() == atlas.dumps())

# Z6 from its tables
Z6 = ring_from_dict({"name": "Z6", "order": 6, "zero": 0, "one": 1,
                     "add": [[(a + b) % 6 for b in range(6)] for a in range(6)],
                     "mul": [[(a * b) % 6 for b in range(6)] for a in range(6)]})
print("endomorphisms of Z6:", [m.images.tolist() for m in enumerate_endomorphisms(Z6)])

# a broken table is refused with a witness
bad = json.loads(json.dumps(Z6.to_dict()))
bad["mul"][2][3] = bad["mul"][3][2] = 1
try:
    ring_from_dict(bad)
except Exception as exc:
    print("rejected:", exc)
