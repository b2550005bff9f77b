"""Lists the 4-chromatic intersecting arrangements of 5 pseudocircles and the
vertices whose deletion leaves them 4-chromatic. Reads n5_all.pkl from
enumall.py."""

import pickle

from pcmap import arrangement_report, colorable

arrs = pickle.load(open("n5_all.pkl", "rb"))
print(len(arrs), "intersecting arrangements")
for k, sa in enumerate(arrs):
    m, _ = sa.to_map()
    adj = m.adjacency()
    if colorable(adj, 3) is not None:
        continue
    n = len(adj)
    bad = []
    for x in range(n):
        sub = [set(w if w < x else w - 1 for w in adj[v] if w != x) for v in range(n) if v != x]
        if colorable(sub, 3) is None:
            bad.append(x)
    print(k, "non-critical vertices", bad, arrangement_report(m)["face_sizes"])
