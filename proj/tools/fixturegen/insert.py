"""Enumerate intersecting arrangements by inserting curves along dual cycles."""
import sys, pickle
from flips import *
from pcmap import *

def dual_cycles(m, length, ncurves):
    # edges as darts d (d<twin); faces face[d] right, face[twin d] left
    adjf = defaultdict(list)
    for d in range(m.n):
        if d < m.twin[d]:
            f, g = m.face[d], m.face[m.twin[d]]
            adjf[f].append((g, d)); adjf[g].append((f, d))
    out = []
    for start in range(m.F):
        def rec(path_f, path_e, cnt):
            f = path_f[-1]
            if len(path_e) == length:
                return
            for g, d in adjf[f]:
                c = m.curve[d]
                if cnt[c] >= 2: continue
                if d in path_e: continue
                if g == start and len(path_e) == length - 1:
                    cnt[c] += 1
                    if all(cnt[x] == 2 for x in range(ncurves)):
                        out.append((list(path_f), path_e + [d]))
                    cnt[c] -= 1
                    continue
                if g in path_f or g < start: continue
                cnt[c] += 1
                rec(path_f + [g], path_e + [d], cnt)
                cnt[c] -= 1
        rec([start], [], defaultdict(int))
    return out

def insert(sa, m, verts, faces, edges):
    out = sa.copy()
    newc = len(out.seqs)
    nv = max(out.vc) + 1
    seq = []
    opp = [m.nxt[m.nxt[d]] for d in range(m.n)]
    for i, d in enumerate(edges):
        c = m.curve[d]
        a, b = verts[m.vert[d]], verts[m.vert[m.twin[d]]]
        s = out.seqs[c]
        ia, ib = s.index(a), s.index(b)
        L = len(s)
        if (ia + 1) % L == ib:
            fwd = d
        else:
            assert (ib + 1) % L == ia
            fwd = m.twin[d]; a, b, ia, ib = b, a, ib, ia
        x = nv + i
        s.insert(ia + 1, x)
        out.vc[x] = (c, newc)
        right = m.face[fwd]
        out.sign[x] = 1 if faces[i] == right else -1
        seq.append(x)
    out.seqs.append(seq)
    return out

def extend(arrs, ncurves):
    seen = {}
    for sa in arrs:
        m, verts = sa.to_map()
        for faces, edges in dual_cycles(m, 2 * ncurves, ncurves):
            nsa = insert(sa, m, verts, faces, edges)
            nm, _ = nsa.to_map()
            if not nm.euler_ok(): continue
            c = canonical(nm)
            if c not in seen:
                seen[c] = nsa
    return list(seen.values())

if __name__ == '__main__':
    import numpy as np
    # n=2 start: two circles crossing twice
    sa = great_circles(np.array([[0,0,1],[1,0,0]]))
    arrs = [sa]
    for n in range(2, 5):
        arrs = extend(arrs, n)
        print('n', n + 1, len(arrs), flush=True)
    pickle.dump(arrs, open('n5_ins.pkl', 'wb'))
