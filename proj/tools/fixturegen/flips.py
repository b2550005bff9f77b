"""Arrangements as signed curve sequences; triangle flips; annealing search."""

import math
import random

import numpy as np

from pcmap import Map, arrangement_report


class SeqArr:
    """seqs[c] = cyclic vertex list of curve c; vc[v] = (c1, c2); sign[v] = +-1."""

    def __init__(self, seqs, vc, sign):
        self.seqs = [list(s) for s in seqs]
        self.vc = dict(vc)
        self.sign = dict(sign)

    def copy(self):
        return SeqArr(self.seqs, self.vc, self.sign)

    def to_map(self):
        verts = sorted(self.vc)
        index = {v: i for i, v in enumerate(verts)}
        pos = {}
        for c, s in enumerate(self.seqs):
            for i, v in enumerate(s):
                pos[(c, v)] = i
        # dart id: 4*vi + slot, slots: 0=c1+,1=c2+,2=c1-,3=c2-
        n = 4 * len(verts)
        twin = [0] * n
        nxt = [0] * n
        curve = [0] * n

        def dart(v, c, plus):
            c1, c2 = self.vc[v]
            k = 0 if c == c1 else 1
            return 4 * index[v] + k + (0 if plus else 2)

        for v in verts:
            c1, c2 = self.vc[v]
            b = 4 * index[v]
            order = [b + 0, b + 1, b + 2, b + 3] if self.sign[v] > 0 else [b + 0, b + 3, b + 2, b + 1]
            for i in range(4):
                nxt[order[i]] = order[(i + 1) % 4]
            for c in (c1, c2):
                s = self.seqs[c]
                i = pos[(c, v)]
                w = s[(i + 1) % len(s)]
                d = dart(v, c, True)
                e = dart(w, c, False)
                twin[d] = e
                twin[e] = d
                curve[d] = c
                curve[e] = c
        return Map(twin, nxt, curve), verts


def from_map(m):
    """Inverse of to_map for a 4-regular curve-labelled map."""
    opp = [m.nxt[m.nxt[d]] for d in range(m.n)]
    ncurves = max(m.curve) + 1
    seqs = [None] * ncurves
    outdart = {}
    for s in range(m.n):
        c = m.curve[s]
        if seqs[c] is not None:
            continue
        seq = []
        d = s
        while True:
            v = m.vert[d]
            seq.append(v)
            outdart[(v, c)] = d
            d = opp[m.twin[d]]
            if d == s:
                break
        seqs[c] = seq
    vc, sign = {}, {}
    for v in range(m.V):
        cs = sorted({m.curve[d] for d in m.vorb[v]})
        c1, c2 = cs
        vc[v] = (c1, c2)
        d1 = outdart[(v, c1)]
        sign[v] = 1 if m.nxt[d1] == outdart[(v, c2)] else -1
    return SeqArr(seqs, vc, sign)


def great_circles(normals):
    normals = [np.asarray(x, float) / np.linalg.norm(x) for x in normals]
    n = len(normals)
    pts = {}
    vid = 0
    vc, sign = {}, {}
    seqs = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            p = np.cross(normals[i], normals[j])
            p /= np.linalg.norm(p)
            for q in (p, -p):
                vc[vid] = (i, j)
                ti = np.cross(normals[i], q)
                tj = np.cross(normals[j], q)
                sign[vid] = 1 if q @ np.cross(ti, tj) > 0 else -1
                pts[vid] = q
                vid += 1
    for i in range(n):
        a = np.cross(normals[i], [0.3, 0.7, 0.1])
        a /= np.linalg.norm(a)
        b = np.cross(normals[i], a)
        mine = [v for v, (c1, c2) in vc.items() if i in (c1, c2)]
        mine.sort(key=lambda v: math.atan2(pts[v] @ b, pts[v] @ a))
        seqs[i] = mine
    return SeqArr(seqs, vc, sign)


def triangle_faces(m):
    return [o for o in m.forb if len(o) == 3]


def flip(sa, m, verts, face):
    """Flip triangle face (list of 3 darts of map m built from sa)."""
    vs = [verts[m.vert[d]] for d in face]
    out = sa.copy()
    for d in face:
        c = m.curve[d]
        a, b = verts[m.vert[d]], verts[m.vert[m.twin[d]]]
        s = out.seqs[c]
        i, j = s.index(a), s.index(b)
        s[i], s[j] = s[j], s[i]
    return out


def defect(m):
    per = {}
    for o in m.forb:
        if len(o) == 3:
            for d in o:
                e = min(d, m.twin[d])
                per[e] = per.get(e, 0) + 1
    tot = 0
    for d in range(m.n):
        if d < m.twin[d]:
            tot += abs(per.get(d, 0) - 1)
    return tot


def anneal(sa, score, steps=20000, t0=2.0, t1=0.05, seed=0, target=0, log=False):
    rng = random.Random(seed)
    m, verts = sa.to_map()
    cur = score(m)
    best = (cur, sa)
    for it in range(steps):
        t = t0 * (t1 / t0) ** (it / steps)
        tris = triangle_faces(m)
        f = rng.choice(tris)
        nsa = flip(sa, m, verts, f)
        nm, nverts = nsa.to_map()
        if not nm.euler_ok():
            continue
        s = score(nm)
        if s <= cur or rng.random() < math.exp((cur - s) / t):
            sa, m, verts, cur = nsa, nm, nverts, s
            if cur < best[0]:
                best = (cur, sa)
                if log:
                    print(it, cur, flush=True)
                if cur <= target:
                    break
    return best
