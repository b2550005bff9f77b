"""Rotation-system helpers used to generate and check the fixture corpus.

A map is a pair of lists (twin, nxt) over darts 0..2E-1.  nxt[d] is the
counterclockwise successor of d around its origin vertex; faces are orbits of
d -> nxt[twin[d]].  An optional per-dart curve list labels arrangement curves.
"""

import itertools
import math
import random
from collections import defaultdict


def orbits(perm):
    seen = [False] * len(perm)
    out = []
    for s in range(len(perm)):
        if seen[s]:
            continue
        orb = []
        d = s
        while not seen[d]:
            seen[d] = True
            orb.append(d)
            d = perm[d]
        out.append(orb)
    return out


class Map:
    def __init__(self, twin, nxt, curve=None):
        self.twin = list(twin)
        self.nxt = list(nxt)
        self.curve = list(curve) if curve is not None else None
        self.n = len(twin)
        self.vorb = orbits(self.nxt)
        self.vert = [0] * self.n
        for i, o in enumerate(self.vorb):
            for d in o:
                self.vert[d] = i
        self.phi = [self.nxt[self.twin[d]] for d in range(self.n)]
        self.forb = orbits(self.phi)
        self.face = [0] * self.n
        for i, o in enumerate(self.forb):
            for d in o:
                self.face[d] = i

    @property
    def V(self):
        return len(self.vorb)

    @property
    def E(self):
        return self.n // 2

    @property
    def F(self):
        return len(self.forb)

    def euler_ok(self):
        return self.V - self.E + self.F == 2

    def adjacency(self):
        adj = [set() for _ in range(self.V)]
        for d in range(self.n):
            u, v = self.vert[d], self.vert[self.twin[d]]
            if u != v:
                adj[u].add(v)
        return adj

    def edges(self):
        return [(self.vert[d], self.vert[self.twin[d]]) for d in range(self.n) if d < self.twin[d]]

    def dump(self):
        lines = ["planemap-v1 %d" % self.n,
                 "twin: " + " ".join(map(str, self.twin)),
                 "next: " + " ".join(map(str, self.nxt))]
        if self.curve is not None:
            lines.append("curve: " + " ".join(map(str, self.curve)))
        return "\n".join(lines) + "\n"


def parse(text):
    lines = [l for l in text.strip().splitlines()]
    n = int(lines[0].split()[1])
    twin = list(map(int, lines[1].split()[1:]))
    nxt = list(map(int, lines[2].split()[1:]))
    curve = list(map(int, lines[3].split()[1:])) if len(lines) > 3 else None
    assert len(twin) == n and len(nxt) == n
    return Map(twin, nxt, curve)


def from_rotations(rot):
    """rot[v] = list of neighbour vertices in ccw order (simple graph)."""
    dart_of = {}
    twin, nxt = [], []
    for v, nb in enumerate(rot):
        for w in nb:
            dart_of[(v, w)] = len(twin)
            twin.append(None)
            nxt.append(None)
    for (v, w), d in dart_of.items():
        twin[d] = dart_of[(w, v)]
    for v, nb in enumerate(rot):
        k = len(nb)
        for i, w in enumerate(nb):
            nxt[dart_of[(v, w)]] = dart_of[(v, nb[(i + 1) % k])]
    return Map(twin, nxt)


def medial(m):
    """Medial map with curve labels given by straight-ahead walks."""
    n = m.n
    phi = m.phi
    phinv = [0] * n
    for d in range(n):
        phinv[phi[d]] = d
    # medial darts: A(x) = 2x, B(x) = 2x+1
    A = lambda x: 2 * x
    B = lambda x: 2 * x + 1
    twin = [0] * (2 * n)
    nxt = [0] * (2 * n)
    for x in range(n):
        twin[A(x)] = B(phi[x])
        twin[B(phi[x])] = A(x)
    for d in range(n):
        t = m.twin[d]
        nxt[A(d)] = B(t)
        nxt[B(t)] = A(t)
        nxt[A(t)] = B(d)
        nxt[B(d)] = A(d)
    mm = Map(twin, nxt)
    label_curves(mm)
    return mm


def label_curves(mm):
    """Label darts of a 4-regular map by straight-ahead walks."""
    n = mm.n
    opp = [mm.nxt[mm.nxt[d]] for d in range(n)]
    curve = [-1] * n
    cid = 0
    for s in range(n):
        if curve[s] >= 0:
            continue
        d = s
        while curve[d] < 0:
            curve[d] = cid
            curve[mm.twin[d]] = cid
            d = opp[mm.twin[d]]
        cid += 1
    mm.curve = curve
    return cid


def curve_sequences(mm):
    """For each curve, the cyclic list of (vertex, partner curve)."""
    n = mm.n
    opp = [mm.nxt[mm.nxt[d]] for d in range(n)]
    seen = set()
    seqs = {}
    for s in range(n):
        c = mm.curve[s]
        if c in seqs:
            continue
        seq = []
        d = s
        while True:
            d = opp[mm.twin[d]]
            v = mm.vert[d]
            partner = mm.curve[mm.nxt[d]]
            seq.append((v, partner))
            if d == s:
                break
        seqs[c] = seq
    return seqs


def arrangement_report(mm):
    ncurves = len(set(mm.curve))
    rep = {"V": mm.V, "E": mm.E, "F": mm.F, "n": ncurves, "euler": mm.euler_ok()}
    seqs = curve_sequences(mm)
    ok = True
    pairs = defaultdict(int)
    for c, seq in seqs.items():
        if any(p == c for _, p in seq):
            ok = False
        vs = [v for v, _ in seq]
        if len(set(vs)) != len(vs):
            ok = False
        for _, p in seq:
            pairs[(min(c, p), max(c, p))] += 1
    cnt = {k: v // 2 for k, v in pairs.items()}
    if any(v != 2 for v in cnt.values()):
        ok = False
    rep["simple"] = ok
    rep["intersecting"] = ok and len(cnt) == ncurves * (ncurves - 1) // 2
    great = rep["intersecting"]
    if great:
        for c, seq in seqs.items():
            ps = [p for _, p in seq]
            k = ncurves - 1
            if ps[:k] != ps[k:]:
                great = False
    rep["great"] = great
    fs = [len(o) for o in mm.forb]
    tri = [len(o) == 3 for o in mm.forb]
    ontri = [0] * (mm.n // 2)
    eid = {}
    for d in range(mm.n):
        eid[d] = min(d, mm.twin[d])
    per_edge = defaultdict(int)
    for f, o in enumerate(mm.forb):
        if len(o) == 3:
            for d in o:
                per_edge[eid[d]] += 1
    edges = set(eid.values())
    rep["tri_sat"] = all(per_edge[e] == 1 for e in edges)
    rep["diamond_free"] = all(per_edge[e] <= 1 for e in edges)
    rep["face_sizes"] = dict(sorted(((k, fs.count(k)) for k in set(fs))))
    return rep


# ---------------------------------------------------------------- colouring
def colorable(adj, k, order=None):
    n = len(adj)
    col = [-1] * n
    # DSATUR backtracking
    def pick():
        best, bs, bd = -1, -1, -1
        for v in range(n):
            if col[v] >= 0:
                continue
            s = len({col[w] for w in adj[v] if col[w] >= 0})
            d = len(adj[v])
            if s > bs or (s == bs and d > bd):
                best, bs, bd = v, s, d
        return best

    def rec(cnt):
        if cnt == n:
            return True
        v = pick()
        used = {col[w] for w in adj[v] if col[w] >= 0}
        maxc = max(col) + 1
        for c in range(min(k, maxc + 1)):
            if c in used:
                continue
            col[v] = c
            if rec(cnt + 1):
                return True
            col[v] = -1
        return False

    return col if rec(0) else None


def chi(adj):
    for k in range(1, 6):
        if colorable(adj, k):
            return k


def max_indep_sets(adj):
    n = len(adj)
    res = []
    # Bron-Kerbosch on complement
    nbr = [set(range(n)) - adj[v] - {v} for v in range(n)]

    def bk(R, P, X):
        if not P and not X:
            res.append(R)
            return
        u = max(P | X, key=lambda u: len(P & nbr[u]))
        for v in list(P - nbr[u]):
            bk(R | {v}, P & nbr[v], X & nbr[v])
            P = P - {v}
            X = X | {v}

    bk(set(), set(range(n)), set())
    return res


def chi_f_float(adj):
    import numpy as np
    from scipy.optimize import linprog
    sets = max_indep_sets(adj)
    n = len(adj)
    M = np.zeros((n, len(sets)))
    for j, s in enumerate(sets):
        for v in s:
            M[v, j] = 1
    r = linprog(np.ones(len(sets)), A_ub=-M, b_ub=-np.ones(n), bounds=(0, None), method="highs")
    return r.fun


def canonical(m, mirror=True):
    """Lexicographically smallest BFS relabelling code over all start darts."""
    n = m.n
    best = None
    variants = [(m.twin, m.nxt)]
    if mirror:
        inv = [0] * n
        for d in range(n):
            inv[m.nxt[d]] = d
        variants.append((m.twin, inv))
    for twin, nxt in variants:
        for s in range(n):
            lab = {s: 0}
            order = [s]
            i = 0
            code = []
            while i < len(order):
                d = order[i]
                i += 1
                for e in (twin[d], nxt[d]):
                    if e not in lab:
                        lab[e] = len(order)
                        order.append(e)
                    code.append(lab[e])
            code = tuple(code)
            if best is None or code < best:
                best = code
    return best
