"""Rotation systems of convex polyhedra from coordinates."""

import itertools
import math

import numpy as np

from pcmap import from_rotations

PHI = (1 + 5 ** 0.5) / 2


def _edges_by_min_distance(pts, tol=1e-6):
    n = len(pts)
    d = [[np.linalg.norm(pts[i] - pts[j]) for j in range(n)] for i in range(n)]
    m = min(d[i][j] for i in range(n) for j in range(n) if i != j)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if abs(d[i][j] - m) < tol * max(1, m)]


def rotations_from_points(pts, edges):
    pts = [np.asarray(p, float) for p in pts]
    n = len(pts)
    nb = [[] for _ in range(n)]
    for i, j in edges:
        nb[i].append(j)
        nb[j].append(i)
    rot = []
    for v in range(n):
        nrm = pts[v] / np.linalg.norm(pts[v])
        a = np.cross(nrm, [1.0, 0.3, 0.1])
        a /= np.linalg.norm(a)
        b = np.cross(nrm, a)
        ang = []
        for w in nb[v]:
            t = pts[w] - pts[v]
            ang.append((math.atan2(t @ b, t @ a), w))
        ang.sort()
        rot.append([w for _, w in ang])
    return rot


def poly(pts):
    pts = [np.asarray(p, float) for p in pts]
    c = sum(pts) / len(pts)
    pts = [p - c for p in pts]
    edges = _edges_by_min_distance(pts)
    return from_rotations(rotations_from_points(pts, edges))


def tetrahedron():
    return poly([(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)])


def cube():
    return poly(list(itertools.product([-1, 1], repeat=3)))


def octahedron_pts():
    return [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]


def icosahedron_pts():
    pts = []
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            pts += [(0, s1, s2 * PHI), (s1, s2 * PHI, 0), (s2 * PHI, 0, s1)]
    return pts


def dodecahedron():
    pts = list(itertools.product([-1, 1], repeat=3))
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            pts += [(0, s1 / PHI, s2 * PHI), (s1 / PHI, s2 * PHI, 0), (s2 * PHI, 0, s1 / PHI)]
    return poly(pts)


def truncated_icosahedron():
    ico = [np.array(p, float) for p in icosahedron_pts()]
    e = _edges_by_min_distance(ico)
    pts = []
    for i, j in e:
        pts.append(ico[i] + (ico[j] - ico[i]) / 3)
        pts.append(ico[j] + (ico[i] - ico[j]) / 3)
    return poly(pts)
