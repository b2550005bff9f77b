import sys
from pcmap import *
def vcrit(adj):
    n=len(adj)
    for x in range(n):
        sub=[set(w if w<x else w-1 for w in adj[v] if w!=x) for v in range(n) if v!=x]
        if colorable(sub,3) is None: return False
    return True
def ecrit(adj):
    n=len(adj)
    for u in range(n):
        for v in adj[u]:
            if u<v:
                a=[set(s) for s in adj]; a[u].discard(v); a[v].discard(u)
                if colorable(a,3) is None: return False
    return True
if __name__=='__main__':
    for f in sys.argv[1:]:
        m=parse(open(f).read()); adj=m.adjacency()
        print(f, arrangement_report(m)['face_sizes'], vcrit(adj), ecrit(adj))
