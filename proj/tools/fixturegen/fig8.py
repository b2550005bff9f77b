import itertools
from pcmap import *
from polyhedra import *
def rot_of(m):
    # rotation lists of a simple map
    rot=[]
    for v,o in enumerate(m.vorb):
        d=o[0]; r=[]
        for _ in range(len(o)):
            r.append(m.vert[m.twin[d]]); d=m.nxt[d]
        rot.append(r)
    return rot
def subdivide(rot,a,b):
    rot=[list(r) for r in rot]; s=len(rot)
    rot[a][rot[a].index(b)]=s; rot[b][rot[b].index(a)]=s
    rot.append([a,b]); return rot
def join(r1,s1,r2,s2):
    off=len(r1); rot=[list(r) for r in r1]+[[w+off for w in r] for r in r2]
    rot[s1].append(s2+off); rot[s2+off].append(s1); return rot
blocks={'K4':rot_of(tetrahedron()),'prism':None,'cube':rot_of(cube())}
# prism
import numpy as np
res=[]
for n1,n2 in itertools.combinations_with_replacement(['K4','cube'],2):
    r1=blocks[n1]; r2=blocks[n2]
    for (a,b) in [(0,r1[0][0])]:
        for (c,d) in [(0,r2[0][0])]:
            A=subdivide(r1,a,b); B=subdivide(r2,c,d)
            H=join(A,len(A)-1,B,len(B)-1)
            h=from_rotations(H); g=medial(h)
            adj=g.adjacency()
            print(n1,n2,h.V,g.V,g.euler_ok(),chi(adj))
            if chi(adj)==4: open(f'fig8_{n1}_{n2}.map','w').write(g.dump())
