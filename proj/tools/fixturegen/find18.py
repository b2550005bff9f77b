import sys, pickle, numpy as np
from scipy.spatial import ConvexHull
from pcmap import *
from polyhedra import rotations_from_points
from crit import vcrit, ecrit

def random_triangulation(nv, seed):
    rng=np.random.default_rng(seed)
    p=rng.normal(size=(nv,3)); p/=np.linalg.norm(p,axis=1)[:,None]
    h=ConvexHull(p); E=set()
    for s in h.simplices:
        for a,b in ((s[0],s[1]),(s[1],s[2]),(s[0],s[2])): E.add((min(a,b),max(a,b)))
    return from_rotations(rotations_from_points(list(p),sorted(E)))

def rot_of(m):
    rot=[]
    for v,o in enumerate(m.vorb):
        d=o[0]; r=[]
        for _ in range(len(o)):
            r.append(m.vert[m.twin[d]]); d=m.nxt[d]
        rot.append(r)
    return rot

def flip_edge(rot,a,b):
    # triangulation edge flip a-b -> c-d
    ra=rot[a]; i=ra.index(b); c=ra[(i+1)%len(ra)]; d=ra[(i-1)%len(ra)]
    if c==d or d in rot[c] or len(ra)<=3 or len(rot[b])<=3: return None
    r=[list(x) for x in rot]
    r[a].remove(b); r[b].remove(a)
    # insert d into c after a? c's rotation: ... b, a ... ccw? place d between neighbors a and b in c's rotation
    def ins(x,y,p,q):
        rx=r[x]; n=len(rx)
        for k in range(n):
            if {rx[k],rx[(k+1)%n]}=={p,q}:
                rx.insert(k+1,y); return True
        return False
    if not ins(c,d,a,b) or not ins(d,c,a,b): return None
    m=from_rotations(r)
    if not m.euler_ok(): return None
    return r

def triangulations(nv):
    start=rot_of(random_triangulation(nv,1))
    seen={canonical(from_rotations(start)):start}; q=[start]; i=0
    while i<len(q):
        r=q[i]; i+=1
        for a in range(nv):
            for b in r[a]:
                if a<b:
                    nr=flip_edge(r,a,b)
                    if nr is None: continue
                    c=canonical(from_rotations(nr))
                    if c not in seen: seen[c]=nr; q.append(nr)
    return q

def delete_edge(rot,a,b):
    r=[list(x) for x in rot]; r[a].remove(b); r[b].remove(a); return r

def connected(rot):
    seen={0}; st=[0]
    while st:
        v=st.pop()
        for w in rot[v]:
            if w not in seen: seen.add(w); st.append(w)
    return len(seen)==len(rot)

if __name__=='__main__':
    nv=int(sys.argv[1])
    tris=triangulations(nv); print('triangulations',len(tris),flush=True)
    level=tris; target=18
    ne=3*nv-6
    while ne>target:
        nxt={}
        for r in level:
            for a in range(nv):
                for b in r[a]:
                    if a<b and len(r[a])>3 and len(r[b])>3:
                        nr=delete_edge(r,a,b)
                        if not connected(nr): continue
                        c=canonical(from_rotations(nr))
                        if c not in nxt: nxt[c]=nr
        level=list(nxt.values()); ne-=1
        print('edges',ne,len(level),flush=True)
    found=0
    seenmed=set()
    for r in level:
        g=medial(from_rotations(r)); adj=g.adjacency()
        if any(len(a)!=4 for a in adj): continue
        if colorable(adj,3) is None:
            cf=chi_f_float(adj)
            tri=any(len(o)==3 for o in g.forb)
            ok=abs(cf-3)<1e-7
            vc=vcrit(adj) if ok else None
            ec=ecrit(adj) if ok else None
            print('chi4', round(cf,5), vc, ec, tri, flush=True)
            if ok:
                g.curve=None
                open(f'g18_v{nv}_{found}_{"E" if ec else "V"}.map','w').write(g.dump()); found+=1
