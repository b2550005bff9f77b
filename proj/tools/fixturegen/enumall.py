import pickle, numpy as np
from insert import *
def closure(arrs):
    seen={}; queue=[]
    for sa in arrs:
        m,_=sa.to_map(); c=canonical(m)
        if c not in seen: seen[c]=sa; queue.append(sa)
    i=0
    while i<len(queue):
        sa=queue[i]; i+=1
        m,verts=sa.to_map()
        for f in triangle_faces(m):
            nsa=flip(sa,m,verts,f); nm,_=nsa.to_map()
            if not nm.euler_ok(): continue
            c=canonical(nm)
            if c not in seen: seen[c]=nsa; queue.append(nsa)
    return queue
sa = great_circles(np.array([[0,0,1],[1,0,0]]))
arrs=[sa]
for n in range(2,5):
    arrs=closure(extend(arrs,n))
    print('n',n+1,len(arrs),flush=True)
pickle.dump(arrs,open('n5_all.pkl','wb'))
