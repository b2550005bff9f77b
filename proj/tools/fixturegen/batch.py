import sys, numpy as np
from flips import *
from pcmap import arrangement_report
n=int(sys.argv[1]); s0=int(sys.argv[2]); s1=int(sys.argv[3]); steps=int(sys.argv[4]); t0=float(sys.argv[5])
for seed in range(s0,s1):
    rng=np.random.default_rng(seed)
    sa=great_circles(rng.normal(size=(n,3)))
    best=anneal(sa, defect, steps=steps, seed=seed, t0=t0, t1=0.2)
    m,_=best[1].to_map(); r=arrangement_report(m)
    print(seed, best[0], r['great'], r['face_sizes'], flush=True)
    if best[0]==0:
        open(f'found_n{n}_s{seed}.map','w').write(m.dump())
