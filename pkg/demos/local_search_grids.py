# Local search on small grids and partial 2-trees, compared with the exact optimum.

from fvs_local import SearchParams, exact_fvs, gen_grid, gen_partial_ktree, local_search
from fvs_local.instances import random_minimal_fvs

# A 5x5 grid. The greedy start is usually already good, so also start
# from an arbitrary inclusion-minimal solution.
g = gen_grid(5, 5)
opt = exact_fvs(g)
print("5x5 grid optimum:", len(opt), sorted(opt))

start = random_minimal_fvs(g, seed=1)
print("minimal start:", len(start))

for c in (1, 2, 3):
    sol, rep = local_search(g, SearchParams(c=c), start=start)
    print(f"c={c}: |L|={len(sol)} after {rep.iterations} swaps, sizes {rep.sizes}")

# The certificate: improve_once found nothing in the final neighbourhood.
print(rep.to_json())

# Ratios on a few random partial 2-trees
for seed in range(5):
    t = gen_partial_ktree(22, 2, keep_prob=0.8, seed=seed)
    sol, rep = local_search(t, SearchParams(c=2), start=random_minimal_fvs(t, seed))
    print(f"seed {seed}: n={t.n} m={t.m} |L|={len(sol)} |O|={len(exact_fvs(t))}")
