# r-divisions and the local-vs-global audit.

from fvs_local import SearchParams, audit_local_vs_global, exact_fvs, gen_grid, local_search, r_division, verify_r_division
from fvs_local.instances import random_minimal_fvs

g = gen_grid(6, 6)
for r in (4, 9, 16):
    div = r_division(g, r)
    rep = verify_r_division(g, div)
    print(f"r={r:2d}: {len(div.regions)} regions, boundary total {div.boundary_total}, c_div {div.c_div_measured:.2f}, ok={rep.ok}")

# Audit a 4-locally optimal solution against the optimum.
g = gen_grid(5, 5)
O = exact_fvs(g)
L, _ = local_search(g, SearchParams(c=4), start=random_minimal_fvs(g, 3))
audit = audit_local_vs_global(g, O, L.members, c=4)
for key, value in audit.to_dict().items():
    print(f"{key:>26}: {value}")
