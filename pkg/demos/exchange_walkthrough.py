# Build the exchange graph for two solutions and check what it promises.

from fvs_local import build_exchange_graph, contract_steiner_forest, exact_fvs, gen_partial_ktree, verify_exchange_properties
from fvs_local.instances import random_minimal_fvs

g = gen_partial_ktree(16, 2, keep_prob=0.9, seed=12)
O = exact_fvs(g)
L = random_minimal_fvs(g, seed=19)
print("O =", sorted(O), " L =", sorted(L))

ex = build_exchange_graph(g, O, L)
print("K:", ex.k, ex.histogram())

# every cycle of g is accounted for by a shared vertex, an O-L edge of K,
# or a cycle of K through both solutions
rep = verify_exchange_properties(g, ex)
print("cycles:", rep.n_cycles, "clauses:", rep.clause_counts, "violations:", len(rep.violations))
print("|V(K)| / (|O| + |L|) =", round(rep.c_ex_measured, 3))

# Contract each Steiner tree to a point; K' must be simple and small
stats = contract_steiner_forest(ex)
for T, deg in stats.trees:
    print("tree", sorted(T), "degree", deg)
print("K' components (|Z|, |Z&O|, |Z&L-O|):", stats.component_sizes)
