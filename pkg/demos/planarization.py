# Subdividing a straight-line drawing so each edge piece has one crossing.

from fvs_local import exact_fvs, lift_solution, planarize_1planar
from fvs_local.instances import convex_k5, crossings_per_edge, random_drawing

dg = convex_k5()
print("crossings per edge in G:", crossings_per_edge(dg.graph, dg.coords))

plan = planarize_1planar(dg)
H = plan.graph
print("H:", H, "crossings per edge:", max(crossings_per_edge(H, plan.coords)))
for i, path in plan.paths.items():
    if len(path) > 2:
        print("edge", dg.graph.edges[i], "->", path)

opt_h = exact_fvs(H)
print("optimum on G:", sorted(exact_fvs(dg.graph)), " on H:", sorted(opt_h))
print("lifted:", sorted(lift_solution(opt_h, plan)))

# random drawings
for seed in range(3):
    dg = random_drawing(8, 14, seed=seed)
    plan = planarize_1planar(dg)
    print(f"seed {seed}: {len(plan.crossings)} crossings, |V(H)|={plan.graph.n}, "
          f"fvs {len(exact_fvs(dg.graph))} = {len(exact_fvs(plan.graph))}")
