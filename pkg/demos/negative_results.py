# Diagonal-grid instances where small-swap local search gets stuck.

from fvs_local import OCT, exact_min, gen_diagonal_grid, verify_local_optimality

# Odd cycle transversal: the whole diagonal is stuck, two vertices suffice.
for k in (5, 6, 7, 8):
    inst = gen_diagonal_grid(k, variant="OCT", d=2)
    opt = exact_min(inst.graph, OCT)
    stuck = [verify_local_optimality(inst, c) for c in (1, 2)]
    print(f"OCT k={k}: local {len(inst.planted_local)}, optimum {len(opt)}, stuck for c=1,2: {stuck}")

# Subset FVS. A cycle through two gadgets can avoid the diagonal, so the
# planted solution needs all but one gadget vertex as well. That leaves it
# one swap of size 2 away from containing every gadget vertex.
for k in (5, 6):
    inst = gen_diagonal_grid(k, variant="SFVS", d=2)
    opt = exact_min(inst.graph, inst.kind)
    stuck = [verify_local_optimality(inst, c) for c in (1, 2)]
    print(f"SFVS k={k}: local {len(inst.planted_local)}, optimum {len(opt)}, stuck for c=1,2: {stuck}")

# Exhaustively, no feasible subset FVS of size 3 or 4 on the k=5 instance
# is 2-locally optimal.
from itertools import combinations
from fvs_local.oracle import is_feasible_for

inst = gen_diagonal_grid(5, variant="SFVS", d=2)
for size in (3, 4):
    sets = [frozenset(S) for S in combinations(sorted(inst.graph.vertices), size)]
    feasible = [S for S in sets if is_feasible_for(inst.graph, inst.kind, S)]
    stuck = [S for S in feasible if verify_local_optimality(inst, 2, solution=S)]
    print(f"size {size}: {len(feasible)} feasible, {len(stuck)} 2-locally optimal")
