"""Walk through the macro task merging graph on a hand-sized log.

Run with ``python3 demos/01_graph_anatomy.py``.  Everything here is small
enough to check by hand.
"""
import numpy as np

from mgoe.data import InteractionRecord, TaskRegistry, build_task_matrices
from mgoe.graph import (
    GraphConfig,
    assign_micro_weights,
    build_graph,
    build_merging_matrix,
    co_access,
    merging_score,
    rank_combination,
)

reg = TaskRegistry.from_order(["click", "fav", "cart", "buy"])

print("A pair's behaviours collapse into one rank: each task adds 2^(priority-1).")
for combo in (["click"], ["click", "cart"], ["click", "fav", "cart", "buy"]):
    print(f"  {'+'.join(combo):<22} rank {rank_combination(combo, reg)}")

print("\nThe rank becomes a merging score through a Box-Cox curve; beta bends it.")
ranks = np.array([1, 5, 15])
for beta in (-0.5, 0.0, 1.0):
    print(f"  beta={beta:+.1f}: " + ", ".join(f"{r}->{s:.3f}" for r, s in zip(ranks, merging_score(ranks, beta))))

# three users: 0 and 1 like items 0/1, user 2 only browses item 2
log = [
    (0, 0, "click"), (0, 0, "cart"), (0, 0, "buy"), (0, 1, "click"),
    (1, 0, "click"), (1, 1, "click"), (1, 1, "fav"),
    (2, 2, "click"),
]
records = [InteractionRecord(u, i, t, 1_511_539_200 + k) for k, (u, i, t) in enumerate(log)]
mats = build_task_matrices(records, reg)
M = build_merging_matrix(mats, reg, beta=1.0, n_users=3, n_items=3)
print("\nMerging matrix (users x items):")
print(np.array2string(M.scores.toarray(), precision=3, suppress_small=True))

C = co_access(M, "user")
w = assign_micro_weights(C, w_high=2.0, w_low=0.5)
print("\nUser co-access rows count strong links; the counts decide each user's clustering weight.")
for u in range(3):
    print(f"  user {u}: {int(w.counts[u])} strong links -> weight {w.weight[u]}")

g = build_graph(mats, reg, GraphConfig(user_clusters=2, item_clusters=2, hops=2, fanout=3, spectral_rank=2),
                n_users=3, n_items=3)
print("\nTwo user and two item macro nodes:")
print("  user cluster labels", g.user_clusters.labels.tolist())
print("  item cluster labels", g.item_clusters.labels.tolist())
for key in sorted(g.edges):
    print(f"  {key[0]} hop {key[1]}: {g.edges[key].weight.size} macro edges")
print("\nMacro neighbours of user 0 (global macro ids; items start at", g.n_user_clusters, "):")
for hop in (1, 2):
    print(f"  hop {hop}: {g.neighbors('user', 0, hop)}")
