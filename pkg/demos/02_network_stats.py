#!/usr/bin/env python3
"""Summary-statistics rows for a few structurally different networks.

Same columns the `altergraph stats` command emits: size, edge count,
degree moments, assortativity and average clustering.
"""
from altergraph import (gen_holme_kim, gen_pref_attachment, gen_small_world,
                        load_edge_list, summary)

graphs = {
    "ring+shortcuts": gen_small_world(2000, 5, 0.002, seed=1),
    "pref-attach": gen_pref_attachment(2000, 8, seed=2),
    "triadic": gen_holme_kim(2000, 8, 0.6, seed=3),
    "tiny-star": load_edge_list("hub a\nhub b\nhub c\n"),
}

print(f"{'name':>15} {'N':>6} {'E':>7} {'mean':>7} {'median':>6} "
      f"{'std':>7} {'r_kk':>7} {'C':>6}")
for name, g in graphs.items():
    s = summary(g)
    r = "n/a" if s.assortativity is None else f"{s.assortativity:.3f}"
    print(f"{name:>15} {s.n:>6} {s.e:>7} {s.mu1:>7.2f} {s.median:>6.0f} "
          f"{s.sigma:>7.2f} {r:>7} {s.avg_clustering:>6.3f}")

print()
print("clustering tells the models apart: triad formation beats plain")
print("preferential attachment, and the ring lattice beats both.")
