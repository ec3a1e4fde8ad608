#!/usr/bin/env python3
"""One-time generator for tests/data/connected8.g6.

Produces one representative per isomorphism class of connected graphs on 8
vertices (there are exactly 11117), playing the role of an externally
supplied isomorph-free catalog for the order-8 search test.  The package
itself deliberately does not generate such catalogs; this tool leans on
networkx, which is not a package dependency.

Method: every connected graph on 8 vertices has a non-cut vertex, so
augmenting each of the 853 connected 7-vertex isomorphism classes (from the
networkx graph atlas) with an 8th vertex attached to every nonempty
neighborhood covers all classes.  Candidates are bucketed by a
Weisfeiler-Lehman hash plus degree sequence and deduplicated inside each
bucket with exact VF2 isomorphism tests.

Usage: python tools/make_connected8.py [OUT_PATH]
"""

import sys
import time
from collections import defaultdict
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
from mincw import Graph, to_graph6  # noqa: E402

EXPECTED_CLASSES = 11117  # connected graphs on 8 vertices up to isomorphism


def candidates():
    seven = [g for g in nx.graph_atlas_g()
             if g.number_of_nodes() == 7 and nx.is_connected(g)]
    assert len(seven) == 853, f"atlas gave {len(seven)} connected 7-vertex graphs"
    for base in seven:
        base = nx.convert_node_labels_to_integers(base, ordering="sorted")
        for mask in range(1, 1 << 7):
            g = base.copy()
            g.add_node(7)
            for v in range(7):
                if mask >> v & 1:
                    g.add_edge(7, v)
            yield g


def bucket_key(g):
    degrees = tuple(sorted(d for _, d in g.degree()))
    wl = nx.weisfeiler_lehman_graph_hash(g, iterations=3)
    return (g.number_of_edges(), degrees, wl)


def main():
    out_path = Path(sys.argv[1]) if len(sys.argv) > 1 else \
        Path(__file__).resolve().parent.parent / "tests" / "data" / "connected8.g6"
    t0 = time.time()
    buckets = defaultdict(list)
    reps = []
    scanned = 0
    for g in candidates():
        scanned += 1
        key = bucket_key(g)
        known = buckets[key]
        if not any(nx.is_isomorphic(g, h) for h in known):
            known.append(g)
            reps.append(g)
        if scanned % 10000 == 0:
            print(f"  {scanned} candidates, {len(reps)} classes, "
                  f"{time.time() - t0:.0f}s", flush=True)
    print(f"total: {scanned} candidates -> {len(reps)} classes "
          f"in {time.time() - t0:.0f}s")
    assert len(reps) == EXPECTED_CLASSES, \
        f"expected {EXPECTED_CLASSES} classes, found {len(reps)}"

    out_path.parent.mkdir(parents=True, exist_ok=True)
    with open(out_path, "w", encoding="ascii") as fh:
        for g in reps:
            edges = list(g.edges())
            fh.write(to_graph6(Graph.from_edges(8, edges)) + "\n")
    print(f"wrote {out_path}")


if __name__ == "__main__":
    main()
