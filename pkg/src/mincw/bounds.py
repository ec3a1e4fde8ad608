"""Lower bounds on the number of minimal codewords from graph parameters.

Four bounds are assembled per graph:

  trivial          n                      (the generator rows)
  diameter2        C(n+1, 2) - |E|        only when the diameter is exactly 2
  spanning_tree    a + b + C(a,2) + C(b,2)  from the BFS-tree color classes;
                                          connected graphs only
  degree_triangle  n + C(max_degree, 2) + triangles

The BFS tree is rooted at vertex 0 for reproducibility.  Other spanning
trees can give different (a, b) splits and hence different bound values;
the reported figure is the BFS-tree one and need not be the best
achievable over all spanning trees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import comb

from .graph6 import to_graph6
from .graphs import Graph, graph_stats, is_connected, spanning_tree_bipartition


@dataclass
class BoundReport:
    graph6: str
    n: int
    bounds: dict[str, int]
    omitted: dict[str, str] = field(default_factory=dict)
    enumerated: int | None = None

    @property
    def slack(self) -> dict[str, int] | None:
        """enumerated - bound, per bound; None until a count is attached."""
        if self.enumerated is None:
            return None
        return {name: self.enumerated - value for name, value in self.bounds.items()}

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "n": self.n, "bounds": dict(self.bounds),
                "omitted": dict(self.omitted), "enumerated": self.enumerated,
                "slack": self.slack}

    @classmethod
    def from_dict(cls, d: dict) -> "BoundReport":
        return cls(graph6=d["graph6"], n=d["n"], bounds=dict(d["bounds"]),
                   omitted=dict(d["omitted"]), enumerated=d["enumerated"])


def lower_bounds(g: Graph, enumerated: int | None = None) -> BoundReport:
    """Compute every applicable lower bound; inapplicable ones are listed
    under ``omitted`` with a reason."""
    stats = graph_stats(g)
    bounds = {"trivial": g.n}
    omitted = {}
    if stats.diameter == 2:
        bounds["diameter2"] = comb(g.n + 1, 2) - stats.edges
    elif math.isinf(stats.diameter):
        omitted["diameter2"] = "graph is disconnected (infinite diameter)"
    else:
        omitted["diameter2"] = f"diameter is {int(stats.diameter)}, bound needs exactly 2"
    if is_connected(g):
        bp = spanning_tree_bipartition(g)
        bounds["spanning_tree"] = bp.a + bp.b + comb(bp.a, 2) + comb(bp.b, 2)
    else:
        omitted["spanning_tree"] = "graph is disconnected; apply per component"
    bounds["degree_triangle"] = g.n + comb(stats.max_degree, 2) + stats.triangles
    return BoundReport(to_graph6(g), g.n, bounds, omitted, enumerated)
