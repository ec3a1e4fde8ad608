"""Minimal codewords of binary codes generated by [I_n | A(G)].

Build graphs (named families, graph6), materialize the associated
systematic code, count its minimal codewords exactly, evaluate closed
forms and graph-parameter lower bounds, and search graph streams for the
extremal counts per order.
"""

from .bounds import BoundReport, lower_bounds
from .code import (Codeword, CountReport, FilterStats, GraphCode,
                   ZeroInfoFilter, all_codewords_minimal)
from .errors import Graph6Error, LimitError
from .formulas import (component_sum, connected_minimum, family_minimal_count,
                       verification_rows)
from .graph6 import parse_graph6, read_graph6_file, to_graph6
from .graphs import (Bipartition, FamilySpec, Graph, GraphStats, build_family,
                     components, disjoint_union, graph_stats, is_bipartite,
                     is_connected, relabel, shortest_even_path,
                     spanning_tree_bipartition, tree_even_paths)
from .search import (GraphStream, SearchResult, builtin_connected_extremes,
                     enumerate_labeled_connected, iter_graphs,
                     max_over_all_graphs, run_search, witness_report,
                     witness_summary)

__version__ = "0.1.0"

__all__ = [
    "Bipartition", "BoundReport", "Codeword", "CountReport", "FamilySpec",
    "FilterStats", "Graph", "Graph6Error", "GraphCode", "GraphStats",
    "GraphStream", "LimitError", "SearchResult", "ZeroInfoFilter",
    "all_codewords_minimal", "build_family", "builtin_connected_extremes",
    "component_sum", "components", "connected_minimum", "disjoint_union",
    "enumerate_labeled_connected", "family_minimal_count", "graph_stats",
    "is_bipartite", "is_connected", "iter_graphs", "lower_bounds",
    "max_over_all_graphs", "parse_graph6", "read_graph6_file", "relabel",
    "run_search", "shortest_even_path", "spanning_tree_bipartition",
    "to_graph6", "tree_even_paths", "verification_rows", "witness_report",
    "witness_summary",
]
