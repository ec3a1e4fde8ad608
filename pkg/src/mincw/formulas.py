"""Closed-form minimal-codeword counts for the named graph families.

Each family is evaluated by its own formula; overlapping parametrizations
(K_2 = K_{1,1} = P_2, C_4 = K_{2,2}, C_3 = K_3) are consistency checks, not
canonicalizations.

Derivation sketch for paths and cycles: the minimal codewords with |S| >= 2
are exactly the maximal same-parity chains {a, a+2, ..., b}.  On a path
that count is floor((n+1)^2/4) including singletons.  On an odd cycle each
of the n starting vertices begins n-1 proper chains (lengths 1..n-1) and
the full vertex set closes up into one more, giving n(n-1) + 1 = n^2 - n + 1;
the n = 3 case anchors this: the triangle has all 2^3 - 1 = 7 nonzero
codewords minimal.  On an even cycle only the two alternating halves close
up, giving n(n-2)/2 + 2 = (n^2 - 2n + 4)/2.
"""

from __future__ import annotations

from math import comb, prod
from itertools import combinations

from .code import GraphCode
from .graphs import FamilySpec, build_family


def family_minimal_count(spec: FamilySpec) -> int:
    """Exact number of minimal codewords for a family graph, in closed form."""
    kind, p = spec.kind, spec.params
    if kind == "complete":
        n = p[0]
        if n <= 2:
            return n
        return 2 ** (n - 1) + comb(n, 2)
    if kind == "edgeless":
        return p[0]
    if kind == "bipartite":
        a, b = p
        return a + b + comb(a, 2) + comb(b, 2)
    if kind == "multipartite":
        # r = 1 is an edgeless graph, r = 2 the complete bipartite one;
        # route those to their own formulas.
        if len(p) == 1:
            return p[0]
        if len(p) == 2:
            return family_minimal_count(FamilySpec("bipartite", p))
        n = sum(p)
        odd_tail = sum(prod(p[i] for i in U)
                       for k in range(3, len(p) + 1, 2)
                       for U in combinations(range(len(p)), k))
        return n + comb(n, 2) + odd_tail
    if kind == "path":
        n = p[0]
        return (n + 1) ** 2 // 4
    if kind == "cycle":
        n = p[0]
        if n % 2 == 0:
            return (n * n - 2 * n + 4) // 2
        return n * n - n + 1
    if kind == "doublestar":
        a, b = p
        return 2 + a + b + comb(a + 1, 2) + comb(b + 1, 2)
    raise AssertionError(kind)


def connected_minimum(n: int) -> int:
    """Minimum of the minimal-codeword count over connected graphs on n
    vertices: floor((n+1)^2 / 4), attained by the path P_n."""
    if n < 1:
        raise ValueError("need n >= 1")
    return (n + 1) ** 2 // 4


def component_sum(counts) -> int:
    """Count for a disconnected graph from its components' counts.

    The code of a disjoint union is the direct sum of the components'
    codes, so the minimal-codeword counts add.
    """
    counts = list(counts)
    if not counts:
        raise ValueError("need at least one component count")
    return sum(counts)


def partitions_min_parts(total: int, min_parts: int):
    """Integer partitions of ``total`` with at least ``min_parts`` parts,
    each part >= 1, descending within a partition."""
    def rec(remaining: int, cap: int, acc: tuple[int, ...]):
        if remaining == 0:
            if len(acc) >= min_parts:
                yield acc
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, acc + (part,))
    yield from rec(total, total, ())


def verification_specs(max_n: int) -> list[FamilySpec]:
    """Every family instance with at most ``max_n`` vertices, in a stable order."""
    specs: list[FamilySpec] = []
    specs += [FamilySpec("complete", (n,)) for n in range(1, max_n + 1)]
    specs += [FamilySpec("bipartite", (a, b))
              for a in range(1, max_n) for b in range(a, max_n + 1 - a)]
    specs += [FamilySpec("multipartite", parts)
              for total in range(3, max_n + 1)
              for parts in partitions_min_parts(total, 3)]
    specs += [FamilySpec("path", (n,)) for n in range(1, max_n + 1)]
    specs += [FamilySpec("cycle", (n,)) for n in range(3, max_n + 1)]
    specs += [FamilySpec("doublestar", (a, b))
              for a in range(1, max_n - 1) for b in range(a, max_n - 1 - a)]
    specs += [FamilySpec("edgeless", (n,)) for n in range(1, max_n + 1)]
    return specs


def verification_rows(max_n: int):
    """Yield (family, parameters, formula, enumerated, match) per spec.

    The enumerated value comes from exhaustive rank-criterion counting, so
    a mismatch means either the formula or the enumeration is wrong.
    """
    for spec in verification_specs(max_n):
        formula = family_minimal_count(spec)
        enumerated = GraphCode(build_family(spec)).count_minimal().count
        yield (spec.kind, ",".join(map(str, spec.params)),
               formula, enumerated, formula == enumerated)
