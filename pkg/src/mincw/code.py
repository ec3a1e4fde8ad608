"""The binary linear code generated by [I_n | A(G)] and its minimal codewords.

Row i of the generator is the unit vector e_i followed by the adjacency row
of vertex i, so every codeword is c^S for exactly one vertex subset S: the
first n coordinates are the indicator of S and the last n ("information")
coordinates hold, at position v, the parity of |N(v) ∩ S|.  A nonzero
codeword is minimal when no other nonzero codeword's support fits strictly
inside its support.

Minimality is decided by a rank criterion: c^S is minimal iff the generator
columns outside supp(c^S) have GF(2) rank n - 1 (the subcode vanishing
outside the support is then exactly {0, c^S}).  Dropping the identity
columns outside S first, this reduces to the columns' restriction to S:

    c^S minimal  <=>  rank_GF(2){ adj[v] & S : v with zero information bit }
                      equals |S| - 1.

A brute-force oracle (pairwise support containment over all 2^n codewords)
is kept as independent ground truth for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LimitError
from .graphs import Graph, bits_of, components, mask_of

MAX_ENUM_N = 32
MAX_ORACLE_N = 20


def _as_mask(s, n: int) -> int:
    if isinstance(s, int):
        mask = s
    else:
        mask = mask_of(s)
    if mask <= 0 or mask >> n:
        raise ValueError(f"need a nonempty subset of vertices 0..{n - 1}")
    return mask


@dataclass(frozen=True)
class Codeword:
    """A codeword c^S, split into systematic part S and information part."""

    n: int
    s_mask: int
    i_mask: int

    @property
    def support(self) -> int:
        """Support as a 2n-bit int, systematic part in the low n bits."""
        return self.s_mask | self.i_mask << self.n

    @property
    def weight(self) -> int:
        return self.support.bit_count()

    @property
    def vertices(self) -> tuple[int, ...]:
        return bits_of(self.s_mask)

    def support_string(self) -> str:
        """2n characters of 0/1, systematic coordinates first."""
        sup = self.support
        return "".join("1" if sup >> i & 1 else "0" for i in range(2 * self.n))


@dataclass
class FilterStats:
    """How each nonempty subset was settled during count_minimal."""

    zero_info_rejects: int = 0
    rank_rejects: int = 0
    minimal: int = 0

    @property
    def total(self) -> int:
        return self.zero_info_rejects + self.rank_rejects + self.minimal

    def to_dict(self) -> dict:
        return {"zero_info_rejects": self.zero_info_rejects,
                "rank_rejects": self.rank_rejects, "minimal": self.minimal}


@dataclass
class CountReport:
    """Result of exhaustive minimal-codeword counting."""

    count: int
    supports: tuple[int, ...] | None = None
    stats: FilterStats = field(default_factory=FilterStats)

    def to_dict(self) -> dict:
        return {"count": self.count,
                "supports": None if self.supports is None else list(self.supports),
                "filter_stats": self.stats.to_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "CountReport":
        sup = d["supports"]
        return cls(count=d["count"],
                   supports=None if sup is None else tuple(sup),
                   stats=FilterStats(**d["filter_stats"]))


class ZeroInfoFilter:
    """Sound but incomplete non-minimality detector.

    If some nonempty proper subset T of S has zero information part, then
    c^(S\\T) already fits strictly inside c^S, so c^S is non-minimal.  The
    filter knows three cheap sources of such T: connected components whose
    vertices all have even degree, twin pairs (equal adjacency rows), and
    any zero-information subsets observed earlier during an ascending-mask
    enumeration (submasks precede supermasks, so the cache is always valid).
    """

    def __init__(self, graph: Graph):
        self._zero_sets: set[int] = set()
        for comp in components(graph):
            if all(graph.adj[v].bit_count() % 2 == 0 for v in bits_of(comp)):
                self._zero_sets.add(comp)
        by_row: dict[int, int] = {}
        for v, row in enumerate(graph.adj):
            if row in by_row:
                self._zero_sets.add(1 << by_row[row] | 1 << v)
            else:
                by_row[row] = v

    def rejects(self, s_mask: int) -> bool:
        """True only if c^S is certainly non-minimal."""
        for t in self._zero_sets:
            if t != s_mask and t & s_mask == t:
                return True
        return False

    def observe(self, s_mask: int, i_mask: int) -> None:
        if i_mask == 0:
            self._zero_sets.add(s_mask)


class GraphCode:
    """The [2n, n] binary code with systematic generator [I_n | A(G)]."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self.n = graph.n
        self._full = graph.full_mask
        self._supports: list[int] | None = None

    @property
    def dimension(self) -> int:
        return self.n

    @property
    def length(self) -> int:
        return 2 * self.n

    def information_bits(self, s_mask: int) -> int:
        """XOR of the adjacency rows indexed by S."""
        i = 0
        for v in bits_of(s_mask):
            i ^= self.graph.adj[v]
        return i

    def codeword(self, s) -> Codeword:
        """The codeword c^S for a nonempty vertex subset (bitmask or iterable)."""
        s_mask = _as_mask(s, self.n)
        return Codeword(self.n, s_mask, self.information_bits(s_mask))

    def is_minimal(self, s) -> bool:
        """Rank criterion; exact for any nonempty S."""
        s_mask = _as_mask(s, self.n)
        return self._minimal_by_rank(s_mask, self.information_bits(s_mask))

    def _minimal_by_rank(self, s_mask: int, i_mask: int) -> bool:
        need = s_mask.bit_count() - 1
        if need == 0:
            return True  # generator rows are always minimal
        adj = self.graph.adj
        basis = [0] * self.n  # slot h holds a vector with leading bit h
        rank = 0
        outside = ~i_mask & self._full
        while outside:
            low = outside & -outside
            outside ^= low
            vec = adj[low.bit_length() - 1] & s_mask
            while vec:
                h = vec.bit_length() - 1
                b = basis[h]
                if not b:
                    basis[h] = vec
                    rank += 1
                    if rank == need:
                        return True
                    break
                vec ^= b
        return False

    def _support_table(self) -> list[int]:
        """support(c^S) for every mask S, as 2n-bit ints (index = S)."""
        if self._supports is None:
            adj = self.graph.adj
            n = self.n
            info = [0] * (1 << n)
            sup = [0] * (1 << n)
            for s in range(1, 1 << n):
                low = s & -s
                i = info[s ^ low] ^ adj[low.bit_length() - 1]
                info[s] = i
                sup[s] = s | i << n
            self._supports = sup
        return self._supports

    def is_minimal_bruteforce(self, s) -> bool:
        """Ground-truth oracle: scan all 2^n - 1 nonzero codewords for a
        support strictly inside supp(c^S).  Capped at n <= 20."""
        if self.n > MAX_ORACLE_N:
            raise LimitError(f"brute-force oracle supports n <= {MAX_ORACLE_N}")
        s_mask = _as_mask(s, self.n)
        table = self._support_table()
        ss = table[s_mask]
        for t in range(1, 1 << self.n):
            ts = table[t]
            if t != s_mask and ts & ss == ts:
                return False
        return True

    def count_minimal(self, *, list_supports: bool = False,
                      use_filters: bool = False) -> CountReport:
        """Count minimal codewords by enumerating all nonempty S ascending.

        The information part is maintained incrementally: incrementing S
        flips a trailing block of bits, so one precomputed prefix XOR updates
        it per step.  With ``use_filters`` the zero-information filter may
        settle a subset before the rank test; it never changes the result.
        """
        n = self.n
        if n > MAX_ENUM_N:
            raise LimitError(f"count_minimal enumerates 2^n subsets; n <= {MAX_ENUM_N}")
        adj = self.graph.adj
        prefix = [0] * (n + 1)
        for v in range(n):
            prefix[v + 1] = prefix[v] ^ adj[v]
        filt = ZeroInfoFilter(self.graph) if use_filters else None
        stats = FilterStats()
        supports: list[int] | None = [] if list_supports else None
        full = self._full
        s = 1
        i = adj[0]
        while True:
            if filt is not None and filt.rejects(s):
                stats.zero_info_rejects += 1
            elif self._minimal_by_rank(s, i):
                stats.minimal += 1
                if supports is not None:
                    supports.append(s)
            else:
                stats.rank_rejects += 1
            if filt is not None:
                filt.observe(s, i)
            if s == full:
                break
            i ^= prefix[(s ^ (s + 1)).bit_length()]
            s += 1
        return CountReport(stats.minimal,
                           None if supports is None else tuple(supports), stats)

    def minimal_pairs(self) -> list[tuple[int, int]]:
        """All 2-subsets giving minimal codewords: pairs with a common neighbor.

        Since rows have no self bits, adj[u] & adj[v] automatically excludes
        u and v themselves.
        """
        adj = self.graph.adj
        return [(u, v)
                for u in range(self.n) for v in range(u + 1, self.n)
                if adj[u] & adj[v]]


def all_codewords_minimal(g: Graph) -> bool:
    """Whether every nonzero codeword of the graph's code is minimal,
    i.e. the count of minimal codewords reaches 2^n - 1."""
    if g.n > MAX_ORACLE_N:
        raise LimitError(f"all_codewords_minimal supports n <= {MAX_ORACLE_N}")
    code = GraphCode(g)
    prefix = [0] * (g.n + 1)
    for v in range(g.n):
        prefix[v + 1] = prefix[v] ^ g.adj[v]
    s = 1
    i = g.adj[0]
    while True:
        if not code._minimal_by_rank(s, i):
            return False
        if s == g.full_mask:
            return True
        i ^= prefix[(s ^ (s + 1)).bit_length()]
        s += 1


def support_records(code: GraphCode, supports) -> list[dict]:
    """JSON-ready rows for a minimal-support list: 1-based vertex list,
    0/1 support string of length 2n, and Hamming weight."""
    out = []
    for s_mask in supports:
        cw = code.codeword(s_mask)
        out.append({"s": [v + 1 for v in cw.vertices],
                    "support": cw.support_string(),
                    "weight": cw.weight})
    return out


def support_lines(code: GraphCode, supports) -> list[str]:
    """Plain-text export: sorted 1-based vertex list, then the support string."""
    return [f"{','.join(str(v + 1) for v in cw.vertices)} {cw.support_string()}"
            for cw in (code.codeword(s) for s in supports)]
