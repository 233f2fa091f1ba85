"""Direct exact counting of magic labelings.

A magic labeling assigns a nonnegative integer to every edge so that the
labels incident to each vertex sum to the magic sum s.  Two graph shapes
are supported:

* pseudo-line graphs: n vertices in a row, vertex i touching a left edge,
  a right edge, and its own self-loops (the outermost edges are pendant);
* pseudo-cycle graphs: n vertices in a ring, vertex i touching ring edges
  i and i+1 (mod n) plus its self-loops.  The one-vertex ring is special:
  its single non-loop edge meets the vertex twice, so its label counts
  twice toward the vertex sum.

Loops absorb slack: for fixed adjacent ring/chain labels b, b' the loop
labels at a vertex with k loops contribute C(s-b-b'+k-1, k-1) choices
(stars and bars), with the k = 0 convention that the binomial is 1 when
the slack is 0 and 0 otherwise (the loop-free equality constraint).  The
fast counters below run a dynamic program over the chain of non-loop
labels; ``brute_force_count`` enumerates every edge labeling one by one
and is the independent oracle the closed forms are tested against.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Mapping, Sequence


class LengthMismatch(ValueError):
    """Loop vector length does not match the vertex count."""


class InstanceTooLarge(ValueError):
    """Brute-force enumeration refused; raise the caps to force it."""


def loop_ways(slack: int, k: int) -> int:
    """Number of ways k loop labels at one vertex can absorb the slack."""
    if slack < 0:
        return 0
    if k == 0:
        return 1 if slack == 0 else 0
    return comb(slack + k - 1, k - 1)


def count_line(n: int, m: int, s: int) -> int:
    """Magic labelings of the n-vertex pseudo-line with m loops per vertex.

    n = 0 returns s + 1 by convention, which is what keeps the
    transfer-matrix expressions valid at the zeroth power.
    """
    if n < 0 or m < 0 or s < 0:
        raise ValueError("arguments must be nonnegative")
    if n == 0:
        return s + 1
    # state[b] = number of partial labelings with current chain label b
    state = [1] * (s + 1)
    for _vertex in range(n):
        state = [
            sum(state[b] * loop_ways(s - b - b2, m) for b in range(s + 1 - b2))
            for b2 in range(s + 1)
        ]
    return sum(state)


def count_cycle(n: int, loops: Sequence[int], s: int) -> int:
    """Magic labelings of the n-vertex pseudo-cycle with loop vector k.

    ``loops[i]`` is the number of self-loops at vertex i.  n = 0 returns
    s + 1 by the same convention as the line case; n = 1 doubles the
    single ring label at its vertex.
    """
    if n < 0 or s < 0:
        raise ValueError("arguments must be nonnegative")
    loops = tuple(loops)
    if len(loops) != n:
        raise LengthMismatch(f"expected {n} loop counts, got {len(loops)}")
    if any(k < 0 for k in loops):
        raise ValueError("loop counts must be nonnegative")
    if n == 0:
        return s + 1
    if n == 1:
        return sum(loop_ways(s - 2 * b, loops[0]) for b in range(s // 2 + 1))
    total = 0
    for b0 in range(s + 1):
        # walk the ring from edge 0 back around to edge 0
        state = [loop_ways(s - b0 - b, loops[0]) for b in range(s + 1)]
        for vertex in range(1, n - 1):
            state = [
                sum(state[b] * loop_ways(s - b - b2, loops[vertex]) for b in range(s + 1 - b2))
                for b2 in range(s + 1)
            ]
        total += sum(state[b] * loop_ways(s - b - b0, loops[n - 1]) for b in range(s + 1))
    return total


# -- graph description and the enumeration oracle ----------------------------


@dataclass(frozen=True)
class GraphSpec:
    """A pseudo-line or pseudo-cycle instance with per-vertex loop counts."""

    kind: str  # "line" or "cycle"
    n: int
    loops: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("line", "cycle"):
            raise ValueError(f"unknown graph kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if self.kind == "cycle" and self.n < 1:
            raise ValueError("cycles need at least one vertex")
        if len(self.loops) != self.n:
            raise LengthMismatch(f"expected {self.n} loop counts, got {len(self.loops)}")
        if any(k < 0 for k in self.loops):
            raise ValueError("loop counts must be nonnegative")

    @staticmethod
    def line(n: int, m: int) -> GraphSpec:
        return GraphSpec("line", n, (m,) * n)

    @staticmethod
    def cycle(n: int, loops: Sequence[int]) -> GraphSpec:
        return GraphSpec("cycle", n, tuple(loops))

    def count(self, s: int) -> int:
        """Fast DP count for this instance."""
        if self.kind == "line":
            ms = set(self.loops)
            if len(ms) > 1:
                raise ValueError("fast line counting assumes a uniform loop count")
            return count_line(self.n, self.loops[0] if self.loops else 0, s)
        return count_cycle(self.n, self.loops, s)

    def incidence(self) -> tuple[int, list[list[int]]]:
        """Edge count and, per vertex, incident edge indices with multiplicity.

        Edge order: non-loop edges first (chain or ring), then loops vertex
        by vertex.  The one-vertex ring lists its ring edge twice.
        """
        if self.kind == "line":
            n_plain = self.n + 1
            slots = [[i, i + 1] for i in range(self.n)]
        elif self.n == 1:
            n_plain = 1
            slots = [[0, 0]]
        else:
            n_plain = self.n
            slots = [[i, (i + 1) % self.n] for i in range(self.n)]
        next_edge = n_plain
        for vertex, k in enumerate(self.loops):
            for _ in range(k):
                slots[vertex].append(next_edge)
                next_edge += 1
        return next_edge, slots


def brute_force_count(spec: GraphSpec, s: int, var_cap: int = 10, s_cap: int = 8) -> int:
    """Count by exhaustively enumerating every valid edge labeling.

    A backtracking scan assigns edges one at a time and abandons a prefix
    as soon as some vertex sum exceeds s, or a fully assigned vertex
    misses it; every valid labeling is visited exactly once.  Instances
    beyond the caps raise InstanceTooLarge rather than run forever.
    """
    if s < 0:
        raise ValueError("magic sum must be nonnegative")
    if spec.kind == "line" and spec.n == 0:
        return s + 1  # convention, nothing to enumerate
    n_edges, slots = spec.incidence()
    if n_edges > var_cap or s > s_cap:
        raise InstanceTooLarge(
            f"{n_edges} edge variables at s={s} exceeds caps ({var_cap}, {s_cap})"
        )
    # vertices that become fully assigned once edge j has a value
    last_edge = [max(edges) for edges in slots]
    finishers: list[list[int]] = [[] for _ in range(n_edges)]
    for vertex, last in enumerate(last_edge):
        finishers[last].append(vertex)
    sums = [0] * spec.n
    multiplicity = [
        [sum(1 for e in slots[v] if e == j) for v in range(spec.n)] for j in range(n_edges)
    ]

    def extend(edge: int) -> int:
        if edge == n_edges:
            return 1
        found = 0
        touched = [v for v in range(spec.n) if multiplicity[edge][v]]
        for value in range(s + 1):
            ok = True
            for v in touched:
                sums[v] += value * multiplicity[edge][v]
                if sums[v] > s:
                    ok = False
            if ok:
                for v in finishers[edge]:
                    if sums[v] != s:
                        ok = False
                        break
            if ok:
                found += extend(edge + 1)
            for v in touched:
                sums[v] -= value * multiplicity[edge][v]
        return found

    return extend(0)


@dataclass
class CountTable:
    """Exact counts h(s) for one graph instance, keyed by magic sum."""

    spec: GraphSpec
    counts: dict[int, int] = field(default_factory=dict)

    @staticmethod
    def compute(spec: GraphSpec, s_values: Sequence[int]) -> CountTable:
        return CountTable(spec, {s: spec.count(s) for s in s_values})

    def rows(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.counts.items()))

    def to_csv(self) -> str:
        lines = ["s,count"]
        lines += [f"{s},{value}" for s, value in self.rows()]
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> Mapping[str, object]:
        return {
            "kind": self.spec.kind,
            "n": self.spec.n,
            "loops": list(self.spec.loops),
            "counts": {str(s): str(value) for s, value in self.rows()},
        }
