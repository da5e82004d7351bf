"""Graphs, graph-state stabilizer generators, entanglement ranks, and
the basis-copy augmentation used to model controlled isometries.

A graph state is kept purely as a symmetric adjacency bit-matrix (one
packed integer per vertex row); the stabilizer generators K_a = X_a
Z_{N(a)} and the dense vector are derived on demand.  Entanglement rank
across a bipartition {A, B} is the GF(2) rank of the off-diagonal
adjacency block rows(A) x cols(B), which for graph states equals the
log2 rank of the reduced density operator (the dense oracle cross-checks
this).
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import gf2
from .pauli import PauliOperator, StabilizerGroup


@dataclass(frozen=True)
class GraphState:
    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("need at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("adjacency must have one row per vertex")
        mask = (1 << self.n) - 1
        for a, row in enumerate(self.rows):
            if row & ~mask:
                raise ValueError(f"row {a} extends beyond {self.n} vertices")
            if (row >> a) & 1:
                raise ValueError(f"self-loop at vertex {a}")
            for b in range(self.n):
                if ((row >> b) & 1) != ((self.rows[b] >> a) & 1):
                    raise ValueError("adjacency is not symmetric")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must match the vertex count")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence[str] | None = None
    ) -> GraphState:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> GraphState:
        return cls.from_edges(n, [])

    @classmethod
    def complete(cls, n: int) -> GraphState:
        return cls.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @classmethod
    def path(cls, n: int) -> GraphState:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> GraphState:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> GraphState:
        """Center at vertex 0; the GHZ-class target in graph form."""
        return cls.from_edges(n, [(0, i) for i in range(1, n)])

    def neighbors(self, a: int) -> tuple[int, ...]:
        return tuple(b for b in range(self.n) if (self.rows[a] >> b) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (self.rows[u] >> v) & 1
        ]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def is_connected(self) -> bool:
        seen = 1
        frontier = [0]
        while frontier:
            a = frontier.pop()
            fresh = self.rows[a] & ~seen
            while fresh:
                low = fresh & -fresh
                seen |= low
                frontier.append(low.bit_length() - 1)
                fresh ^= low
        return seen == (1 << self.n) - 1

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> GraphState:
        data = json.loads(text)
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])

    def to_bitstring(self) -> str:
        """Row-major upper triangle: bit for (u, v) with u < v."""
        return "".join(
            "1" if self.has_edge(u, v) else "0"
            for u in range(self.n)
            for v in range(u + 1, self.n)
        )

    @classmethod
    def from_bitstring(cls, n: int, bits: str) -> GraphState:
        expected = n * (n - 1) // 2
        if len(bits) != expected:
            raise ValueError(f"need {expected} bits for {n} vertices, got {len(bits)}")
        it = iter(bits)
        edges = []
        for u in range(n):
            for v in range(u + 1, n):
                c = next(it)
                if c == "1":
                    edges.append((u, v))
                elif c != "0":
                    raise ValueError(f"invalid bit {c!r}")
        return cls.from_edges(n, edges)


@dataclass(frozen=True)
class Bipartition:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", tuple(sorted(self.a)))
        object.__setattr__(self, "b", tuple(sorted(self.b)))
        if not self.a or not self.b:
            raise ValueError("both sides must be nonempty")
        if set(self.a) & set(self.b):
            raise ValueError("sides overlap")

    @classmethod
    def split(cls, n: int, a_side: Iterable[int]) -> Bipartition:
        a = set(a_side)
        return cls(tuple(a), tuple(q for q in range(n) if q not in a))

    def swapped(self) -> Bipartition:
        return Bipartition(self.b, self.a)

    def covers(self, n: int) -> bool:
        return set(self.a) | set(self.b) == set(range(n))


def bipartitions(n: int) -> Iterator[Bipartition]:
    """All bipartitions of range(n), side A always containing vertex 0."""
    rest = list(range(1, n))
    for mask in range(1 << (n - 1)):
        a = [0] + [rest[i] for i in range(n - 1) if (mask >> i) & 1]
        if len(a) < n:
            yield Bipartition.split(n, a)


def stabilizer_generators(g: GraphState) -> StabilizerGroup:
    """K_a = X on a, Z on every neighbor of a, sign +."""
    gens = [PauliOperator(g.n, 1 << a, g.rows[a], 0) for a in range(g.n)]
    return StabilizerGroup(g.n, tuple(gens))


def entanglement_rank(g: GraphState, part: Bipartition) -> int:
    """GF(2) rank of the adjacency block between the two sides."""
    if not part.covers(g.n):
        raise ValueError("bipartition does not cover the vertex set")
    block = []
    for u in part.a:
        block.append(gf2.pack_row((g.rows[u] >> v) & 1 for v in part.b))
    return gf2.rank_packed(block)


def augment(group: StabilizerGroup, a: int) -> StabilizerGroup:
    """Basis-copy qubit ``a`` onto a fresh qubit appended at index n.

    Stabilizer-level effect of copying in the computational basis: every
    generator with X support on ``a`` gains X on the copy, and Z_a Z_copy
    joins the group.
    """
    if not 0 <= a < group.n:
        raise ValueError(f"vertex {a} out of range")
    n = group.n + 1
    gens = []
    for g in group.generators:
        x = g.x | (((g.x >> a) & 1) << group.n)
        gens.append(PauliOperator(n, x, g.z, g.phase))
    gens.append(PauliOperator(n, 0, (1 << a) | (1 << group.n), 0))
    return StabilizerGroup(n, tuple(gens))
