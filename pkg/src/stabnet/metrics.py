"""Closed-form comparison figures for multipartite (LQC) versus
central-node EPR distribution on regular tree networks.

The asymptotic classes are represented by their simplest members with
all constants set to 1, so every number here is in model units: one
round of local coding per tree level against one end-to-end EPR per
client, and memory bounded by node connectivity against memory of the
order of the client count.  The erasure-flag noise model multiplies an
independent per-channel survival probability.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .network import NetworkTopology


class Scheme(Enum):
    LQC = "LQC"
    EPR = "EPR"

    @classmethod
    def coerce(cls, value: Scheme | str) -> Scheme:
        if isinstance(value, cls):
            return value
        return cls(value.upper())


@dataclass(frozen=True)
class RegularTreeSpec:
    """Tree where every relay has ``n`` children; clients hang off the
    depth-p end relays (p = distance from the central node to a client)."""

    n: int
    p: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("connectivity n must be >= 2")
        if self.p < 1:
            raise ValueError("depth p must be >= 1")

    @property
    def relay_count(self) -> int:
        # levels 0 .. p-1 hold relays, level p holds the clients
        return sum(self.n**level for level in range(self.p))

    @property
    def client_count(self) -> int:
        return self.n**self.p

    def edge_count(self) -> int:
        return sum(self.n**level for level in range(1, self.p + 1))

    def as_topology(self) -> NetworkTopology:
        nodes = []
        edges = []
        previous = ["r0"]
        nodes.append(("r0", "relay"))
        counter = 1
        for level in range(1, self.p + 1):
            role = "client" if level == self.p else "relay"
            prefix = "c" if role == "client" else "r"
            current = []
            for parent in previous:
                for _ in range(self.n):
                    name = f"{prefix}{counter}"
                    counter += 1
                    nodes.append((name, role))
                    edges.append((parent, name, 1))
                    current.append(name)
            previous = current
        return NetworkTopology(tuple(nodes), tuple(edges))


@dataclass(frozen=True)
class NoiseSpec:
    """Each distributed entangled state fails independently with
    probability ``p_fail`` and raises an abort flag."""

    p_fail: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_fail <= 1.0:
            raise ValueError(f"p_fail must be in [0, 1], got {self.p_fail}")


def latency(spec: RegularTreeSpec, scheme: Scheme | str) -> int:
    """Distribution rounds: p for local coding, n**p for EPR swapping."""
    scheme = Scheme.coerce(scheme)
    return spec.p if scheme is Scheme.LQC else spec.n**spec.p


def memory_qubits(spec: RegularTreeSpec, scheme: Scheme | str) -> int:
    """Peak memory qubits per node: n + 1 for local coding, n**p for EPR."""
    scheme = Scheme.coerce(scheme)
    return spec.n + 1 if scheme is Scheme.LQC else spec.n**spec.p


def success_probability(noise: NoiseSpec, channels: int) -> float:
    """(1 - p_fail)**channels: the no-abort branch of the flag channel."""
    if channels < 0:
        raise ValueError("channel count must be >= 0")
    return (1.0 - noise.p_fail) ** channels


def channel_count(
    t: RegularTreeSpec | NetworkTopology,
    scheme: Scheme | str,
    center: str | None = None,
) -> int:
    """Qubit channels consumed by one distribution.

    LQC uses every edge channel exactly once.  The EPR baseline sends one
    end-to-end pair per client from a central relay, consuming one
    channel per edge crossed; the center defaults to the relay
    minimizing the total client hop count (ties broken by node order).
    """
    scheme = Scheme.coerce(scheme)
    if isinstance(t, RegularTreeSpec):
        if scheme is Scheme.LQC:
            return t.edge_count()
        return t.client_count * t.p
    if scheme is Scheme.LQC:
        return sum(c for _, _, c in t.edges)
    return _epr_channels(t, center)


def _epr_channels(t: NetworkTopology, center: str | None) -> int:
    clients = t.clients
    if not clients:
        raise ValueError("topology has no clients")
    if center is not None:
        if center not in t.node_ids:
            raise ValueError(f"unknown center {center!r}")
        return _total_hops(t, center, clients)
    candidates = t.relays or t.node_ids
    return min(_total_hops(t, relay, clients) for relay in candidates)


def _total_hops(t: NetworkTopology, source: str, clients: tuple[str, ...]) -> int:
    adj: dict[str, list[str]] = {i: [] for i in t.node_ids}
    for u, v, _ in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        a = queue.popleft()
        for b in adj[a]:
            if b not in dist:
                dist[b] = dist[a] + 1
                queue.append(b)
    missing = [c for c in clients if c not in dist]
    if missing:
        raise ValueError(f"clients unreachable from {source!r}: {missing}")
    return sum(dist[c] for c in clients)
