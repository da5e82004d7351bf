"""Shared test helpers: randomized instance generators, exhaustive
oracles, and dense-state comparison utilities."""

from __future__ import annotations

import random
from itertools import combinations

import numpy as np
import pytest

from stabnet import oracle
from stabnet.contraction import (
    BellConvention,
    ContractionInstance,
    Status,
    contract,
)
from stabnet.graphstate import GraphState, stabilizer_generators
from stabnet.network import NetworkTopology
from stabnet.pauli import StabilizerGroup


def random_graph(rng: random.Random, n: int, edge_prob: float = 0.5) -> GraphState:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < edge_prob
    ]
    return GraphState.from_edges(n, edges)


def random_contraction_instance(
    rng: random.Random, max_qubits: int = 12
) -> ContractionInstance:
    """Graph-state nodes with random disjoint pairings; sometimes includes
    a deliberate plus-pair/graph-edge clash so annihilation shows up."""
    node_sizes = []
    total = 0
    for _ in range(rng.randint(1, 3)):
        size = rng.randint(1, 4)
        if total + size > max_qubits:
            break
        node_sizes.append(size)
        total += size
    if not node_sizes:
        node_sizes = [2]
        total = 2
    nodes = tuple(
        stabilizer_generators(random_graph(rng, size)) for size in node_sizes
    )
    qubits = list(range(total))
    rng.shuffle(qubits)
    n_pairs = rng.randint(0, total // 2)
    pairings = tuple(
        (qubits[2 * k], qubits[2 * k + 1]) for k in range(n_pairs)
    )
    convention = rng.choice(list(BellConvention))
    return ContractionInstance(nodes, pairings, convention)


def node_state_vectors(inst: ContractionInstance) -> list[oracle.DenseState]:
    return [oracle.stabilizer_state_vector(g) for g in inst.node_states]


def check_against_dense(inst: ContractionInstance, tol: float = 1e-9) -> None:
    """The stabilizer-engine result must agree with dense Bell projection:
    zero vector iff ANNIHILATED, otherwise (when PURE) unit fidelity and a
    squared norm of exactly 2**log_norm_exponent."""
    result = contract(inst)
    dense = oracle.dense_contract(
        node_state_vectors(inst), inst.pairings, inst.convention.value
    )
    if result.status is Status.ANNIHILATED:
        assert dense.norm() <= tol, "engine annihilated but dense vector is nonzero"
        return
    assert dense.norm() > tol, "dense vector vanished but engine did not annihilate"
    if result.status is Status.PURE:
        expected_sq = 2.0**result.log_norm_exponent
        assert abs(dense.norm() ** 2 - expected_sq) <= tol * max(1.0, expected_sq)
        if result.residual.n == 0:
            return
        sv = oracle.stabilizer_state_vector(result.residual)
        assert abs(dense.overlap_magnitude(sv) - 1) <= tol


def exhaustive_min_cut(t: NetworkTopology, a: set[str], b: set[str]) -> int:
    """Try every node partition separating a from b and take the cheapest."""
    rest = [i for i in t.node_ids if i not in a and i not in b]
    best = None
    for mask in range(1 << len(rest)):
        side_a = set(a) | {rest[i] for i in range(len(rest)) if (mask >> i) & 1}
        value = sum(
            c for u, v, c in t.edges if (u in side_a) != (v in side_a)
        )
        best = value if best is None else min(best, value)
    return best


def random_connected_topology(
    rng: random.Random, max_nodes: int = 10, min_clients: int = 2, max_clients: int = 4
) -> NetworkTopology:
    """Random connected relay core with leaf clients hanging off it."""
    n_clients = rng.randint(min_clients, max_clients)
    n_relays = rng.randint(1, max_nodes - n_clients)
    relays = [f"r{i}" for i in range(n_relays)]
    nodes = [(r, "relay") for r in relays]
    edges = []
    for i in range(1, n_relays):
        edges.append((relays[i], relays[rng.randrange(i)], rng.randint(1, 2)))
    extra = rng.randint(0, n_relays)
    for _ in range(extra):
        u, v = rng.sample(relays, 2) if n_relays > 1 else (None, None)
        if u is not None and not any({u, v} == {a, b} for a, b, _ in edges):
            edges.append((u, v, rng.randint(1, 2)))
    for i in range(n_clients):
        nodes.append((f"c{i}", "client"))
        edges.append((f"c{i}", rng.choice(relays), 1))
    return NetworkTopology(tuple(nodes), tuple(edges))


def groups_equal(a: StabilizerGroup, b: StabilizerGroup) -> bool:
    """Same group: equal rank and every generator of each inside the other."""
    if a.n != b.n or len(a) != len(b):
        return False
    return all(b.decompose(g) is not None for g in a.generators) and all(
        a.decompose(g) is not None for g in b.generators
    )


def rank_spectrum(group: StabilizerGroup) -> dict[tuple[int, ...], int]:
    """Entanglement rank for every subset choice containing qubit 0."""
    spectrum = {}
    for size in range(1, group.n):
        for subset in combinations(range(group.n), size):
            if 0 in subset:
                spectrum[subset] = group.entanglement_rank(subset)
    return spectrum


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0DE)


@pytest.fixture
def np_rng() -> np.random.Generator:
    return np.random.default_rng(0xC0DE)
