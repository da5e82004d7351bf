import numpy as np
import pytest

from conftest import random_graph
from stabnet import oracle
from stabnet.contraction import BellConvention, ContractionInstance, Status, contract
from stabnet.graphstate import (
    Bipartition,
    GraphState,
    augment,
    bipartitions,
    entanglement_rank,
    stabilizer_generators,
)
from stabnet.pauli import StabilizerGroup


class TestGraphState:
    def test_from_edges_and_neighbors(self):
        g = GraphState.from_edges(4, [(0, 1), (1, 2)])
        assert g.neighbors(1) == (0, 2)
        assert g.edges() == [(0, 1), (1, 2)]

    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            GraphState.from_edges(2, [(0, 0)])

    def test_rejects_asymmetric_rows(self):
        with pytest.raises(ValueError):
            GraphState(2, (0b10, 0b00))

    def test_json_round_trip(self):
        g = GraphState.cycle(5)
        assert GraphState.from_json(g.to_json()) == GraphState(g.n, g.rows)

    def test_bitstring_round_trip(self):
        g = GraphState.from_edges(4, [(0, 2), (1, 3), (2, 3)])
        assert GraphState.from_bitstring(4, g.to_bitstring()).rows == g.rows

    def test_bitstring_length_checked(self):
        with pytest.raises(ValueError):
            GraphState.from_bitstring(4, "101")

    def test_connectivity(self):
        assert GraphState.cycle(4).is_connected()
        assert not GraphState.from_edges(3, [(0, 1)]).is_connected()

    def test_labels(self):
        g = GraphState.from_edges(2, [(0, 1)], labels=("left", "right"))
        assert g.labels == ("left", "right")
        with pytest.raises(ValueError):
            GraphState.from_edges(2, [(0, 1)], labels=("only-one",))


class TestStabilizerGenerators:
    def test_empty_graph(self):
        group = stabilizer_generators(GraphState.empty(3))
        assert group.to_strings() == ["+XII", "+IXI", "+IIX"]

    def test_single_edge(self):
        group = stabilizer_generators(GraphState.from_edges(2, [(0, 1)]))
        assert group.to_strings() == ["+XZ", "+ZX"]

    def test_five_cycle_pattern(self):
        group = stabilizer_generators(GraphState.cycle(5))
        assert group.generators[0].to_string() == "+XZIIZ"
        strings = [g.to_string()[1:] for g in group.generators]
        for k, s in enumerate(strings):
            rotated = "".join("XZIIZ"[(q - k) % 5] for q in range(5))
            assert s == rotated

    def test_each_generator_fixes_dense_vector(self, rng):
        for _ in range(10):
            g = random_graph(rng, rng.randint(1, 5))
            v = oracle.graph_state_vector(g)
            for K in stabilizer_generators(g).generators:
                w = oracle.apply_pauli(v, K)
                assert np.allclose(v.amplitudes, w.amplitudes)

    def test_output_is_valid_full_rank_group(self, rng):
        for _ in range(10):
            g = random_graph(rng, rng.randint(1, 6))
            group = stabilizer_generators(g)  # constructor enforces invariants
            assert len(group) == g.n


class TestEntanglementRank:
    def test_star_always_one(self):
        for n in range(2, 7):
            g = GraphState.star(n)
            assert all(entanglement_rank(g, p) == 1 for p in bipartitions(n))

    def test_empty_graph_zero(self):
        g = GraphState.empty(4)
        assert all(entanglement_rank(g, p) == 0 for p in bipartitions(4))

    def test_five_cycle_two_vs_three(self):
        g = GraphState.cycle(5)
        v = oracle.graph_state_vector(g)
        for p in bipartitions(5):
            if len(p.a) in (2, 3):
                assert entanglement_rank(g, p) == 2
                assert oracle.reduced_rank(v, p.a) == 4

    def test_symmetric_and_bounded(self, rng):
        for _ in range(30):
            n = rng.randint(2, 6)
            g = random_graph(rng, n)
            for p in bipartitions(n):
                r = entanglement_rank(g, p)
                assert r == entanglement_rank(g, p.swapped())
                assert r <= min(len(p.a), len(p.b))

    def test_matches_dense_reduced_rank(self, rng):
        for _ in range(25):
            n = rng.randint(2, 6)
            g = random_graph(rng, n)
            v = oracle.graph_state_vector(g)
            for p in bipartitions(n):
                assert 2 ** entanglement_rank(g, p) == oracle.reduced_rank(v, p.a)

    def test_invalid_partition(self):
        g = GraphState.cycle(4)
        with pytest.raises(ValueError):
            entanglement_rank(g, Bipartition((0,), (1, 2)))


class TestBipartition:
    def test_rejects_empty_side(self):
        with pytest.raises(ValueError):
            Bipartition((), (0, 1))

    def test_rejects_overlap(self):
        with pytest.raises(ValueError):
            Bipartition((0, 1), (1, 2))

    def test_enumeration_halves_work(self):
        parts = list(bipartitions(4))
        assert len(parts) == 7  # 2^(4-1) - 1
        assert all(0 in p.a for p in parts)


class TestAugment:
    def test_plus_state_becomes_bell(self):
        plus = StabilizerGroup.from_strings(["X"])
        assert augment(plus, 0).to_strings() == ["+XX", "+ZZ"]

    def test_edge_state_branches(self):
        # copying vertex 0 of the 2-vertex edge state:
        # |0>|+>|0> + |1>|->|1> over (vertex 0, vertex 1, copy)
        group = stabilizer_generators(GraphState.from_edges(2, [(0, 1)]))
        v = oracle.stabilizer_state_vector(augment(group, 0))
        expected = np.zeros(8, dtype=complex)
        expected[0b000] = expected[0b010] = 0.5
        expected[0b101], expected[0b111] = 0.5, -0.5
        assert abs(v.overlap_magnitude(oracle.DenseState(3, expected)) - 1) < 1e-12

    def test_matches_dense_basis_copy(self, rng):
        for _ in range(15):
            n = rng.randint(1, 4)
            g = random_graph(rng, n)
            a = rng.randrange(n)
            group = stabilizer_generators(g)
            copied = oracle.stabilizer_state_vector(augment(group, a))
            # dense basis-copy isometry: fan the amplitude of qubit a out
            # onto an appended qubit
            src = oracle.graph_state_vector(g)
            dense = np.zeros(1 << (n + 1), dtype=complex)
            for idx, amp in enumerate(src.amplitudes):
                bit = (idx >> (n - 1 - a)) & 1
                dense[(idx << 1) | bit] = amp
            assert (
                abs(copied.overlap_magnitude(oracle.DenseState(n + 1, dense)) - 1)
                < 1e-12
            )

    def test_round_trip_through_contraction(self):
        # project the copy onto <+| (a fresh |+> node glued by a Bell pair)
        group = stabilizer_generators(GraphState.cycle(4))
        aug = augment(group, 2)
        plus = StabilizerGroup.from_strings(["X"])
        inst = ContractionInstance((aug, plus), ((4, 5),), BellConvention.PLUS_PAIR)
        res = contract(inst)
        assert res.status is Status.PURE
        original = oracle.stabilizer_state_vector(group)
        recovered = oracle.stabilizer_state_vector(res.residual)
        assert abs(original.overlap_magnitude(recovered) - 1) < 1e-12

    def test_vertex_out_of_range(self):
        with pytest.raises(ValueError):
            augment(StabilizerGroup.from_strings(["X"]), 1)
