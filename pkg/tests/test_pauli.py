import random

import numpy as np
import pytest

from stabnet import oracle
from stabnet.pauli import (
    AnticommutingGeneratorsError,
    MinusIdentityError,
    PauliOperator,
    PauliParseError,
    StabilizerGroup,
    commutes,
    contains,
    gf2_rank,
    identity,
    multiply,
    parse_pauli,
    reduce_generators,
)

FIVE_QUBIT = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
NINE_QUBIT = [
    "XZZXIXZZX",
    "XIXXZZXZZ",
    "IXZZXIIXZ",
    "ZXIIXZZXI",
    "ZYYXZZIII",
    "YXXYXXIII",
]

# Symplectic [X|Z] matrix of the six nine-qubit generators above.
H_MATRIX = [
    [1, 0, 0, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0],
    [1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1],
    [0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
]


def random_operator(rng, n):
    return PauliOperator(
        n, rng.getrandbits(n), rng.getrandbits(n), rng.randrange(4)
    )


class TestParse:
    def test_five_qubit_generator_bits(self):
        p = parse_pauli("XZZXI")
        assert p.x_bits == (1, 0, 0, 1, 0)
        assert p.z_bits == (0, 1, 1, 0, 0)
        assert p.phase == 0

    def test_identity(self):
        p = parse_pauli("II")
        assert p.n == 2 and p.is_identity_pattern() and p.phase == 0

    def test_negative_yy(self):
        p = parse_pauli("-YY")
        assert p.x_bits == (1, 1) and p.z_bits == (1, 1) and p.phase == 2

    def test_round_trip(self):
        for text in ("+XZZXI", "-YY", "+II", "-ZXIXZ"):
            assert parse_pauli(text).to_string() == text

    def test_malformed_character_reports_position(self):
        with pytest.raises(PauliParseError) as exc:
            parse_pauli("XZQX")
        assert exc.value.position == 2
        with pytest.raises(PauliParseError):
            parse_pauli("")
        with pytest.raises(PauliParseError):
            parse_pauli("-")

    def test_explicit_length_check(self):
        with pytest.raises(PauliParseError):
            parse_pauli("XX", n=3)


class TestMultiply:
    def test_x_times_z_is_minus_i_y(self):
        p = parse_pauli("X") * parse_pauli("Z")
        assert (p.x, p.z, p.phase) == (1, 1, 3)  # -iY

    def test_y_squared_is_identity(self):
        p = parse_pauli("Y")
        assert (p * p).to_string() == "+I"

    def test_xz_times_zx(self):
        # frozen from the dense two-qubit product: (X@Z)(Z@X) = +YY
        assert (parse_pauli("XZ") * parse_pauli("ZX")).to_string() == "+YY"

    def test_xx_times_zz(self):
        assert (parse_pauli("XX") * parse_pauli("ZZ")).to_string() == "-YY"

    def test_identity_neutral(self, rng):
        for _ in range(20):
            p = random_operator(rng, 4)
            assert p * identity(4) == p
            assert identity(4) * p == p

    def test_matches_dense_matrices(self, rng):
        for _ in range(100):
            n = rng.randint(1, 4)
            p, q = random_operator(rng, n), random_operator(rng, n)
            lhs = oracle.pauli_matrix(multiply(p, q))
            rhs = oracle.pauli_matrix(p) @ oracle.pauli_matrix(q)
            assert np.allclose(lhs, rhs)

    def test_associative(self, rng):
        for _ in range(100):
            n = rng.randint(1, 5)
            p, q, r = (random_operator(rng, n) for _ in range(3))
            assert (p * q) * r == p * (q * r)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            multiply(parse_pauli("X"), parse_pauli("XX"))


class TestCommutes:
    def test_x_z_anticommute(self):
        assert not commutes(parse_pauli("X"), parse_pauli("Z"))

    def test_five_qubit_pair(self):
        assert commutes(parse_pauli("XZZXI"), parse_pauli("IXZZX"))

    def test_nine_qubit_generators_pairwise(self):
        ops = [parse_pauli(s) for s in NINE_QUBIT]
        for i, a in enumerate(ops):
            for b in ops[i + 1 :]:
                assert commutes(a, b)

    def test_symmetric(self, rng):
        for _ in range(100):
            n = rng.randint(1, 5)
            p, q = random_operator(rng, n), random_operator(rng, n)
            assert commutes(p, q) == commutes(q, p)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            commutes(parse_pauli("X"), parse_pauli("XX"))


class TestGf2Rank:
    def test_frozen_check_matrix_rank(self):
        assert gf2_rank(H_MATRIX) == 6

    def test_nine_qubit_generators_give_that_matrix(self):
        group = StabilizerGroup.from_strings(NINE_QUBIT)
        assert [list(row) for row in group.symplectic_matrix()] == H_MATRIX

    def test_zero_rows(self):
        assert gf2_rank([[0] * 4, [0] * 4]) == 0

    def test_random_vs_exhaustive(self, rng):
        for _ in range(50):
            rows = [[rng.randint(0, 1) for _ in range(5)] for _ in range(5)]
            packed = [sum(b << i for i, b in enumerate(r)) for r in rows]
            seen = set()
            for mask in range(1 << 5):
                acc = 0
                for i in range(5):
                    if (mask >> i) & 1:
                        acc ^= packed[i]
                seen.add(acc)
            assert 2 ** gf2_rank(rows) == len(seen)


class TestContains:
    def setup_method(self):
        self.group = StabilizerGroup.from_strings(FIVE_QUBIT)

    def test_generators_are_members(self):
        for g in self.group.generators:
            assert contains(self.group, g)

    def test_product_of_generators(self):
        p = self.group.generators[0] * self.group.generators[2]
        assert contains(self.group, p)
        assert self.group.decompose(p) == (0, 2)

    def test_no_weight_one_member(self):
        # cross-checked by enumerating all 16 elements
        weights = {e.weight() for e in self.group.elements()}
        assert 1 not in weights
        for q in range(5):
            assert not contains(self.group, PauliOperator(5, 1 << q, 0, 0))

    def test_sign_matters(self):
        flipped = self.group.generators[0].negated()
        assert not contains(self.group, flipped)
        assert self.group.find_pattern(flipped) == self.group.generators[0]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            contains(self.group, parse_pauli("XX"))


class TestReduceGenerators:
    def test_bell_group_with_redundant_element(self):
        ops = [parse_pauli(s) for s in ("XX", "ZZ", "-YY")]
        group = reduce_generators(ops)
        assert group.to_strings() == ["+XX", "+ZZ"]

    def test_nine_qubit_all_independent(self):
        group = reduce_generators([parse_pauli(s) for s in NINE_QUBIT])
        assert len(group) == 6

    def test_duplicates_dropped(self):
        ops = [parse_pauli("XZZXI")] * 3
        assert len(reduce_generators(ops)) == 1

    def test_anticommuting_pair_rejected(self):
        with pytest.raises(AnticommutingGeneratorsError):
            reduce_generators([parse_pauli("X"), parse_pauli("Z")])

    def test_minus_identity_flagged(self):
        # XX * ZZ = -YY, so +YY closes the group onto -I
        ops = [parse_pauli(s) for s in ("XX", "ZZ", "YY")]
        with pytest.raises(MinusIdentityError):
            reduce_generators(ops)

    def test_size_equals_symplectic_rank(self, rng):
        base = StabilizerGroup.from_strings(FIVE_QUBIT).generators
        for _ in range(25):
            ops = [
                base[i] * base[j]
                for i, j in (
                    (rng.randrange(4), rng.randrange(4)) for _ in range(5)
                )
            ]
            group = reduce_generators(ops, n=5)
            rows = [op.symplectic_row() for op in ops]
            assert len(group) == gf2_rank(rows)


class TestStabilizerGroup:
    def test_rejects_anticommuting(self):
        with pytest.raises(AnticommutingGeneratorsError):
            StabilizerGroup.from_strings(["XI", "ZI"])

    def test_rejects_dependent(self):
        with pytest.raises(ValueError):
            StabilizerGroup.from_strings(["XX", "ZZ", "-YY"])

    def test_rejects_odd_phase(self):
        with pytest.raises(ValueError):
            StabilizerGroup(1, (PauliOperator(1, 1, 0, 1),))

    def test_projector_forms_agree(self):
        # sum over group elements / |group| == product of (I + g)/2
        for strings in (FIVE_QUBIT, ["XX", "ZZ"], ["XZ", "ZX"]):
            group = StabilizerGroup.from_strings(strings)
            dim = 1 << group.n
            total = np.zeros((dim, dim), dtype=complex)
            count = 0
            for e in group.elements():
                total += oracle.pauli_matrix(e)
                count += 1
            lhs = total / count
            rhs = np.eye(dim, dtype=complex)
            for g in group.generators:
                rhs = rhs @ (np.eye(dim) + oracle.pauli_matrix(g)) / 2
            assert np.allclose(lhs, rhs)

    def test_group_elements_commute_as_matrices(self):
        group = StabilizerGroup.from_strings(["XZ", "ZX"])
        mats = [oracle.pauli_matrix(e) for e in group.elements()]
        for a in mats:
            for b in mats:
                assert np.allclose(a @ b, b @ a)

    def test_entanglement_rank_of_bell(self):
        group = StabilizerGroup.from_strings(["XX", "ZZ"])
        assert group.entanglement_rank([0]) == 1

    def test_embed_and_restrict(self):
        p = parse_pauli("-XZ")
        e = p.embed(5, 2)
        assert e.to_string() == "-IIXZI"
        assert e.restricted_to([2, 3]) == p
