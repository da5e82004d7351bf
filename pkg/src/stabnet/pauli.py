"""Signed Pauli operators and stabilizer groups in symplectic GF(2) form.

Representation
--------------
An n-qubit Pauli operator is two bit-packed integers ``x`` and ``z``
(bit q = qubit q, qubit 0 is the leftmost letter of a string such as
"XZZXI") plus a phase exponent in {0,1,2,3} encoding a global factor
``i**phase``.  The letters are read off per qubit as

    (x_q, z_q): (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> Y,

with Y the standard Pauli matrix.  The single sign convention used
project-wide is ``Y = i * X * Z`` (equivalently ``X * Z = -i * Y``);
every phase produced by :func:`multiply` reduces to this rule.  Valid
stabilizer elements always carry phase 0 (for +1) or 2 (for -1); odd
phases only occur in intermediate products.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from . import gf2

_LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_PHASE_PREFIX = {0: "+", 1: "+i", 2: "-", 3: "-i"}


class PauliParseError(ValueError):
    """Malformed Pauli string; ``position`` indexes the offending character."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}")
        self.position = position


class AnticommutingGeneratorsError(ValueError):
    """A pair of would-be generators anticommutes."""


class MinusIdentityError(ValueError):
    """The generated group contains -I (downstream: an annihilated projection)."""


@dataclass(frozen=True)
class PauliOperator:
    """A signed Pauli string on ``n`` qubits."""

    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"qubit count must be >= 1, got {self.n}")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("x/z bits extend beyond the qubit count")
        if not 0 <= self.phase <= 3:
            raise ValueError(f"phase must be in 0..3, got {self.phase}")

    @property
    def x_bits(self) -> tuple[int, ...]:
        return gf2.unpack_row(self.x, self.n)

    @property
    def z_bits(self) -> tuple[int, ...]:
        return gf2.unpack_row(self.z, self.n)

    @property
    def pattern(self) -> tuple[int, int]:
        """The unsigned (x, z) bit pattern."""
        return (self.x, self.z)

    def is_identity_pattern(self) -> bool:
        return self.x == 0 and self.z == 0

    def weight(self) -> int:
        """Number of qubits with a non-identity letter."""
        return (self.x | self.z).bit_count()

    def letter(self, qubit: int) -> str:
        return _LETTERS[(self.x >> qubit) & 1, (self.z >> qubit) & 1]

    def commutes_with(self, other: PauliOperator) -> bool:
        if self.n != other.n:
            raise ValueError(f"qubit counts differ: {self.n} vs {other.n}")
        sym = (self.x & other.z).bit_count() + (self.z & other.x).bit_count()
        return sym % 2 == 0

    def __mul__(self, other: PauliOperator) -> PauliOperator:
        if self.n != other.n:
            raise ValueError(f"qubit counts differ: {self.n} vs {other.n}")
        x = self.x ^ other.x
        z = self.z ^ other.z
        # Reduce per-qubit letter products via Y = i*X*Z: rewrite each
        # factor in X-before-Z order, commute the inner Z past X, restore.
        phase = (
            self.phase
            + other.phase
            + (self.x & self.z).bit_count()
            + (other.x & other.z).bit_count()
            + 2 * (self.z & other.x).bit_count()
            - (x & z).bit_count()
        ) % 4
        return PauliOperator(self.n, x, z, phase)

    def negated(self) -> PauliOperator:
        return PauliOperator(self.n, self.x, self.z, (self.phase + 2) % 4)

    def embed(self, n_total: int, offset: int) -> PauliOperator:
        """Place this operator at ``offset`` inside an identity on ``n_total`` qubits."""
        if offset < 0 or offset + self.n > n_total:
            raise ValueError(f"offset {offset} does not fit {self.n} qubits in {n_total}")
        return PauliOperator(n_total, self.x << offset, self.z << offset, self.phase)

    def restricted_to(self, qubits: Sequence[int]) -> PauliOperator:
        """Keep only ``qubits`` (in the given order); the phase is carried over."""
        x = z = 0
        for k, q in enumerate(qubits):
            x |= ((self.x >> q) & 1) << k
            z |= ((self.z >> q) & 1) << k
        return PauliOperator(len(qubits), x, z, self.phase)

    def symplectic_row(self) -> int:
        """Packed [x|z] row: columns 0..n-1 are x bits, n..2n-1 are z bits."""
        return self.x | (self.z << self.n)

    def to_string(self) -> str:
        letters = "".join(self.letter(q) for q in range(self.n))
        return _PHASE_PREFIX[self.phase] + letters

    def __str__(self) -> str:
        return self.to_string()


def parse_pauli(text: str, n: int | None = None) -> PauliOperator:
    """Parse a sign-prefixed letter string such as "-YY" or "XZZXI"."""
    phase = 0
    start = 0
    if text.startswith(("+", "-")):
        phase = 0 if text[0] == "+" else 2
        start = 1
    x = z = 0
    count = 0
    for i in range(start, len(text)):
        bits = _BITS.get(text[i])
        if bits is None:
            raise PauliParseError(f"invalid character {text[i]!r}", i)
        x |= bits[0] << count
        z |= bits[1] << count
        count += 1
    if count == 0:
        raise PauliParseError("empty Pauli string", start)
    if n is not None and count != n:
        raise PauliParseError(f"expected {n} letters, found {count}", len(text) - 1)
    return PauliOperator(count, x, z, phase)


def multiply(p: PauliOperator, q: PauliOperator) -> PauliOperator:
    return p * q


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    return p.commutes_with(q)


def identity(n: int) -> PauliOperator:
    return PauliOperator(n, 0, 0, 0)


def product(ops: Iterable[PauliOperator], n: int) -> PauliOperator:
    out = identity(n)
    for op in ops:
        out = out * op
    return out


def gf2_rank(rows: Iterable[Iterable[int] | int]) -> int:
    """GF(2) rank of a list of bit-vectors (0/1 sequences or packed ints)."""
    packed = (row if isinstance(row, int) else gf2.pack_row(row) for row in rows)
    return gf2.rank_packed(packed)


@dataclass(frozen=True)
class StabilizerGroup:
    """An independent, mutually commuting generating set of signed Paulis.

    May be under full rank (a code space) or empty; never generates -I.
    """

    n: int
    generators: tuple[PauliOperator, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.n != self.n:
                raise ValueError(f"generator {g} is not on {self.n} qubits")
            if g.phase not in (0, 2):
                raise ValueError(f"generator {g} is not Hermitian with sign +-1")
        for a, b in combinations(self.generators, 2):
            if not a.commutes_with(b):
                raise AnticommutingGeneratorsError(f"{a} and {b} anticommute")
        rows = [g.symplectic_row() for g in self.generators]
        if gf2.rank_packed(rows) != len(rows):
            raise ValueError("generators are GF(2)-dependent")

    @classmethod
    def from_strings(cls, texts: Iterable[str], n: int | None = None) -> StabilizerGroup:
        ops = [parse_pauli(t, n) for t in texts]
        if not ops:
            if n is None:
                raise ValueError("empty generator list needs an explicit qubit count")
            return cls(n, ())
        return cls(ops[0].n, tuple(ops))

    def __len__(self) -> int:
        return len(self.generators)

    def to_strings(self) -> list[str]:
        return [g.to_string() for g in self.generators]

    def symplectic_rows(self) -> list[int]:
        return [g.symplectic_row() for g in self.generators]

    def symplectic_matrix(self) -> list[tuple[int, ...]]:
        """Rows of the [X|Z] check matrix as 0/1 tuples of width 2n."""
        return [gf2.unpack_row(row, 2 * self.n) for row in self.symplectic_rows()]

    def eliminator(self) -> gf2.Eliminator:
        """Elimination state over the generators' symplectic rows."""
        elim = gf2.Eliminator()
        for row in self.symplectic_rows():
            elim.add(row)
        return elim

    def decompose(self, p: PauliOperator) -> tuple[int, ...] | None:
        """Generator indices whose product equals ``p`` exactly (sign included)."""
        member = self._solve_pattern(p)
        if member is None:
            return None
        mask, candidate = member
        if candidate.phase != p.phase:
            return None
        return tuple(i for i in range(len(self.generators)) if (mask >> i) & 1)

    def find_pattern(self, p: PauliOperator) -> PauliOperator | None:
        """The group member with the same x/z pattern as ``p``, if any."""
        member = self._solve_pattern(p)
        return None if member is None else member[1]

    def _solve_pattern(self, p: PauliOperator) -> tuple[int, PauliOperator] | None:
        if p.n != self.n:
            raise ValueError(f"qubit counts differ: {p.n} vs {self.n}")
        mask = self.eliminator().solve(p.symplectic_row())
        if mask is None:
            return None
        chosen = (g for i, g in enumerate(self.generators) if (mask >> i) & 1)
        return mask, product(chosen, self.n)

    def elements(self) -> Iterable[PauliOperator]:
        """All 2**len(generators) group elements (small groups only)."""
        if len(self.generators) > 16:
            raise ValueError("group too large to enumerate")
        for mask in range(1 << len(self.generators)):
            chosen = (g for i, g in enumerate(self.generators) if (mask >> i) & 1)
            yield product(chosen, self.n)

    def entanglement_rank(self, subset: Sequence[int]) -> int:
        """log2 rank of the reduced density operator on ``subset``.

        Defined for full-rank groups (pure states): |A| minus the number
        of independent group elements supported entirely inside A.
        """
        inside = set(subset)
        if not inside <= set(range(self.n)):
            raise ValueError("subset out of range")
        outside_x = outside_z = 0
        for q in range(self.n):
            if q not in inside:
                outside_x |= 1 << q
                outside_z |= 1 << q
        restricted = [
            (g.x & outside_x) | ((g.z & outside_z) << self.n) for g in self.generators
        ]
        supported_inside = len(gf2.left_kernel(restricted))
        return len(inside) - supported_inside


def contains(group: StabilizerGroup, p: PauliOperator) -> bool:
    """True iff ``p`` (sign included) is a product of the generators."""
    return group.decompose(p) is not None


def reduce_generators(
    ops: Iterable[PauliOperator], n: int | None = None
) -> StabilizerGroup:
    """Independent generating subset spanning the same group.

    Keeps the first independent occurrence of each direction.  Raises
    :class:`AnticommutingGeneratorsError` on a non-commuting input pair
    and :class:`MinusIdentityError` if the inputs generate -I.
    """
    ops = list(ops)
    if not ops:
        if n is None:
            raise ValueError("empty generator list needs an explicit qubit count")
        return StabilizerGroup(n, ())
    n = ops[0].n
    for op in ops:
        if op.phase not in (0, 2):
            raise ValueError(f"{op} is not Hermitian with sign +-1")
    for a, b in combinations(ops, 2):
        if not a.commutes_with(b):
            raise AnticommutingGeneratorsError(f"{a} and {b} anticommute")
    elim = gf2.Eliminator()
    kept: list[PauliOperator] = []
    for op in ops:
        if op.n != n:
            raise ValueError(f"qubit counts differ: {op.n} vs {n}")
        relation = elim.add(op.symplectic_row())
        if relation is None:
            kept.append(op)
            continue
        # op's pattern is spanned by earlier keepers; check the exact sign.
        top = relation.bit_length() - 1
        witness = product(
            (ops[i] for i in range(top) if (relation >> i) & 1), n
        )
        if witness.phase != op.phase:
            raise MinusIdentityError(
                f"{op} and the spanned product {witness} differ by -1"
            )
    return StabilizerGroup(n, tuple(kept))
