"""Bell-pair contraction of stabilizer node states.

Gluing a set of node states along Bell pairs leaves a residual
stabilizer group on the unpaired (boundary) qubits.  The residual is
extracted without simulating measurements: stack every node generator
and every Bell-pair generator as symplectic rows, restrict the rows to
the contracted qubit columns, and compute the GF(2) kernel.  Each kernel
basis vector is materialized as an explicit operator product so that
signs are exact; the products are identity on the contracted qubits and
their boundary restrictions generate the residual group.

If some product materializes to -I the Bell projection annihilates the
state (status ANNIHILATED).  If the residual has fewer independent
generators than boundary qubits the result is a proper code space
(status MIXED); with full-rank node states this only happens when the
instance ignores the usual connectivity assumption.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum

from . import gf2
from .pauli import (
    MinusIdentityError,
    PauliOperator,
    StabilizerGroup,
    product,
    reduce_generators,
)


class BellConvention(Enum):
    """Which two-qubit state the contracted pairs are projected onto."""

    PLUS_PAIR = "plus-pair"  # |00>+|11>: stabilizers +XX, +ZZ (group closes with -YY)
    GRAPH_EDGE = "graph-edge"  # CZ|++>:   stabilizers +XZ, +ZX (group closes with +YY)

    @classmethod
    def coerce(cls, value: BellConvention | str) -> BellConvention:
        if isinstance(value, cls):
            return value
        return cls(value)


_BELL_PATTERNS = {
    # (x1, z1, x2, z2) per generator on the two paired qubits
    BellConvention.PLUS_PAIR: ((1, 0, 1, 0), (0, 1, 0, 1)),
    BellConvention.GRAPH_EDGE: ((1, 0, 0, 1), (0, 1, 1, 0)),
}


def bell_generators(
    i: int, j: int, n_total: int, convention: BellConvention
) -> list[PauliOperator]:
    """The two Bell-pair generators on qubits (i, j), identity elsewhere."""
    ops = []
    for x1, z1, x2, z2 in _BELL_PATTERNS[convention]:
        x = (x1 << i) | (x2 << j)
        z = (z1 << i) | (z2 << j)
        ops.append(PauliOperator(n_total, x, z, 0))
    return ops


def bell_group(convention: BellConvention) -> StabilizerGroup:
    """The Bell pair itself as a two-qubit stabilizer group."""
    return StabilizerGroup(2, tuple(bell_generators(0, 1, 2, convention)))


class Status(Enum):
    PURE = "PURE"
    MIXED = "MIXED"
    ANNIHILATED = "ANNIHILATED"


@dataclass(frozen=True)
class ContractionInstance:
    """Node stabilizer groups on consecutive global qubit blocks plus the
    disjoint qubit pairs to be projected onto the Bell state."""

    node_states: tuple[StabilizerGroup, ...]
    pairings: tuple[tuple[int, int], ...]
    convention: BellConvention = BellConvention.PLUS_PAIR
    offsets: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "node_states", tuple(self.node_states))
        object.__setattr__(
            self, "pairings", tuple((int(i), int(j)) for i, j in self.pairings)
        )
        object.__setattr__(self, "convention", BellConvention.coerce(self.convention))
        if not self.node_states:
            raise ValueError("need at least one node state")
        if not self.offsets:
            cumulative = []
            total = 0
            for g in self.node_states:
                cumulative.append(total)
                total += g.n
            object.__setattr__(self, "offsets", tuple(cumulative))
        else:
            object.__setattr__(self, "offsets", tuple(self.offsets))
        if len(self.offsets) != len(self.node_states):
            raise ValueError("one offset per node state required")
        covered: set[int] = set()
        for g, off in zip(self.node_states, self.offsets):
            block = set(range(off, off + g.n))
            if covered & block:
                raise ValueError("node qubit blocks overlap")
            covered |= block
        if covered != set(range(self.total_qubits)):
            raise ValueError("node blocks must cover qubits 0..total-1 exactly")
        seen: set[int] = set()
        for i, j in self.pairings:
            if i == j:
                raise ValueError(f"pairing ({i}, {j}) repeats a qubit")
            for q in (i, j):
                if q not in covered:
                    raise ValueError(f"paired qubit {q} does not exist")
                if q in seen:
                    raise ValueError(f"qubit {q} appears in two pairings")
                seen.add(q)

    @property
    def total_qubits(self) -> int:
        return max(off + g.n for g, off in zip(self.node_states, self.offsets))

    @property
    def contracted(self) -> frozenset[int]:
        return frozenset(q for pair in self.pairings for q in pair)

    @property
    def boundary(self) -> tuple[int, ...]:
        paired = self.contracted
        return tuple(q for q in range(self.total_qubits) if q not in paired)

    def all_generators(self) -> list[PauliOperator]:
        """Node generators (embedded) followed by Bell-pair generators."""
        n = self.total_qubits
        ops = [
            g.embed(n, off)
            for group, off in zip(self.node_states, self.offsets)
            for g in group.generators
        ]
        for i, j in self.pairings:
            ops.extend(bell_generators(i, j, n, self.convention))
        return ops

    def to_json(self) -> str:
        return json.dumps(
            {
                "node_states": [g.to_strings() for g in self.node_states],
                "qubit_offsets": list(self.offsets),
                "pairings": [list(p) for p in self.pairings],
                "convention": self.convention.value,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, text: str) -> ContractionInstance:
        data = json.loads(text)
        nodes = tuple(
            StabilizerGroup.from_strings(strings) for strings in data["node_states"]
        )
        return cls(
            node_states=nodes,
            pairings=tuple(tuple(p) for p in data["pairings"]),
            convention=BellConvention(data.get("convention", "plus-pair")),
            offsets=tuple(data.get("qubit_offsets", ())),
        )


@dataclass(frozen=True)
class ContractionResult:
    """Residual group on the boundary qubits.

    ``boundary[k]`` is the global index of residual qubit ``k``.  The
    normalization bookkeeping is ``rho_boundary = 2**log_norm_exponent *
    P`` with P the projector onto the residual group's +1 eigenspace.
    """

    status: Status
    residual: StabilizerGroup
    boundary: tuple[int, ...]
    log_norm_exponent: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "status": self.status.value,
                "residual": self.residual.to_strings(),
                "boundary": list(self.boundary),
                "log_norm_exponent": self.log_norm_exponent,
            },
            sort_keys=True,
        )


def contract(inst: ContractionInstance) -> ContractionResult:
    """Residual stabilizer group left on the boundary after Bell projection."""
    n = inst.total_qubits
    boundary = inst.boundary
    ops = inst.all_generators()

    contracted_mask = 0
    for q in inst.contracted:
        contracted_mask |= (1 << q) | (1 << (q + n))
    kernel = gf2.left_kernel(op.symplectic_row() & contracted_mask for op in ops)

    candidates = []
    for mask in kernel:
        chosen = (ops[i] for i in range(mask.bit_length()) if (mask >> i) & 1)
        witness = product(chosen, n)
        if witness.x & ~_spread(boundary) or witness.z & ~_spread(boundary):
            raise AssertionError("kernel product is not identity on contracted qubits")
        candidates.append(witness.restricted_to(boundary) if boundary else witness)

    exponent = len(inst.contracted) - len(ops) + len(kernel)
    if not boundary:
        # fully contracted: the residual is a scalar; -I means it vanished
        for c in candidates:
            if c.phase == 2:
                return ContractionResult(
                    Status.ANNIHILATED, StabilizerGroup(0, ()), boundary, 0
                )
        return ContractionResult(Status.PURE, StabilizerGroup(0, ()), boundary, exponent)

    try:
        residual = reduce_generators(
            [c for c in candidates if not (c.is_identity_pattern() and c.phase == 0)],
            n=len(boundary),
        )
    except MinusIdentityError:
        return ContractionResult(
            Status.ANNIHILATED, StabilizerGroup(len(boundary), ()), boundary, 0
        )
    status = Status.PURE if len(residual) == len(boundary) else Status.MIXED
    return ContractionResult(status, residual, boundary, exponent)


def _spread(qubits: Sequence[int]) -> int:
    mask = 0
    for q in qubits:
        mask |= 1 << q
    return mask


def contract_single_element(
    s: PauliOperator,
    pairings: Sequence[tuple[int, int]],
    convention: BellConvention | str = BellConvention.PLUS_PAIR,
) -> PauliOperator | None:
    """Boundary restriction of one stabilizer element, if it survives.

    ``s`` survives when its letters on every contracted pair match a Bell
    group element (pattern-wise); the accumulated sign is exact.  Returns
    None as soon as one pair mismatches.
    """
    convention = BellConvention.coerce(convention)
    elements = {e.pattern: e for e in bell_group(convention).elements()}
    n = s.n
    acc = s
    paired: list[int] = []
    for i, j in pairings:
        pattern = (
            ((s.x >> i) & 1) | (((s.x >> j) & 1) << 1),
            ((s.z >> i) & 1) | (((s.z >> j) & 1) << 1),
        )
        match = elements.get(pattern)
        if match is None:
            return None
        acc = acc * _embed_pair(match, i, j, n)
        paired.extend((i, j))
    boundary = [q for q in range(n) if q not in paired]
    if acc.phase not in (0, 2):
        raise AssertionError("surviving element has a non-Hermitian phase")
    if not boundary:
        return acc
    return acc.restricted_to(boundary)


def _embed_pair(op2: PauliOperator, i: int, j: int, n: int) -> PauliOperator:
    """Embed a 2-qubit operator with its qubits 0, 1 mapped to i, j."""
    x = (((op2.x >> 0) & 1) << i) | (((op2.x >> 1) & 1) << j)
    z = (((op2.z >> 0) & 1) << i) | (((op2.z >> 1) & 1) << j)
    return PauliOperator(n, x, z, op2.phase)


@dataclass(frozen=True)
class PurityCertificate:
    pure: bool
    generator_count: int
    boundary_size: int
    annihilated: bool

    def __bool__(self) -> bool:
        return self.pure


def is_pure_stabilizer_state(result: ContractionResult) -> PurityCertificate:
    """PURE iff the residual has one independent generator per boundary qubit."""
    return PurityCertificate(
        pure=result.status is Status.PURE,
        generator_count=len(result.residual),
        boundary_size=len(result.boundary),
        annihilated=result.status is Status.ANNIHILATED,
    )


def parse_pairings(raw: Iterable[Sequence[int]]) -> tuple[tuple[int, int], ...]:
    return tuple((int(i), int(j)) for i, j in raw)


__all__ = [
    "BellConvention",
    "ContractionInstance",
    "ContractionResult",
    "PurityCertificate",
    "Status",
    "bell_generators",
    "bell_group",
    "contract",
    "contract_single_element",
    "is_pure_stabilizer_state",
    "parse_pairings",
]
