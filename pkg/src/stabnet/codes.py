"""Stabilizer codes: the five-qubit fixture, composition by Bell
contraction, brute-force distance, and the singleton / distributed-storage
bounds.

Distance is found by plain enumeration ordered by weight with early
exit.  A candidate is a logical operator when it commutes with every
generator but its bit pattern is not in the group (membership is decided
on patterns, so a sign-flipped stabilizer counts as a member: it acts on
the code space as a global phase).  Enumeration refuses to start if the
candidate count would exceed the budget.
"""

from __future__ import annotations

import json
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations, product as iproduct
from math import comb

from .contraction import (
    BellConvention,
    ContractionInstance,
    Status,
    contract,
)
from .pauli import PauliOperator, StabilizerGroup

DEFAULT_ENUMERATION_BUDGET = 10**8

_LETTER_BITS = {"X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


class CompositionError(RuntimeError):
    """The Bell contraction annihilated the composed code space."""


class EnumerationBudgetError(RuntimeError):
    """The distance search would enumerate more candidates than allowed."""


@dataclass(frozen=True)
class StabilizerCode:
    """An [[n, k, d]] code: n - k independent generators on n qubits."""

    group: StabilizerGroup
    distance: int | None = None

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def k(self) -> int:
        return self.group.n - len(self.group.generators)

    def with_distance(self, d: int | None) -> StabilizerCode:
        return StabilizerCode(self.group, d)

    def to_json(self) -> str:
        payload = {"n": self.n, "k": self.k, "generators": self.group.to_strings()}
        if self.distance is not None:
            payload["distance"] = self.distance
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> StabilizerCode:
        data = json.loads(text)
        group = StabilizerGroup.from_strings(data["generators"], n=data.get("n"))
        if "k" in data and data["k"] != group.n - len(group.generators):
            raise ValueError(
                f"stated k={data['k']} but {len(group.generators)} generators "
                f"on {group.n} qubits give k={group.n - len(group.generators)}"
            )
        return cls(group, data.get("distance"))


def five_qubit_code() -> StabilizerCode:
    """The [[5, 1, 3]] code."""
    group = StabilizerGroup.from_strings(["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])
    return StabilizerCode(group, distance=3)


def compose(
    codes: Sequence[StabilizerCode],
    pairings: Sequence[tuple[int, int]],
    convention: BellConvention | str = BellConvention.PLUS_PAIR,
) -> StabilizerCode:
    """Contract physical qubits of several codes pairwise through Bell pairs.

    Qubits are indexed globally: code i occupies the block starting at
    sum of the preceding code sizes.  The composed code lives on the
    unpaired qubits; its logical count is boundary size minus residual
    generator count.
    """
    inst = ContractionInstance(
        node_states=tuple(c.group for c in codes),
        pairings=tuple(pairings),
        convention=BellConvention.coerce(convention),
    )
    result = contract(inst)
    if result.status is Status.ANNIHILATED:
        raise CompositionError("contraction produced -I: empty composed code space")
    return StabilizerCode(result.residual)


def distance(
    code: StabilizerCode,
    weight_cap: int,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> int | None:
    """Minimum weight of an undetectable logical operator, or None if it
    exceeds ``weight_cap``."""
    if weight_cap < 1:
        raise ValueError("weight_cap must be >= 1")
    n = code.n
    total = sum(comb(n, w) * 3**w for w in range(1, min(weight_cap, n) + 1))
    if total > budget:
        raise EnumerationBudgetError(
            f"{total} candidates up to weight {weight_cap} exceed the budget {budget}"
        )
    gens = code.group.generators
    elim = code.group.eliminator()
    for w in range(1, min(weight_cap, n) + 1):
        for positions in combinations(range(n), w):
            for letters in iproduct("XYZ", repeat=w):
                x = z = 0
                for q, letter in zip(positions, letters):
                    xb, zb = _LETTER_BITS[letter]
                    x |= xb << q
                    z |= zb << q
                if any(
                    ((x & g.z).bit_count() + (z & g.x).bit_count()) % 2
                    for g in gens
                ):
                    continue
                if elim.solve(x | (z << n)) is None:
                    return w
    return None


def singleton_max_distance(n: int, k: int) -> int:
    """Largest d allowed by k <= n - 2(d - 1)."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    return (n - k) // 2 + 1


def storage_bound(boundary: int, m: int, l: int, k: int, d: int) -> int:
    """Distance ceiling for a code composed from m copies of an [[l, k, d]]
    code whose boundary holds the mk stored qubits."""
    for name, value in (("boundary", boundary), ("m", m), ("l", l), ("k", k), ("d", d)):
        if value < 1:
            raise ValueError(f"{name} must be positive, got {value}")
    if k * m > boundary:
        raise ValueError(f"boundary {boundary} cannot store {k * m} logical qubits")
    return (boundary + m * l - 2 * m * (d - 1) - 2 * k * m) // 2 + 1


def correctable_single_errors(code: StabilizerCode) -> bool:
    """Every weight-1 Pauli anticommutes with at least one generator."""
    for q in range(code.n):
        for letter in "XYZ":
            xb, zb = _LETTER_BITS[letter]
            err = PauliOperator(code.n, xb << q, zb << q, 0)
            if all(err.commutes_with(g) for g in code.group.generators):
                return False
    return True
