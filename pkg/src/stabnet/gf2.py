"""GF(2) linear algebra on bit-packed rows.

A row is a Python integer whose bit ``i`` is column ``i``.  Arbitrary
precision ints give word-packed storage and word-wise XOR row operations
for free, which is what keeps distance searches and bipartition sweeps
cheap.  Elimination always pivots on the lowest-index set bit of a row,
so reduction is deterministic for a given input order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence


def pack_row(bits: Iterable[int]) -> int:
    """Pack a 0/1 sequence into an integer (bit i = element i)."""
    row = 0
    for i, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError(f"bit at index {i} is {b!r}, expected 0 or 1")
        row |= b << i
    return row


def unpack_row(row: int, width: int) -> tuple[int, ...]:
    return tuple((row >> i) & 1 for i in range(width))


class Eliminator:
    """Incremental Gaussian elimination with witness tracking.

    Every pivot remembers which of the originally added rows XOR
    together to produce it, so dependencies come back as explicit
    combination masks (bit j of a mask = added row j).
    """

    __slots__ = ("_pivots", "_n_rows")

    def __init__(self) -> None:
        # lowest set bit (as a power of two) -> (reduced row, witness mask)
        self._pivots: dict[int, tuple[int, int]] = {}
        self._n_rows = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def n_rows(self) -> int:
        return self._n_rows

    def _strip(self, row: int, mask: int) -> tuple[int, int]:
        while row:
            low = row & -row
            hit = self._pivots.get(low)
            if hit is None:
                break
            row ^= hit[0]
            mask ^= hit[1]
        return row, mask

    def add(self, row: int) -> int | None:
        """Add a row; report a dependency if there is one.

        Returns None when the row extends the span.  Otherwise returns
        the relation mask: the set of added rows (own bit included)
        whose XOR is zero.
        """
        mask = 1 << self._n_rows
        self._n_rows += 1
        row, mask = self._strip(row, mask)
        if row == 0:
            return mask
        self._pivots[row & -row] = (row, mask)
        return None

    def solve(self, target: int) -> int | None:
        """Mask of added rows whose XOR equals ``target``, or None."""
        row, mask = self._strip(target, 0)
        return mask if row == 0 else None


def rank_packed(rows: Iterable[int]) -> int:
    elim = Eliminator()
    for row in rows:
        elim.add(row)
    return elim.rank


def left_kernel(rows: Iterable[int]) -> list[int]:
    """Basis of {masks m : XOR of rows selected by m == 0}."""
    elim = Eliminator()
    kernel = []
    for row in rows:
        relation = elim.add(row)
        if relation is not None:
            kernel.append(relation)
    return kernel


def solve_combination(rows: Sequence[int], target: int) -> int | None:
    """Mask over ``rows`` whose XOR equals ``target``, or None."""
    elim = Eliminator()
    for row in rows:
        elim.add(row)
    return elim.solve(target)
