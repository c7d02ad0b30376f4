"""Rook placements strictly below the diagonal and their rank-matrix order.

Cells are 1-based (row, col) pairs with col < row <= n.  A placement keeps its
rooks sorted by ascending column, which is the canonical representation used
everywhere else in the package.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

from . import permutations as perms
from .errors import AttackingRooks, BoardTooSmall, OutOfBoard, SizeMismatch


class Cell(NamedTuple):
    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


class RootOrder(Enum):
    """Verdict of the positive-root order (a,b) <= (c,d) iff a <= c and b >= d."""

    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def cell_leq(a: Cell, b: Cell) -> bool:
    """South-West dominance: a <= b iff a.row <= b.row and a.col >= b.col."""
    return a.row <= b.row and a.col >= b.col


def cell_lt(a: Cell, b: Cell) -> bool:
    return a != b and cell_leq(a, b)


def compare_cells(a: Cell, b: Cell) -> RootOrder:
    if a == b:
        return RootOrder.EQUAL
    if cell_leq(a, b):
        return RootOrder.LESS
    if cell_leq(b, a):
        return RootOrder.GREATER
    return RootOrder.INCOMPARABLE


@dataclass(frozen=True)
class RookPlacement:
    """Non-attacking rooks strictly below the diagonal of an n x n board."""

    n: int
    rooks: tuple[Cell, ...]

    @property
    def rows(self) -> frozenset[int]:
        return frozenset(c.row for c in self.rooks)

    @property
    def cols(self) -> frozenset[int]:
        return frozenset(c.col for c in self.rooks)

    @property
    def cells(self) -> frozenset[Cell]:
        return frozenset(self.rooks)

    def __str__(self) -> str:
        return "".join(str(c) for c in self.rooks) or "(empty)"


def placement(n: int, cells: Iterable[Sequence[int]]) -> RookPlacement:
    """Validate cells and build the canonical (column-sorted) placement.

    Raises OutOfBoard for a cell outside the strict lower triangle and
    AttackingRooks (with the offending pair as witness) for a repeated row
    or column.
    """
    if n < 1:
        raise ValueError(f"board size must be at least 1, got {n}")
    seen_rows: dict[int, Cell] = {}
    seen_cols: dict[int, Cell] = {}
    rooks: list[Cell] = []
    for raw in cells:
        i, j = raw
        cell = Cell(int(i), int(j))
        if not 1 <= cell.col < cell.row <= n:
            raise OutOfBoard(cell, n)
        if cell.row in seen_rows:
            raise AttackingRooks(seen_rows[cell.row], cell, "row")
        if cell.col in seen_cols:
            raise AttackingRooks(seen_cols[cell.col], cell, "column")
        seen_rows[cell.row] = cell
        seen_cols[cell.col] = cell
        rooks.append(cell)
    rooks.sort(key=lambda c: c.col)
    return RookPlacement(n, tuple(rooks))


def empty_placement(n: int) -> RookPlacement:
    return placement(n, [])


# ---------------------------------------------------------------------------
# Rank matrices and the partial order


@dataclass(frozen=True)
class RankMatrix:
    """Entry (i,j), i > j, counts rooks weakly South-West of the cell."""

    n: int
    entries: tuple[tuple[int, ...], ...]

    def entry(self, i: int, j: int) -> int:
        return self.entries[i - 1][j - 1]

    def dominated_by(self, other: "RankMatrix") -> bool:
        if self.n != other.n:
            raise SizeMismatch(f"board sizes differ: {self.n} vs {other.n}")
        return all(
            a <= b for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb)
        )

    def flatten_lower(self) -> tuple[int, ...]:
        """Strict lower-triangle entries in row-major order."""
        return tuple(self.entries[i][j] for i in range(self.n) for j in range(i))


def rank_matrix(D: RookPlacement) -> RankMatrix:
    n = D.n
    col_of_row = {c.row: c.col for c in D.rooks}
    entries = [[0] * n for _ in range(n)]
    acc = [0] * n  # acc[j-1] = #{rooks with row >= current i and col <= j}
    for i in range(n, 0, -1):
        j_here = col_of_row.get(i)
        if j_here is not None:
            for j in range(j_here - 1, n):
                acc[j] += 1
        row = entries[i - 1]
        for j in range(i - 1):  # only cells strictly below the diagonal
            row[j] = acc[j]
    return RankMatrix(n, tuple(tuple(r) for r in entries))


def leq(D: RookPlacement, other: RookPlacement) -> bool:
    """Partial order: D <= other iff the rank matrices compare entrywise."""
    if D.n != other.n:
        raise SizeMismatch(f"board sizes differ: {D.n} vs {other.n}")
    return rank_matrix(D).dominated_by(rank_matrix(other))


def placement_from_rank_matrix(R: RankMatrix) -> RookPlacement:
    """Reconstruct the placement by quadrant inclusion-exclusion.

    Cell (i,j) carries a rook iff
    R(i,j) - R(i+1,j) - R(i,j-1) + R(i+1,j-1) == 1 (out-of-range terms 0).
    """
    n = R.n

    def at(i: int, j: int) -> int:
        if i > n or j < 1:
            return 0
        return R.entry(i, j)

    cells = [
        (i, j)
        for i in range(2, n + 1)
        for j in range(1, i)
        if at(i, j) - at(i + 1, j) - at(i, j - 1) + at(i + 1, j - 1) == 1
    ]
    return placement(n, cells)


# ---------------------------------------------------------------------------
# Chains, permutations, involutions


@dataclass(frozen=True)
class ChainDecomposition:
    """Partition of {1..n} into the chains linked by rooks and fixed points."""

    chains: tuple[tuple[int, ...], ...]
    fixed_points: frozenset[int]


def chains(D: RookPlacement) -> ChainDecomposition:
    """Maximal sequences a_1 < ... < a_b with (a_{l+1}, a_l) a rook."""
    succ = {c.col: c.row for c in D.rooks}
    rows = D.rows
    out: list[tuple[int, ...]] = []
    for start in sorted(set(succ) - rows):
        chain = [start]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        out.append(tuple(chain))
    members = {x for chain in out for x in chain}
    fixed = frozenset(range(1, D.n + 1)) - members
    return ChainDecomposition(tuple(out), fixed)


def permutation_of(D: RookPlacement) -> perms.Perm:
    """The permutation with w(j) = i at rooks and chain maxima sent to minima."""
    w = list(range(1, D.n + 1))
    for i, j in D.rooks:
        w[j - 1] = i
    for chain in chains(D).chains:
        w[chain[-1] - 1] = chain[0]
    return tuple(w)


def inversions(w: Sequence[int]) -> int:
    return perms.inversions(w)


def bruhat_leq(v: Sequence[int], w: Sequence[int]) -> bool:
    return perms.bruhat_leq(v, w)


def kerov_involution(D: RookPlacement) -> perms.Perm:
    """The involution in S_{2n-2} with a transposition (2i-2, 2j-1) per rook."""
    if D.n < 2:
        raise BoardTooSmall("the doubled board is empty for n = 1")
    m = 2 * D.n - 2
    w = list(range(1, m + 1))
    for i, j in D.rooks:
        a, b = 2 * i - 2, 2 * j - 1
        w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def involution_placement(sigma: Sequence[int]) -> RookPlacement:
    """The placement on the m-board with one rook per 2-cycle of sigma."""
    cycles = perms.two_cycles(tuple(sigma))  # raises NotInvolution
    return placement(len(sigma), cycles)


# ---------------------------------------------------------------------------
# Scalar assignments and the normalizing diagonal


ScalarAssignment = Mapping[Cell, Fraction]


def normalize_scalars(
    D: RookPlacement, scalars: Mapping[Sequence[int], object] | None
) -> dict[Cell, Fraction]:
    """Coerce to {Cell: Fraction}, defaulting to all ones; values must be nonzero."""
    if scalars is None:
        return {c: Fraction(1) for c in D.rooks}
    out: dict[Cell, Fraction] = {}
    for key, value in scalars.items():
        cell = Cell(*key)
        out[cell] = Fraction(value)
    if set(out) != set(D.rooks):
        raise ValueError("scalar assignment domain must equal the rook set")
    bad = [c for c, v in out.items() if v == 0]
    if bad:
        raise ValueError(f"scalar assignment must be nonzero, got 0 at {bad[0]}")
    return out


def diagonal_normalizer(
    D: RookPlacement, scalars: Mapping[Sequence[int], object]
) -> tuple[Fraction, ...]:
    """Diagonal (t_1, ..., t_n) whose coadjoint action rescales every rook to 1.

    Along each chain a_1 < ... < a_b the entry at a_l is the inverse product
    of the scalars on the chain's first l-1 links; everything else is 1.
    """
    xi = normalize_scalars(D, scalars)
    t = [Fraction(1)] * D.n
    for chain in chains(D).chains:
        acc = Fraction(1)
        for prev, cur in zip(chain, chain[1:]):
            acc = acc / xi[Cell(cur, prev)]
            t[cur - 1] = acc
    return tuple(t)


# ---------------------------------------------------------------------------
# JSON interchange


def to_json(D: RookPlacement) -> dict:
    return {"n": D.n, "rooks": [[c.row, c.col] for c in D.rooks]}


def from_json(data: Mapping) -> RookPlacement:
    try:
        n = data["n"]
        rooks = data["rooks"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"placement JSON needs 'n' and 'rooks' keys: {exc}") from exc
    return placement(n, rooks)
