"""Exception types shared across the package."""


class RookError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfBoard(RookError):
    """A cell is not strictly below the diagonal of the board."""

    def __init__(self, cell, n):
        super().__init__(f"cell {cell} is not strictly lower-triangular on the {n}-board")
        self.cell = cell
        self.n = n


class AttackingRooks(RookError):
    """Two rooks share a row or a column; ``witness`` holds the pair."""

    def __init__(self, first, second, axis):
        super().__init__(f"rooks {first} and {second} share a {axis}")
        self.witness = (first, second)
        self.axis = axis


class SizeMismatch(RookError):
    """Operands live on boards (or in symmetric groups) of different sizes."""


class BoardTooSmall(RookError):
    """The operation needs a board of size at least 2."""


class NotInvolution(RookError):
    """The permutation is not an involution."""


class BoundViolation(RookError):
    """A computed dimension contradicts the proven inequality chain."""


class NotInvertible(RookError):
    """The matrix has a zero diagonal entry."""


class NotUpperTriangular(RookError):
    """The matrix has a nonzero entry below the diagonal."""


class WrongBoardSize(RookError):
    """The operation is only defined for a specific board size."""


class UndefinedMove(RookError):
    """The requested raw move is not structurally defined for this placement."""


class NotIndexed(RookError):
    """The placement does not belong to the given poset index."""


class LimitExceeded(RookError):
    """The board size is outside the supported range for this operation."""
