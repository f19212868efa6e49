"""Row insertion, jeu de taquin, and the evacuation involution.

Evacuation is implemented as rectify(complement(rotate180(T))): rotate the
tableau half a turn, replace each entry v by n-v+1 for the ambient alphabet
bound n, and slide the resulting skew tableau back to partition shape. It is
an involution at fixed n, reverses descent compositions, and intertwines the
raising and lowering operators with complemented labels.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import EmptyInput, EntryOutOfRange, InvalidPair
from .tableaux import (
    Tableau, Word,
    from_rows, is_partition, is_semistandard, is_standard, max_entry,
    reading_word, shape_of, tableau_size,
)


class RskPair(NamedTuple):
    P: Tableau
    Q: Tableau


def _insert_row(row: list[int], x: int) -> int | None:
    """Bump the leftmost entry strictly greater than x; None means appended."""
    for j, y in enumerate(row):
        if y > x:
            row[j] = x
            return y
    row.append(x)
    return None


def rsk(w: Word) -> RskPair:
    """Insertion and recording tableaux of w under Schensted row insertion."""
    if not w:
        raise EmptyInput("empty word")
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for step, x in enumerate(w, 1):
        r = 0
        carry: int | None = x
        while carry is not None:
            if r == len(p_rows):
                p_rows.append([])
                q_rows.append([])
            before = len(p_rows[r])
            carry = _insert_row(p_rows[r], carry)
            if carry is None:
                assert len(p_rows[r]) == before + 1
                q_rows[r].append(step)
            r += 1
    return RskPair(from_rows(p_rows), from_rows(q_rows))


def rsk_inverse(pair: RskPair) -> Word:
    """The unique word inserting to the pair, by reverse bumping."""
    P, Q = pair
    if shape_of(P) != shape_of(Q) or not is_standard(Q) or not is_semistandard(P):
        raise InvalidPair("need same-shape (semistandard, standard) tableaux")
    p_rows = [list(row) for row in P]
    cell_of = {Q[i][j]: (i, j) for i in range(len(Q)) for j in range(len(Q[i]))}
    letters = []
    for step in range(tableau_size(Q), 0, -1):
        r, c = cell_of[step]
        x = p_rows[r].pop(c)
        for above in range(r - 1, -1, -1):
            row = p_rows[above]
            j = max(k for k in range(len(row)) if row[k] < x)
            row[j], x = x, row[j]
        letters.append(x)
        if not p_rows[-1]:
            p_rows.pop()
    return tuple(reversed(letters))


# ---------------------------------------------------------------------------
# skew tableaux and jeu de taquin

@dataclass(frozen=True)
class SkewTableau:
    """Filling of outer/inner cells; rows[i] holds the filled entries of row i.

    Blank cells are never materialized: row i consists of inner[i] blanks
    followed by rows[i]. inner may carry trailing zeros.
    """
    inner: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def outer(self) -> tuple[int, ...]:
        return tuple(self.inner[i] + len(self.rows[i]) for i in range(len(self.rows)))

    def entry(self, i: int, j: int) -> int | None:
        """Entry at (i, j), or None for a blank or missing cell."""
        if not 0 <= i < len(self.rows):
            return None
        if j < self.inner[i] or j >= self.outer[i]:
            return None
        return self.rows[i][j - self.inner[i]]

    def is_valid(self) -> bool:
        outer = self.outer
        if len(self.inner) != len(self.rows):
            return False
        if not is_partition(tuple(p for p in outer if p)):
            return False
        inner_trim = tuple(p for p in self.inner if p)
        if inner_trim and not is_partition(inner_trim):
            return False
        if any(self.inner[i] > outer[i] for i in range(len(self.rows))):
            return False
        if list(outer) != sorted(outer, reverse=True):
            return False
        if list(self.inner) != sorted(self.inner, reverse=True):
            return False
        for row in self.rows:
            if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
                return False
        for i in range(len(self.rows) - 1):
            for j in range(self.inner[i + 1], outer[i + 1]):
                below = self.entry(i + 1, j)
                here = self.entry(i, j)
                if here is not None and below is not None and here >= below:
                    return False
        return True


def skew_from_rows(inner, rows) -> SkewTableau:
    return SkewTableau(tuple(int(p) for p in inner),
                       tuple(tuple(int(v) for v in row) for row in rows))


def straight_as_skew(T: Tableau) -> SkewTableau:
    return SkewTableau((0,) * len(T), T)


def skew_reading_word(S: SkewTableau) -> Word:
    return tuple(v for row in reversed(S.rows) for v in row)


def _inner_corners(inner: list[int]) -> list[tuple[int, int]]:
    """Cells removable from the inner shape, as (row, col)."""
    corners = []
    for i, p in enumerate(inner):
        if p > 0 and (i + 1 >= len(inner) or inner[i + 1] < p):
            corners.append((i, p - 1))
    return corners


def _slide(grid: list[list[int | None]], r: int, c: int) -> None:
    """One inward slide from the hole at (r, c); mutates grid.

    At each step the hole swaps with the smaller of its right and lower
    neighbours (the lower one on ties, keeping columns strict); it exits the
    filling when neither exists, and that cell is removed from the shape.
    """
    while True:
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        below = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if right is None and below is None:
            break
        if right is None or (below is not None and below <= right):
            grid[r][c] = below
            grid[r + 1][c] = None
            r += 1
        else:
            grid[r][c] = right
            grid[r][c + 1] = None
            c += 1
    grid[r].pop()
    if not grid[r]:
        grid.pop(r)


def jdt_rectify(S: SkewTableau) -> Tableau:
    """Rectification of a skew tableau by inward slides.

    The result does not depend on the order in which inner corners are used;
    for determinism the south-east-most corner (max row, then max column) is
    always taken.
    """
    if not S.is_valid():
        raise InvalidPair(f"not a valid skew tableau: {S}")
    grid: list[list[int | None]] = [
        [None] * S.inner[i] + list(S.rows[i]) for i in range(len(S.rows))]
    inner = list(S.inner)
    while any(inner):
        r, c = max(_inner_corners(inner))
        inner[r] -= 1
        _slide(grid, r, c)
        inner = inner[:len(grid)]
    return from_rows(grid)


def jdt_rectify_with_order(S: SkewTableau, choose) -> Tableau:
    """Rectify using choose(corners) to pick each slide; for order-independence tests."""
    if not S.is_valid():
        raise InvalidPair(f"not a valid skew tableau: {S}")
    grid: list[list[int | None]] = [
        [None] * S.inner[i] + list(S.rows[i]) for i in range(len(S.rows))]
    inner = list(S.inner)
    while any(inner):
        r, c = choose(_inner_corners(inner))
        inner[r] -= 1
        _slide(grid, r, c)
        inner = inner[:len(grid)]
    return from_rows(grid)


# ---------------------------------------------------------------------------
# rotation, complementation, evacuation

def rot_word(w: Word, n: int) -> Word:
    """Reverse the word and complement each letter v -> n-v+1 (an involution)."""
    if any(not 1 <= v <= n for v in w):
        raise EntryOutOfRange(f"letters must lie in 1..{n}")
    return tuple(n - v + 1 for v in reversed(w))


def rotate180_complement(T: Tableau, n: int) -> SkewTableau:
    """Rotate T half a turn inside its bounding rectangle and complement entries.

    The reading word of the result is rot_word of the reading word of T.
    """
    if not T:
        raise EmptyInput("empty tableau")
    if max_entry(T) > n:
        raise EntryOutOfRange(f"entries must lie in 1..{n}")
    width = len(T[0])
    inner = tuple(width - len(row) for row in reversed(T))
    rows = tuple(tuple(n - v + 1 for v in reversed(row)) for row in reversed(T))
    return SkewTableau(inner, rows)


def evacuate(T: Tableau, n: int | None = None) -> Tableau:
    """Evacuation of T inside the alphabet 1..n (default: largest entry of T)."""
    if n is None:
        n = max_entry(T)
    return jdt_rectify(rotate180_complement(T, n))


def rsk_of_rot(w: Word, n: int) -> RskPair:
    """Insertion pair of the rotated word.

    Computed directly; it equals (evacuate(P, n), evacuate(Q, len(w))) for
    the pair of w, and tests exercise that identity with both sides computed
    independently.
    """
    return rsk(rot_word(w, n))


def plactic_equivalent(w1: Word, w2: Word) -> bool:
    """Same insertion tableau, i.e. the same position in isomorphic components."""
    return rsk(w1).P == rsk(w2).P


def coplactic_equivalent(w1: Word, w2: Word) -> bool:
    """Same recording tableau, i.e. the same connected word-crystal component."""
    return rsk(w1).Q == rsk(w2).Q


def evacuation_reading_identity(T: Tableau, n: int) -> bool:
    """reading-word form of the rotation: rw(rot(T)) == rot(rw(T))."""
    return skew_reading_word(rotate180_complement(T, n)) == rot_word(reading_word(T), n)
