"""Partitions, compositions, words, and semistandard tableaux.

Conventions used everywhere in this package:

- a partition is a weakly decreasing tuple of positive ints,
- a composition is a tuple of positive ints (no zero parts),
- a weight is a fixed-length tuple of non-negative ints (zeros allowed),
- a word is a tuple of ints in 1..n,
- a tableau is a tuple of row tuples in English notation; rows weakly
  increase, columns strictly increase.

Cell coordinates are (row, column), 0-indexed internally.
"""

from dataclasses import dataclass
from functools import cache
from math import comb, factorial

from .errors import EmptyInput, InvalidParameters

Partition = tuple[int, ...]
Composition = tuple[int, ...]
WeightVector = tuple[int, ...]
Word = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# partitions and compositions

def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts)
    if not is_partition(parts):
        raise InvalidParameters(f"not a partition: {parts}")
    return parts


def check_composition(parts) -> Composition:
    parts = tuple(int(p) for p in parts)
    if not all(p >= 1 for p in parts):
        raise InvalidParameters(f"not a composition (needs positive parts): {parts}")
    return parts


def check_weight_vector(counts, n: int) -> WeightVector:
    """Length-n count vector; unlike compositions, zeros are allowed anywhere."""
    counts = tuple(int(c) for c in counts)
    if len(counts) != n or any(c < 0 for c in counts):
        raise InvalidParameters(f"not a length-{n} weight vector: {counts}")
    return counts


def partitions_of(m: int, max_length: int | None = None) -> list[Partition]:
    """All partitions of m, in lexicographically decreasing order.

    With max_length, only partitions with at most that many parts.
    """
    if m < 1:
        raise InvalidParameters("m must be >= 1")
    out = []

    def descend(rest, largest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        if max_length is not None and len(prefix) == max_length:
            return
        for p in range(min(rest, largest), 0, -1):
            prefix.append(p)
            descend(rest - p, p, prefix)
            prefix.pop()

    descend(m, m, [])
    return out


def compositions_of(m: int) -> list[Composition]:
    """All compositions of m (there are 2^(m-1)), in lexicographic order."""
    if m < 1:
        raise InvalidParameters("m must be >= 1")
    out = []

    def extend(rest, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(1, rest + 1):
            prefix.append(p)
            extend(rest - p, prefix)
            prefix.pop()

    extend(m, [])
    return out


def refines(alpha: Composition, beta: Composition) -> bool:
    """True iff consecutive blocks of beta sum to the parts of alpha in order.

    This is the relation "alpha is coarser than beta" used throughout: the
    fundamental basis element indexed by alpha collects the monomial terms of
    all such refinements beta.
    """
    if sum(alpha) != sum(beta):
        return False
    it = iter(beta)
    for part in alpha:
        acc = 0
        while acc < part:
            try:
                acc += next(it)
            except StopIteration:
                return False
        if acc != part:
            return False
    return True


def descent_set_to_composition(descents, m: int) -> Composition:
    """Turn a descent set inside 1..m-1 into the composition of m it bounds."""
    prev = 0
    comp = []
    for d in sorted(descents):
        comp.append(d - prev)
        prev = d
    comp.append(m - prev)
    return tuple(comp)


def composition_to_descent_set(alpha: Composition) -> tuple[int, ...]:
    acc = 0
    out = []
    for part in alpha[:-1]:
        acc += part
        out.append(acc)
    return tuple(out)


# ---------------------------------------------------------------------------
# words

def word_descents(w: Word) -> tuple[int, ...]:
    """Positions i (1-indexed) with w[i] > w[i+1]."""
    return tuple(i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def word_descent_composition(w: Word) -> Composition:
    """Lengths of the maximal weakly increasing runs of w, left to right."""
    if not w:
        raise EmptyInput("empty word")
    return descent_set_to_composition(word_descents(w), len(w))


def word_weight(w: Word, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for letter in w:
        counts[letter - 1] += 1
    return tuple(counts)


def standardize_word(w: Word) -> Word:
    """Relabel equal letters left to right so the result is a permutation.

    Letters i are replaced, in order of appearance, by the next unused block
    of values; descents are preserved.
    """
    if not w:
        raise EmptyInput("empty word")
    order = sorted(range(len(w)), key=lambda j: (w[j], j))
    std = [0] * len(w)
    for label, j in enumerate(order, 1):
        std[j] = label
    return tuple(std)


def inverse_permutation(w: Word) -> Word:
    inv = [0] * len(w)
    for j, v in enumerate(w, 1):
        inv[v - 1] = j
    return tuple(inv)


# ---------------------------------------------------------------------------
# tableaux basics

def shape_of(T: Tableau) -> Partition:
    return tuple(len(row) for row in T)


def tableau_size(T: Tableau) -> int:
    return sum(len(row) for row in T)


def is_semistandard(T) -> bool:
    if not is_partition(shape_of(T)):
        return False
    for row in T:
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if any(v < 1 for v in row):
            return False
    for i in range(len(T) - 1):
        if any(T[i][j] >= T[i + 1][j] for j in range(len(T[i + 1]))):
            return False
    return True


def is_standard(T) -> bool:
    m = tableau_size(T)
    return is_semistandard(T) and sorted(v for row in T for v in row) == list(range(1, m + 1))


def weight_of(T: Tableau, n: int | None = None) -> tuple[int, ...]:
    """Entry counts of T as a length-n vector (n defaults to the max entry)."""
    entries = [v for row in T for v in row]
    if n is None:
        n = max(entries) if entries else 0
    counts = [0] * n
    for v in entries:
        counts[v - 1] += 1
    return tuple(counts)


def max_entry(T: Tableau) -> int:
    return max((v for row in T for v in row), default=0)


def reading_cells(shape: Partition) -> list[tuple[int, int]]:
    """Cells in row reading order: last row first, each row left to right."""
    return [(i, j) for i in reversed(range(len(shape))) for j in range(shape[i])]


def reading_word(T: Tableau) -> Word:
    """Concatenate rows bottom to top, each left to right."""
    if not T:
        raise EmptyInput("empty tableau")
    return tuple(v for row in reversed(T) for v in row)


def from_rows(rows) -> Tableau:
    return tuple(tuple(int(v) for v in row) for row in rows)


def monomial_exponents(T: Tableau, n: int) -> tuple[int, ...]:
    """Exponent vector of the monomial x^T in n variables."""
    return weight_of(T, n)


# ---------------------------------------------------------------------------
# descent compositions and band parsings

def tableau_descent_set(T: Tableau) -> tuple[int, ...]:
    """Descents of a standard tableau: entries i with i+1 in a lower row."""
    row_of = {}
    for i, row in enumerate(T):
        for v in row:
            row_of[v] = i
    m = tableau_size(T)
    return tuple(i for i in range(1, m) if row_of[i + 1] > row_of[i])


def standardize_tableau(T: Tableau) -> Tableau:
    """Standard tableau obtained by standardizing the reading word of T in place."""
    w = reading_word(T)
    std = standardize_word(w)
    cells = reading_cells(shape_of(T))
    grid = [[0] * len(row) for row in T]
    for label, (i, j) in zip(std, cells):
        grid[i][j] = label
    return from_rows(grid)


def descent_composition(T: Tableau) -> Composition:
    """Type of the minimal parsing of T into maximal horizontal bands.

    Computed through standardization: the band boundaries of T are exactly
    the descents of its standardization.
    """
    std = standardize_tableau(T)
    return descent_set_to_composition(tableau_descent_set(std), tableau_size(T))


@dataclass(frozen=True)
class HorizontalBandParsing:
    """Assignment of each cell to a band 1..s, plus the band lengths."""
    band_of_cell: tuple[tuple[int, ...], ...]
    type: Composition


def minimal_parsing(T: Tableau) -> HorizontalBandParsing:
    """The unique coarsest parsing of T into maximal horizontal bands."""
    std = standardize_tableau(T)
    alpha = descent_set_to_composition(tableau_descent_set(std), tableau_size(T))
    band_of_label = {}
    band, used = 1, 0
    for length in alpha:
        for label in range(used + 1, used + length + 1):
            band_of_label[label] = band
        used += length
        band += 1
    bands = tuple(tuple(band_of_label[v] for v in row) for row in std)
    return HorizontalBandParsing(band_of_cell=bands, type=alpha)


def band_cells(parsing: HorizontalBandParsing, band: int) -> list[tuple[int, int]]:
    return [(i, j)
            for i, row in enumerate(parsing.band_of_cell)
            for j, b in enumerate(row) if b == band]


def is_horizontal_band(cells, values=None) -> bool:
    """Check the horizontal-band condition on a set of cells.

    At most one cell per column; read in column order the rows must weakly
    decrease (each cell weakly north-east of the previous). When entry values
    are supplied they must weakly increase in the same order, which is what
    makes a merged band fillable by a single letter.
    """
    cols = [c for _, c in cells]
    if len(set(cols)) != len(cols):
        return False
    ordered = sorted(range(len(cells)), key=lambda k: cells[k][1])
    rows = [cells[k][0] for k in ordered]
    if any(rows[k] < rows[k + 1] for k in range(len(rows) - 1)):
        return False
    if values is not None:
        vals = [values[k] for k in ordered]
        if any(vals[k] > vals[k + 1] for k in range(len(vals) - 1)):
            return False
    return True


def bands_mergeable(T: Tableau, parsing: HorizontalBandParsing, band: int) -> bool:
    """Would merging band and band+1 of T still be a horizontal band?"""
    cells = band_cells(parsing, band) + band_cells(parsing, band + 1)
    values = [T[i][j] for i, j in cells]
    return is_horizontal_band(cells, values)


# ---------------------------------------------------------------------------
# enumeration

def enumerate_ssyt(shape: Partition, max_entry: int) -> list[Tableau]:
    """All semistandard tableaux of the shape with entries <= max_entry.

    Listed in lexicographic order of reading words for reproducible output.
    """
    shape = check_partition(shape)
    if max_entry < 1:
        raise InvalidParameters("max_entry must be >= 1")
    if len(shape) > max_entry:
        return []
    rows = [[] for _ in shape]
    out = []

    def fill(i, j):
        if i == len(shape):
            out.append(tuple(tuple(r) for r in rows))
            return
        ni, nj = (i, j + 1) if j + 1 < shape[i] else (i + 1, 0)
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, max_entry + 1):
            rows[i].append(v)
            fill(ni, nj)
            rows[i].pop()

    fill(0, 0)
    out.sort(key=reading_word)
    return out


def enumerate_syt(shape: Partition) -> list[Tableau]:
    """All standard tableaux of the shape, sorted by reading word."""
    shape = check_partition(shape)
    m = sum(shape)
    rows = [[] for _ in shape]
    out = []

    def place(k):
        if k > m:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            if len(rows[i]) < shape[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                place(k + 1)
                rows[i].pop()

    place(1)
    out.sort(key=reading_word)
    return out


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux by the hook-length formula (counting oracle)."""
    shape = check_partition(shape)
    conjugate = [sum(1 for r in shape if r > c) for c in range(shape[0])]
    product = 1
    for i, r in enumerate(shape):
        for j in range(r):
            product *= (r - j) + (conjugate[j] - i) - 1
    return factorial(sum(shape)) // product


@cache
def _syt_descent_compositions(shape: Partition) -> tuple[Composition, ...]:
    return tuple(descent_composition(T) for T in enumerate_syt(shape))


def syt_descent_compositions(shape: Partition) -> tuple[Composition, ...]:
    """Descent compositions of enumerate_syt(shape), in the same order (cached)."""
    return _syt_descent_compositions(check_partition(shape))


# ---------------------------------------------------------------------------
# distinguished fillings

def highest_weight_tableau(shape: Partition) -> Tableau:
    """Row i filled with entry i: the source of the crystal on the shape."""
    shape = check_partition(shape)
    return tuple((i,) * r for i, r in enumerate(shape, 1))


def destandardize(T: Tableau, alpha: Composition) -> Tableau:
    """Fill the k-th block of alpha consecutive entries of a standard T with k."""
    entry_of = {}
    k, used = 1, 0
    for part in alpha:
        for label in range(used + 1, used + part + 1):
            entry_of[label] = k
        used += part
        k += 1
    if used != tableau_size(T):
        raise InvalidParameters("composition size does not match tableau size")
    return tuple(tuple(entry_of[v] for v in row) for row in T)


def sources_of_type(shape: Partition, alpha: Composition) -> list[Tableau]:
    """Tableaux of the shape with weight alpha and minimal parsing of type alpha.

    One per standard tableau with descent composition alpha, obtained by
    filling its k-th band with entry k.
    """
    shape = check_partition(shape)
    alpha = check_composition(alpha)
    if sum(alpha) != sum(shape):
        raise InvalidParameters("|alpha| must equal |shape|")
    out = []
    for T, comp in zip(enumerate_syt(shape), syt_descent_compositions(shape)):
        if comp == alpha:
            out.append(destandardize(T, alpha))
    return out


def count_one_row_tableaux(m: int, k: int) -> int:
    """Number of weakly increasing length-m sequences over 1..k."""
    if m < 1 or k < 1:
        raise InvalidParameters("m and k must be >= 1")
    return comb(m + k - 1, k - 1)
