"""Decomposition of a crystal into descent classes, and exact counting.

Grouping the vertices of a connected tableau crystal by descent composition
partitions it into connected induced subgraphs, one per standard tableau of
the shape. Each class has a unique source (the band filling of its standard
tableau), a unique sink (the source with entries shifted by n-s), and the
oriented-graph structure of a one-row crystal on a smaller alphabet; those
structural facts power the counting formulas at the bottom of this module.
"""

from dataclasses import dataclass
from functools import cache
from math import comb

from .crystal import CrystalGraph, generate_crystal
from .errors import InvalidParameters
from .tableaux import (
    Composition, Partition, Tableau,
    check_composition, check_partition, composition_to_descent_set,
    descent_composition, refines, syt_descent_compositions, weight_of,
)


@dataclass(frozen=True)
class Subcomponent:
    """One descent class inside a host crystal graph.

    source is the class's source tableau; source_index and vertex_indices
    refer to the host graph's vertex numbering.
    """
    alpha: Composition
    source: Tableau
    source_index: int
    vertex_indices: frozenset[int]
    edges: tuple[tuple[int, int, int], ...]

    @property
    def size(self) -> int:
        return len(self.vertex_indices)


@dataclass(frozen=True)
class QuasicrystalClass:
    """The (m, s, n) signature that determines a descent class as a graph."""
    m: int
    s: int
    n: int

    @property
    def height(self) -> int:
        return self.m * (self.n - self.s) + 1

    @property
    def vertex_count(self) -> int:
        return count_bm(self.m, self.n - self.s + 1)


def decompose(G: CrystalGraph) -> list[Subcomponent]:
    """Split G into its descent classes.

    Vertices are grouped by descent composition; each group is split into
    weakly connected components of the induced subgraph (connectivity per
    group is a theorem, the split turns it into a checked invariant). Each
    class must have exactly one internal source.
    """
    groups: dict[Composition, list[int]] = {}
    for k, T in enumerate(G.vertices):
        groups.setdefault(descent_composition(T), []).append(k)

    subs = []
    for alpha, members in groups.items():
        member_set = set(members)
        seen: set[int] = set()
        for start in members:
            if start in seen:
                continue
            component = {start}
            stack = [start]
            while stack:
                u = stack.pop()
                for v in list(G.out_edges(u).values()) + list(G.in_edges(u).values()):
                    if v in member_set and v not in component:
                        component.add(v)
                        stack.append(v)
            seen |= component
            edges = tuple((u, v, i) for u, v, i in G.edges
                          if u in component and v in component)
            incoming = {v for _, v, _ in edges}
            sources = [u for u in component if u not in incoming]
            if len(sources) != 1:
                raise AssertionError(
                    f"descent class {alpha} has {len(sources)} sources")
            subs.append(Subcomponent(alpha, G.vertices[sources[0]], sources[0],
                                     frozenset(component), edges))
    subs.sort(key=lambda s: s.source_index)
    return subs


def subcomponent_sink(sub: Subcomponent, n: int) -> Tableau:
    """The unique sink: the source with every entry i replaced by n-s+i."""
    shift = n - len(sub.alpha)
    return tuple(tuple(v + shift for v in row) for row in sub.source)


def subcomponent_longest_path(sub: Subcomponent) -> int:
    """Edge count of a longest directed path inside the class (it is a DAG)."""
    out: dict[int, list[int]] = {u: [] for u in sub.vertex_indices}
    indeg = {u: 0 for u in sub.vertex_indices}
    for u, v, _ in sub.edges:
        out[u].append(v)
        indeg[v] += 1
    queue = [u for u in sub.vertex_indices if indeg[u] == 0]
    longest = {u: 0 for u in sub.vertex_indices}
    while queue:
        u = queue.pop()
        for v in out[u]:
            longest[v] = max(longest[v], longest[u] + 1)
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return max(longest.values(), default=0)


def canonical_quasicrystal(alpha: Composition, n: int) -> CrystalGraph:
    """The one-row crystal sharing the oriented-graph structure of the class.

    A descent class for alpha with |alpha|=m in s parts, ambient alphabet n,
    is isomorphic as an oriented graph to the crystal of one-row tableaux of
    size m over the alphabet 1..n-s+1.
    """
    alpha = check_composition(alpha)
    if len(alpha) > n:
        raise InvalidParameters("alpha cannot have more parts than the alphabet")
    return generate_crystal((sum(alpha),), n - len(alpha) + 1)


def _band_sequence(T: Tableau) -> tuple[int, ...]:
    """Sorted entries of T; weakly increasing, strict across band boundaries."""
    return tuple(sorted(v for row in T for v in row))


def _strip_block_shifts(seq: tuple[int, ...], alpha: Composition) -> tuple[int, ...]:
    """Subtract k-1 from positions in band k; inverse of the boundary shifts."""
    out = []
    pos = 0
    for k, part in enumerate(alpha):
        for _ in range(part):
            out.append(seq[pos] - k)
            pos += 1
    return tuple(out)


def _band_of_position(alpha: Composition) -> list[int]:
    bands = []
    for k, part in enumerate(alpha):
        bands.extend([k] * part)
    return bands


def verify_subcomponent_iso(G: CrystalGraph, sub: Subcomponent, n: int):
    """Check the constructive isomorphism of the class onto its one-row model.

    Each vertex maps to the weakly increasing sequence of its entries with
    the block shifts removed; an edge labelled i inside band k+1 maps to an
    edge labelled i-k. Returns (True, vertex_map) or (False, counterexample).
    """
    alpha = sub.alpha
    model = canonical_quasicrystal(alpha, n)
    mapping: dict[int, int] = {}
    for u in sub.vertex_indices:
        seq = _band_sequence(G.vertices[u])
        reduced = _strip_block_shifts(seq, alpha)
        if any(x < 1 or x > n - len(alpha) + 1 for x in reduced):
            return False, ("vertex out of range", u, reduced)
        mapping[u] = model.index_of((reduced,))
    if len(set(mapping.values())) != len(mapping) or len(mapping) != len(model.vertices):
        return False, ("vertex map is not a bijection",)

    bands = _band_of_position(alpha)
    for u, v, i in sub.edges:
        seq_u = _band_sequence(G.vertices[u])
        seq_v = _band_sequence(G.vertices[v])
        changed = [p for p in range(len(seq_u)) if seq_u[p] != seq_v[p]]
        if len(changed) != 1:
            return False, ("edge changes several sequence positions", (u, v, i))
        k = bands[changed[0]]
        expected = i - k
        if model.out_edges(mapping[u]).get(expected) != mapping[v]:
            return False, ("edge missing in model", (u, v, i), expected)
    if len(sub.edges) != len(model.edges):
        return False, ("edge counts differ", len(sub.edges), len(model.edges))
    return True, mapping


def weight_matching_bijection(G: CrystalGraph, sub1: Subcomponent,
                              sub2: Subcomponent, n: int) -> dict[int, int] | None:
    """Match vertices of two same-type classes by weight; None if types differ.

    Every weight occurs at most once inside a class, so this is the unique
    labelled-graph isomorphism between them.
    """
    if sub1.alpha != sub2.alpha:
        return None
    by_weight = {weight_of(G.vertices[v], n): v for v in sub2.vertex_indices}
    return {u: by_weight[weight_of(G.vertices[u], n)] for u in sub1.vertex_indices}


# ---------------------------------------------------------------------------
# counting

def count_bm(m: int, k: int) -> int:
    """Number of one-row tableaux of size m over 1..k: C(m+k-1, k-1)."""
    if m < 1 or k < 1:
        raise InvalidParameters("m and k must be >= 1")
    return comb(m + k - 1, k - 1)


@cache
def _descent_count_census(shape: Partition) -> tuple[tuple[int, int], ...]:
    census: dict[int, int] = {}
    for comp in syt_descent_compositions(shape):
        census[len(comp) - 1] = census.get(len(comp) - 1, 0) + 1
    return tuple(sorted(census.items()))


def descent_count_census(shape: Partition) -> dict[int, int]:
    """How many standard tableaux of the shape have each number of descents."""
    return dict(_descent_count_census(check_partition(shape)))


def count_ssyt_formula(shape: Partition, n: int) -> int:
    """Exact count of tableaux of the shape with entries <= n.

    Sums, over the number of descents d, the number of standard tableaux
    with d descents times the size of the one-row crystal each of their
    classes is isomorphic to; terms with n-d-1 < 0 vanish.
    """
    shape = check_partition(shape)
    m = sum(shape)
    total = 0
    for d, count in descent_count_census(shape).items():
        if n - d - 1 >= 0:
            total += count * comb(m + n - d - 1, n - d - 1)
    return total


def kostka(shape: Partition, mu) -> int:
    """Kostka number: tableaux of the shape with weight mu.

    Counted as the standard tableaux whose descent composition is refined by
    mu (zero parts of mu are irrelevant to both sides and are stripped).
    """
    shape = check_partition(shape)
    mu = tuple(int(p) for p in mu)
    if any(p < 0 for p in mu):
        raise InvalidParameters("weights must be non-negative")
    if sum(mu) != sum(shape):
        raise InvalidParameters("|mu| must equal |shape|")
    mu_stripped = tuple(p for p in mu if p)
    return sum(1 for comp in syt_descent_compositions(shape)
               if refines(comp, mu_stripped))


def weight_multiplicity_in_subcomponent(sub, mu) -> int:
    """1 if the weight mu occurs in the class (then exactly once), else 0.

    sub may be a Subcomponent or just its composition type; mu may carry
    zeros in any positions. The unique candidate filling lists the multiset
    of mu in weakly increasing order; it lies in the class iff the sequence
    rises strictly across every band boundary of the type.
    """
    alpha = check_composition(sub.alpha if isinstance(sub, Subcomponent) else sub)
    mu = tuple(int(p) for p in mu)
    if sum(mu) != sum(alpha):
        return 0
    seq = [entry for entry, count in enumerate(mu, 1) for _ in range(count)]
    for boundary in composition_to_descent_set(alpha):
        if seq[boundary - 1] >= seq[boundary]:
            return 0
    return 1


# ---------------------------------------------------------------------------
# which compositions occur for a shape

@dataclass(frozen=True)
class DescentConditionsReport:
    shape: Partition
    alpha: Composition
    conditions: tuple[bool, ...]
    all_conditions_pass: bool
    occurs: bool
    multiplicity: int
    notes: tuple[str, ...]


def check_descent_composition_conditions(shape: Partition, alpha: Composition,
                                         n: int | None = None) -> DescentConditionsReport:
    """Evaluate the five necessary conditions for alpha to occur for the shape.

    The conditions are necessary but not sufficient; the report also says
    whether alpha actually occurs (some standard tableau has it as descent
    composition) and with what multiplicity.
    """
    shape = check_partition(shape)
    alpha = check_composition(alpha)
    ell, s = len(shape), len(alpha)
    m = sum(shape)
    notes = []

    cond1 = all(1 <= p <= shape[0] for p in alpha)
    padded = list(shape) + [0] * max(0, s - ell)
    cond2 = all(sum(alpha[:j]) <= sum(padded[:j]) for j in range(1, s + 1))
    cond3 = s <= (m - shape[0]) + 1
    cond4 = ell <= s and (n is None or s <= n)
    if n is None:
        notes.append("condition 4's upper bound s <= n skipped: no ambient n given")
    cond5 = s <= m
    notes.append("condition 5 implemented as s <= |shape| (cell count); "
                 "the bound's constant is otherwise unspecified")

    multiplicity = sum(1 for comp in syt_descent_compositions(shape) if comp == alpha)
    conditions = (cond1, cond2, cond3, cond4, cond5)
    return DescentConditionsReport(
        shape=shape, alpha=alpha, conditions=conditions,
        all_conditions_pass=all(conditions),
        occurs=multiplicity > 0, multiplicity=multiplicity,
        notes=tuple(notes))
