"""DOT and JSON serialization for graphs, tableaux, and expansions.

All output is deterministic for a fixed input: vertex order is the canonical
generation order, colors are content-addressed, and no timestamps are
emitted.
"""

import hashlib
import json

from .crystal import CrystalGraph
from .decomposition import Subcomponent
from .errors import InvalidParameters
from .skeleton import DualEquivalenceGraph, SkeletonGraph
from .tableaux import Tableau, from_rows, is_semistandard


def tableau_to_json(T: Tableau) -> str:
    return json.dumps([list(row) for row in T])


def tableau_from_json(text: str) -> Tableau:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
        raise InvalidParameters("tableau JSON must be an array of arrays")
    T = from_rows(data)
    if not is_semistandard(T):
        raise InvalidParameters(f"not a semistandard tableau: {data}")
    return T


def _vertex_label(vertex, kind: str) -> str:
    if kind == "word":
        return "".join(str(v) for v in vertex)
    return json.dumps([list(row) for row in vertex])


def composition_color(alpha) -> str:
    """Stable hex color; a composition and its reverse share the same color."""
    key = min(tuple(alpha), tuple(reversed(alpha)))
    digest = hashlib.sha256(repr(key).encode()).digest()
    # keep it light so black labels stay readable
    r, g, b = (128 + digest[0] // 2, 128 + digest[1] // 2, 128 + digest[2] // 2)
    return f"#{r:02x}{g:02x}{b:02x}"


def crystal_to_json(G: CrystalGraph) -> str:
    payload = {
        "vertices": [[list(row) for row in v] if G.kind == "tableau" else list(v)
                     for v in G.vertices],
        "edges": [[u, v, i] for u, v, i in G.edges],
        "source": G.source,
        "max_entry": G.max_entry,
    }
    return json.dumps(payload)


def crystal_from_json(text: str) -> CrystalGraph:
    data = json.loads(text)
    vertices = tuple(tuple(tuple(row) for row in v) if v and isinstance(v[0], list)
                     else tuple(v) for v in data["vertices"])
    kind = "tableau" if all(isinstance(v[0], tuple) for v in vertices if v) else "word"
    if not vertices:
        kind = "tableau"
    return CrystalGraph(
        vertices=vertices,
        edges=tuple((u, v, i) for u, v, i in data["edges"]),
        source=data["source"],
        max_entry=data["max_entry"],
        kind=kind,
    )


def crystal_to_dot(G: CrystalGraph, subcomponents: list[Subcomponent] | None = None) -> str:
    """DOT rendering; with subcomponents, vertices are colored by class type."""
    lines = ["digraph crystal {", "  rankdir=TB;"]
    fill = {}
    if subcomponents:
        for sub in subcomponents:
            color = composition_color(sub.alpha)
            for v in sub.vertex_indices:
                fill[v] = color
    for k, vertex in enumerate(G.vertices):
        label = _vertex_label(vertex, G.kind).replace('"', '\\"')
        extra = f', style=filled, fillcolor="{fill[k]}"' if k in fill else ""
        lines.append(f'  v{k} [label="{label}"{extra}];')
    for u, v, i in G.edges:
        lines.append(f'  v{u} -> v{v} [label={i}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_to_dot(skel: SkeletonGraph) -> str:
    index = {T: k for k, T in enumerate(skel.vertices)}
    lines = ["digraph skeleton {", "  rankdir=TB;"]
    for T, k in index.items():
        label = _vertex_label(T, "tableau").replace('"', '\\"')
        lines.append(f'  v{k} [label="{label}"];')
    for (u, v), label in sorted(skel.edges.items(), key=lambda kv: (index[kv[0][0]], index[kv[0][1]])):
        lines.append(f'  v{index[u]} -> v{index[v]} [label={label}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def skeleton_to_json(skel: SkeletonGraph) -> str:
    index = {T: k for k, T in enumerate(skel.vertices)}
    payload = {
        "shape": list(skel.shape),
        "max_entry": skel.max_entry,
        "stable_bound": skel.stable_bound,
        "vertices": [[list(row) for row in T] for T in skel.vertices],
        "edges": sorted([index[u], index[v], label]
                        for (u, v), label in skel.edges.items()),
    }
    return json.dumps(payload)


def dual_equivalence_to_dot(g: DualEquivalenceGraph) -> str:
    index = {T: k for k, T in enumerate(g.vertices)}
    lines = ["graph dual_equivalence {"]
    for T, k in index.items():
        label = _vertex_label(T, "tableau").replace('"', '\\"')
        lines.append(f'  v{k} [label="{label}"];')
    for u, v, i in sorted(g.edges, key=lambda e: (index[e[0]], index[e[1]], e[2])):
        lines.append(f'  v{index[u]} -- v{index[v]} [label={i}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dual_equivalence_to_json(g: DualEquivalenceGraph) -> str:
    index = {T: k for k, T in enumerate(g.vertices)}
    payload = {
        "shape": list(g.shape),
        "vertices": [[list(row) for row in T] for T in g.vertices],
        "edges": sorted([index[u], index[v], i] for u, v, i in g.edges),
    }
    return json.dumps(payload)
