"""Generalized tree shifts and the Hasse diagram of the poset they generate."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .trees import (
    LabelledTree,
    TreeCode,
    TreeError,
    canonical_code,
    decode,
    enumerate_trees,
    induced_subtree,
)

HASSE_MAX_ORDER = 12


@dataclass(frozen=True)
class ShiftSite:
    """Endpoints ``u`` (receives the neighbours) and ``v``, and the path between."""

    u: int
    v: int
    path: tuple[int, ...]

    def to_json(self) -> list:
        return [self.u, self.v, list(self.path)]

    @classmethod
    def from_json(cls, data) -> ShiftSite:
        u, v, path = data
        return cls(int(u), int(v), tuple(int(p) for p in path))

    def reversed(self) -> ShiftSite:
        return ShiftSite(self.v, self.u, self.path[::-1])


def shift_sites(t: LabelledTree) -> list[ShiftSite]:
    """All unordered pairs joined by a path whose interior has degree 2.

    Walks outward from every vertex, continuing only through degree-2 vertices.
    Each pair is reported once, with ``u < v``.
    """
    sites = []
    for u in range(t.n):
        for first in t.adjacency[u]:
            path = [u, first]
            while True:
                w = path[-1]
                if u < w:
                    sites.append(ShiftSite(u, w, tuple(path)))
                if t.degree(w) != 2:
                    break
                nxt = next(x for x in t.adjacency[w] if x != path[-2])
                path.append(nxt)
    sites.sort(key=lambda s: (s.u, s.v))
    return sites


def is_valid_site(t: LabelledTree, s: ShiftSite) -> bool:
    if len(s.path) < 2 or s.path[0] != s.u or s.path[-1] != s.v:
        return False
    if list(s.path) != t.path(s.u, s.v):
        return False
    return all(t.degree(w) == 2 for w in s.path[1:-1])


def apply_shift(t: LabelledTree, s: ShiftSite) -> LabelledTree:
    """Move every neighbour of ``v`` other than its path predecessor onto ``u``."""
    if not is_valid_site(t, s):
        raise TreeError(f"invalid shift site {s}")
    keep = s.path[-2]
    moved = {w for w in t.adjacency[s.v] if w != keep}
    edges = []
    for a, b in t.edges:
        if a == s.v and b in moved:
            edges.append((s.u, b))
        elif b == s.v and a in moved:
            edges.append((a, s.u))
        else:
            edges.append((a, b))
    return LabelledTree(t.n, tuple(edges))


def is_cover_shift(t: LabelledTree, s: ShiftSite) -> bool:
    return t.degree(s.u) >= 2 and t.degree(s.v) >= 2


def leaf_count(t: LabelledTree) -> int:
    return len(t.leaves())


@dataclass(frozen=True)
class CoverParts:
    """Path subtree and the two hanging components of a cover shift.

    Each subtree is relabelled so that its join vertex is 0; ``*_map`` send the
    host labels to the subtree labels. The path subtree's vertex 0 is ``u``.
    """

    path: LabelledTree
    h1: LabelledTree
    h2: LabelledTree
    path_map: dict[int, int] = field(compare=False)
    h1_map: dict[int, int] = field(compare=False)
    h2_map: dict[int, int] = field(compare=False)

    @property
    def sizes(self) -> tuple[int, int, int]:
        return self.path.n, self.h1.n, self.h2.n


def _component(t: LabelledTree, start: int, banned: set[frozenset]) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        a = stack.pop()
        for b in t.adjacency[a]:
            if b not in seen and frozenset((a, b)) not in banned:
                seen.add(b)
                stack.append(b)
    return sorted(seen)


def decompose_cover(t1: LabelledTree, s: ShiftSite) -> CoverParts:
    if not is_valid_site(t1, s) or not is_cover_shift(t1, s):
        raise TreeError(f"{s} is not a cover shift")
    path_edges = {frozenset(e) for e in zip(s.path, s.path[1:])}
    h1_vertices = _component(t1, s.u, path_edges)
    h2_vertices = _component(t1, s.v, path_edges)
    p_tree, p_map = induced_subtree(t1, s.path, s.u)
    h1, h1_map = induced_subtree(t1, h1_vertices, s.u)
    h2, h2_map = induced_subtree(t1, h2_vertices, s.v)
    return CoverParts(p_tree, h1, h2, p_map, h1_map, h2_map)


@dataclass
class HasseDiagram:
    n: int
    nodes: list[TreeCode]
    covers: list[tuple[int, int]]
    witness: dict[tuple[int, int], ShiftSite] = field(default_factory=dict)

    def representative(self, i: int) -> LabelledTree:
        return decode(self.nodes[i])

    def index(self, code: TreeCode) -> int:
        return self.nodes.index(code)

    def sources(self) -> list[int]:
        has_lower = {j for _, j in self.covers}
        return [i for i in range(len(self.nodes)) if i not in has_lower]

    def sinks(self) -> list[int]:
        has_upper = {i for i, _ in self.covers}
        return [i for i in range(len(self.nodes)) if i not in has_upper]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "nodes": [c.to_json() for c in self.nodes],
            "covers": [list(c) for c in self.covers],
            "witnesses": [self.witness[c].to_json() for c in self.covers],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> HasseDiagram:
        nodes = [TreeCode(tuple(c)) for c in data["nodes"]]
        covers = [(int(i), int(j)) for i, j in data["covers"]]
        witness = {}
        if "witnesses" in data:
            witness = {c: ShiftSite.from_json(w) for c, w in zip(covers, data["witnesses"])}
        return cls(int(data["n"]), nodes, covers, witness)

    def to_dot(self) -> str:
        lines = [f"digraph GTS_{self.n} {{", "  rankdir=BT;"]
        for i, code in enumerate(self.nodes):
            lines.append(f'  n{i} [label="{code}"];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __eq__(self, other) -> bool:
        if not isinstance(other, HasseDiagram):
            return NotImplemented
        return (self.n, self.nodes, self.covers) == (other.n, other.nodes, other.covers)


def build_hasse(n: int) -> HasseDiagram:
    """Hasse diagram of the shift poset on trees of order ``n``.

    Every tree contributes one edge per cover shift of its canonical
    representative; the witness kept is the first site found.
    """
    if not 2 <= n <= HASSE_MAX_ORDER:
        raise TreeError(f"n must lie in 2..{HASSE_MAX_ORDER}, got {n}")
    nodes = enumerate_trees(n)
    index = {c: i for i, c in enumerate(nodes)}
    witness: dict[tuple[int, int], ShiftSite] = {}
    for i, code in enumerate(nodes):
        t = decode(code)
        for s in shift_sites(t):
            if not is_cover_shift(t, s):
                continue
            j = index[canonical_code(apply_shift(t, s))]
            if i != j:
                witness.setdefault((i, j), s)
    covers = sorted(witness)
    return HasseDiagram(n, nodes, covers, {c: witness[c] for c in covers})


def cover_instances(n: int) -> list[tuple[LabelledTree, ShiftSite]]:
    """Every (representative, cover site) pair of order ``n``, not deduplicated."""
    out = []
    for code in enumerate_trees(n):
        t = decode(code)
        out.extend((t, s) for s in shift_sites(t) if is_cover_shift(t, s))
    return out
