"""Labelled trees, center-rooted canonical level sequences and enumeration."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

MAX_ORDER = 16
ORACLE_MAX_ORDER = 9


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class LabelledTree:
    """A tree on vertices ``0..n-1``; edges are stored as sorted pairs."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise TreeError(f"tree needs at least one vertex, got n={n}")
        norm = tuple(sorted((min(a, b), max(a, b)) for a, b in self.edges))
        if len(norm) != n - 1:
            raise TreeError(f"expected {n - 1} edges, got {len(norm)}")
        if len(set(norm)) != len(norm):
            raise TreeError("duplicate edge")
        adj: list[list[int]] = [[] for _ in range(n)]
        for a, b in norm:
            if a == b:
                raise TreeError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise TreeError(f"edge ({a}, {b}) out of range for n={n}")
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            raise TreeError("graph is not connected")
        object.__setattr__(self, "edges", norm)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], n: int | None = None) -> LabelledTree:
        edges = [tuple(e) for e in edges]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))  # type: ignore[arg-type]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def leaves(self) -> list[int]:
        if self.n == 1:
            return []
        return [v for v in range(self.n) if len(self.adjacency[v]) == 1]

    def path(self, u: int, v: int) -> list[int]:
        """Unique vertex path from ``u`` to ``v``."""
        parent = {u: -1}
        queue = deque([u])
        while queue:
            a = queue.popleft()
            if a == v:
                break
            for b in self.adjacency[a]:
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        return out[::-1]

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in self.adjacency[a]:
                if dist[b] < 0:
                    dist[b] = dist[a] + 1
                    queue.append(b)
        return dist

    def relabel(self, perm: Sequence[int]) -> LabelledTree:
        """Return the tree with vertex ``v`` renamed to ``perm[v]``."""
        return LabelledTree(self.n, tuple((perm[a], perm[b]) for a, b in self.edges))


@dataclass(frozen=True, order=True)
class TreeCode:
    """Canonical level sequence of a tree rooted at its center."""

    code: tuple[int, ...]

    def __str__(self) -> str:
        return ",".join(map(str, self.code))

    @property
    def n(self) -> int:
        return len(self.code)

    @classmethod
    def parse(cls, text: str) -> TreeCode:
        text = text.strip()
        if text.startswith("["):
            return cls(tuple(int(v) for v in json.loads(text)))
        try:
            return cls(tuple(int(v) for v in text.split(",")))
        except ValueError as exc:
            raise TreeError(f"bad tree code {text!r}") from exc

    def to_json(self) -> list[int]:
        return list(self.code)

    def tree(self) -> LabelledTree:
        return decode(self)


def centers(t: LabelledTree) -> list[int]:
    """One or two central vertices, found by repeated leaf stripping."""
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = list(t.degrees)
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for w in t.adjacency[v]:
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(t: LabelledTree, root: int) -> tuple[int, ...]:
    """Canonical level sequence of ``t`` rooted at ``root``.

    Child subtrees are emitted in descending lexicographic order of their own
    level sequences, which makes the result a complete invariant of the rooted
    tree.
    """

    def encode(v: int, parent: int, depth: int) -> tuple[int, ...]:
        subs = sorted(
            (encode(w, v, depth + 1) for w in t.adjacency[v] if w != parent),
            reverse=True,
        )
        out = [depth]
        for s in subs:
            out.extend(s)
        return tuple(out)

    return encode(root, -1, 0)


def canonical_code(t: LabelledTree) -> TreeCode:
    return TreeCode(min(rooted_code(t, c) for c in centers(t)))


def decode(code: TreeCode | Sequence[int]) -> LabelledTree:
    """Build the tree of a level sequence; vertex ``i`` is the ``i``-th entry."""
    seq = code.code if isinstance(code, TreeCode) else tuple(code)
    if not seq or seq[0] != 0 or any(d <= 0 for d in seq[1:]):
        raise TreeError(f"invalid level sequence {seq}")
    edges = []
    last_at_depth: dict[int, int] = {0: 0}
    for i, d in enumerate(seq[1:], start=1):
        if d - 1 not in last_at_depth or d > seq[i - 1] + 1:
            raise TreeError(f"invalid level sequence {seq}")
        edges.append((last_at_depth[d - 1], i))
        last_at_depth[d] = i
        for deeper in [k for k in last_at_depth if k > d]:
            del last_at_depth[deeper]
    return LabelledTree(len(seq), tuple(edges))


def path_tree(n: int) -> LabelledTree:
    return LabelledTree(n, tuple((i, i + 1) for i in range(n - 1)))


def star_tree(n: int, center: int = 0) -> LabelledTree:
    others = [v for v in range(n) if v != center]
    return LabelledTree(n, tuple((center, v) for v in others))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[TreeCode, ...]:
    if n == 1:
        return (TreeCode((0,)),)
    found: set[TreeCode] = set()
    for code in _enumerate(n - 1):
        small = decode(code)
        for v in range(n - 1):
            grown = LabelledTree(n, small.edges + ((v, n - 1),))
            found.add(canonical_code(grown))
    return tuple(sorted(found))


def enumerate_trees(n: int) -> list[TreeCode]:
    """Every unlabelled tree on ``n`` vertices, once each, in sorted code order.

    Trees of order n are grown from those of order n-1 by attaching a leaf at
    every vertex; every tree arises this way since deleting any leaf of it
    yields a tree of order n-1.
    """
    if not 1 <= n <= MAX_ORDER:
        raise TreeError(f"n must lie in 1..{MAX_ORDER}, got {n}")
    return list(_enumerate(n))


def prufer_decode(seq: Sequence[int], n: int) -> LabelledTree:
    degree = [1] * n
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = degree.index(1)
        edges.append((leaf, a))
        degree[leaf] = 0
        degree[a] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return LabelledTree(n, tuple(edges))


def _prufer_decode_batch(seqs: np.ndarray, n: int) -> np.ndarray:
    """Vectorised Prüfer decoding; returns an (N, n-1, 2) edge array."""
    count = seqs.shape[0]
    rows = np.arange(count)
    degree = np.ones((count, n), dtype=np.int8)
    for j in range(seqs.shape[1]):
        np.add.at(degree, (rows, seqs[:, j]), 1)
    edges = np.empty((count, n - 1, 2), dtype=np.int8)
    for j in range(seqs.shape[1]):
        leaf = np.argmax(degree == 1, axis=1)
        a = seqs[:, j]
        edges[:, j, 0] = leaf
        edges[:, j, 1] = a
        degree[rows, leaf] = 0
        degree[rows, a] -= 1
    ends = np.argsort(degree != 1, axis=1, kind="stable")[:, :2]
    edges[:, n - 2, 0] = ends[:, 0]
    edges[:, n - 2, 1] = ends[:, 1]
    return edges


class _RootedIds:
    """Injective numbering of rooted unlabelled trees by child-id multisets."""

    # rows are folded column by column through an injective (prefix, entry)
    # pairing table, so only 1-d uniques over int64 are ever needed

    _RADIX = 1 << 32

    def __init__(self) -> None:
        self.pairs: dict[int, int] = {}

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        key = np.zeros(rows.shape[0], dtype=np.int64)
        for j in range(rows.shape[1]):
            col = rows[:, j]
            live = col >= 0
            if not live.any():
                break
            combined = key[live] * self._RADIX + col[live]
            uniq, inverse = np.unique(combined, return_inverse=True)
            mapped = np.fromiter(
                (self.pairs.setdefault(int(c), len(self.pairs) + 1) for c in uniq),
                dtype=np.int64,
                count=len(uniq),
            )
            key[live] = mapped[inverse.reshape(-1)]
        return key


def _class_keys(edges: np.ndarray, n: int, ids: _RootedIds) -> np.ndarray:
    """Exact isomorphism-class key for each tree in a batch.

    Unicentral trees key on the rooted id at the center; bicentral trees on the
    unordered pair of half-tree ids after cutting the central edge.
    """
    count = edges.shape[0]
    rows = np.arange(count)[:, None]
    adj = np.zeros((count, n, n), dtype=bool)
    adj[rows, edges[:, :, 0], edges[:, :, 1]] = True
    adj[rows, edges[:, :, 1], edges[:, :, 0]] = True

    alive = np.ones((count, n), dtype=bool)
    while True:
        remaining = alive.sum(axis=1)
        deg = (adj & alive[:, None, :]).sum(axis=2)
        strip = (remaining > 2)[:, None] & alive & (deg <= 1)
        if not strip.any():
            break
        alive &= ~strip
    bicentral = alive.sum(axis=1) == 2
    order = np.argsort(~alive, axis=1, kind="stable")
    c1 = order[:, 0]
    c2 = np.where(bicentral, order[:, 1], c1)

    flat = np.arange(count)
    cut = adj.copy()
    cut[flat[bicentral], c1[bicentral], c2[bicentral]] = False
    cut[flat[bicentral], c2[bicentral], c1[bicentral]] = False

    depth = np.full((count, n), -1, dtype=np.int16)
    depth[flat, c1] = 0
    depth[flat, c2] = 0
    frontier = depth == 0
    d = 0
    while frontier.any():
        d += 1
        nxt = (cut & frontier[:, :, None]).any(axis=1) & (depth < 0)
        depth[nxt] = d
        frontier = nxt

    sub = np.full((count, n), -1, dtype=np.int64)
    for level in range(d, -1, -1):
        mask = depth == level
        if not mask.any():
            continue
        child = cut & (depth[:, None, :] == level + 1)
        cand = np.where(child, sub[:, None, :], -1)
        cand = -np.sort(-cand, axis=2)
        sub[mask] = ids.lookup(cand[mask])

    id1 = sub[flat, c1]
    id2 = sub[flat, c2]
    lo = np.where(bicentral, np.minimum(id1, id2), id1)
    hi = np.where(bicentral, np.maximum(id1, id2), -1)
    return (bicentral.astype(np.int64) << 50) | (lo << 25) | (hi + 1)


def prufer_oracle(n: int, chunk: int = 1 << 17) -> list[TreeCode]:
    """Canonical codes of all labelled trees on ``n`` vertices, via Prüfer codes.

    Every sequence in ``{0..n-1}^(n-2)`` is decoded. Classes are separated by an
    exact center-rooted subtree numbering computed in bulk; one representative
    per class is then passed through :func:`canonical_code`.
    """
    if not 2 <= n <= ORACLE_MAX_ORDER:
        raise TreeError(f"oracle supports 2 <= n <= {ORACLE_MAX_ORDER}, got {n}")
    if n == 2:
        return [canonical_code(LabelledTree(2, ((0, 1),)))]
    m = n - 2
    total = n**m
    ids = _RootedIds()
    reps: dict[int, LabelledTree] = {}
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        seqs = np.empty((len(idx), m), dtype=np.int64)
        rest = idx
        for j in range(m - 1, -1, -1):
            seqs[:, j] = rest % n
            rest = rest // n
        edges = _prufer_decode_batch(seqs, n)
        keys = _class_keys(edges, n, ids)
        uniq, first = np.unique(keys, return_index=True)
        for key, i in zip(uniq.tolist(), first):
            if key not in reps:
                reps[key] = LabelledTree(n, tuple(map(tuple, edges[i].tolist())))
    codes = {canonical_code(t) for t in reps.values()}
    if len(codes) != len(reps):
        raise AssertionError("canonical_code merged non-isomorphic trees")
    return sorted(codes)


def prufer_oracle_slow(n: int) -> list[TreeCode]:
    """Scalar version of :func:`prufer_oracle`; practical up to n = 7."""
    if n == 2:
        return [canonical_code(LabelledTree(2, ((0, 1),)))]
    codes = {canonical_code(prufer_decode(s, n)) for s in product(range(n), repeat=n - 2)}
    return sorted(codes)


@dataclass(frozen=True)
class LeafDeletion:
    tree: LabelledTree
    old_to_new: dict[int, int]
    neighbor: int  # new label of the deleted leaf's neighbour


def delete_leaf(t: LabelledTree, leaf: int) -> LeafDeletion:
    if t.degree(leaf) != 1:
        raise TreeError(f"vertex {leaf} is not a leaf")
    old_to_new = {v: (v if v < leaf else v - 1) for v in range(t.n) if v != leaf}
    edges = tuple((old_to_new[a], old_to_new[b]) for a, b in t.edges if leaf not in (a, b))
    return LeafDeletion(
        LabelledTree(t.n - 1, edges), old_to_new, old_to_new[t.adjacency[leaf][0]]
    )


def induced_subtree(t: LabelledTree, vertices: Sequence[int], first: int) -> tuple[LabelledTree, dict[int, int]]:
    """Subtree induced on ``vertices`` with ``first`` relabelled to 0."""
    order = [first] + sorted(v for v in vertices if v != first)
    index = {v: i for i, v in enumerate(order)}
    edges = tuple((index[a], index[b]) for a, b in t.edges if a in index and b in index)
    return LabelledTree(len(order), edges), index
