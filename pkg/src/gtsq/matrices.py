"""Dense matrices attached to a tree: q-Laplacian, q,t-Laplacian and the
exponential distance matrices."""

from __future__ import annotations

import csv
import io
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from .trees import LabelledTree


@dataclass(frozen=True)
class Orientation:
    """One arc ``(tail, head)`` per tree edge."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        undirected = [frozenset(a) for a in self.arcs]
        if len(set(undirected)) != len(undirected):
            raise ValueError("an edge is oriented more than once")

    def covers(self, t: LabelledTree) -> bool:
        return {frozenset(a) for a in self.arcs} == {frozenset(e) for e in t.edges}

    @classmethod
    def away_from(cls, t: LabelledTree, root: int = 0) -> Orientation:
        """Every edge directed away from ``root`` (BFS order)."""
        arcs = []
        seen = {root}
        queue = deque([root])
        while queue:
            a = queue.popleft()
            for b in t.adjacency[a]:
                if b not in seen:
                    seen.add(b)
                    arcs.append((a, b))
                    queue.append(b)
        return cls(tuple(arcs))

    @classmethod
    def from_flags(cls, t: LabelledTree, flags: Iterable[bool]) -> Orientation:
        """Flag ``True`` keeps edge ``(a, b)`` (with ``a < b``) as ``a -> b``."""
        return cls(tuple((a, b) if f else (b, a) for (a, b), f in zip(t.edges, flags)))


def all_orientations(t: LabelledTree) -> Iterator[Orientation]:
    for flags in product((True, False), repeat=len(t.edges)):
        yield Orientation.from_flags(t, flags)


def adjacency_matrix(t: LabelledTree) -> np.ndarray:
    a = np.zeros((t.n, t.n))
    for u, v in t.edges:
        a[u, v] = a[v, u] = 1.0
    return a


def laplacian(t: LabelledTree) -> np.ndarray:
    return q_laplacian(t, 1.0)


def q_laplacian(t: LabelledTree, q: float) -> np.ndarray:
    """``I + q^2 (D - I) - q A``."""
    n = t.n
    m = np.zeros((n, n))
    for v in range(n):
        m[v, v] = 1.0 + q * q * (t.degree(v) - 1)
    for a, b in t.edges:
        m[a, b] = m[b, a] = -q
    return m


def qt_laplacian(t: LabelledTree, q: complex, tt: complex, orientation: Orientation | None = None) -> np.ndarray:
    """Oriented bivariate Laplacian; arc ``(i, j)`` gives ``-q`` at (i, j) and ``-tt`` at (j, i)."""
    o = orientation or Orientation.away_from(t)
    if not o.covers(t):
        raise ValueError("orientation does not match the tree's edges")
    n = t.n
    m = np.zeros((n, n), dtype=complex)
    for v in range(n):
        m[v, v] = 1 + q * tt * (t.degree(v) - 1)
    for i, j in o.arcs:
        m[i, j] = -q
        m[j, i] = -tt
    return m


def distance_matrix(t: LabelledTree) -> np.ndarray:
    return np.array([t.distances_from(s) for s in range(t.n)], dtype=int)


def exp_distance(t: LabelledTree, q: float) -> np.ndarray:
    """``q**dist(i, j)`` off the diagonal, ones on it."""
    d = distance_matrix(t)
    out = np.power(float(q), d.astype(float))
    np.fill_diagonal(out, 1.0)
    return out


def exp_distance_qt(t: LabelledTree, q: complex, tt: complex, orientation: Orientation | None = None) -> np.ndarray:
    """Product of arc weights along each path: ``q`` forward, ``tt`` backward."""
    o = orientation or Orientation.away_from(t)
    if not o.covers(t):
        raise ValueError("orientation does not match the tree's edges")
    forward = set(o.arcs)
    n = t.n
    w = np.ones((n, n), dtype=complex)
    for s in range(n):
        seen = {s}
        queue = deque([s])
        while queue:
            a = queue.popleft()
            for b in t.adjacency[a]:
                if b not in seen:
                    seen.add(b)
                    w[s, b] = w[s, a] * (q if (a, b) in forward else tt)
                    queue.append(b)
    return w


def delete_principal(m: np.ndarray, s: Iterable[int]) -> np.ndarray:
    """Principal submatrix on the complement of ``s``, in the original order."""
    gone = set(s)
    n = m.shape[0]
    if any(not 0 <= v < n for v in gone):
        raise ValueError(f"indices {sorted(gone)} out of range")
    keep = [i for i in range(n) if i not in gone]
    if not keep:
        raise ValueError("cannot delete every row and column")
    return m[np.ix_(keep, keep)]


def is_hermitian(m: np.ndarray) -> bool:
    return bool(np.array_equal(m, m.conj().T))


def matrix_csv(m: np.ndarray) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in m:
        if np.iscomplexobj(m):
            writer.writerow([_fmt_complex(v) for v in row])
        else:
            writer.writerow([format(float(v), ".17g") for v in row])
    return buf.getvalue()


def _fmt_complex(v: complex) -> str:
    return f"{format(v.real, '.17g')}{'+' if v.imag >= 0 else '-'}{format(abs(v.imag), '.17g')}j"
