"""Crystal graphs as explicit finite objects.

`Crystal` holds the graph data shared by every model: integer vertex ids,
a weight per vertex, and f_i / e_i edges as partial maps.  `CrystalGraph`
is the highest weight crystal B(lambda) realized on tableaux.  All of the
set-level machinery elsewhere in the package only talks to `Crystal`.
"""

from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Sequence

from .poly import Polynomial
from .tableau import (
    Tableau,
    enumerate_ssyt,
    highest_weight_tableau,
    lower,
    normalize_partition,
    weight,
)


class Crystal:
    """A finite normal crystal with vertices 0..size-1."""

    def __init__(self, n: int, weights: list[tuple[int, ...]], f_edges: dict[int, list]):
        self.n = n
        self.index_set = tuple(range(1, n))
        self.weights = weights
        self.size = len(weights)
        self._f = {i: list(f_edges.get(i, [None] * self.size)) for i in self.index_set}
        self._e = {i: [None] * self.size for i in self.index_set}
        for i, targets in self._f.items():
            for v, u in enumerate(targets):
                if u is not None:
                    if self._e[i][u] is not None:
                        raise ValueError(f"vertex {u} has two incoming {i}-edges")
                    self._e[i][u] = v
        self._memo: dict[Hashable, object] = {}
        self._memo_lock = threading.Lock()

    def memo(self, key: Hashable, compute: Callable[[], object]):
        """Idempotent per-crystal cache; concurrent fills compute the same value."""
        with self._memo_lock:
            if key in self._memo:
                return self._memo[key]
        value = compute()
        with self._memo_lock:
            return self._memo.setdefault(key, value)

    def vertices(self) -> range:
        return range(self.size)

    def f(self, i: int, v: int) -> int | None:
        return self._f[i][v]

    def e(self, i: int, v: int) -> int | None:
        return self._e[i][v]

    def epsilon(self, i: int, v: int) -> int:
        k = 0
        while (v := self._e[i][v]) is not None:
            k += 1
        return k

    def phi(self, i: int, v: int) -> int:
        k = 0
        while (v := self._f[i][v]) is not None:
            k += 1
        return k

    def f_star(self, i: int, v: int) -> int:
        while (u := self._f[i][v]) is not None:
            v = u
        return v

    def e_star(self, i: int, v: int) -> int:
        while (u := self._e[i][v]) is not None:
            v = u
        return v

    def edges(self) -> list[tuple[int, int, int]]:
        return [
            (v, i, u)
            for i in self.index_set
            for v, u in enumerate(self._f[i])
            if u is not None
        ]

    def sources(self, members: Iterable[int] | None = None) -> list[int]:
        """Vertices killed by every e_i (within the whole crystal)."""
        pool = self.vertices() if members is None else members
        return sorted(v for v in pool if all(self._e[i][v] is None for i in self.index_set))

    def full(self) -> CrystalSubset:
        return CrystalSubset(self, frozenset(self.vertices()))

    def subset(self, members: Iterable[int]) -> CrystalSubset:
        return CrystalSubset(self, frozenset(members))


@dataclass(frozen=True)
class CrystalSubset:
    ambient: Crystal
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        bad = [v for v in members if not 0 <= v < self.ambient.size]
        if bad:
            raise ValueError(f"vertex ids {sorted(bad)} not in the ambient crystal")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __contains__(self, v):
        return v in self.members

    def _same(self, other: CrystalSubset):
        if other.ambient is not self.ambient:
            raise ValueError("subsets of different ambient crystals")

    def __or__(self, other: CrystalSubset) -> CrystalSubset:
        self._same(other)
        return CrystalSubset(self.ambient, self.members | other.members)

    def __and__(self, other: CrystalSubset) -> CrystalSubset:
        self._same(other)
        return CrystalSubset(self.ambient, self.members & other.members)

    def __sub__(self, other: CrystalSubset) -> CrystalSubset:
        self._same(other)
        return CrystalSubset(self.ambient, self.members - other.members)

    def __le__(self, other: CrystalSubset) -> bool:
        self._same(other)
        return self.members <= other.members

    def isdisjoint(self, other: CrystalSubset) -> bool:
        return self.members.isdisjoint(other.members)


class CrystalGraph(Crystal):
    """B(lambda) on SSYT_n(lambda)."""

    def __init__(self, shape: Sequence[int], n: int):
        self.shape = normalize_partition(shape, n)
        hw = highest_weight_tableau(self.shape)
        seen = {hw}
        queue = deque([hw])
        raw_edges = []
        while queue:
            t = queue.popleft()
            for i in range(1, n):
                u = lower(i, t, n)
                if u is not None:
                    raw_edges.append((t, i, u))
                    if u not in seen:
                        seen.add(u)
                        queue.append(u)
        order = sorted(seen, key=lambda t: (tuple(-x for x in weight(t, n)), t.rows))
        self.tableaux: list[Tableau] = order
        self._index = {t: k for k, t in enumerate(order)}
        f_edges = {i: [None] * len(order) for i in range(1, n)}
        for t, i, u in raw_edges:
            f_edges[i][self._index[t]] = self._index[u]
        super().__init__(n, [weight(t, n) for t in order], f_edges)
        self.highest = self._index[hw]

    def index(self, t: Tableau) -> int:
        try:
            return self._index[t]
        except KeyError:
            raise KeyError(f"tableau {t} is not a vertex of B{self.shape}") from None

    def __contains__(self, t: Tableau) -> bool:
        return t in self._index

    def tableau(self, v: int) -> Tableau:
        return self.tableaux[v]

    def subset_of(self, tableaux: Iterable[Tableau]) -> CrystalSubset:
        return CrystalSubset(self, frozenset(self.index(t) for t in tableaux))

    def tableaux_of(self, X: CrystalSubset) -> list[Tableau]:
        return [self.tableaux[v] for v in sorted(X.members)]

    def __repr__(self):
        return f"CrystalGraph(shape={self.shape}, n={self.n}, size={self.size})"


@lru_cache(maxsize=None)
def _generate(shape: tuple[int, ...], n: int) -> CrystalGraph:
    return CrystalGraph(shape, n)


def generate(shape: Sequence[int], n: int | None = None) -> CrystalGraph:
    n = len(shape) if n is None else n
    return _generate(normalize_partition(shape, n), n)


def character(X: CrystalSubset) -> Polynomial:
    w = X.ambient.weights
    return Polynomial.from_weights(w[v] for v in X.members)


def i_strings(G: Crystal, i: int) -> list[tuple[int, ...]]:
    """The i-strings of G, each listed from its head u_S downward."""
    out = []
    for v in G.vertices():
        if G.e(i, v) is None:
            s = [v]
            while (u := G.f(i, s[-1])) is not None:
                s.append(u)
            out.append(tuple(s))
    return out


def components(
    G: Crystal, members: Iterable[int] | None = None, labels: Iterable[int] | None = None
) -> list[frozenset[int]]:
    """Connected components of the subgraph induced on ``members`` using
    only edges whose label is in ``labels``; sorted by smallest vertex."""
    pool = set(G.vertices() if members is None else members)
    labels = G.index_set if labels is None else tuple(labels)
    seen: set[int] = set()
    out = []
    for start in sorted(pool):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for i in labels:
                for u in (G.f(i, v), G.e(i, v)):
                    if u is not None and u in pool and u not in comp:
                        comp.add(u)
                        queue.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def levi_branch(G: Crystal, J: Iterable[int]) -> list[CrystalSubset]:
    J = tuple(sorted(set(J)))
    if any(j not in G.index_set for j in J):
        raise ValueError(f"index subset {J} not contained in {G.index_set}")
    return [CrystalSubset(G, c) for c in components(G, labels=J)]


def _label(G: Crystal, v: int) -> str:
    if isinstance(G, CrystalGraph):
        return str(G.tableau(v))
    return str(v)


_COLORS = ["red", "blue", "darkgreen", "purple", "orange", "brown", "teal", "magenta"]


def to_dot(G: Crystal, highlight: CrystalSubset | None = None) -> str:
    lines = ["digraph crystal {", "  node [shape=box];"]
    for v in G.vertices():
        style = ""
        if highlight is not None and v in highlight:
            style = ", style=filled, fillcolor=lightgrey"
        wt = ",".join(map(str, G.weights[v]))
        lines.append(f'  v{v} [label="{_label(G, v)}\\n({wt})"{style}];')
    for v, i, u in G.edges():
        color = _COLORS[(i - 1) % len(_COLORS)]
        lines.append(f'  v{v} -> v{u} [label="{i}", color={color}, fontcolor={color}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(G: CrystalGraph) -> dict:
    return {
        "shape": list(G.shape),
        "rank": G.n,
        "highest": G.highest,
        "vertices": [
            {"id": v, "tableau": G.tableau(v).to_json(G.n), "weight": list(G.weights[v])}
            for v in G.vertices()
        ],
        "edges": [{"source": v, "label": i, "target": u} for v, i, u in G.edges()],
    }


def ssyt_oracle(shape: Sequence[int], n: int) -> set[Tableau]:
    return set(enumerate_ssyt(shape, n))
