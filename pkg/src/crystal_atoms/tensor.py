"""Tensor products of crystals and the Demazure tensor test.

The f-rule moves the left factor when epsilon_i(x) >= phi_i(y):

    f_i(x (x) y) = f_i(x) (x) y   if eps_i(x) >= phi_i(y)
                 = x (x) f_i(y)   otherwise

Raising edges, epsilon and phi of the product are read off the built graph.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from . import weyl
from .crystal import Crystal, CrystalGraph, CrystalSubset, components, generate
from .demazure import demazure_crystal
from .extremal import is_extremal
from .weyl import WeylElement

Pair = tuple[int, int]


def tensor_lower(G: Crystal, H: Crystal, i: int, pair: Pair) -> Pair | None:
    x, y = pair
    if G.epsilon(i, x) >= H.phi(i, y):
        fx = G.f(i, x)
        return None if fx is None else (fx, y)
    fy = H.f(i, y)
    return None if fy is None else (x, fy)


class TensorCrystal(Crystal):
    """G (x) H with vertex id ``x * |H| + y`` for the pair (x, y)."""

    def __init__(self, G: Crystal, H: Crystal):
        if G.n != H.n:
            raise ValueError(f"rank mismatch: {G.n} vs {H.n}")
        self.left, self.right = G, H
        pairs = [(x, y) for x in G.vertices() for y in H.vertices()]
        weights = [tuple(a + b for a, b in zip(G.weights[x], H.weights[y])) for x, y in pairs]
        f_edges = {}
        for i in range(1, G.n):
            targets = []
            for p in pairs:
                q = tensor_lower(G, H, i, p)
                targets.append(None if q is None else self.id(q))
            f_edges[i] = targets
        super().__init__(G.n, weights, f_edges)

    def id(self, pair: Pair) -> int:
        return pair[0] * self.right.size + pair[1]

    def pair(self, v: int) -> Pair:
        return divmod(v, self.right.size)

    def product_subset(self, X: CrystalSubset, Y: CrystalSubset) -> CrystalSubset:
        if X.ambient is not self.left or Y.ambient is not self.right:
            raise ValueError("factor subsets must live in the tensor factors")
        return self.subset(self.id((x, y)) for x in X.members for y in Y.members)

    def __repr__(self):
        return f"TensorCrystal({self.left!r}, {self.right!r})"


def build_tensor(G: Crystal, H: Crystal) -> TensorCrystal:
    return TensorCrystal(G, H)


@lru_cache(maxsize=None)
def tensor_of_shapes(lam: tuple[int, ...], mu: tuple[int, ...], n: int) -> TensorCrystal:
    return TensorCrystal(generate(lam, n), generate(mu, n))


def component_sources(T: Crystal) -> list[tuple[frozenset[int], int]]:
    """Each connected component with its unique source vertex."""
    out = []
    for comp in components(T):
        srcs = T.sources(comp)
        if len(srcs) != 1:
            raise ValueError(f"component with {len(srcs)} source vertices; tensor rule is not normal")
        out.append((comp, srcs[0]))
    return out


def decompose(T: Crystal) -> dict[tuple[int, ...], int]:
    """Highest weights of the components with multiplicities."""
    counts = Counter(T.weights[src] for _, src in component_sources(T))
    return dict(sorted(counts.items(), reverse=True))


def isomorphic_to_highest_weight(T: Crystal, source: int, B: CrystalGraph) -> bool:
    """Label-preserving, weight-preserving graph isomorphism from the component
    of ``source`` onto B, built by walking both from their sources."""
    phi = {source: B.highest}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        b = phi[v]
        if T.weights[v] != B.weights[b]:
            return False
        for i in T.index_set:
            for step_t, step_b in ((T.f, B.f), (T.e, B.e)):
                u, c = step_t(i, v), step_b(i, b)
                if (u is None) != (c is None):
                    return False
                if u is None:
                    continue
                if u in phi:
                    if phi[u] != c:
                        return False
                else:
                    phi[u] = c
                    queue.append(u)
    return len(phi) == B.size and len(set(phi.values())) == B.size


@dataclass
class TensorVerdict:
    extremal: bool
    direct_sum_of_demazure: bool
    components: list[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "extremal": self.extremal,
            "direct_sum_of_demazure": self.direct_sum_of_demazure,
            "components": self.components,
        }


def demazure_tensor_test(
    v: WeylElement, lam: Sequence[int], w: WeylElement, mu: Sequence[int]
) -> TensorVerdict:
    """Is B_v(lam) (x) B_w(mu) extremal, and is it a direct sum of Demazure crystals?"""
    n = v.rank
    T = tensor_of_shapes(tuple(lam), tuple(mu), n)
    X = demazure_crystal(T.left, v)
    Y = demazure_crystal(T.right, w)
    Z = T.product_subset(X, Y)
    ext = bool(is_extremal(Z))
    owner = {}
    for comp, src in T.memo("sources", lambda: component_sources(T)):
        for u in comp:
            owner[u] = src
    found = []
    all_demazure = True
    for comp in components(T, Z.members):
        src = owner[min(comp)]
        nu = T.weights[src]
        match = None
        for rep in weyl.min_coset_reps(nu):
            if demazure_crystal(T, rep, top=src).members == comp:
                match = rep
                break
        if match is None:
            all_demazure = False
        found.append(
            {
                "highest_weight": list(nu),
                "size": len(comp),
                "demazure": None if match is None else match.to_json(),
                "word": None if match is None else list(weyl.canonical_word(match)),
            }
        )
    return TensorVerdict(ext, all_demazure, found)
