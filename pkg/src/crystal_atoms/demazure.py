"""Demazure crystals, crystal Demazure atoms and the atomic operators.

Set operators act on `CrystalSubset`s of any `Crystal`; words are in
application order (first letter applied first).  The Demazure constructions
start from the source vertex ``top`` of the ambient crystal, which defaults
to the highest weight element of a `CrystalGraph`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import weyl
from .crystal import Crystal, CrystalGraph, CrystalSubset, character, generate
from .poly import Polynomial
from .tableau import Tableau
from .weyl import LowerOrderIdeal, WeylElement


def F_set(i: int, X: CrystalSubset) -> CrystalSubset:
    G = X.ambient
    out = set()
    for v in X.members:
        while v is not None and v not in out:
            out.add(v)
            v = G.f(i, v)
    return CrystalSubset(G, frozenset(out))


def E_set(i: int, X: CrystalSubset) -> CrystalSubset:
    G = X.ambient
    out = set()
    for v in X.members:
        while v is not None and v not in out:
            out.add(v)
            v = G.e(i, v)
    return CrystalSubset(G, frozenset(out))


def atomic_operator(i: int, X: CrystalSubset) -> CrystalSubset:
    return F_set(i, X) - X


def _top(G: Crystal, top: int | None) -> int:
    if top is not None:
        return top
    if isinstance(G, CrystalGraph):
        return G.highest
    raise ValueError("a source vertex is required for a crystal without a named highest weight")


def _weight_rank(G: Crystal, w: WeylElement):
    if w.rank != G.n:
        raise ValueError(f"Weyl element of rank {w.rank} for a rank-{G.n} crystal")


def demazure_by_word(G: Crystal, word: Sequence[int], top: int | None = None) -> CrystalSubset:
    X = G.subset([_top(G, top)])
    for i in word:
        X = F_set(i, X)
    return X


def demazure_crystal(G: Crystal, w: WeylElement, top: int | None = None) -> CrystalSubset:
    """B_w: F along a reduced word of w applied to {top}; memoized per coset."""
    _weight_rank(G, w)
    top = _top(G, top)
    lam = G.weights[top]
    rep = weyl.min_rep(w, lam)
    return G.memo(
        ("demazure", top, rep.perm),
        lambda: demazure_by_word(G, weyl.canonical_word(rep), top),
    )


def atoms_by_word(G: Crystal, word: Sequence[int], top: int | None = None) -> CrystalSubset:
    X = G.subset([_top(G, top)])
    for i in word:
        X = atomic_operator(i, X)
    return X


def atom_via_operators(G: Crystal, w: WeylElement, top: int | None = None) -> CrystalSubset:
    _weight_rank(G, w)
    return atoms_by_word(G, weyl.canonical_word(w), top)


def _require_min_rep(w: WeylElement, lam: Sequence[int]):
    if not weyl.is_min_rep(w, lam):
        raise ValueError(f"{w} is not a minimal coset representative for {tuple(lam)}")


def atom_via_difference(G: Crystal, w: WeylElement, top: int | None = None) -> CrystalSubset:
    """B_w minus the union of B_v over v < w."""
    _weight_rank(G, w)
    top = _top(G, top)
    lam = G.weights[top]
    _require_min_rep(w, lam)

    def compute():
        below = weyl.ideal_members(LowerOrderIdeal(frozenset({w}))) - {w}
        X = demazure_crystal(G, w, top)
        for v in below:
            X = X - demazure_crystal(G, v, top)
        return X

    return G.memo(("atom", top, w.perm), compute)


def atom_decomposition(G: Crystal, top: int | None = None) -> dict[WeylElement, CrystalSubset]:
    """Atoms for every w in W^lambda; checked to partition the component of top."""
    top = _top(G, top)
    lam = G.weights[top]

    def compute():
        atoms = {w: atom_via_difference(G, w, top) for w in weyl.min_coset_reps(lam)}
        covered: set[int] = set()
        for X in atoms.values():
            if not covered.isdisjoint(X.members):
                raise AssertionError("crystal Demazure atoms overlap")
            covered |= X.members
        full = demazure_crystal(G, weyl.longest_element(G.n), top)
        if covered != full.members:
            raise AssertionError("crystal Demazure atoms do not cover the crystal")
        return atoms

    return G.memo(("decomposition", top), compute)


def right_key(G: CrystalGraph, t: Tableau | int) -> WeylElement:
    v = t if isinstance(t, int) else G.index(t)
    for w, X in atom_decomposition(G).items():
        if v in X:
            return w
    raise KeyError(f"vertex {v} lies in no atom")


def schubert_crystal(G: Crystal, ideal: LowerOrderIdeal, top: int | None = None) -> CrystalSubset:
    top = _top(G, top)
    lam = G.weights[top]
    X = G.subset([])
    for g in sorted(ideal.generators):
        _require_min_rep(g, lam)
        X = X | demazure_crystal(G, g, top)
    return X


def schubert_character(G: Crystal, ideal: LowerOrderIdeal) -> Polynomial:
    return character(schubert_crystal(G, ideal))


def extremal_weight_element(G: Crystal, word: Sequence[int], top: int | None = None) -> int:
    """f^*_{i_k} ... f^*_{i_1}(top)."""
    v = _top(G, top)
    for i in word:
        v = G.f_star(i, v)
    return v


def union_of_atoms(G: Crystal, ws: Iterable[WeylElement], top: int | None = None) -> CrystalSubset:
    X = G.subset([])
    for w in ws:
        X = X | atom_via_difference(G, w, top)
    return X


def demazure_for(shape: Sequence[int], w: WeylElement) -> CrystalSubset:
    """Convenience: B_w(shape) inside generate(shape)."""
    return demazure_crystal(generate(shape, w.rank), w)


def key_path(G: Crystal, v: int, word: Sequence[int], top: int | None = None) -> list[int] | None:
    """Exponents d_1..d_k > 0 with v = f_{i_k}^{d_k} ... f_{i_1}^{d_1}(top), every
    intermediate element being the head of the next string; replayed by
    descending along e^* from v.  None if no such path exists."""
    top = _top(G, top)
    ds = []
    x = v
    for i in reversed(word):
        d = G.epsilon(i, x)
        if d == 0:
            return None
        x = G.e_star(i, x)
        ds.append(d)
    if x != top:
        return None
    return ds[::-1]
