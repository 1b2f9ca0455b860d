"""Extremal subsets and atom-positivity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import weyl
from .crystal import Crystal, CrystalSubset, components, i_strings
from .demazure import atom_decomposition
from .poly import Polynomial, expand_in_atoms
from .weyl import WeylElement


@dataclass(frozen=True)
class ExtremalVerdict:
    extremal: bool
    index: int | None = None
    string: tuple[int, ...] | None = None
    hit: tuple[int, ...] | None = None

    def __bool__(self):
        return self.extremal


def _strings(G: Crystal, i: int) -> list[tuple[int, ...]]:
    return G.memo(("strings", i), lambda: i_strings(G, i))


def is_extremal(X: CrystalSubset, labels: Iterable[int] | None = None) -> ExtremalVerdict:
    """Every i-string S meets X in nothing, its head alone, or all of S.

    On failure the verdict carries the offending index, string (head first)
    and the intersection.
    """
    G = X.ambient
    labels = G.index_set if labels is None else tuple(labels)
    for i in labels:
        for s in _strings(G, i):
            hit = tuple(v for v in s if v in X.members)
            if hit and hit != s[:1] and len(hit) != len(s):
                return ExtremalVerdict(False, i, s, hit)
    return ExtremalVerdict(True)


class NotExtremalError(ValueError):
    pass


def lowest_weight_elements(X: CrystalSubset) -> CrystalSubset:
    verdict = is_extremal(X)
    if not verdict:
        raise NotExtremalError(
            f"subset is not extremal: {verdict.index}-string {verdict.string} meets it in {verdict.hit}"
        )
    G = X.ambient
    return G.subset(
        v
        for v in X.members
        if all((u := G.f(i, v)) is None or u not in X.members for i in G.index_set)
    )


def e_closure(X: CrystalSubset) -> CrystalSubset:
    G = X.ambient
    out = set(X.members)
    stack = list(out)
    while stack:
        v = stack.pop()
        for i in G.index_set:
            u = G.e(i, v)
            if u is not None and u not in out:
                out.add(u)
                stack.append(u)
    return G.subset(out)


def extremal_closure(X: CrystalSubset) -> CrystalSubset:
    """Least extremal superset of X.

    Repeat until stable: close upward under every e_i, and absorb the whole
    i-string of any member that is not the head of that string.
    """
    G = X.ambient
    out = set(X.members)
    stack = list(out)
    while stack:
        v = stack.pop()
        for i in G.index_set:
            if G.e(i, v) is None:
                continue
            head = G.e_star(i, v)
            u = head
            while u is not None:
                if u not in out:
                    out.add(u)
                    stack.append(u)
                u = G.f(i, u)
    return G.subset(out)


def is_strongly_atom_positive(X: CrystalSubset, top: int | None = None) -> set[WeylElement] | None:
    """The set L with X the disjoint union of the atoms indexed by L, or None."""
    if not X.members:
        return set()
    out = set()
    for w, A in atom_decomposition(X.ambient, top).items():
        meet = A.members & X.members
        if not meet:
            continue
        if meet != A.members:
            return None
        out.add(w)
    covered = set().union(*(atom_decomposition(X.ambient, top)[w].members for w in out))
    if covered != X.members:
        return None
    return out


@dataclass(frozen=True)
class WeakPositivity:
    positive: bool
    expansion: dict

    def __bool__(self):
        return self.positive


def is_weakly_atom_positive(f: Polynomial) -> WeakPositivity:
    expansion = expand_in_atoms(f)
    return WeakPositivity(all(c >= 0 for c in expansion.values()), expansion)


def is_connected(X: CrystalSubset) -> bool:
    return len(components(X.ambient, X.members)) <= 1


def extremal_weight(G: Crystal, v: int, top: int) -> WeylElement | None:
    """w in W^lambda with wt(v) = w.lambda, if the weight of v is extremal."""
    lam = G.weights[top]
    wt = G.weights[v]
    if sorted(wt, reverse=True) != sorted(lam, reverse=True):
        return None
    # weights are full GL_n vectors, so wt(v) must be a permutation of lambda
    return weyl.min_rep_for_weight(wt)
