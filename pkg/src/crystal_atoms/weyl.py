"""The symmetric group S_n as the Weyl group of type A_{n-1}.

Permutations are stored in one-line notation, ``perm[j - 1] = w(j)``, and
compose as functions: ``(u * v)(j) = u(v(j))``.  Words are stored in
*application order*: the word ``(i_1, ..., i_k)`` denotes
``w = s_{i_k} ... s_{i_1}``, so ``i_1`` acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

Word = tuple[int, ...]


@dataclass(frozen=True, order=True)
class WeylElement:
    perm: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"not a permutation of 1..{len(perm)}: {perm}")
        object.__setattr__(self, "perm", perm)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def __call__(self, j: int) -> int:
        return self.perm[j - 1]

    def __mul__(self, other: WeylElement) -> WeylElement:
        _check_rank(self, other)
        return WeylElement(tuple(self.perm[p - 1] for p in other.perm))

    def inverse(self) -> WeylElement:
        inv = [0] * self.rank
        for j, p in enumerate(self.perm, start=1):
            inv[p - 1] = j
        return WeylElement(tuple(inv))

    def is_identity(self) -> bool:
        return all(p == j for j, p in enumerate(self.perm, start=1))

    def right_descents(self) -> list[int]:
        """Indices i with l(w s_i) < l(w)."""
        return [i for i in range(1, self.rank) if self.perm[i - 1] > self.perm[i]]

    def left_descents(self) -> list[int]:
        """Indices i with l(s_i w) < l(w)."""
        pos = self.inverse().perm
        return [i for i in range(1, self.rank) if pos[i - 1] > pos[i]]

    def times_simple_right(self, i: int) -> WeylElement:
        p = list(self.perm)
        p[i - 1], p[i] = p[i], p[i - 1]
        return WeylElement(tuple(p))

    def times_simple_left(self, i: int) -> WeylElement:
        swap = {i: i + 1, i + 1: i}
        return WeylElement(tuple(swap.get(p, p) for p in self.perm))

    def to_json(self) -> list[int]:
        return list(self.perm)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.perm)) + "]"


def _check_rank(v: WeylElement, w: WeylElement):
    if v.rank != w.rank:
        raise ValueError(f"rank mismatch: {v.rank} vs {w.rank}")


def identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(1, n + 1)))


def simple_reflection(i: int, n: int) -> WeylElement:
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection index {i} out of range for rank {n}")
    return identity(n).times_simple_right(i)


def longest_element(n: int) -> WeylElement:
    return WeylElement(tuple(range(n, 0, -1)))


def from_word(word: Iterable[int], n: int) -> WeylElement:
    """Product s_{i_k} ... s_{i_1} for a word given in application order."""
    w = identity(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"letter {i} out of range for rank {n}")
        w = w.times_simple_left(i)
    return w


def length(w: WeylElement) -> int:
    p = w.perm
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def all_elements(n: int) -> list[WeylElement]:
    return [WeylElement(p) for p in permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def _reduced_words(perm: tuple[int, ...]) -> frozenset[Word]:
    w = WeylElement(perm)
    if w.is_identity():
        return frozenset({()})
    out = set()
    # the first letter applied is a right descent
    for i in w.right_descents():
        for rest in _reduced_words(w.times_simple_right(i).perm):
            out.add((i,) + rest)
    return frozenset(out)


def reduced_words(w: WeylElement) -> set[Word]:
    return set(_reduced_words(w.perm))


def canonical_word(w: WeylElement) -> Word:
    """Lexicographically least reduced word (application order)."""
    word = []
    while not w.is_identity():
        i = w.right_descents()[0]
        word.append(i)
        w = w.times_simple_right(i)
    return tuple(word)


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(from_word(word, n)) == len(word)


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the tableau criterion on sorted prefixes."""
    _check_rank(v, w)
    for k in range(1, v.rank):
        a = sorted(v.perm[:k])
        b = sorted(w.perm[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def bruhat_lt(v: WeylElement, w: WeylElement) -> bool:
    return v != w and bruhat_leq(v, w)


def act_on_weight(w: WeylElement, beta: Sequence[int]) -> tuple[int, ...]:
    """(w . beta)_{w(j)} = beta_j."""
    if len(beta) != w.rank:
        raise ValueError(f"weight of length {len(beta)} for rank {w.rank}")
    out = [0] * w.rank
    for j, p in enumerate(w.perm):
        out[p - 1] = beta[j]
    return tuple(out)


def is_min_rep(w: WeylElement, lam: Sequence[int]) -> bool:
    """True iff w is the minimal-length element of w W_lam."""
    return all(
        w.perm[j] < w.perm[j + 1] for j in range(len(lam) - 1) if lam[j] == lam[j + 1]
    )


def min_rep_for_weight(beta: Sequence[int]) -> WeylElement:
    """The minimal w with w . sort(beta) = beta."""
    lam = sorted(beta, reverse=True)
    used = [False] * len(beta)
    perm = []
    for part in lam:
        p = next(q for q in range(len(beta)) if not used[q] and beta[q] == part)
        used[p] = True
        perm.append(p + 1)
    return WeylElement(tuple(perm))


def min_rep(w: WeylElement, lam: Sequence[int]) -> WeylElement:
    return min_rep_for_weight(act_on_weight(w, lam))


def min_coset_reps(lam: Sequence[int], n: int | None = None) -> list[WeylElement]:
    n = len(lam) if n is None else n
    if len(lam) != n:
        raise ValueError(f"partition {tuple(lam)} does not have {n} parts")
    reps = [w for w in all_elements(n) if is_min_rep(w, lam)]
    return sorted(reps, key=lambda w: (length(w), w.perm))


@dataclass(frozen=True)
class LowerOrderIdeal:
    generators: frozenset[WeylElement]

    def __post_init__(self):
        gens = frozenset(self.generators)
        if not gens:
            raise ValueError("an order ideal needs at least one generator")
        ranks = {g.rank for g in gens}
        if len(ranks) != 1:
            raise ValueError("generators of mixed rank")
        for a in gens:
            for b in gens:
                if a != b and bruhat_leq(a, b):
                    raise ValueError(f"generator {a} lies below generator {b}")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def from_elements(cls, elements: Iterable[WeylElement]) -> LowerOrderIdeal:
        """The ideal generated by ``elements``, keeping only the maximal ones."""
        els = set(elements)
        maximal = {a for a in els if not any(bruhat_lt(a, b) for b in els)}
        return cls(frozenset(maximal))

    @property
    def rank(self) -> int:
        return next(iter(self.generators)).rank


def ideal_members(ideal: LowerOrderIdeal) -> set[WeylElement]:
    return {
        v
        for v in all_elements(ideal.rank)
        if any(bruhat_leq(v, g) for g in ideal.generators)
    }


def parse_word(text: str) -> Word:
    text = text.strip()
    if text in ("", "id", "e"):
        return ()
    return tuple(int(t) for t in text.split(","))
