"""Semistandard Young tableaux in French notation and their crystal operators.

Row 0 is the bottom (longest) row.  The i-pairing is bracket matching on
the column reading word: columns left to right, each column top to bottom,
with i+1 as an opening and i as a closing bracket.  An i+1 therefore pairs
with an i weakly to its right, and the unpaired letters read
``i ... i  i+1 ... i+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

Position = tuple[int, int]  # (row, column), both 0-based


def normalize_partition(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"not weakly decreasing: {parts}")
    if n is not None:
        if len([p for p in parts if p]) > n:
            raise ValueError(f"partition {parts} has more than {n} nonzero parts")
        parts = tuple(p for p in parts if p) + (0,) * (n - len([p for p in parts if p]))
    return parts


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def entries(self) -> Iterator[int]:
        for r in self.rows:
            yield from r

    def is_semistandard(self, n: int | None = None) -> bool:
        shape = self.shape
        if any(a < b for a, b in zip(shape, shape[1:])):
            return False
        for r in self.rows:
            if any(a > b for a, b in zip(r, r[1:])):
                return False
        for k in range(1, len(self.rows)):
            if any(self.rows[k][c] <= self.rows[k - 1][c] for c in range(len(self.rows[k]))):
                return False
        if any(x < 1 for x in self.entries()):
            return False
        if n is not None and any(x > n for x in self.entries()):
            return False
        return True

    def column_word(self) -> list[tuple[int, Position]]:
        """Entries in column reading order with their positions."""
        out = []
        width = len(self.rows[0]) if self.rows else 0
        for c in range(width):
            for r in range(len(self.rows) - 1, -1, -1):
                if c < len(self.rows[r]):
                    out.append((self.rows[r][c], (r, c)))
        return out

    def replace(self, pos: Position, value: int) -> Tableau:
        r, c = pos
        rows = [list(row) for row in self.rows]
        rows[r][c] = value
        return Tableau(tuple(tuple(row) for row in rows))

    def to_json(self, n: int | None = None) -> dict:
        shape = list(self.shape)
        if n is not None:
            shape += [0] * (n - len(shape))
        return {"shape": shape, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> Tableau:
        t = cls(tuple(tuple(r) for r in data["rows"]))
        shape = [p for p in data.get("shape", t.shape) if p]
        if list(t.shape) != shape:
            raise ValueError(f"rows {data['rows']} do not have shape {data.get('shape')}")
        return t

    def __str__(self) -> str:
        return "/".join("(" + ",".join(map(str, r)) + ")" for r in self.rows)


def highest_weight_tableau(shape: Sequence[int]) -> Tableau:
    """b_lambda: row r filled with r."""
    return Tableau(tuple((r + 1,) * p for r, p in enumerate(shape) if p))


def weight(t: Tableau, n: int) -> tuple[int, ...]:
    counts = [0] * n
    for x in t.entries():
        counts[x - 1] += 1
    return tuple(counts)


def _unpaired(t: Tableau, i: int) -> tuple[list[Position], list[Position]]:
    """Positions of unpaired i's and unpaired (i+1)'s, in reading order."""
    open_stack: list[Position] = []
    free_i: list[Position] = []
    for x, pos in t.column_word():
        if x == i + 1:
            open_stack.append(pos)
        elif x == i:
            if open_stack:
                open_stack.pop()
            else:
                free_i.append(pos)
    return free_i, open_stack


def _check(i: int, t: Tableau, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"crystal operator index {i} out of range for rank {n}")
    if not t.is_semistandard(n):
        raise ValueError(f"not a semistandard tableau with entries <= {n}: {t}")


def lower(i: int, t: Tableau, n: int) -> Tableau | None:
    """f_i: rightmost unpaired i becomes i+1, or None."""
    _check(i, t, n)
    free_i, _ = _unpaired(t, i)
    if not free_i:
        return None
    return t.replace(free_i[-1], i + 1)


def raise_(i: int, t: Tableau, n: int) -> Tableau | None:
    """e_i: leftmost unpaired i+1 becomes i, or None."""
    _check(i, t, n)
    _, free_next = _unpaired(t, i)
    if not free_next:
        return None
    return t.replace(free_next[0], i)


def string_stats(i: int, t: Tableau, n: int) -> tuple[int, int]:
    """(epsilon_i, phi_i)."""
    _check(i, t, n)
    free_i, free_next = _unpaired(t, i)
    return len(free_next), len(free_i)


def enumerate_ssyt(shape: Sequence[int], n: int) -> list[Tableau]:
    """All SSYT of the given shape with entries in 1..n, filled cell by cell."""
    shape = tuple(p for p in shape if p)
    if len(shape) > n:
        return []
    cells = [(r, c) for r, p in enumerate(shape) for c in range(p)]
    grid = [[0] * p for p in shape]
    out = []

    def fill(k):
        if k == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1])
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        # room left for strictly increasing entries above
        hi = n - (len([p for p in shape if p > c]) - 1 - r)
        for v in range(lo, hi + 1):
            grid[r][c] = v
            fill(k + 1)
        grid[r][c] = 0

    fill(0)
    return out
