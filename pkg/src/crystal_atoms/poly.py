"""Exact polynomials in Z[t_1..t_n] and the operators acting on them.

A polynomial is a sparse map from exponent vectors to nonzero integers.
Key polynomials and Demazure atoms are indexed by weak compositions.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from . import weyl

Exponent = tuple[int, ...]


class Polynomial:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exp): coeff})

    @classmethod
    def from_weights(cls, weights: Iterable[Sequence[int]]) -> Polynomial:
        terms: dict[Exponent, int] = {}
        for w in weights:
            w = tuple(w)
            terms[w] = terms.get(w, 0) + 1
        return cls(terms)

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp: Sequence[int]) -> int:
        return self._terms.get(tuple(exp), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def nvars(self) -> int | None:
        for e in self._terms:
            return len(e)
        return None

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def homogeneous_parts(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial(t) for d, t in parts.items()}

    def num_terms(self) -> int:
        """Number of monomials counted with multiplicity (sum of coefficients)."""
        return sum(self._terms.values())

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Polynomial) -> Polynomial:
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out)

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self._terms.items()})
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def swap(self, i: int) -> Polynomial:
        """s_i . f: exchange t_i and t_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(out)

    def to_json(self) -> list[dict]:
        return [{"exp": list(e), "coeff": c} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict]) -> Polynomial:
        return cls({tuple(d["exp"]): d["coeff"] for d in data})

    def pretty(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = " ".join(
                f"t{k}" if p == 1 else f"t{k}^{p}" for k, p in enumerate(e, start=1) if p
            )
            mono = mono or "1"
            if c == 1:
                pieces.append(("+", mono))
            elif c == -1:
                pieces.append(("-", mono))
            else:
                pieces.append(("-" if c < 0 else "+", f"{abs(c)} {mono}"))
        text = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({self.pretty()})"


def _check_index(i: int, n: int):
    if not 1 <= i <= n - 1:
        raise ValueError(f"operator index {i} out of range for {n} variables")


def _pi_monomial(i: int, exp: Exponent) -> dict[Exponent, int]:
    # pi_i(t_i^a t_{i+1}^b) as a geometric sum, no division performed
    a, b = exp[i - 1], exp[i]

    def at(x, y):
        e = list(exp)
        e[i - 1], e[i] = x, y
        return tuple(e)

    if a >= b:
        return {at(a - j, b + j): 1 for j in range(a - b + 1)}
    # a < b: -(t_i t_{i+1})^{a+1} * h_{b-a-2}(t_i, t_{i+1})
    return {at(a + 1 + j, b - 1 - j): -1 for j in range(b - a - 1)}


def divided_difference(i: int, f: Polynomial) -> Polynomial:
    """pi_i(f) = (t_i f - s_i(t_i f)) / (t_i - t_{i+1})."""
    if f.is_zero():
        return f
    _check_index(i, f.nvars())
    out: dict[Exponent, int] = {}
    for e, c in f.terms.items():
        for e2, c2 in _pi_monomial(i, e).items():
            out[e2] = out.get(e2, 0) + c * c2
    return Polynomial(out)


def demazure_operator(i: int, f: Polynomial) -> Polynomial:
    """D_i(t^b) = (t^{b+rho} - t^{s_i(b+rho)}) / (1 - t^{-alpha_i}) * t^{-rho}.

    Evaluated with rho = (n-1, ..., 1, 0) over Laurent exponents; the
    result is checked to be a genuine polynomial.
    """
    if f.is_zero():
        return f
    n = f.nvars()
    _check_index(i, n)
    rho = tuple(range(n - 1, -1, -1))
    alpha = tuple(1 if k == i - 1 else -1 if k == i else 0 for k in range(n))
    out: dict[Exponent, int] = {}

    def add(gamma, shift, sign):
        e = tuple(g + shift * a - r for g, a, r in zip(gamma, alpha, rho))
        out[e] = out.get(e, 0) + sign

    for beta, c in f.terms.items():
        gamma = tuple(b + r for b, r in zip(beta, rho))
        m = gamma[i - 1] - gamma[i]
        if m >= 0:
            # t^gamma (1 - t^{-m alpha}) / (1 - t^{-alpha}) = sum_{j<m} t^{gamma - j alpha}
            for j in range(m):
                add(gamma, -j, c)
        else:
            # (1 - t^{|m| alpha}) / (1 - t^{-alpha}) = -sum_{j=1}^{|m|} t^{j alpha}
            for j in range(1, -m + 1):
                add(gamma, j, -c)
    result = Polynomial(out)
    if any(x < 0 for e in result.terms for x in e):
        raise ArithmeticError("Demazure operator left negative exponents")
    return result


def theta(i: int, f: Polynomial) -> Polynomial:
    return divided_difference(i, f) - f


def apply_word(op, word: Iterable[int], f: Polynomial) -> Polynomial:
    """Apply ``op(i, .)`` for each letter, first letter first."""
    for i in word:
        f = op(i, f)
    return f


def _split(beta: Sequence[int]):
    beta = tuple(int(b) for b in beta)
    if any(b < 0 for b in beta):
        raise ValueError(f"weak composition has a negative entry: {beta}")
    lam = tuple(sorted(beta, reverse=True))
    w = weyl.min_rep_for_weight(beta)
    return lam, weyl.canonical_word(w)


@lru_cache(maxsize=None)
def key_polynomial(beta: tuple[int, ...]) -> Polynomial:
    lam, word = _split(beta)
    return apply_word(divided_difference, word, Polynomial.monomial(lam))


@lru_cache(maxsize=None)
def atom_polynomial(beta: tuple[int, ...]) -> Polynomial:
    lam, word = _split(beta)
    return apply_word(theta, word, Polynomial.monomial(lam))


def weak_compositions(d: int, n: int) -> list[Exponent]:
    """All weak compositions of d into n parts, in lexicographic order."""
    if n == 0:
        return [()] if d == 0 else []
    out = []
    for bars in combinations(range(d + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(d + n - 1 - prev - 1)
        out.append(tuple(parts))
    return sorted(out)


def _solve_exact(matrix: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Gauss-Jordan over Q for a square nonsingular system."""
    size = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            raise ArithmeticError("singular atom matrix")
        a[col], a[pivot] = a[pivot], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(size):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][size] for r in range(size)]


@lru_cache(maxsize=None)
def _atom_matrix(d: int, n: int):
    comps = weak_compositions(d, n)
    row = {e: k for k, e in enumerate(comps)}
    mat = [[0] * len(comps) for _ in comps]
    for col, beta in enumerate(comps):
        for e, c in atom_polynomial(beta).terms.items():
            mat[row[e]][col] = c
    return comps, row, mat


def expand_in_atoms(f: Polynomial, method: str = "solve") -> dict[Exponent, int]:
    """Coefficients c_beta with f = sum c_beta A_beta.

    ``method="solve"`` runs exact Gaussian elimination per degree;
    ``method="peel"`` subtracts leading atoms one at a time.
    """
    if f.is_zero():
        return {}
    if method == "peel":
        return _expand_peel(f)
    if method != "solve":
        raise ValueError(f"unknown method {method!r}")
    n = f.nvars()
    out: dict[Exponent, int] = {}
    for d, part in sorted(f.homogeneous_parts().items()):
        comps, row, mat = _atom_matrix(d, n)
        rhs = [0] * len(comps)
        for e, c in part.terms.items():
            rhs[row[e]] = c
        sol = _solve_exact(mat, rhs)
        for beta, c in zip(comps, sol):
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral atom coefficient {c} at {beta}")
            if c:
                out[beta] = int(c)
    check = sum((atom_polynomial(b) * c for b, c in out.items()), Polynomial())
    if check != f:
        raise ArithmeticError("atom expansion does not reproduce the input")
    return dict(sorted(out.items()))


def _expand_peel(f: Polynomial) -> dict[Exponent, int]:
    # A_beta = t^beta + terms whose sorted exponent is strictly dominated by
    # sort(beta); a lex-largest sorted exponent is therefore always a leader.
    out: dict[Exponent, int] = {}
    rest = f
    while not rest.is_zero():
        lead = max(rest.terms, key=lambda e: (tuple(sorted(e, reverse=True)), e))
        c = rest.coeff(lead)
        out[lead] = out.get(lead, 0) + c
        rest = rest - atom_polynomial(lead) * c
    return dict(sorted((b, c) for b, c in out.items() if c))


def expansion_to_json(expansion: Mapping[Exponent, int]) -> list[dict]:
    return [{"composition": list(b), "coeff": c} for b, c in sorted(expansion.items())]
