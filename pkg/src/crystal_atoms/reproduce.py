"""Recompute the worked figures and examples and diff them against golden data."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from . import golden, weyl
from .crystal import components, generate, character, levi_branch
from .demazure import (
    atom_decomposition,
    atom_via_difference,
    atom_via_operators,
    atoms_by_word,
    demazure_crystal,
    union_of_atoms,
)
from .extremal import (
    e_closure,
    extremal_closure,
    is_connected,
    is_extremal,
    is_strongly_atom_positive,
    is_weakly_atom_positive,
    lowest_weight_elements,
)
from .poly import expansion_to_json
from .tableau import lower, raise_


@dataclass
class Report:
    target: str
    checks: list[tuple[str, bool, str]] = field(default_factory=list)
    artifacts: dict = field(default_factory=dict)

    def check(self, label: str, ok: bool, detail: str = ""):
        self.checks.append((label, bool(ok), detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "status": "PASS" if self.passed else "FAIL",
            "checks": [{"check": c, "pass": ok, "detail": d} for c, ok, d in self.checks],
            "artifacts": self.artifacts,
        }


def _tabs(G, X):
    return [t.to_json(G.n) for t in G.tableaux_of(X)]


def figure1() -> Report:
    rep = Report("figure1")
    G = generate(golden.FIGURE1_SHAPE)
    n = G.n
    w = weyl.from_word(golden.FIGURE1_WORD, n)
    B = demazure_crystal(G, w)
    expected = {t for ts in golden.FIGURE1_ATOMS.values() for t in ts}
    rep.check("9 vertices", len(B) == 9, f"got {len(B)}")
    rep.check("vertex set", set(G.tableaux_of(B)) == expected)
    for t, i, u in golden.FIGURE1_EDGES:
        rep.check(f"f_{i} {t} -> {u}", lower(i, t, n) == u)
    sizes = []
    for word, ts in golden.FIGURE1_ATOMS.items():
        A = atoms_by_word(G, word)
        D = atom_via_difference(G, weyl.from_word(word, n))
        sizes.append(len(A))
        rep.check(f"atom {list(word)} by operators", set(G.tableaux_of(A)) == set(ts))
        rep.check(f"atom {list(word)} by difference", A == D)
    rep.check("block sizes 1,2,1,5", sizes == [1, 2, 1, 5], str(sizes))
    rep.artifacts = {
        "demazure": _tabs(G, B),
        "atoms": {",".join(map(str, wd)) or "id": _tabs(G, atoms_by_word(G, wd)) for wd in golden.FIGURE1_ATOMS},
        "character": character(B).pretty(),
    }
    return rep


def weak_atom() -> Report:
    rep = Report("ex-weak-atom")
    G = generate(golden.WEAK_ATOM_SHAPE)
    X = G.subset_of(golden.WEAK_ATOM_X)
    weak = is_weakly_atom_positive(character(X))
    rep.check("extremal", is_extremal(X))
    rep.check("weakly atom-positive", weak.positive)
    rep.check("expansion", weak.expansion == golden.WEAK_ATOM_EXPANSION, str(weak.expansion))
    rep.check("not strongly atom-positive", is_strongly_atom_positive(X) is None)
    rep.artifacts = {"character": character(X).pretty(), "expansion": expansion_to_json(weak.expansion)}
    return rep


def figure2() -> Report:
    rep = Report("figure2")
    G = generate(golden.FIGURE2_SHAPE)
    B = demazure_crystal(G, weyl.from_word(golden.FIGURE2_WORD, G.n))
    X = G.subset_of(golden.FIGURE2_X)
    rep.check("Demazure crystal has 20 vertices", len(B) == 20, f"got {len(B)}")
    rep.check("X + greyed = Demazure crystal", set(G.tableaux_of(B)) == set(golden.FIGURE2_X) | set(golden.FIGURE2_GREYED))
    rep.check("17 highlighted", len(X) == 17)
    rep.check("X extremal", is_extremal(X))
    weak = is_weakly_atom_positive(character(X))
    coeff = weak.expansion.get(golden.FIGURE2_NEGATIVE, 0)
    rep.check("coefficient -1 on A_(1,3,0,1)", coeff == -1, f"got {coeff}")
    rep.check("not weakly atom-positive", not weak.positive)
    low = lowest_weight_elements(X)
    t = golden.FIGURE2_LOWEST_NONEXTREMAL
    rep.check("f1^2 f2 b is a lowest weight element", G.index(t) in low)
    top = G.weights[G.highest]
    rep.check("... of non-extremal weight", sorted(G.weights[G.index(t)]) != sorted(top))
    rep.check("X is E-generated by its lowest weight elements", e_closure(low) == X)
    atom = atom_via_difference(G, weyl.from_word(golden.FIGURE2_WORD, G.n))
    rep.check("atom A_{s1s3s2} is disconnected", not is_connected(atom))
    rep.artifacts = {
        "character": character(X).pretty(),
        "expansion": expansion_to_json(weak.expansion),
        "lowest_weight_elements": _tabs(G, low),
    }
    return rep


def atom_not_extremal() -> Report:
    rep = Report("ex-4.5")
    i, j, k = golden.ATOM_NOT_EXTREMAL_IJK
    G = generate(golden.ATOM_NOT_EXTREMAL_SHAPE)
    lam = G.weights[G.highest]
    n = G.n
    words = [(), (j,), (j, i), (j, i, k)]
    ws = [weyl.from_word(wd, n) for wd in words]
    rep.check("s_i s_k = s_k s_i", weyl.from_word((i, k), n) == weyl.from_word((k, i), n))
    rep.check("s_j, s_i s_j, s_k s_i s_j in W^lambda", all(weyl.is_min_rep(w, lam) for w in ws[1:]))
    atoms = [atom_via_difference(G, w) for w in ws]
    rep.check("atoms nonempty", all(len(A) for A in atoms))
    X = union_of_atoms(G, ws)
    rep.check("connected", is_connected(X))
    rep.check("strongly atom-positive", is_strongly_atom_positive(X) == set(ws))
    verdict = is_extremal(X)
    rep.check("not extremal", not verdict)
    rep.artifacts = {
        "size": len(X),
        "witness": None if verdict else {"index": verdict.index, "string": [str(G.tableau(v)) for v in verdict.string], "hit": [str(G.tableau(v)) for v in verdict.hit]},
    }
    return rep


def ex48() -> Report:
    rep = Report("ex-4.8")
    G = generate(golden.EX48_SHAPE)
    n = G.n
    x = golden.EX48_X
    rep.check("x is a vertex", x in G)
    rep.check("f1(x)=f2(x)=0", lower(1, x, n) is None and lower(2, x, n) is None)
    rep.check("e3(x)=e4(x)=e5(x)=0", all(raise_(i, x, n) is None for i in (3, 4, 5)))
    y = raise_(2, x, n)
    rep.check("e2(x)", y == golden.EX48_E2, str(y))
    rep.check("e3 e2(x) != 0", raise_(3, y, n) is not None)
    z = lower(3, y, n)
    rep.check("f3 e2(x)", z == golden.EX48_F3E2, str(z))
    rep.check("e2 f3 e2(x) != 0", raise_(2, z, n) is not None)
    u = lower(2, z, n)
    rep.check("f2 f3 e2(x)", u == golden.EX48_F2F3E2, str(u))
    rep.check("f2 f3 e2(x) = f3(x)", u == lower(3, x, n))
    C = extremal_closure(G.subset_of([x]))
    rep.check("closure of {x} contains f3(x)", G.index(lower(3, x, n)) in C)
    rep.check("closure is extremal", is_extremal(C))
    rep.check("x not a lowest weight element of the closure", G.index(x) not in lowest_weight_elements(C))
    rep.artifacts = {"chain": [str(t) for t in (x, y, z, u)], "closure_size": len(C)}
    return rep


def ex49() -> Report:
    rep = Report("ex-4.9")
    G = generate(golden.EX49_SHAPE)
    comp = next(c for c in levi_branch(G, golden.EX49_J) if G.highest in c)
    rep.check("X has 126 vertices", len(comp) == 126, f"got {len(comp)}")
    rep.check("X = tableaux with entries <= 5", all(max(G.tableau(v).entries()) <= 5 for v in comp))
    Y1, Y2 = G.subset_of(golden.EX49_Y1), G.subset_of(golden.EX49_Y2)
    rep.check("|Y1| = |Y2| = 12", len(Y1) == 12 and len(Y2) == 12)
    rep.check("X extremal", is_extremal(comp))
    A, B = comp | Y1, comp | Y2
    rep.check("X u Y1 extremal", is_extremal(A))
    rep.check("X u Y2 extremal", is_extremal(B))
    rep.check("equal characters", character(A) == character(B))
    rep.check("differ in exactly 4 vertices", len(A.members ^ B.members) == 4)
    rep.check("connected", is_connected(A) and is_connected(B))
    for name, S in (("X u Y1", A), ("X u Y2", B)):
        ok = all(
            is_extremal(G.subset(c), labels=golden.EX49_J)
            for c in components(G, S.members, labels=golden.EX49_J)
        )
        rep.check(f"{name} Levi-branched components extremal", ok)
    rep.artifacts = {"character_terms": len(character(A)), "size": len(A)}
    return rep


TARGETS: dict[str, Callable[[], Report]] = {
    "figure1": figure1,
    "figure2": figure2,
    "ex-weak-atom": weak_atom,
    "ex-4.5": atom_not_extremal,
    "ex-4.8": ex48,
    "ex-4.9": ex49,
}


def run(target: str) -> Report:
    try:
        fn = TARGETS[target]
    except KeyError:
        raise ValueError(f"unknown target {target!r}; choose from {sorted(TARGETS)}") from None
    return fn()
