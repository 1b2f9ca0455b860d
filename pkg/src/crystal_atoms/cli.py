"""Command-line front end.

Words are given in application order: ``--word 2,1`` applies the operator
for index 2 first, then index 1, and denotes the Weyl element s_1 s_2.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reproduce, weyl
from .crystal import character, generate, to_dot, to_json
from .demazure import atom_via_operators, demazure_by_word, schubert_crystal
from .extremal import (
    is_extremal,
    is_strongly_atom_positive,
    is_weakly_atom_positive,
    lowest_weight_elements,
)
from .poly import Polynomial, atom_polynomial, expand_in_atoms, expansion_to_json, key_polynomial
from .tableau import Tableau
from .tensor import decompose, demazure_tensor_test, tensor_of_shapes


class UsageError(Exception):
    pass


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _word(text: str) -> tuple[int, ...]:
    try:
        return weyl.parse_word(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad word {text!r}") from None


def _graph(shape, rank):
    rank = len(shape) if rank is None else rank
    try:
        return generate(shape, rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _check_word(word, n):
    if any(not 1 <= i <= n - 1 for i in word):
        raise UsageError(f"word {list(word)} has letters outside 1..{n - 1}")


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _poly_json(p: Polynomial) -> dict:
    return {"pretty": p.pretty(), "terms": p.to_json()}


def cmd_crystal(args):
    G = _graph(args.shape, args.rank)
    if args.dot:
        sys.stdout.write(to_dot(G))
    elif args.json:
        _emit(to_json(G))
    else:
        print(f"B{G.shape} rank {G.n}: {G.size} vertices, {len(G.edges())} edges")
        print("character:", character(G.full()).pretty())


def cmd_demazure(args):
    G = _graph(args.shape, args.rank)
    _check_word(args.word, G.n)
    w = weyl.from_word(args.word, G.n)
    if weyl.length(w) != len(args.word):
        raise UsageError(f"word {list(args.word)} is not reduced")
    X = demazure_by_word(G, args.word)
    if args.dot:
        sys.stdout.write(to_dot(G, highlight=X))
        return
    _emit(
        {
            "shape": list(G.shape),
            "word": list(args.word),
            "weyl_element": w.to_json(),
            "size": len(X),
            "members": [t.to_json(G.n) for t in G.tableaux_of(X)],
            "character": _poly_json(character(X)),
        }
    )


def cmd_atom(args):
    if args.composition is not None:
        beta = args.composition
        shape = tuple(sorted(beta, reverse=True))
        G = _graph(shape, len(beta))
        w = weyl.min_rep_for_weight(beta)
    else:
        if args.shape is None or args.word is None:
            raise UsageError("atom needs --composition, or --shape with --word")
        G = _graph(args.shape, args.rank)
        _check_word(args.word, G.n)
        w = weyl.from_word(args.word, G.n)
        if weyl.length(w) != len(args.word):
            raise UsageError(f"word {list(args.word)} is not reduced")
        beta = weyl.act_on_weight(w, G.shape)
    A = atom_via_operators(G, w)
    _emit(
        {
            "shape": list(G.shape),
            "composition": list(beta),
            "weyl_element": w.to_json(),
            "min_coset_rep": weyl.is_min_rep(w, G.shape),
            "size": len(A),
            "members": [t.to_json(G.n) for t in G.tableaux_of(A)],
            "character": _poly_json(character(A)),
            "atom_polynomial": _poly_json(atom_polynomial(tuple(beta))),
        }
    )


def cmd_keypoly(args):
    if any(b < 0 for b in args.composition):
        raise UsageError("composition entries must be nonnegative")
    _emit({"composition": list(args.composition), "key_polynomial": _poly_json(key_polynomial(args.composition))})


def _read_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def cmd_expand(args):
    data = _read_json(args.poly)
    if isinstance(data, dict):
        data = data.get("terms", data.get("character", {}).get("terms"))
    try:
        f = Polynomial.from_json(data)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed polynomial file: {exc}") from None
    weak = is_weakly_atom_positive(f)
    _emit(
        {
            "polynomial": f.pretty(),
            "expansion": expansion_to_json(weak.expansion),
            "weakly_atom_positive": weak.positive,
            "verdict": "weakly atom-positive" if weak.positive else "not weakly atom-positive",
        }
    )


def _load_subset(G, path):
    data = _read_json(path)
    if isinstance(data, dict):
        data = data.get("members", [])
    try:
        tabs = [Tableau.from_json(d) for d in data]
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed subset file: {exc}") from None
    unknown = [str(t) for t in tabs if t not in G]
    if unknown:
        raise UsageError(f"tableaux not in B{G.shape}: {', '.join(unknown)}")
    return G.subset_of(tabs)


def cmd_extremal_check(args):
    G = _graph(args.crystal, args.rank)
    X = _load_subset(G, args.subset)
    verdict = is_extremal(X)
    weak = is_weakly_atom_positive(character(X)) if len(X) else None
    strong = is_strongly_atom_positive(X)
    out = {
        "shape": list(G.shape),
        "size": len(X),
        "extremal": verdict.extremal,
        "witness": None
        if verdict
        else {
            "index": verdict.index,
            "string": [G.tableau(v).to_json(G.n) for v in verdict.string],
            "intersection": [G.tableau(v).to_json(G.n) for v in verdict.hit],
        },
        "lowest_weight_elements": [t.to_json(G.n) for t in G.tableaux_of(lowest_weight_elements(X))]
        if verdict
        else None,
        "character": _poly_json(character(X)),
        "strongly_atom_positive": None if strong is None else [w.to_json() for w in sorted(strong)],
        "weakly_atom_positive": None if weak is None else weak.positive,
        "atom_expansion": None if weak is None else expansion_to_json(weak.expansion),
    }
    _emit(out)


def cmd_schubert(args):
    G = _graph(args.shape, args.rank)
    gens = []
    for word in args.words:
        _check_word(word, G.n)
        gens.append(weyl.from_word(word, G.n))
    try:
        ideal = weyl.LowerOrderIdeal.from_elements(gens)
        X = schubert_crystal(G, ideal)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(
        {
            "shape": list(G.shape),
            "generators": [w.to_json() for w in sorted(ideal.generators)],
            "size": len(X),
            "members": [t.to_json(G.n) for t in G.tableaux_of(X)],
            "character": _poly_json(character(X)),
        }
    )


def cmd_tensor(args):
    lam, mu = args.left, args.right
    if len(lam) != len(mu):
        raise UsageError("--left and --right must have the same number of parts")
    n = len(lam)
    try:
        T = tensor_of_shapes(lam, mu, n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.adg or args.demazure:
        words = args.demazure or (weyl.canonical_word(weyl.longest_element(n)),) * 2
        for wd in words:
            _check_word(wd, n)
        v, w = (weyl.from_word(wd, n) for wd in words)
        verdict = demazure_tensor_test(v, lam, w, mu)
        _emit({"left": [list(lam), v.to_json()], "right": [list(mu), w.to_json()], **verdict.to_json()})
        return
    _emit(
        {
            "left": list(lam),
            "right": list(mu),
            "size": T.size,
            "decomposition": [{"highest_weight": list(nu), "multiplicity": m} for nu, m in decompose(T).items()],
        }
    )


def cmd_reproduce(args):
    report = reproduce.run(args.target)
    if args.json:
        _emit(report.to_json())
    else:
        for label, ok, detail in report.checks:
            print(f"{'ok  ' if ok else 'FAIL'} {label}" + (f"  [{detail}]" if detail and not ok else ""))
        print(f"{report.target}: {'PASS' if report.passed else 'FAIL'}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crystal-atoms", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def shape_args(sp, required=True):
        sp.add_argument("--shape", type=_ints, required=required, help="partition, e.g. 3,2,0")
        sp.add_argument("--rank", type=int, default=None, help="n (default: number of parts)")

    sp = sub.add_parser("crystal", help="generate B(lambda)")
    shape_args(sp)
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_crystal)

    sp = sub.add_parser("demazure", help="Demazure crystal along a reduced word")
    shape_args(sp)
    sp.add_argument("--word", type=_word, required=True, help="reduced word, application order")
    sp.add_argument("--dot", action="store_true")
    sp.set_defaults(func=cmd_demazure)

    sp = sub.add_parser("atom", help="crystal Demazure atom via atomic operators")
    shape_args(sp, required=False)
    sp.add_argument("--word", type=_word, default=None)
    sp.add_argument("--composition", type=_ints, default=None)
    sp.set_defaults(func=cmd_atom)

    sp = sub.add_parser("keypoly", help="key polynomial of a weak composition")
    sp.add_argument("--composition", type=_ints, required=True)
    sp.set_defaults(func=cmd_keypoly)

    sp = sub.add_parser("expand", help="expand a polynomial in Demazure atoms")
    sp.add_argument("--poly", required=True, help="JSON file: [{exp, coeff}, ...]")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("extremal-check", help="analyze a subset of B(lambda)")
    sp.add_argument("--crystal", type=_ints, required=True, help="partition, e.g. 3,2,0,0")
    sp.add_argument("--rank", type=int, default=None)
    sp.add_argument("--subset", required=True, help="JSON file: list of tableaux")
    sp.set_defaults(func=cmd_extremal_check)

    sp = sub.add_parser("schubert", help="Schubert crystal of a Bruhat order ideal")
    shape_args(sp)
    sp.add_argument("--words", type=_word, nargs="+", required=True, help="one reduced word per generator")
    sp.set_defaults(func=cmd_schubert)

    sp = sub.add_parser("tensor", help="tensor products and the Demazure tensor test")
    sp.add_argument("--left", type=_ints, required=True)
    sp.add_argument("--right", type=_ints, required=True)
    sp.add_argument("--demazure", type=_word, nargs=2, metavar=("V", "W"), help="reduced words for v and w")
    sp.add_argument("--adg", action="store_true", help="report extremality and Demazure decomposability")
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("reproduce", help="recompute a worked example and diff against golden data")
    sp.add_argument("target", choices=sorted(reproduce.TARGETS))
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_reproduce)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad arguments and 0 after --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return code or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
