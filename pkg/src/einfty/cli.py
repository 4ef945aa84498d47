"""Command-line entry point ``einfty``.

Exit status: 0 on success, 1 when a relation or no-go check fails, 2 on
input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cubical as C
from . import simplicial as S
from .algebra import Chain, Ring
from .catalog import EXAMPLES
from .comparison import cs_map, ez_word
from .complexes import ComplexError, LatticeCubicalComplex, load_complex, triangulate
from .dsl import TermSyntaxError, parse_term, render_term
from .homology import (
    CohomologyMod2, cup_product, ez_is_quasi_isomorphism, homology,
    sq_agrees_under_ez, steenrod_report,
)
from .terms import ArityError, evaluate
from .verify import SUITES, counterexamples


class InputError(Exception):
    pass


def _complex(args):
    if not args.input:
        raise InputError("--input is required (a JSON file, or one of: " + ", ".join(EXAMPLES) + ")")
    if args.input in EXAMPLES and not os.path.exists(args.input):
        return EXAMPLES[args.input]()
    return load_complex(args.input)


def _emit(args, payload, text: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    else:
        print(text)


def _render_cell(c) -> str:
    if isinstance(c, str):
        return c
    if c and isinstance(c[0], tuple):
        return "x".join(f"[{a}]" if a == b else f"[{a},{b}]" for a, b in c)
    return S.render(c)


# commands ------------------------------------------------------------------------

def cmd_homology(args) -> int:
    X = _complex(args)
    ring = Ring.parse(args.ring)
    groups = homology(X, ring)
    payload = [{"degree": g.degree, "betti": g.betti, "torsion": list(g.torsion)} for g in groups]
    _emit(args, {"ring": repr(ring), "homology": payload},
          "\n".join(f"H_{g.degree}({repr(ring)}) = {g}" for g in groups))
    return 0


def cmd_cohomology(args) -> int:
    X = _complex(args)
    H = CohomologyMod2(X)
    out, lines = [], []
    for d in range(X.dim + 1):
        reps = [[_render_cell(c) for c in r.support()] for r in H.basis(d)]
        out.append({"degree": d, "dimension": len(reps), "representatives": reps})
        lines.append(f"H^{d}(Z/2): dimension {len(reps)}")
        for k, r in enumerate(reps):
            lines.append(f"  a{d}_{k}: " + (" + ".join(r) if r else "0"))
    table = _cup_table(H)
    lines.append("cup products (basis coordinates):")
    for row in table:
        lines.append(f"  a{row['p']}_{row['i']} ⌣ a{row['q']}_{row['j']} = {row['product']}")
    _emit(args, {"cohomology": out, "cup": table}, "\n".join(lines))
    return 0


def _cup_table(H: CohomologyMod2) -> list:
    X = H.X
    rows = []
    for p in range(X.dim + 1):
        for q in range(p, X.dim - p + 1):
            if p + q > X.dim:
                continue
            for i, a in enumerate(H.basis(p)):
                for j, b in enumerate(H.basis(q)):
                    rows.append({"p": p, "i": i, "q": q, "j": j,
                                 "product": list(H.express(cup_product(a, b)))})
    return rows


def cmd_sq(args) -> int:
    X = _complex(args)
    if args.k is None or args.k < 0:
        raise InputError("sq needs --k >= 0")
    report = steenrod_report(X, args.k)
    lines = []
    for r in report:
        tors = "".join(f" + Z/{t}" for t in r["torsion"])
        lines.append(f"degree {r['degree']}: dim H^{r['degree']}(Z/2) = {r['betti']}"
                     f" (integral torsion in H_{r['degree']}: {tors[3:] or 'none'})")
        lines.append(f"  Sq^{args.k}: H^{r['degree']} -> H^{r['degree'] + args.k} matrix {r['sq']['matrix']}")
    _emit(args, report, "\n".join(lines))
    return 0


def _parse_element(text: str, side: str) -> tuple:
    parts = [p for p in text.replace("⊗", "|").split("|")]
    if side == "cubical":
        words = tuple(C.parse_word(p) for p in parts)
    else:
        words = tuple(S.parse_simplex(p) for p in parts)
    return words


def cmd_eval(args) -> int:
    if not args.term:
        raise InputError("eval needs --term")
    term = parse_term(args.term)
    if args.input and (os.path.exists(args.input) or args.input in EXAMPLES):
        X = _complex(args)
        if term.inputs != 1:
            raise InputError(f"pushforward on a complex needs a one-input term, got arity {term.arity}")
        d = X.dim if args.n is None else args.n
        result = {}
        lines = []
        for c in X.cells(d):
            val = X.pushforward_cell(term, c)
            txt = val.format(lambda k: " ⊗ ".join(_render_cell(x) for x in k))
            result[_render_cell(c)] = txt
            lines.append(f"{_render_cell(c)} -> {txt}")
        _emit(args, {"term": render_term(term), "cells": result}, "\n".join(lines))
        return 0
    if not args.input:
        raise InputError("eval needs --input (a word such as '[01][01]', or a complex)")
    side = args.side
    key = _parse_element(args.input, side)
    if len(key) != term.inputs:
        raise InputError(f"term takes {term.inputs} inputs, got {len(key)} factors")
    if side == "cubical" and len({len(w) for w in key}) > 1:
        raise InputError("all cube words must live in the same cube")
    ring = Ring.parse(args.ring)
    out = evaluate(term, Chain.basis(key, ring=ring), side)
    render = C.render_tensor if side == "cubical" else S.render_tensor
    text = out.format(render)
    _emit(args, {"term": render_term(term), "side": side, "result": text}, text)
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite in (None, "all") else [args.suite]
    reports = []
    for name in names:
        if name not in SUITES:
            raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
        kwargs = {}
        if args.n is not None:
            kwargs["n"] = args.n
        if name == "bialgebra":
            kwargs["seed"] = args.seed
        if args.i is not None and name in ("cupi", "coherence"):
            kwargs["imax"] = args.i
        if args.k is not None and name == "cs":
            kwargs["kmax"] = args.k
        reports.append(SUITES[name](**kwargs))
    ok = all(r.passed for r in reports)
    _emit(args, {"passed": ok, "suites": [r.to_json() for r in reports]},
          "\n".join(r.text() for r in reports))
    return 0 if ok else 1


def cmd_triangulate(args) -> int:
    X = _complex(args)
    if not isinstance(X, LatticeCubicalComplex):
        raise InputError("triangulate needs a lattice cubical complex")
    T = triangulate(X)
    facets = [list(f) for f in T.facets()]
    payload = {"facets": facets, "points": [list(p) for p in T.points], "ranks": T.ranks()}
    text = (f"{len(T.points)} vertices; simplices per degree {T.ranks()}\n"
            + "\n".join(S.render(tuple(f)) for f in facets))
    _emit(args, payload, text)
    return 0


def cmd_compare(args) -> int:
    if args.input:
        X = _complex(args)
        if not isinstance(X, LatticeCubicalComplex):
            raise InputError("compare needs a lattice cubical complex")
        T = triangulate(X)
        hx = [str(g) for g in homology(X)]
        ht = [str(g) for g in homology(T)]
        qi = ez_is_quasi_isomorphism(X, T)
        sq = {k: sq_agrees_under_ez(X, k, T) for k in range(X.dim + 1)}
        ok = hx == ht and qi and all(sq.values())
        payload = {"homology": hx, "homology_triangulated": ht, "ez_quasi_isomorphism": qi,
                   "sq_agree": {str(k): v for k, v in sq.items()}, "passed": ok}
        text = (f"H(X)   = {hx}\nH(T X) = {ht}\nEZ quasi-isomorphism: {qi}\n"
                + "\n".join(f"Sq^{k} agrees under EZ: {v}" for k, v in sq.items()))
        _emit(args, payload, text)
        return 0 if ok else 1
    n = 2 if args.n is None else args.n
    if n < 1:
        raise InputError("compare needs --n >= 1")
    top = C.top_word(n)
    cs, ez = cs_map(top), ez_word(top)
    _emit(args, {"word": C.render(top), "cs": cs.format(S.render), "ez": ez.format(S.render_product)},
          f"CS({C.render(top)}) = {cs.format(S.render)}\nEZ({C.render(top)}) = {ez.format(S.render_product)}")
    return 0


def cmd_counterexamples(args) -> int:
    nogos = counterexamples()
    ok = all(ng.holds for ng in nogos)
    payload = {"passed": ok, "counterexamples": [
        {"name": ng.name, "left": ng.lhs.format(ng.render), "right": ng.rhs.format(ng.render),
         "reproduced": ng.holds, "note": ng.note} for ng in nogos]}
    _emit(args, payload, "\n".join(("ok   " if ng.holds else "FAIL ") + ng.text() for ng in nogos))
    return 0 if ok else 1


COMMANDS = {
    "homology": cmd_homology,
    "cohomology": cmd_cohomology,
    "sq": cmd_sq,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "triangulate": cmd_triangulate,
    "compare": cmd_compare,
    "counterexamples": cmd_counterexamples,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="einfty", description="E-infinity structure on cubical and simplicial chains")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--input", help="complex JSON file, catalog name, or a chain element for eval")
        sp.add_argument("--ring", default="Z", help="Z or Z/p (default Z)")
        sp.add_argument("--term", help="cooperation term in the DSL")
        sp.add_argument("--n", type=int, help="dimension bound or cell degree")
        sp.add_argument("--i", type=int, help="cup-i bound")
        sp.add_argument("--k", type=int, help="Steenrod square index or shuffle arity bound")
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
        sp.add_argument("--json", action="store_true", help="emit JSON")
        sp.add_argument("--side", choices=("cubical", "simplicial"), default="cubical")
        sp.add_argument("--suite", help="verify suite name or 'all'")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ComplexError, TermSyntaxError, ArityError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
