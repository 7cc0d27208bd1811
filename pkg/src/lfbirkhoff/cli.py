"""Command-line front end.

    lfbirkhoff verify [--seed N] [--max-poset N] [--instances N] [--json out]
    lfbirkhoff classify bfin "{1,3}<{1,3,5}" [--budget 32]
    lfbirkhoff window zgrid2 "(0,0)" "(2,2)"
    lfbirkhoff components zgrid2
    lfbirkhoff birkhoff divisor:12
    lfbirkhoff dot primePoset divisor:12
    lfbirkhoff gen lattice --seed 3 --size 5
    lfbirkhoff serve zgrid2

Finite lattices are named ``chain:k``, ``boolean:k``, ``divisor:m``, ``m3``,
``n5``, or given as a JSON file; posets as ``chain:k``, ``antichain:k`` or a
JSON file.  Infinite lattices are ``zgrid<n>``, ``ngrid<n>``, ``bfin``, or
``finite:<lattice>`` for a finite lattice seen through the oracle interface.
"""
from __future__ import annotations

import argparse
import json
import os
import shlex
import sys

import numpy as np

from . import dot as dotmod
from .errors import LatticeError
from .finlat import (
    birkhoff_iso_check, boolean_lattice, chain_lattice, divisor_lattice, lattice_from_json, m3, n5,
)
from .lazylf import FiniteAdapter, builtin, interval
from .plugin import PluginLattice, serve
from .poset import antichain, chain, ideal_lattice, poset_from_json, poset_to_json
from .representation import components_finite, components_symbolic, conjecture_probe
from .transpose import Covering, classify_prime
from .verify import SuiteConfig, random_distributive_lattices, random_poset, report_json, run_verify


# -- literal parsing ---------------------------------------------------------------

_OPEN = {"(": ")", "[": "]", "{": "}"}


def _split_top(text, sep):
    depth, parts, cur = 0, [], ""
    for ch in text:
        if ch in _OPEN:
            depth += 1
        elif ch in _OPEN.values():
            depth -= 1
        if ch == sep and depth == 0:
            parts.append(cur)
            cur = ""
        else:
            cur += ch
    parts.append(cur)
    return parts


def parse_element(text):
    """``(0,-1)`` -> tuple, ``{1,3}``/``∅`` -> sorted tuple, JSON otherwise."""
    t = text.strip()
    if t in ("∅", "{}", "set()"):
        return ()
    if t.startswith("{") and t.endswith("}"):
        return tuple(sorted(int(v) for v in t[1:-1].split(",") if v.strip()))
    if t.startswith("(") and t.endswith(")"):
        return tuple(int(v) for v in t[1:-1].split(",") if v.strip())
    try:
        v = json.loads(t)
    except json.JSONDecodeError:
        return t
    return tuple(v) if isinstance(v, list) else v


def parse_covering(text, labels=False):
    """``lower<upper`` (``⋖`` also accepted).  With ``labels`` the two sides
    are kept as strings, for finite lattices addressed by element label."""
    parts = _split_top(text.replace("⋖", "<"), "<")
    if len(parts) != 2:
        raise ValueError(f"expected 'lower<upper', got {text!r}")
    if labels:
        return parts[0].strip(), parts[1].strip()
    return parse_element(parts[0]), parse_element(parts[1])


def _element(L, text):
    return L.coerce(text.strip() if isinstance(L, FiniteAdapter) else parse_element(text))


# -- object lookup -------------------------------------------------------------------

def finite_lattice(spec):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return lattice_from_json(json.load(fh))
    name, _, arg = spec.partition(":")
    makers = {"chain": chain_lattice, "boolean": boolean_lattice, "divisor": divisor_lattice}
    if name in makers:
        return makers[name](int(arg))
    if name == "m3":
        return m3()
    if name == "n5":
        return n5()
    if name == "ideals":
        return ideal_lattice(finite_poset(arg))
    raise ValueError(f"unknown finite lattice {spec!r}")


def finite_poset(spec):
    if os.path.exists(spec):
        with open(spec, encoding="utf-8") as fh:
            return poset_from_json(json.load(fh))
    name, _, arg = spec.partition(":")
    if name == "chain":
        return chain(int(arg))
    if name == "antichain":
        return antichain(int(arg))
    raise ValueError(f"unknown poset {spec!r}")


def lattice(spec, plugin=None):
    if plugin:
        if plugin.endswith((".jsonl", ".json")) and os.path.exists(plugin):
            return PluginLattice.from_file(plugin, name=spec or "plugin")
        return PluginLattice.from_command(shlex.split(plugin), name=spec or "plugin")
    if spec.startswith("finite:"):
        return FiniteAdapter(finite_lattice(spec[len("finite:"):]), name=spec)
    return builtin(spec)


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True) + "\n"


# -- subcommands ---------------------------------------------------------------------

def cmd_verify(args):
    cfg = SuiteConfig(max_poset_size=args.max_poset, random_instances=args.instances, seed=args.seed,
                      window_radius=args.radius, chain_budget=args.budget)
    extra = [finite_lattice(p) for p in args.lattice or []]
    report = run_verify(cfg, suites=args.suite, extra_lattices=extra)
    _emit(report_json(report), args.json)
    for r in report["lemmas"]:
        mark = "ok  " if not r["failures"] else "FAIL"
        print(f"{mark} {r['lemma']:<52} {r['instances']:>7} instances  {len(r['failures'])} failures",
              file=sys.stderr)
    if not report["ok"]:
        w = report["firstFailure"]
        print(f"first failure in {w['lemma']}: {json.dumps(w, ensure_ascii=False)}", file=sys.stderr)
        return 1
    return 0


def cmd_classify(args):
    L = lattice(args.lattice, args.plugin)
    lo, hi = parse_covering(args.covering, labels=isinstance(L, FiniteAdapter))
    c = Covering(L.coerce(lo), L.coerce(hi))
    v = classify_prime(L, c, args.budget)
    _emit(_dump(v.to_json(L)), args.json)
    return 0


def cmd_window(args):
    L = lattice(args.lattice, args.plugin)
    W = interval(L, _element(L, args.a), _element(L, args.b), max_size=args.limit)
    out = {
        "lattice": L.name,
        "a": L.encode(W.a),
        "b": L.encode(W.b),
        "size": len(W),
        "distributive": W.as_lattice.distributive,
        "joinIrreducibles": [L.encode(j) for j in W.join_irreducibles],
    }
    if args.covering:
        lo, hi = parse_covering(args.covering, labels=isinstance(L, FiniteAdapter))
        sep = W.separator(L.coerce(lo), L.coerce(hi))
        out["separator"] = {"generator": L.encode(sep.generator),
                            "members": sorted((L.encode(z) for z in sep.members), key=json.dumps)}
    if args.list:
        out["elements"] = [L.encode(z) for z in W.elements]
    _emit(_dump(out), args.json)
    return 0


def cmd_components(args):
    if args.poset:
        rep = components_finite(finite_poset(args.poset)).to_json()
    elif args.probe:
        rep = conjecture_probe(lattice(args.lattice, args.plugin), radius=args.radius)
    else:
        rep = components_symbolic(lattice(args.lattice)).to_json()
    _emit(_dump(rep), args.json)
    return 0


def cmd_birkhoff(args):
    L = finite_lattice(args.source)
    rep = birkhoff_iso_check(L)
    J, idx = L.join_irreducible_poset
    out = rep.to_json()
    out["joinIrreducibles"] = [L.label(j) for j in idx]
    out["forward"] = {L.label(x): [L.label(idx[k]) for k in range(len(idx)) if m >> k & 1]
                      for x, m in enumerate(rep.forward)}
    _emit(_dump(out), args.json)
    return 0 if rep.holds else 1


def cmd_dot(args):
    if args.object == "idealGraph":
        text = dotmod.ideal_graph_dot(finite_poset(args.source))
    else:
        L = finite_lattice(args.source)
        if L.n > args.limit:
            raise LatticeError(f"{L.n} elements exceed --limit {args.limit}")
        fn = {"lattice": dotmod.lattice_dot, "filterLattice": dotmod.filter_lattice_dot,
              "primePoset": dotmod.prime_poset_dot}[args.object]
        text = fn(L)
    _emit(text, args.json)
    return 0


def cmd_gen(args):
    rng = np.random.default_rng(args.seed)
    if args.kind == "poset":
        out = poset_to_json(random_poset(rng, args.size))
    else:
        (L,) = random_distributive_lattices(rng, 1, args.limit)
        out = poset_to_json(L.poset)
    _emit(_dump(out), args.json)
    return 0


def cmd_serve(args):
    serve(builtin(args.lattice), sys.stdin, sys.stdout)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="lfbirkhoff", description="Distributive lattices, prime filters "
                                 "and locally-finite representations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", metavar="OUT", help="write output to this file instead of stdout")
        p.add_argument("--plugin", metavar="PATH", help="JSON-lines oracle: a command or a static .jsonl file")

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-poset", type=int, default=5)
    p.add_argument("--instances", type=int, default=500)
    p.add_argument("--radius", type=int, default=10)
    p.add_argument("--budget", type=int, default=32)
    p.add_argument("--suite", action="append", help="run only this suite (repeatable)")
    p.add_argument("--lattice", action="append", help="extra finite lattice JSON to check (repeatable)")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("classify", help="principal/secondary verdict for a covering")
    p.add_argument("lattice")
    p.add_argument("covering", help="e.g. '(0,0)<(1,0)' or '{1,3}<{1,3,5}'")
    p.add_argument("--budget", type=int, default=32)
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("window", help="finite interval [a, b] of a lattice")
    p.add_argument("lattice")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--covering", help="also report the window separator of this covering")
    p.add_argument("--list", action="store_true", help="include the element list")
    p.add_argument("--limit", type=int, default=4096)
    common(p)
    p.set_defaults(fn=cmd_window)

    p = sub.add_parser("components", help="connected components of the prime-ideal graph")
    p.add_argument("lattice", nargs="?", default="zgrid2")
    p.add_argument("--poset", help="finite poset instead of a built-in lattice")
    p.add_argument("--probe", action="store_true", help="report window widths next to component counts")
    p.add_argument("--radius", type=int, default=3)
    common(p)
    p.set_defaults(fn=cmd_components)

    p = sub.add_parser("birkhoff", help="check the Birkhoff isomorphism of a finite lattice")
    p.add_argument("source")
    common(p)
    p.set_defaults(fn=cmd_birkhoff)

    p = sub.add_parser("dot", help="Graphviz output")
    p.add_argument("object", choices=["lattice", "filterLattice", "primePoset", "idealGraph"])
    p.add_argument("source")
    p.add_argument("--limit", type=int, default=64)
    common(p)
    p.set_defaults(fn=cmd_dot)

    p = sub.add_parser("gen", help="random poset or distributive lattice as JSON")
    p.add_argument("kind", choices=["poset", "lattice"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=5)
    p.add_argument("--limit", type=int, default=16)
    common(p)
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("serve", help="answer oracle requests for a built-in lattice on stdin/stdout")
    p.add_argument("lattice", nargs="?", default="zgrid2")
    p.set_defaults(fn=cmd_serve)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (LatticeError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
