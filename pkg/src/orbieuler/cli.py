"""Command-line front end.

    orbieuler chi     --group S_3 --space natural -k 2
    orbieuler series  -k 0 --euler 2 --degree 4
    orbieuler verify  --group Z_2 --space regular -k 1 --degree 5
    orbieuler wreath  --group Z_2 -n 3
    orbieuler lie     S1/Z_4 -k 3
    orbieuler lie     --check-paper

Every command prints one report (JSON by default, ``--format csv`` for a
flat table) and exits 0 iff all cross-checks it ran agreed.  Budgets default
to the library values; ``OEC_BUDGET`` overrides them.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from .group_core import FiniteGroup, GroupError, build_group, generated_subgroup
from .gspace import (FiniteGSet, GSetError, build_gset, coset_gset, disjoint_union, natural_gset,
                     regular_gset, trivial_gset)
from .lie_models import ModelError, check_paper_examples, chi_k_model, parse_model
from .orbifold import BudgetExceeded, chi_k, chi_k_by_orbit_types, chi_k_oracle
from .series import lhs_series, macdonald_series, rhs_series
from .wreath import (enumerate_types, type_class_data, type_of, wreath_group)

MAX_DEGREE = 64


def _load_json(text: str):
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    path = Path(text)
    if path.suffix == ".json" and path.exists():
        return json.loads(path.read_text())
    return None


def load_group(text: str) -> FiniteGroup:
    spec = _load_json(text)
    return build_group(spec if spec is not None else text)


def random_gset(G: FiniteGroup, points: int, seed: int) -> FiniteGSet:
    """A union of coset spaces ``G/<g>`` for random ``g``, with at least ``points`` points."""
    rng = np.random.default_rng(seed)
    parts, total = [], 0
    while total < points:
        H = generated_subgroup(G, [int(rng.integers(G.order))])
        parts.append(coset_gset(G, H))
        total += parts[-1].size
    return disjoint_union(*parts) if parts else trivial_gset(G, 0)


def load_space(G: FiniteGroup, text: str, seed: int = 0) -> FiniteGSet:
    """Space shorthands: ``regular``, ``natural``, ``trivial:M``, ``cosets:g1,g2``,
    ``random:M``, ``empty``, or a JSON action description (inline or a file)."""
    spec = _load_json(text)
    if spec is not None:
        return build_gset(G, spec)
    name, _, arg = text.partition(":")
    if name == "regular":
        return regular_gset(G)
    if name == "natural":
        return natural_gset(G)
    if name == "trivial":
        return trivial_gset(G, int(arg or 1))
    if name == "empty":
        return trivial_gset(G, 0)
    if name == "cosets":
        gens = [int(x) for x in arg.split(",") if x]
        return coset_gset(G, generated_subgroup(G, gens))
    if name == "random":
        return random_gset(G, int(arg or 4), seed)
    raise GSetError(f"unknown space description {text!r}")


# ---------------------------------------------------------------------------
# commands


def cmd_chi(args) -> dict:
    G = load_group(args.group)
    X = load_space(G, args.space, args.seed)
    results = [{"engine": "classes", "value": chi_k(X, args.k)}]
    if args.k >= 1:
        try:
            results.append({"engine": "tuples", "value": chi_k_oracle(X, args.k, args.tuple_budget)})
        except BudgetExceeded as exc:
            results.append({"engine": "tuples", "value": None, "skipped": str(exc)})
    if G.order <= args.subgroup_bound:
        results.append({"engine": "orbit-types", "value": chi_k_by_orbit_types(X, args.k, args.subgroup_bound)})
    values = {r["value"] for r in results if r["value"] is not None}
    return {"command": "chi",
            "inputs": {"group": args.group, "order": G.order, "space": args.space, "points": X.size, "k": args.k},
            "results": results, "agreement": len(values) == 1}


def cmd_series(args) -> dict:
    rhs = rhs_series(args.k, args.euler, args.degree).tolist()
    results = [{"engine": "product", "value": rhs}]
    agreement = True
    if args.k == 0:
        mac = macdonald_series(args.euler, args.degree).tolist()
        results.append({"engine": "macdonald", "value": mac})
        agreement = mac == rhs
    return {"command": "series", "inputs": {"k": args.k, "euler": args.euler, "degree": args.degree},
            "results": results, "agreement": agreement}


def cmd_verify(args) -> dict:
    G = load_group(args.group)
    X = load_space(G, args.space, args.seed)
    E = chi_k(X, args.k)
    lhs = lhs_series(X, args.k, args.degree, root_shortcut=args.use_lemma3_shortcut, engine=args.engine).tolist()
    rhs = rhs_series(args.k, E, args.degree).tolist()
    return {"command": "verify",
            "inputs": {"group": args.group, "space": args.space, "k": args.k, "degree": args.degree,
                       "euler": E, "use_lemma3_shortcut": args.use_lemma3_shortcut},
            "results": [{"engine": f"wreath-{args.engine}", "value": lhs},
                        {"engine": "product", "value": rhs}],
            "agreement": lhs == rhs}


def cmd_wreath(args) -> dict:
    G = load_group(args.group)
    n = args.n
    rows = []
    for tau in enumerate_types(G, n):
        size, cent = type_class_data(G, n, tau)
        rows.append({"type": str(tau), "class_size": size, "centralizer_order": cent})
    results = [{"engine": "types", "value": rows}]
    agreement = True
    try:
        W = wreath_group(G, n, budget=args.group_budget)
    except BudgetExceeded as exc:
        results.append({"engine": "bruteforce", "value": None, "skipped": str(exc)})
    else:
        brute = {}
        for cls in W.classes:
            tau = str(type_of(G, W.labels[cls.representative]))
            brute[tau] = {"type": tau, "class_size": cls.size, "centralizer_order": W.order // cls.size}
        brute_rows = [brute.get(r["type"]) for r in rows]
        agreement = len(brute) == len(rows) and brute_rows == rows
        results.append({"engine": "bruteforce", "value": brute_rows})
    return {"command": "wreath", "inputs": {"group": args.group, "order": G.order, "n": n},
            "results": results, "agreement": agreement}


def cmd_lie(args) -> dict:
    if args.check_paper:
        rows = check_paper_examples(args.m_max, args.k_max)
        results = [{"engine": "integral", "model": r.model, "k": r.k, "value": r.computed,
                    "reference": r.reference, "agrees": r.agrees, "known_deviation": r.known_deviation,
                    **({"note": r.note} if r.note else {})} for r in rows]
        # agreement means: every row matches its reference except the documented deviations
        agreement = all(r.agrees != r.known_deviation for r in rows)
        return {"command": "lie", "inputs": {"check_paper": True, "m_max": args.m_max, "k_max": args.k_max},
                "results": results, "agreement": agreement}
    if not args.model:
        raise ModelError("lie needs a model string or --check-paper")
    X = parse_model(args.model)
    return {"command": "lie", "inputs": {"model": args.model, "k": args.k},
            "results": [{"engine": "integral", "value": chi_k_model(X, args.k)}], "agreement": True}


# ---------------------------------------------------------------------------
# output


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["command", "engine", "degree", "value", "agreement"])
    for r in report["results"]:
        engine = r["engine"]
        if "model" in r:
            engine = f"{engine}:{r['model']}:k={r['k']}"
        value = r["value"]
        if isinstance(value, list) and all(isinstance(v, int) for v in value):
            for d, c in enumerate(value):
                w.writerow([report["command"], engine, d, c, report["agreement"]])
        elif isinstance(value, list):
            for i, v in enumerate(value):
                w.writerow([report["command"], engine, i, json.dumps(v), report["agreement"]])
        else:
            w.writerow([report["command"], engine, "", value, report["agreement"]])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orbieuler", description="Higher-order orbifold Euler characteristics.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for random:M spaces")
    common.add_argument("--tuple-budget", type=int, default=None)
    common.add_argument("--group-budget", type=int, default=None)
    common.add_argument("--subgroup-bound", type=int, default=24)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chi", parents=[common], help="chi^(k)(X, G) by every applicable engine")
    s.add_argument("--group", required=True)
    s.add_argument("--space", required=True)
    s.add_argument("-k", type=int, default=1)
    s.set_defaults(func=cmd_chi)

    s = sub.add_parser("series", parents=[common], help="coefficients of the product side")
    s.add_argument("-k", "--k", type=int, required=True)
    s.add_argument("--euler", type=int, required=True)
    s.add_argument("-N", "--degree", type=int, default=8)
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("verify", parents=[common], help="compare both sides of the wreath identity")
    s.add_argument("--group", required=True)
    s.add_argument("--space", required=True)
    s.add_argument("-k", type=int, default=1)
    s.add_argument("-N", "--degree", type=int, default=4)
    s.add_argument("--engine", choices=("types", "explicit"), default="types")
    s.add_argument("--use-lemma3-shortcut", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("wreath", parents=[common], help="type table of G wr S_n")
    s.add_argument("--group", required=True)
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(func=cmd_wreath)

    s = sub.add_parser("lie", parents=[common], help="circle / O(2) models")
    s.add_argument("model", nargs="?")
    s.add_argument("-k", type=int, default=1)
    s.add_argument("--check-paper", action="store_true")
    s.add_argument("--m-max", type=int, default=6)
    s.add_argument("--k-max", type=int, default=4)
    s.set_defaults(func=cmd_lie)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    for name in ("tuple_budget", "group_budget"):
        val = getattr(args, name)
        if val is not None and val <= 0:
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    if getattr(args, "degree", 0) > MAX_DEGREE:
        print(f"error: degree bound is limited to {MAX_DEGREE}", file=sys.stderr)
        return 2
    try:
        report = args.func(args)
    except (GroupError, GSetError, ModelError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "csv":
        sys.stdout.write(to_csv(report))
    else:
        print(json.dumps(report, indent=2, default=str))
    return 0 if report["agreement"] else 1


if __name__ == "__main__":
    sys.exit(main())
