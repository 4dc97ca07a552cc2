"""Command-line driver: ``python -m rankone {catalog,decompose,verify,oracle}``.

Exit codes: 0 success, 1 a failed verdict or oracle mismatch, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import catalog, models, sweep
from .errors import ConfigError
from .sections import decompose
from .wonderful import variety_from_config

log = logging.getLogger("rankone")


def parse_weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part.strip():
            out.append(int(part))
    return out


def format_weight(w) -> str:
    """``(-1, 1)`` -> ``'-w1 + w2'``."""
    terms = []
    for i, c in enumerate(w, start=1):
        if c == 0:
            continue
        coef = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        terms.append((sign, f"{coef}w{i}"))
    if not terms:
        return "0"
    head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    return " ".join([head] + [f"{s} {t}" for s, t in terms[1:]])


def _load_json_arg(text: str):
    if text.startswith("@"):
        with open(text[1:]) as fh:
            return json.load(fh)
    return json.loads(text)


def _variety_doc(args) -> dict:
    if getattr(args, "variety", None):
        return _load_json_arg(args.variety)
    if not args.family:
        raise ConfigError("give --family (and --n for 9B/9C) or --variety")
    doc = {"family": args.family}
    if args.n is not None:
        doc["n"] = args.n
    return doc


# ----------------------------------------------------------------- catalog

_GENERIC = {"9B": "B_n (n>=2)", "9C": "C_n (n>=2)"}


def cmd_catalog(args) -> int:
    if args.family is None:
        rows = []
        for entry in catalog.builtin_entries(2):
            rows.append({
                "family": entry.family,
                "group": _GENERIC.get(entry.family, entry.group.name),
                "gamma": format_weight(entry.gamma) if entry.gamma is not None else "-",
                "pic": ", ".join(format_weight(g) for g in entry.pic_generators),
                "treatment": entry.treatment.value,
            })
        if args.json:
            print(json.dumps(rows, indent=1))
        else:
            print(f"{'family':<7} {'group':<12} {'gamma':<10} {'pic generators':<16} treatment")
            for r in rows:
                print(f"{r['family']:<7} {r['group']:<12} {r['gamma']:<10} {r['pic']:<16} {r['treatment']}")
        return 0
    entry = catalog.get_entry(args.family, args.n)
    doc = {
        "label": entry.label,
        "group": entry.group.to_config(),
        "cartan": [list(r) for r in entry.group.cartan],
        "gamma": list(entry.gamma) if entry.gamma is not None else None,
        "pic_generators": [list(g) for g in entry.pic_generators],
        "treatment": entry.treatment.value,
        "positive_roots": len(entry.group.positive_roots_simple),
    }
    if args.json:
        print(json.dumps(doc, indent=1))
    else:
        print(f"{entry.label}: group {entry.group.name}, treatment {entry.treatment.value}")
        if entry.gamma is not None:
            print(f"  spherical root  {format_weight(entry.gamma)}  {list(entry.gamma)}")
        print(f"  pic generators  {', '.join(format_weight(g) for g in entry.pic_generators)}")
        print("  Cartan matrix   " + "\n                  ".join(" ".join(f"{x:>2}" for x in r) for r in entry.group.cartan))
    return 0


# --------------------------------------------------------------- decompose

def cmd_decompose(args) -> int:
    X = variety_from_config(_variety_doc(args))
    dec = decompose(X, args.lam)
    if args.json:
        print(dec.to_json(indent=1))
        return 0
    print(f"sections of L_{format_weight(dec.lam)} on {X.label}:")
    print(f"{'m':>3}  {'head':<24} dim")
    for s in dec.summands:
        print(f"{s.m:>3}  {format_weight(s.head):<24} {s.dim}")
    print(f"total {dec.total_dim}")
    return 0


# ------------------------------------------------------------------ verify

def _sweep_config(args) -> sweep.SweepConfig:
    if args.config:
        with open(args.config) as fh:
            doc = json.load(fh)
        if not isinstance(doc, dict):
            raise ConfigError("sweep config must be a JSON object")
        doc = dict(doc)
    else:
        varieties = []
        if args.standard:
            varieties += sweep.standard_varieties()
        if args.family:
            ns = args.n_list or [None]
            for n in ns:
                varieties.append({"family": args.family, **({"n": n} if n is not None else {})})
        doc = {"varieties": varieties}
    # flags override the file
    if args.max_coeff is not None:
        doc["max_coeff"] = args.max_coeff
    if args.jobs is not None:
        doc["jobs"] = args.jobs
    if args.out is not None:
        doc["output"] = args.out
    if args.with_oracle:
        doc["with_oracle"] = True
    return sweep.SweepConfig.from_dict(doc)


def cmd_verify(args) -> int:
    config = _sweep_config(args)
    report = sweep.run_sweep(config)
    s = report["summary"]
    print(f"{s['pairs']} pairs over {len(s['varieties'])} varieties: "
          f"{s['failed']} failed, {s['errors']} errors")
    for verdict, count in s["by_verdict"].items():
        print(f"  {verdict:<26} {count}")
    if config.with_oracle:
        print(f"  oracle checks {s['oracle_checks']}, mismatches {s['oracle_mismatches']}")
    if config.output:
        print(f"report written to {config.output}")
    return 0 if s["ok"] else 1


# ------------------------------------------------------------------ oracle

_MODEL_ALIASES = {"p": "projective-space", "projective-space": "projective-space",
                  "q": "quadric", "quadric": "quadric", "p1xp1": "p1xp1"}


def cmd_oracle(args) -> int:
    kind = _MODEL_ALIASES.get(args.model.lower())
    if kind is None:
        raise ConfigError(f"unknown model {args.model!r}; use projective-space, quadric or p1xp1")
    model = models.GradedModel(kind, args.n if args.n is not None else 1)
    if args.max_degree is not None:
        grid = models.degree_grid(model, args.max_degree)
        cases = [(d, e) for d in grid for e in grid]
    else:
        if args.d is None or args.e is None:
            raise ConfigError("give --d and --e, or --max-degree")
        if kind == "p1xp1":
            cases = [(args.d, args.e)]
        else:
            if len(args.d) != 1 or len(args.e) != 1:
                raise ConfigError(f"{kind} takes a single degree")
            cases = [(args.d[0], args.e[0])]
    results = [models.oracle_check(model, d, e) for d, e in cases]
    if args.json:
        print(json.dumps([r.to_dict() for r in results], indent=1))
    else:
        for r in results:
            print(f"{r.model} {r.d} x {r.e}: {r.rows}x{r.cols}, rank {r.rank}, "
                  f"{'surjective' if r.surjective else 'NOT surjective'}")
    return 0 if all(r.surjective for r in results) else 1


# -------------------------------------------------------------------- main

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankone", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("catalog", help="list built-in families or show one entry")
    c.add_argument("--family")
    c.add_argument("--n", type=int)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_catalog)

    d = sub.add_parser("decompose", help="decompose the sections of L_lambda")
    d.add_argument("--family")
    d.add_argument("--n", type=int)
    d.add_argument("--variety", help="variety description as JSON, or @file")
    d.add_argument("--lambda", dest="lam", type=parse_weight, required=True)
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="sweep all pic+ pairs and certify surjectivity")
    v.add_argument("--config", help="SweepConfig JSON file")
    v.add_argument("--standard", action="store_true",
                   help="9B/9C n=2..6, 15, P1xP1 and the induced fixtures")
    v.add_argument("--family")
    v.add_argument("--n", dest="n_list", type=parse_int_list, help="e.g. 2,3,4 or 2..4")
    v.add_argument("--max-coeff", type=int)
    v.add_argument("--with-oracle", action="store_true")
    v.add_argument("--jobs", type=int)
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    o = sub.add_parser("oracle", help="exact-rank surjectivity check on a polynomial model")
    o.add_argument("--model", required=True, help="projective-space | quadric | p1xp1")
    o.add_argument("--n", type=int)
    o.add_argument("--d", type=parse_weight, help="degree (bidegree a,b for p1xp1)")
    o.add_argument("--e", type=parse_weight)
    o.add_argument("--max-degree", type=int, help="check every degree pair up to this")
    o.add_argument("--json", action="store_true")
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, LookupError, OSError) as exc:
        # DomainError, ConfigError, CatalogLookupError, ... all land here
        msg = exc.args[0] if isinstance(exc, LookupError) and exc.args else exc
        print(f"error: {type(exc).__name__}: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
