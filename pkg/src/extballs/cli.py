"""Command-line entry point: ``extballs <command> [options]``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from . import covering, intersections, report, search, symmetry
from .errors import ExtBallsError
from .gf import format_poly, load_field_config, parse_field
from .hamming import (
    ball,
    domain_Aq,
    domain_Dq,
    extended_ball,
    parse_vec,
    restricted_ball,
    restricted_extended_ball,
)


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _field(args):
    overrides = load_field_config(args.config) if args.config else {}
    return parse_field(args.field, overrides)


def _read_vectors(f, path):
    out = []
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if line:
                out.append(parse_vec(f, line.strip("()")))
    return out


# -- commands -------------------------------------------------------------------

def cmd_field(args):
    f = _field(args)
    rows = [(k, f.format(f.antilog(k)), f.antilog(k)) for k in range(f.q - 1)]
    data = {
        "q": f.q, "p": f.p, "n": f.n,
        "prim_poly": format_poly(f.prim_poly),
        "xi": f.xi,
        "primitive_elements": f.primitive_elements(),
        "antilog": [code for _, _, code in rows],
    }
    lines = [
        f"GF({f.q}) = GF({f.p}^{f.n}), primitive polynomial {format_poly(f.prim_poly)}, xi = {f.xi}",
        f"primitive elements: {', '.join(map(str, data['primitive_elements']))}",
        "k  xi^k  code",
    ]
    lines += [f"{k:<2} {s:<5} {c}" for k, s, c in rows]
    _emit(args, data, "\n".join(lines))
    return 0


def _set_command(fn, tilde_fn):
    def run(args):
        f = _field(args)
        u = parse_vec(f, args.vector)
        pts = (tilde_fn if args.tilde else fn)(u)
        data = {"vector": str(u), "size": len(pts), "points": [str(v) for v in pts]}
        text = f"{len(pts)} points"
        if not args.count:
            text += "\n" + "\n".join(data["points"])
        _emit(args, data, text)
        return 0
    return run


def cmd_rho(args):
    f = _field(args)
    u, v = parse_vec(f, args.u), parse_vec(f, args.v)
    r = intersections.rho(u, v)
    wit = {f.format(mu): [str(w) for w in pts] for mu, pts in sorted(r.witnesses.items())}
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["mu", "count", "points"])
        for mu, pts in wit.items():
            w.writerow([mu, len(pts), " ".join(pts)])
        print(buf.getvalue(), end="")
        return 0
    data = {"u": str(u), "v": str(v), "rho": r.value, "path": r.path,
            "intersection": r.value * (f.q - 1), "witnesses": wit}
    lines = [f"rho_{f.q}({u},{v}) = {r.value}  (|E~(u) ∩ E~(v)| = {data['intersection']}, {r.path})"]
    lines += [f"  mu={mu}: {' '.join(pts)}" for mu, pts in wit.items()]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_rho_min(args):
    f = _field(args)
    val = intersections.rho_min(f, exhaustive=args.exhaustive)
    _emit(args, {"q": f.q, "rho_min": val, "exhaustive": args.exhaustive}, f"rho({f.q}) = {val}")
    return 0


def cmd_theta(args):
    f = _field(args)
    fam = intersections.FAMILIES[args.family](f)
    t, i, j = intersections.theta_witness(fam)
    a, b = fam.labels[i], fam.labels[j]
    data = {"q": f.q, "family": args.family, "theta": t, "witness": [str(a), str(b)]}
    _emit(args, data, f"theta({args.family}) over GF({f.q}) = {t}, attained by {a}, {b}")
    return 0


DOMAINS = {"all": None, "Aq": domain_Aq, "Dq": domain_Dq}


def cmd_orbits(args):
    f = _field(args)
    group = symmetry.make_group(f, args.group)
    dom = DOMAINS[args.domain]
    obs = symmetry.orbits(group, dom(f) if dom else None)
    data = [{"representative": str(o.representative), "size": len(o)} for o in obs]
    lines = [f"{len(obs)} orbits of {args.group} on {args.domain} (|group| = {len(group)})"]
    lines += [f"{d['representative']:<20} {d['size']}" for d in data]
    _emit(args, data, "\n".join(lines))
    return 0


def cmd_metodo(args):
    f = _field(args)
    L = _read_vectors(f, args.L) if args.L else []
    cert = symmetry.metodo_certificate(f, args.N, L)
    print(json.dumps(cert.to_json(), indent=2, ensure_ascii=False))
    return 0 if cert.verified else 1


def cmd_verify_cover(args):
    if args.all_minimal:
        raise NotImplementedError("enumerating all minimal covers is not implemented")
    f = _field(args)
    if args.builtin:
        H = covering.builtin_cover_vectors(f, args.generator)
    elif args.vectors:
        H = _read_vectors(f, args.vectors)
    else:
        raise ExtBallsError("give --vectors FILE or --builtin")
    res = covering.is_short_covering(H)
    data = {"q": f.q, "vectors": [str(h) for h in H], "is_cover": res.is_cover,
            "uncovered": [str(v) for v in res.uncovered]}
    if res.is_cover:
        text = f"short covering of GF({f.q})^3 with {len(H)} vectors"
    else:
        text = f"not a cover: {len(res.uncovered)} points uncovered\n" + "\n".join(data["uncovered"])
    _emit(args, data, text)
    return 0 if res.is_cover else 1


def cmd_lower_bound(args):
    f = _field(args)
    cert = covering.counting_lower_bound(f.q)
    print(json.dumps(cert.to_json(), indent=2, ensure_ascii=False))
    return 0 if cert.verified else 1


def cmd_search_c(args):
    f = _field(args)
    cert = search.exhaustive_c(f, args.max_m, prune=not args.no_prune,
                               limit=args.limit, workers=args.threads)
    if args.json:
        print(json.dumps(cert.to_json(), indent=2, ensure_ascii=False))
    else:
        print(f"c({f.q}) = {cert.m}")
        print("cover: " + " ".join(str(v) for v in cert.vectors))
        for st in cert.evidence:
            print(f"  m={st['m']}: {st['result']} ({st['nodes']} nodes, {st['seeds']} seeds, {st['mode']})")
    return 0


def cmd_bounds(args):
    rows = covering.bounds_table(report.parse_range(args.range), exhaustive_limit=args.exhaustive_limit)
    header = ["q", "lower", "upper", "source", "formula_lower", "formula_upper"]
    table = [[r.q, r.lower, r.upper, r.source,
              "" if r.formula_lower is None else r.formula_lower,
              "" if r.formula_upper is None else r.formula_upper] for r in rows]
    if args.json:
        print(json.dumps([dict(zip(header, t)) for t in table], indent=2))
    else:
        print(f"{'q':>3} {'lower':>5} {'upper':>5}  source")
        for r in rows:
            print(f"{r.q:>3} {r.lower:>5} {r.upper:>5}  {r.source}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(table)
    return 0


def cmd_reproduce(args):
    overrides = load_field_config(args.config) if args.config else {}
    qs = report.parse_range(args.range)
    entries, code = report.reproduce_paper(qs, args.output, overrides, args.threads)
    if args.json:
        print(report.to_json(entries, qs), end="")
    else:
        print(report.format_text(entries), end="")
    return code


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="5", help="q or q:polynomial, e.g. 8:x^3+x+1")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--config", help="file with 'q = polynomial' lines")
    common.add_argument("-v", "--verbose", action="store_true")

    ap = argparse.ArgumentParser(prog="extballs", description="Extended Hamming balls in F_q^3.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=fn)
        return p

    add("field", cmd_field, "field tables")
    for name, fn, tfn in (("ball", ball, restricted_ball), ("ext-ball", extended_ball, restricted_extended_ball)):
        p = add(name, _set_command(fn, tfn), f"points of {name}")
        p.add_argument("vector", help="a,b,c")
        p.add_argument("--tilde", action="store_true", help="restrict to D_q")
        p.add_argument("--count", action="store_true", help="size only")
    p = add("rho", cmd_rho, "normalised intersection parameter")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--csv", action="store_true", help="per-scalar witnesses as CSV")
    p = add("rho-min", cmd_rho_min, "rho(q)")
    p.add_argument("--exhaustive", action="store_true")
    p = add("theta", cmd_theta, "theta of a family")
    p.add_argument("--family", choices=sorted(intersections.FAMILIES), default="E")
    p = add("orbits", cmd_orbits, "orbit table")
    p.add_argument("--group", default="s3k", help="s3k, wreath, cyc3k, s3, k, or <N>k")
    p.add_argument("--domain", choices=sorted(DOMAINS), default="all")
    p = add("metodo", cmd_metodo, "orbit-witness cover certificate")
    p.add_argument("--L", help="file with one vector per line")
    p.add_argument("--N", default="cyc3", choices=sorted(symmetry.SUBGROUPS))
    p = add("verify-cover", cmd_verify_cover, "check a short covering")
    p.add_argument("--vectors", help="file with one vector per line")
    p.add_argument("--builtin", action="store_true", help="built-in cover for q=8 or 9")
    p.add_argument("--generator", type=int, help="primitive element used by --builtin")
    p.add_argument("--all-minimal", action="store_true", help="enumerate all minimal covers")
    add("lower-bound", cmd_lower_bound, "counting certificate for q=7, 8, 9")
    p = add("search-c", cmd_search_c, "exhaustive c(q)")
    p.add_argument("--max-m", type=int)
    p.add_argument("--no-prune", action="store_true", help="skip the weight-3 seeding at q >= 7")
    p.add_argument("--limit", type=int, default=search.DEFAULT_LIMIT)
    p = add("bounds", cmd_bounds, "known bounds on c(q)")
    p.add_argument("--range", default="2..13")
    p.add_argument("--csv", help="also write the table as CSV")
    p.add_argument("--exhaustive-limit", type=int, default=5)
    p = add("reproduce-paper", cmd_reproduce, "run every registered claim")
    p.add_argument("--range", default="2..13")
    p.add_argument("--output", help="write OUTPUT.txt and OUTPUT.json")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ExtBallsError, ValueError, NotImplementedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
