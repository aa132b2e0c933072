"""Command-line front end.

Simple roots are numbered from 1 following the Vinberg-Onishchik tables
(not Bourbaki): in ``E6`` the branch node is ``alpha_6`` on ``alpha_3``, in
``E7``/``E8`` it is ``alpha_7``/``alpha_8`` on ``alpha_4``/``alpha_5``; ``F4``
has ``alpha_1, alpha_2`` short; ``G2`` has ``alpha_1`` short.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import defaultdict

from . import abelian, cpclassify, oracle, parabolic
from .cascade import Cascade, build_cascade
from .rootsys import InvalidType, RootSystem, all_types, build_root_system

SCHEMA_VERSION = 1

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _vec(v) -> str:
    if all(0 <= x < 10 for x in v):
        return "(" + "".join(map(str, v)) + ")"
    return "(" + ",".join(map(str, v)) + ")"


def _one_based(s) -> list[int]:
    return sorted(i + 1 for i in s)


def _envelope(rs: RootSystem, payload) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "type": str(rs.type), "rank": rs.rank, "payload": payload}
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)


def _parse_T(rs: RootSystem, text: str | None) -> frozenset:
    if not text:
        raise UsageError("--T is required, e.g. --T 2,6")
    try:
        idx = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"cannot parse --T {text!r}") from None
    if not idx:
        raise UsageError("T must be nonempty")
    bad = [i for i in idx if not 1 <= i <= rs.rank]
    if bad:
        raise UsageError(f"simple roots {bad} out of range 1..{rs.rank} for {rs.type}")
    return frozenset(i - 1 for i in idx)


def _ordered_T(c: Cascade, T) -> list[int]:
    """1-based ``T`` listed by cascade node, then by index."""
    return [a + 1 for nd in c for a in sorted(nd.phi & T)]


# -- cascade ----------------------------------------------------------------------


def cascade_payload(rs: RootSystem, c: Cascade) -> dict:
    nodes = []
    for nd in c:
        total, com = cpclassify.admissibility_counts(c, nd.id)
        nodes.append(
            {
                "id": nd.id + 1,
                "beta": list(nd.beta),
                "parent": None if nd.parent is None else nd.parent + 1,
                "phi": _one_based(nd.phi),
                "heisenberg_dim": total,
                "heisenberg_commutative": com,
                "admissible": cpclassify.is_admissible(c, nd.id),
            }
        )
    return {
        "theta": list(rs.theta),
        "half_theta": None if rs.half_theta is None else list(rs.half_theta),
        "pi_com": _one_based(rs.commutative_simple),
        "pi_long": _one_based(rs.long_simple),
        "nodes": nodes,
        "edges": [[p + 1, q + 1] for p, q in c.hasse_edges()],
        "j_adm": _one_based(cpclassify.max_admissible_upper_ideal(c)),
    }


def cascade_text(rs: RootSystem, c: Cascade) -> str:
    com = set(rs.commutative_simple)
    lines = []
    for nd in c:
        phi = ", ".join(f"α{a + 1}" + ("*" if a in com else "") for a in sorted(nd.phi))
        parent = "-" if nd.parent is None else f"β{nd.parent + 1}"
        lines.append(f"β{nd.id + 1} = {_vec(nd.beta)}  Φ = {{{phi}}}  parent = {parent}")
    return "\n".join(lines)


def cascade_dot(rs: RootSystem, c: Cascade) -> str:
    """Hasse diagram; commutative simple roots are underlined and tagged by class."""
    com = set(rs.commutative_simple)
    out = [f"digraph cascade_{rs.type} {{", "  node [shape=box];"]
    for nd in c:
        parts = []
        for a in sorted(nd.phi):
            s = f"α<SUB>{a + 1}</SUB>"
            parts.append(f"<U>{s}</U>" if a in com else s)
        label = f"β<SUB>{nd.id + 1}</SUB> | Φ={{{', '.join(parts)}}}"
        cls = "commutative" if nd.phi & com else "plain"
        out.append(f'  b{nd.id + 1} [label=<{label}>, class="{cls}"];')
    for p, q in c.hasse_edges():
        out.append(f"  b{p + 1} -> b{q + 1};")
    out.append("}")
    return "\n".join(out)


def cmd_cascade(rs: RootSystem, args) -> tuple[int, str]:
    c = build_cascade(rs)
    fmt = args.format or "text"
    if fmt == "text":
        return EXIT_OK, cascade_text(rs, c)
    if fmt == "json":
        return EXIT_OK, _envelope(rs, cascade_payload(rs, c))
    if fmt == "dot":
        return EXIT_OK, cascade_dot(rs, c)
    raise UsageError(f"format {fmt!r} not supported for cascade")


# -- classify ---------------------------------------------------------------------


def classify_payload(n: parabolic.Nilradical) -> dict:
    rep = cpclassify.has_cp(n)
    opt = parabolic.optimise(n)
    out = {
        "T": _one_based(n.T),
        "has_cp": rep.has_cp,
        "branch": rep.branch,
        "dim": n.dim,
        "index": n.index,
        "b": n.b,
        "K_of_n": _one_based(n.cascade_ideal),
        "T_tilde": _one_based(n.T_tilde),
        "optimal": parabolic.is_optimal(n),
        "optimised_dim": opt.dim,
        "optimised_index": opt.index,
        "max_abelian_dim": abelian.max_abelian_dim_in(n.rs, n) if n.rs.rank <= abelian.DEFAULT_RANK_CAP else None,
        "j_adm": _one_based(rep.j_adm),
    }
    if rep.has_cp:
        out["chosen_alpha"] = None if rep.chosen_alpha is None else rep.chosen_alpha + 1
        out["witness_roots"] = [list(r) for r in rep.witness.roots]
        out["witness_dim"] = rep.witness_dim
        out["witness_source"] = rep.witness_source
    return out


def cmd_classify(rs: RootSystem, args) -> tuple[int, str]:
    T = _parse_T(rs, args.T)
    n = parabolic.nilradical_from_T(rs, build_cascade(rs), T)
    payload = classify_payload(n)
    if args.format == "text":
        keys = ["T", "has_cp", "branch", "dim", "index", "b", "K_of_n", "T_tilde", "witness_dim"]
        return EXIT_OK, "\n".join(f"{k}: {payload.get(k)}" for k in keys)
    return EXIT_OK, _envelope(rs, payload)


# -- enumerate --------------------------------------------------------------------


def cp_nilradicals(rs: RootSystem, c: Cascade | None = None) -> list[list[int]]:
    """Every optimal ``T`` whose nilradical has a CP, as ordered 1-based lists."""
    c = c or build_cascade(rs)
    found = [n.T for n in parabolic.optimal_nilradicals(rs, c) if cpclassify.has_cp(n).has_cp]
    return sorted((_ordered_T(c, T) for T in found), key=lambda t: (len(t), sorted(t)))


def cmd_enumerate(rs: RootSystem, args) -> tuple[int, str]:
    c = build_cascade(rs)
    cap = args.rank_cap
    if cap is not None and rs.rank > cap:
        raise abelian.RankCapExceeded(f"{rs.type}: rank {rs.rank} exceeds cap {cap}")
    what = args.what
    if what == "cp-nilradicals":
        items = cp_nilradicals(rs, c)
        sets = [frozenset(t) for t in items]
        maximal = [t for t, s in zip(items, sets) if not any(s < o for o in sets)]
        payload = {
            "what": what,
            "items": items,
            "maximal": maximal,
            "note": "listed T are optimal; any n_T has a CP iff its optimisation is listed",
        }
    elif what == "abelian-ideals":
        ideals = abelian.enumerate_abelian_ideals(rs, cap)
        payload = {
            "what": what,
            "count": len(ideals),
            "items": [{"dim": a.dim, "generators": [list(g) for g in a.generators()]} for a in ideals],
        }
    elif what == "optimal":
        rows = []
        for n in parabolic.optimal_nilradicals(rs, c):
            rows.append(
                {
                    "T": _ordered_T(c, n.T),
                    "K_of_n": _one_based(n.cascade_ideal),
                    "dim": n.dim,
                    "index": n.index,
                    "has_cp": cpclassify.has_cp(n).has_cp,
                }
            )
        payload = {"what": what, "items": sorted(rows, key=lambda r: (len(r["T"]), sorted(r["T"])))}
    else:
        raise UsageError(f"unknown --what {what!r}")
    return EXIT_OK, _envelope(rs, payload)


# -- verify -----------------------------------------------------------------------

SUITE_CAPS = {"joseph": 8, "frobenius": 7, "summa": 7, "cp": oracle.BRUTEFORCE_RANK_CAP}


def _witness_json(w: oracle.RankWitness) -> dict:
    return {"claimed_rank": w.claimed_rank, "trials": w.trials, "field_prime": w.field_prime, "seed": w.seed}


def run_suite(rs: RootSystem, suite: str, seed: int = 0, trials: int = 3) -> list[dict]:
    c = build_cascade(rs)
    cc = None
    cfg = {"seed": seed, "trials": trials}
    checks = []

    def add(name, T, expected, observed, **extra):
        checks.append(
            {"check": name, "T": _one_based(T), "expected": expected, "observed": observed,
             "pass": expected == observed, **extra}
        )

    nils = list(parabolic.all_nilradicals(rs, c))
    if suite == "joseph":
        for n in nils:
            ind, w = oracle.index_by_generic_rank(oracle.presentation_of_nilradical(rs, cc, n), **cfg)
            add("ind n", n.T, n.index, ind, rank_witness=_witness_json(w))
    elif suite == "frobenius":
        for n in nils:
            ind, w = oracle.index_by_generic_rank(oracle.presentation_of_subalgebra(rs, cc, "f", n), **cfg)
            add("ind f_n", n.T, 0, ind, rank_witness=_witness_json(w))
            if parabolic.is_optimal(n):
                add("stabiliser of cascade point in f_n", n.T, 0, oracle.envelope_stabiliser_dim(rs, cc, n))
    elif suite == "summa":
        for n in parabolic.optimal_nilradicals(rs, c):
            ind_p, w = oracle.index_by_generic_rank(oracle.presentation_of_subalgebra(rs, cc, "p", n), **cfg)
            add("ind p + ind n", n.T, rs.rank, ind_p + n.index, rank_witness=_witness_json(w))
            stab = oracle.stabiliser_at_cascade_point(rs, cc, n)
            add("stabiliser at cascade point", n.T, _one_based(n.cascade_ideal),
                _one_based(i for i in range(len(c)) if c[i].beta in stab))
    elif suite == "cp":
        groups = defaultdict(list)
        for n in nils:
            groups[n.cascade_ideal].append(n)
        for K, members in sorted(groups.items(), key=lambda kv: sorted(kv[0])):
            verdicts = {cpclassify.has_cp(m).has_cp for m in members}
            rep = members[0]
            add("has_cp constant on K(n) class", rep.T, 1, len(verdicts))
            bf = oracle.cp_bruteforce(rs, rep)
            add("has_cp vs brute force", rep.T, bf is not None, cpclassify.has_cp(rep).has_cp)
    else:
        raise UsageError(f"unknown suite {suite!r}")
    return checks


def cmd_verify(rs: RootSystem, args) -> tuple[int, str]:
    suites = ["joseph", "frobenius", "summa", "cp"] if args.suite == "all" else [args.suite]
    results = {}
    for s in suites:
        cap = args.rank_cap if args.rank_cap is not None else SUITE_CAPS[s]
        if rs.rank > cap:
            raise abelian.RankCapExceeded(f"suite {s}: rank {rs.rank} exceeds cap {cap}")
        results[s] = run_suite(rs, s, seed=args.seed, trials=args.trials)
    failed = sum(not ch["pass"] for chs in results.values() for ch in chs)
    total = sum(len(chs) for chs in results.values())
    payload = {"suites": results, "checked": total, "failed": failed, "seed": args.seed, "trials": args.trials}
    return (EXIT_FAIL if failed else EXIT_OK), _envelope(rs, payload)


# -- tables -----------------------------------------------------------------------

TABLE_FIELDS = ["type", "node", "beta", "parent", "phi", "heisenberg_dim", "heisenberg_commutative", "admissible"]


def table_rows(types) -> list[dict]:
    rows = []
    for t in types:
        rs = build_root_system(t)
        c = build_cascade(rs)
        for nd in cascade_payload(rs, c)["nodes"]:
            rows.append(
                {
                    "type": str(t),
                    "node": nd["id"],
                    "beta": _vec(nd["beta"]),
                    "parent": nd["parent"] or "",
                    "phi": " ".join(map(str, nd["phi"])),
                    "heisenberg_dim": nd["heisenberg_dim"],
                    "heisenberg_commutative": nd["heisenberg_commutative"],
                    "admissible": nd["admissible"],
                }
            )
    return rows


def cmd_tables(types, args) -> tuple[int, str]:
    rows = table_rows(types)
    fmt = args.format or "text"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return EXIT_OK, buf.getvalue().rstrip("\n")
    if fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "type": None, "rank": None, "payload": {"rows": rows}}
        return EXIT_OK, json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False)
    if fmt == "text":
        lines = []
        for r in rows:
            phi = ",".join(f"α{p}" for p in r["phi"].split())
            lines.append(f"{r['type']:>3}  β{r['node']} = {r['beta']}  Φ = {{{phi}}}")
        return EXIT_OK, "\n".join(lines)
    raise UsageError(f"format {fmt!r} not supported for tables")


# -- entry point ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cpcascade",
        description="Kostant cascade, optimal nilradicals and commutative polarisations.",
        epilog=__doc__.split("\n\n", 1)[1],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def typed(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("type", help="simple type such as E6 or D5")
        return sp

    sp = typed("cascade", "list the cascade and its Hasse diagram")
    sp.add_argument("--format", choices=["text", "json", "dot"], default="text")

    sp = typed("classify", "decide whether n_T has a commutative polarisation")
    sp.add_argument("--T", required=True, help="comma-separated 1-based simple roots")
    sp.add_argument("--format", choices=["json", "text"], default="json")

    sp = typed("enumerate", "list CP nilradicals, abelian ideals or optimal nilradicals")
    sp.add_argument("--what", choices=["cp-nilradicals", "abelian-ideals", "optimal"], required=True)
    sp.add_argument("--rank-cap", type=int, default=None)

    sp = typed("verify", "cross-check against the brute-force oracle")
    sp.add_argument("--suite", choices=["joseph", "frobenius", "summa", "cp", "all"], default="all")
    sp.add_argument("--seed", type=int, default=oracle.DEFAULT_SEED)
    sp.add_argument("--trials", type=int, default=oracle.DEFAULT_TRIALS)
    sp.add_argument("--rank-cap", type=int, default=None)

    sp = sub.add_parser("tables", help="cascade tables for one or more types")
    sp.add_argument("types", nargs="*", help="types to list (default: all up to rank 8)")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "tables":
            types = [build_root_system(t).type for t in args.types] if args.types else all_types(8)
            code, text = cmd_tables(types, args)
        else:
            rs = build_root_system(args.type)
            handler = {
                "cascade": cmd_cascade,
                "classify": cmd_classify,
                "enumerate": cmd_enumerate,
                "verify": cmd_verify,
            }[args.command]
            code, text = handler(rs, args)
    except (InvalidType, UsageError, parabolic.EmptyT) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except abelian.RankCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
