"""Command-line entry point: ``python -m weyl_cells <command> ...``.

Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable

from . import affine_weyl as aw
from . import fusion, kl, orbits, weights
from .rootdata import RootDatum, parse_type
from .tables import engine

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class Result:
    payload: Any
    text: str
    ok: bool = True
    rows: list[dict] | None = field(default=None)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _elem(datum: RootDatum, word: str) -> aw.WeylElement:
    return aw.from_word(datum, word.strip())


def _word(w: aw.WeylElement) -> str:
    return aw.format_word(w.word) if w.length or w.omega_label else "e"


def _counter_rows(c: Counter) -> list[dict]:
    return [{"item": str(k), "mult": m} for k, m in sorted(c.items(), key=lambda kv: str(kv[0]))]


def _counter_text(c: Counter) -> str:
    return " + ".join(f"{m}*{k}" if m > 1 else str(k) for k, m in sorted(c.items(), key=lambda kv: str(kv[0])))


# ---------------------------------------------------------------------------
# handlers


def cmd_rootdata_show(a) -> Result:
    d = parse_type(a.type)
    doc = d.to_json()
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    return Result(doc, text)


def cmd_weyl_mult(a) -> Result:
    d = parse_type(a.type)
    w = _elem(d, a.x) * _elem(d, a.y)
    return Result(w.to_json(), _word(w))


def cmd_weyl_len(a) -> Result:
    w = _elem(parse_type(a.type), a.word)
    return Result({"length": w.length}, str(w.length))


def cmd_weyl_descents(a) -> Result:
    w = _elem(parse_type(a.type), a.word)
    left, right = sorted(w.left_descents), sorted(w.right_descents)
    return Result({"left": left, "right": right}, f"left {left}\nright {right}")


def cmd_weyl_rigid(a) -> Result:
    d = parse_type(a.type)
    els = aw.enumerate_rigid(d, a.max_len)
    if a.spherical:
        els = [w for w in els if aw.is_two_sided_spherical(w)]
    rows = [{"word": _word(w), "length": w.length} for w in els]
    return Result(rows, "\n".join(r["word"] for r in rows), rows=rows)


def cmd_weight_dot(a) -> Result:
    d = parse_type(a.type)
    out = weights.dot_action(_elem(d, a.word), weights.parse_weight(d, a.weight.strip()))
    return Result(out.to_json(), weights.format_weight(out, a.delta))


def cmd_weight_dominant(a) -> Result:
    d = parse_type(a.type)
    wt = weights.parse_weight(d, a.weight.strip())
    ok = weights.is_rho_dominant(wt)
    return Result({"rho_dominant": ok, "pairings": list(wt.pairings)}, "yes" if ok else "no", ok)


def cmd_weight_sing(a) -> Result:
    d = parse_type(a.type)
    s = sorted(weights.sing_set(weights.parse_weight(d, a.weight.strip())))
    return Result({"sing": s}, " ".join(map(str, s)) or "-")


def cmd_weight_minv(a) -> Result:
    d = parse_type(a.type)
    v, kp = weights.min_dominant_v(d, a.level)
    sing = sorted(weights.sing_set(kp))
    doc = {"v": v.word, "length": v.length, "kappa_plus": kp.to_json(), "sing": sing}
    text = f"v {_word(v)}\nkappa+ {weights.format_weight(kp, True)}\nsing {' '.join(map(str, sing))}"
    return Result(doc, text)


def cmd_kl_poly(a) -> Result:
    d = parse_type(a.type)
    p = kl.kl_poly(_elem(d, a.x), _elem(d, a.y))
    return Result(p.to_json(), str(p))


def cmd_kl_mu(a) -> Result:
    d = parse_type(a.type)
    m = kl.mu(_elem(d, a.x), _elem(d, a.y))
    return Result({"mu": m}, str(m))


def cmd_kl_mu_graph(a) -> Result:
    d = parse_type(a.type)
    rows = [{"x": _word(x), "y": _word(y), "mu": m} for x, y, m in kl.mu_graph(d, a.max_len)]
    return Result(rows, "\n".join(f"{r['x']}\t{r['y']}\t{r['mu']}" for r in rows), rows=rows)


def cmd_kl_fc(a) -> Result:
    w = _elem(parse_type(a.type), a.word)
    ok = kl.is_fully_commutative(w)
    return Result({"fully_commutative": ok}, "yes" if ok else "no", ok)


def cmd_orbit_dual(a) -> Result:
    q = orbits.ls_dual(orbits.parse_partition(a.partition))
    return Result(q.to_json(), str(q))


def cmd_orbit_closure(a) -> Result:
    ok = orbits.closure_leq(orbits.parse_partition(a.p), orbits.parse_partition(a.q))
    return Result({"leq": ok}, "yes" if ok else "no", ok)


def cmd_orbit_dynkin(a) -> Result:
    labels = orbits.weighted_dynkin(orbits.parse_partition(a.partition))
    return Result({"labels": list(labels)}, " ".join(map(str, labels)))


def cmd_orbit_sigma(a) -> Result:
    d = parse_type(a.type)
    p = orbits.sigma_partition(d.family, d.rank, a.level)
    return Result(p.to_json(), str(p))


def cmd_fuse(a) -> Result:
    g = fusion.parse_group(a.group)
    c = fusion.tensor(g.irrep(a.a.strip()), g.irrep(a.b.strip()))
    rows = _counter_rows(c)
    return Result(rows, _counter_text(c), rows=rows)


def cmd_fuse_row(a) -> Result:
    b = engine.bind(a.id, a.row, a.rank, a.level)
    c = fusion.fuse_modules(b, b.level, a.a.strip(), a.b.strip())
    rows = _counter_rows(c)
    return Result(rows, _counter_text(c), rows=rows)


def cmd_table_verify(a) -> Result:
    rep = engine.Report()
    if a.row:
        rep.extend(engine.verify_row(engine.find_row(a.id, a.row), a.nmax, not a.no_structure))
    else:
        rep.extend(engine.verify_table(a.id, a.nmax, not a.no_structure))
    rows = rep.to_json()
    shown = rows if a.all else [r for r in rows if r["status"] == "fail"]
    n_fail = len(rep.failures)
    lines = [f"{r['status'].upper()}\t{r['row']}\t{r['check']}\tcomputed={r['computed']}\texpected={r['expected']}" for r in shown]
    lines.append(f"{len(rows) - n_fail} passed, {n_fail} failed")
    return Result(rows, "\n".join(lines), rep.ok, rows=rows)


def cmd_table_levels(a) -> Result:
    rep = engine.verify_level_ranges()
    rep.extend(engine.verify_singleton_sing())
    rows = rep.to_json()
    n_fail = len(rep.failures)
    lines = [f"{r['status'].upper()}\t{r['row']}\t{r['check']}\t{r['computed']}" for r in rows if a.all or r["status"] == "fail"]
    lines.append(f"{len(rows) - n_fail} passed, {n_fail} failed")
    return Result(rows, "\n".join(lines), rep.ok, rows=rows)


def cmd_table_emit(a) -> Result:
    fmt = getattr(a, "format", "text")
    fmt = "tsv" if fmt == "text" else fmt
    doc = engine.emit_table(a.id, fmt, a.nmax)
    return Result(None, doc.rstrip("\n"))


# ---------------------------------------------------------------------------
# parser


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "tsv", "tex"), default=argparse.SUPPRESS,
                        help="output format (tex applies to table emit)")
    typed = argparse.ArgumentParser(add_help=False)
    typed.add_argument("--type", required=True, help="root datum such as G2, B5, E8")

    p = argparse.ArgumentParser(prog="python -m weyl_cells", parents=[common],
                                description="Affine Weyl group, weight, KL, orbit and fusion calculator.")
    sub = p.add_subparsers(dest="command", required=True)

    def group(name: str, help_: str):
        g = sub.add_parser(name, help=help_)
        return g.add_subparsers(dest="action", required=True)

    def leaf(parent, name: str, fn: Callable, help_: str, *, with_type: bool = True):
        parents = [common, typed] if with_type else [common]
        q = parent.add_parser(name, parents=parents, help=help_)
        q.set_defaults(fn=fn)
        return q

    g = group("rootdata", "static root data")
    leaf(g, "show", cmd_rootdata_show, "print the root datum as JSON or text")

    g = group("weyl", "extended affine Weyl group arithmetic")
    q = leaf(g, "mult", cmd_weyl_mult, "product of two words")
    q.add_argument("x")
    q.add_argument("y")
    leaf(g, "len", cmd_weyl_len, "length").add_argument("word")
    leaf(g, "descents", cmd_weyl_descents, "left and right descent sets").add_argument("word")
    q = leaf(g, "rigid", cmd_weyl_rigid, "elements with a unique reduced word")
    q.add_argument("--max-len", type=int, default=9)
    q.add_argument("--spherical", action="store_true", help="keep only two-sided spherical ones")

    g = group("weight", "affine weights and the dot action")
    q = leaf(g, "dot", cmd_weight_dot, "w . weight")
    q.add_argument("word")
    q.add_argument("weight")
    q.add_argument("--delta", action="store_true", help="show the delta coefficient")
    leaf(g, "dominant", cmd_weight_dominant, "rho-dominance test").add_argument("weight")
    leaf(g, "sing", cmd_weight_sing, "singular simple reflections").add_argument("weight")
    leaf(g, "minv", cmd_weight_minv, "shortest v making v . (k L0) rho-dominant").add_argument("level", type=int)

    g = group("kl", "Kazhdan-Lusztig data and full commutativity")
    for name, fn in (("poly", cmd_kl_poly), ("mu", cmd_kl_mu)):
        q = leaf(g, name, fn, f"KL {name} of x <= y")
        q.add_argument("x")
        q.add_argument("y")
    leaf(g, "mu-graph", cmd_kl_mu_graph, "nonzero mu up to a length").add_argument("--max-len", type=int, default=4)
    leaf(g, "fc", cmd_kl_fc, "Stembridge full commutativity").add_argument("word")

    g = group("orbit", "nilpotent orbits as partitions")
    leaf(g, "dual", cmd_orbit_dual, "Lusztig-Spaltenstein dual", with_type=False).add_argument("partition")
    q = leaf(g, "closure", cmd_orbit_closure, "closure order p <= q", with_type=False)
    q.add_argument("p")
    q.add_argument("q")
    leaf(g, "dynkin", cmd_orbit_dynkin, "weighted Dynkin diagram", with_type=False).add_argument("partition")
    leaf(g, "sigma", cmd_orbit_sigma, "tabulated sigma partition").add_argument("--level", type=int, required=True)

    q = sub.add_parser("fuse", parents=[common], help="tensor product of two irreducibles")
    q.set_defaults(fn=cmd_fuse)
    q.add_argument("--group", required=True)
    q.add_argument("a")
    q.add_argument("b")

    q = sub.add_parser("fuse-row", parents=[common], help="fusion of two modules of a table row")
    q.set_defaults(fn=cmd_fuse_row)
    q.add_argument("--id", default="sous-reguliers", choices=tuple(engine.TABLES))
    q.add_argument("--row", required=True)
    q.add_argument("--rank", type=int)
    q.add_argument("--level", type=int)
    q.add_argument("a")
    q.add_argument("b")

    g = group("table", "reproduce the golden tables")
    q = leaf(g, "verify", cmd_table_verify, "recompute a table", with_type=False)
    q.add_argument("--id", required=True, choices=tuple(engine.TABLES))
    q.add_argument("--row")
    q.add_argument("--nmax", type=int, default=engine.DEFAULT_NMAX)
    q.add_argument("--no-structure", action="store_true", help="labels only")
    q.add_argument("--all", action="store_true", help="list passing checks too")
    q = leaf(g, "levels", cmd_table_levels, "level ranges and singleton Sing", with_type=False)
    q.add_argument("--all", action="store_true")
    q = leaf(g, "emit", cmd_table_emit, "regenerate a table", with_type=False)
    q.add_argument("--id", required=True, choices=tuple(engine.TABLES))
    q.add_argument("--nmax", type=int, default=engine.EMIT_NMAX)
    return p


_NEG_LITERAL = re.compile(r"^-\d+\D")


def _protect(argv: list[str]) -> list[str]:
    """Keep literals like ``-1*L0`` from being read as options."""
    return [" " + t if _NEG_LITERAL.match(t) else t for t in argv]


def _emit(res: Result, fmt: str, out) -> None:
    if fmt == "json" and res.payload is not None:
        out.write(json.dumps(res.payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    elif fmt == "tsv" and res.rows is not None:
        cols = list(res.rows[0]) if res.rows else []
        out.write("\t".join(cols) + "\n" if cols else "")
        for r in res.rows:
            out.write("\t".join(str(r[c]) for c in cols) + "\n")
    elif fmt == "tsv" and isinstance(res.payload, dict):
        for k, v in res.payload.items():
            out.write(f"{k}\t{json.dumps(v) if not isinstance(v, str) else v}\n")
    else:
        out.write(res.text + "\n")


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _parser()
    try:
        args = parser.parse_args(_protect(argv))
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    fmt = getattr(args, "format", "text")
    if fmt == "tex" and args.fn is not cmd_table_emit:
        err.write("--format tex only applies to table emit\n")
        return EXIT_USAGE
    try:
        res = args.fn(args)
    except (ValueError, KeyError, RuntimeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    _emit(res, fmt, out)
    return EXIT_OK if res.ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())


__all__ = ["EXIT_FAIL", "EXIT_OK", "EXIT_USAGE", "main", "run"]
