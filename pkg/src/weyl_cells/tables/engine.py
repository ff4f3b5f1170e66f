"""Reproduction engine for the golden tables.

Every instantiated entry is recomputed from scratch: the minimal dominantizing
``v`` and ``kappa+`` for its level, the element ``z`` attached to ``w``, and the
labels ``w . (k Lhat_0)`` and ``z . kappa+``.  Structural claims (full
commutativity, sphericity) are checked on the same instances.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from functools import lru_cache

from ..affine_weyl import (
    WeylElement,
    ends_with_all,
    enumerate_rigid,
    format_word,
    from_word,
    is_left_spherical,
    is_two_sided_spherical,
    simple_reflection,
)
from ..fusion import FusionError, Group, IrrepLabel, parse_group
from ..kl import is_fully_commutative
from ..rootdata import RootDatum, build
from ..weights import (
    AffineWeight,
    dot_action,
    format_weight,
    min_dominant_v,
    parse_weight,
    sing_set,
    vacuum_weight,
)
from .data import SUBREGULAR, SUBREGULAR_LEVEL_COUNTS, TABLES, Cell, Entry, TableRow
from .templates import evaluate, expand, substitute

DEFAULT_NMAX = 4
EMIT_NMAX = 3
FORMATS = ("tsv", "json", "tex")
TSV_COLUMNS = ("type", "rank", "kappa", "chi", "word", "label")


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    row: str
    check: str
    status: str  # pass | fail
    computed: str = ""
    expected: str = ""

    def to_json(self) -> dict:
        return {"row": self.row, "check": self.check, "status": self.status,
                "computed": self.computed, "expected": self.expected}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, row: str, check: str, ok: bool, computed="", expected="") -> None:
        self.checks.append(Check(row, check, "pass" if ok else "fail", str(computed), str(expected)))

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]


# ---------------------------------------------------------------------------
# instantiation


@dataclass(frozen=True)
class Instance:
    row: TableRow
    entry: Entry
    cell: Cell
    rank: int
    level: int
    params: tuple[tuple[str, int], ...]

    @property
    def env(self) -> dict[str, int]:
        return dict(self.params, l=self.rank, k=self.level)

    @property
    def datum(self) -> RootDatum:
        return build(self.row.family, self.rank)

    @property
    def type_name(self) -> str:
        return f"{self.row.family}{self.rank}"

    @property
    def tag(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.row.table}/{self.row.key}/{self.type_name}@{self.level}" + (f"[{ps}]" if ps else "") + f":{self.word_text}"

    @property
    def word(self) -> list:
        return expand(self.entry.word, self.env)

    @property
    def word_text(self) -> str:
        return format_word(self.word)

    @property
    def chi(self) -> str | None:
        return None if self.entry.chi is None else substitute(self.entry.chi, self.env)

    @property
    def expected_finite(self) -> str:
        label = self.cell.label
        for cond, alt in self.cell.variants:
            if evaluate(cond, self.env):
                label = alt
                break
        return substitute(label, self.env)

    def expected(self) -> AffineWeight:
        return parse_weight(self.datum, f"{self.expected_finite}@{self.level}")

    def group(self) -> Group:
        return row_group(self.row, self.rank, self.level)

    def irrep(self) -> IrrepLabel | None:
        """The character as an irreducible of the row's group, when it is determined."""
        if self.chi is None:
            return None
        try:
            return self.group().irrep(self.chi)
        except (FusionError, ValueError):
            return None

    def is_trivial_chi(self) -> bool:
        if self.chi is None:
            return False
        rep = self.irrep()
        if rep is not None:
            return rep.data == rep.group.normalize(rep.group.trivial)
        return self.chi in ("1", "0", "(0,0)")


def row_group(row: TableRow, rank: int, level: int) -> Group:
    env = {"l": rank, "k": level}
    for cond, name in row.group:
        if evaluate(cond, env):
            return parse_group(substitute(name, env))
    raise TableError(f"no group clause matches {row.key} at rank {rank}, level {level}")


def _levels(row: TableRow, cell: Cell, rank: int) -> list[int]:
    if "k" not in re.findall(r"[a-z]+", cell.level):
        return [evaluate(cell.level, {"l": rank})]
    if row.kappa_range is None:
        raise TableError(f"row {row.key} has a level-dependent cell but no level range")
    env = {"l": rank}
    lo, hi = (evaluate(x, env) for x in row.kappa_range)
    return [k for k in range(lo, hi + 1) if evaluate(row.kappa_when, dict(env, k=k))]


def _param_values(spec: str, env: dict[str, int]) -> range:
    lo, hi = substitute(spec, env).split("..")
    return range(int(lo), int(hi) + 1)


def _param_grid(params, env) -> list[tuple[tuple[str, int], ...]]:
    out: list[tuple[tuple[str, int], ...]] = [()]
    for name, spec in params:
        nxt = []
        for prefix in out:
            local = dict(env, **dict(prefix))
            nxt.extend(prefix + ((name, v),) for v in _param_values(spec, local))
        out = nxt
    return out


def instances(row: TableRow, nmax: int = DEFAULT_NMAX, ranks=None) -> list[Instance]:
    out = []
    for rank in ranks or row.ranks:
        for entry in row.entries:
            for cell in entry.cells:
                for level in _levels(row, cell, rank):
                    env = {"l": rank, "k": level, "nmax": nmax}
                    for params in _param_grid(entry.params, env):
                        if evaluate(entry.when, dict(env, **dict(params))):
                            out.append(Instance(row, entry, cell, rank, level, params))
    return out


def find_row(table_id: str, key: str) -> TableRow:
    for row in _table(table_id):
        if row.key == key:
            return row
    raise TableError(f"no row {key!r} in table {table_id!r}")


def _table(table_id: str) -> tuple[TableRow, ...]:
    if table_id not in TABLES:
        raise TableError(f"unknown table id {table_id!r}; expected one of {', '.join(TABLES)}")
    return TABLES[table_id]


# ---------------------------------------------------------------------------
# verification


@lru_cache(maxsize=None)
def level_data(datum: RootDatum, level: int) -> tuple[WeylElement, AffineWeight, frozenset[int]]:
    v, kp = min_dominant_v(datum, level)
    return v, kp, sing_set(kp)


def duflo_z(datum: RootDatum, level: int) -> WeylElement:
    """v^-1 times the product of the singular reflections of kappa+."""
    v, _, sing = level_data(datum, level)
    z = v.inverse()
    for i in sorted(sing):
        z = z * simple_reflection(datum, i)
    return z


def z_rule(inst: Instance) -> str:
    """Which element carries the module: ``override``, ``duflo`` or ``transport`` (z = w v^-1)."""
    if inst.cell.override_z is not None:
        return "override"
    if inst.row.duflo_rule and inst.is_trivial_chi():
        return "duflo"
    return "transport"


def z_for(inst: Instance, w: WeylElement | None = None) -> WeylElement:
    datum = inst.datum
    rule = z_rule(inst)
    if rule == "override":
        return from_word(datum, expand(inst.cell.override_z, inst.env))
    if rule == "duflo":
        return duflo_z(datum, inst.level)
    v, _, _ = level_data(datum, inst.level)
    w = from_word(datum, inst.word) if w is None else w
    return w * v.inverse()


def computed_label(inst: Instance) -> AffineWeight:
    """z . kappa+, the highest weight of the module the row attaches to its character."""
    _, kp, _ = level_data(inst.datum, inst.level)
    return dot_action(z_for(inst), kp)


def verify_instance(inst: Instance, structure: bool = True) -> Report:
    rep = Report()
    tag = inst.tag
    datum = inst.datum
    try:
        w = from_word(datum, inst.word)
    except ValueError as exc:
        rep.add(tag, "parse", False, str(exc), inst.entry.word)
        return rep
    vac = vacuum_weight(datum, inst.level)
    _, kp, sing = level_data(datum, inst.level)
    rule = z_rule(inst)
    z = z_for(inst, w)
    got = dot_action(z, kp)
    exp = inst.expected()
    rep.add(tag, "label", got.same(exp), format_weight(got), format_weight(exp))
    rep.add(tag, "dominant", got.is_finite_dominant(), format_weight(got), "dominant")
    if rule == "duflo":
        rep.add(tag, "duflo", got.same(vac, strict=True), format_weight(got, True), format_weight(vac, True))
    elif rule == "transport":
        via_w = dot_action(w, vac)
        rep.add(tag, "transport", via_w.same(got), format_weight(via_w), format_weight(got))
    if structure and inst.row.check_fc:
        fc = is_fully_commutative(w)
        rep.add(tag, "fc", fc, "fc" if fc else "not fc", "fc")
        rep.add(tag, "spherical", is_two_sided_spherical(w), _sph(w), "two-sided")
        rep.add(tag, "reduced", w.length == sum(1 for x in inst.word if isinstance(x, int)),
                w.length, "word length")
        rep.add(tag, "z-spherical", is_left_spherical(z), "left" if is_left_spherical(z) else "no", "left")
        rep.add(tag, "z-ends-with-sing", ends_with_all(z, sing), sorted(z.right_descents), sorted(sing))
    return rep


def _sph(w: WeylElement) -> str:
    return f"left={sorted(w.left_descents)} right={sorted(w.right_descents)}"


def verify_row(row: TableRow, n_max: int = DEFAULT_NMAX, structure: bool = True, ranks=None) -> Report:
    rep = Report()
    for inst in instances(row, n_max, ranks):
        rep.extend(verify_instance(inst, structure))
    return rep


def verify_table(table_id: str, n_max: int = DEFAULT_NMAX, structure: bool = True) -> Report:
    rep = Report()
    for row in _table(table_id):
        rep.extend(verify_row(row, n_max, structure))
    return rep


def _subregular_types() -> dict[str, list[tuple[RootDatum, list[int]]]]:
    """Type key of the level table -> [(datum, tabulated levels)]."""
    out: dict[str, list[tuple[RootDatum, list[int]]]] = {}
    for row in SUBREGULAR:
        for rank in row.ranks:
            datum = build(row.family, rank)
            key = row.family if row.family in "ABCD" else datum.name
            levels = sorted({k for e in row.entries for c in e.cells for k in _levels(row, c, rank)}, reverse=True)
            out.setdefault(key, []).append((datum, levels))
    return out


def verify_level_ranges() -> Report:
    rep = Report()
    for key, expected in SUBREGULAR_LEVEL_COUNTS.items():
        for datum, levels in _subregular_types()[key]:
            tag = f"levels/{datum.name}"
            rep.add(tag, "d_max_comark", datum.d_max_comark == expected, datum.d_max_comark, expected)
            rep.add(tag, "columns", levels == list(range(-1, -expected - 1, -1)), levels, f"-1..-{expected}")
    return rep


def shortest_rigid_between(datum: RootDatum, first: int, last: int, max_len: int) -> list[WeylElement]:
    """Shortest rigid elements (no Omega factor) whose unique word starts with ``first`` and ends with ``last``."""
    found = [
        w for w in enumerate_rigid(datum, max_len)
        if w.omega_label == 0 and w.length and w.left_descents == {first} and w.right_descents == {last}
    ]
    if not found:
        return []
    m = min(w.length for w in found)
    return [w for w in found if w.length == m]


def verify_singleton_sing() -> Report:
    rep = Report()
    for key, items in _subregular_types().items():
        for datum, levels in items:
            for k in levels:
                tag = f"sing/{datum.name}@{k}"
                v, kp, sing = level_data(datum, k)
                rep.add(tag, "singleton", len(sing) == 1, sorted(sing), "one node")
                if len(sing) != 1:
                    continue
                (t,) = sing
                tv = simple_reflection(datum, t) * v
                cands = shortest_rigid_between(datum, t, 0, v.length + 1)
                ok = tv.length == v.length + 1 and cands == [tv]
                rep.add(tag, "tv", ok, format_word(tv.word), [format_word(c.word) for c in cands])
                fixed = dot_action(simple_reflection(datum, t), kp)
                rep.add(tag, "fixes", fixed.same(kp, strict=True), format_weight(fixed, True), format_weight(kp, True))
    return rep


# ---------------------------------------------------------------------------
# fusion hook


@dataclass(frozen=True)
class BoundRow:
    """A row at fixed rank and level, as consumed by ``fusion.fuse_modules``."""

    row: TableRow
    rank: int
    level: int
    search: int = 12

    @property
    def group(self) -> Group:
        return row_group(self.row, self.rank, self.level)

    def module_for(self, irrep: IrrepLabel, level: int) -> str:
        if level != self.level:
            raise TableError(f"row bound at level {self.level}, asked for {level}")
        return _module_index(self.row, self.rank, self.level, self.search).get(irrep.data) or _missing(irrep, self)


def _missing(irrep: IrrepLabel, b: BoundRow) -> str:
    raise FusionError(f"no entry of {b.row.key} at rank {b.rank}, level {b.level} carries {irrep}")


@lru_cache(maxsize=None)
def _module_index(row: TableRow, rank: int, level: int, search: int) -> dict:
    out = {}
    for inst in instances(row, search, ranks=[rank]):
        if inst.level != level:
            continue
        rep = inst.irrep()
        if rep is not None and rep.data not in out:
            out[rep.data] = format_weight(computed_label(inst))
    return out


def bind(table_id: str, key: str, rank: int | None = None, level: int | None = None) -> BoundRow:
    row = find_row(table_id, key)
    rank = row.ranks[0] if rank is None else rank
    if level is None:
        level = instances(row, 0, ranks=[rank])[0].level
    return BoundRow(row, rank, level)


# ---------------------------------------------------------------------------
# emission


def _records(table_id: str, nmax: int) -> list[tuple[str, ...]]:
    recs = []
    for row in _table(table_id):
        for inst in instances(row, nmax):
            recs.append(_record(inst))
    return recs


def _record(inst: Instance) -> tuple[str, ...]:
    return (
        inst.row.family,
        str(inst.rank),
        str(inst.level),
        inst.chi or "-",
        inst.word_text,
        format_weight(computed_label(inst)),
    )


def emit_table(table_id: str, fmt: str = "tsv", nmax: int = EMIT_NMAX) -> str:
    if fmt not in FORMATS:
        raise TableError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    rows = _table(table_id)
    if fmt == "tsv":
        lines = ["\t".join(TSV_COLUMNS)] + ["\t".join(r) for r in _records(table_id, nmax)]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "table": table_id,
            "rows": [
                {
                    "row": row.key,
                    "family": row.family,
                    "ranks": list(row.ranks),
                    "orbit": row.orbit,
                    "entries": [dict(zip(TSV_COLUMNS, _record(i))) for i in instances(row, nmax)],
                }
                for row in rows
            ],
        }
        return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    body = [" & ".join(rf"\texttt{{{c}}}" for c in r) + r" \\" for r in _records(table_id, nmax)]
    head = " & ".join(TSV_COLUMNS) + r" \\ \hline"
    return "\n".join([r"\begin{tabular}{llllll}", head, *body, r"\end{tabular}"]) + "\n"


def parse_emitted(text: str, fmt: str) -> list[tuple[str, ...]]:
    """Records back from any emitted format."""
    if fmt == "tsv":
        lines = text.splitlines()
        return [tuple(x.split("\t")) for x in lines[1:]]
    if fmt == "json":
        doc = json.loads(text)
        return [tuple(e[c] for c in TSV_COLUMNS) for r in doc["rows"] for e in r["entries"]]
    if fmt == "tex":
        out = []
        for line in text.splitlines()[2:-1]:
            cells = line.removesuffix(r" \\").split(" & ")
            out.append(tuple(re.fullmatch(r"\\texttt\{(.*)\}", c).group(1) for c in cells))
        return out
    raise TableError(f"unknown format {fmt!r}")


def fixture_name(table_id: str) -> str:
    return table_id.replace("-", "_") + ".tsv"


__all__ = [
    "BoundRow",
    "Check",
    "Instance",
    "Report",
    "TableError",
    "bind",
    "computed_label",
    "duflo_z",
    "emit_table",
    "find_row",
    "fixture_name",
    "instances",
    "level_data",
    "parse_emitted",
    "row_group",
    "verify_instance",
    "verify_level_ranges",
    "verify_row",
    "verify_singleton_sing",
    "verify_table",
]
