"""Golden transcription of the three result tables.

Words and labels are templates (see ``templates``).  Parameters available in
every expression: ``l`` (rank), ``k`` (level), ``nmax`` (instantiation bound),
plus whatever an entry declares in ``params``.  Labels are finite weights in
the literal syntax of ``weights.parse_weight``; the level is implied.

An entry's ``chi`` is None where the table leaves the character implicit
(characters in symmetric position).  Variants encode the inline
parentheticals of the tables, e.g. the special label at l = 3.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Cell:
    level: str  # expression in l, or "k" for the row's level range
    label: str
    variants: tuple[tuple[str, str], ...] = ()  # (condition, label), first match wins
    override_z: str | None = None  # word template for z replacing w v^-1


@dataclass(frozen=True)
class Entry:
    chi: str | None
    word: str
    cells: tuple[Cell, ...]
    params: tuple[tuple[str, str], ...] = ()  # (name, "lo..hi"), nested left to right
    when: str = "1"


@dataclass(frozen=True)
class TableRow:
    table: str
    key: str
    family: str
    ranks: tuple[int, ...]
    orbit: str
    group: tuple[tuple[str, str], ...]  # (condition, group name template)
    entries: tuple[Entry, ...]
    kappa_range: tuple[str, str] | None = None  # (lo, hi) for cells at level "k"
    kappa_when: str = "1"
    notes: str = ""
    check_fc: bool = True
    duflo_rule: bool = True  # trivial chi uses z = v^-1 prod Sing


def _levels(label_by_level: dict[int, str], **kw) -> tuple[Cell, ...]:
    return tuple(Cell(str(k), lab, **kw) for k, lab in label_by_level.items())


N0 = (("n", "0..{nmax}"),)
N1 = (("n", "1..{nmax}"),)

# ---------------------------------------------------------------------------
# subregular orbits

SUBREGULAR = (
    TableRow(
        "sous-reguliers", "Al", "A", (2, 3, 4, 5, 6), "subregular", (("1", "Gm"),),
        (
            Entry("{n}", "(0 g1)^{n} 0", (Cell("-1", "{n}*w{l}"),), N0),
            Entry("{-n}", "(0 g{l})^{n} 0", (Cell("-1", "{n}*w1"),), N1),
        ),
    ),
    TableRow(
        "sous-reguliers", "A1", "A", (1,), "subregular", (("1", "SL2"),),
        (Entry("{n}", "(0 g1)^{n} 0", (Cell("-1", "{n}*w1"),), N0),),
    ),
    TableRow(
        "sous-reguliers", "Bl", "B", (3, 4, 5, 6), "subregular", (("1", "Klein"),),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0"})),
            Entry(None, "0 2 1 g1", (Cell("-1", "w3", variants=(("l==3", "2*w3"),)), Cell("-2", "0"))),
            Entry(None, "0 2..{l} {l-1}..2 0", _levels({-1: "{2*l-3}*w1", -2: "{2*l-5}*w1"})),
            Entry(None, "0 2..{l} {l-1}..1 g1", _levels({-1: "{2*l-4}*w1+w2", -2: "{2*l-5}*w1"})),
        ),
    ),
    TableRow(
        "sous-reguliers", "Cl", "C", (2, 3, 4, 5, 6), "subregular", (("1", "Z2xGm"),),
        (
            Entry("V{n}", "(0 1..{l-1} g{l})^{n} 0", (Cell("-1", "{n*l}*w1"),), N0),
            Entry("sign", "0 1 0", (Cell("-1", "w2"),)),
        ),
    ),
    TableRow(
        "sous-reguliers", "Dl", "D", (4, 5, 6, 7), "subregular", (("l%2==1", "Z4"), ("1", "Klein")),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0"})),
            Entry("sign", "0 2 1 g1", (Cell("-1", "w3", variants=(("l==4", "w3+w4"),)), Cell("-2", "0"))),
            # {i, j} = {l-1, l}
            Entry(None, "0 2..{l-2} {l-1} g{l-1}", _levels({-1: "{l-3}*w1+w{l}", -2: "{l-4}*w1"})),
            Entry(None, "0 2..{l-2} {l} g{l}", _levels({-1: "{l-3}*w1+w{l-1}", -2: "{l-4}*w1"})),
        ),
    ),
    TableRow(
        "sous-reguliers", "E6", "E", (6,), "subregular", (("1", "Z3"),),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0", -3: "0"})),
            # (i, j) = (1, 4) or (5, 2)
            Entry(None, "0 6 3 g1 6 0", _levels({-1: "2*w4", -2: "w4", -3: "0"})),
            Entry(None, "0 6 3 g5 6 0", _levels({-1: "2*w2", -2: "w2", -3: "0"})),
        ),
    ),
    TableRow(
        "sous-reguliers", "E7", "E", (7,), "subregular", (("1", "Z2"),),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0", -3: "0", -4: "0"})),
            Entry("sign", "0..6 g6", _levels({-1: "3*w7", -2: "2*w7", -3: "w7", -4: "0"})),
        ),
    ),
    TableRow(
        "sous-reguliers", "E8", "E", (8,), "subregular", (("1", "Z1"),),
        (Entry("1", "0", _levels({k: "0" for k in range(-1, -7, -1)})),),
    ),
    TableRow(
        "sous-reguliers", "F4", "F", (4,), "subregular", (("1", "Z2"),),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0", -3: "0"})),
            Entry("sign", "0123210", _levels({-1: "5*w4", -2: "3*w4", -3: "w4"})),
        ),
    ),
    TableRow(
        "sous-reguliers", "G2", "G", (2,), "subregular", (("1", "S3"),),
        (
            Entry("1", "0", _levels({-1: "0", -2: "0"})),
            Entry("sign", "01210", _levels({-1: "4*w2", -2: "w2"})),
            Entry("2dim", "0121210", _levels({-1: "3*w1", -2: "w1"})),
        ),
    ),
)

# ---------------------------------------------------------------------------
# sub-subregular orbits and beyond


def _w3(m: str, u: str, v: str) -> str:
    """(0 1..(m-1) g_l)^u (0 l..(m+1) g_1)^v g_m."""
    return f"(0 1.+{{({m})-1}} g{{l}})^{{{u}}} (0 {{l}}.-{{({m})+1}} g1)^{{{v}}} g{{{m}}}"


_A_OMIT = "not (2*k==-(l+1) and n>0)"  # non-dominant characters at k = -(l+1)/2
_B = (("b", "1..{-k-1}"),)

SUBSUBREGULAR = (
    TableRow(
        "sous-sous", "Al", "A", (3, 4, 5, 6, 7), "sigma",
        (("2*k==-(l+1)", "KerDet{-k}"), ("1", "Ker({l+1+k},{-k})")),
        (
            Entry("({-n},0)", _w3("-k", "n-k", "0"), (Cell("k", "{n}*w{-k}"),), N0, when=_A_OMIT),
            Entry(
                "({b+np},{b})", _w3("np-k", "-k-b", "b"),
                (Cell("k", "{l+1+2*k-np}*w{b}+{np}*w{l+1+k+b}"),),
                _B + (("np", "1..{l+2*k}"),),
            ),
            Entry("({b-n},{b})", _w3("-k", "n-k-b", "b"), (Cell("k", "{l+1+2*k}*w{b}+{n}*w{-k}"),), _B + N0, when=_A_OMIT),
            Entry("({n},0)", _w3("l+1+k", "0", "n-k"), (Cell("k", "{n}*w{l+1+k}"),), N1),
            Entry(
                "({b+l+1+2*k+n},{b})", _w3("l+1+k", "-k-b", "b+n"),
                (Cell("k", "{n}*w{l+1+k}+{l+1+2*k}*w{l+1+k+b}"),),
                _B + N0,
            ),
        ),
        kappa_range=("-((l+1)//2)", "-2"),
        kappa_when="2*k>=-l or 2*k==-(l+1)",
    ),
    TableRow(
        "sous-sous", "Bl", "B", (5, 6, 7), "sigma", (("1", "Klein"),),
        (
            Entry("1", "021320", _levels({-3: "0", -4: "0"})),
            Entry(
                None, "0 2 1 3..{l} {l-1}..3 2 0",
                (
                    Cell("-3", "{2*l-6}*w1"),
                    Cell("-4", "{2*l-9}*w1", override_z="0 2 1 3..{l} {l-1}..4 2"),
                ),
            ),
            Entry(None, "0213240321 g1", (Cell("-3", "w5", variants=(("l==5", "2*w5"),)), Cell("-4", "0"))),
            Entry(None, "0 2 1 3 2 4..{l} {l-1}..4 0 3 2 1 g1", _levels({-3: "{2*l-8}*w1+w4", -4: "{2*l-9}*w1"})),
        ),
    ),
    TableRow(
        "sous-sous", "B4", "B", (4,), "sigma", (("1", "Z2xGm"),),
        (
            Entry("V{n}", "(0234 g1)^{n} 021320", (Cell("-3", "{2*n}*w4"),), N0),
            Entry("sign", "02134320", (Cell("-3", "w1"),)),
        ),
    ),
    TableRow(
        "sous-sous", "Cl", "C", (4, 5, 6, 7, 8), "sigma",
        (("l%2==0 or k%2!=0", "D8"), ("1", "Q8")),
        (
            Entry("1", "prod[i=0..{-2*k-2}]({i}..0)", (Cell("k", "0"),)),
            Entry(None, "prod[i=0..{-2*k-1}]({i}..0)", (Cell("k", "w{-2*k}"),)),
            Entry(
                None, "0..{l} {l-1}..{-2*k-2} prod[i=0..{-2*k-3}]({i}..0)",
                (Cell("k", "{2*l+3+3*k}*w1"),),
            ),
            Entry(
                None, "0..{l} {l-1}..{-2*k-1} prod[i=0..{-2*k-2}]({i}..0)",
                (Cell("k", "{2*l+3+4*k}*w1+w{-2*k-1}"),),
            ),
            Entry("2dim", "(0..{l})^{-k} g{l}", (Cell("k", "{l+2+2*k}*w{-k}"),)),
        ),
        kappa_range=("-(l//2)", "-2"),
    ),
    TableRow(
        "sous-sous", "Cl-odd", "C", (3, 5, 7), "sigma",
        (("(l+1)%4==0", "Z2xGm"), ("1", "N_SL2_Gm")),
        (
            # r = n - l [n/l]; Lambda_r is dropped when r = 0
            Entry(
                "V{2*n}", "(0..{l})^{n} prod[i=0..{l-1}]({i}..0)",
                (Cell("k", "w{n-l*(n//l)}+{n+n//l}*w{l}", variants=(("n%l==0", "{n+n//l}*w{l}"),)),),
                (("n", "0..{nmax}"),),
            ),
            Entry(
                "V{2*n-l}", "(0..{l})^{n} g{l}",
                (
                    Cell(
                        "k", "w{n-l*(n//l)}+{n+n//l-(l+1)//2}*w{l}",
                        variants=(("n%l==0", "{n+n//l-(l+1)//2}*w{l}"),),
                    ),
                ),
                (("n", "{(l+1)//2}..{(l+1)//2+nmax}"),),
            ),
            Entry("sign", "0..{l} {l-1} prod[i=0..{l-2}]({i}..0)", (Cell("k", "2*w1"),)),
        ),
        kappa_range=("-(l+1)//2", "-(l+1)//2"),
    ),
    TableRow(
        "sous-sous", "Cl-even", "C", (2, 4, 6), "sigma", (("1", "Z2xSL2"),),
        (
            Entry("{n}", "(0..{l})^{n} prod[i=0..{l}]({i}..0)", (Cell("k", "{n}*w{l}"),), N0),
            Entry("sign*{n}", "(0..{l})^{n+l//2+1} g{l}", (Cell("k", "{n}*w{l}"),), N0),
        ),
        kappa_range=("-(l//2)-1", "-(l//2)-1"),
    ),
    TableRow(
        "sous-sous", "Dl", "D", (6, 7, 8), "sigma", (("l%2==1", "Z4"), ("1", "Klein")),
        (
            Entry("1", "021320", _levels({-3: "0", -4: "0"})),
            Entry("sign", "0213240321 g1", _levels({-3: "w5", -4: "0"})),
            # {i, j} = {l-1, l}
            Entry(None, "0 2..{l-2} {l} 1 2..{l-2} {l-1} g{l-1}", _levels({-3: "{l-5}*w2+w{l-1}", -4: "{l-6}*w2"})),
            Entry(None, "0 2..{l-2} {l-1} 1 2..{l-2} {l} g{l}", _levels({-3: "{l-5}*w2+w{l}", -4: "{l-6}*w2"})),
        ),
    ),
    TableRow(
        "sous-sous", "D5", "D", (5,), "sigma", (("1", "Gm"),),
        (
            Entry("{n}", "0 2 (1 3 g4)^{n} 1 3 2 0", (Cell("-3", "{n}*w4"),), N0),
            Entry("{-n}", "0 2 (1 3 g5)^{n} 1 3 2 0", (Cell("-3", "{n}*w5"),), N1),
        ),
    ),
    TableRow(
        "sous-sous", "E6", "E", (6,), "sigma", (("1", "Gm"),),
        (
            Entry("{n}", "0 6 3 2 4 3 (g1 1 2 4 3)^{n} 6 0", (Cell("-4", "{2*n}*w1"),), N0),
            Entry("{-n}", "0 6 3 2 4 3 (g5 5 2 4 3)^{n} 6 0", (Cell("-4", "{2*n}*w5"),), N1),
        ),
    ),
    TableRow(
        "sous-sous", "E7", "E", (7,), "sigma", (("1", "Z2"),),
        (
            Entry("1", "0123473210", _levels({-5: "0", -6: "0"})),
            Entry("sign", "012347352413273456 g6", _levels({-5: "w1+3*w6", -6: "2*w6"})),
        ),
    ),
    TableRow(
        "sous-sous", "E8", "E", (8,), "sigma", (("1", "Z1"),),
        (Entry("1", "01234568543210", _levels({-7: "0", -8: "0", -9: "0", -10: "0"})),),
    ),
    TableRow(
        "sous-sous", "F4", "F", (4,), "sigma", (("1", "Z2"),),
        (
            Entry("1", "0123243210", _levels({-4: "0"})),
            Entry("sign", "012324130213243210", _levels({-4: "4*w4"})),
        ),
    ),
)

# ---------------------------------------------------------------------------
# rank two, remaining orbits

RANK_TWO = (
    TableRow(
        "rang2", "A2", "A", (2,), "zero", (("1", "SL3"),),
        (
            Entry(
                "({m},{n})", "(0 1 g2)^{n+1} (0 2 g1)^{m+1} 0",
                (Cell("-2", "{m}*w1+{n}*w2"),),
                (("m", "0..{nmax}"), ("n", "0..{nmax}")),
            ),
        ),
        check_fc=False,
        duflo_rule=False,
    ),
    TableRow(
        "rang2", "G2", "G", (2,), "minimal", (("1", "SL2"),),
        (
            Entry(
                "{n}", "01212010(210)^{n}21210",
                (Cell("-3", "{n}*w1", variants=(("n%2==1", "{n}*w1+w2"),)),),
                N0,
            ),
        ),
        check_fc=False,
        duflo_rule=False,
    ),
)

TABLES: dict[str, tuple[TableRow, ...]] = {
    "sous-reguliers": SUBREGULAR,
    "sous-sous": SUBSUBREGULAR,
    "rang2": RANK_TWO,
}

# number of level columns per type in the subregular table
SUBREGULAR_LEVEL_COUNTS = {"A": 1, "B": 2, "C": 1, "D": 2, "E6": 3, "E7": 4, "E8": 6, "F4": 3, "G2": 2}
