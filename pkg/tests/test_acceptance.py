"""Acceptance criteria, checked at zero tolerance.

Each ``criterion_N`` returns ``(ok, detail)``.  Under pytest the outcome is
recorded for the terminal summary; run as a script it prints one line per
criterion.
"""

from __future__ import annotations

import os
import random
import sys
from collections import Counter
from fractions import Fraction
from itertools import product

sys.path.insert(0, os.path.dirname(__file__))

import pytest

import oracles as O
from weyl_cells import affine_weyl as aw
from weyl_cells import fusion as F
from weyl_cells import kl
from weyl_cells import orbits as Orb
from weyl_cells.rootdata import all_types, build
from weyl_cells.tables import (
    TABLES,
    bind,
    find_row,
    instances,
    verify_level_ranges,
    verify_row,
    verify_singleton_sing,
    verify_table,
)
from weyl_cells.tables.engine import computed_label, level_data, z_rule
from weyl_cells.weights import AffineWeight, dot_action, format_weight, parse_weight, sing_set, vacuum_weight


def _short(failures, k: int = 3) -> str:
    return "; ".join(f"{c.row} [{c.check}] got {c.computed} want {c.expected}" for c in failures[:k])


# -- 1 ----------------------------------------------------------------------------


def criterion_1() -> tuple[bool, str]:
    """Table 1: w . (k Lhat_0) against the tabulated label, n <= 4.

    For trivial-character rows at k <= -2 the weight w . (k Lhat_0) is not
    dominant, so it names no module; those rows are read through
    z = v^-1 prod Sing, the rule criterion 2 prescribes for trivial characters.
    """
    bad, n_lit, n_duflo = [], 0, 0
    labels: dict[tuple[str, int], set[str]] = {}
    for row in TABLES["sous-reguliers"]:
        for inst in instances(row, 4):
            d = inst.datum
            if z_rule(inst) == "duflo":
                got = computed_label(inst)
                ok = got.same(vacuum_weight(d, inst.level), strict=True) and got.same(inst.expected())
                n_duflo += 1
            else:
                got = dot_action(aw.from_word(d, inst.word), vacuum_weight(d, inst.level))
                ok = got.same(inst.expected())
                n_lit += 1
            labels.setdefault((d.name, inst.level), set()).add(format_weight(got))
            if not ok:
                bad.append(f"{inst.tag} got {format_weight(got)} want {inst.expected_finite}")
    g2 = dot_action(aw.from_word(build("G", 2), "0.1.2.1.0"), vacuum_weight(build("G", 2), -1))
    examples = {
        "G2": format_weight(g2) == "4*w2@-1",
        "F4": all(f"{a}@{k}" in labels[("F4", k)] for a, k in (("5*w4", -1), ("3*w4", -2), ("w4", -3))),
        "E7": all(f"{a}@{k}" in labels[("E7", k)] for a, k in (("3*w7", -1), ("2*w7", -2), ("w7", -3), ("0", -4))),
        "A1": labels[("A1", -1)] >= {"w1@-1", "2*w1@-1", "3*w1@-1", "4*w1@-1"},
    }
    ok = not bad and all(examples.values())
    detail = f"{n_lit} literal + {n_duflo} trivial-character instances, examples {sorted(k for k, v in examples.items() if v)}"
    return ok, detail if ok else f"{len(bad)} mismatches: {'; '.join(bad[:3])}"


# -- 2 ----------------------------------------------------------------------------


def criterion_2() -> tuple[bool, str]:
    """Table 2 at n <= 3: labels, transport z = w v^-1, Duflo z for trivial characters."""
    rep = verify_table("sous-sous", 3, structure=False)
    e7 = bind("sous-sous", "E7", 7, -5)
    e7_ok = "w1+3*w6@-5" in {format_weight(computed_label(i)) for i in instances(e7.row, 3) if i.level == -5}
    e8 = [i for i in instances(find_row("sous-sous", "E8"), 3) if i.level in (-7, -8, -9, -10)]
    e8_ok = {i.level for i in e8} == {-7, -8, -9, -10} and all(
        computed_label(i).same(vacuum_weight(i.datum, i.level), strict=True) for i in e8
    )
    transport_bad = []
    for row in TABLES["sous-sous"]:
        for inst in instances(row, 3):
            d = inst.datum
            v, kp, _ = level_data(d, inst.level)
            w = aw.from_word(d, inst.word)
            if not dot_action(w * v.inverse(), kp).same(dot_action(w, vacuum_weight(d, inst.level)), strict=True):
                transport_bad.append(inst.tag)
    fails = rep.failures
    ok = rep.ok and e7_ok and e8_ok and not transport_bad
    counts = Counter(c.check for c in rep.checks)
    if ok:
        return True, f"{len(rep.checks)} checks ({dict(counts)}), E7@-5 and E8 vacuum rows reproduced"
    rows = sorted({c.row.split(":")[0] for c in fails})
    return False, (f"{len(fails)}/{len(rep.checks)} checks fail ({dict(Counter(c.check for c in fails))}) "
                   f"in {len(rows)} instances; transport identity {'ok' if not transport_bad else transport_bad[:2]}; E7@-5 {'ok' if e7_ok else 'FAIL'}, E8 vacuum {'ok' if e8_ok else 'FAIL'}; "
                   f"{_short(fails)}")


# -- 3 ----------------------------------------------------------------------------


def criterion_3() -> tuple[bool, str]:
    """Rank-two table: A2 zero orbit (m, n <= 2) and G2 minimal orbit (n <= 3)."""
    a2 = verify_row(find_row("rang2", "A2"), 2, structure=False)
    g2 = verify_row(find_row("rang2", "G2"), 3, structure=False)
    expect_a2 = {f"{m},{n}" for m in range(3) for n in range(3)}
    got_a2 = {f"{dict(i.params)['m']},{dict(i.params)['n']}" for i in instances(find_row("rang2", "A2"), 2)}
    ok = a2.ok and g2.ok and got_a2 == expect_a2
    if ok:
        return True, f"A2 {len(a2.checks)} checks, G2 {len(g2.checks)} checks"
    return False, (f"A2 {len(a2.failures)}/{len(a2.checks)} fail, G2 {len(g2.failures)}/{len(g2.checks)} fail; "
                   f"{_short(a2.failures + g2.failures)}")


# -- 4 ----------------------------------------------------------------------------


def criterion_4() -> tuple[bool, str]:
    expected = {"A1": 1, "A4": 1, "B3": 2, "B6": 2, "C2": 1, "C5": 1, "D4": 2, "D7": 2,
                "E6": 3, "E7": 4, "E8": 6, "F4": 3, "G2": 2}
    direct = {name: build(name[0], int(name[1])).d_max_comark for name in expected}
    rep = verify_level_ranges()
    ok = direct == expected and rep.ok
    return ok, f"d_max_comark {direct}" if ok else f"{direct} vs {expected}; {_short(rep.failures)}"


# -- 5 ----------------------------------------------------------------------------


def criterion_5() -> tuple[bool, str]:
    rep = verify_singleton_sing()
    minus = {d.name: sorted(sing_set(vacuum_weight(d, -1))) for d in all_types(8)}
    minus_ok = all(v == [0] for v in minus.values())
    fixes = [c for c in rep.checks if c.check == "fixes"]
    ok = rep.ok and minus_ok
    if ok:
        return True, f"{len(fixes)} (type, k) pairs singleton and fixed; Sing(-Lhat_0) = {{0}} on {len(minus)} types"
    return False, f"{_short(rep.failures)}; bad -Lhat_0: {[k for k, v in minus.items() if v != [0]]}"


# -- 6 ----------------------------------------------------------------------------


def criterion_6() -> tuple[bool, str]:
    words, not_fc = set(), []
    for table_id in ("sous-reguliers", "sous-sous"):
        for row in TABLES[table_id]:
            for inst in instances(row, 4 if table_id == "sous-reguliers" else 3):
                key = (inst.datum.name, inst.word_text)
                if key in words:
                    continue
                words.add(key)
                if not kl.is_fully_commutative(aw.from_word(inst.datum, inst.word)):
                    not_fc.append(inst.tag)
    g2 = build("G", 2)
    rigid = {
        aw.format_word(w.word)
        for w in aw.enumerate_rigid(g2, 9)
        if w.length and aw.is_two_sided_spherical(w) and w.left_descents == {0} and w.right_descents == {0}
    }
    table_g2 = {i.word_text for i in instances(find_row("sous-reguliers", "G2"), 4)}
    ok = not not_fc and rigid == table_g2
    detail = f"{len(words)} distinct words FC; G2 rigid spherical = {sorted(rigid, key=len)}"
    return ok, detail if ok else f"non-FC {not_fc[:3]}; rigid {sorted(rigid)} vs table {sorted(table_g2)}"


# -- 7 ----------------------------------------------------------------------------


def _finite_dihedral(name: str) -> set:
    d = build(name[0], 2)
    els, frontier = {aw.identity(d)}, [aw.identity(d)]
    while frontier:
        frontier = [x for w in frontier for x in (w.rmul(1), w.rmul(2)) if x not in els and not els.add(x)]
    return els


def criterion_7() -> tuple[bool, str]:
    d = build("A", 1)
    lengths = O.bfs_lengths(d, 10)
    lower = {w: O.subword_lower_set(d, O.one_reduced_word(w, lengths)) for w in lengths}
    rm, pm = {}, {}
    pairs, bad = 0, []
    for y in lengths:
        words = O.all_reduced_words(y, lengths)
        for x in lower[y]:
            pairs += 1
            ref = O.kl_via_r(x, y, lengths, lower, rm, pm)
            polys = {kl.kl_poly(x, y, w).coeffs for w in words} | {kl.kl_poly(x, y).coeffs}
            mu_ok = kl.mu(x, y) == int(lengths[y] - lengths[x] == 1)
            if ref != [1] or polys != {(1,)} or not mu_ok:
                bad.append((x, y))
    orders = {}
    for name in ("A2", "C2", "G2"):
        els = _finite_dihedral(name)
        orders[name] = len(els)
        for x, y in product(els, repeat=2):
            if aw.bruhat_leq(x, y) and kl.kl_poly(x, y).coeffs != (1,):
                bad.append((x, y))
    ok = not bad and sorted(orders.values()) == [6, 8, 12]
    return ok, f"A1: {pairs} Bruhat pairs up to length 10; dihedral orders {sorted(orders.values())}" if ok else f"{len(bad)} bad pairs"


# -- 8 ----------------------------------------------------------------------------

_LETTERS = {"A1": [0, 1], "A3": [0, 1, 2, 3], "B3": [0, 1, 2, 3], "C2": [0, 1, 2], "G2": [0, 1, 2],
            "D4": [0, 1, 2, 3, 4, "g1", "g3"], "E6": [0, 1, 2, 3, 4, 5, 6, "g1"]}


def _dot_law(n: int = 500) -> bool:
    rng = random.Random(500)
    for _ in range(n):
        name = rng.choice(sorted(_LETTERS))
        d = build(name[0], int(name[1]))
        u = [rng.choice(_LETTERS[name]) for _ in range(rng.randint(0, 10))]
        v = [rng.choice(_LETTERS[name]) for _ in range(rng.randint(0, 10))]
        lam = AffineWeight.from_pairings(d, [rng.randint(-6, 6) for _ in d.nodes], Fraction(rng.randint(-9, 9), rng.randint(1, 6)))
        x, y = aw.from_word(d, u), aw.from_word(d, v)
        if not dot_action(x * y, lam).same(dot_action(x, dot_action(y, lam)), strict=True):
            return False
    return True


def _bruhat_antisymmetric() -> bool:
    lengths = O.bfs_lengths(build("G", 2), 6)
    els = list(lengths)
    for x in els:
        if not aw.bruhat_leq(x, x):
            return False
        for y in els:
            if x != y and aw.bruhat_leq(x, y) and aw.bruhat_leq(y, x):
                return False
    return True


def _fusion_reps(group: str) -> list:
    g = F.parse_group(group)
    if group == "SL2":
        return [g.irrep(n) for n in range(5)]
    if group == "SL3":
        return [g.irrep((a, b)) for a in range(4) for b in range(2) if a + 2 * b <= 3]
    if group == "O2":
        return [g.irrep(x) for x in ("1", "sign", 1, 2, 3, 4)]
    return F.irreps(g)


def _fusion_axioms() -> bool:
    for group in ("S3", "Q8", "D8", "Klein", "O2", "SL2", "SL3"):
        reps = _fusion_reps(group)
        for a, b in product(reps, repeat=2):
            ab = F.tensor(a, b)
            if ab != F.tensor(b, a) or sum(m * x.dim for x, m in ab.items()) != a.dim * b.dim:
                return False
            for c in reps:
                left, right = Counter(), Counter()
                for x, m in ab.items():
                    for y, k in F.tensor(x, c).items():
                        left[y] += m * k
                for x, m in F.tensor(b, c).items():
                    for y, k in F.tensor(a, x).items():
                        right[y] += m * k
                if left != right:
                    return False
    return True


def _orbit_axioms() -> bool:
    for n in range(1, 13):
        for ambient in ("so", "sp"):
            if ambient == "sp" and n % 2:
                continue
            for q in Orb.all_partitions(n):
                c = Orb.collapse(Orb.Partition(q, ambient, n))
                if Orb.collapse(c) != c or c != O.collapse_brute(Orb.Partition(q, ambient, n)):
                    return False
        parts = [Orb.Partition(q, "gl", n) for q in Orb.all_partitions(n)]
        leq = {(p, q): Orb.closure_leq(p, q) for p in parts for q in parts}
        for p in parts:
            if not leq[p, p]:
                return False
            for q in parts:
                if p != q and leq[p, q] and leq[q, p]:
                    return False
                if leq[p, q] and any(leq[q, r] and not leq[p, r] for r in parts):
                    return False
    return True


def criterion_8() -> tuple[bool, str]:
    results = {"dot-law x500": _dot_law(), "G2 Bruhat antisymmetry": _bruhat_antisymmetric(),
               "fusion ring axioms": _fusion_axioms(), "collapse/closure n<=12": _orbit_axioms()}
    ok = all(results.values())
    return ok, ", ".join(f"{k} {'ok' if v else 'FAIL'}" for k, v in results.items())


# -- 9 ----------------------------------------------------------------------------


def criterion_9() -> tuple[bool, str]:
    g2 = bind("sous-reguliers", "G2", 2, -1)
    got = F.fuse_modules(g2, -1, "2dim", "2dim")
    g2_ok = got == {"0@-1": 1, "4*w2@-1": 1, "3*w1@-1": 1}
    a1 = bind("sous-reguliers", "A1", 1, -1)
    d = build("A", 1)
    a1_ok = True
    for m, n in product(range(4), repeat=2):
        want = {format_weight(parse_weight(d, f"{j}*w1@-1")): 1 for j in range(abs(m - n), m + n + 1, 2)}
        a1_ok &= F.fuse_modules(a1, -1, str(m), str(n)) == want
    ok = g2_ok and a1_ok
    return ok, f"G2 2dim x 2dim -> {sorted(got)}; A1 Clebsch-Gordan n<=3 {'ok' if a1_ok else 'FAIL'}"


# -- 10 ---------------------------------------------------------------------------


def criterion_10() -> tuple[bool, str]:
    count, bad = 0, []
    ranks = {"A": range(1, 9), "B": range(4, 9), "C": range(2, 9), "D": range(5, 9)}
    for fam, rs in ranks.items():
        for r in rs:
            for k in Orb.sigma_levels(fam, r):
                p = Orb.sigma_partition(fam, r, k)
                q = Orb.parse_partition(str(p))
                count += 1
                sums = {"B": 2 * r, "C": 2 * r + 1}.get(fam, q.n)
                if not (q.is_valid and q == p and (q.ambient, q.n) == Orb.dual_ambient(fam, r) and sum(q.parts) == sums):
                    bad.append(f"{fam}{r}@{k}:{p}")
    dynkin_ok = all(Orb.weighted_dynkin(Orb.Partition((n,), "gl", n)) == (2,) * (n - 1) for n in range(1, 9))
    ok = not bad and dynkin_ok and count > 0
    return ok, f"{count} sigma partitions valid in the dual ambient; regular gl(n<=8) diagrams all 2" if ok else f"bad {bad[:3]}, dynkin {dynkin_ok}"


CRITERIA = {n: globals()[f"criterion_{n}"] for n in range(1, 11)}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    ok, detail = CRITERIA[n]()
    try:
        from conftest import ACCEPTANCE
    except ImportError:  # pragma: no cover
        ACCEPTANCE = {}
    ACCEPTANCE[n] = (ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for n, fn in CRITERIA.items():
        ok, detail = fn()
        failed += not ok
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}")
    sys.exit(1 if failed else 0)
