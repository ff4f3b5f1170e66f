"""Kazhdan-Lusztig data and the subregular cell of affine G2.

The rigid elements (a unique reduced word) form the subregular cell minus the
identity.  Among them the two-sided spherical ones starting and ending with
s0 are exactly the words listed for G2 in the subregular table.
"""

from __future__ import annotations

from weyl_cells import affine_weyl as aw
from weyl_cells import kl
from weyl_cells.rootdata import build
from weyl_cells.weights import dot_action, format_weight, vacuum_weight


def main() -> None:
    g2 = build("G", 2)
    print("affine G2: marks", g2.marks, "comarks", g2.comarks, "d_max_comark", g2.d_max_comark)

    rigid = [w for w in aw.enumerate_rigid(g2, 9) if w.length]
    print(f"{len(rigid)} rigid elements up to length 9")
    cell = [w for w in rigid if aw.is_two_sided_spherical(w) and w.left_descents == {0} == w.right_descents]
    for w in cell:
        lab = dot_action(w, vacuum_weight(g2, -1))
        print(f"  {aw.format_word(w.word):16s} fc={kl.is_fully_commutative(w)}  w.(-Lhat_0) = {format_weight(lab)}")
    print("condition (comm):", kl.check_condition_comm(cell), " condition (sing):", kl.check_condition_sing(cell, {0}))

    y = aw.from_word(g2, "0.1.2.1.0")
    print("\nKL polynomials P_{x,y} for y = 0.1.2.1.0:")
    for x in sorted(aw.lower_interval(y), key=lambda e: (e.length, e.word)):
        p = kl.kl_poly(x, y)
        if p.coeffs != (1,):
            print(f"  x = {aw.format_word(x.word) or 'e':10s} P = {p}")
    print("  (all other P_{x,y} are 1)")

    a3 = build("A", 3)
    y = aw.from_word(a3, "2.1.3.2")
    print("\nfinite A3: P_{e, s2s1s3s2} =", kl.kl_poly(aw.identity(a3), y), " mu(s2, s2s1s3s2) =", kl.mu(aw.from_word(a3, "2"), y))
    print("heap of 0.1.2.1.0 has", kl.heap(aw.from_word(g2, "0.1.2.1.0")).linear_extension_count, "linear extension(s)")


if __name__ == "__main__":
    main()
