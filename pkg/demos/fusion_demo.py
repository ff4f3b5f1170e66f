"""Fusion of simple modules through the character -> label map of a table row.

A row bound at a rank and level turns irreducibles of its centralizer group
into module labels; fusing two modules is tensoring the characters and
reading the labels back.
"""

from __future__ import annotations

from weyl_cells import fusion as F
from weyl_cells import orbits as Orb
from weyl_cells.tables import bind


def show(row, level, a, b):
    out = F.fuse_modules(row, level, a, b)
    print(f"  {row.module_for(row.group.irrep(a), level)} x {row.module_for(row.group.irrep(b), level)} = "
          + " + ".join(f"{m}*{k}" if m > 1 else k for k, m in sorted(out.items(), key=lambda kv: (len(kv[0]), kv[0]))))


def main() -> None:
    g2 = bind("sous-reguliers", "G2", 2, -1)
    print(f"G2 at level -1, centralizer {g2.group.name}:")
    for a in ("sign", "2dim"):
        for b in ("sign", "2dim"):
            show(g2, -1, a, b)

    a1 = bind("sous-reguliers", "A1", 1, -1)
    print("\nA1 at level -1 (Clebsch-Gordan):")
    for m, n in ((1, 1), (1, 2), (2, 2), (3, 2)):
        show(a1, -1, str(m), str(n))

    print("\nsigma partitions in the dual ambient:")
    for fam, rank in (("A", 5), ("B", 6), ("C", 6), ("D", 7)):
        for k in Orb.sigma_levels(fam, rank):
            p = Orb.sigma_partition(fam, rank, k)
            print(f"  {fam}{rank} at {k}: {p}   dual orbit {Orb.ls_dual(p)}")


if __name__ == "__main__":
    main()
