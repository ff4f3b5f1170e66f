"""Representation rings of the reductive groups Z_sigma met in the tables.

Each group knows its irreducible labels, their dimensions and duals, and how
to decompose a tensor product.  Finite groups go through character tables,
tori through addition, SL2 through Clebsch-Gordan and SL3 through weight
multisets (Freudenthal multiplicities, then peeling off highest weights).
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Hashable, Iterable

import numpy as np

from .rootdata import build


class FusionError(ValueError):
    pass


@dataclass(frozen=True)
class IrrepLabel:
    group: "Group"
    data: Hashable

    @property
    def dim(self) -> int:
        return self.group.dim(self.data)

    def dual(self) -> IrrepLabel:
        return IrrepLabel(self.group, self.group.dual(self.data))

    def __str__(self) -> str:
        return self.group.format(self.data)

    def __repr__(self) -> str:
        return f"IrrepLabel({self.group.name}, {self})"


class Group:
    """Base class; subclasses fill in the representation-ring data."""

    name = "?"
    finite = False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    def __repr__(self) -> str:
        return f"Group({self.name})"

    # hooks
    def labels(self, bound: int) -> list:
        raise NotImplementedError

    def dim(self, data) -> int:
        raise NotImplementedError

    def dual(self, data):
        raise NotImplementedError

    def tensor_data(self, a, b) -> Counter:
        raise NotImplementedError

    def format(self, data) -> str:
        return str(data)

    def parse(self, text: str):
        raise NotImplementedError

    def normalize(self, data):
        return data

    @property
    def trivial(self):
        raise NotImplementedError

    # public helpers
    def irrep(self, data) -> IrrepLabel:
        if isinstance(data, str):
            data = self.parse(data)
        return IrrepLabel(self, self.normalize(data))


def irreps(group: Group | str, bound: int = 3) -> list[IrrepLabel]:
    """All irreducibles (finite groups) or those up to ``bound`` (infinite families)."""
    g = parse_group(group) if isinstance(group, str) else group
    return [IrrepLabel(g, d) for d in g.labels(bound)]


def tensor(a: IrrepLabel, b: IrrepLabel) -> Counter:
    """Decomposition of a tensor b as a multiset of irreducibles."""
    if a.group != b.group:
        raise FusionError(f"cannot tensor {a.group.name} and {b.group.name} representations")
    g = a.group
    return Counter({IrrepLabel(g, d): m for d, m in g.tensor_data(a.data, b.data).items() if m})


# ---------------------------------------------------------------------------
# finite groups


class FiniteGroup(Group):
    """Character table with integer class sizes; characters are complex-valued."""

    finite = True

    def __init__(self, name: str, class_sizes: list[int], table: dict[str, list[complex]]):
        self.name = name
        self.class_sizes = np.array(class_sizes)
        self.table = {k: np.array(v, dtype=complex) for k, v in table.items()}
        self.order = int(self.class_sizes.sum())
        self.names = list(table)

    def labels(self, bound: int) -> list:
        return list(self.names)

    def dim(self, data) -> int:
        return int(round(self.table[data][0].real))

    def dual(self, data):
        conj = np.conj(self.table[data])
        for k, v in self.table.items():
            if np.allclose(v, conj):
                return k
        raise FusionError("character table is not closed under duality")

    def tensor_data(self, a, b) -> Counter:
        prod = self.table[a] * self.table[b]
        out = Counter()
        for k, chi in self.table.items():
            m = (self.class_sizes * prod * np.conj(chi)).sum() / self.order
            mi = int(round(m.real))
            assert abs(m - mi) < 1e-9
            if mi:
                out[k] = mi
        return out

    def parse(self, text: str):
        aliases = {"sign.": "sign", "2-dim": "2dim", "2-dim.": "2dim", "triv": "1"}
        text = aliases.get(text, text)
        if text not in self.table:
            raise FusionError(f"{self.name} has no irreducible {text!r}; known: {self.names}")
        return text

    @property
    def trivial(self):
        return self.names[0]


class CyclicGroup(Group):
    finite = True

    def __init__(self, n: int):
        if n < 1:
            raise FusionError("cyclic group order must be positive")
        self.n = n
        self.name = f"Z{n}"

    def labels(self, bound: int) -> list:
        return list(range(self.n))

    def dim(self, data) -> int:
        return 1

    def dual(self, data):
        return (-data) % self.n

    def normalize(self, data):
        return int(data) % self.n

    def tensor_data(self, a, b) -> Counter:
        return Counter({(a + b) % self.n: 1})

    def parse(self, text: str):
        if text in ("1", "triv"):
            return 0
        if text in ("sign", "sign.") and self.n % 2 == 0:
            return self.n // 2
        return int(text) % self.n

    @property
    def trivial(self):
        return 0


def _s3() -> FiniteGroup:
    return FiniteGroup("S3", [1, 3, 2], {"1": [1, 1, 1], "sign": [1, -1, 1], "2dim": [2, 0, -1]})


def _klein() -> FiniteGroup:
    return FiniteGroup(
        "Klein", [1, 1, 1, 1],
        {"1": [1, 1, 1, 1], "a": [1, 1, -1, -1], "b": [1, -1, 1, -1], "c": [1, -1, -1, 1]},
    )


def _order8(name: str) -> FiniteGroup:
    # classes: 1, the central involution, then three classes of size 2
    return FiniteGroup(
        name, [1, 1, 2, 2, 2],
        {
            "1": [1, 1, 1, 1, 1],
            "a": [1, 1, 1, -1, -1],
            "b": [1, 1, -1, 1, -1],
            "c": [1, 1, -1, -1, 1],
            "2dim": [2, -2, 0, 0, 0],
        },
    )


# ---------------------------------------------------------------------------
# tori and lattice quotients


class Torus(Group):
    def __init__(self, rank: int):
        self.rank = rank
        self.name = f"T{rank}"

    def labels(self, bound: int) -> list:
        out = itertools.product(range(-bound, bound + 1), repeat=self.rank)
        return sorted(out, key=lambda v: (sum(map(abs, v)), v))

    def dim(self, data) -> int:
        return 1

    def dual(self, data):
        return tuple(-x for x in data)

    def normalize(self, data):
        if isinstance(data, int):
            data = (data,)
        return tuple(int(x) for x in data)

    def tensor_data(self, a, b) -> Counter:
        return Counter({tuple(x + y for x, y in zip(a, b)): 1})

    def format(self, data) -> str:
        return str(data[0]) if self.rank == 1 else "(" + ",".join(map(str, data)) + ")"

    def parse(self, text: str):
        return self.normalize(_int_tuple(text))

    @property
    def trivial(self):
        return (0,) * self.rank


class KernelTorus(Group):
    """ker(s^a t^b : Gm^2 -> Gm); characters are Z^2 modulo (a, b).

    Representatives are (x mod a, y - (x div a) b) when a > 0.  The group is
    a one-dimensional torus times Z/gcd(a, b).
    """

    def __init__(self, a: int, b: int):
        if a <= 0:
            raise FusionError("kernel character needs a positive first entry")
        self.a, self.b = a, b
        self.name = f"Ker({a},{b})"

    def structure(self) -> tuple[int, tuple[int, ...]]:
        """(torus rank, torsion orders) from the Smith form of the 1x2 character matrix."""
        g = gcd(self.a, self.b)
        return 1, (g,) if g > 1 else ()

    def normalize(self, data):
        x, y = (int(v) for v in data)
        t = x // self.a
        return (x - t * self.a, y - t * self.b)

    def labels(self, bound: int) -> list:
        out = {self.normalize((x, y)) for x in range(-bound, bound + 1) for y in range(-bound, bound + 1)}
        return sorted(out, key=lambda v: (abs(v[1]) + v[0], v))

    def dim(self, data) -> int:
        return 1

    def dual(self, data):
        return self.normalize((-data[0], -data[1]))

    def tensor_data(self, a, b) -> Counter:
        return Counter({self.normalize((a[0] + b[0], a[1] + b[1])): 1})

    def format(self, data) -> str:
        return f"({data[0]},{data[1]})"

    def parse(self, text: str):
        return self.normalize(_int_tuple(text))

    @property
    def trivial(self):
        return (0, 0)


# ---------------------------------------------------------------------------
# connected groups


class SL2(Group):
    name = "SL2"

    def labels(self, bound: int) -> list:
        return list(range(bound + 1))

    def dim(self, data) -> int:
        return data + 1

    def dual(self, data):
        return data

    def normalize(self, data):
        n = int(data)
        if n < 0:
            raise FusionError("SL2 highest weights are nonnegative")
        return n

    def tensor_data(self, a, b) -> Counter:
        return Counter({c: 1 for c in range(abs(a - b), a + b + 1, 2)})

    def parse(self, text: str):
        return self.normalize(int(text))

    @property
    def trivial(self):
        return 0


class GL2Kernel(Group):
    """ker(det^m : GL2 -> Gm).  Irreducibles are GL2 highest weights (p >= q) modulo (m, m)."""

    def __init__(self, m: int):
        if m < 1:
            raise FusionError("det power must be positive")
        self.m = m
        self.name = f"KerDet{m}"

    def normalize(self, data):
        p, q = (int(v) for v in data)
        if p < q:
            raise FusionError(f"({p},{q}) is not dominant")
        t = q // self.m
        return (p - t * self.m, q - t * self.m)

    def labels(self, bound: int) -> list:
        out = {self.normalize((q + d, q)) for d in range(bound + 1) for q in range(self.m)}
        return sorted(out, key=lambda v: (v[0] - v[1], v))

    def dim(self, data) -> int:
        return data[0] - data[1] + 1

    def dual(self, data):
        return self.normalize((-data[1], -data[0]))

    def tensor_data(self, a, b) -> Counter:
        out = Counter()
        for j in range(min(a[0] - a[1], b[0] - b[1]) + 1):
            out[self.normalize((a[0] + b[0] - j, a[1] + b[1] + j))] += 1
        return out

    def format(self, data) -> str:
        return f"({data[0]},{data[1]})"

    def parse(self, text: str):
        return self.normalize(_int_tuple(text))

    @property
    def trivial(self):
        return (0, 0)


class SL3(Group):
    name = "SL3"

    def labels(self, bound: int) -> list:
        """Highest weights (a, b) with a + b <= bound."""
        return [(a, s - a) for s in range(bound + 1) for a in range(s, -1, -1)]

    def dim(self, data) -> int:
        a, b = data
        return (a + 1) * (b + 1) * (a + b + 2) // 2

    def dual(self, data):
        return (data[1], data[0])

    def normalize(self, data):
        a, b = (int(v) for v in data)
        if a < 0 or b < 0:
            raise FusionError("SL3 highest weights are dominant")
        return (a, b)

    def tensor_data(self, a, b) -> Counter:
        return Counter(decompose_tensor("A", 2, a, b))

    def format(self, data) -> str:
        return f"({data[0]},{data[1]})"

    def parse(self, text: str):
        return self.normalize(_int_tuple(text))

    @property
    def trivial(self):
        return (0, 0)


@lru_cache(maxsize=None)
def weight_multiplicities(family: str, rank: int, highest: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Freudenthal's formula for the finite simple module of the given highest weight."""
    d = build(family, rank)
    gram = d.fundamental_gram
    cartan = d.cartan
    roots = [tuple(int(x) for x in cartan @ r) for r in d.pos_roots]  # fundamental coordinates
    simple = [tuple(int(x) for x in cartan[:, i]) for i in range(rank)]

    def form(u, v) -> Fraction:
        return sum((gram[i][j] * u[i] * v[j] for i in range(rank) for j in range(rank)), Fraction(0))

    lam = tuple(highest)
    rho = (1,) * rank
    lr = tuple(x + 1 for x in lam)
    norm_top = form(lr, lr)
    mult = {lam: 1}
    layer = [lam]
    while layer:
        candidates = sorted({tuple(m - s for m, s in zip(mu, a)) for mu in layer for a in simple})
        nxt = []
        for mu in candidates:
            total = Fraction(0)
            for alpha in roots:
                k = 1
                while True:
                    nu = tuple(m + k * x for m, x in zip(mu, alpha))
                    c = mult.get(nu)
                    if c is None:
                        break
                    total += c * form(nu, alpha)
                    k += 1
            mr = tuple(x + r for x, r in zip(mu, rho))
            denom = norm_top - form(mr, mr)
            if denom == 0:
                continue
            m = 2 * total / denom
            assert m.denominator == 1
            if m > 0:
                mult[mu] = int(m)
                nxt.append(mu)
        layer = nxt
    return mult


def decompose_tensor(family: str, rank: int, a, b) -> Counter:
    """Peel highest weights off the weight multiset of V(a) (x) V(b)."""
    ma = weight_multiplicities(family, rank, tuple(a))
    mb = weight_multiplicities(family, rank, tuple(b))
    total: Counter = Counter()
    for u, cu in ma.items():
        for v, cv in mb.items():
            total[tuple(x + y for x, y in zip(u, v))] += cu * cv
    cartan = build(family, rank).cartan
    inv = np.linalg.inv(cartan.astype(float))
    out: Counter = Counter()
    while total:
        # highest remaining dominant weight: maximal height in simple-root coordinates
        dom = [w for w, c in total.items() if c > 0 and all(x >= 0 for x in w)]
        top = max(dom, key=lambda w: (float((inv @ np.array(w)).sum()), w))
        c = total[top]
        out[top] += c
        for w, m in weight_multiplicities(family, rank, top).items():
            total[w] -= c * m
            if total[w] == 0:
                del total[w]
        if any(v < 0 for v in total.values()):
            raise FusionError("weight multiset subtraction went negative")
    return out


# ---------------------------------------------------------------------------
# disconnected groups


class DihedralTorus(Group):
    """Extensions of Z/2 by Gm acting by inversion: O(2), Z/2 |x Gm, N_SL2(Gm).

    Irreducibles: the trivial character ``1``, ``sign``, and the two-dimensional
    ``V_n = Ind(t^n)`` for n >= 1, written ``V<n>`` (``V0`` is read as ``1``).
    All three groups share these fusion rules.
    """

    def __init__(self, name: str):
        self.name = name

    def labels(self, bound: int) -> list:
        return ["1", "sign"] + list(range(1, bound + 1))

    def normalize(self, data):
        if data in ("1", "sign"):
            return data
        n = abs(int(data))
        return "1" if n == 0 else n

    def dim(self, data) -> int:
        return 1 if data in ("1", "sign") else 2

    def dual(self, data):
        return data

    def tensor_data(self, a, b) -> Counter:
        if a == "1":
            return Counter({b: 1})
        if b == "1":
            return Counter({a: 1})
        if a == "sign" and b == "sign":
            return Counter({"1": 1})
        if a == "sign":
            return Counter({b: 1})
        if b == "sign":
            return Counter({a: 1})
        out = Counter({a + b: 1})
        if a == b:
            out["1"] += 1
            out["sign"] += 1
        else:
            out[abs(a - b)] += 1
        return out

    def format(self, data) -> str:
        return data if isinstance(data, str) else f"V{data}"

    def parse(self, text: str):
        if text in ("sign", "sign."):
            return "sign"
        if text in ("1", "triv"):
            return "1"
        m = re.fullmatch(r"V(-?\d+)", text)
        if not m:
            raise FusionError(f"cannot parse {text!r} as an irreducible of {self.name}")
        return self.normalize(int(m.group(1)))

    @property
    def trivial(self):
        return "1"


class Z2xSL2(Group):
    """Z/2 x SL2; labels (e, n) with e in {0, 1} the Z/2 character."""

    name = "Z2xSL2"

    def labels(self, bound: int) -> list:
        return [(e, n) for n in range(bound + 1) for e in (0, 1)]

    def normalize(self, data):
        e, n = (int(v) for v in data)
        if n < 0:
            raise FusionError("SL2 highest weights are nonnegative")
        return (e % 2, n)

    def dim(self, data) -> int:
        return data[1] + 1

    def dual(self, data):
        return data

    def tensor_data(self, a, b) -> Counter:
        e = (a[0] + b[0]) % 2
        return Counter({(e, c): 1 for c in range(abs(a[1] - b[1]), a[1] + b[1] + 1, 2)})

    def format(self, data) -> str:
        return f"sign*{data[1]}" if data[0] else str(data[1])

    def parse(self, text: str):
        m = re.fullmatch(r"(?:sign\.?\s*(?:\*|x|⊠)\s*)?(\d+)", text.strip())
        if not m:
            raise FusionError(f"cannot parse {text!r} as a Z2xSL2 label")
        return (1 if text.strip().startswith("sign") else 0, int(m.group(1)))

    @property
    def trivial(self):
        return (0, 0)


# ---------------------------------------------------------------------------


def _int_tuple(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_group(text: str) -> Group:
    """``S3``, ``Klein``, ``Q8``, ``D8``, ``Z4``, ``T1``, ``SL2``, ``SL3``, ``O2``,
    ``Z2xGm``, ``N_SL2_Gm``, ``Z2xSL2``, ``Ker(a,b)``, ``KerDet<m>``."""
    t = text.strip()
    if t == "S3":
        return _s3()
    if t in ("Klein", "Z2^2", "(Z2)^2"):
        return _klein()
    if t in ("Q8", "D8"):
        return _order8(t)
    if t == "SL2":
        return SL2()
    if t == "SL3":
        return SL3()
    if t in ("O2", "Z2xGm", "N_SL2_Gm"):
        return DihedralTorus(t)
    if t == "Z2xSL2":
        return Z2xSL2()
    m = re.fullmatch(r"Z(\d+)", t)
    if m:
        return CyclicGroup(int(m.group(1)))
    m = re.fullmatch(r"(?:T|Torus)\(?(\d+)\)?", t)
    if m:
        return Torus(int(m.group(1)))
    if t == "Gm":
        return Torus(1)
    m = re.fullmatch(r"Ker\((-?\d+),(-?\d+)\)", t.replace(" ", ""))
    if m:
        return KernelTorus(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"KerDet(\d+)", t)
    if m:
        return GL2Kernel(int(m.group(1)))
    raise FusionError(f"unknown group {text!r}")


def fuse_modules(row, level: int, chi1, chi2) -> Counter:
    """Fusion of the modules attached to ``chi1`` and ``chi2`` in a table row.

    ``row`` supplies ``group`` and ``module_for(irrep, level)``; the tensor
    product of the characters is pushed through that assignment.
    """
    g = row.group
    a = chi1 if isinstance(chi1, IrrepLabel) else g.irrep(chi1)
    b = chi2 if isinstance(chi2, IrrepLabel) else g.irrep(chi2)
    out: Counter = Counter()
    for chi, mult in tensor(a, b).items():
        out[row.module_for(chi, level)] += mult
    return out


__all__ = [
    "CyclicGroup",
    "DihedralTorus",
    "FiniteGroup",
    "FusionError",
    "GL2Kernel",
    "Group",
    "IrrepLabel",
    "KernelTorus",
    "SL2",
    "SL3",
    "Torus",
    "Z2xSL2",
    "decompose_tensor",
    "fuse_modules",
    "irreps",
    "parse_group",
    "tensor",
    "weight_multiplicities",
]
