"""Finite and untwisted affine root data for the simple types A-G.

Only the finite Cartan matrices are written down by hand (in Kac's node
numbering).  Everything else -- the affine node, marks, comarks, the highest
root, Coxeter numbers and the group of length-zero elements -- is derived from
them, so the structural invariants can be tested rather than trusted.

Conventions: ``cartan[i, j] = <alpha_i^vee, alpha_j>``.  Roots are integer
vectors in simple-root coordinates, weights integer vectors in
fundamental-weight coordinates.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

VALID_RANKS = {
    "A": lambda r: r >= 1,
    "B": lambda r: r >= 2,
    "C": lambda r: r >= 2,
    "D": lambda r: r >= 3,
    "E": lambda r: r in (6, 7, 8),
    "F": lambda r: r == 4,
    "G": lambda r: r == 2,
}


class RootDataError(ValueError):
    """Raised for an invalid (family, rank) pair."""


def _chain(rank: int) -> np.ndarray:
    a = 2 * np.eye(rank, dtype=np.int64)
    for i in range(rank - 1):
        a[i, i + 1] = a[i + 1, i] = -1
    return a


def _bond(a: np.ndarray, i: int, j: int) -> None:
    # 1-based node labels
    a[i - 1, j - 1] = a[j - 1, i - 1] = -1


def finite_cartan(family: str, rank: int) -> np.ndarray:
    """Finite Cartan matrix in Kac's numbering (Table Fin)."""
    family = family.upper()
    if family not in VALID_RANKS or not VALID_RANKS[family](rank):
        raise RootDataError(f"no simple type {family}{rank}")
    if family == "A":
        return _chain(rank)
    if family == "B":
        a = _chain(rank)
        a[rank - 1, rank - 2] = -2  # alpha_l short
        return a
    if family == "C":
        a = _chain(rank)
        a[rank - 2, rank - 1] = -2  # alpha_l long
        return a
    if family == "D":
        if rank == 3:
            # D3 = A3 with the middle node numbered 1
            a = 2 * np.eye(3, dtype=np.int64)
            _bond(a, 1, 2)
            _bond(a, 1, 3)
            return a
        a = np.pad(_chain(rank - 1), ((0, 1), (0, 1)))
        a[rank - 1, rank - 1] = 2
        _bond(a, rank - 2, rank)
        return a
    if family == "E":
        a = np.pad(_chain(rank - 1), ((0, 1), (0, 1)))
        a[rank - 1, rank - 1] = 2
        _bond(a, 3 if rank in (6, 7) else 5, rank)
        return a
    if family == "F":
        a = _chain(4)
        a[2, 1] = -2  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        return a
    a = _chain(2)
    a[1, 0] = -3  # G2: alpha_1 long, alpha_2 short
    return a


def _symmetrizer(cartan: np.ndarray) -> list[Fraction]:
    """Squared lengths |alpha_i|^2 normalized so that long roots have length 2."""
    n = len(cartan)
    sq: list[Fraction | None] = [None] * n
    sq[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if j != i and cartan[i, j] != 0 and sq[j] is None:
                # |a_i|^2 a_ij = |a_j|^2 a_ji
                sq[j] = sq[i] * int(cartan[i, j]) / int(cartan[j, i])
                todo.append(j)
    top = max(sq)
    return [2 * s / top for s in sq]


def positive_roots(cartan: np.ndarray) -> np.ndarray:
    """Positive roots in simple-root coordinates, sorted by height."""
    n = len(cartan)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            b = np.array(beta)
            for i in range(n):
                pairing = int(cartan[i] @ b)
                c = b.copy()
                c[i] -= pairing
                t = tuple(int(x) for x in c)
                if all(x >= 0 for x in t) and any(t) and t not in seen:
                    seen.add(t)
                    new.append(t)
        frontier = new
    roots = sorted(seen, key=lambda t: (sum(t), t))
    return np.array(roots, dtype=np.int64)


@dataclass(frozen=True)
class OmegaGroup:
    """Length-zero elements of the extended affine Weyl group, as node permutations.

    ``perms[k][i]`` is the image of node ``i``; ``labels[k]`` is the node that
    node 0 is sent to (0 for the identity), so ``gamma_i`` means the element
    with label ``i``.
    """

    perms: tuple[tuple[int, ...], ...]
    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.perms)

    def perm(self, label: int) -> tuple[int, ...]:
        try:
            return self.perms[self.labels.index(label)]
        except ValueError:
            raise KeyError(f"no length-zero element with label {label}") from None

    def inverse_label(self, label: int) -> int:
        p = self.perm(label)
        inv = [0] * len(p)
        for i, j in enumerate(p):
            inv[j] = i
        return inv[0]

    def compose(self, a: int, b: int) -> int:
        """Label of gamma_a gamma_b (apply b first)."""
        pa, pb = self.perm(a), self.perm(b)
        return pa[pb[0]]

    def table(self) -> list[list[int]]:
        return [[self.compose(a, b) for b in self.labels] for a in self.labels]


@dataclass(frozen=True, eq=False)
class RootDatum:
    family: str
    rank: int
    cartan: np.ndarray
    affine_cartan: np.ndarray
    marks: tuple[int, ...]
    comarks: tuple[int, ...]
    theta: tuple[int, ...]
    theta_covector: tuple[int, ...]
    h: int
    h_dual: int
    d_max_comark: int
    root_sq: tuple[Fraction, ...]
    pos_roots: np.ndarray = field(repr=False)
    pos_coroots: np.ndarray = field(repr=False)
    coroot_steps: np.ndarray = field(repr=False)
    omega: OmegaGroup = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(self.rank + 1)

    def __repr__(self) -> str:
        return f"RootDatum({self.name})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootDatum) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)

    @property
    def minuscule_nodes(self) -> tuple[int, ...]:
        return tuple(i for i in self.omega.labels if i)

    @property
    def fundamental_gram(self) -> list[list[Fraction]]:
        """Normalized form (Lambda_i | Lambda_j) on finite fundamental weights, i, j = 1..rank."""
        return _fundamental_gram(self.family, self.rank)

    def is_finite_weyl(self, m: np.ndarray) -> bool:
        """Whether the integer matrix ``m`` (acting on fundamental-weight coordinates) lies in W_f."""
        rho = np.ones(self.rank, dtype=np.int64)
        u = m @ rho
        a = self.cartan
        word = []
        while True:
            neg = np.flatnonzero(u < 0)
            if not len(neg):
                break
            i = int(neg[0])
            # s_i on weights: lambda -> lambda - <lambda, alpha_i^vee> alpha_i
            u = u - u[i] * a[:, i]
            word.append(i)
        if not np.array_equal(u, rho):
            return False
        mm = m.copy()
        for i in word:
            mm = mm - np.outer(a[:, i], mm[i])
        return np.array_equal(mm, np.eye(self.rank, dtype=np.int64))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": self.cartan.tolist(),
            "affine_cartan": self.affine_cartan.tolist(),
            "marks": list(self.marks),
            "comarks": list(self.comarks),
            "theta": list(self.theta),
            "h": self.h,
            "h_dual": self.h_dual,
            "d_max_comark": self.d_max_comark,
            "omega": {str(lab): list(p) for lab, p in zip(self.omega.labels, self.omega.perms)},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _coroots(roots: np.ndarray, sq: list[Fraction], cartan: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Coroots of the positive roots in simple-coroot coordinates, plus 2/|beta|^2.

    The second array is the multiple of K separating consecutive affine coroots
    (beta + n delta)^vee; it is 1 for long roots.
    """
    n = len(cartan)
    form = [[sq[i] * int(cartan[i, j]) / 2 for j in range(n)] for i in range(n)]
    cos, steps = [], []
    for b in roots:
        bsq = sum(form[i][j] * int(b[i]) * int(b[j]) for i in range(n) for j in range(n))
        c = [int(b[i]) * sq[i] / bsq for i in range(n)]
        assert all(x.denominator == 1 for x in c)
        cos.append([int(x) for x in c])
        step = 2 / bsq
        assert step.denominator == 1
        steps.append(int(step))
    # same order as ``roots``, so the last entry is the coroot of theta
    return np.array(cos, dtype=np.int64), np.array(steps, dtype=np.int64)


def _affine_extension(cartan: np.ndarray, sq: list[Fraction], theta: np.ndarray) -> np.ndarray:
    n = len(cartan)
    form = np.array([[sq[i] * int(cartan[i, j]) / 2 for j in range(n)] for i in range(n)], dtype=object)
    theta_form = form @ theta  # (theta | alpha_j)
    theta_sq = theta @ theta_form
    aff = np.zeros((n + 1, n + 1), dtype=np.int64)
    aff[1:, 1:] = cartan
    aff[0, 0] = 2
    for j in range(n):
        aff[0, j + 1] = -int(2 * theta_form[j] / theta_sq)
        aff[j + 1, 0] = -int(2 * theta_form[j] / sq[j])
    return aff


def _null_vector(a: np.ndarray) -> tuple[int, ...]:
    """Positive integer null vector of an affine Cartan matrix with entry 1 at node 0."""
    n = len(a)
    # solve a[1:,1:] x = -a[1:,0]
    sub = [[Fraction(int(v)) for v in row] for row in a[1:, 1:]]
    rhs = [Fraction(-int(v)) for v in a[1:, 0]]
    m = n - 1
    aug = [sub[i] + [rhs[i]] for i in range(m)]
    for c in range(m):
        p = next(r for r in range(c, m) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for r in range(m):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    sol = [aug[i][m] for i in range(m)]
    assert all(s.denominator == 1 for s in sol)
    return (1,) + tuple(int(s) for s in sol)


def _diagram_automorphisms(a: np.ndarray) -> list[tuple[int, ...]]:
    n = len(a)
    out: list[tuple[int, ...]] = []
    img: list[int] = []

    def extend():
        k = len(img)
        if k == n:
            out.append(tuple(img))
            return
        for c in range(n):
            if c in img:
                continue
            if all(a[k, j] == a[c, img[j]] and a[j, k] == a[img[j], c] for j in range(k)):
                img.append(c)
                extend()
                img.pop()

    extend()
    return out


def _finite_part_of_perm(perm: tuple[int, ...], comarks: tuple[int, ...]) -> np.ndarray:
    rank = len(perm) - 1
    m = np.zeros((rank, rank), dtype=np.int64)
    for col in range(rank):
        p = np.zeros(rank + 1, dtype=np.int64)
        p[col + 1] = 1
        p[0] = -comarks[col + 1]
        q = np.zeros_like(p)
        for j in range(rank + 1):
            q[perm[j]] = p[j]
        m[:, col] = q[1:]
    return m


@lru_cache(maxsize=None)
def build(family: str, rank: int) -> RootDatum:
    """Root datum of the simple type ``family``/``rank`` and its untwisted affinization."""
    family = family.upper()
    cartan = finite_cartan(family, rank)
    cartan.setflags(write=False)
    sq = _symmetrizer(cartan)
    roots = positive_roots(cartan)
    theta = roots[-1]
    coroots, steps = _coroots(roots, sq, cartan)
    aff = _affine_extension(cartan, sq, theta)
    aff.setflags(write=False)
    marks = _null_vector(aff)
    comarks = _null_vector(aff.T.copy())
    theta_cov = coroots[-1]
    assert tuple(int(x) for x in theta) == marks[1:]
    assert tuple(int(x) for x in theta_cov) == comarks[1:]
    autos = _diagram_automorphisms(aff)
    datum_partial = RootDatum(
        family, rank, cartan, aff, marks, comarks,
        tuple(int(x) for x in theta), tuple(int(x) for x in theta_cov),
        sum(marks), sum(comarks), max(comarks), tuple(sq), roots, coroots, steps,
        OmegaGroup((), ()),
    )
    omega_perms = []
    for p in autos:
        if datum_partial.is_finite_weyl(_finite_part_of_perm(p, comarks)):
            omega_perms.append(p)
    omega_perms.sort(key=lambda p: p[0])
    omega = OmegaGroup(tuple(omega_perms), tuple(p[0] for p in omega_perms))
    return RootDatum(
        family, rank, cartan, aff, marks, comarks,
        datum_partial.theta, datum_partial.theta_covector,
        sum(marks), sum(comarks), max(comarks), tuple(sq), roots, coroots, steps, omega,
    )


def omega_group(datum: RootDatum) -> OmegaGroup:
    return datum.omega


def parse_type(text: str) -> RootDatum:
    """``"G2"`` -> build("G", 2)."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootDataError(f"cannot parse type {text!r}")
    return build(text[0].upper(), int(text[1:]))


@lru_cache(maxsize=None)
def _fundamental_gram(family: str, rank: int) -> list[list[Fraction]]:
    d = build(family, rank)
    n = rank
    b = [[d.root_sq[i] * int(d.cartan[i, j]) / 2 for j in range(n)] for i in range(n)]
    binv = _invert(b)
    half = [d.root_sq[i] / 2 for i in range(n)]
    return [[half[i] * binv[i][j] * half[j] for j in range(n)] for i in range(n)]


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c] != 0)
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [v / piv for v in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def all_types(max_classical_rank: int = 8) -> list[RootDatum]:
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        out += [build(fam, r) for r in range(lo, max_classical_rank + 1)]
    out += [build("E", r) for r in (6, 7, 8)] + [build("F", 4), build("G", 2)]
    return out


def _check_all() -> None:  # pragma: no cover - debugging helper
    for d in all_types():
        print(d.name, d.marks, d.comarks, d.omega.labels)


if __name__ == "__main__":  # pragma: no cover
    _check_all()
