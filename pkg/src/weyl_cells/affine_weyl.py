"""Exact arithmetic in the extended affine Weyl group.

An element is stored by its linear action on the pairing vector
``(<L, alpha_0^vee>, ..., <L, alpha_l^vee>)`` of an affine weight ``L``
(delta is invisible there).  That action is faithful on the extended group,
so equal matrices mean equal elements, and everything else follows from it:

* left descents are the nodes where ``w(rho_hat)`` pairs negatively,
* the length is the Iwahori-Matsumoto count over the finite positive coroots,
* the canonical reduced word comes from stripping the smallest left descent
  until a length-zero element (an Omega element) is left over.

Words are sequences of node indices, optionally with Omega letters written
``"g<i>"``; canonical words put the single Omega letter last.
"""

from __future__ import annotations

import itertools
import re
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .rootdata import RootDatum

Letter = int | str
Word = Sequence[Letter]


class WordError(ValueError):
    """Invalid generator index or Omega label in a word."""


class UndecidedError(RuntimeError):
    """Coset maximality cannot be decided within the configured bound."""


class MixedDataError(ValueError):
    """Operands live in different root data."""


# ---------------------------------------------------------------------------
# generator matrices


@lru_cache(maxsize=None)
def _reflection_matrices(datum: RootDatum) -> tuple[np.ndarray, ...]:
    a = datum.affine_cartan
    n = datum.rank + 1
    out = []
    for i in range(n):
        m = np.eye(n, dtype=np.int64)
        m[:, i] -= a[:, i]
        m.setflags(write=False)
        out.append(m)
    return tuple(out)


@lru_cache(maxsize=None)
def _omega_matrices(datum: RootDatum) -> dict[int, np.ndarray]:
    n = datum.rank + 1
    out = {}
    for label, perm in zip(datum.omega.labels, datum.omega.perms):
        m = np.zeros((n, n), dtype=np.int64)
        for j in range(n):
            m[perm[j], j] = 1
        m.setflags(write=False)
        out[label] = m
    return out


def parse_letter(datum: RootDatum, letter: Letter) -> tuple[str, int]:
    if isinstance(letter, (int, np.integer)):
        i = int(letter)
        if not 0 <= i <= datum.rank:
            raise WordError(f"generator index {i} out of range for {datum.name}")
        return "s", i
    text = str(letter).strip()
    m = re.fullmatch(r"(?:g|γ|gamma)_?(\d+)", text)
    if m:
        i = int(m.group(1))
        if i not in datum.omega.labels:
            raise WordError(f"{datum.name} has no length-zero element gamma_{i}")
        return "g", i
    if text.isdigit():
        return parse_letter(datum, int(text))
    raise WordError(f"cannot parse letter {letter!r}")


def parse_word(text: str) -> list[Letter]:
    """Parse ``"0.1.2.1.0"``, ``"0.g1"``, ``"01210"`` or ``"0123456g6"``.

    Undotted strings are read one digit per node, so they only reach nodes 0-9.
    """
    text = text.strip().replace(" ", "")
    if text in ("", "e"):
        return []
    if "." in text or "," in text:
        parts = re.split(r"[.,]", text)
        return [p if p[0] in "gγ" else int(p) for p in parts if p]
    out: list[Letter] = []
    for tok in re.findall(r"(?:g|γ)\d+|\d", text):
        out.append(tok if tok[0] in "gγ" else int(tok))
    if "".join(str(t) for t in out).replace("γ", "g") != text.replace("γ", "g"):
        raise WordError(f"cannot parse word {text!r}")
    return out


def format_word(word: Word, sep: str = ".") -> str:
    return sep.join(str(x) for x in word) if word else "e"


# ---------------------------------------------------------------------------


class WeylElement:
    """Element of the extended affine Weyl group of ``datum``."""

    __slots__ = ("datum", "matrix", "_inv", "__dict__")

    def __init__(self, datum: RootDatum, matrix: np.ndarray, inverse: np.ndarray | None = None):
        self.datum = datum
        self.matrix = matrix
        self._inv = inverse

    # -- identity and hashing ------------------------------------------------

    @cached_property
    def key(self) -> bytes:
        return self.matrix.tobytes()

    def __hash__(self) -> int:
        return hash(self.key)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.datum == other.datum and self.key == other.key

    def __repr__(self) -> str:
        return f"WeylElement({self.datum.name}, {format_word(self.word)})"

    def __str__(self) -> str:
        return format_word(self.word)

    # -- group structure -----------------------------------------------------

    def __mul__(self, other: WeylElement) -> WeylElement:
        return multiply(self, other)

    @property
    def inverse_matrix(self) -> np.ndarray:
        if self._inv is None:
            inv = np.rint(np.linalg.inv(self.matrix)).astype(np.int64)
            assert np.array_equal(inv @ self.matrix, np.eye(len(inv), dtype=np.int64))
            self._inv = inv
        return self._inv

    def inverse(self) -> WeylElement:
        return WeylElement(self.datum, self.inverse_matrix, self.matrix)

    def lmul(self, i: int) -> WeylElement:
        """s_i * self."""
        s = _reflection_matrices(self.datum)[i]
        return WeylElement(self.datum, s @ self.matrix, self.inverse_matrix @ s)

    def rmul(self, i: int) -> WeylElement:
        """self * s_i."""
        s = _reflection_matrices(self.datum)[i]
        return WeylElement(self.datum, self.matrix @ s, s @ self.inverse_matrix)

    # -- length, descents, words ---------------------------------------------

    @cached_property
    def rho_image(self) -> np.ndarray:
        """Pairings of w(rho_hat) with the simple affine coroots."""
        return self.matrix.sum(axis=1)

    @cached_property
    def length(self) -> int:
        mu = self.rho_image
        k = self.datum.h_dual
        vals = self.datum.pos_coroots @ mu[1:]
        step = self.datum.coroot_steps * k
        pos, neg = vals > 0, vals < 0
        return int(((vals[pos] - 1) // step[pos]).sum() + ((-vals[neg] + step[neg] - 1) // step[neg]).sum())

    def __len__(self) -> int:
        return self.length

    @cached_property
    def left_descents(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.rho_image < 0))

    @cached_property
    def right_descents(self) -> frozenset[int]:
        mu = self.inverse_matrix.sum(axis=1)
        return frozenset(int(i) for i in np.flatnonzero(mu < 0))

    def descents(self) -> "DescentSet":
        return DescentSet(self.left_descents, self.right_descents)

    @cached_property
    def _canonical(self) -> tuple[tuple[int, ...], int]:
        word = []
        w = self
        while True:
            d = w.left_descents
            if not d:
                break
            i = min(d)
            word.append(i)
            w = w.lmul(i)
        label = omega_label_of(w)
        return tuple(word), label

    @property
    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word of the reflection part (Omega factor dropped)."""
        return self._canonical[0]

    @property
    def omega_label(self) -> int:
        """Label of the Omega factor, normalized to the right of the reflection word."""
        return self._canonical[1]

    @property
    def word(self) -> list[Letter]:
        w: list[Letter] = list(self.reduced_word)
        if self.omega_label:
            w.append(f"g{self.omega_label}")
        return w

    def to_json(self) -> dict:
        return {"word": self.word, "length": self.length}

    # -- canonical form in (finite part, translation) coordinates ------------

    @cached_property
    def finite_part(self) -> np.ndarray:
        """Linear part on finite weights (fundamental-weight coordinates)."""
        d = self.datum
        cols = []
        for m in range(1, d.rank + 1):
            p = np.zeros(d.rank + 1, dtype=np.int64)
            p[m] = 1
            p[0] = -d.comarks[m]
            cols.append((self.matrix @ p)[1:])
        return np.array(cols, dtype=np.int64).T

    @cached_property
    def translation(self) -> np.ndarray:
        """Finite part of w(Lambda_0): at level k, lambda -> finite_part @ lambda + k * translation."""
        return self.matrix[1:, 0].copy()

    # -- predicates ----------------------------------------------------------

    def is_identity(self) -> bool:
        return self.key == identity(self.datum).key


class DescentSet:
    __slots__ = ("left", "right")

    def __init__(self, left: frozenset[int], right: frozenset[int]):
        self.left = left
        self.right = right

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DescentSet) and (self.left, self.right) == (other.left, other.right)

    def __repr__(self) -> str:
        return f"DescentSet(left={sorted(self.left)}, right={sorted(self.right)})"


# ---------------------------------------------------------------------------
# constructors


@lru_cache(maxsize=None)
def identity(datum: RootDatum) -> WeylElement:
    n = datum.rank + 1
    e = np.eye(n, dtype=np.int64)
    return WeylElement(datum, e, e)


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    parse_letter(datum, i)
    s = _reflection_matrices(datum)[i]
    return WeylElement(datum, s, s)


def omega_element(datum: RootDatum, label: int) -> WeylElement:
    mats = _omega_matrices(datum)
    if label not in mats:
        raise WordError(f"{datum.name} has no length-zero element gamma_{label}")
    m = mats[label]
    return WeylElement(datum, m, m.T.copy())


def omega_label_of(w: WeylElement) -> int:
    """Label of a length-zero element (raises if ``w`` is not one)."""
    for label, m in _omega_matrices(w.datum).items():
        if np.array_equal(m, w.matrix):
            return label
    raise ValueError(f"{w!r} is not a length-zero element")


def from_word(datum: RootDatum, word: Word | str) -> WeylElement:
    if isinstance(word, str):
        word = parse_word(word)
    m = np.eye(datum.rank + 1, dtype=np.int64)
    minv = m.copy()
    refl = _reflection_matrices(datum)
    omegas = _omega_matrices(datum)
    for letter in word:
        kind, i = parse_letter(datum, letter)
        if kind == "s":
            g = ginv = refl[i]
        else:
            g = omegas[i]
            ginv = g.T
        m = m @ g
        minv = ginv @ minv
    return WeylElement(datum, m, minv)


def multiply(x: WeylElement, y: WeylElement) -> WeylElement:
    if x.datum != y.datum:
        raise MixedDataError(f"cannot multiply elements of {x.datum.name} and {y.datum.name}")
    return WeylElement(x.datum, x.matrix @ y.matrix, y.inverse_matrix @ x.inverse_matrix)


def inverse(w: WeylElement) -> WeylElement:
    return w.inverse()


def length(w: WeylElement) -> int:
    return w.length


def descents(w: WeylElement) -> DescentSet:
    return w.descents()


def conjugate(w: WeylElement, g: WeylElement) -> WeylElement:
    """g w g^-1."""
    return g * w * g.inverse()


# ---------------------------------------------------------------------------
# Bruhat order


def bruhat_leq(x: WeylElement, y: WeylElement) -> bool:
    """Bruhat order, by the lifting property: if s y < y then x <= y iff min(x, sx) <= sy."""
    if x.datum != y.datum:
        raise MixedDataError("Bruhat comparison across root data")
    while True:
        lx, ly = x.length, y.length
        if lx > ly:
            return False
        if ly == 0 or lx == ly:
            return x == y
        s = min(y.left_descents)
        y = y.lmul(s)
        if s in x.left_descents:
            x = x.lmul(s)


def lower_interval(y: WeylElement) -> set[WeylElement]:
    """All x <= y, built from the subwords of the canonical reduced word."""
    return set(_lower_interval_cached(y))


_INTERVAL_CACHE: dict[tuple[str, bytes], frozenset[WeylElement]] = {}


def _lower_interval_cached(y: WeylElement) -> frozenset[WeylElement]:
    key = (y.datum.name, y.key)
    hit = _INTERVAL_CACHE.get(key)
    if hit is not None:
        return hit
    gamma = omega_element(y.datum, y.omega_label)
    current = {identity(y.datum)}
    for i in y.reduced_word:
        current |= {w.rmul(i) for w in current}
    out = frozenset(w * gamma for w in current)
    _INTERVAL_CACHE[key] = out
    return out


# ---------------------------------------------------------------------------
# words


def reduced_words(w: WeylElement) -> Iterator[tuple[int, ...]]:
    """Every reduced word of the reflection part of ``w`` (exponential; small lengths only)."""
    gamma_inv = omega_element(w.datum, w.omega_label).inverse()
    u = w * gamma_inv

    @lru_cache(maxsize=None)
    def rec(key: bytes) -> tuple[tuple[int, ...], ...]:
        x = elems[key]
        if x.length == 0:
            return ((),)
        out = []
        for i in sorted(x.right_descents):
            xs = x.rmul(i)
            elems.setdefault(xs.key, xs)
            out += [word + (i,) for word in rec(xs.key)]
        return tuple(out)

    elems = {u.key: u}
    yield from rec(u.key)


def is_reduced(datum: RootDatum, word: Word | str) -> bool:
    if isinstance(word, str):
        word = parse_word(word)
    n_refl = sum(1 for x in word if parse_letter(datum, x)[0] == "s")
    return from_word(datum, word).length == n_refl


# ---------------------------------------------------------------------------
# predicates from the cell analysis


def finite_nodes(datum: RootDatum) -> frozenset[int]:
    return frozenset(range(1, datum.rank + 1))


def is_left_spherical(w: WeylElement) -> bool:
    """No finite simple reflection shortens ``w`` on the left."""
    return not (w.left_descents & finite_nodes(w.datum))


def is_right_spherical(w: WeylElement) -> bool:
    return not (w.right_descents & finite_nodes(w.datum))


def is_two_sided_spherical(w: WeylElement) -> bool:
    return is_left_spherical(w) and is_right_spherical(w)


def _commuting(datum: RootDatum, nodes: Iterable[int]) -> bool:
    a = datum.affine_cartan
    return all(a[i, j] == 0 for i, j in itertools.combinations(nodes, 2))


def parabolic_elements(datum: RootDatum, nodes: Iterable[int], bound: int) -> list[WeylElement]:
    """Elements of the subgroup generated by ``nodes``; UndecidedError past ``bound``."""
    nodes = sorted(set(nodes))
    seen = {identity(datum)}
    frontier = list(seen)
    while frontier:
        new = []
        for w in frontier:
            for i in nodes:
                x = w.rmul(i)
                if x not in seen:
                    seen.add(x)
                    new.append(x)
                    if len(seen) > bound:
                        raise UndecidedError(f"subgroup generated by {nodes} exceeds {bound} elements")
        frontier = new
    return list(seen)


def ends_with_all(w: WeylElement, nodes: Iterable[int], bound: int = 4096) -> bool:
    """Whether ``w`` has maximal length in its coset ``w <S>``.

    For commuting ``S`` this is ``S`` contained in the right descents; otherwise
    the coset is enumerated, provided ``<S>`` is finite with at most ``bound``
    elements.
    """
    s = set(nodes)
    if not s:
        raise ValueError("ends_with_all needs a nonempty set of nodes")
    if _commuting(w.datum, s):
        return s <= w.right_descents
    if len(s) > w.datum.rank:
        raise UndecidedError("the full affine reflection set generates an infinite group")
    coset = parabolic_elements(w.datum, s, bound)
    lw = w.length
    return all((w * u).length <= lw for u in coset)


def is_rigid(w: WeylElement) -> bool:
    """Exactly one reduced word, up to where the Omega factor sits."""
    while w.length:
        d = w.right_descents
        if len(d) != 1:
            return False
        (i,) = d
        w = w.rmul(i)
    return True


def enumerate_rigid(datum: RootDatum, max_len: int = 64) -> list[WeylElement]:
    """All rigid elements of length <= ``max_len`` (Omega elements included)."""
    out = []
    stack = [omega_element(datum, lab) for lab in datum.omega.labels]
    while stack:
        w = stack.pop()
        out.append(w)
        if w.length >= max_len:
            continue
        for i in datum.nodes:
            if i in w.right_descents:
                continue
            x = w.rmul(i)
            if x.right_descents == {i}:
                stack.append(x)
    out.sort(key=lambda x: (x.length, x.omega_label, x.reduced_word))
    return out


def elements_up_to(datum: RootDatum, max_len: int) -> list[WeylElement]:
    """Every element of length <= ``max_len`` (Omega factors included)."""
    seen = {omega_element(datum, lab) for lab in datum.omega.labels}
    layer = list(seen)
    for _ in range(max_len):
        new = []
        for w in layer:
            for i in datum.nodes:
                if i not in w.right_descents:
                    x = w.rmul(i)
                    if x not in seen:
                        seen.add(x)
                        new.append(x)
        layer = new
    return sorted(seen, key=lambda x: (x.length, x.omega_label, x.reduced_word))
