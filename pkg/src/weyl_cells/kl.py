"""Kazhdan-Lusztig polynomials, mu-coefficients, convolution steps and heaps.

P_{x,y} is computed by the right-descent recursion

    P_{x,y} = P_{xs,v} + q P_{x,v} - sum_{z in [x,v], zs<z} mu(z,v) q^{(l(y)-l(z))/2} P_{x,z}

with v = ys < y and xs < x (if xs > x then P_{x,y} = P_{xs,y}).  Everything is
restricted to the lower Bruhat interval of y and memoized on canonical forms.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .affine_weyl import (
    MixedDataError,
    WeylElement,
    bruhat_leq,
    elements_up_to,
    is_left_spherical,
    lower_interval,
    omega_element,
    simple_reflection,
)
from .rootdata import RootDatum

DEFAULT_MAX_LENGTH = 16


class KLError(ValueError):
    """Precondition failure: x not below y, or rs < r in a convolution step."""


class LengthBoundError(KLError):
    """An element is longer than the configured bound."""


def max_length() -> int:
    """Length bound for KL computations (``WEYL_CELLS_MAXLEN`` overrides it)."""
    raw = os.environ.get("WEYL_CELLS_MAXLEN")
    return int(raw) if raw else DEFAULT_MAX_LENGTH


@dataclass(frozen=True)
class KLPoly:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __call__(self, q: int) -> int:
        return sum(c * q**j for j, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        terms = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if j == 0 else ("q" if j == 1 else f"q^{j}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[int]:
        return list(self.coeffs)


# polynomial helpers on plain coefficient lists

def _add(a: list[int], b: Sequence[int], shift: int = 0, scale: int = 1) -> list[int]:
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for j, c in enumerate(b):
        out[j + shift] += scale * c
    return out


class _KLCache:
    """Memo of P_{x,y} keyed on canonical forms; inserts are idempotent."""

    def __init__(self):
        self.table: dict[tuple[str, bytes, bytes], tuple[int, ...]] = {}

    def get(self, x: WeylElement, y: WeylElement):
        return self.table.get((x.datum.name, x.key, y.key))

    def put(self, x: WeylElement, y: WeylElement, p: Sequence[int]) -> None:
        self.table.setdefault((x.datum.name, x.key, y.key), tuple(p))


_CACHE = _KLCache()


def _check_pair(x: WeylElement, y: WeylElement) -> None:
    if x.datum != y.datum:
        raise MixedDataError("KL polynomial across root data")
    bound = max_length()
    if y.length > bound:
        raise LengthBoundError(f"length {y.length} exceeds the KL bound {bound} (set WEYL_CELLS_MAXLEN)")
    if not bruhat_leq(x, y):
        raise KLError(f"{x} is not below {y} in the Bruhat order")


def kl_poly(x: WeylElement, y: WeylElement, word: Sequence[int] | None = None) -> KLPoly:
    """P_{x,y}.  ``word`` optionally fixes the reduced word of y driving the recursion."""
    _check_pair(x, y)
    if word is not None and y.omega_label:
        g = omega_element(y.datum, y.omega_label).inverse()
        x, y = x * g, y * g
    return KLPoly(tuple(_P(x, y, tuple(word) if word is not None else None)))


def _P(x: WeylElement, y: WeylElement, word: tuple[int, ...] | None = None) -> list[int]:
    if not bruhat_leq(x, y):
        return []
    if x.length == y.length:
        return [1]
    if word is None:
        hit = _CACHE.get(x, y)
        if hit is not None:
            return list(hit)
        s = max(y.right_descents)
        rest = None
    else:
        s = word[-1]
        rest = word[:-1]
    if s not in x.right_descents:
        # P_{x,y} = P_{xs,y}
        out = _P(x.rmul(s), y, word)
    else:
        v = y.rmul(s)
        xs = x.rmul(s)
        out = _add(_P(xs, v, rest), _P(x, v, rest), shift=1)
        ly = y.length
        for z in lower_interval(v):
            if s not in z.right_descents or z == v or not bruhat_leq(x, z):
                continue
            m = _mu_list(_P(z, v), z.length, v.length)
            if m:
                out = _add(out, _P(x, z), shift=(ly - z.length) // 2, scale=-m)
    while out and out[-1] == 0:
        out.pop()
    if word is None:
        _CACHE.put(x, y, out)
    return out


def _mu_list(p: Sequence[int], lx: int, ly: int) -> int:
    d = ly - lx
    if d <= 0 or d % 2 == 0:
        return 0
    j = (d - 1) // 2
    return p[j] if j < len(p) else 0


def mu(x: WeylElement, y: WeylElement) -> int:
    """Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y}; 0 if that is not an integer exponent."""
    _check_pair(x, y)
    return _mu_list(_P(x, y), x.length, y.length)


def mu_if_below(x: WeylElement, y: WeylElement) -> int:
    """mu(x, y), or 0 when x is not below y."""
    if x.datum != y.datum:
        raise MixedDataError("mu across root data")
    if not bruhat_leq(x, y):
        return 0
    return mu(x, y)


def mu_graph(datum: RootDatum, max_len: int) -> list[tuple[WeylElement, WeylElement, int]]:
    """Edges (x, y, mu) with x < y and mu(x, y) != 0, for all y of length <= max_len."""
    elems = elements_up_to(datum, max_len)
    edges = []
    for y in elems:
        for x in lower_interval(y):
            if x == y:
                continue
            m = mu(x, y)
            if m:
                edges.append((x, y, m))
    edges.sort(key=lambda e: (e[1].length, e[1].word, e[0].length, e[0].word))
    return edges


# ---------------------------------------------------------------------------
# convolution of simples


def _as_node(datum: RootDatum, s: int | WeylElement) -> int:
    if isinstance(s, WeylElement):
        if s.length != 1 or s.omega_label:
            raise KLError(f"{s} is not a simple reflection")
        return s.reduced_word[0]
    simple_reflection(datum, s)
    return int(s)


def convolve_simple(r: WeylElement, s: int | WeylElement) -> Counter:
    """C_r * C_s = C_{rs} + sum over r' < r with r's < r' of mu(r', r) C_{r'}."""
    i = _as_node(r.datum, s)
    if i in r.right_descents:
        raise KLError(f"{r} already ends with s{i}; the product rule needs rs > r")
    out: Counter = Counter({r.rmul(i): 1})
    for z in lower_interval(r):
        if z == r or i not in z.right_descents:
            continue
        m = mu(z, r)
        if m:
            out[z] += m
    return out


def convolve_costandard(
    z: WeylElement,
    v: WeylElement,
    keep: Callable[[WeylElement], bool] | None = None,
) -> Counter:
    """Simple labels of C_z * nabla_v, one reduced-word letter of v at a time.

    The tracked leading term ``z u`` (u a prefix of v) must grow at every step;
    other terms that already end with the letter pass through unchanged.
    ``keep`` discards the negligible labels after each step.
    """
    if z.datum != v.datum:
        raise MixedDataError("convolution across root data")
    terms: Counter = Counter({z: 1})
    lead = z
    done: list[int] = []
    for i in v.reduced_word:
        if i in lead.right_descents:
            prefix = ".".join(str(j) for j in done + [i])
            raise KLError(f"leading term {lead} already ends with s{i} at prefix {prefix} of v")
        new: Counter = Counter()
        for r, mult in terms.items():
            if i in r.right_descents:
                new[r] += mult
            else:
                for x, m in convolve_simple(r, i).items():
                    new[x] += mult * m
        lead = lead.rmul(i)
        done.append(i)
        terms = Counter({r: m for r, m in new.items() if r == lead or keep is None or keep(r)})
    if v.omega_label:
        g = omega_element(v.datum, v.omega_label)
        terms = Counter({r * g: m for r, m in terms.items()})
    return terms


# ---------------------------------------------------------------------------
# heaps and full commutativity


def braid_order(datum: RootDatum, i: int, j: int) -> int | None:
    """Order of s_i s_j (None when infinite)."""
    if i == j:
        return 1
    prod = int(datum.affine_cartan[i, j]) * int(datum.affine_cartan[j, i])
    return {0: 2, 1: 3, 2: 4, 3: 6}.get(prod)


class Heap:
    """Heap of a word: positions ordered by position among non-commuting letters."""

    def __init__(self, datum: RootDatum, word: Sequence[int]):
        self.datum = datum
        self.labels = tuple(int(x) for x in word)
        n = len(self.labels)
        below = [0] * n  # bitmask of strictly smaller positions
        for q in range(n):
            mask = 0
            for p in range(q):
                if braid_order(datum, self.labels[p], self.labels[q]) != 2:
                    mask |= (1 << p) | below[p]
            below[q] = mask
        self._below = below

    def __len__(self) -> int:
        return len(self.labels)

    def less(self, p: int, q: int) -> bool:
        return bool(self._below[q] >> p & 1)

    def interval(self, p: int, q: int) -> list[int]:
        return [r for r in range(len(self)) if self.less(p, r) and self.less(r, q)]

    def covers(self) -> list[tuple[int, int]]:
        out = []
        for q in range(len(self)):
            for p in range(q):
                if self.less(p, q) and not self.interval(p, q):
                    out.append((p, q))
        return out

    @cached_property
    def linear_extension_count(self) -> int:
        n = len(self)
        full = (1 << n) - 1
        memo: dict[int, int] = {full: 1}

        def count(mask: int) -> int:
            # mask: positions already placed (an order ideal)
            if mask not in memo:
                memo[mask] = sum(
                    count(mask | (1 << q))
                    for q in range(n)
                    if not mask >> q & 1 and self._below[q] & ~mask == 0
                )
            return memo[mask]

        return count(0)

    def has_convex_braid(self) -> bool:
        """A convex chain alternating i, j of length m(i, j) >= 3."""
        labels = self.labels
        present = sorted(set(labels))
        for a_idx, i in enumerate(present):
            for j in present[a_idx + 1:]:
                m = braid_order(self.datum, i, j)
                if m is None or m < 3:
                    continue
                seq = [p for p, x in enumerate(labels) if x in (i, j)]
                for start in range(len(seq) - m + 1):
                    window = seq[start:start + m]
                    if any(labels[window[t]] == labels[window[t + 1]] for t in range(m - 1)):
                        continue
                    if set(self.interval(window[0], window[-1])) == set(window[1:-1]):
                        return True
        return False


def heap(w: WeylElement) -> Heap:
    """Heap of the canonical reduced word (the Omega factor is ignored)."""
    return Heap(w.datum, w.reduced_word)


def is_fully_commutative(w: WeylElement) -> bool:
    return not heap(w).has_convex_braid()


# ---------------------------------------------------------------------------
# conditions on supplied cells


def check_condition_sing(cell_elements: Iterable[WeylElement], sing: Iterable[int]) -> bool:
    """Some listed element is left spherical and ends with every singular reflection."""
    elems = list(cell_elements)
    if not elems:
        raise ValueError("empty cell")
    s = frozenset(sing)
    return any(is_left_spherical(w) and s <= w.right_descents for w in elems)


def check_condition_comm(cell_elements: Iterable[WeylElement]) -> bool:
    elems = list(cell_elements)
    if not elems:
        raise ValueError("empty cell")
    return all(is_fully_commutative(w) for w in elems)


__all__ = [
    "Heap",
    "KLError",
    "KLPoly",
    "LengthBoundError",
    "braid_order",
    "check_condition_comm",
    "check_condition_sing",
    "convolve_costandard",
    "convolve_simple",
    "heap",
    "is_fully_commutative",
    "kl_poly",
    "max_length",
    "mu",
    "mu_graph",
]
