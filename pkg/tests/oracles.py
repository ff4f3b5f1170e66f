"""Independent brute-force references.

Nothing here reuses the library's recursions: elements are compared only
through ``from_word`` products and the group law.
"""

from __future__ import annotations

from itertools import combinations

from weyl_cells import affine_weyl as aw
from weyl_cells.orbits import Partition, _parity_ok, all_partitions, dominates


# -- lengths and Bruhat order -------------------------------------------------


def bfs_lengths(datum, max_len: int) -> dict:
    """Element -> length, by breadth-first search on the Cayley graph (no Omega)."""
    e = aw.identity(datum)
    dist = {e: 0}
    layer = [e]
    for n in range(1, max_len + 1):
        nxt = []
        for w in layer:
            for i in datum.nodes:
                x = w * aw.simple_reflection(datum, i)
                if x not in dist:
                    dist[x] = n
                    nxt.append(x)
        layer = nxt
    return dist


def one_reduced_word(w, lengths: dict) -> tuple[int, ...]:
    """A reduced word read off the BFS distances."""
    datum = w.datum
    word = []
    while lengths[w]:
        for i in datum.nodes:
            x = w * aw.simple_reflection(datum, i)
            if lengths.get(x, 10**9) == lengths[w] - 1:
                word.append(i)
                w = x
                break
    return tuple(reversed(word))


def subword_lower_set(datum, word) -> set:
    """All elements obtained from subwords of a reduced word: the Bruhat lower set."""
    out = set()
    n = len(word)
    for r in range(n + 1):
        for idx in combinations(range(n), r):
            out.add(aw.from_word(datum, [word[i] for i in idx]))
    return out


# -- Kazhdan-Lusztig via R-polynomials ---------------------------------------


def _padd(a, b, shift=0, scale=1):
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for j, c in enumerate(b):
        out[j + shift] += scale * c
    return out


def r_poly(x, y, lengths, lower, memo):
    """R_{x,y}: R_{x,y} = R_{sx,sy} if sx < x, else (q-1) R_{x,sy} + q R_{sx,sy} (s a left descent of y)."""
    key = (x, y)
    if key in memo:
        return memo[key]
    if x not in lower[y]:
        res = [0]
    elif x == y:
        res = [1]
    else:
        datum = y.datum
        s = next(i for i in datum.nodes if lengths.get(aw.simple_reflection(datum, i) * y, 10**9) < lengths[y])
        sy = aw.simple_reflection(datum, s) * y
        sx = aw.simple_reflection(datum, s) * x
        if lengths[sx] < lengths[x]:
            res = r_poly(sx, sy, lengths, lower, memo)
        else:
            a = r_poly(x, sy, lengths, lower, memo)
            b = r_poly(sx, sy, lengths, lower, memo)
            res = _padd(_padd(_padd([0], a, 1), a, 0, -1), b, 1)
    memo[key] = res
    return res


def kl_via_r(x, w, lengths, lower, rmemo, pmemo) -> list[int]:
    """P_{x,w} from q^{d} P_{x,w}(1/q) - P_{x,w} = sum_{x<y<=w} R_{x,y} P_{y,w} and the degree bound."""
    key = (x, w)
    if key in pmemo:
        return pmemo[key]
    if x not in lower[w]:
        res = [0]
    elif x == w:
        res = [1]
    else:
        s = [0]
        for y in lower[w]:
            if y != x and x in lower[y]:
                s = _padd(s, _mul(r_poly(x, y, lengths, lower, rmemo), kl_via_r(y, w, lengths, lower, rmemo, pmemo)))
        d = lengths[w] - lengths[x]
        res = [-c for c in s[: (d - 1) // 2 + 1]]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    pmemo[key] = res
    return res


def _mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# -- full commutativity -------------------------------------------------------


def all_reduced_words(w, lengths) -> set[tuple[int, ...]]:
    datum = w.datum
    if lengths[w] == 0:
        return {()}
    out = set()
    for i in datum.nodes:
        x = w * aw.simple_reflection(datum, i)
        if lengths.get(x, 10**9) == lengths[w] - 1:
            out |= {u + (i,) for u in all_reduced_words(x, lengths)}
    return out


def braid_m(datum, i, j) -> int | None:
    """Order of s_i s_j by repeated multiplication (None past 12)."""
    g = aw.from_word(datum, [i, j])
    x = g
    for m in range(1, 13):
        if x.is_identity():
            return m
        x = x * g
    return None


def fc_by_words(w, lengths) -> bool:
    """No reduced word contains an alternating factor i j i ... of length m(i, j) >= 3."""
    datum = w.datum
    for word in all_reduced_words(w, lengths):
        for a in range(len(word)):
            for b in range(a + 1, len(word)):
                i, j = word[a], word[b]
                if i == j:
                    continue
                m = braid_m(datum, i, j)
                if m is None or m < 3 or a + m > len(word):
                    continue
                if all(word[a + t] == (i if t % 2 == 0 else j) for t in range(m)):
                    return False
    return True


# -- partitions -----------------------------------------------------------------


def collapse_brute(p: Partition) -> Partition:
    """The dominance-maximum of valid partitions below ``p``."""
    cands = [q for q in all_partitions(p.n) if _parity_ok(q, p.ambient) and dominates(p.parts, q)]
    top = [q for q in cands if all(dominates(q, r) for r in cands)]
    assert len(top) == 1
    return Partition(top[0], p.ambient, p.n)
