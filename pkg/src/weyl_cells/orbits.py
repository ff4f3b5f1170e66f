"""Nilpotent orbits of classical Lie algebras as partitions.

Ambients are ``gl(n)``, ``so(n)`` and ``sp(n)`` with ``n`` the size of the
natural representation (so ``sp(2l)`` is written ``sp`` with ``n = 2l``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate

AMBIENTS = ("gl", "so", "sp")


class PartitionError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    ambient: str
    n: int

    def __post_init__(self):
        parts = tuple(sorted((int(p) for p in self.parts if p), reverse=True))
        if any(p < 0 for p in parts):
            raise PartitionError(f"negative part in {self.parts}")
        if self.ambient not in AMBIENTS:
            raise PartitionError(f"unknown ambient {self.ambient!r}")
        if sum(parts) != self.n:
            raise PartitionError(f"{parts} does not sum to {self.n}")
        if self.ambient == "sp" and self.n % 2:
            raise PartitionError("sp needs an even dimension")
        object.__setattr__(self, "parts", parts)

    def __str__(self) -> str:
        return f"{','.join(map(str, self.parts))}@{self.ambient}{self.n}"

    @property
    def is_valid(self) -> bool:
        return _parity_ok(self.parts, self.ambient)

    def to_json(self) -> dict:
        return {"parts": list(self.parts), "ambient": self.ambient, "n": self.n}


def _parity_ok(parts, ambient: str) -> bool:
    if ambient == "gl":
        return True
    bad = 0 if ambient == "so" else 1  # so: even parts paired; sp: odd parts paired
    return all(parts.count(q) % 2 == 0 for q in set(parts) if q % 2 == bad)


def parse_partition(text: str) -> Partition:
    """``4,2,1@so7``; ``gl`` is assumed when the ambient is omitted."""
    text = text.replace(" ", "")
    m = re.fullmatch(r"([\d,]+)(?:@(gl|so|sp)(\d+))?", text)
    if not m:
        raise PartitionError(f"cannot parse partition {text!r}")
    parts = tuple(int(x) for x in m.group(1).split(",") if x)
    ambient = m.group(2) or "gl"
    n = int(m.group(3)) if m.group(3) else sum(parts)
    return Partition(parts, ambient, n)


def validate(p: Partition) -> Partition:
    if not p.is_valid:
        raise PartitionError(f"{p} violates the parity rule for {p.ambient}")
    return p


def transpose(parts) -> tuple[int, ...]:
    parts = sorted(parts, reverse=True)
    return tuple(sum(1 for p in parts if p > i) for i in range(parts[0])) if parts else ()


def dominates(a, b) -> bool:
    """Partial sums of ``a`` are at least those of ``b``."""
    la, lb = list(accumulate(a)), list(accumulate(b))
    k = max(len(la), len(lb))
    la += [la[-1] if la else 0] * (k - len(la))
    lb += [lb[-1] if lb else 0] * (k - len(lb))
    return all(x >= y for x, y in zip(la, lb))


def collapse(p: Partition) -> Partition:
    """Largest partition below ``p`` obeying the parity rule of its ambient."""
    if p.ambient == "gl":
        raise PartitionError("collapse needs an so or sp ambient")
    bad = 0 if p.ambient == "so" else 1
    parts = list(p.parts)
    while True:
        offenders = [q for q in set(parts) if q % 2 == bad and parts.count(q) % 2]
        if not offenders:
            break
        q = max(offenders)
        last = len(parts) - 1 - parts[::-1].index(q)
        parts[last] -= 1
        for j in range(last + 1, len(parts)):
            if parts[j] < q - 1:
                parts[j] += 1
                break
        else:
            parts.append(1)
        parts = sorted((x for x in parts if x), reverse=True)
    return Partition(tuple(parts), p.ambient, p.n)


def closure_leq(p: Partition, q: Partition) -> bool:
    """Orbit of ``p`` lies in the closure of the orbit of ``q``."""
    if (p.ambient, p.n) != (q.ambient, q.n):
        raise PartitionError(f"cannot compare {p} and {q}")
    return dominates(q.parts, p.parts)


def _h_eigenvalues(parts) -> list[int]:
    vals = []
    for m in parts:
        vals += list(range(m - 1, -m, -2))
    return sorted(vals, reverse=True)


def weighted_dynkin(p: Partition) -> tuple[int, ...]:
    """Labels of the neutral element of an sl2-triple on the simple roots.

    Nodes follow the usual numbering with node ``l`` at the special end
    (the short root of so(2l+1), the long root of sp(2l), the second spin
    node of so(2l)).
    """
    validate(p)
    h = _h_eigenvalues(p.parts)
    if p.ambient == "gl":
        return tuple(h[i] - h[i + 1] for i in range(len(h) - 1))
    rank = p.n // 2
    top = h[:rank]
    labels = [top[i] - top[i + 1] for i in range(rank - 1)]
    if p.ambient == "sp":
        labels.append(2 * top[-1])
    elif p.n % 2:
        labels.append(top[-1])
    else:
        labels.append(top[-2] + top[-1] if rank > 1 else 2 * top[-1])
    return tuple(labels)


def ls_dual(p: Partition) -> Partition:
    """Order-reversing duality: transpose, then fix the size and collapse in the dual ambient."""
    validate(p)
    t = list(transpose(p.parts))
    if p.ambient == "gl":
        return Partition(tuple(t), "gl", p.n)
    if p.ambient == "so" and p.n % 2:
        # so(2l+1) -> sp(2l): drop a box from the smallest part
        t[-1] -= 1
        return collapse(Partition(tuple(t), "sp", p.n - 1))
    if p.ambient == "sp":
        # sp(2l) -> so(2l+1): add a box to the largest part
        t = [t[0] + 1] + t[1:] if t else [1]
        return collapse(Partition(tuple(t), "so", p.n + 1))
    return collapse(Partition(tuple(t), "so", p.n))


def all_partitions(n: int, max_part: int | None = None):
    """Partitions of ``n`` in reverse lexicographic order."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in all_partitions(n - first, first):
            yield (first,) + rest


def valid_partitions(ambient: str, n: int) -> list[Partition]:
    return [Partition(q, ambient, n) for q in all_partitions(n) if _parity_ok(q, ambient)]


# ---------------------------------------------------------------------------
# orbits appearing in the tables


@dataclass(frozen=True)
class OrbitLabel:
    name: str
    partition: Partition | None = None
    dual_side: bool = True  # orbits live in the Langlands dual Lie algebra

    def __str__(self) -> str:
        return self.name if self.partition is None else f"{self.name}[{self.partition}]"


def dual_ambient(family: str, rank: int) -> tuple[str, int]:
    """Ambient of the Langlands dual Lie algebra."""
    family = family.upper()
    if family == "A":
        return "gl", rank + 1
    if family == "B":
        return "sp", 2 * rank
    if family == "C":
        return "so", 2 * rank + 1
    if family == "D":
        return "so", 2 * rank
    raise PartitionError(f"{family} is not a classical family")


def named_orbit(name: str, ambient: str, n: int) -> OrbitLabel:
    """regular / subregular / minimal / zero orbit of a classical ambient."""
    ones = lambda k: (1,) * k  # noqa: E731
    if ambient == "gl":
        table = {"regular": (n,), "subregular": (n - 1, 1), "minimal": (2,) + ones(n - 2), "zero": ones(n)}
    elif ambient == "sp":
        table = {"regular": (n,), "subregular": (n - 2, 2), "minimal": (2,) + ones(n - 2), "zero": ones(n)}
    elif n % 2:
        table = {"regular": (n,), "subregular": (n - 2, 1, 1), "minimal": (2, 2) + ones(n - 4), "zero": ones(n)}
    else:
        table = {"regular": (n - 1, 1), "subregular": (n - 3, 3), "minimal": (2, 2) + ones(n - 4), "zero": ones(n)}
    if name not in table:
        raise PartitionError(f"unknown orbit name {name!r}")
    return OrbitLabel(name, validate(Partition(table[name], ambient, n)))


def sigma_levels(family: str, rank: int) -> list[int]:
    """Levels at which the sigma-partition rule is tabulated."""
    family = family.upper()
    if family == "A":
        return list(range(-((rank + 1) // 2), 0))
    if family == "B" and rank >= 4:
        return [-3] if rank == 4 else [-4, -3]
    if family == "C":
        return list(range(-(rank // 2) - 1 if rank % 2 == 0 else -(rank + 1) // 2, 0))
    if family == "D" and rank >= 5:
        return [-3] if rank == 5 else [-4, -3]
    return []


def sigma_partition(family: str, rank: int, level: int) -> Partition:
    """Partition of the sl2 attached to a tabulated (type, level), in the dual ambient."""
    family = family.upper()
    if level not in sigma_levels(family, rank):
        raise PartitionError(f"no tabulated sigma for {family}{rank} at level {level}")
    ambient, n = dual_ambient(family, rank)
    l, k = rank, level
    if family == "A":
        parts = (l + 1 + k, -k)
    elif family == "B":
        parts = (2 * l - 4, 4)
    elif family == "C":
        parts = (l, l, 1) if l == -2 * k - 2 else (2 * l + 2 * k + 1, -2 * k - 1, 1)
    else:
        parts = (2 * l - 5, 5)
    return validate(Partition(parts, ambient, n))


__all__ = [
    "OrbitLabel",
    "Partition",
    "PartitionError",
    "all_partitions",
    "closure_leq",
    "collapse",
    "dominates",
    "dual_ambient",
    "ls_dual",
    "named_orbit",
    "parse_partition",
    "sigma_levels",
    "sigma_partition",
    "transpose",
    "valid_partitions",
    "validate",
    "weighted_dynkin",
]
