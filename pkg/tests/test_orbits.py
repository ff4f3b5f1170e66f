from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from weyl_cells import orbits as Orb
from weyl_cells.orbits import Partition


def test_parse_and_validate():
    p = Orb.parse_partition("5,1,1@so7")
    assert p.parts == (5, 1, 1) and p.ambient == "so" and p.n == 7 and p.is_valid
    assert not Orb.parse_partition("4,2,1@so7").is_valid
    assert Orb.parse_partition("3,2,1").ambient == "gl"
    with pytest.raises(Orb.PartitionError):
        Orb.validate(Orb.parse_partition("3,1@sp4"))
    with pytest.raises(Orb.PartitionError):
        Orb.parse_partition("3,x")
    with pytest.raises(Orb.PartitionError):
        Partition((3, 1), "sp", 5)


@pytest.mark.parametrize("ambient", ["so", "sp"])
@pytest.mark.parametrize("n", range(1, 13))
def test_collapse_is_dominance_maximum(ambient, n):
    if ambient == "sp" and n % 2:
        return
    for q in Orb.all_partitions(n):
        p = Partition(q, ambient, n)
        c = Orb.collapse(p)
        assert c == O.collapse_brute(p)
        assert c.is_valid and Orb.collapse(c) == c  # idempotent
        assert Orb.closure_leq(c, p)


@pytest.mark.parametrize("n", range(1, 13))
def test_closure_is_partial_order(n):
    parts = [Partition(q, "gl", n) for q in Orb.all_partitions(n)]
    m = np.array([[Orb.closure_leq(p, q) for q in parts] for p in parts], dtype=bool)
    assert m.diagonal().all()
    assert not (m & m.T & ~np.eye(len(parts), dtype=bool)).any()  # antisymmetric
    mm = (m.astype(int) @ m.astype(int)) > 0
    assert not (mm & ~m).any()  # transitive


def test_transpose_reverses_dominance():
    for n in range(1, 11):
        ps = list(Orb.all_partitions(n))
        for a in ps:
            assert Orb.transpose(Orb.transpose(a)) == a
            for b in ps:
                if Orb.dominates(a, b):
                    assert Orb.dominates(Orb.transpose(b), Orb.transpose(a))


@pytest.mark.parametrize("n", range(1, 9))
def test_regular_dynkin_all_twos(n):
    assert Orb.weighted_dynkin(Partition((n,), "gl", n)) == (2,) * (n - 1)


def test_weighted_dynkin_examples():
    assert Orb.weighted_dynkin(Orb.parse_partition("1,1,1@gl3")) == (0, 0)
    assert Orb.weighted_dynkin(Orb.parse_partition("2,1@gl3")) == (1, 1)
    assert Orb.weighted_dynkin(Orb.parse_partition("6@sp6")) == (2, 2, 2)
    assert Orb.weighted_dynkin(Orb.parse_partition("7@so7")) == (2, 2, 2)
    assert Orb.weighted_dynkin(Orb.parse_partition("2,2,1,1,1@so7")) == (0, 1, 0)
    assert Orb.weighted_dynkin(Orb.parse_partition("7,1@so8")) == (2, 2, 2, 2)
    assert Orb.weighted_dynkin(Orb.parse_partition("2,1,1@sp4")) == (1, 0)


@pytest.mark.parametrize("ambient,n", [("so", 7), ("sp", 6), ("so", 9), ("sp", 8), ("so", 8), ("so", 10), ("gl", 6)])
def test_ls_dual_order_reversing(ambient, n):
    ps = Orb.valid_partitions(ambient, n)
    duals = {p: Orb.ls_dual(p) for p in ps}
    for p in ps:
        d = duals[p]
        assert d.is_valid
        for q in ps:
            if Orb.closure_leq(p, q):
                assert Orb.closure_leq(duals[q], d)
    # regular <-> zero
    reg = Orb.named_orbit("regular", ambient, n).partition
    zero = Orb.named_orbit("zero", ambient, n).partition
    assert Orb.ls_dual(reg).parts == (1,) * Orb.ls_dual(reg).n
    assert Orb.ls_dual(zero) == Orb.named_orbit("regular", *_dual(ambient, n)).partition


def _dual(ambient, n):
    if ambient == "so" and n % 2:
        return "sp", n - 1
    if ambient == "sp":
        return "so", n + 1
    return ambient, n


def test_ls_dual_examples():
    # subregular goes to the minimal special orbit
    assert str(Orb.ls_dual(Orb.parse_partition("5,1,1@so7"))) == "2,2,1,1@sp6"
    assert str(Orb.ls_dual(Orb.parse_partition("4,2@sp6"))) == "3,1,1,1,1@so7"
    assert str(Orb.ls_dual(Orb.parse_partition("5,3@so8"))) == "2,2,1,1,1,1@so8"
    assert str(Orb.ls_dual(Orb.parse_partition("3,2@gl5"))) == "2,2,1@gl5"


@pytest.mark.parametrize("family,rank", [("A", r) for r in range(1, 9)] + [("B", r) for r in range(4, 9)] + [("C", r) for r in range(2, 9)] + [("D", r) for r in range(5, 9)])
def test_sigma_partitions_validate(family, rank):
    for k in Orb.sigma_levels(family, rank):
        p = Orb.sigma_partition(family, rank, k)
        ambient, n = Orb.dual_ambient(family, rank)
        assert (p.ambient, p.n) == (ambient, n) and p.is_valid
        if family == "B":
            assert sum(p.parts) == 2 * rank
        if family == "C":
            assert sum(p.parts) == 2 * rank + 1


def test_sigma_errors():
    with pytest.raises(Orb.PartitionError):
        Orb.sigma_partition("B", 3, -3)


@given(st.integers(1, 14).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(list(Orb.all_partitions(n))))), st.sampled_from(["so", "sp"]))
def test_collapse_properties(np_, ambient):
    n, q = np_
    if ambient == "sp" and n % 2:
        return
    p = Partition(q, ambient, n)
    c = Orb.collapse(p)
    assert c.is_valid and Orb.closure_leq(c, p)
    if p.is_valid:
        assert c == p
