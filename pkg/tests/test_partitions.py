import pytest
from hypothesis import given, settings, strategies as st

from grfock.partitions import (
    Cmp,
    MayaDiagram,
    compare,
    compare_dominance,
    compare_mlex,
    dominates,
    gap_and_regularize,
    hook_lengths,
    is_n_regular,
    maya_from_beads,
    maya_of_partition,
    n_core,
    n_core_by_rim_hooks,
    n_jump_raises,
    partition_of_maya,
    partitions_of,
    size,
    transpose,
    weight_class,
)


@st.composite
def partition_st(draw, max_total=12):
    total = draw(st.integers(min_value=0, max_value=max_total))
    opts = partitions_of(total)
    return opts[draw(st.integers(min_value=0, max_value=len(opts) - 1))]


# ---------------------------------------------------------------------------
# bijection


def test_partition_of_maya_examples():
    assert partition_of_maya(maya_from_beads([], 0)) == ()           # vacuum (0,1,2,...)
    m = maya_from_beads([-3, -1, 0], 3)                              # (-3,-1,0,3,4,5,...)
    assert m.mu == (3, 2, 2)
    assert partition_of_maya(m) == (3, 3, 1)
    m2 = maya_from_beads([-2], 1)                                    # (-2,1,2,3,...)
    assert partition_of_maya(m2) == (1, 1)


def test_maya_beads_and_membership():
    m = maya_of_partition((3, 3, 1))
    assert m.beads(6) == (-3, -1, 0, 3, 4, 5)
    assert m.is_bead(-3) and not m.is_bead(-2)
    assert m.is_bead(100)
    assert m.beads_below(0) == 2


@settings(max_examples=120, deadline=None)
@given(partition_st())
def test_bijection_roundtrip(p):
    assert partition_of_maya(maya_of_partition(p)) == p


@settings(max_examples=120, deadline=None)
@given(partition_st())
def test_transpose_involution(p):
    assert transpose(transpose(p)) == p
    assert size(transpose(p)) == size(p)


def test_maya_roundtrip_via_beads_all_small():
    for total in range(0, 9):
        for p in partitions_of(total):
            m = maya_of_partition(p)
            beads = [m.bead(k) for k in range(1, len(m.mu) + 1)]
            assert maya_from_beads(beads, m.tail_start()) == m


# ---------------------------------------------------------------------------
# regularity and the gap map


def test_is_n_regular_examples():
    assert is_n_regular((2, 1), 2)
    assert not is_n_regular((1, 1), 2)
    assert is_n_regular((3, 3, 1), 3)


def test_gap_and_regularize_examples():
    assert gap_and_regularize((1, 1), 2) == (1, (), 1)
    assert gap_and_regularize((2, 1), 2) == (None, (2, 1), 0)
    assert gap_and_regularize((2, 2), 2) == (2, (), 2)


@settings(max_examples=150, deadline=None)
@given(partition_st(), st.sampled_from([2, 3, 4]))
def test_gap_infinite_iff_regular(p, n):
    ell, rho, d = gap_and_regularize(p, n)
    assert (ell is None) == is_n_regular(p, n)
    if ell is None:
        assert rho == p and d == 0
    else:
        assert d == ell
        # rho drops exactly n parts equal to the gap value
        assert size(rho) == size(p) - n * ell
        removed = sorted(p)
        for _ in range(n):
            removed.remove(ell)
        assert tuple(sorted(removed, reverse=True)) == rho


# ---------------------------------------------------------------------------
# orders


def test_compare_examples():
    assert compare((2,), (1, 1), "dominance") is Cmp.GREATER
    assert compare((2,), (1, 1), "n_dominance", n=2) is Cmp.GREATER
    assert compare((1, 1, 1), (3,), "n_jump", n=2) is Cmp.LESS
    assert compare((2, 2), (2, 2), "mlex") is Cmp.EQUAL
    assert compare((3, 1), (2, 2), "dominance") is Cmp.GREATER
    assert compare((3, 1, 1, 1), (2, 2, 2), "dominance") is Cmp.INCOMPARABLE
    assert compare((2,), (1,), "dominance") is Cmp.INCOMPARABLE


def test_mlex_total_on_fixed_size():
    for total in range(0, 9):
        parts = partitions_of(total)
        for p in parts:
            for q in parts:
                c = compare_mlex(p, q)
                if p == q:
                    assert c is Cmp.EQUAL
                else:
                    assert c in (Cmp.LESS, Cmp.GREATER)


def test_one_jump_is_dominance():
    # squeezing the Maya pair of (1,1) by one step gives the label (2)
    assert n_jump_raises((1, 1), 1) == ((2,),)


@pytest.mark.parametrize("n", [2, 3])
def test_n_jump_refines_dominance_exhaustive(n):
    for total in range(0, 11):
        for q in partitions_of(total):
            seen = {q}
            frontier = [q]
            while frontier:
                x = frontier.pop()
                for r in n_jump_raises(x, n):
                    assert dominates(r, x), (n, x, r)
                    assert weight_class(r, n) == weight_class(x, n)
                    assert size(r) == size(x)
                    if r not in seen:
                        seen.add(r)
                        frontier.append(r)
            for r in seen:
                assert dominates(r, q), (n, q, r)


def test_two_jump_pair_example():
    # (2) is one 2-jump above (1,1): beads (-2,1) -> (0,-1)
    assert n_jump_raises((1, 1), 2) == ((2,),)


# ---------------------------------------------------------------------------
# n-cores


def test_n_core_examples():
    assert n_core((), 2) == ()
    assert n_core((2,), 2) == ()
    assert n_core((2, 1), 2) == (2, 1)
    assert hook_lengths((2, 1)) == [[3, 1], [1]]


@settings(max_examples=200, deadline=None)
@given(partition_st(), st.sampled_from([2, 3, 4, 5]))
def test_n_core_matches_rim_hook_oracle(p, n):
    assert n_core(p, n) == n_core_by_rim_hooks(p, n)


@settings(max_examples=100, deadline=None)
@given(partition_st(), st.sampled_from([2, 3]))
def test_n_core_is_idempotent_and_core_regularish(p, n):
    c = n_core(p, n)
    assert n_core(c, n) == c
    assert (size(p) - size(c)) % n == 0


def test_maya_json_shape():
    m = maya_of_partition((2, 1))
    assert m.to_json() == {"charge": 0, "mu": [2, 1]}
