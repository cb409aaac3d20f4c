"""Partition-core tests.

The oracle section reimplements transpose, dominance and the search for
dominance extrema independently (different algorithms, no shared code
with the package) so the closed recipes are checked against them.
"""

from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from nilorbits import partitions as pt
from nilorbits.errors import InvariantBreach, ValidationError
from nilorbits.partitions import Order


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------


def oracle_partitions(n, max_part=None):
    """All partitions of n, plain recursion."""
    max_part = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        out.extend((first,) + rest for rest in oracle_partitions(n - first, first))
    return out


def oracle_transpose(p):
    return tuple(
        sum(1 for part in p if part >= col) for col in range(1, (p[0] if p else 0) + 1)
    )


def oracle_leq(p, q):
    """p <= q in dominance via running prefix sums."""
    total_p = total_q = 0
    for i in range(max(len(p), len(q))):
        total_p += p[i] if i < len(p) else 0
        total_q += q[i] if i < len(q) else 0
        if total_p > total_q:
            return False
    return True


def oracle_symplectic(p):
    return all(p.count(v) % 2 == 0 for v in set(p) if v % 2 == 1)


def oracle_special(p):
    return oracle_symplectic(p) and oracle_symplectic(oracle_transpose(p))


def oracle_maximal_special_below(p):
    """Dominance-maximal special partitions below p (possibly several)."""
    pool = [s for s in oracle_partitions(sum(p)) if oracle_special(s) and oracle_leq(s, p)]
    return [s for s in pool if not any(o != s and oracle_leq(s, o) for o in pool)]


def oracle_special_above(p):
    """Unique dominance minimum of the special partitions above a symplectic p."""
    pool = [s for s in oracle_partitions(sum(p)) if oracle_special(s) and oracle_leq(p, s)]
    best = [s for s in pool if all(oracle_leq(s, o) for o in pool)]
    assert len(best) == 1, f"tie above {p}: {best}"
    return best[0]


partitions_st = st.lists(st.integers(min_value=1, max_value=12), max_size=10).map(
    pt.normalize
)


# ---------------------------------------------------------------------------
# Normalization, transpose, orders
# ---------------------------------------------------------------------------


def test_normalize_examples():
    assert pt.normalize([4, 2, 1, 0]) == (4, 2, 1)
    assert pt.normalize([]) == ()
    assert pt.normalize([1, 3, 1]) == (3, 1, 1)
    with pytest.raises(ValidationError):
        pt.normalize([3, -1])


def test_transpose_examples():
    assert pt.transpose(()) == ()
    assert pt.transpose((3, 3, 1, 1, 1, 1)) == (6, 2, 2)
    # hand count: columns of [4,1,1] have 3,1,1,1 cells
    assert pt.transpose((4, 1, 1)) == (3, 1, 1, 1)


def test_transpose_matches_oracle_and_involution():
    for n in range(18):
        for p in pt.enumerate_partitions(n):
            assert pt.transpose(p) == oracle_transpose(p)
            assert pt.transpose(pt.transpose(p)) == p
    # a spot check at the brute-force cap
    big = pt.normalize([7, 6, 6, 5, 4, 4, 3, 2, 2, 1])
    assert pt.transpose(pt.transpose(big)) == big


def test_dominance_examples():
    assert pt.dominance_compare((3, 1, 1, 1), (3, 3)) == Order.LESS
    assert pt.dominance_compare((4, 1, 1), (3, 3)) == Order.INCOMPARABLE
    assert pt.dominance_compare((2, 2), (2, 2)) == Order.EQUAL
    with pytest.raises(ValidationError):
        pt.dominance_compare((2, 1), (2, 2))


def test_lex_examples():
    assert pt.lex_compare((6, 1, 1), (4, 2, 2)) == Order.GREATER
    assert pt.lex_compare((2, 2, 2, 2), (4, 2, 2)) == Order.LESS
    assert pt.lex_compare((3, 3), (3, 3)) == Order.EQUAL
    with pytest.raises(ValidationError):
        pt.lex_compare((3,), (2,))


def test_orders_match_oracle():
    pool = pt.enumerate_partitions(9)
    for p in pool:
        for q in pool:
            rel = pt.dominance_compare(p, q)
            le, ge = oracle_leq(p, q), oracle_leq(q, p)
            assert (rel in (Order.LESS, Order.EQUAL)) == le
            assert (rel in (Order.GREATER, Order.EQUAL)) == ge
            # lexicographic order is total and refines dominance
            lex = pt.lex_compare(p, q)
            assert lex != Order.INCOMPARABLE
            if rel == Order.GREATER:
                assert lex == Order.GREATER


@given(partitions_st)
@settings(max_examples=150)
def test_transpose_involution_property(p):
    assert pt.transpose(pt.transpose(p)) == p


@given(partitions_st, partitions_st)
@settings(max_examples=150)
def test_transpose_antitone_property(p, q):
    if sum(p) != sum(q):
        return
    rel = pt.dominance_compare(p, q)
    flipped = pt.dominance_compare(pt.transpose(q), pt.transpose(p))
    assert rel == flipped


def test_decrement_tail():
    assert pt.decrement_tail((3, 3, 3)) == (3, 3, 2)
    assert pt.decrement_tail((3, 1, 1, 1, 1)) == (3, 1, 1, 1)
    assert pt.decrement_tail((5,)) == (4,)
    with pytest.raises(ValidationError):
        pt.decrement_tail(())


def test_decrement_tail_dominance_monotone():
    # q1 <= q2 implies decrement(q1) <= decrement(q2), exhaustive to size 17
    for n in range(1, 18):
        pool = pt.enumerate_partitions(n)
        decs = {p: pt.decrement_tail(p) for p in pool}
        for q1 in pool:
            for q2 in pool:
                if oracle_leq(q1, q2):
                    assert oracle_leq(decs[q1], decs[q2])


def test_classify_examples():
    flags = pt.classify((2, 2, 1, 1))
    assert flags.symplectic and flags.special_symplectic
    flags = pt.classify((2, 1, 1))
    assert flags.symplectic and not flags.special_symplectic
    assert not pt.classify((3, 1)).symplectic
    assert pt.classify((3, 1)).orthogonal
    assert pt.classify(()).special_symplectic


def test_compose_descent():
    assert pt.compose_descent(4, (2, 2)) == (4, 2, 2)
    assert pt.compose_descent(6, (2, 2)) == (6, 2, 2)
    assert pt.compose_descent(1, ()) == (1,)
    # the head is merely sorted in, not required to dominate
    assert pt.compose_descent(1, (3, 2)) == (3, 2, 1)
    with pytest.raises(ValidationError):
        pt.compose_descent(0, (2,))


# ---------------------------------------------------------------------------
# Collapses and expansions
# ---------------------------------------------------------------------------


def test_collapse_examples():
    assert pt.special_sp_collapse((3, 1)) == (2, 2)
    assert pt.special_sp_collapse((3, 1, 1, 1)) == (2, 2, 1, 1)
    assert pt.special_sp_collapse((2, 2)) == (2, 2)
    with pytest.raises(ValidationError):
        pt.special_sp_collapse((3, 1, 1))


def test_expansion_examples():
    assert pt.sp_expansion((2, 1, 1)) == (2, 2)
    assert pt.sp_expansion((4, 1, 1)) == (4, 2)
    assert pt.sp_expansion((2, 2)) == (2, 2)
    with pytest.raises(ValidationError):
        pt.sp_expansion((3, 1))


def test_collapse_and_expansion_match_oracle():
    """Against brute force: unique maxima are returned, ties breach.

    A dominance-maximal special partition below an arbitrary even-size
    input need not be unique (earliest example [6,1,1,1,1]); the library
    treats that as an invariant breach.  Along the duality path (tail
    decrements of orthogonal partitions) and for expansions of symplectic
    inputs the extremum is unique, which the acceptance suite re-checks at
    full size.
    """
    saw_tie = False
    for n in range(0, 13, 2):
        for p in oracle_partitions(n):
            maximal = oracle_maximal_special_below(p)
            if len(maximal) == 1:
                assert pt.special_sp_collapse(p) == maximal[0]
                assert pt.special_collapse_by_search(p) == maximal[0]
            else:
                saw_tie = True
                with pytest.raises(InvariantBreach):
                    pt.special_sp_collapse(p)
            if oracle_symplectic(p):
                assert pt.sp_expansion(p) == oracle_special_above(p)
    assert saw_tie  # the breach branch is genuinely exercised


def test_collapse_invariants():
    for n in range(0, 15, 2):
        for p in pt.enumerate_partitions(n):
            try:
                c = pt.special_sp_collapse(p)
            except InvariantBreach:
                assert not pt.is_special_symplectic(pt.symplectic_collapse(p))
                continue
            assert pt.is_special_symplectic(c)
            assert pt.dominates(p, c)
            assert pt.special_sp_collapse(c) == c
            assert (c == p) == pt.is_special_symplectic(p)
            if pt.is_symplectic(p):
                e = pt.sp_expansion(p)
                assert pt.is_special_symplectic(e)
                assert pt.dominates(e, p)
                assert pt.sp_expansion(e) == e


def test_classical_vs_special_collapse_recorded():
    """The two collapses may differ; record where (no equality assertion).

    The classical collapse always dominates the special one, and the two
    agree exactly when the classical result is already special.
    """
    differing = []
    for n in range(0, 13, 2):
        for p in pt.enumerate_partitions(n):
            classical = pt.symplectic_collapse(p)
            try:
                special = pt.special_sp_collapse(p)
            except InvariantBreach:
                continue  # no unique special maximum below p
            assert pt.dominates(classical, special)
            if classical != special:
                differing.append((p, classical, special))
                assert not pt.is_special_symplectic(classical)
    # representative recorded instance
    assert ((4, 1, 1), (4, 1, 1), (2, 2, 2)) in differing
    print(f"\nclassical/special collapse differ at {len(differing)} inputs <= 12:")
    for p, classical, special in differing:
        print(
            f"  {pt.format_partition(p)}: classical {pt.format_partition(classical)}"
            f" vs special {pt.format_partition(special)}"
        )


# ---------------------------------------------------------------------------
# Duality
# ---------------------------------------------------------------------------


def test_duality_examples():
    assert pt.barbasch_vogan_dual((3, 3, 3)) == (3, 3, 2)
    assert pt.barbasch_vogan_dual((3, 3, 1, 1, 1)) == (4, 2, 2)
    assert pt.barbasch_vogan_dual((1, 1, 1, 1, 1)) == (4,)
    with pytest.raises(ValidationError):
        pt.barbasch_vogan_dual((2, 2))  # even size
    with pytest.raises(ValidationError):
        pt.barbasch_vogan_dual((4, 3))  # not orthogonal


def test_duality_properties_small():
    for n in range(3, 14, 2):
        images = []
        for q in pt.enumerate_partitions(n, "orthogonal"):
            eta = pt.barbasch_vogan_dual(q)
            assert pt.is_special_symplectic(eta)
            assert sum(eta) == n - 1
            images.append((q, eta))
        for q1, eta1 in images:
            for q2, eta2 in images:
                if oracle_leq(q1, q2):
                    assert oracle_leq(eta2, eta1)


# ---------------------------------------------------------------------------
# Enumeration, grammar
# ---------------------------------------------------------------------------


def test_enumeration_examples():
    assert pt.enumerate_partitions(4, "symplectic") == (
        (4,),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    )
    assert pt.enumerate_partitions(0) == ((),)
    assert pt.enumerate_partitions(5, "orthogonal") == (
        (5,),
        (3, 1, 1),
        (2, 2, 1),
        (1, 1, 1, 1, 1),
    )
    assert set(pt.enumerate_partitions(8)) == set(oracle_partitions(8))
    with pytest.raises(ValidationError):
        pt.enumerate_partitions(pt.brute_cap() + 1)
    with pytest.raises(ValidationError):
        pt.enumerate_partitions(4, "weird")


def test_cap_override(monkeypatch):
    monkeypatch.setenv("NILORBITS_BRUTE_CAP", "6")
    assert pt.brute_cap() == 6
    with pytest.raises(ValidationError):
        pt.enumerate_partitions(7)
    monkeypatch.setenv("NILORBITS_BRUTE_CAP", "nonsense")
    with pytest.raises(ValidationError):
        pt.brute_cap()


def test_partition_grammar():
    assert pt.parse_partition("[3^2,1^4]") == (3, 3, 1, 1, 1, 1)
    assert pt.parse_partition(" [ 4 , 2 , 1 ] ") == (4, 2, 1)
    assert pt.parse_partition("[]") == ()
    assert pt.format_partition((3, 3, 1, 1, 1, 1)) == "[3,3,1,1,1,1]"
    assert pt.format_partition((3, 3, 1, 1, 1, 1), compact=True) == "[3^2,1^4]"
    for bad in ("3,2", "[3,,2]", "[a]", "[3^]"):
        with pytest.raises(ValidationError):
            pt.parse_partition(bad)


@given(partitions_st, st.booleans())
@settings(max_examples=100)
def test_grammar_round_trip(p, compact):
    assert pt.parse_partition(pt.format_partition(p, compact=compact)) == p
