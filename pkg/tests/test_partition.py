"""Spine certificates, the two min-max partitions, and the greedy drivers."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from fishbone.partition import (
    NoEligiblePoint,
    SpineCertificate,
    ThresholdTooSmall,
    check_spine,
    extend_spine_partition,
    find_spine,
    greedy_antichain_from_chains,
    height,
    height_and_max_chain,
    is_spine,
    is_strongly_maximal,
    loads_certificate,
    mirsky_partition,
    smc_gap_witness,
    strong_thick_check,
    thick_degree,
    width,
    width_and_dilworth,
)
from fishbone.poset import FinitePoset, NotAChain
from fishbone.random_posets import random_poset


def diamond() -> FinitePoset:
    return FinitePoset.from_generators(
        "abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    )


def grid(k: int = 3) -> FinitePoset:
    els = [(i, j) for i in range(k) for j in range(k)]
    pairs = [((i, j), (i, j + 1)) for i in range(k) for j in range(k - 1)]
    pairs += [((i, j), (i + 1, j)) for i in range(k - 1) for j in range(k)]
    return FinitePoset.from_generators(els, pairs)


@st.composite
def posets(draw, max_size: int = 8) -> FinitePoset:
    seed = draw(st.integers(0, 2**32 - 1))
    return random_poset(random.Random(seed), max_size=max_size)


# ------------------------------------------------------- height and chains


def test_diamond_height_and_chain():
    h, chain = height_and_max_chain(diamond())
    assert h == 3
    assert chain == ["a", "b", "d"]  # lexicographically least maximum chain


def test_grid_height_and_chain():
    P = grid()
    h, chain = height_and_max_chain(P)
    assert h == 5
    assert chain == [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2)]


def test_empty_and_singleton():
    E = FinitePoset.from_generators([], [])
    assert height_and_max_chain(E) == (0, [])
    S = FinitePoset.from_generators(["x"], [])
    assert height_and_max_chain(S) == (1, ["x"])
    assert width(S) == 1


def test_mirsky_levels_of_grid_are_antidiagonals():
    P = grid()
    parts = mirsky_partition(P)
    assert len(parts) == 5
    for k, part in enumerate(parts):
        assert sorted(part) == sorted((i, j) for i, j in P.elements if i + j == k)


def test_antichain_height():
    A = FinitePoset.from_generators("xyz", [])
    assert height(A) == 1
    assert mirsky_partition(A) == [["x", "y", "z"]]


# ---------------------------------------------------------- width / Dilworth


def test_diamond_width():
    w, chains, anti = width_and_dilworth(diamond())
    assert w == 2
    assert sorted(anti) == ["b", "c"]
    assert sorted(len(c) for c in chains) == [1, 3]
    assert sorted(x for c in chains for x in c) == list("abcd")


def test_grid_width():
    P = grid()
    w, chains, anti = width_and_dilworth(P)
    assert w == 3
    assert len(anti) == 3 and P.is_antichain(anti)
    assert len(chains) == 3
    for c in chains:
        assert P.is_chain(c)
    assert sorted(x for c in chains for x in c) == sorted(P.elements)


def test_chain_poset_width_one():
    C = FinitePoset.from_generators("abc", [("a", "b"), ("b", "c")])
    w, chains, anti = width_and_dilworth(C)
    assert w == 1
    assert chains == [["a", "b", "c"]]
    assert anti in (["a"], ["b"], ["c"])


# ------------------------------------------------------- spine certificates


def test_find_spine_on_diamond():
    P = diamond()
    cert = find_spine(P)
    assert cert.chain == ("a", "b", "d")
    assert cert.antichains == (("a",), ("b", "c"), ("d",))
    assert is_spine(P, cert)


def test_spine_part_count_is_height():
    P = grid()
    cert = find_spine(P)
    assert len(cert.antichains) == height(P)
    assert is_spine(P, cert)


def test_check_spine_failure_reasons():
    P = diamond()

    def reason(cert):
        rep = check_spine(P, cert)
        assert not rep.ok
        return rep.detail["reason"]

    good = find_spine(P)
    assert check_spine(P, good).ok

    assert (
        reason(SpineCertificate(("a", "z"), good.antichains))
        == "chain element not in poset"
    )
    assert (
        reason(SpineCertificate(good.chain, (("a",), ("b", "z"), ("d",))))
        == "antichain element not in poset"
    )
    assert (
        reason(SpineCertificate(("b", "a", "d"), good.antichains))
        == "chain not strictly increasing"
    )
    assert (
        reason(SpineCertificate(("a", "d"), (("a",), ("b", "d"), ("c",))))
        == "part is not an antichain"
    )
    assert (
        reason(SpineCertificate(good.chain, (("a",), ("b", "c"), ("d",), ("c",))))
        == "element in two parts"
    )
    assert (
        reason(SpineCertificate(good.chain, (("a",), ("b",), ("d",))))
        == "element in no part"
    )
    assert (
        reason(SpineCertificate(("a", "d"), (("a",), ("b", "c"), ("d",))))
        == "part must meet the chain exactly once"
    )


def test_certificate_json_round_trip():
    cert = find_spine(diamond())
    again = loads_certificate(cert.dumps())
    assert tuple(again.chain) == cert.chain
    assert tuple(tuple(p) for p in again.antichains) == cert.antichains


# ------------------------------------------------- strongly maximal chains


def test_strongly_maximal_iff_maximum():
    P = grid()
    h, chain = height_and_max_chain(P)
    assert is_strongly_maximal(P, chain)
    assert not is_strongly_maximal(P, [(0, 0), (0, 1)])


def test_strongly_maximal_rejects_non_chain():
    with pytest.raises(NotAChain):
        is_strongly_maximal(diamond(), ["b", "c"])


def test_gap_witness_inserts_into_a_gap():
    P = FinitePoset.from_generators("abd", [("a", "b"), ("b", "d")])
    assert smc_gap_witness(P, ["a", "d"]) == ([], ["b"])
    assert smc_gap_witness(P, ["a", "b", "d"]) is None


def test_gap_witness_swaps_out_a_blocker():
    P = FinitePoset.from_generators(
        "abcdx",
        [("a", "b"), ("b", "c"), ("c", "d"), ("a", "x"), ("x", "d")],
    )
    # [a, x, d] is maximal but trades x for the longer interior chain [b, c].
    assert smc_gap_witness(P, ["a", "x", "d"]) == (["x"], ["b", "c"])
    assert smc_gap_witness(P, ["a", "b", "c", "d"]) is None


# ----------------------------------------------------- thickness + extension


def test_thick_degree_on_diamond():
    P = diamond()
    assert thick_degree(P, {"a", "b", "d"}, "c") == 1
    rep = strong_thick_check(P, {"a", "b", "d"}, 1)
    assert rep.ok and rep.detail["min_degree"] == 1
    rep = strong_thick_check(P, {"a", "b", "d"}, 2)
    assert not rep.ok and rep.witness == "c" and rep.detail["degree"] == 1


def test_extend_spine_partition_absorbs_outsider():
    P = diamond()
    F = {"a", "b", "d"}
    cert = SpineCertificate(("a", "b", "d"), (("a",), ("b",), ("d",)))
    ext = extend_spine_partition(P, F, cert, tau=1)
    assert ext.chain == ("a", "b", "d")
    assert ext.antichains == (("a",), ("b", "c"), ("d",))
    assert is_spine(P, ext)


def test_extend_rejects_small_threshold():
    P = diamond()
    cert = SpineCertificate(("a", "b", "d"), (("a",), ("b",), ("d",)))
    with pytest.raises(ThresholdTooSmall):
        extend_spine_partition(P, {"a", "b", "d"}, cert, tau=2)


def test_extend_rejects_invalid_certificate():
    P = diamond()
    bad = SpineCertificate(("a", "d"), (("a", "b"), ("d",)))
    with pytest.raises(ValueError, match="invalid certificate"):
        extend_spine_partition(P, {"a", "b", "d"}, bad, tau=1)


def test_extend_places_outsiders_in_distinct_parts():
    P = FinitePoset.from_generators(
        ["u", "v", "c", "d"], [("u", "v")]
    )
    cert = SpineCertificate(("u", "v"), (("u",), ("v",)))
    ext = extend_spine_partition(P, {"u", "v"}, cert, tau=2)
    assert ext.antichains == (("u", "c"), ("v", "d"))
    assert is_spine(P, ext)


def test_extend_fails_when_parts_run_out():
    # Both outsiders can only use the single part, which is absorbed once.
    P = FinitePoset.from_generators(["u", "v", "c", "d"], [])
    cert = SpineCertificate(("u",), (("u", "v"),))
    with pytest.raises(ThresholdTooSmall):
        extend_spine_partition(P, {"u", "v"}, cert, tau=2)


# ------------------------------------------------------------ greedy picking


def ladder(k: int, ymax: int = 3):
    els = [(i, y) for i in range(k) for y in range(ymax + 1)]
    pairs = [((i, y), (i, y + 1)) for i in range(k) for y in range(ymax)]
    pairs += [((i + 1, y), (i, y + 1)) for i in range(k - 1) for y in range(ymax)]
    P = FinitePoset.from_generators(els, pairs)
    chains = [[(i, y) for y in range(ymax + 1)] for i in range(k)]
    return P, chains


def test_greedy_on_ladder_picks_column_bottoms():
    P, chains = ladder(4)
    assert greedy_antichain_from_chains(P, chains) == [(i, 0) for i in range(4)]


def test_greedy_moves_up_when_bottom_is_blocked():
    P = FinitePoset.from_generators(
        ["a", "b1", "b2"], [("b1", "a"), ("b1", "b2")]
    )
    assert greedy_antichain_from_chains(P, [["a"], ["b1", "b2"]]) == ["a", "b2"]


def test_greedy_raises_when_no_segment_is_free():
    P = FinitePoset.from_generators("ab", [("a", "b")])
    with pytest.raises(NoEligiblePoint):
        greedy_antichain_from_chains(P, [["a"], ["b"]])


def test_greedy_raises_on_repeated_element():
    P = FinitePoset.from_generators("a", [])
    with pytest.raises(NoEligiblePoint):
        greedy_antichain_from_chains(P, [["a"], ["a"]])


# ------------------------------------------------------------- random posets


def test_random_poset_is_seed_deterministic():
    a = random_poset(random.Random(99), max_size=9)
    b = random_poset(random.Random(99), max_size=9)
    assert a == b and a.elements == b.elements
    assert 1 <= len(a) <= 9


def test_random_posets_vary_with_the_seed():
    seen = {random_poset(random.Random(s)).dumps() for s in range(20)}
    assert len(seen) > 1


@given(posets())
@settings(max_examples=60)
def test_spines_validate_on_random_posets(P):
    cert = find_spine(P)
    assert is_spine(P, cert)
    assert len(cert.antichains) == height(P)


@given(posets())
@settings(max_examples=60)
def test_minmax_inequalities(P):
    n = len(P)
    h, chain = height_and_max_chain(P)
    w, chains, anti = width_and_dilworth(P)
    assert h * w >= n
    assert len(chain) == h and P.is_chain(chain)
    assert len(anti) == w and P.is_antichain(anti)
    assert sorted(map(P.index, (x for c in chains for x in c))) == list(range(n))
    assert len(chains) == w


@given(posets())
@settings(max_examples=60)
def test_gap_witness_trades_are_improving(P):
    h, chain = height_and_max_chain(P)
    # A maximal-but-possibly-short chain: greedily extend from some element.
    for start in P.elements[:2]:
        c = [start]
        for x in P.elements:
            if all(P.comparable(x, y) for y in c) and x not in c:
                c.append(x)
        c = P.chain_sorted(c)
        out = smc_gap_witness(P, c)
        if out is None:
            assert len(c) == h
            continue
        E, D = out
        members = P.chain_sorted(c)
        assert P.is_chain(D) and len(D) > len(E)
        traded = [x for x in members if x not in E] + D
        assert P.is_chain(traded)
        assert len(set(traded)) == len(members) - len(E) + len(D)
