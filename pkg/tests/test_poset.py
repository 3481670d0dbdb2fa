"""Exact-arithmetic finite poset core: axioms, closure, intervals, JSON."""

import json

import numpy as np
import pytest
from hypothesis import given, strategies as st

from fishbone.poset import (
    CycleError,
    FinitePoset,
    NotAChain,
    UnknownElement,
    loads_poset,
    poset_from_json_dict,
)


def diamond() -> FinitePoset:
    return FinitePoset.from_generators(
        "abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")]
    )


def chain5() -> FinitePoset:
    return FinitePoset.from_generators("abcde", list(zip("abcd", "bcde")))


@st.composite
def posets(draw, max_size: int = 8) -> FinitePoset:
    n = draw(st.integers(min_value=1, max_value=max_size))
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
            max_size=3 * n,
        )
    )
    pairs = [(min(a, b), max(a, b)) for a, b in edges if a != b]
    return FinitePoset.from_generators(range(n), pairs)


# ----------------------------------------------------------- construction


def test_transitive_closure_of_generators():
    P = diamond()
    assert P.leq("a", "d")
    assert P.lt("a", "d")
    assert not P.leq("d", "a")
    assert P.incomparable("b", "c")
    assert P.leq("b", "b")


def test_declared_element_order_is_kept():
    P = diamond()
    assert P.elements == ("a", "b", "c", "d")
    assert P.index("c") == 2


def test_cycle_in_generators_is_rejected_with_shortest_cycle():
    with pytest.raises(CycleError) as exc:
        FinitePoset.from_generators(
            "abcd", [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]
        )
    assert set(exc.value.cycle) == {"a", "b", "c"}


def test_two_cycle_is_reported_minimally():
    with pytest.raises(CycleError) as exc:
        FinitePoset.from_generators(
            "abc", [("a", "b"), ("b", "a"), ("b", "c")]
        )
    assert set(exc.value.cycle) == {"a", "b"}


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        FinitePoset.from_generators("aab", [])


def test_generator_with_unknown_element_rejected():
    with pytest.raises(UnknownElement):
        FinitePoset.from_generators("ab", [("a", "z")])


def test_raw_matrix_axiom_validation():
    bad_reflexive = np.zeros((2, 2), dtype=bool)
    with pytest.raises(ValueError, match="not reflexive"):
        FinitePoset("ab", bad_reflexive)
    bad_antisym = np.ones((2, 2), dtype=bool)
    with pytest.raises(ValueError, match="not antisymmetric"):
        FinitePoset("ab", bad_antisym)
    bad_trans = np.eye(3, dtype=bool)
    bad_trans[0, 1] = bad_trans[1, 2] = True
    with pytest.raises(ValueError, match="not transitive"):
        FinitePoset("abc", bad_trans)


def test_matrix_is_frozen():
    P = diamond()
    with pytest.raises(ValueError):
        P._leq[0, 0] = False


def test_unknown_element_lookup():
    with pytest.raises(UnknownElement):
        diamond().leq("a", "z")


# ------------------------------------------------------------------ queries


def test_up_down_sets_are_strict():
    P = diamond()
    assert P.up_set("b") == {"d"}
    assert P.down_set("b") == {"a"}
    above, below, incomp = P.comparability("b")
    assert (above, below, incomp) == ({"d"}, {"a"}, {"c"})


def test_chain_and_antichain_predicates():
    P = diamond()
    assert P.is_chain(["a", "b", "d"])
    assert not P.is_chain(["b", "c"])
    assert P.is_antichain(["b", "c"])
    assert not P.is_antichain(["a", "d"])
    assert P.is_chain([]) and P.is_antichain([])


def test_chain_sorted_orders_by_the_poset():
    P = diamond()
    assert P.chain_sorted(["d", "a", "b"]) == ["a", "b", "d"]
    with pytest.raises(NotAChain) as exc:
        P.chain_sorted(["b", "c"])
    assert set(exc.value.pair) == {"b", "c"}


def test_covers_are_immediate_and_sorted():
    P = diamond()
    assert P.covers() == [("b", "a"), ("c", "a"), ("d", "b"), ("d", "c")]
    # (d, a) is a comparability but not a cover.
    assert ("d", "a") not in P.covers()


def test_induced_subposet():
    P = diamond()
    Q = P.induced(["a", "b", "d"])
    assert Q.elements == ("a", "b", "d")
    assert Q.leq("a", "d")
    assert len(Q) == 3


# ---------------------------------------------------------------- intervals


def test_open_and_closed_intervals():
    P = diamond()
    assert P.open_interval("a", "d") == {"b", "c"}
    assert P.closed_interval("a", "d") == {"a", "b", "c", "d"}
    assert P.open_interval("a", "b") == frozenset()
    C = chain5()
    assert C.open_interval("b", "e") == {"c", "d"}


def test_convex_hull():
    P = diamond()
    assert P.convex_hull(["a", "d"]) == {"a", "b", "c", "d"}
    assert P.convex_hull(["b", "c"]) == {"b", "c"}
    assert P.convex_hull([]) == frozenset()


def test_wide_interval_on_a_chain():
    C = chain5()
    assert C.wide_interval_pair("b", "d") == {"b", "c", "d"}
    assert C.wide_interval(["b", "d"]) == {"b", "c", "d"}


def test_wide_interval_of_empty_set_is_everything():
    P = diamond()
    assert P.wide_interval([]) == set(P.elements)


def test_wide_interval_pair_on_incomparable_pair():
    P = diamond()
    # z must lie strictly below everything above c (only d) and strictly
    # above everything below b (only a).
    assert P.wide_interval_pair("b", "c") == {"b", "c"}


def test_interval_dispatch():
    P = diamond()
    assert P.interval("open", "a", "d") == {"b", "c"}
    assert P.interval("closed", "a", "d") == P.closed_interval("a", "d")
    assert P.interval("convex", ["b", "c"]) == {"b", "c"}
    assert P.interval("wide", "b", "c") == {"b", "c"}
    assert P.interval("wide", ["b", "c"]) == P.wide_interval(["b", "c"])
    with pytest.raises(ValueError):
        P.interval("halfopen", "a", "d")


def test_contiguous_chain():
    C = chain5()
    assert C.is_contiguous_chain(["a", "b", "c"])
    assert not C.is_contiguous_chain(["a", "c"])  # b fits inside
    assert not C.is_contiguous_chain(["b", "d"])
    P = diamond()
    # c is not comparable to b, so it cannot be inserted into a..b..d.
    assert P.is_contiguous_chain(["a", "b", "d"])


# --------------------------------------------------------------------- JSON


def test_json_round_trip_through_covers():
    P = diamond()
    data = P.to_json_dict()
    assert data["elements"] == ["a", "b", "c", "d"]
    assert ["a", "b"] in data["le"] and ["a", "d"] not in data["le"]
    Q = poset_from_json_dict(data)
    assert Q == P


def test_dumps_loads_round_trip():
    P = diamond()
    assert loads_poset(P.dumps()) == P
    assert json.loads(P.dumps()) == P.to_json_dict()


def test_json_input_lists_generators_not_covers():
    # Redundant generator pairs are fine on input; output is covers only.
    Q = loads_poset(
        '{"elements": ["a","b","c"], "le": [["a","b"],["b","c"],["a","c"]]}'
    )
    assert Q.to_json_dict()["le"] == [["a", "b"], ["b", "c"]]


def test_malformed_json_dict():
    with pytest.raises(ValueError):
        poset_from_json_dict({"elements": ["a"]})
    with pytest.raises(ValueError):
        poset_from_json_dict({"elements": ["a"], "le": [["a", "a", "a"]]})


# ------------------------------------------------------------ random posets


@given(posets())
def test_random_posets_satisfy_axioms(P):
    m = P._leq
    n = len(P)
    assert m.diagonal().all()
    assert not (m & m.T & ~np.eye(n, dtype=bool)).any()
    closed = (m @ m) | m
    assert (closed == m).all()


@given(posets())
def test_covers_regenerate_the_order(P):
    Q = poset_from_json_dict(P.to_json_dict())
    assert Q == P
    assert Q.elements == P.elements


@given(posets())
def test_up_down_sets_match_matrix(P):
    for x in P.elements:
        for y in P.elements:
            assert (y in P.up_set(x)) == P.lt(x, y)
            assert (y in P.down_set(x)) == P.lt(y, x)


@given(posets())
def test_wide_interval_contains_its_defining_pair(P):
    els = P.elements
    x, y = els[0], els[-1]
    if P.leq(x, y):
        wide = P.wide_interval_pair(x, y)
        assert x in wide and y in wide
        assert P.closed_interval(x, y) <= wide
