"""The five decidable infinite orders: comparisons, windows, named sets,
bounded claims.  Closed-form oracles and naive searches cross-check the
memoized reachability implementations."""

import random
from collections import deque

import pytest

from fishbone.families import (
    FAMILIES,
    FamilyMismatch,
    UnknownClaim,
    UnknownName,
    WindowSpec,
    check_bounded_bicomparable,
    check_bounded_cofinally_above,
    claim_names,
    elem_comparable,
    elem_le,
    elem_lt,
    element_id,
    named_subset,
    parse_element,
    verify_claim,
    window,
    window_payloads,
)

# ------------------------------------------------------------ window specs


def test_window_spec_make():
    assert WindowSpec.make(n=3).bounds == (("n", 0, 3),)
    assert WindowSpec.make(z=4).bounds == (("z", -4, 4),)
    assert WindowSpec.make(x=(1, 5)).bounds == (("x", 1, 5),)
    assert WindowSpec.make(n=3).bound("n") == (0, 3)
    with pytest.raises(ValueError):
        WindowSpec.make(x=(5, 1))
    with pytest.raises(KeyError):
        WindowSpec.make(n=3).bound("z")


def test_window_spec_widened():
    spec = WindowSpec.make(z=2, n=3).widened(2)
    assert spec.bounds == (("z", -4, 4), ("n", 0, 5))
    assert WindowSpec.make(n=3).widened(1).to_dict() == {"n": [0, 4]}


# ------------------------------------------------------------- element ids


def test_element_ids_and_parsing():
    assert element_id("P5", (1, 2, 0)) == "(1,2,0)"
    assert element_id("P2", (-1, 0, 2)) == "(-1,0,2)"
    assert element_id("P1", "bot") == "bot"
    assert parse_element("P5", "(1,2,0)") == (1, 2, 0)
    assert parse_element("P1", "a") == "a"
    assert parse_element("P1", "(3,1)") == (3, 1)


def test_element_parsing_rejects_mismatches():
    with pytest.raises(FamilyMismatch):
        parse_element("P3", "(1,2,3)")
    with pytest.raises(FamilyMismatch):
        parse_element("P3", "x")
    with pytest.raises(FamilyMismatch):
        elem_le("P1", (0, 2), (1, 1))
    with pytest.raises(FamilyMismatch):
        elem_le("P5", (0, 0), (0, 0, 0))


# ------------------------------------------------------------ P1 relations


def test_p1_frozen_order():
    assert elem_le("P1", "bot", "top")
    assert elem_le("P1", "bot", (4, 0)) and elem_le("P1", (4, 0), "top")
    assert elem_le("P1", (2, 1), "a") and not elem_le("P1", (2, 0), "a")
    assert elem_le("P1", "a", "top") and not elem_le("P1", "a", (9, 1))
    assert elem_le("P1", (1, 0), (3, 0)) and not elem_le("P1", (3, 0), (1, 0))
    assert elem_le("P1", (1, 1), (3, 1))
    assert elem_le("P1", (0, 1), (1, 0))  # strictly smaller index crosses
    assert not elem_le("P1", (1, 1), (1, 0))
    assert not elem_le("P1", (0, 0), (5, 1))
    assert elem_lt("P1", "bot", "a") and not elem_lt("P1", "a", "a")
    assert elem_comparable("P1", (0, 1), (4, 0))
    assert not elem_comparable("P1", (4, 0), "a")


def test_p1_window_enumeration_and_named_chains():
    spec = WindowSpec.make(n=2)
    ids = [element_id("P1", p) for p in window_payloads("P1", spec)]
    assert ids == ["bot", "(0,0)", "(0,1)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "a", "top"]
    assert named_subset("P1", "C1", spec) == ["bot", "(0,0)", "(1,0)", "(2,0)", "top"]
    assert named_subset("P1", "C2", spec) == ["bot", "(0,1)", "(1,1)", "(2,1)", "a", "top"]


def test_p1_window_poset_has_global_bounds():
    P = window("P1", WindowSpec.make(n=1))
    assert len(P) == 7
    assert all(P.leq("bot", x) for x in P.elements)
    assert all(P.leq(x, "top") for x in P.elements)


# ------------------------------------------------------------ P2 relations


def p2_closed_form(p, q) -> bool:
    (z, i, n), (zz, j, nn) = p, q
    if i == j:
        return z < zz or (z == zz and n <= nn)
    if i == 0 and j == 1:
        return zz > z or (zz == z and nn >= n)
    return zz > z + 1 or (zz == z + 1 and nn >= n)


def test_p2_matches_closed_form_exhaustively():
    members = [
        (z, i, n) for z in range(-2, 3) for i in (0, 1) for n in range(4)
    ]
    for p in members:
        for q in members:
            assert elem_le("P2", p, q) == p2_closed_form(p, q), (p, q)


def test_p2_named_sets():
    spec = WindowSpec.make(z=1, n=1)
    assert named_subset("P2", "C0", spec) == [
        "(-1,0,0)", "(-1,0,1)", "(0,0,0)", "(0,0,1)", "(1,0,0)", "(1,0,1)"
    ]
    assert named_subset("P2", "D(1)", spec) == [
        "(-1,0,1)", "(-1,1,1)", "(0,0,1)", "(0,1,1)", "(1,0,1)", "(1,1,1)"
    ]


# ------------------------------------------------------------ P3 relations


def p3_naive_reach(p, q) -> bool:
    if p == q:
        return True
    x_cap, y_cap = q[0] + 3, q[1] + 3  # generous caps, independent pruning
    seen = {p}
    queue = deque([p])
    while queue:
        x, y = queue.popleft()
        for s in ((x, y + 1), (x + y + 1, y)):
            if s == q:
                return True
            if s not in seen and s[0] <= x_cap and s[1] <= y_cap:
                seen.add(s)
                queue.append(s)
    return False


def test_p3_same_row_closed_form():
    for y in range(6):
        for x in range(15):
            for xx in range(15):
                want = xx >= x and (xx - x) % (y + 1) == 0
                assert elem_le("P3", (x, y), (xx, y)) == want, (x, y, xx)


def test_p3_against_naive_search():
    rng = random.Random(3)
    for _ in range(400):
        p = (rng.randint(0, 10), rng.randint(0, 6))
        q = (rng.randint(0, 10), rng.randint(0, 6))
        assert elem_le("P3", p, q) == p3_naive_reach(p, q), (p, q)


def test_p3_origin_is_minimum_in_window():
    P = window("P3", WindowSpec.make(x=4, y=4))
    assert all(P.leq("(0,0)", e) for e in P.elements)


# ------------------------------------------------------------ P4 relations


def p4_closed_form(p, q) -> bool:
    (x, y, z), (u, v, w) = p, q
    if p == q:
        return True
    if v >= y + 2:
        return True
    if v < y or u > x:
        return False
    return u <= x - (y + 1) or (u <= x and w >= z)


def test_p4_matches_closed_form():
    rng = random.Random(4)
    for _ in range(800):
        p = tuple(rng.randint(0, 8) for _ in range(3))
        q = tuple(rng.randint(0, 8) for _ in range(3))
        assert elem_le("P4", p, q) == p4_closed_form(p, q), (p, q)


def test_p4_column_is_not_a_chain():
    # Two members of E(2) with incomparable z-coordinates at equal height.
    assert not elem_comparable("P4", (2, 0, 5), (2, 1, 0))


# ------------------------------------------------------------ P5 relations


def test_p5_frozen_rules():
    assert elem_le("P5", (9, 9, 4), (0, 0, 0))  # two levels down: always
    assert elem_le("P5", (1, 2, 3), (4, 2, 3)) and not elem_le("P5", (1, 2, 3), (0, 2, 3))
    assert elem_le("P5", (3, 5, 1), (2, 2, 0))  # sum rule: 8 <= 2*(2+2)
    assert elem_le("P5", (0, 9, 1), (1, 1, 0))  # min rule: 0+1 <= 1
    assert not elem_le("P5", (5, 5, 1), (2, 2, 0))
    assert not elem_le("P5", (0, 0, 0), (9, 9, 1))  # never down to a deeper level


def test_p5_named_sets():
    spec = WindowSpec.make(n=(0, 0), c=3)
    assert named_subset("P5", "K(0,2)", spec) == ["(0,2,0)", "(1,1,0)", "(2,0,0)"]
    spec2 = WindowSpec.make(n=(0, 1), c=1)
    assert named_subset("P5", "L(1)", spec2) == [
        "(0,0,1)", "(0,1,1)", "(1,0,1)", "(1,1,1)"
    ]


def test_window_sizes():
    assert len(window("P5", WindowSpec.make(n=(0, 1), c=3))) == 32
    assert len(window("P2", WindowSpec.make(z=1, n=1))) == 12
    assert len(window("P4", WindowSpec.make(x=1, y=1, z=1))) == 8


# ------------------------------------------------------------- named errors


def test_unknown_names():
    spec = WindowSpec.make(n=2)
    with pytest.raises(UnknownName):
        named_subset("P1", "C9", spec)
    with pytest.raises(UnknownName):
        named_subset("P5", "K(1)", WindowSpec.make(n=1, c=2))
    with pytest.raises(UnknownName):
        named_subset("P3", "C", WindowSpec.make(x=2, y=2))


# ------------------------------------------------------------------- claims


def test_claim_registry():
    assert claim_names("P1") == ["pigeonhole", "spine_partition"]
    with pytest.raises(UnknownClaim):
        verify_claim("P1", "no_such_claim", {})
    with pytest.raises(ValueError, match="needs parameters"):
        verify_claim("P1", "pigeonhole", {})


def test_p1_spine_partition_claim():
    rep = verify_claim("P1", "spine_partition", {"N": 5})
    assert rep.ok and rep.status == "pass"


def test_p1_pigeonhole_claim_exact_sets():
    rep = verify_claim("P1", "pigeonhole", {"m": 2})
    assert rep.ok
    assert rep.detail["demanders"] == ["(0,1)", "(1,1)", "(2,1)"]
    assert rep.detail["hosts"] == ["(0,0)", "(1,0)"]
    assert rep.detail["reserved_for_a"] == "(2,0)"
    assert rep.detail["demander_count"] == 3 and rep.detail["host_count"] == 2


def test_p2_claims():
    assert verify_claim("P2", "partitions", {"B": 4}).ok
    rep = verify_claim("P2", "shift_reduction", {"B": 6})
    assert rep.ok and rep.status == "verified-up-to-bound"


def test_p3_claims():
    rep = verify_claim("P3", "row_bound", {"y": 3, "B": 10})
    assert rep.ok
    rep = verify_claim("P3", "atomic_antichain", {"n": 0, "m": 1, "B": 4})
    assert rep.ok and rep.status == "verified-up-to-bound"
    rep = verify_claim("P3", "atomic_antichain", {"n": 2, "m": 2, "B": 4})
    assert not rep.ok


def test_p4_no_domination_claim():
    rep = verify_claim("P4", "no_domination", {"n": 1, "m": 2, "B": 4})
    assert rep.ok and rep.status == "verified-up-to-bound"


# -------------------------------------------------------- bounded cofinality


def test_cofinality_passes_for_interleaved_chains():
    rep = check_bounded_cofinally_above("P1", "C2", "C1", WindowSpec.make(n=4))
    assert rep.ok and rep.status == "verified-up-to-bound"
    rep = check_bounded_cofinally_above("P1", "C1", "C2", WindowSpec.make(n=4))
    assert rep.ok  # both contain the global extremes


def test_cofinality_fails_across_p3_columns():
    spec = WindowSpec.make(x=3, y=3)
    rep = check_bounded_cofinally_above("P3", "C(0)", "C(1)", spec)
    assert not rep.ok
    assert rep.witness == "(1,0)"


def test_cofinality_fails_upward_across_p5_levels():
    spec = WindowSpec.make(n=(0, 1), c=3)
    rep = check_bounded_cofinally_above("P5", "L(1)", "L(0)", spec)
    assert not rep.ok and rep.witness == "(0,0,0)"


def test_bicomparable_direction_detail():
    spec = WindowSpec.make(n=(0, 1), c=3)
    rep = check_bounded_bicomparable("P5", "L(0)", "L(1)", spec)
    assert not rep.ok
    assert rep.detail["direction"] == "L(1) over L(0)"
    rep = check_bounded_bicomparable("P2", "C0", "C1", WindowSpec.make(z=4, n=4))
    assert rep.ok


def test_all_families_listed():
    assert FAMILIES == ("P1", "P2", "P3", "P4", "P5")
