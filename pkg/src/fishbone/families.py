"""Five infinite posets with decidable comparison, windowed to finite posets.

Each family is a poset on a countable ground set of coordinate tuples:

* ``P1``: {bot, top, a} plus pairs (n, i) with n a natural and i in {0,1}.
  bot/top are global extremes; each row i climbs (n,i) <= (n+1,i); row 1
  feeds row 0 one step later ((n,1) <= (n+1,0)) and every (n,1) sits below
  the extra element a.
* ``P2``: triples (z, i, n) with z an integer, i in {0,1}, n a natural.
  Generators: (z,i,n) <= (z,i,n+1); (z,i,n) <= (z+1,i,0); and
  (z,0,n) <= (z,1,n) <= (z+1,0,n).
* ``P3``: pairs (x, y) of naturals with (x,y) <= (x,y+1) and
  (x,y) <= (x+y+1,y).
* ``P4``: triples (x, y, z) of naturals with (x,y,z) <= (x,y,z+1);
  (x,y,z) <= (x,y+1,z); (x,y,z) <= (x',y+2,z') for all x',z';
  (x+1,y,z) <= (x,y,z); and (x+y+1,y,z') <= (x,y,z) for all z,z'.
* ``P5``: triples (x, y, n) of naturals, levels indexed by n with LOWER
  levels having HIGHER n: (x,y,n) <= (u,v,m) iff n >= m+2, or n == m with
  x <= u and y <= v, or n == m+1 with min(x,y)+1 <= min(u,v) or
  x+y <= 2(u+v).

P1 and P5 use the closed-form clauses above directly.  P2, P3 and P4 are
given by generators only, so comparison is memoized reachability over the
generator moves; each search is bounded by a monotone ranking (documented at
the search), which also makes the answers independent of any window.

Windows name their elements by compact strings ("bot", "(0,1)",
"(-1,0,2)", ...) so window posets serialize cleanly.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cache

import numpy as np

from .poset import FinitePoset, PosetError
from .report import FAIL, PASS, UP_TO_BOUND, VerificationReport


class FamilyMismatch(PosetError):
    def __init__(self, family: str, payload):
        super().__init__(f"element {payload!r} does not belong to family {family}")
        self.family = family
        self.payload = payload


class UnknownName(PosetError):
    def __init__(self, family: str, name: str):
        super().__init__(f"family {family} has no named subset {name!r}")
        self.name = name


class UnknownClaim(PosetError):
    def __init__(self, family: str, claim: str):
        super().__init__(f"family {family} has no registered claim {claim!r}")
        self.claim = claim


FAMILIES = ("P1", "P2", "P3", "P4", "P5")

# Window axes per family.  "n" for P1 bounds the pair index; "z" for P2 is
# an integer axis windowed symmetrically; "c" for P5 bounds both x and y.
FAMILY_AXES = {
    "P1": ("n",),
    "P2": ("z", "n"),
    "P3": ("x", "y"),
    "P4": ("x", "y", "z"),
    "P5": ("n", "c"),
}


@dataclass(frozen=True)
class WindowSpec:
    """Inclusive per-axis bounds, e.g. ``WindowSpec((("n", 0, 3),))``."""

    bounds: tuple

    @classmethod
    def make(cls, **axes) -> "WindowSpec":
        """``WindowSpec.make(n=3)`` is 0..3; ``make(z=4)`` is -4..4;
        ``make(x=(1, 5))`` is 1..5."""
        out = []
        for axis, value in axes.items():
            if isinstance(value, tuple):
                lo, hi = value
            elif axis == "z":
                lo, hi = -value, value
            else:
                lo, hi = 0, value
            if lo > hi:
                raise ValueError(f"empty range for axis {axis!r}")
            out.append((axis, int(lo), int(hi)))
        return cls(tuple(out))

    def bound(self, axis: str) -> tuple[int, int]:
        for name, lo, hi in self.bounds:
            if name == axis:
                return lo, hi
        raise KeyError(f"axis {axis!r} not in window spec")

    def widened(self, slack: int) -> "WindowSpec":
        """Grow every axis upward by ``slack`` (and downward too for the
        integer axis ``z``)."""
        out = []
        for name, lo, hi in self.bounds:
            if name == "z":
                out.append((name, lo - slack, hi + slack))
            else:
                out.append((name, lo, hi + slack))
        return WindowSpec(tuple(out))

    def to_dict(self) -> dict:
        return {name: [lo, hi] for name, lo, hi in self.bounds}


# ------------------------------------------------------------- element names


def element_id(family: str, payload) -> str:
    if family == "P1" and isinstance(payload, str):
        return payload
    return "(" + ",".join(str(c) for c in payload) + ")"


_TUPLE_ID = re.compile(r"\((-?\d+)(?:,(-?\d+))*\)")


def parse_element(family: str, text: str):
    if family == "P1" and text in ("bot", "top", "a"):
        return text
    if not (text.startswith("(") and text.endswith(")")):
        raise FamilyMismatch(family, text)
    try:
        coords = tuple(int(c) for c in text[1:-1].split(","))
    except ValueError:
        raise FamilyMismatch(family, text) from None
    _check_payload(family, coords)
    return coords


def _check_payload(family: str, payload) -> None:
    if family == "P1":
        if payload in ("bot", "top", "a"):
            return
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 2
            and payload[0] >= 0
            and payload[1] in (0, 1)
        )
    elif family == "P2":
        ok = (
            isinstance(payload, tuple)
            and len(payload) == 3
            and payload[1] in (0, 1)
            and payload[2] >= 0
        )
    elif family == "P3":
        ok = isinstance(payload, tuple) and len(payload) == 2 and min(payload) >= 0
    elif family in ("P4", "P5"):
        ok = isinstance(payload, tuple) and len(payload) == 3 and min(payload) >= 0
    else:
        raise ValueError(f"unknown family {family!r}")
    if not ok:
        raise FamilyMismatch(family, payload)


# ------------------------------------------------------------ comparability


def _le_p1(p, q) -> bool:
    if p == q:
        return True
    if p == "bot" or q == "top":
        return True
    if q == "bot" or p == "top":
        return False
    if p == "a":
        return False
    if q == "a":
        return p[1] == 1
    (n, i), (m, j) = p, q
    if i == j:
        return n <= m
    if i == 1 and j == 0:
        return n < m
    return False


def _le_p5(p, q) -> bool:
    (x, y, n), (u, v, m) = p, q
    if n >= m + 2:
        return True
    if n == m:
        return x <= u and y <= v
    if n == m + 1:
        return min(x, y) + 1 <= min(u, v) or x + y <= 2 * (u + v)
    return False


@cache
def _reach_p2(p, z_cap: int, n_cap: int) -> frozenset:
    """States reachable upward from p in P2 with z <= z_cap and n <= n_cap.

    Sound bounds: z never decreases under any generator, so states past the
    target column are dead ends; n resets to 0 on column moves and is
    preserved by the i-switches, so a value above max(n_p, n_q) can never
    be needed to reach q.
    """
    seen = {p}
    queue = deque([p])
    while queue:
        z, i, n = queue.popleft()
        nxt = []
        if n + 1 <= n_cap:
            nxt.append((z, i, n + 1))
        if z + 1 <= z_cap:
            nxt.append((z + 1, i, 0))
        if i == 0:
            nxt.append((z, 1, n))
        elif z + 1 <= z_cap:
            nxt.append((z + 1, 0, n))
        for s in nxt:
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return frozenset(seen)


def _le_p2(p, q) -> bool:
    if p == q:
        return True
    if p[0] > q[0]:
        return False
    return q in _reach_p2(p, q[0], max(p[2], q[2]))


@cache
def _reach_p3(p, x_cap: int, y_cap: int) -> frozenset:
    """States reachable upward from p in P3 with x <= x_cap, y <= y_cap.

    Both generators are monotone in both coordinates, so exceeding either
    target coordinate is a dead end.
    """
    seen = {p}
    queue = deque([p])
    while queue:
        x, y = queue.popleft()
        nxt = []
        if y + 1 <= y_cap:
            nxt.append((x, y + 1))
        if x + y + 1 <= x_cap:
            nxt.append((x + y + 1, y))
        for s in nxt:
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return frozenset(seen)


def _le_p3(p, q) -> bool:
    if p == q:
        return True
    if p[0] > q[0] or p[1] > q[1]:
        return False
    return q in _reach_p3(p, q[0], q[1])


@cache
def _reach_p4(p, x_floor: int, y_cap: int, z_cap: int) -> frozenset:
    """States reachable upward from p in P4 within x >= x_floor, y <= y_cap,
    z <= z_cap, using only the small moves and the big drop.

    The two-level jump is handled before this search (see :func:`_le_p4`),
    so here y only steps up to y_cap <= y+1.  x never increases under the
    remaining moves, so x < x_floor is a dead end; z climbs one at a time
    or is chosen freely by the big drop, so values above max(z_p, z_q)
    are never needed.
    """
    seen = {p}
    queue = deque([p])
    while queue:
        x, y, z = queue.popleft()
        nxt = []
        if z + 1 <= z_cap:
            nxt.append((x, y, z + 1))
        if y + 1 <= y_cap:
            nxt.append((x, y + 1, z))
        if x - 1 >= x_floor:
            nxt.append((x - 1, y, z))
        if x - (y + 1) >= x_floor:
            nxt.extend((x - (y + 1), y, c) for c in range(z_cap + 1))
        for s in nxt:
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return frozenset(seen)


def _le_p4(p, q) -> bool:
    if p == q:
        return True
    (x, y, z), (u, v, w) = p, q
    if v >= y + 2:
        # Jump two levels up to any (x', y+2, z'), then climb y; both sound
        # and complete since no other generator raises y past y+1 without
        # passing through a y+2 jump.
        return True
    if v < y or u > x:
        return False
    return q in _reach_p4(p, u, v, max(z, w))


_LE = {"P1": _le_p1, "P2": _le_p2, "P3": _le_p3, "P4": _le_p4, "P5": _le_p5}


def elem_le(family: str, p, q) -> bool:
    """Decide p <= q in the named family; raises FamilyMismatch."""
    if family not in _LE:
        raise ValueError(f"unknown family {family!r}")
    _check_payload(family, p)
    _check_payload(family, q)
    return _LE[family](p, q)


def elem_lt(family: str, p, q) -> bool:
    return p != q and elem_le(family, p, q)


def elem_comparable(family: str, p, q) -> bool:
    return elem_le(family, p, q) or elem_le(family, q, p)


# ------------------------------------------------------------------ windows


def window_payloads(family: str, spec: WindowSpec) -> list:
    """All family elements inside the window, in a fixed enumeration order."""
    if family == "P1":
        lo, hi = spec.bound("n")
        out: list = ["bot"]
        out += [(n, i) for n in range(max(lo, 0), hi + 1) for i in (0, 1)]
        out += ["a", "top"]
        return out
    if family == "P2":
        zlo, zhi = spec.bound("z")
        nlo, nhi = spec.bound("n")
        return [
            (z, i, n)
            for z in range(zlo, zhi + 1)
            for i in (0, 1)
            for n in range(max(nlo, 0), nhi + 1)
        ]
    if family == "P3":
        xlo, xhi = spec.bound("x")
        ylo, yhi = spec.bound("y")
        return [
            (x, y)
            for x in range(max(xlo, 0), xhi + 1)
            for y in range(max(ylo, 0), yhi + 1)
        ]
    if family == "P4":
        xlo, xhi = spec.bound("x")
        ylo, yhi = spec.bound("y")
        zlo, zhi = spec.bound("z")
        return [
            (x, y, z)
            for x in range(max(xlo, 0), xhi + 1)
            for y in range(max(ylo, 0), yhi + 1)
            for z in range(max(zlo, 0), zhi + 1)
        ]
    if family == "P5":
        nlo, nhi = spec.bound("n")
        clo, chi = spec.bound("c")
        return [
            (x, y, n)
            for n in range(max(nlo, 0), nhi + 1)
            for x in range(max(clo, 0), chi + 1)
            for y in range(max(clo, 0), chi + 1)
        ]
    raise ValueError(f"unknown family {family!r}")


def window(family: str, spec: WindowSpec) -> FinitePoset:
    """The induced finite poset on the window, with string element names.

    Construction always runs the partial-order axiom checks, which guards
    every comparison routine against a misread generator.
    """
    payloads = window_payloads(family, spec)
    n = len(payloads)
    le = _LE[family]
    m = np.zeros((n, n), dtype=bool)
    for i, p in enumerate(payloads):
        for j, q in enumerate(payloads):
            m[i, j] = le(p, q)
    return FinitePoset([element_id(family, p) for p in payloads], m, validate=True)


# -------------------------------------------------------------- named sets


_NAME = re.compile(r"^([A-Z]+[0-9]*)(?:\(\s*(-?\d+)(?:\s*,\s*(-?\d+))?\s*\))?$")


def _named_predicate(family: str, name: str):
    """Membership test for a named chain/antichain, or UnknownName."""
    m = _NAME.match(name.strip())
    if not m:
        raise UnknownName(family, name)
    base, a, b = m.group(1), m.group(2), m.group(3)
    a = int(a) if a is not None else None
    b = int(b) if b is not None else None

    if family == "P1" and base == "C1" and a is None:
        return lambda p: p in ("bot", "top") or (isinstance(p, tuple) and p[1] == 0)
    if family == "P1" and base == "C2" and a is None:
        return lambda p: p in ("bot", "top", "a") or (isinstance(p, tuple) and p[1] == 1)
    if family == "P2" and base in ("C0", "C1") and a is None:
        i = int(base[1])
        return lambda p: p[1] == i
    if family == "P2" and base == "D" and a is not None and b is None:
        return lambda p: p[2] == a
    if family == "P3" and base == "C" and a is not None and b is None:
        return lambda p: p[0] == a
    if family == "P4" and base == "E" and a is not None and b is None:
        return lambda p: p[0] == a
    if family == "P5" and base == "L" and a is not None and b is None:
        return lambda p: p[2] == a
    if family == "P5" and base == "K" and a is not None and b is not None:
        return lambda p: p[2] == a and p[0] + p[1] == b
    raise UnknownName(family, name)


def named_subset_payloads(family: str, name: str, spec: WindowSpec) -> list:
    pred = _named_predicate(family, name)
    return [p for p in window_payloads(family, spec) if pred(p)]


def named_subset(family: str, name: str, spec: WindowSpec) -> list[str]:
    """The named set intersected with the window, as element names."""
    return [element_id(family, p) for p in named_subset_payloads(family, name, spec)]


# The only element that is a maximum of its whole (infinite) family; it is
# exempt from "something strictly above" requirements in cofinality checks,
# since chains through it are trivially cofinal in each other there.
_GLOBAL_MAX = {"P1": "top"}


def check_bounded_cofinally_above(
    family: str, upper: str, lower: str, bound: WindowSpec, slack: int = 2
) -> VerificationReport:
    """Bounded check that ``upper`` reaches above every point of ``lower``.

    For each y of the lower set inside ``bound``, searches the upper set in
    the window widened by ``slack`` for an x strictly above y.  A pass is
    reported as verified-up-to-bound: it is evidence about the infinite
    sets, not a proof.
    """
    params = {
        "family": family,
        "upper": upper,
        "lower": lower,
        "bound": bound.to_dict(),
        "slack": slack,
    }
    lower_elems = named_subset_payloads(family, lower, bound)
    upper_elems = named_subset_payloads(family, upper, bound.widened(slack))
    checked = 0
    for y in lower_elems:
        if _GLOBAL_MAX.get(family) == y:
            continue
        checked += 1
        if not any(elem_lt(family, y, x) for x in upper_elems):
            return VerificationReport(
                claim="cofinally-above",
                params=params,
                status=FAIL,
                witness=element_id(family, y),
                detail={"reason": "no element of the upper set lies strictly above"},
            )
    return VerificationReport(
        claim="cofinally-above",
        params=params,
        status=UP_TO_BOUND,
        detail={"lower_checked": checked, "upper_candidates": len(upper_elems)},
    )


def check_bounded_bicomparable(
    family: str, first: str, second: str, bound: WindowSpec, slack: int = 2
) -> VerificationReport:
    """Both directions of :func:`check_bounded_cofinally_above`."""
    params = {
        "family": family,
        "first": first,
        "second": second,
        "bound": bound.to_dict(),
        "slack": slack,
    }
    up = check_bounded_cofinally_above(family, first, second, bound, slack)
    if not up.ok:
        return VerificationReport(
            claim="bicomparable",
            params=params,
            status=FAIL,
            witness=up.witness,
            detail={"direction": f"{first} over {second}"},
        )
    down = check_bounded_cofinally_above(family, second, first, bound, slack)
    if not down.ok:
        return VerificationReport(
            claim="bicomparable",
            params=params,
            status=FAIL,
            witness=down.witness,
            detail={"direction": f"{second} over {first}"},
        )
    return VerificationReport(claim="bicomparable", params=params, status=UP_TO_BOUND)


# ------------------------------------------------------------------- claims


def _claim_p1_spine_partition(N: int) -> VerificationReport:
    """The window certificate with chain C2 and the pair antichains.

    Parts: {bot}, {(n,0),(n,1)} for each n <= N, {a}, {top}; chain
    bot < (0,1) < ... < (N,1) < a < top.  Fully validated as a spine
    certificate of the window poset.
    """
    from .partition import SpineCertificate, check_spine

    spec = WindowSpec.make(n=N)
    P = window("P1", spec)
    chain = ["bot"] + [element_id("P1", (n, 1)) for n in range(N + 1)] + ["a", "top"]
    parts: list[tuple] = [("bot",)]
    parts += [
        (element_id("P1", (n, 0)), element_id("P1", (n, 1))) for n in range(N + 1)
    ]
    parts += [("a",), ("top",)]
    cert = SpineCertificate(chain=tuple(chain), antichains=tuple(parts))
    rep = check_spine(P, cert)
    status = PASS if rep.ok else FAIL
    return VerificationReport(
        claim="P1.spine_partition",
        params={"N": N},
        status=status,
        witness=None if rep.ok else rep.witness,
        detail={"chain_size": len(chain), "parts": len(parts)},
    )


def _claim_p1_pigeonhole(m: int) -> VerificationReport:
    """Counting obstruction: no antichain partition pairs every point off
    the chain C1 with its own C1 element.

    The element a must share a part with some (k,0); under the matching
    hypothesis take k = m.  The m+1 points (0,1)..(m,1) are each
    incomparable only to the C1 elements {(k,0): k <= n} (computed
    exhaustively), so with (m,0) spoken for they compete for m hosts.
    """
    spec = WindowSpec.make(n=m)
    demanders = [(n, 1) for n in range(m + 1)]
    c1 = named_subset_payloads("P1", "C1", spec)
    eligible: set = set()
    for d in demanders:
        for h in c1:
            if not elem_comparable("P1", d, h):
                eligible.add(h)
    reserved = (m, 0)
    hosts = sorted(eligible - {reserved})
    ok = len(hosts) < len(demanders)
    return VerificationReport(
        claim="P1.pigeonhole",
        params={"m": m},
        status=PASS if ok else FAIL,
        witness=None if ok else [element_id("P1", h) for h in hosts],
        detail={
            "demanders": [element_id("P1", d) for d in demanders],
            "hosts": [element_id("P1", h) for h in hosts],
            "demander_count": len(demanders),
            "host_count": len(hosts),
            "reserved_for_a": element_id("P1", reserved),
        },
    )


def _claim_p2_partitions(B: int) -> VerificationReport:
    """Both named families cover the window exactly once."""
    spec = WindowSpec.make(z=B, n=B)
    everything = window_payloads("P2", spec)
    families = {
        "C0/C1": [named_subset_payloads("P2", c, spec) for c in ("C0", "C1")],
        "D(n)": [named_subset_payloads("P2", f"D({n})", spec) for n in range(B + 1)],
    }
    detail = {}
    for label, sets in families.items():
        combined: list = [p for s in sets for p in s]
        if len(combined) != len(set(combined)) or set(combined) != set(everything):
            missing = sorted(set(everything) - set(combined))
            extra = [p for p in combined if combined.count(p) > 1]
            return VerificationReport(
                claim="P2.partitions",
                params={"B": B},
                status=FAIL,
                witness=element_id("P2", (missing + extra)[0]),
                detail={"family": label},
            )
        detail[label] = {"sets": len(sets), "covered": len(combined)}
    return VerificationReport(
        claim="P2.partitions", params={"B": B}, status=PASS, detail=detail
    )


def _claim_p2_shift_reduction(B: int) -> VerificationReport:
    """Each column chain maps consistently onto the previous one: every
    (z-1, 0, n) in the window lies below some (z, 0, m) in the window."""
    spec = WindowSpec.make(z=B, n=B)
    zlo, zhi = spec.bound("z")
    checked = 0
    for z in range(zlo + 1, zhi + 1):
        targets = [(z, 0, m) for m in range(B + 1)]
        for n in range(B + 1):
            y = (z - 1, 0, n)
            checked += 1
            if not any(elem_lt("P2", y, x) for x in targets):
                return VerificationReport(
                    claim="P2.shift_reduction",
                    params={"B": B},
                    status=FAIL,
                    witness=element_id("P2", y),
                )
    return VerificationReport(
        claim="P2.shift_reduction",
        params={"B": B},
        status=UP_TO_BOUND,
        detail={"checked": checked},
    )


def _claim_p3_row_bound(y: int, B: int) -> VerificationReport:
    """Maximum antichain of the row window {(x, y): x <= B} has size
    exactly min(y+1, B+1)."""
    from .partition import width_and_dilworth

    payloads = [(x, y) for x in range(B + 1)]
    n = len(payloads)
    m = np.zeros((n, n), dtype=bool)
    for i, p in enumerate(payloads):
        for j, q in enumerate(payloads):
            m[i, j] = _le_p3(p, q)
    P = FinitePoset([element_id("P3", p) for p in payloads], m, validate=True)
    w, _, antichain = width_and_dilworth(P)
    expected = min(y + 1, B + 1)
    ok = w == expected
    return VerificationReport(
        claim="P3.row_bound",
        params={"y": y, "B": B},
        status=PASS if ok else FAIL,
        witness=None if ok else sorted(antichain),
        detail={"width": w, "expected": expected},
    )


def _claim_p3_atomic_antichain(n: int, m: int, B: int) -> VerificationReport:
    """Bounded evidence that distinct columns are incomparable in bulk:
    some element of column n (y <= B) is incomparable to at least B
    elements of column m (y <= 2B)."""
    if n == m:
        return VerificationReport(
            claim="P3.atomic_antichain",
            params={"n": n, "m": m, "B": B},
            status=FAIL,
            witness=element_id("P3", (n, 0)),
            detail={"reason": "columns coincide"},
        )
    others = [(m, y2) for y2 in range(2 * B + 1)]
    best = None
    for y1 in range(B + 1):
        p = (n, y1)
        count = sum(1 for q in others if not elem_comparable("P3", p, q))
        if best is None or count > best[1]:
            best = (p, count)
    ok = best is not None and best[1] >= B
    return VerificationReport(
        claim="P3.atomic_antichain",
        params={"n": n, "m": m, "B": B},
        status=UP_TO_BOUND if ok else FAIL,
        witness=None if ok else element_id("P3", best[0]),
        detail={
            "best_element": element_id("P3", best[0]),
            "incomparable_count": best[1],
            "required": B,
        },
    )


def _claim_p4_no_domination(n: int, m: int, B: int, slack: int = 2) -> VerificationReport:
    """No single window element of E(n) lies above the whole window of
    E(m): each candidate (n, y, z) with y, z <= B is refuted inside the
    slack-widened window of E(m).  The asymmetric windows matter — a
    candidate at the very top of its own window would trivially dominate
    an equally truncated E(m)."""
    candidates = [(n, y, z) for y in range(B + 1) for z in range(B + 1)]
    wide = B + slack
    targets = [(m, v, w) for v in range(wide + 1) for w in range(wide + 1)]
    for c in candidates:
        refuted = False
        for t in targets:
            if not elem_le("P4", t, c):
                refuted = True
                break
        if not refuted:
            return VerificationReport(
                claim="P4.no_domination",
                params={"n": n, "m": m, "B": B, "slack": slack},
                status=FAIL,
                witness=element_id("P4", c),
            )
    return VerificationReport(
        claim="P4.no_domination",
        params={"n": n, "m": m, "B": B, "slack": slack},
        status=UP_TO_BOUND,
        detail={"candidates": len(candidates), "targets": len(targets)},
    )


_CLAIMS = {
    ("P1", "spine_partition"): (_claim_p1_spine_partition, ("N",)),
    ("P1", "pigeonhole"): (_claim_p1_pigeonhole, ("m",)),
    ("P2", "partitions"): (_claim_p2_partitions, ("B",)),
    ("P2", "shift_reduction"): (_claim_p2_shift_reduction, ("B",)),
    ("P3", "row_bound"): (_claim_p3_row_bound, ("y", "B")),
    ("P3", "atomic_antichain"): (_claim_p3_atomic_antichain, ("n", "m", "B")),
    ("P4", "no_domination"): (_claim_p4_no_domination, ("n", "m", "B")),
}


def claim_names(family: str) -> list[str]:
    return sorted(name for fam, name in _CLAIMS if fam == family)


def verify_claim(family: str, claim: str, params: dict) -> VerificationReport:
    """Run a registered finite check; see the per-claim functions."""
    key = (family, claim)
    if key not in _CLAIMS:
        raise UnknownClaim(family, claim)
    func, required = _CLAIMS[key]
    missing = [k for k in required if k not in params]
    if missing:
        raise ValueError(f"claim {family}.{claim} needs parameters {missing}")
    kwargs = {k: int(params[k]) for k in required}
    extra = {k: int(v) for k, v in params.items() if k not in required}
    return func(**kwargs, **extra)
