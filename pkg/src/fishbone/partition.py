"""Chains, antichain partitions, and spine certificates for finite posets.

A *spine* of a poset is a pair (C, A) where C is a chain and A is a partition
of the whole poset into antichains such that every part of A meets C in
exactly one element.  Every finite poset has one: take a maximum chain and
partition by longest-chain-from-below ("level") — each level is an antichain
and contains exactly one element of any maximum chain.

The module also provides maximum-antichain / minimum-chain-cover duals,
strong maximality of chains with explicit failure witnesses, a thickness
measure counting well-insulated incomparable partners, and the greedy
procedures that extend a spine partition to a larger poset or pick an
antichain transversal through a list of chains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .poset import FinitePoset, NotAChain, PosetError
from .report import FAIL, PASS, VerificationReport


class ThresholdTooSmall(PosetError):
    """Extension failed: some outside element could not be placed."""

    def __init__(self, element, reason: str):
        super().__init__(f"cannot place {element!r}: {reason}")
        self.element = element


class NoEligiblePoint(PosetError):
    """Greedy transversal failed: a chain offered no usable element."""

    def __init__(self, chain_index: int, reason: str):
        super().__init__(f"chain {chain_index}: {reason}")
        self.chain_index = chain_index


@dataclass(frozen=True)
class SpineCertificate:
    """A chain plus an antichain partition, both listed explicitly.

    ``chain`` is in increasing order; ``antichains`` lists the parts, each a
    tuple of elements.  Parts are indexed by position.
    """

    chain: tuple
    antichains: tuple

    def to_json_dict(self) -> dict:
        return {
            "chain": list(self.chain),
            "antichains": [list(a) for a in self.antichains],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def certificate_from_json_dict(data: dict) -> SpineCertificate:
    if not isinstance(data, dict) or "chain" not in data or "antichains" not in data:
        raise ValueError("certificate JSON needs 'chain' and 'antichains' keys")
    return SpineCertificate(
        chain=tuple(data["chain"]),
        antichains=tuple(tuple(a) for a in data["antichains"]),
    )


def load_certificate(path: str) -> SpineCertificate:
    with open(path, "r", encoding="utf-8") as fh:
        return certificate_from_json_dict(json.load(fh))


def loads_certificate(text: str) -> SpineCertificate:
    return certificate_from_json_dict(json.loads(text))


# --------------------------------------------------------------------- height


def _topo_order(P: FinitePoset) -> list[int]:
    """Indices sorted compatibly with the order (down-set size, then declared)."""
    down = P._leq.sum(axis=0)
    return sorted(range(len(P)), key=lambda i: (int(down[i]), i))


def _up_lengths(P: FinitePoset) -> np.ndarray:
    """For each element, the length of the longest chain ending at it."""
    n = len(P)
    strict = P._leq & ~np.eye(n, dtype=bool)
    up = np.zeros(n, dtype=np.int64)
    for i in _topo_order(P):
        below = np.flatnonzero(strict[:, i])
        up[i] = 1 + (up[below].max() if below.size else 0)
    return up


def height_and_max_chain(P: FinitePoset) -> tuple[int, list]:
    """Height (longest chain size) and the first maximum chain.

    Among all maximum chains, returns the one whose successive elements have
    least declared index, chosen greedily from the bottom.
    """
    n = len(P)
    if n == 0:
        return 0, []
    up = _up_lengths(P)
    h = int(up.max())
    strict = P._leq & ~np.eye(n, dtype=bool)
    # down[i]: longest chain starting at i (so up[i] + down[i] - 1 <= h,
    # with equality exactly when i lies on some maximum chain).
    down = np.zeros(n, dtype=np.int64)
    for i in reversed(_topo_order(P)):
        above = np.flatnonzero(strict[i, :])
        down[i] = 1 + (down[above].max() if above.size else 0)
    chain: list[int] = []
    cur = -1
    for level in range(1, h + 1):
        for i in range(n):
            if up[i] == level and down[i] == h - level + 1:
                if cur >= 0 and not strict[cur, i]:
                    continue
                chain.append(i)
                cur = i
                break
    assert len(chain) == h
    return h, [P.elements[i] for i in chain]


def height(P: FinitePoset) -> int:
    return height_and_max_chain(P)[0]


def mirsky_partition(P: FinitePoset) -> list[list]:
    """Partition into antichains by longest-chain-from-below.

    Part k (0-based) holds the elements whose longest chain from below has
    size k+1; there are exactly height(P) parts and each is an antichain.
    """
    up = _up_lengths(P)
    h = int(up.max()) if len(P) else 0
    parts: list[list] = [[] for _ in range(h)]
    for i, e in enumerate(P.elements):
        parts[int(up[i]) - 1].append(e)
    return parts


# ---------------------------------------------------------------------- width


def _max_matching(P: FinitePoset) -> dict[int, int]:
    """Maximum matching of the bipartite graph x_L -- y_R for x < y.

    Standard augmenting-path search, scanning vertices in declared order so
    the matching (and everything derived from it) is deterministic.
    """
    n = len(P)
    strict = P._leq & ~np.eye(n, dtype=bool)
    match_r: dict[int, int] = {}  # right vertex -> left vertex
    match_l: dict[int, int] = {}

    def try_augment(u: int, seen: set[int]) -> bool:
        for v in np.flatnonzero(strict[u, :]):
            v = int(v)
            if v in seen:
                continue
            seen.add(v)
            if v not in match_r or try_augment(match_r[v], seen):
                match_r[v] = u
                match_l[u] = v
                return True
        return False

    for u in range(n):
        try_augment(u, set())
    return match_l


def width_and_dilworth(P: FinitePoset) -> tuple[int, list[list], list]:
    """Width, a minimum chain cover, and a maximum antichain.

    The chain cover has exactly width(P) chains; the antichain meets every
    chain of the cover once.  Both are produced from one bipartite matching,
    so repeated calls agree.
    """
    n = len(P)
    match_l = _max_matching(P)
    match_r = {v: u for u, v in match_l.items()}

    # Chains: follow matched successors from every element that is not some
    # other element's matched upper neighbour.
    chains: list[list] = []
    successors = set(match_l.values())
    for start in range(n):
        if start in successors:
            continue
        cur = start
        chain = [cur]
        while cur in match_l:
            cur = match_l[cur]
            chain.append(cur)
        chains.append([P.elements[i] for i in chain])
    width = len(chains)
    assert width == n - len(match_l)

    # Maximum antichain via the standard vertex-cover complement: run an
    # alternating search from the unmatched left vertices; an element is in
    # the antichain when its left copy is reached and its right copy is not.
    strict = P._leq & ~np.eye(n, dtype=bool)
    seen_l: set[int] = set()
    seen_r: set[int] = set()
    stack = [u for u in range(n) if u not in match_l]
    seen_l.update(stack)
    while stack:
        u = stack.pop()
        for v in np.flatnonzero(strict[u, :]):
            v = int(v)
            if v in seen_r:
                continue
            seen_r.add(v)
            if v in match_r and match_r[v] not in seen_l:
                seen_l.add(match_r[v])
                stack.append(match_r[v])
    antichain = [P.elements[i] for i in range(n) if i in seen_l and i not in seen_r]
    assert len(antichain) == width
    assert P.is_antichain(antichain)
    return width, chains, antichain


def width(P: FinitePoset) -> int:
    return width_and_dilworth(P)[0]


# ---------------------------------------------------------------------- spine


def find_spine(P: FinitePoset) -> SpineCertificate:
    """A spine certificate: maximum chain + partition by chain-length level.

    Each level is an antichain (two comparable elements have different
    levels) and any maximum chain passes through every level exactly once.
    """
    h, chain = height_and_max_chain(P)
    parts = mirsky_partition(P)
    assert len(parts) == h
    return SpineCertificate(chain=tuple(chain), antichains=tuple(tuple(p) for p in parts))


def check_spine(P: FinitePoset, cert: SpineCertificate) -> VerificationReport:
    """Validate a spine certificate against a poset.

    Checks: chain is a chain listed in increasing order, antichains are
    antichains, they partition P, and each part meets the chain exactly once.
    """
    params = {"chain": len(cert.chain), "antichains": len(cert.antichains)}

    def fail(reason: str, witness) -> VerificationReport:
        return VerificationReport(
            claim="spine", params=params, status=FAIL, witness=witness, detail={"reason": reason}
        )

    for x in cert.chain:
        if x not in P:
            return fail("chain element not in poset", x)
    for part in cert.antichains:
        for x in part:
            if x not in P:
                return fail("antichain element not in poset", x)
    for a, b in zip(cert.chain, cert.chain[1:]):
        if not P.lt(a, b):
            return fail("chain not strictly increasing", [a, b])
    seen: dict = {}
    for k, part in enumerate(cert.antichains):
        if not P.is_antichain(part):
            return fail("part is not an antichain", list(part))
        for x in part:
            if x in seen:
                return fail("element in two parts", x)
            seen[x] = k
    missing = [e for e in P.elements if e not in seen]
    if missing:
        return fail("element in no part", missing[0])
    chain_set = set(cert.chain)
    if len(chain_set) != len(cert.chain):
        return fail("chain repeats an element", cert.chain[0])
    for k, part in enumerate(cert.antichains):
        hits = [x for x in part if x in chain_set]
        if len(hits) != 1:
            return fail("part must meet the chain exactly once", {"part": k, "hits": hits})
    return VerificationReport(claim="spine", params=params, status=PASS)


def is_spine(P: FinitePoset, cert: SpineCertificate) -> bool:
    return check_spine(P, cert).ok


# ---------------------------------------------------- strongly maximal chains


def is_strongly_maximal(P: FinitePoset, chain: Iterable) -> bool:
    """No trade improves the chain: removing a finite piece never allows
    inserting a strictly larger finite piece.

    In a finite poset this is equivalent to being a maximum chain, which is
    what is checked; :func:`smc_gap_witness` produces the improving trade
    whenever the check fails.
    """
    members = list(chain)
    if not P.is_chain(members):
        raise NotAChain(*_first_incomparable(P, members))
    return len(set(members)) == height(P)


def _first_incomparable(P: FinitePoset, members: Sequence) -> tuple:
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            if not P.comparable(members[a], members[b]):
                return members[a], members[b]
    raise AssertionError("chain had no incomparable pair")


def smc_gap_witness(P: FinitePoset, chain: Iterable) -> tuple[list, list] | None:
    """An improving trade (E, D) for a chain that is not strongly maximal.

    E is a contiguous segment of the chain and D a strictly larger chain that
    fits in its place: every element of D lies strictly between the chain
    elements bordering E (when they exist).  Returns None when the chain is
    strongly maximal.  The segment is found scanning gap positions (i, j)
    with i <= j in lexicographic order over the sorted chain.
    """
    members = P.chain_sorted(set(chain))
    n = len(P)
    strict = P._leq & ~np.eye(n, dtype=bool)
    outside = [i for i in range(n) if P.elements[i] not in set(members)]
    for i in range(len(members) + 1):
        for j in range(i, len(members) + 1):
            region = []
            for k in outside:
                if i > 0 and not strict[P.index(members[i - 1]), k]:
                    continue
                if j < len(members) and not strict[k, P.index(members[j])]:
                    continue
                region.append(P.elements[k])
            if not region:
                continue
            sub = P.induced(region)
            h, repl = height_and_max_chain(sub)
            if h > j - i:
                return members[i:j], repl
    return None


# ------------------------------------------------------------------ thickness


def thick_degree(P: FinitePoset, F: Iterable, y) -> int:
    """Number of x in F incomparable to y whose F-comparabilities cover y's.

    Counts x in F with x incomparable to y such that every z in F comparable
    to y is also comparable to x.  Such x can absorb y into any antichain
    built inside F without new comparabilities appearing.
    """
    members = [x for x in F]
    count = 0
    for x in members:
        if P.comparable(x, y):
            continue
        if all(not P.comparable(z, y) or P.comparable(z, x) for z in members):
            count += 1
    return count


def strong_thick_check(P: FinitePoset, F: Iterable, tau: int) -> VerificationReport:
    """Check every element outside F has thickness degree at least tau in F."""
    members = set(F)
    params = {"subset": len(members), "tau": tau}
    worst = None
    for y in P.elements:
        if y in members:
            continue
        d = thick_degree(P, members, y)
        if worst is None or d < worst[1]:
            worst = (y, d)
        if d < tau:
            return VerificationReport(
                claim="thickness",
                params=params,
                status=FAIL,
                witness=y,
                detail={"degree": d},
            )
    detail = {} if worst is None else {"min_degree": worst[1]}
    return VerificationReport(claim="thickness", params=params, status=PASS, detail=detail)


def extend_spine_partition(
    P: FinitePoset, F: Iterable, cert: SpineCertificate, tau: int
) -> SpineCertificate:
    """Extend a spine certificate of the subposet on F to all of P.

    Requires cert to be a valid spine of the induced subposet on F, and every
    outside element to have thickness degree >= tau in F (checked first;
    :class:`ThresholdTooSmall` otherwise).  Outside elements are then placed
    greedily in declared order: each goes to the lowest-indexed unused part
    containing one of its covering partners, so each part absorbs at most one
    new element and stays an antichain.
    """
    members = set(F)
    sub = P.induced(members)
    rep = check_spine(sub, cert)
    if not rep.ok:
        raise ValueError(f"invalid certificate for subset: {rep.detail.get('reason')}")
    rep = strong_thick_check(P, members, tau)
    if not rep.ok:
        raise ThresholdTooSmall(rep.witness, f"thickness degree {rep.detail['degree']} < {tau}")

    part_of = {}
    for k, part in enumerate(cert.antichains):
        for x in part:
            part_of[x] = k
    new_parts = [list(part) for part in cert.antichains]
    used: set[int] = set()
    outsiders = [y for y in P.elements if y not in members]
    for y in outsiders:
        candidates = set()
        for x in members:
            if P.comparable(x, y):
                continue
            if all(not P.comparable(z, y) or P.comparable(z, x) for z in members):
                candidates.add(part_of[x])
        placed = False
        for k in sorted(candidates):
            if k in used:
                continue
            if all(P.incomparable(y, w) for w in new_parts[k]):
                new_parts[k].append(y)
                used.add(k)
                placed = True
                break
        if not placed:
            raise ThresholdTooSmall(y, "no unused antichain can absorb it")
    out = SpineCertificate(
        chain=cert.chain, antichains=tuple(tuple(p) for p in new_parts)
    )
    rep = check_spine(P, out)
    assert rep.ok, rep.detail
    return out


# ------------------------------------------------------------- greedy picking


def greedy_antichain_from_chains(P: FinitePoset, chains: Sequence[Iterable]) -> list:
    """One element per chain, forming an antichain, chosen greedily.

    From the first chain take its least element.  From each later chain,
    restrict to the maximal final segment (upper part of the chain) whose
    members are all incomparable to everything already picked, and take that
    segment's least element.  :class:`NoEligiblePoint` if a chain has no such
    segment or repeats an earlier chain's element.
    """
    picked: list = []
    picked_set: set = set()
    for ci, chain in enumerate(chains):
        ordered = P.chain_sorted(set(chain))
        if any(x in picked_set for x in ordered):
            raise NoEligiblePoint(ci, "chain repeats an already picked element")
        if ci == 0:
            choice = ordered[0]
        else:
            start = len(ordered)
            for k in range(len(ordered) - 1, -1, -1):
                if all(P.incomparable(ordered[k], p) for p in picked):
                    start = k
                else:
                    break
            if start == len(ordered):
                raise NoEligiblePoint(ci, "no final segment avoids the picks so far")
            choice = ordered[start]
        picked.append(choice)
        picked_set.add(choice)
    assert P.is_antichain(picked)
    return picked
