"""Finite partial orders backed by a dense boolean comparison table.

A :class:`FinitePoset` stores its elements in a fixed declared order and a
reflexive ``leq`` matrix, so comparison queries are O(1) and the partial-order
axioms can be checked with a few boolean matrix operations.  Intended scale is
up to a few thousand elements; storage is quadratic.
"""

from __future__ import annotations

import graphlib
import json
from collections import deque
from typing import Iterable, Sequence

import numpy as np

ElementId = str | int


class PosetError(Exception):
    """Base class for errors raised by this module."""


class UnknownElement(PosetError):
    def __init__(self, element):
        super().__init__(f"unknown element {element!r}")
        self.element = element


class CycleError(PosetError):
    """Raised when generator pairs force two distinct elements to be equal."""

    def __init__(self, cycle: Sequence):
        loop = " <= ".join(repr(x) for x in list(cycle) + [cycle[0]])
        super().__init__(f"generators force a cycle: {loop}")
        self.cycle = tuple(cycle)


class NotAChain(PosetError):
    def __init__(self, x, y):
        super().__init__(f"elements {x!r} and {y!r} are incomparable")
        self.pair = (x, y)


def _bool_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return (a.astype(np.uint8) @ b.astype(np.uint8)) > 0


def _shortest_cycle(nodes: Sequence[int], edges: dict[int, list[int]]) -> list[int]:
    """Shortest directed cycle touching `nodes`, ties broken by start index."""
    node_set = set(nodes)
    best: list[int] | None = None
    for start in sorted(node_set):
        # BFS over edges restricted to the strongly connected component.
        parent: dict[int, int] = {start: -1}
        queue = deque([start])
        found = None
        while queue and found is None:
            cur = queue.popleft()
            for nxt in edges.get(cur, ()):
                if nxt == start:
                    found = cur
                    break
                if nxt in node_set and nxt not in parent:
                    parent[nxt] = cur
                    queue.append(nxt)
        if found is None:
            continue
        path = [found]
        while path[-1] != start:
            path.append(parent[path[-1]])
        path.reverse()
        if best is None or len(path) < len(best):
            best = path
    assert best is not None
    return best


class FinitePoset:
    """An immutable finite poset with a declared element order."""

    __slots__ = ("elements", "_index", "_leq")

    def __init__(self, elements: Iterable[ElementId], leq: np.ndarray, *, validate: bool = True):
        self.elements: tuple = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate elements")
        self._index = {e: i for i, e in enumerate(self.elements)}
        table = np.array(leq, dtype=bool)
        n = len(self.elements)
        if table.shape != (n, n):
            raise ValueError(f"leq table must be {n}x{n}")
        if validate:
            self._check_axioms(table)
        table.setflags(write=False)
        self._leq = table

    def _check_axioms(self, m: np.ndarray) -> None:
        n = m.shape[0]
        if n == 0:
            return
        if not m.diagonal().all():
            i = int(np.argmin(m.diagonal()))
            raise ValueError(f"not reflexive at {self.elements[i]!r}")
        both = m & m.T
        if (both != np.eye(n, dtype=bool)).any():
            i, j = map(int, np.argwhere(both & ~np.eye(n, dtype=bool))[0])
            raise ValueError(
                f"not antisymmetric: {self.elements[i]!r} and {self.elements[j]!r}"
            )
        closed = _bool_matmul(m, m)
        if (closed & ~m).any():
            i, j = map(int, np.argwhere(closed & ~m)[0])
            raise ValueError(
                f"not transitive: {self.elements[i]!r} .. {self.elements[j]!r}"
            )

    # ------------------------------------------------------------------ build

    @classmethod
    def from_generators(cls, elements: Iterable[ElementId], pairs: Iterable[tuple]) -> "FinitePoset":
        """Reflexive-transitive closure of ``pairs`` (each meaning x <= y).

        Cycles among distinct elements are rejected before the closure is
        computed; the error reports one shortest offending cycle.
        """
        elems = tuple(elements)
        index = {e: i for i, e in enumerate(elems)}
        if len(index) != len(elems):
            raise ValueError("duplicate elements")
        n = len(elems)
        edges: dict[int, list[int]] = {}
        for x, y in pairs:
            if x not in index:
                raise UnknownElement(x)
            if y not in index:
                raise UnknownElement(y)
            i, j = index[x], index[y]
            if i != j:
                edges.setdefault(i, []).append(j)

        sorter: graphlib.TopologicalSorter = graphlib.TopologicalSorter()
        for i in range(n):
            sorter.add(i)
        for i, outs in edges.items():
            for j in outs:
                sorter.add(j, i)
        try:
            sorter.prepare()
        except graphlib.CycleError as err:
            in_cycle = err.args[1][:-1]
            cyc = _shortest_cycle(in_cycle, edges)
            raise CycleError([elems[i] for i in cyc]) from None

        m = np.eye(n, dtype=bool)
        for i, outs in edges.items():
            for j in outs:
                m[i, j] = True
        while True:
            bigger = m | _bool_matmul(m, m)
            if (bigger == m).all():
                break
            m = bigger
        return cls(elems, m, validate=False)

    @classmethod
    def from_leq(cls, elements: Iterable[ElementId], leq: np.ndarray, *, validate: bool = True) -> "FinitePoset":
        return cls(elements, leq, validate=validate)

    def induced(self, members: Iterable[ElementId]) -> "FinitePoset":
        """Subposet on ``members``, keeping the declared element order."""
        keep = sorted({self.index(x) for x in members})
        sub = self._leq[np.ix_(keep, keep)].copy()
        return FinitePoset([self.elements[i] for i in keep], sub, validate=False)

    # ----------------------------------------------------------------- access

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return self.elements == other.elements and (self._leq == other._leq).all()

    def __hash__(self):
        return hash(self.elements)

    def index(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise UnknownElement(x) from None

    def leq(self, x, y) -> bool:
        return bool(self._leq[self.index(x), self.index(y)])

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x, y) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def incomparable(self, x, y) -> bool:
        return not self.comparable(x, y)

    def up_set(self, x) -> frozenset:
        i = self.index(x)
        col = self._leq[i, :] & ~self._leq[:, i]
        return frozenset(self.elements[j] for j in np.flatnonzero(col))

    def down_set(self, x) -> frozenset:
        i = self.index(x)
        row = self._leq[:, i] & ~self._leq[i, :]
        return frozenset(self.elements[j] for j in np.flatnonzero(row))

    def comparability(self, x) -> tuple[frozenset, frozenset, frozenset]:
        """Partition of the other elements into (above x, below x, incomparable)."""
        i = self.index(x)
        up = self._leq[i, :] & ~self._leq[:, i]
        down = self._leq[:, i] & ~self._leq[i, :]
        inc = ~(self._leq[i, :] | self._leq[:, i])
        return (
            frozenset(self.elements[j] for j in np.flatnonzero(up)),
            frozenset(self.elements[j] for j in np.flatnonzero(down)),
            frozenset(self.elements[j] for j in np.flatnonzero(inc)),
        )

    def sorted_members(self, members: Iterable[ElementId]) -> list:
        """Members listed in the declared element order."""
        return [self.elements[i] for i in sorted(self.index(x) for x in members)]

    def chain_sorted(self, chain: Iterable[ElementId]) -> list:
        """A chain's members in increasing order; raises NotAChain otherwise."""
        members = self.sorted_members(chain)
        down = self._leq.sum(axis=0)
        members.sort(key=lambda x: (int(down[self.index(x)]), self.index(x)))
        for a, b in zip(members, members[1:]):
            if not self.leq(a, b):
                raise NotAChain(a, b)
        return members

    # -------------------------------------------------------------- structure

    def covers(self) -> list[tuple]:
        """Cover pairs (v, u) with v > u and nothing strictly between.

        This is the transitive reduction of the strict order, listed by the
        declared order of v then u.
        """
        strict = self._leq & ~np.eye(len(self), dtype=bool)
        between = _bool_matmul(strict, strict)
        cov = strict & ~between
        pairs = [(int(u), int(v)) for u, v in np.argwhere(cov)]
        pairs.sort(key=lambda p: (p[1], p[0]))
        return [(self.elements[v], self.elements[u]) for u, v in pairs]

    def open_interval(self, x, y) -> frozenset:
        i, j = self.index(x), self.index(y)
        sel = self._leq[i, :] & self._leq[:, j]
        sel[i] = sel[j] = False
        return frozenset(self.elements[k] for k in np.flatnonzero(sel))

    def closed_interval(self, x, y) -> frozenset:
        i, j = self.index(x), self.index(y)
        sel = self._leq[i, :] & self._leq[:, j]
        return frozenset(self.elements[k] for k in np.flatnonzero(sel))

    def convex_hull(self, members: Iterable[ElementId]) -> frozenset:
        """Elements lying between two members: {x : exists y, z in X, y <= x <= z}."""
        idx = [self.index(m) for m in members]
        if not idx:
            return frozenset()
        above_some = self._leq[idx, :].any(axis=0)
        below_some = self._leq[:, idx].any(axis=1)
        return frozenset(self.elements[k] for k in np.flatnonzero(above_some & below_some))

    def wide_interval(self, members: Iterable[ElementId]) -> frozenset:
        """Elements constrained from outside exactly as the set X is.

        z qualifies when every element strictly above all of X is strictly
        above z, and dually below.  An empty X imposes no constraint, so the
        whole poset is returned.
        """
        idx = [self.index(m) for m in members]
        n = len(self)
        if not idx:
            return frozenset(self.elements)
        strict = self._leq & ~np.eye(n, dtype=bool)
        above_all = strict[idx, :].all(axis=0)  # w with w > every member
        below_all = strict[:, idx].all(axis=1)
        ok_up = (strict | ~above_all[None, :]).all(axis=1)  # z rows: above_all[w] -> z < w
        ok_down = (strict.T | ~below_all[None, :]).all(axis=1)
        return frozenset(self.elements[k] for k in np.flatnonzero(ok_up & ok_down))

    def wide_interval_pair(self, x, y) -> frozenset:
        """Pair form: {z : (w > y -> w > z) and (w < x -> w < z) for all w}."""
        i, j = self.index(x), self.index(y)
        n = len(self)
        strict = self._leq & ~np.eye(n, dtype=bool)
        above = strict[j, :]
        below = strict[:, i]
        ok_up = (strict | ~above[None, :]).all(axis=1)
        ok_down = (strict.T | ~below[None, :]).all(axis=1)
        return frozenset(self.elements[k] for k in np.flatnonzero(ok_up & ok_down))

    def interval(self, kind: str, *args) -> frozenset:
        if kind == "open":
            return self.open_interval(*args)
        if kind == "closed":
            return self.closed_interval(*args)
        if kind == "convex":
            return self.convex_hull(*args)
        if kind == "wide":
            if len(args) == 2:
                return self.wide_interval_pair(*args)
            return self.wide_interval(*args)
        raise ValueError(f"unknown interval kind {kind!r}")

    # ------------------------------------------------------------- predicates

    def is_chain(self, members: Iterable[ElementId]) -> bool:
        idx = [self.index(m) for m in members]
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                if not (self._leq[i, j] or self._leq[j, i]):
                    return False
        return True

    def is_antichain(self, members: Iterable[ElementId]) -> bool:
        idx = [self.index(m) for m in members]
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                if self._leq[i, j] or self._leq[j, i]:
                    return False
        return True

    def is_contiguous_chain(self, chain: Iterable[ElementId]) -> bool:
        """True when no outside element fits strictly inside the chain.

        An outside x "fits" when y < x < z for some chain members y, z and
        chain + {x} is still a chain.
        """
        members = set(chain)
        ordered = self.chain_sorted(members)
        for x in self.elements:
            if x in members:
                continue
            if not all(self.comparable(x, c) for c in ordered):
                continue
            if any(self.lt(y, x) for y in ordered) and any(self.lt(x, z) for z in ordered):
                return False
        return True

    # ------------------------------------------------------------------- JSON

    def to_json_dict(self) -> dict:
        """JSON form with the cover relation as generators (lower, upper)."""
        return {
            "elements": list(self.elements),
            "le": [[u, v] for v, u in self.covers()],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def poset_from_json_dict(data: dict) -> FinitePoset:
    if not isinstance(data, dict) or "elements" not in data or "le" not in data:
        raise ValueError("poset JSON needs 'elements' and 'le' keys")
    pairs = [tuple(p) for p in data["le"]]
    for p in pairs:
        if len(p) != 2:
            raise ValueError(f"bad le pair {p!r}")
    return FinitePoset.from_generators(data["elements"], pairs)


def load_poset(path: str) -> FinitePoset:
    with open(path, "r", encoding="utf-8") as fh:
        return poset_from_json_dict(json.load(fh))


def loads_poset(text: str) -> FinitePoset:
    return poset_from_json_dict(json.loads(text))
