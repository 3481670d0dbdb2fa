"""Desk-scale verification of the finite combinatorial facts behind the
no-spine argument for the family ``P5``.

The infinite argument shows no chain of P5 meets every part of any antichain
partition.  Its finite ingredients are checked here exhaustively on windows:
the level/antichain/contiguity structure of P5, the exact-length
interpolation chains inside a level, the forced drop of level minima, the
"every valid antichain labelling is constant on diagonals" rectangle lemma,
and the final 2a+1 vs 2a counting gap.  None of the reports claims the
infinite statement; pass statuses mean the finite instances checked out.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .families import WindowSpec, element_id, elem_le, named_subset, window
from .poset import FinitePoset, PosetError
from .report import FAIL, PASS, UP_TO_BOUND, VerificationReport


class PreconditionViolated(PosetError):
    pass


# ------------------------------------------------------------- level window


def level_window(n: int, B: int, levels: int = 1) -> FinitePoset:
    """Window of P5 covering levels n .. n+levels-1 with both coords <= B."""
    return window("P5", WindowSpec.make(n=(n, n + levels - 1), c=B))


def verify_level_structure(n: int, s: int, B: int) -> VerificationReport:
    """Window checks of the level structure of P5.

    Checks, for levels n and n+1 with coordinates <= B: the level L_n is a
    convex subset of the two-level window; the diagonal K(n,s) is an
    antichain; every fixed-row and fixed-column set inside L_n is a chain
    and a contiguous chain of the single-level window.
    """
    params = {"n": n, "s": s, "B": B}
    if s > 2 * B:
        raise PreconditionViolated(f"diagonal s={s} exceeds window reach 2B={2 * B}")

    def fail(reason: str, witness) -> VerificationReport:
        return VerificationReport(
            claim="P5.level_structure",
            params=params,
            status=FAIL,
            witness=witness,
            detail={"reason": reason},
        )

    two = level_window(n, B, levels=2)
    spec2 = WindowSpec.make(n=(n, n + 1), c=B)
    level_n = named_subset("P5", f"L({n})", spec2)
    hull = two.convex_hull(level_n)
    if hull != frozenset(level_n):
        extra = sorted(hull - set(level_n))
        return fail("level is not convex in the two-level window", extra[0])

    diagonal = named_subset("P5", f"K({n},{s})", spec2)
    if not two.is_antichain(diagonal):
        return fail("diagonal is not an antichain", diagonal)

    one = level_window(n, B, levels=1)
    spec1 = WindowSpec.make(n=(n, n), c=B)
    lines = 0
    for z0 in range(B + 1):
        row = [element_id("P5", (x, z0, n)) for x in range(B + 1)]
        col = [element_id("P5", (z0, y, n)) for y in range(B + 1)]
        for line in (row, col):
            lines += 1
            if not one.is_chain(line):
                return fail("row/column is not a chain", line)
            if not one.is_contiguous_chain(line):
                return fail("row/column is not contiguous in its level", line)
    return VerificationReport(
        claim="P5.level_structure",
        params=params,
        status=UP_TO_BOUND,
        detail={"diagonal_size": len(diagonal), "lines_checked": lines},
    )


# ------------------------------------------------------------ interpolation


def interpolate_chain(
    n: int, p: tuple[int, int], q: tuple[int, int], r: tuple[int, int]
) -> list:
    """A chain from (p,n) to (r,n) through (q,n) of size exactly
    r_x + r_y + 1 - p_x - p_y.

    Requires p <= q <= r coordinatewise.  The chain is the staircase that
    walks right then up to q, then right then up to r; successive points
    differ by one in one coordinate, so the whole path is totally ordered
    in the product order on the level.
    """
    (x, y), (u, v), (w, z) = p, q, r
    if not (x <= u <= w and y <= v <= z):
        raise PreconditionViolated(f"need {p} <= {q} <= {r} coordinatewise")
    path: list = []

    def walk(ax, ay, bx, by):
        for cx in range(ax, bx):
            path.append((cx, ay, n))
        for cy in range(ay, by):
            path.append((bx, cy, n))

    walk(x, y, u, v)
    walk(u, v, w, z)
    path.append((w, z, n))
    assert len(path) == w + z + 1 - x - y
    return path


# ----------------------------------------------------------------- min drop


def verify_min_drop(u: int, v: int, B: int) -> VerificationReport:
    """Whenever (x,y) on the next level down lies below (u,v) despite
    x + y > 2(u + v), the drop min(x,y)+1 <= min(u,v) is forced.

    Exhaustive over x, y <= B; reports how many (x,y) qualify.  With the
    sum clause unavailable by hypothesis, the comparison can only hold via
    the min clause, so the check is that the reachability answer and the
    min clause agree.
    """
    params = {"u": u, "v": v, "B": B}
    qualifying = 0
    for x in range(B + 1):
        for y in range(B + 1):
            if x + y <= 2 * (u + v):
                continue
            if not elem_le("P5", (x, y, 1), (u, v, 0)):
                continue
            qualifying += 1
            if not (min(x, y) + 1 <= min(u, v)):
                return VerificationReport(
                    claim="P5.min_drop",
                    params=params,
                    status=FAIL,
                    witness=element_id("P5", (x, y, 1)),
                )
    return VerificationReport(
        claim="P5.min_drop",
        params=params,
        status=UP_TO_BOUND,
        detail={"qualifying": qualifying},
    )


# ----------------------------------------------------- constant on diagonals


def _monotone_paths(u: int, v: int):
    """All right/up staircases (0,0) -> (u,v); yields tuples of points, the
    k-th point lying on diagonal k."""
    if u == 0 and v == 0:
        yield ((0, 0),)
        return
    for prev in (((u - 1, v),) if u else ()) + (((u, v - 1),) if v else ()):
        for path in _monotone_paths(*prev):
            yield path + ((u, v),)


def _rectangle_cells(u: int, v: int) -> list:
    return [(i, j) for i in range(u + 1) for j in range(v + 1)]


def _valid_assignments(u: int, v: int, path, ell: int):
    """All labelings f : rectangle -> {0..ell} with f(path[k]) = k and every
    label class an antichain in the product order, by backtracking."""
    cells = _rectangle_cells(u, v)
    fixed = {pt: k for k, pt in enumerate(path)}
    free = [c for c in cells if c not in fixed]

    def comparable(a, b):
        return (a[0] <= b[0] and a[1] <= b[1]) or (b[0] <= a[0] and b[1] <= a[1])

    def extend(i: int, assign: dict):
        if i == len(free):
            yield dict(assign)
            return
        cell = free[i]
        for label in range(ell + 1):
            ok = True
            for other, lab in assign.items():
                if lab == label and other != cell and comparable(cell, other):
                    ok = False
                    break
            if ok:
                assign[cell] = label
                yield from extend(i + 1, assign)
                del assign[cell]

    yield from extend(0, dict(fixed))


def verify_constant_on_rows(ell: int) -> VerificationReport:
    """Every valid antichain labelling of every staircase instance of size
    ell is constant on each diagonal below the top.

    An instance is a corner (u,v) with u+v = ell and a staircase path
    p_0..p_ell from (0,0) to (u,v); a valid labelling maps the rectangle
    {(i,j): i <= u, j <= v} to {0..ell}, fixes f(p_k) = k, and has all
    label classes antichains.  The check asserts f(i,j) = i+j whenever
    i+j <= ell-1, exhaustively; the top diagonal is genuinely unforced at
    this size, which is why it is excluded (rerun at ell+1 to pin row ell).
    """
    if ell < 1:
        raise PreconditionViolated("need ell >= 1")
    params = {"ell": ell}
    instances = 0
    assignments = 0
    for u in range(ell + 1):
        v = ell - u
        for path in _monotone_paths(u, v):
            instances += 1
            for f in _valid_assignments(u, v, path, ell):
                assignments += 1
                for (i, j), label in f.items():
                    if i + j <= ell - 1 and label != i + j:
                        return VerificationReport(
                            claim="P5.constant_on_rows",
                            params=params,
                            status=FAIL,
                            witness={
                                "corner": [u, v],
                                "path": [list(pt) for pt in path],
                                "cell": [i, j],
                                "label": label,
                            },
                        )
    return VerificationReport(
        claim="P5.constant_on_rows",
        params=params,
        status=PASS,
        detail={"instances": instances, "assignments": assignments},
    )


def assignment_chain_bijections(ell: int) -> bool:
    """Supporting fact: on every maximal chain of the rectangle, every valid
    labelling is a bijection onto {0..ell} (ell+1 pairwise comparable cells
    with antichain classes must take distinct labels)."""
    for u in range(ell + 1):
        v = ell - u
        for path in _monotone_paths(u, v):
            for f in _valid_assignments(u, v, path, ell):
                for chain in _monotone_paths(u, v):
                    if sorted(f[c] for c in chain) != list(range(ell + 1)):
                        return False
    return True


# ------------------------------------------------------------ final counting


def verify_final_counting(a: int) -> VerificationReport:
    """The chain F = {(a+t, a, 1): t <= 2a} has 2a+1 elements, all of them
    below every (u, v, 0) with u + v >= 2a (checked for coords <= 3a), while
    the region T = {(u, v, 0): u + v <= 2a-1} has height only 2a — so no
    antichain partition of T can host all of F one-per-part.
    """
    if a < 1:
        raise PreconditionViolated("need a >= 1")
    params = {"a": a}
    F = [(a + t, a, 1) for t in range(2 * a + 1)]
    for p, q in combinations(F, 2):
        if not (elem_le("P5", p, q) or elem_le("P5", q, p)):
            return VerificationReport(
                claim="P5.final_counting",
                params=params,
                status=FAIL,
                witness=[element_id("P5", p), element_id("P5", q)],
                detail={"reason": "F is not a chain"},
            )
    bound = 3 * a
    for u in range(bound + 1):
        for v in range(bound + 1):
            if u + v < 2 * a:
                continue
            for p in F:
                if not elem_le("P5", p, (u, v, 0)):
                    return VerificationReport(
                        claim="P5.final_counting",
                        params=params,
                        status=FAIL,
                        witness=[element_id("P5", p), element_id("P5", (u, v, 0))],
                        detail={"reason": "missing comparability above the cut"},
                    )

    from .partition import height

    T = [(u, v) for u in range(2 * a) for v in range(2 * a) if u + v <= 2 * a - 1]
    k = len(T)
    m = np.zeros((k, k), dtype=bool)
    for i, p in enumerate(T):
        for j, q in enumerate(T):
            m[i, j] = elem_le("P5", (*p, 0), (*q, 0))
    tri = FinitePoset([element_id("P5", (*p, 0)) for p in T], m, validate=True)
    h = height(tri)
    ok = len(F) == 2 * a + 1 and h == 2 * a
    return VerificationReport(
        claim="P5.final_counting",
        params=params,
        status=UP_TO_BOUND if ok else FAIL,
        witness=None if ok else {"F_size": len(F), "T_height": h},
        detail={"F_size": len(F), "T_height": h, "gap": len(F) - h},
    )


# ------------------------------------------------------------------- presets


def desk_preset() -> list[VerificationReport]:
    """The standard battery reported by the command line ``verify all``."""
    reports = []
    for n in (0, 1, 2):
        reports.append(verify_level_structure(n, s=4, B=8))
    reports.append(verify_min_drop(2, 2, B=12))
    reports.append(verify_min_drop(1, 3, B=15))
    for ell in (1, 2, 3):
        reports.append(verify_constant_on_rows(ell))
    for a in (1, 2, 3):
        reports.append(verify_final_counting(a))
    return reports
