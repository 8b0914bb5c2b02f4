"""Dominance binary search over the ordered front list.

The "tree" is pure index arithmetic over front ranks: a node is a front,
its left subtree holds better (lower) ranks, its right subtree worse ones.
Nothing is materialized; a navigation leaves behind only its comparison
trace, at most floor(log2 K) + 1 records long.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ndfronts.core import (
    Counter,
    DomRelation,
    FrontSet,
    Solution,
    check_dom,
    dom_nature,
)
from ndfronts.linear import Position, _check_insertable, _place_displaced, dom_set, insert_linear


class TreeVariant(Enum):
    """How the root of a rank range is picked when bisecting."""

    LEFT_BALANCED = "left"  # midpoint rounds up; left children fill first
    RIGHT_BALANCED = "right"  # midpoint rounds down; right children fill first


@dataclass(frozen=True)
class CmpRecord:
    """One probed front during navigation.

    ``dom`` is the probe's nature against that front (1 dominating witness,
    -1 dominated witness, 0 non-dominated with the whole front); ``s_index``
    is the 1-based witness position, or 0 when ``dom`` is 0.
    """

    dom: int
    f_index: int
    s_index: int


def navigate(fs: FrontSet, new: Solution, variant: TreeVariant, counter: Counter) -> list[CmpRecord]:
    """Binary-search the front ranks for where ``new`` belongs.

    At each probed front, solutions are scanned in order: a dominating
    witness sends the search left (better ranks), a dominated witness right
    (worse ranks, when the variant still has a right range), and
    non-domination with the whole front goes left.  Requires K >= 2; with a
    single front the linear path applies.
    """
    if fs.k < 2:
        raise ValueError("navigation needs at least 2 fronts; use the linear path")
    round_up = variant is TreeVariant.LEFT_BALANCED
    trace: list[CmpRecord] = []

    def visit(lo: int, hi: int) -> None:
        if lo == hi:
            for pos, sol in enumerate(fs.fronts[lo - 1], 1):
                nat = dom_nature(new, sol, counter)
                if nat != 0:
                    trace.append(CmpRecord(nat, lo, pos))
                    return
            trace.append(CmpRecord(0, lo, 0))
            return
        mid = (lo + hi + 1) // 2 if round_up else (lo + hi) // 2
        for pos, sol in enumerate(fs.fronts[mid - 1], 1):
            nat = dom_nature(new, sol, counter)
            if nat == 1:
                trace.append(CmpRecord(1, mid, pos))
                if round_up:
                    visit(lo, mid - 1)  # rounding up guarantees a left range
                elif mid != lo:
                    visit(lo, mid - 1)
                return
            if nat == -1:
                trace.append(CmpRecord(-1, mid, pos))
                if round_up:
                    if mid != hi:
                        visit(mid + 1, hi)
                else:
                    visit(mid + 1, hi)  # rounding down guarantees a right range
                return
        trace.append(CmpRecord(0, mid, 0))
        if round_up:
            visit(lo, mid - 1)
        elif mid != lo:
            visit(lo, mid - 1)

    visit(1, fs.k)
    return trace


def _resolve_dominating(fs: FrontSet, f_index: int, s_index: int, new: Solution, counter: Counter) -> None:
    """``new`` found a dominated witness in front ``f_index``: collect what it
    dominates there, take its place, and push the displaced set down."""
    front = fs.fronts[f_index - 1]
    displaced = [front.pop(s_index - 1)]
    dom_set(front, new, s_index, displaced, counter)
    front.append(new)
    fs._ids.add(new.id)
    _place_displaced(fs, displaced, f_index, counter)


def insert_tree(fs: FrontSet, new: Solution, variant: TreeVariant, counter: Counter) -> None:
    """Insert ``new`` using binary-search navigation to find its rank.

    With fewer than two fronts this is exactly the linear insertion.  The
    final partition always equals what :func:`ndfronts.linear.insert_linear`
    produces on the same input; only the comparison counts differ.
    """
    if fs.k < 2:
        insert_linear(fs, new, counter)
        return
    _check_insertable(fs, new)
    trace = navigate(fs, new, variant, counter)

    last = trace[-1]
    if last.dom == 0:
        fs.fronts[last.f_index - 1].append(new)
        fs._ids.add(new.id)
        return
    if last.dom == 1:
        _resolve_dominating(fs, last.f_index, last.s_index, new, counter)
        return
    if all(rec.dom == -1 for rec in trace):
        fs.fronts.append([new])
        fs._ids.add(new.id)
        return
    # Mixed trace ending in dominated records: resolve at the deepest record
    # that still left room, i.e. the earlier half of the last differing pair.
    for i in range(len(trace) - 1, 0, -1):
        if trace[i].dom != trace[i - 1].dom:
            rec = trace[i - 1]
            if rec.dom == 0:
                fs.fronts[rec.f_index - 1].append(new)
                fs._ids.add(new.id)
            else:
                _resolve_dominating(fs, rec.f_index, rec.s_index, new, counter)
            return
    raise AssertionError("mixed trace without a differing adjacent pair")


def lookup_tree(fs: FrontSet, sol: Solution, counter: Counter) -> Position | None:
    """Binary-search the fronts for a stored solution identical to ``sol``.

    Dominating a probed solution means the target can only sit at better
    ranks (left); being dominated sends the search right; non-domination with
    a whole front also goes left.  Returns None when the search exhausts its
    range without an identical match.
    """
    if fs.k == 0:
        return None

    def search(lo: int, hi: int) -> Position | None:
        if lo == hi:
            for pos, stored in enumerate(fs.fronts[lo - 1], 1):
                rel = check_dom(sol, stored, counter)
                if rel is DomRelation.IDENTICAL:
                    return Position(lo, pos)
                if rel is not DomRelation.NON_DOMINATED:
                    return None
            return None
        mid = (lo + hi + 1) // 2
        for pos, stored in enumerate(fs.fronts[mid - 1], 1):
            rel = check_dom(sol, stored, counter)
            if rel is DomRelation.DOMINATES:
                return search(lo, mid - 1)
            if rel is DomRelation.DOMINATED_BY:
                if mid != hi:
                    return search(mid + 1, hi)
                # no right range: keep scanning this front, then fall left
            elif rel is DomRelation.IDENTICAL:
                return Position(mid, pos)
        return search(lo, mid - 1)

    return search(1, fs.k)
