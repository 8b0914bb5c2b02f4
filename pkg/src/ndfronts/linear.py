"""Linear-scan maintenance of non-domination levels.

Insertion walks the fronts best-first until the new solution settles;
deletion locates its target, removes it, and promotes solutions upward.
No solution is ever held in two places at once: displaced sets are moved,
not copied, so the only working storage is the set currently in flight.
Comparisons stop at the first deciding witness exactly where the update
rules allow, which makes counter values reproducible run over run.
"""

from __future__ import annotations

from dataclasses import dataclass

from ndfronts.core import (
    ContractViolationError,
    Counter,
    DimensionMismatchError,
    DomRelation,
    DuplicateIdError,
    FrontSet,
    MissingSolutionError,
    Solution,
    check_dom,
    dom_nature,
)


@dataclass(frozen=True)
class Position:
    """Location of a stored solution: 1-based front rank and in-front index."""

    f_index: int
    s_index: int


def _check_insertable(fs: FrontSet, new: Solution) -> None:
    if new.m != fs.m:
        raise DimensionMismatchError(f"solution {new.id!r} has M={new.m}, front set has M={fs.m}")
    if new.id in fs:
        raise DuplicateIdError(f"solution id {new.id!r} already stored")


def dom_set(
    front: list[Solution],
    new: Solution,
    start: int,
    collected: list[Solution],
    counter: Counter,
) -> None:
    """Move every solution of ``front`` at or after position ``start`` (1-based)
    that ``new`` dominates into ``collected``.

    Survivors keep their relative order; each candidate is compared exactly
    once.  Positions before ``start`` were already classified by the caller.
    """
    kept = front[: start - 1]
    for sol in front[start - 1 :]:
        if dom_nature(new, sol, counter) == 1:
            collected.append(sol)
        else:
            kept.append(sol)
    front[:] = kept


def _require_antichain(group: list[Solution]) -> None:
    scratch = Counter()
    for i in range(len(group)):
        for j in range(i + 1, len(group)):
            if dom_nature(group[i], group[j], scratch) != 0:
                raise ContractViolationError(
                    f"displaced set is internally dominated: {group[i].id!r} vs {group[j].id!r}"
                )


def update_insert(fs: FrontSet, displaced: list[Solution], index: int, counter: Counter) -> None:
    """Settle a displaced set at rank ``index``, cascading leftovers downward.

    Members of the front at ``index`` that are non-dominated with the first
    ``len(displaced)`` displaced solutions join them at this rank (solutions
    appended during the sweep are all from one former front and need no
    mutual checks); the rest sink one rank and the cascade moves down.  Past
    the last front the displaced set simply becomes the new last front.
    """
    if not displaced:
        raise ContractViolationError("displaced set must be non-empty")
    if index < 2:
        raise ContractViolationError("cascades start below the front that absorbed the insert")
    if index > len(fs.fronts) + 1:
        raise ContractViolationError(
            f"front index {index} is beyond the last front ({len(fs.fronts)})"
        )
    fs._ids.update(sol.id for sol in displaced)  # no-op when they came from fs

    while True:
        _require_antichain(displaced)
        if index == len(fs.fronts) + 1:
            fs.fronts.append(displaced)
            return

        front = fs.fronts[index - 1]
        width = len(displaced)
        kept: list[Solution] = []
        for sol in front:
            count = 0
            for j in range(width):
                if dom_nature(displaced[j], sol, counter) == 0:
                    count += 1
            if count == width:
                displaced.append(sol)
            else:
                kept.append(sol)

        if len(displaced) == width:
            # nothing promoted: the displaced set takes this rank, all lower fronts shift
            fs.fronts.insert(index - 1, displaced)
            return
        fs.fronts[index - 1] = displaced
        if not kept:
            return
        displaced = kept
        index += 1


def _place_displaced(fs: FrontSet, displaced: list[Solution], index: int, counter: Counter) -> None:
    """Push the set displaced from front ``index`` (which now holds the new
    solution) down to its resting place."""
    if index == len(fs.fronts):
        fs.fronts.append(displaced)
    elif len(fs.fronts[index - 1]) == 1:
        # the new solution dominated its whole front: ranks below shift by one as-is
        fs.fronts.insert(index, displaced)
    else:
        update_insert(fs, displaced, index + 1, counter)


def insert_linear(fs: FrontSet, new: Solution, counter: Counter) -> None:
    """Insert ``new`` by scanning fronts best-first.

    Per front: a solution dominating ``new`` sends it to the next front after
    one witness; ``new`` dominating a solution triggers collection of every
    dominated member and a downward cascade; non-domination with the whole
    front merges ``new`` there.  Dominated by all fronts, it becomes the new
    last front.
    """
    _check_insertable(fs, new)
    for index in range(1, len(fs.fronts) + 1):
        front = fs.fronts[index - 1]
        witness = 0
        pushed_down = False
        for pos, sol in enumerate(front, 1):
            nat = dom_nature(new, sol, counter)
            if nat == 1:
                witness = pos
                break
            if nat == -1:
                pushed_down = True
                break
        else:
            front.append(new)
            fs._ids.add(new.id)
            return
        if pushed_down:
            continue
        displaced = [front.pop(witness - 1)]
        dom_set(front, new, witness, displaced, counter)
        front.append(new)
        fs._ids.add(new.id)
        _place_displaced(fs, displaced, index, counter)
        return
    fs.fronts.append([new])
    fs._ids.add(new.id)


def locate_sequential(fs: FrontSet, sol: Solution, counter: Counter) -> Position | None:
    """Front-by-front scan for the first stored solution identical to ``sol``.

    A dominance witness in either direction rules the whole front out (fronts
    are antichains), so the scan jumps to the next front after one hit.
    """
    for f_index, front in enumerate(fs.fronts, 1):
        for s_index, stored in enumerate(front, 1):
            rel = check_dom(sol, stored, counter)
            if rel is DomRelation.IDENTICAL:
                return Position(f_index, s_index)
            if rel is not DomRelation.NON_DOMINATED:
                break
    return None


def update_delete(fs: FrontSet, index: int, counter: Counter) -> None:
    """Promote into front ``index`` every next-front member that is
    non-dominated with its pre-promotion occupants, continuing downward
    while the promotions keep opening holes."""
    if not 1 <= index < len(fs.fronts):
        raise IndexError(f"front index {index} out of range for a delete cascade")
    while True:
        upper = fs.fronts[index - 1]
        lower = fs.fronts[index]
        width = len(upper)
        kept: list[Solution] = []
        for sol in lower:
            count = 0
            for j in range(width):
                if dom_nature(sol, upper[j], counter) == 0:
                    count += 1
            if count == width:
                upper.append(sol)  # promoted members never block each other: one former front
            else:
                kept.append(sol)

        if not kept:
            # the whole next front moved up; ranks below collapse by one
            fs.fronts.pop(index)
            return
        fs.fronts[index] = kept
        if len(upper) == width:
            return
        index += 1
        if index >= len(fs.fronts):
            return


def delete(fs: FrontSet, sol: Solution, strategy: str, counter: Counter) -> None:
    """Remove the stored solution identical to ``sol`` and restore validity.

    ``strategy`` picks the search: ``"sequential"`` scans fronts in order,
    ``"tree"`` binary-searches over front ranks.  Deleting from the last
    front costs nothing further; an emptied front is dropped outright and
    lower ranks renumber; otherwise the promotion cascade runs from the
    source front.
    """
    if strategy == "sequential":
        pos = locate_sequential(fs, sol, counter)
    elif strategy == "tree":
        from ndfronts.dbst import lookup_tree  # deferred: dbst builds on this module

        pos = lookup_tree(fs, sol, counter)
    else:
        raise ValueError(f"unknown delete strategy {strategy!r}")
    if pos is None:
        raise MissingSolutionError(sol.id)

    front = fs.fronts[pos.f_index - 1]
    removed = front.pop(pos.s_index - 1)
    fs._ids.discard(removed.id)
    if not front:
        fs.fronts.pop(pos.f_index - 1)
        return
    if pos.f_index < len(fs.fronts):
        update_delete(fs, pos.f_index, counter)
