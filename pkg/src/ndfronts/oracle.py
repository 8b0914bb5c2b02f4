"""Ground-truth full non-dominated sort used to verify every incremental result.

Deliberately naive: the whole pairwise dominance matrix is computed up front
with no pruning, then levels are peeled off.  It shares no code path with the
incremental update machinery, which makes it a trustworthy referee.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ndfronts.core import Counter, DimensionMismatchError, DuplicateIdError, FrontSet, Solution


def full_sort(
    population: Sequence[Solution],
    m: int | None = None,
    counter: Counter | None = None,
) -> FrontSet:
    """Sort ``population`` into non-domination levels from scratch.

    Front 1 is the non-dominated subset of the population, front k+1 the
    non-dominated subset of what remains after removing fronts 1..k.  Input
    order is preserved inside each front.  ``m`` is only needed to type an
    empty population (defaults to 2).  When a ``counter`` is given it is
    bumped once per unordered solution pair, i.e. by n*(n-1)/2.
    """
    sols = list(population)
    ids = {s.id for s in sols}
    if len(ids) != len(sols):
        raise DuplicateIdError("population contains repeated solution ids")
    if not sols:
        return FrontSet(m if m is not None else 2)
    m_eff = sols[0].m
    if m is not None and m != m_eff:
        raise DimensionMismatchError(f"population has M={m_eff}, expected M={m}")
    if any(s.m != m_eff for s in sols):
        raise DimensionMismatchError("population mixes objective counts")

    obj = np.asarray([s.objectives for s in sols], dtype=float)
    n = len(sols)
    # dom[i, j] is True iff solution i dominates solution j
    less_eq = (obj[:, None, :] <= obj[None, :, :]).all(axis=2)
    less = (obj[:, None, :] < obj[None, :, :]).any(axis=2)
    dom = less_eq & less
    if counter is not None:
        counter.pair_compares += n * (n - 1) // 2

    # peel levels off the precomputed matrix by dominator counts
    fronts: list[list[Solution]] = []
    dominator_count = dom.sum(axis=0)
    alive = np.ones(n, dtype=bool)
    remaining = n
    while remaining:
        members = np.flatnonzero(alive & (dominator_count == 0))
        if members.size == 0:  # impossible for a strict partial order
            raise AssertionError("dominance relation produced a cycle")
        fronts.append([sols[i] for i in members])
        alive[members] = False
        remaining -= members.size
        dominator_count -= dom[members].sum(axis=0)
    return FrontSet(m_eff, fronts)


def same_partition(a: FrontSet, b: FrontSet) -> bool:
    """True iff both partitions have the same front count and, level by level,
    the same id sets.  Order inside a front is irrelevant."""
    return a.level_ids() == b.level_ids()
