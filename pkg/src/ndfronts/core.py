"""Domain types and dominance primitives for non-domination level maintenance.

Objective vectors follow the minimization convention throughout: a solution
dominates another when it is no worse in every objective and strictly better
in at least one.  Maximization objectives are handled by negating values at
ingestion, never here.  Objective equality is exact floating-point equality;
there is no epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class DimensionMismatchError(ValueError):
    """Two solutions (or a solution and a front set) disagree on objective count."""


class DuplicateIdError(ValueError):
    """A solution id is already stored."""


class MissingSolutionError(KeyError):
    """A delete target is not stored."""


class ContractViolationError(ValueError):
    """An operation was handed input that breaks its preconditions."""


@dataclass(frozen=True)
class Solution:
    """A point with a stable opaque id and M >= 2 finite objective values."""

    id: str
    objectives: tuple[float, ...]

    def __post_init__(self) -> None:
        objs = tuple(float(v) for v in self.objectives)
        if len(objs) < 2:
            raise ValueError(f"solution {self.id!r}: need at least 2 objectives, got {len(objs)}")
        for v in objs:
            if not math.isfinite(v):
                raise ValueError(f"solution {self.id!r}: objectives must be finite")
        object.__setattr__(self, "objectives", objs)

    @property
    def m(self) -> int:
        return len(self.objectives)


class DomRelation(Enum):
    """Outcome of comparing solution A against solution B."""

    DOMINATES = 1
    DOMINATED_BY = -1
    NON_DOMINATED = 0
    IDENTICAL = 2


class Counter:
    """Monotone tally of solution-pair dominance comparisons.

    Each call to :func:`dom_nature` or :func:`check_dom` bumps the tally by
    exactly one, no matter how many objectives the pair carries.  Reset it
    between operations to read per-operation costs.
    """

    __slots__ = ("pair_compares",)

    def __init__(self) -> None:
        self.pair_compares = 0

    def bump(self) -> None:
        self.pair_compares += 1

    def reset(self) -> None:
        self.pair_compares = 0

    def __repr__(self) -> str:
        return f"Counter(pair_compares={self.pair_compares})"


def _flags(a: Solution, b: Solution) -> tuple[bool, bool, int]:
    if len(a.objectives) != len(b.objectives):
        raise DimensionMismatchError(
            f"cannot compare {a.id!r} (M={a.m}) with {b.id!r} (M={b.m})"
        )
    a_better = b_better = False
    equal = 0
    for x, y in zip(a.objectives, b.objectives):
        if x < y:
            a_better = True
        elif y < x:
            b_better = True
        else:
            equal += 1
    return a_better, b_better, equal


def dom_nature(a: Solution, b: Solution, counter: Counter) -> int:
    """Three-way dominance test: 1 if ``a`` dominates ``b``, -1 if ``b``
    dominates ``a``, 0 otherwise.

    Identical vectors cannot dominate each other and yield 0.
    """
    a_better, b_better, _ = _flags(a, b)
    counter.bump()
    if a_better and not b_better:
        return 1
    if b_better and not a_better:
        return -1
    return 0


def check_dom(a: Solution, b: Solution, counter: Counter) -> DomRelation:
    """Four-way dominance test that additionally distinguishes identical vectors."""
    a_better, b_better, equal = _flags(a, b)
    counter.bump()
    if a_better and not b_better:
        return DomRelation.DOMINATES
    if b_better and not a_better:
        return DomRelation.DOMINATED_BY
    if equal == len(a.objectives):
        return DomRelation.IDENTICAL
    return DomRelation.NON_DOMINATED


class FrontSet:
    """Ordered partition of solutions into fronts of decreasing dominance.

    ``fronts[0]`` is the rank-1 (best) front.  The update operations mutate
    the structure in place; at most one mutator may act on a FrontSet at a
    time, while read-only traversals may share a snapshot freely.
    """

    __slots__ = ("m", "fronts", "_ids")

    def __init__(self, m: int, fronts: Iterable[Iterable[Solution]] = ()) -> None:
        if m < 2:
            raise ValueError(f"need at least 2 objectives, got {m}")
        self.m = int(m)
        self.fronts: list[list[Solution]] = [list(front) for front in fronts]
        self._ids: set[str] = {sol.id for front in self.fronts for sol in front}

    @property
    def k(self) -> int:
        """Number of fronts."""
        return len(self.fronts)

    def __len__(self) -> int:
        return sum(len(front) for front in self.fronts)

    def __contains__(self, sol_id: str) -> bool:
        return sol_id in self._ids

    def solutions(self) -> Iterator[Solution]:
        """All stored solutions, best front first, in front order."""
        for front in self.fronts:
            yield from front

    def level_ids(self) -> list[set[str]]:
        """Id sets per front, best first."""
        return [{sol.id for sol in front} for front in self.fronts]

    def copy(self) -> "FrontSet":
        """Independent structural copy (solutions themselves are immutable and shared)."""
        return FrontSet(self.m, self.fronts)

    def __repr__(self) -> str:
        sizes = tuple(len(front) for front in self.fronts)
        return f"FrontSet(m={self.m}, sizes={sizes})"


def validate(fs: FrontSet) -> list[str]:
    """Check every structural invariant of ``fs``.

    Returns a list of human-readable violations; an empty list means the
    partition is a valid set of non-domination levels.  Diagnostic only: it
    never raises on bad structure and does not touch any caller's counter.
    """
    problems: list[str] = []
    scratch = Counter()
    seen: dict[str, int] = {}
    dims_ok = True
    for f_index, front in enumerate(fs.fronts, 1):
        if not front:
            problems.append(f"front {f_index} is empty")
        for sol in front:
            if sol.m != fs.m:
                problems.append(
                    f"front {f_index}: {sol.id!r} has M={sol.m}, front set has M={fs.m}"
                )
                dims_ok = False
            if sol.id in seen:
                problems.append(
                    f"front {f_index}: duplicate id {sol.id!r} (also in front {seen[sol.id]})"
                )
            else:
                seen[sol.id] = f_index
    if not dims_ok:
        return problems

    for f_index, front in enumerate(fs.fronts, 1):
        for i in range(len(front)):
            for j in range(i + 1, len(front)):
                nat = dom_nature(front[i], front[j], scratch)
                if nat == 1:
                    problems.append(
                        f"front {f_index}: {front[i].id!r} dominates {front[j].id!r} within one front"
                    )
                elif nat == -1:
                    problems.append(
                        f"front {f_index}: {front[j].id!r} dominates {front[i].id!r} within one front"
                    )

    for f_index in range(2, fs.k + 1):
        above = fs.fronts[f_index - 2]
        for sol in fs.fronts[f_index - 1]:
            if not any(dom_nature(better, sol, scratch) == 1 for better in above):
                problems.append(
                    f"front {f_index}: {sol.id!r} is not dominated by any solution in front {f_index - 1}"
                )
    return problems
