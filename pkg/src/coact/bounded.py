"""Radius-bounded congruence search over acts of computable (infinite) monoids.

From an element ``x`` one rewriting step uses a pair ``(c, d)`` of the
symmetric closure and a multiplier ``t`` with ``x = c*t``, landing on ``d*t``.
The search stays inside ``ball(radius)``; a class is reported complete only
when nothing was pruned and the act finds every left divisor.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .acts import ComputableRegularAct
from .computable import ComputableMonoid
from .congruence import HSequenceWitness, symmetric_closure
from .monoid import Verdict


class BoundError(ValueError):
    pass


def _as_act(A):
    if isinstance(A, ComputableMonoid):
        return ComputableRegularAct(A)
    return A


def _within(A, x, radius: int) -> bool:
    n = A.length(x, radius)
    return n is not None and n <= radius


@dataclass(frozen=True)
class BoundedClass:
    start: object
    members: frozenset
    complete: bool
    radius: int
    pruned: int

    def __contains__(self, x) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class BoundedRelation:
    verdict: Verdict
    witness: Optional[HSequenceWitness]
    complete: bool
    explored: int


def _search(A, H, a, radius: int, target=None, max_nodes: int = 200_000):
    A = _as_act(A)
    if not _within(A, a, radius):
        raise BoundError(f"{A.label(a)} lies outside ball({radius})")
    hbar = symmetric_closure(H)
    prev = {a: None}
    queue = deque([a])
    pruned = 0
    stopped = False
    while queue:
        x = queue.popleft()
        if x == target:
            stopped = True
            break
        for k, (c, d) in enumerate(hbar):
            for t in A.left_divisors(c, x, radius):
                y = A.act(d, t)
                if y in prev:
                    continue
                if not _within(A, y, radius) or len(prev) >= max_nodes:
                    pruned += 1
                    continue
                prev[y] = (x, k, t)
                queue.append(y)
    exhaustive = not stopped and pruned == 0 and A.left_division_exact
    return A, hbar, prev, pruned, exhaustive


def saturated_class(A, H: Iterable, a, radius: int, max_nodes: int = 200_000) -> BoundedClass:
    """Every element reachable from ``a`` by rewriting inside ``ball(radius)``."""
    H = [tuple(p) for p in H]
    _, _, prev, pruned, exhaustive = _search(A, H, a, radius, max_nodes=max_nodes)
    return BoundedClass(a, frozenset(prev), exhaustive, radius, pruned)


def bounded_relation(A, H: Iterable, a, b, radius: int, max_nodes: int = 200_000) -> BoundedRelation:
    """TRUE with a replayable witness, FALSE only when the class of ``a`` is
    provably complete, otherwise UNKNOWN at this radius."""
    H = [tuple(p) for p in H]
    A = _as_act(A)
    if not _within(A, b, radius):
        raise BoundError(f"{A.label(b)} lies outside ball({radius})")
    A, hbar, prev, pruned, exhaustive = _search(A, H, a, radius, target=b, max_nodes=max_nodes)
    if b in prev:
        steps = []
        x = b
        while prev[x] is not None:
            px, k, t = prev[x]
            steps.append((k, t))
            x = px
        w = HSequenceWitness(tuple(hbar), a, b, tuple(reversed(steps)))
        return BoundedRelation(Verdict.TRUE, w, exhaustive, len(prev))
    if exhaustive:
        return BoundedRelation(Verdict.FALSE, None, True, len(prev))
    return BoundedRelation(Verdict.UNKNOWN, None, False, len(prev))
