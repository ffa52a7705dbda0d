"""Brute-force reference computations, kept independent of the closure kernel."""
from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .acts import FiniteRightAct
from .monoid import FiniteMonoid, partition_from_keys


def hsequence_partition(A: FiniteRightAct, H: Iterable[tuple]) -> tuple:
    """Connected components of the graph with edges ``c*t -- d*t``, ``(c,d)`` in H, ``t`` in S.

    An H-sequence is exactly a path in this graph, so the components are the
    classes of the generated congruence.
    """
    adj = [set() for _ in A.elements]
    for c, d in H:
        rc, rd = A.rows[c], A.rows[d]
        for t in A.monoid.elements:
            x, y = rc[t], rd[t]
            adj[x].add(y)
            adj[y].add(x)
    comp = [-1] * A.size
    for s in A.elements:
        if comp[s] >= 0:
            continue
        comp[s] = s
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if comp[y] < 0:
                    comp[y] = s
                    stack.append(y)
    return tuple(comp)


def relation_partition(S: FiniteMonoid, related) -> tuple:
    """Partition of S from a pairwise equivalence predicate (quadratic scan)."""
    reps = []
    for u in S.elements:
        for r in sorted(set(reps)):
            if related(r, u):
                reps.append(r)
                break
        else:
            reps.append(u)
    return tuple(reps)


def annihilator_partition(A: FiniteRightAct, a: int, rep=None) -> tuple:
    """``{(u, v) : au = av}`` (or ``au rho av`` when ``rep`` gives class keys), by direct scan."""
    rep = rep or (lambda x: x)
    return partition_from_keys([rep(A.act(a, u)) for u in A.monoid.elements])


def right_ideals(S: FiniteMonoid, limit: int = 4096) -> list[frozenset]:
    """All right ideals of S (including the empty one), as unions of principal ones."""
    principal = {frozenset(S.rows[a]) for a in S.elements}
    found = {frozenset()}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for I in frontier:
            for P in principal:
                J = I | P
                if J not in found:
                    found.add(J)
                    nxt.append(J)
                    if len(found) > limit:
                        raise ValueError("too many right ideals to enumerate")
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def closed_subsets(A: FiniteRightAct, max_size: int = 12) -> list[frozenset]:
    """Every subset of a small act closed under the action (subacts), by subset scan."""
    if A.size > max_size:
        raise ValueError("act too large for subset enumeration")
    out = []
    els = list(A.elements)
    for k in range(len(els) + 1):
        for U in combinations(els, k):
            U = frozenset(U)
            if all(A.act(u, s) in U for u in U for s in A.monoid.elements):
                out.append(U)
    return out


def generated_subact(A: FiniteRightAct, gens: Sequence[int]) -> frozenset:
    """Closure of ``gens`` under the action by fixpoint iteration."""
    seen = set(gens)
    stack = list(gens)
    while stack:
        x = stack.pop()
        for s in A.monoid.elements:
            y = A.act(x, s)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)
