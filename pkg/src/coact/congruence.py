"""Congruences on finite right acts: closure of pair sets, H-sequence witnesses,
quotients, annihilators, and extension/restriction along submonoids."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import kernels
from .acts import ActError, FiniteRightAct, regular_act
from .constructions import submonoid
from .monoid import FiniteMonoid, partition_classes, partition_from_keys


def symmetric_closure(H: Iterable[tuple]) -> list[tuple]:
    """``H`` followed by the reversed pairs of ``H`` (order fixes witness pair indices)."""
    H = [tuple(p) for p in H]
    return H + [(d, c) for c, d in H]


def resolve_pairs(A: FiniteRightAct, H: Iterable) -> list[tuple]:
    out = []
    for p in H:
        c, d = p
        out.append((A.index(c), A.index(d)))
    return out


@dataclass(frozen=True)
class HSequenceWitness:
    """Steps ``(k, t)`` over ``pairs`` (the symmetric closure of H) with
    ``start = c_1 t_1, d_1 t_1 = c_2 t_2, ..., d_n t_n = end``."""

    pairs: tuple
    start: object
    end: object
    steps: tuple

    def __len__(self) -> int:
        return len(self.steps)

    def chain(self, act) -> list[tuple]:
        """``(c_k t_k, d_k t_k)`` for each step."""
        out = []
        for k, t in self.steps:
            c, d = self.pairs[k]
            out.append((act(c, t), act(d, t)))
        return out

    def replay(self, act) -> bool:
        """Check the chain against the act multiplication ``act(x, t)``."""
        cur = self.start
        for k, t in self.steps:
            c, d = self.pairs[k]
            if act(c, t) != cur:
                return False
            cur = act(d, t)
        return cur == self.end


class ActCongruence:
    """A partition of a finite act's carrier, with least-index representatives."""

    def __init__(self, act: FiniteRightAct, reps: Sequence[int], pairs: Sequence[tuple] = (),
                 edges: Optional[np.ndarray] = None):
        self.act = act
        self._reps = tuple(int(r) for r in reps)
        if len(self._reps) != act.size:
            raise ActError("partition size does not match the act")
        self.pairs = tuple(tuple(p) for p in pairs)
        self._edges = edges

    @classmethod
    def from_keys(cls, act: FiniteRightAct, keys: Sequence) -> "ActCongruence":
        return cls(act, partition_from_keys(keys))

    @property
    def reps(self) -> tuple:
        return self._reps

    def rep(self, a: int) -> int:
        return self._reps[a]

    def related(self, a: int, b: int) -> bool:
        return self._reps[a] == self._reps[b]

    def classes(self) -> list[tuple]:
        return partition_classes(self._reps)

    def class_of(self, a: int) -> tuple:
        r = self._reps[a]
        return tuple(i for i, c in enumerate(self._reps) if c == r)

    @property
    def num_classes(self) -> int:
        return len(set(self._reps))

    def representatives(self) -> list[int]:
        return sorted(set(self._reps))

    def is_universal(self) -> bool:
        return all(r == 0 for r in self._reps)

    def is_identity(self) -> bool:
        return all(r == i for i, r in enumerate(self._reps))

    def is_congruence(self) -> Optional[tuple]:
        """None if compatible with the action, else ``(a, b, s)`` with a~b, as !~ bs."""
        rows = self.act.rows
        reps = self._reps
        for a in self.act.elements:
            r = reps[a]
            if r == a:
                continue
            for s in self.act.monoid.elements:
                if reps[rows[a][s]] != reps[rows[r][s]]:
                    return (a, r, s)
        return None

    def refines(self, other: "ActCongruence") -> bool:
        seen: dict = {}
        for c, d in zip(self._reps, other._reps):
            if seen.setdefault(c, d) != d:
                return False
        return True

    def contains_pairs(self, pairs: Iterable[tuple]) -> bool:
        return all(self.related(c, d) for c, d in pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ActCongruence):
            return NotImplemented
        return self.act.size == other.act.size and self._reps == other._reps

    def __hash__(self) -> int:
        return hash(self._reps)

    def __repr__(self) -> str:
        return f"ActCongruence({self.num_classes} classes on {self.act.size} elements)"

    def witness(self, a: int, b: int) -> Optional[HSequenceWitness]:
        """Replayable H-sequence from ``a`` to ``b``, or None if unrelated."""
        hbar = tuple(symmetric_closure(self.pairs))
        if a == b:
            return HSequenceWitness(hbar, a, b, ())
        if not self.related(a, b):
            return None
        if self._edges is None:
            raise ActError("congruence was not built by closure; no witness forest recorded")
        nh = len(self.pairs)
        adj: dict = {}
        for x, y, k, t in self._edges.tolist():
            adj.setdefault(x, []).append((y, k, t))
            adj.setdefault(y, []).append((x, k + nh, t))
        prev = {a: None}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y, k, t in adj.get(x, ()):
                if y not in prev:
                    prev[y] = (x, k, t)
                    queue.append(y)
        steps = []
        x = b
        while prev[x] is not None:
            px, k, t = prev[x]
            steps.append((k, t))
            x = px
        return HSequenceWitness(hbar, a, b, tuple(reversed(steps)))


def congruence_closure(A: FiniteRightAct, H: Iterable, generators: Optional[Sequence] = None) -> ActCongruence:
    """Least congruence on ``A`` containing ``H``.

    Merges are propagated by every monoid element, or only by ``generators``
    of the monoid when these are supplied.
    """
    pairs = resolve_pairs(A, H)
    m = A.monoid
    gens = list(m.elements) if generators is None else [m.index(g) for g in generators]
    parr = np.array(pairs, dtype=np.int32).reshape(-1, 2)
    labels, edges = kernels.closure(
        np.ascontiguousarray(A.action, dtype=np.int32),
        np.ascontiguousarray(m.table, dtype=np.int32),
        int(m.identity),
        np.ascontiguousarray(parr),
        np.ascontiguousarray(np.array(gens, dtype=np.int32)),
    )
    return ActCongruence(A, labels, pairs, edges)


def right_congruence(m: FiniteMonoid, H: Iterable, generators=None) -> ActCongruence:
    """Right congruence on ``m`` generated by ``H``."""
    return congruence_closure(regular_act(m), H, generators)


def h_sequence_witness(A: FiniteRightAct, H: Iterable, a, b) -> Optional[HSequenceWitness]:
    rho = congruence_closure(A, H)
    return rho.witness(A.index(a), A.index(b))


class QuotientAct(FiniteRightAct):
    """``A/rho``: class ``k`` is the k-th class in order of least representative."""

    def __init__(self, A: FiniteRightAct, rho: ActCongruence):
        bad = rho.is_congruence()
        if bad is not None:
            raise ActError(f"not a congruence: {bad}")
        reps = rho.representatives()
        pos = {r: k for k, r in enumerate(reps)}
        self.base = A
        self.rho = rho
        self.class_index = tuple(pos[rho.rep(x)] for x in A.elements)
        self.class_rep = tuple(reps)
        action = [[pos[rho.rep(A.act(r, s))] for s in A.monoid.elements] for r in reps]
        super().__init__(A.monoid, action, labels=[f"[{A.label(r)}]" for r in reps])

    def cls(self, x: int) -> int:
        return self.class_index[x]


def quotient_act(A: FiniteRightAct, rho: ActCongruence) -> QuotientAct:
    return QuotientAct(A, rho)


def annihilator(A: FiniteRightAct, a: int) -> ActCongruence:
    """``ann(a) = {(u, v) : au = av}`` as a right congruence on the monoid."""
    S = regular_act(A.monoid)
    row = A.rows[a]
    return ActCongruence.from_keys(S, [row[u] for u in S.elements])


def ann_of_class(A: FiniteRightAct, rho: ActCongruence, a: int) -> ActCongruence:
    """``ann(a rho) = {(u, v) : au rho av}``."""
    S = regular_act(A.monoid)
    row = A.rows[a]
    return ActCongruence.from_keys(S, [rho.rep(row[u]) for u in S.elements])


def star_generators(rel: ActCongruence) -> list[tuple]:
    """Pairs ``(rep, x)`` joining each element to its class representative."""
    return [(r, x) for x, r in enumerate(rel.reps) if r != x]


def irredundant_generators(rel: ActCongruence) -> list[tuple]:
    """A generating set of ``rel`` (as a congruence) from which no pair can be dropped.

    Built greedily from the star pairs in index order, then pruned.
    """
    A = rel.act
    chosen: list = []
    current = congruence_closure(A, [])
    for p in star_generators(rel):
        if not current.related(*p):
            chosen.append(p)
            current = congruence_closure(A, chosen)
    if current != rel:
        raise ActError("relation is not a congruence")
    k = 0
    while k < len(chosen):
        trial = chosen[:k] + chosen[k + 1:]
        if congruence_closure(A, trial) == rel:
            chosen = trial
        else:
            k += 1
    return chosen


def restrict_to(rel: ActCongruence, elements: Sequence[int]) -> tuple:
    """The partition induced on ``elements`` (positional, least position per class)."""
    return partition_from_keys([rel.rep(x) for x in elements])


def extend_congruence(S: FiniteMonoid, pairs: Iterable) -> ActCongruence:
    """``rho^S``: the right congruence on S generated by pairs given in S's indices."""
    return right_congruence(S, pairs)


def restrict_congruence(rho_S: ActCongruence, T: Sequence[int]) -> tuple:
    return restrict_to(rho_S, sorted(T))


@dataclass(frozen=True)
class SRCEPResult:
    restriction_exact: bool
    union_of_classes: bool
    restriction_witness: Optional[tuple]
    class_witness: Optional[tuple]

    @property
    def holds(self) -> bool:
        return self.restriction_exact and self.union_of_classes


def srcep_check(S: FiniteMonoid, T: Iterable[int], pairs: Iterable) -> SRCEPResult:
    """Compare ``<pairs>_T`` against ``<pairs>_S`` restricted to ``T``.

    ``T`` is a subsemigroup of ``S`` with its own identity; ``pairs`` are
    given by their indices in ``S`` and must lie in ``T x T``.
    """
    sub, embed = submonoid(S, T)
    pos = {x: k for k, x in enumerate(embed)}
    pairs = [(S.index(c), S.index(d)) for c, d in pairs]
    for c, d in pairs:
        if c not in pos or d not in pos:
            raise ActError("generating pairs must lie in T x T")
    rho_T = right_congruence(sub, [(pos[c], pos[d]) for c, d in pairs])
    rho_S = extend_congruence(S, pairs)
    rw = cw = None
    for x in embed:
        for y in embed:
            if rho_T.related(pos[x], pos[y]) != rho_S.related(x, y):
                rw = (x, y)
                break
        if rw:
            break
    for x in embed:
        for y in rho_S.class_of(x):
            if y not in pos:
                cw = (x, y)
                break
        if cw:
            break
    return SRCEPResult(rw is None, cw is None, rw, cw)
