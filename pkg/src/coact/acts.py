"""Right acts over monoids, free acts, and subacts (right ideals of S over itself)."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from .computable import ComputableMonoid
from .monoid import FiniteMonoid


class ActError(ValueError):
    pass


class FiniteRightAct:
    """A finite carrier ``0..size-1`` with ``action[a][s] = a*s``."""

    def __init__(self, monoid: FiniteMonoid, action, labels: Optional[Sequence[str]] = None):
        arr = np.array(action, dtype=np.int32).reshape(-1, monoid.size)
        n = arr.shape[0]
        if n and (arr.min() < 0 or arr.max() >= n):
            raise ActError("action entries out of range")
        arr.setflags(write=False)
        self.monoid = monoid
        self._action = arr
        self._rows = tuple(tuple(int(v) for v in row) for row in arr)
        if labels is None:
            labels = [str(i) for i in range(n)]
        self._labels = tuple(str(x) for x in labels)
        if len(self._labels) != n:
            raise ActError("wrong number of labels")
        self._index = {lab: i for i, lab in enumerate(self._labels)}

    @property
    def size(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def elements(self) -> range:
        return range(len(self._rows))

    @property
    def action(self) -> np.ndarray:
        return self._action

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def labels(self) -> tuple:
        return self._labels

    def act(self, a: int, s: int) -> int:
        return self._rows[a][s]

    def label(self, a: int) -> str:
        return self._labels[a]

    def index(self, label) -> int:
        if isinstance(label, (int, np.integer)) and not isinstance(label, bool):
            if 0 <= label < self.size:
                return int(label)
            raise KeyError(label)
        try:
            return self._index[str(label)]
        except KeyError:
            raise KeyError(f"unknown act element {label!r}") from None

    def orbit(self, a: int) -> frozenset:
        return frozenset(self._rows[a])

    def validate(self) -> Optional[str]:
        """None if the act laws hold, else a description of the first failure."""
        m = self.monoid
        one = m.identity
        for a in self.elements:
            if self._rows[a][one] != a:
                return f"a*1 != a at {self.label(a)}"
        for a in self.elements:
            ra = self._rows[a]
            for s in m.elements:
                ras = self._rows[ra[s]]
                for t in m.elements:
                    if ras[t] != ra[m.mul(s, t)]:
                        return f"(a*s)*t != a*(st) at ({self.label(a)}, {m.label(s)}, {m.label(t)})"
        return None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, monoid={self.monoid!r})"


def regular_act(m: FiniteMonoid) -> FiniteRightAct:
    """``m`` acting on itself by right multiplication."""
    cached = getattr(m, "_regular_act", None)
    if cached is None:
        cached = FiniteRightAct(m, m.table, labels=m.labels)
        m._regular_act = cached
    return cached


class FreeAct(FiniteRightAct):
    """``X x S`` with ``(x, s)*t = (x, st)``; ``(x, s)`` sits at ``pos(x)*|S| + s``."""

    def __init__(self, monoid: FiniteMonoid, basis: Sequence):
        basis = tuple(basis)
        if len(set(map(str, basis))) != len(basis):
            raise ActError("basis symbols must be distinct")
        n = monoid.size
        action = [[b * n + monoid.mul(s, t) for t in monoid.elements]
                  for b in range(len(basis)) for s in monoid.elements]
        labels = [f"({x},{monoid.label(s)})" for x in basis for s in monoid.elements]
        super().__init__(monoid, action, labels)
        self.basis = basis
        self._bpos = {str(x): k for k, x in enumerate(basis)}

    def element(self, x, s=None) -> int:
        s = self.monoid.identity if s is None else self.monoid.index(s)
        return self._bpos[str(x)] * self.monoid.size + s

    def decode(self, a: int) -> tuple:
        b, s = divmod(a, self.monoid.size)
        return self.basis[b], s


class ComputableFreeAct:
    """Free act over a computable monoid; elements are ``(x, s)`` pairs."""

    def __init__(self, monoid: ComputableMonoid, basis: Sequence):
        self.monoid = monoid
        self.basis = tuple(basis)
        self.left_division_exact = monoid.left_division_exact

    def act(self, a, t):
        return (a[0], self.monoid.multiply(a[1], t))

    def label(self, a) -> str:
        return f"({a[0]},{self.monoid.label(a[1])})"

    def length(self, a, limit: int = 64):
        return self.monoid.length(a[1], limit)

    def left_divisors(self, c, a, radius: int):
        if c[0] != a[0]:
            return
        yield from self.monoid.left_divisors(c[1], a[1], radius)


class ComputableRegularAct:
    """A computable monoid acting on itself."""

    def __init__(self, monoid: ComputableMonoid):
        self.monoid = monoid
        self.left_division_exact = monoid.left_division_exact

    def act(self, a, t):
        return self.monoid.multiply(a, t)

    def label(self, a) -> str:
        return self.monoid.label(a)

    def length(self, a, limit: int = 64):
        return self.monoid.length(a, limit)

    def left_divisors(self, c, a, radius: int):
        return self.monoid.left_divisors(c, a, radius)


def free_act(m, basis: Sequence):
    if isinstance(m, ComputableMonoid):
        return ComputableFreeAct(m, basis)
    return FreeAct(m, basis)


# --- subacts -----------------------------------------------------------------

def subact_generated(A: FiniteRightAct, gens: Iterable[int]) -> frozenset:
    out = set()
    for g in gens:
        out.update(A.rows[g])
    return frozenset(out)


def is_subact(A: FiniteRightAct, U: Iterable[int]) -> bool:
    U = set(U)
    return all(A.act(u, s) in U for u in U for s in A.monoid.elements)


def subact_intersection(A: FiniteRightAct, U: Iterable[int], V: Iterable[int]) -> frozenset:
    W = frozenset(U) & frozenset(V)
    if not is_subact(A, W):
        raise ActError("intersection of subacts is not closed; inputs are not subacts")
    return W


def minimal_generating_set(A: FiniteRightAct, U: Iterable[int]) -> list[int]:
    """Least-index representatives of the maximal cyclic subacts ``aS`` inside ``U``.

    Elements ``a, b`` with ``aS = bS`` are interchangeable; the result keeps
    one per such class, among those classes not reachable from another.
    """
    U = sorted(set(U))
    if not is_subact(A, U):
        raise ActError("not a subact")
    orbits = {u: A.orbit(u) for u in U}
    chosen = []
    seen_orbits = set()
    for u in U:
        o = orbits[u]
        if o in seen_orbits:
            continue
        if any(o < orbits[v] for v in U):
            continue
        seen_orbits.add(o)
        chosen.append(u)
    return chosen


def is_minimal_generating_set(A: FiniteRightAct, U: Iterable[int], gens: Sequence[int]) -> bool:
    U = frozenset(U)
    if subact_generated(A, gens) != U:
        return False
    return all(subact_generated(A, [g for g in gens if g != h]) != U for h in gens)


def principal_right_ideal(m: FiniteMonoid, a: int) -> frozenset:
    return frozenset(m.rows[a])


def is_right_ideal(m: FiniteMonoid, I: Iterable[int]) -> bool:
    return is_subact(regular_act(m), I)


def ideal_quotient(m: FiniteMonoid, I: Iterable[int], x: int) -> frozenset:
    """``(I, x) = {t : xt in I}``; a right ideal whenever ``I`` is one (possibly empty)."""
    I = frozenset(I)
    if not is_right_ideal(m, I):
        raise ActError("not a right ideal")
    row = m.rows[x]
    return frozenset(t for t in m.elements if row[t] in I)


def rho_closure(m: FiniteMonoid, I: Iterable[int], rho) -> frozenset:
    """Union of the classes of the right congruence ``rho`` that meet ``I``."""
    I = frozenset(I)
    if not is_right_ideal(m, I):
        raise ActError("not a right ideal")
    reps = {rho.rep(a) for a in I}
    return frozenset(s for s in m.elements if rho.rep(s) in reps)
