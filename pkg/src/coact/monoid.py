"""Finite monoids given by Cayley tables, and their idempotent/Green structure."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np


class MonoidError(ValueError):
    pass


class FiniteMonoid:
    """A monoid on ``0..size-1`` with multiplication given by ``table``.

    Instances are immutable: the table is stored as a read-only numpy array
    and a tuple-of-tuples copy used for fast scalar lookups.
    """

    def __init__(self, table, identity: int, zero: Optional[int] = None,
                 labels: Optional[Sequence[str]] = None):
        arr = np.array(table, dtype=np.int32)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise MonoidError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise MonoidError("table entries out of range")
        if not 0 <= identity < n:
            raise MonoidError("identity out of range")
        if zero is not None and not 0 <= zero < n:
            raise MonoidError("zero out of range")
        arr.setflags(write=False)
        self._table = arr
        self._rows = tuple(tuple(int(x) for x in row) for row in arr)
        self._identity = int(identity)
        self._zero = None if zero is None else int(zero)
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise MonoidError("wrong number of labels")
        if len(set(labels)) != n:
            raise MonoidError("labels must be unique")
        self._labels = labels
        self._index = {lab: i for i, lab in enumerate(labels)}

    @property
    def size(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def table(self) -> np.ndarray:
        return self._table

    @property
    def rows(self) -> tuple:
        return self._rows

    @property
    def identity(self) -> int:
        return self._identity

    @property
    def zero(self) -> Optional[int]:
        return self._zero

    @property
    def labels(self) -> tuple:
        return self._labels

    @property
    def elements(self) -> range:
        return range(len(self._rows))

    def mul(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def product(self, *xs: int) -> int:
        r = self._identity
        for x in xs:
            r = self._rows[r][x]
        return r

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
            raise KeyError(f"unknown element label {label!r}") from None

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size})"


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def validate(m: FiniteMonoid) -> Validation:
    """Check associativity, both identity laws and the zero law.

    Returns the first violation found, scanning triples in index order.
    """
    rows = m.rows
    n = m.size
    one = m.identity
    for x in range(n):
        if rows[one][x] != x or rows[x][one] != x:
            return Validation(False, f"identity law fails at {m.label(x)}", (x,))
    if m.zero is not None:
        z = m.zero
        for x in range(n):
            if rows[z][x] != z or rows[x][z] != z:
                return Validation(False, f"zero law fails at {m.label(x)}", (x,))
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            ab = ra[b]
            rab = rows[ab]
            rb = rows[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    return Validation(
                        False,
                        f"associativity fails at ({m.label(a)}, {m.label(b)}, {m.label(c)})",
                        (a, b, c))
    return Validation(True)


def idempotents(m: FiniteMonoid) -> list[int]:
    return [e for e in m.elements if m.mul(e, e) == e]


def natural_order(m: FiniteMonoid, e: int, f: int) -> bool:
    """``e <= f`` in the natural partial order on idempotents."""
    for x in (e, f):
        if m.mul(x, x) != x:
            raise MonoidError(f"{m.label(x)} is not idempotent")
    return m.mul(e, f) == e and m.mul(f, e) == e


def right_ideal_of(m: FiniteMonoid, a: int) -> frozenset:
    return frozenset(m.rows[a])


def left_ideal_of(m: FiniteMonoid, a: int) -> frozenset:
    return frozenset(m.rows[s][a] for s in m.elements)


def two_sided_ideal_of(m: FiniteMonoid, a: int) -> frozenset:
    rows = m.rows
    return frozenset(rows[rows[s][a]][t] for s in m.elements for t in m.elements)


def partition_from_keys(keys: Sequence) -> tuple:
    """Class id (least member index) per element, for elements grouped by key."""
    first: dict = {}
    out = []
    for i, k in enumerate(keys):
        out.append(first.setdefault(k, i))
    return tuple(out)


def partition_meet(p: Sequence[int], q: Sequence[int]) -> tuple:
    return partition_from_keys(list(zip(p, q)))


def partition_join(p: Sequence[int], q: Sequence[int]) -> tuple:
    n = len(p)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for i, c in enumerate(part):
            a, b = find(i), find(c)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return partition_from_keys([find(i) for i in range(n)])


def partition_classes(p: Sequence[int]) -> list[tuple]:
    groups: dict = {}
    for i, c in enumerate(p):
        groups.setdefault(c, []).append(i)
    return [tuple(v) for _, v in sorted(groups.items())]


def refines(p: Sequence[int], q: Sequence[int]) -> bool:
    """True when every class of ``p`` lies inside a class of ``q``."""
    seen: dict = {}
    for c, d in zip(p, q):
        if seen.setdefault(c, d) != d:
            return False
    return True


@dataclass(frozen=True)
class GreenStructure:
    R: tuple
    L: tuple
    H: tuple
    D: tuple
    J: tuple
    leqJ: np.ndarray = field(repr=False, compare=False)

    def classes(self, name: str) -> list[tuple]:
        return partition_classes(getattr(self, name))

    def class_of(self, name: str, a: int) -> tuple:
        part = getattr(self, name)
        return tuple(i for i, c in enumerate(part) if c == part[a])


def green(m: FiniteMonoid) -> GreenStructure:
    rights = [right_ideal_of(m, a) for a in m.elements]
    lefts = [left_ideal_of(m, a) for a in m.elements]
    twos = [two_sided_ideal_of(m, a) for a in m.elements]
    R = partition_from_keys(rights)
    L = partition_from_keys(lefts)
    H = partition_meet(R, L)
    D = partition_join(R, L)
    J = partition_from_keys(twos)
    n = m.size
    leq = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            leq[a, b] = twos[a] <= twos[b]
    leq.setflags(write=False)
    return GreenStructure(R, L, H, D, J, leq)


def non_regular_element(m: FiniteMonoid) -> Optional[int]:
    rows = m.rows
    for a in m.elements:
        ra = rows[a]
        if not any(rows[ra[b]][a] == a for b in m.elements):
            return a
    return None


def is_regular(m: FiniteMonoid) -> bool:
    return non_regular_element(m) is None


def is_inverse(m: FiniteMonoid) -> bool:
    if not is_regular(m):
        return False
    g = green(m)
    idem = idempotents(m)
    for part in (g.R, g.L):
        counts: dict = {}
        for e in idem:
            counts[part[e]] = counts.get(part[e], 0) + 1
        if any(c != 1 for c in counts.values()):
            return False
    return True


@dataclass(frozen=True)
class TildeRelations:
    E: tuple
    R: tuple
    L: tuple
    H: tuple


def tilde_relations(m: FiniteMonoid, E: Iterable[int]) -> TildeRelations:
    E = tuple(sorted(set(E)))
    for e in E:
        if m.mul(e, e) != e:
            raise MonoidError(f"{m.label(e)} is not idempotent")
    rows = m.rows
    rkeys = [tuple(rows[e][a] == a for e in E) for a in m.elements]
    lkeys = [tuple(rows[a][e] == a for e in E) for a in m.elements]
    R = partition_from_keys(rkeys)
    L = partition_from_keys(lkeys)
    return TildeRelations(E, R, L, partition_meet(R, L))


def is_right_compatible(m: FiniteMonoid, part: Sequence[int]) -> Optional[tuple]:
    """First ``(a, b, s)`` with ``a ~ b`` but ``as !~ bs``; None if compatible."""
    rows = m.rows
    for a in m.elements:
        b = part[a]
        if b == a:
            continue
        for s in m.elements:
            if part[rows[a][s]] != part[rows[b][s]]:
                return (a, b, s)
    return None


class Verdict(enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown-at-bound"

    def __bool__(self) -> bool:
        raise TypeError("Verdict is three-valued; compare against Verdict members")


@dataclass(frozen=True)
class UnitaryStatus:
    side: str
    unitary: Verdict
    weakly_unitary: Verdict
    unitary_witness: Optional[tuple]
    weak_witness: Optional[tuple]
    identity: object
    bound: Optional[int] = None

    # left-handed aliases matching the usual terminology
    @property
    def left_unitary(self) -> Verdict:
        return self.unitary

    @property
    def weakly_left_unitary(self) -> Verdict:
        return self.weakly_unitary


def subsemigroup_identity(mul, T) -> object:
    """Identity element of the finite subsemigroup ``T`` under ``mul``.

    Raises MonoidError if ``T`` is not closed or has no identity.
    """
    T = list(T)
    Tset = set(T)
    if not T:
        raise MonoidError("empty set has no identity")
    for a in T:
        for b in T:
            if mul(a, b) not in Tset:
                raise MonoidError(f"not closed under multiplication: {a!r}*{b!r}")
    for e in T:
        if all(mul(e, t) == t and mul(t, e) == t for t in T):
            return e
    raise MonoidError("subsemigroup has no identity element")


def unitary_status(m, T, side: str = "left", radius: Optional[int] = None) -> UnitaryStatus:
    """Left (or right) unitary and weakly unitary verdicts for ``T``.

    For a FiniteMonoid the scan is exhaustive. For a computable monoid a
    search radius is required; ``b`` ranges over ``ball(radius)`` and the
    absence of a counterexample is reported as ``Verdict.UNKNOWN``.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    finite = isinstance(m, FiniteMonoid)
    if finite:
        mul = m.mul
        candidates = list(m.elements)
    else:
        if radius is None:
            raise ValueError("a search radius is required for computable monoids")
        mul = m.multiply
        candidates = sorted(m.ball(radius), key=m.sort_key)
    T = list(T)
    Tset = set(T)
    e = subsemigroup_identity(mul, T)
    if side == "left":
        prod = lambda a, b: mul(a, b)  # noqa: E731
        restrict = lambda b: mul(e, b)  # noqa: E731
    else:
        prod = lambda a, b: mul(b, a)  # noqa: E731
        restrict = lambda b: mul(b, e)  # noqa: E731
    unit_w = weak_w = None
    for a in T:
        for b in candidates:
            if prod(a, b) in Tset:
                if unit_w is None and b not in Tset:
                    unit_w = (a, b)
                if weak_w is None and restrict(b) not in Tset:
                    weak_w = (a, b)
        if unit_w is not None and weak_w is not None:
            break
    absent = Verdict.TRUE if finite else Verdict.UNKNOWN
    return UnitaryStatus(
        side=side,
        unitary=Verdict.FALSE if unit_w else absent,
        weakly_unitary=Verdict.FALSE if weak_w else absent,
        unitary_witness=unit_w,
        weak_witness=weak_w,
        identity=e,
        bound=None if finite else radius,
    )
