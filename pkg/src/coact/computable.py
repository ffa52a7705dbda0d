"""Infinite monoids with canonical element representations and bounded enumeration.

Every element has a unique canonical form (a word, or a tuple of integers),
so equality of elements is equality of representations.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence


class Adjoined:
    """An element adjoined to a monoid (a new identity or a new zero)."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __reduce__(self):
        return (Adjoined, (self.name,))

    def __eq__(self, other) -> bool:
        return isinstance(other, Adjoined) and other.name == self.name

    def __hash__(self) -> int:
        return hash(("Adjoined", self.name))


ONE = Adjoined("1!")
ZERO = Adjoined("0!")


class ComputableMonoid:
    """Base class: subclasses supply ``multiply``, ``identity`` and ``generators``.

    ``ball(r)`` is the set of products of at most ``r`` generators; subclasses
    that know a cheaper description override ``length``.
    """

    identity: object = None
    zero: object = None
    generators: tuple = ()
    # True when ``left_divisors`` returns every solution, not just those in a ball
    left_division_exact: bool = False

    def multiply(self, a, b):
        raise NotImplementedError

    def product(self, *xs):
        r = self.identity
        for x in xs:
            r = self.multiply(r, x)
        return r

    def label(self, x) -> str:
        return str(x)

    def sort_key(self, x):
        return (self.length(x), repr(x))

    def _levels(self) -> list:
        if not hasattr(self, "_level_cache"):
            self._level_cache = [frozenset([self.identity])]
            self._seen = {self.identity: 0}
        return self._level_cache

    def _grow(self, r: int) -> None:
        levels = self._levels()
        while len(levels) <= r:
            frontier = levels[-1]
            new = set()
            for x in frontier:
                for g in self.generators:
                    y = self.multiply(x, g)
                    if y not in self._seen:
                        self._seen[y] = len(levels)
                        new.add(y)
            levels.append(frozenset(new))

    def ball(self, r: int) -> frozenset:
        if r < 0:
            return frozenset()
        self._grow(r)
        out = set()
        for lev in self._levels()[: r + 1]:
            out |= lev
        return frozenset(out)

    def length(self, x, limit: int = 64) -> Optional[int]:
        """Generator length of ``x``; None if it exceeds ``limit``."""
        levels = self._levels()
        if x in self._seen:
            return self._seen[x]
        r = len(levels) - 1
        while r < limit:
            r += 1
            self._grow(r)
            if x in self._seen:
                return self._seen[x]
        return None

    def in_ball(self, x, r: int) -> bool:
        n = self.length(x, limit=r)
        return n is not None and n <= r

    def left_divisors(self, c, x, radius: int) -> Iterator:
        """All ``t`` in ``ball(radius)`` with ``c*t == x``."""
        for t in self.ball(radius):
            if self.multiply(c, t) == x:
                yield t


class FreeMonoid(ComputableMonoid):
    """Words over a finite alphabet of single-character symbols, as ``str``."""

    left_division_exact = True

    def __init__(self, alphabet: Sequence[str]):
        alphabet = tuple(alphabet)
        if not alphabet:
            raise ValueError("alphabet must be non-empty")
        if any(len(a) != 1 for a in alphabet) or len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet symbols must be distinct single characters")
        self.alphabet = alphabet
        self.identity = ""
        self.generators = alphabet

    def multiply(self, a: str, b: str) -> str:
        return a + b

    def label(self, x: str) -> str:
        return x or "1"

    def sort_key(self, x):
        return (len(x), tuple(self.alphabet.index(c) for c in x))

    def length(self, x, limit: int = 64):
        return len(x)

    def ball(self, r: int) -> frozenset:
        return frozenset(self.words(r))

    def words(self, r: int) -> Iterator[str]:
        level = [""]
        for _ in range(r + 1):
            yield from level
            level = [w + a for w in level for a in self.alphabet]

    def left_divisors(self, c: str, x: str, radius: int = 0):
        if x.startswith(c):
            yield x[len(c):]

    def is_element(self, x) -> bool:
        return isinstance(x, str) and all(ch in self.alphabet for ch in x)


class ProductMonoid(ComputableMonoid):
    """Direct product of two computable monoids; elements are pairs."""

    def __init__(self, left: ComputableMonoid, right: ComputableMonoid):
        self.left = left
        self.right = right
        self.identity = (left.identity, right.identity)
        self.generators = tuple((g, right.identity) for g in left.generators) + \
            tuple((left.identity, g) for g in right.generators)
        self.left_division_exact = left.left_division_exact and right.left_division_exact

    def multiply(self, a, b):
        return (self.left.multiply(a[0], b[0]), self.right.multiply(a[1], b[1]))

    def label(self, x) -> str:
        return f"({self.left.label(x[0])},{self.right.label(x[1])})"

    def sort_key(self, x):
        return (self.length(x), self.left.sort_key(x[0]), self.right.sort_key(x[1]))

    def length(self, x, limit: int = 64):
        a = self.left.length(x[0], limit)
        b = self.right.length(x[1], limit)
        if a is None or b is None:
            return None
        return a + b

    def left_divisors(self, c, x, radius: int):
        rights = list(self.right.left_divisors(c[1], x[1], radius))
        if not rights:
            return
        for s in self.left.left_divisors(c[0], x[0], radius):
            for t in rights:
                yield (s, t)


class BicyclicMonoid(ComputableMonoid):
    """Pairs ``(m, n)`` of naturals; ``(m,n)(p,q) = (m-n+t, q-p+t)``, ``t=max(n,p)``."""

    def __init__(self):
        self.identity = (0, 0)
        self.generators = ((1, 0), (0, 1))

    def multiply(self, a, b):
        m, n = a
        p, q = b
        t = max(n, p)
        return (m - n + t, q - p + t)

    def length(self, x, limit: int = 64):
        return x[0] + x[1]

    def ball(self, r: int) -> frozenset:
        return frozenset((m, n) for m in range(r + 1) for n in range(r + 1 - m))

    def sort_key(self, x):
        return (x[0] + x[1], x)


class _ThetaPowers:
    """Memoized powers of an endomorphism given as an element map; theta^0 is the identity."""

    def __init__(self, mapping: Sequence[int]):
        self._powers = [tuple(range(len(mapping))), tuple(mapping)]

    def __call__(self, g: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative power")
        p = self._powers
        while len(p) <= k:
            last = p[-1]
            p.append(tuple(p[1][x] for x in last))
        return p[k][g]


class BruckReilly(ComputableMonoid):
    """BR(M, theta): triples ``(a, g, b)`` with ``a, b >= 0`` and ``g`` an index of M."""

    def __init__(self, base, theta):
        self.base = base
        self.theta = theta
        one = base.identity
        self._pow = _ThetaPowers(theta.mapping)
        self.identity = (0, one, 0)
        self.generators = tuple((0, g, 0) for g in base.elements if g != one) + \
            ((1, one, 0), (0, one, 1))

    def multiply(self, x, y):
        a, g, b = x
        c, h, d = y
        t = max(b, c)
        rows = self.base.rows
        return (a - b + t, rows[self._pow(g, t - b)][self._pow(h, t - c)], d - c + t)

    def label(self, x) -> str:
        return f"({x[0]},{self.base.label(x[1])},{x[2]})"

    def sort_key(self, x):
        return (x[0] + x[2], x)


class ExtendedBruckReilly(ComputableMonoid):
    """EBR(G, theta) with an identity adjoined: triples over the integers, plus ``ONE``.

    The semigroup is not finitely generated, so the ``ball`` of radius ``r`` is
    the coordinate box ``max(|a|, |b|) <= r`` (together with the identity).
    """

    def __init__(self, base, theta):
        self.base = base
        self.theta = theta
        self._pow = _ThetaPowers(theta.mapping)
        self.identity = ONE
        self.generators = ()

    def multiply(self, x, y):
        if x == ONE:
            return y
        if y == ONE:
            return x
        a, g, b = x
        c, h, d = y
        t = max(b, c)
        rows = self.base.rows
        return (a - b + t, rows[self._pow(g, t - b)][self._pow(h, t - c)], d - c + t)

    def length(self, x, limit: int = 64):
        if x == ONE:
            return 0
        return max(abs(x[0]), abs(x[2]))

    def ball(self, r: int) -> frozenset:
        out = {ONE}
        for a in range(-r, r + 1):
            for b in range(-r, r + 1):
                for g in self.base.elements:
                    out.add((a, g, b))
        return frozenset(out)

    def label(self, x) -> str:
        if x == ONE:
            return "1!"
        return f"({x[0]},{self.base.label(x[1])},{x[2]})"

    def sort_key(self, x):
        if x == ONE:
            return (0, (-10**9,))
        return (self.length(x), x)


class AdjoinedComputable(ComputableMonoid):
    """A computable monoid with a new identity or a new zero adjoined."""

    def __init__(self, base: ComputableMonoid, kind: str):
        if kind not in ("identity", "zero"):
            raise ValueError(kind)
        self.base = base
        self.kind = kind
        self.left_division_exact = False
        if kind == "identity":
            self.identity = ONE
            self.zero = base.zero
            self.generators = tuple(base.generators) + (base.identity,)
        else:
            self.identity = base.identity
            self.zero = ZERO
            self.generators = tuple(base.generators) + (ZERO,)

    def multiply(self, a, b):
        if self.kind == "identity":
            if a == ONE:
                return b
            if b == ONE:
                return a
        else:
            if a == ZERO or b == ZERO:
                return ZERO
        return self.base.multiply(a, b)

    def label(self, x) -> str:
        if isinstance(x, Adjoined):
            return x.name
        return self.base.label(x)

    def sort_key(self, x):
        if isinstance(x, Adjoined):
            return (-1, x.name)
        return self.base.sort_key(x)


def check_associative(m: ComputableMonoid, elements: Iterable) -> Optional[tuple]:
    """First triple violating associativity among ``elements``; None if none."""
    els = list(elements)
    mul = m.multiply
    for a in els:
        for b in els:
            ab = mul(a, b)
            for c in els:
                if mul(ab, c) != mul(a, mul(b, c)):
                    return (a, b, c)
    return None
