"""Monoid constructions: adjunction, products, Rees matrix and Brandt monoids,
Bruck-Reilly extensions, and a small catalog of named monoids.

Adjoined identities and zeros always take the last indices of the carrier,
labelled ``1!`` and ``0!``.
"""
from __future__ import annotations

import itertools
import os
from typing import Optional, Sequence

from .computable import (AdjoinedComputable, BicyclicMonoid, BruckReilly,
                         ComputableMonoid, ExtendedBruckReilly, FreeMonoid,
                         ProductMonoid)
from .monoid import FiniteMonoid, MonoidError, validate

ONE_LABEL = "1!"
ZERO_LABEL = "0!"
ZERO_ENTRY = None  # sandwich-matrix marker for a zero entry


def max_elements() -> int:
    return int(os.environ.get("COACT_MAX_ELEMENTS", "5000"))


def _check_size(n: int) -> None:
    cap = max_elements()
    if n > cap:
        raise MonoidError(f"carrier of size {n} exceeds COACT_MAX_ELEMENTS={cap}")


class AdjoinedMonoid(FiniteMonoid):
    """``base`` with a new element appended; ``base`` indices are unchanged."""

    def __init__(self, base: FiniteMonoid, kind: str):
        n = base.size
        _check_size(n + 1)
        new = n
        rows = [list(r) + [0] for r in base.rows] + [[0] * (n + 1)]
        for x in range(n + 1):
            if kind == "identity":
                rows[new][x] = x
                rows[x][new] = x
            else:
                rows[new][x] = new
                rows[x][new] = new
        label = ONE_LABEL if kind == "identity" else ZERO_LABEL
        while label in base.labels:  # adjoining twice: 1!, 1!!, ...
            label += "!"
        if kind == "identity":
            super().__init__(rows, identity=new, zero=base.zero, labels=list(base.labels) + [label])
        else:
            super().__init__(rows, identity=base.identity, zero=new, labels=list(base.labels) + [label])
        self.base = base
        self.kind = kind
        self.new = new


def adjoin_identity(m):
    """M with a new identity adjoined whether or not M already has one."""
    if isinstance(m, ComputableMonoid):
        return AdjoinedComputable(m, "identity")
    return AdjoinedMonoid(m, "identity")


def adjoin_zero(m):
    if isinstance(m, ComputableMonoid):
        return AdjoinedComputable(m, "zero")
    return AdjoinedMonoid(m, "zero")


class DirectProduct(FiniteMonoid):
    """``S x T`` with ``(s, t)`` at index ``s*|T| + t``."""

    def __init__(self, left: FiniteMonoid, right: FiniteMonoid):
        p, q = left.size, right.size
        _check_size(p * q)
        lr, rr = left.rows, right.rows
        rows = []
        for s in range(p):
            for t in range(q):
                rows.append([lr[s][s2] * q + rr[t][t2] for s2 in range(p) for t2 in range(q)])
        zero = None
        if left.zero is not None and right.zero is not None:
            zero = left.zero * q + right.zero
        labels = [f"({left.label(s)},{right.label(t)})" for s in range(p) for t in range(q)]
        super().__init__(rows, identity=left.identity * q + right.identity, zero=zero, labels=labels)
        self.left = left
        self.right = right

    def pair(self, s: int, t: int) -> int:
        return s * self.right.size + t

    def decode(self, x: int) -> tuple:
        return divmod(x, self.right.size)


def direct_product(left, right):
    if isinstance(left, ComputableMonoid) or isinstance(right, ComputableMonoid):
        if not (isinstance(left, ComputableMonoid) and isinstance(right, ComputableMonoid)):
            raise TypeError("mixed finite/computable products are not supported")
        return ProductMonoid(left, right)
    return DirectProduct(left, right)


class ReesMatrixMonoid(FiniteMonoid):
    """Rees matrix semigroup over M (optionally with zero, optionally with 1 adjoined).

    Triples ``(i, a, lam)`` come first in lexicographic order of
    (position of i, a, position of lam); then the zero, then the identity.
    """

    def __init__(self, base: FiniteMonoid, I: Sequence, Lam: Sequence, P, with_zero: bool,
                 adjoin_one: bool, brandt: bool = False):
        I = list(I)
        Lam = list(Lam)
        if not I or not Lam:
            raise MonoidError("index sets must be non-empty")
        if len(set(map(str, I))) != len(I) or len(set(map(str, Lam))) != len(Lam):
            raise MonoidError("index labels must be distinct")
        if len(P) != len(Lam) or any(len(row) != len(I) for row in P):
            raise MonoidError("sandwich matrix must be |Lambda| x |I|")
        P = [[None if e is ZERO_ENTRY else base.index(e) for e in row] for row in P]
        if not with_zero and any(e is None for row in P for e in row):
            raise MonoidError("zero entry in sandwich matrix requires with_zero")
        m, ni, nl = base.size, len(I), len(Lam)
        ntrip = ni * m * nl
        n = ntrip + (1 if with_zero else 0) + (1 if adjoin_one else 0)
        _check_size(n)
        zero = ntrip if with_zero else None
        one = n - 1 if adjoin_one else None
        brow = base.rows

        def enc(i, a, l):
            return (i * m + a) * nl + l

        rows = [[0] * n for _ in range(n)]
        for x in range(ntrip):
            i, a, l = x // (m * nl), (x // nl) % m, x % nl
            for y in range(ntrip):
                j, b, mu = y // (m * nl), (y // nl) % m, y % nl
                p = P[l][j]
                rows[x][y] = zero if p is None else enc(i, brow[brow[a][p]][b], mu)
        if zero is not None:
            for x in range(n):
                rows[zero][x] = zero
                rows[x][zero] = zero
        if one is not None:
            for x in range(n):
                rows[one][x] = x
                rows[x][one] = x
        labels = [f"({I[x // (m * nl)]},{base.label((x // nl) % m)},{Lam[x % nl]})"
                  for x in range(ntrip)]
        if with_zero:
            labels.append(ZERO_LABEL)
        if adjoin_one:
            labels.append(ONE_LABEL)
        if one is None:
            # without an adjoined 1 the semigroup must already be a monoid
            for x in range(n):
                if all(rows[x][y] == y and rows[y][x] == y for y in range(n)):
                    one = x
                    break
            else:
                raise MonoidError("Rees matrix semigroup has no identity; set adjoin_one")
        super().__init__(rows, identity=one, zero=zero, labels=labels)
        self.base = base
        self.I = tuple(I)
        self.Lam = tuple(Lam)
        self.P = tuple(tuple(r) for r in P)
        self.with_zero = with_zero
        self.is_brandt = brandt
        self._ipos = {str(i): k for k, i in enumerate(I)}
        self._lpos = {str(l): k for k, l in enumerate(Lam)}
        self._ntrip = ntrip

    def triple(self, i, a: int, lam) -> int:
        """Index of ``(i, a, lam)``; ``i``/``lam`` are index labels, ``a`` an element of M."""
        m, nl = self.base.size, len(self.Lam)
        a = self.base.index(a)
        return (self._ipos[str(i)] * m + a) * nl + self._lpos[str(lam)]

    def is_triple(self, x: int) -> bool:
        return x < self._ntrip

    def decode(self, x: int) -> Optional[tuple]:
        """``(i, a, lam)`` with index labels and an M index, or None for 0 and 1."""
        if x >= self._ntrip:
            return None
        m, nl = self.base.size, len(self.Lam)
        return (self.I[x // (m * nl)], (x // nl) % m, self.Lam[x % nl])

    def row_block(self, i) -> list[int]:
        """All triples with first coordinate ``i``."""
        return [x for x in range(self._ntrip) if str(self.decode(x)[0]) == str(i)]

    def col_block(self, lam) -> list[int]:
        return [x for x in range(self._ntrip) if str(self.decode(x)[2]) == str(lam)]


def rees_matrix(base: FiniteMonoid, I: Sequence, Lam: Sequence, P, with_zero: bool = False,
                adjoin_one: bool = True) -> ReesMatrixMonoid:
    return ReesMatrixMonoid(base, I, Lam, P, with_zero, adjoin_one)


def brandt(base: FiniteMonoid, I: Sequence, adjoin_one: bool = True) -> ReesMatrixMonoid:
    """B(M; I), with ``(i,a,j)(k,b,l) = (i,ab,l)`` if ``j == k`` and 0 otherwise."""
    I = list(I)
    if not I:
        raise MonoidError("Brandt index set must be non-empty")
    one = base.identity
    P = [[one if j == k else ZERO_ENTRY for k in range(len(I))] for j in range(len(I))]
    return ReesMatrixMonoid(base, I, I, P, with_zero=True, adjoin_one=adjoin_one, brandt=True)


class BREndo:
    """A monoid endomorphism given as an element map ``g -> g theta``."""

    def __init__(self, base: FiniteMonoid, mapping: Sequence):
        mapping = tuple(base.index(x) for x in mapping)
        if len(mapping) != base.size:
            raise MonoidError("endomorphism must map every element")
        if mapping[base.identity] != base.identity:
            raise MonoidError("endomorphism must fix the identity")
        for x in base.elements:
            for y in base.elements:
                if mapping[base.mul(x, y)] != base.mul(mapping[x], mapping[y]):
                    raise MonoidError(
                        f"not an endomorphism at ({base.label(x)}, {base.label(y)})")
        self.base = base
        self.mapping = mapping
        self._powers = [tuple(base.elements), mapping]

    def power(self, k: int) -> tuple:
        while len(self._powers) <= k:
            self._powers.append(tuple(self.mapping[x] for x in self._powers[-1]))
        return self._powers[k]

    def __call__(self, g: int, k: int = 1) -> int:
        return self.power(k)[g]

    @classmethod
    def identity_map(cls, base: FiniteMonoid) -> "BREndo":
        return cls(base, list(base.elements))

    @classmethod
    def trivial_map(cls, base: FiniteMonoid) -> "BREndo":
        return cls(base, [base.identity] * base.size)


def bruck_reilly(base: FiniteMonoid, theta: BREndo) -> BruckReilly:
    return BruckReilly(base, theta)


def extended_bruck_reilly(base: FiniteMonoid, theta: BREndo, adjoin_one: bool = True) -> ExtendedBruckReilly:
    if not adjoin_one:
        raise MonoidError("the extended Bruck-Reilly semigroup is only exposed with an identity adjoined")
    return ExtendedBruckReilly(base, theta)


def free_monoid(alphabet: Sequence[str]) -> FreeMonoid:
    return FreeMonoid(alphabet)


def bicyclic() -> BicyclicMonoid:
    return BicyclicMonoid()


# --- catalog -----------------------------------------------------------------

def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([[0]], identity=0, labels=["1"])


def cyclic_group(n: int) -> FiniteMonoid:
    if n < 1:
        raise MonoidError("cyclic group order must be positive")
    labels = ["1", "g"] + [f"g{k}" for k in range(2, n)]
    return FiniteMonoid([[(a + b) % n for b in range(n)] for a in range(n)], identity=0,
                        labels=labels[:n])


def u2() -> FiniteMonoid:
    """The two-element semilattice {1, e}."""
    return FiniteMonoid([[0, 1], [1, 1]], identity=0, labels=["1", "e"])


def nilpotent_monoid() -> FiniteMonoid:
    """{1, a, 0} with a^2 = 0."""
    return FiniteMonoid([[0, 1, 2], [1, 2, 2], [2, 2, 2]], identity=0, zero=2, labels=["1", "a", "0"])


def transformation_monoid(generators: Sequence[Sequence[int]], degree: int,
                          max_size: Optional[int] = None) -> Optional[FiniteMonoid]:
    """Monoid generated by transformations of ``0..degree-1`` (acting on the right).

    Elements are ordered identity first, then by discovery. Returns None if
    the closure exceeds ``max_size``.
    """
    ident = tuple(range(degree))
    elems = [ident]
    pos = {ident: 0}
    gens = [tuple(g) for g in generators]
    k = 0
    while k < len(elems):
        f = elems[k]
        for g in gens:
            h = tuple(g[f[i]] for i in range(degree))
            if h not in pos:
                pos[h] = len(elems)
                elems.append(h)
                if max_size is not None and len(elems) > max_size:
                    return None
        k += 1
    n = len(elems)
    _check_size(n)
    rows = [[pos[tuple(g[f[i]] for i in range(degree))] for g in elems] for f in elems]
    zero = None
    for z in range(n):
        if all(rows[z][x] == z and rows[x][z] == z for x in range(n)):
            zero = z
            break
    labels = ["".join(map(str, f)) for f in elems]
    return FiniteMonoid(rows, identity=0, zero=zero, labels=labels)


def full_transformation_monoid(n: int) -> FiniteMonoid:
    maps = list(itertools.product(range(n), repeat=n))
    ident = tuple(range(n))
    maps.remove(ident)
    return transformation_monoid([ident] + maps, n)


def symmetric_inverse_monoid(n: int) -> FiniteMonoid:
    """Partial injections of ``0..n-1``, composed left to right; ``None`` marks undefined."""
    elems = []
    for dom_size in range(n, -1, -1):
        for dom in itertools.combinations(range(n), dom_size):
            for img in itertools.permutations(range(n), dom_size):
                f = [None] * n
                for d, i in zip(dom, img):
                    f[d] = i
                elems.append(tuple(f))
    ident = tuple(range(n))
    elems.remove(ident)
    elems.insert(0, ident)
    pos = {f: k for k, f in enumerate(elems)}

    def comp(f, g):
        return tuple(None if f[i] is None else g[f[i]] for i in range(n))

    rows = [[pos[comp(f, g)] for g in elems] for f in elems]
    empty = pos[tuple([None] * n)]
    labels = ["[" + "".join("-" if v is None else str(v) for v in f) + "]" for f in elems]
    return FiniteMonoid(rows, identity=0, zero=empty, labels=labels)


def submonoid(m: FiniteMonoid, elements, identity: Optional[int] = None):
    """A subsemigroup with its own identity, reindexed as a FiniteMonoid.

    Returns ``(sub, embed)`` where ``embed[k]`` is the index in ``m`` of the
    k-th element of ``sub`` (elements kept in increasing index order).
    """
    from .monoid import subsemigroup_identity
    elems = sorted(set(elements))
    if identity is None:
        identity = subsemigroup_identity(m.mul, elems)
    pos = {x: k for k, x in enumerate(elems)}
    rows = []
    for x in elems:
        row = []
        for y in elems:
            z = m.mul(x, y)
            if z not in pos:
                raise MonoidError("not closed under multiplication")
            row.append(pos[z])
        rows.append(row)
    zero = None
    for z in elems:
        if all(m.mul(z, x) == z and m.mul(x, z) == z for x in elems):
            zero = pos[z]
            break
    sub = FiniteMonoid(rows, identity=pos[identity], zero=zero, labels=[m.label(x) for x in elems])
    return sub, tuple(elems)


def isomorphism_holds(a: FiniteMonoid, b: FiniteMonoid, mapping: Sequence[int]) -> bool:
    """Whether ``mapping`` (index in ``a`` -> index in ``b``) is an isomorphism."""
    if a.size != b.size or sorted(mapping) != list(range(b.size)):
        return False
    return all(mapping[a.mul(x, y)] == b.mul(mapping[x], mapping[y])
               for x in a.elements for y in a.elements)


BUILTINS = {
    "trivial": trivial_monoid,
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "U2": u2,
    "N3": nilpotent_monoid,
    "I2": lambda: symmetric_inverse_monoid(2),
    "T2": lambda: full_transformation_monoid(2),
    "T3": lambda: full_transformation_monoid(3),
    "bicyclic": bicyclic,
}


def builtin(name: str):
    if name in BUILTINS:
        return BUILTINS[name]()
    if name.startswith("Z") and name[1:].isdigit():
        return cyclic_group(int(name[1:]))
    if name.startswith("free:"):
        return free_monoid(list(name[5:]))
    raise KeyError(f"unknown builtin monoid {name!r}; known: {sorted(BUILTINS)} plus Z<n>, free:<letters>")


def checked(m: FiniteMonoid) -> FiniteMonoid:
    v = validate(m)
    if not v.ok:
        raise MonoidError(v.reason)
    return m
