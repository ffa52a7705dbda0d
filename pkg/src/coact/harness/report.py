"""Construction reports and small helpers shared by the checks."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from ..acts import FiniteRightAct, regular_act
from ..congruence import ActCongruence
from ..monoid import FiniteMonoid, MonoidError, idempotents


@dataclass
class ConstructionReport:
    """Computed artifacts of one construction plus the oracle verdict."""

    check: str
    statement: str
    instance: dict
    artifacts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    bound_relative: bool = False
    notes: list = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    def fail(self, what: str, **witness) -> None:
        entry = {"what": what}
        entry.update({k: _jsonable(v) for k, v in witness.items()})
        self.failures.append(entry)

    def expect(self, cond: bool, what: str, **witness) -> bool:
        if not cond:
            self.fail(what, **witness)
        return cond

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "statement": self.statement,
            "verified": self.verified,
            "bound_relative": self.bound_relative,
            "instance": _jsonable(self.instance),
            "artifacts": _jsonable(self.artifacts),
            "failures": _jsonable(self.failures),
            "notes": list(self.notes),
        }

    def to_json(self, **kw) -> str:
        kw.setdefault("indent", 2)
        kw.setdefault("sort_keys", True)
        kw.setdefault("ensure_ascii", False)
        return json.dumps(self.to_dict(), **kw)


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        items = [_jsonable(v) for v in x]
        return sorted(items, key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if hasattr(x, "item"):  # numpy scalar
        return x.item()
    return str(x)


def lab(m, xs):
    """Labels of an element, a pair, or a collection of either."""
    if isinstance(xs, (int,)) and not isinstance(xs, bool):
        return m.label(xs)
    if isinstance(xs, tuple) and len(xs) == 2 and all(isinstance(v, int) for v in xs):
        return [m.label(xs[0]), m.label(xs[1])]
    return [lab(m, x) for x in xs]


def partition_difference(p: ActCongruence, q: ActCongruence) -> Optional[tuple]:
    """A pair related in exactly one of two congruences on the same act, or None."""
    if p == q:
        return None
    for a in p.act.elements:
        for b in p.act.elements:
            if p.related(a, b) != q.related(a, b):
                return (a, b)
    return None


def maximal_principal(S: FiniteMonoid, I: Iterable[int]) -> list[int]:
    """Least-index generators of the maximal principal right ideals inside ``I``."""
    I = sorted(set(I))
    ideals = {x: frozenset(S.rows[x]) for x in I}
    out, seen = [], set()
    for x in I:
        P = ideals[x]
        if P in seen or any(P < ideals[y] for y in I):
            continue
        seen.add(P)
        out.append(x)
    return out


def idempotent_generators(S: FiniteMonoid, I: Iterable[int]) -> list[int]:
    """Idempotents ``e`` with ``I = union of eS``; one, of least index, per maximal
    principal right ideal. Needs every generator to be R-related to an idempotent."""
    I = frozenset(I)
    E = idempotents(S)
    out = []
    for x in maximal_principal(S, I):
        P = frozenset(S.rows[x])
        for e in E:
            if frozenset(S.rows[e]) == P:
                out.append(e)
                break
        else:
            raise MonoidError(f"no idempotent generates {S.label(x)}S")
    return sorted(out)


def subact_of(A: FiniteRightAct, gens: Iterable[int]) -> frozenset:
    out = set()
    for g in gens:
        out.update(A.rows[g])
    return frozenset(out)


def right_ideal(S: FiniteMonoid, gens: Iterable[int]) -> frozenset:
    return subact_of(regular_act(S), gens)


def symmetrize(pairs: Iterable[tuple]) -> list[tuple]:
    out = []
    for c, d in pairs:
        for p in ((c, d), (d, c)):
            if p not in out:
                out.append(p)
    return out


def resolve(m, xs: Sequence) -> list[int]:
    return [m.index(x) for x in xs]


def resolve_pairs(m, pairs) -> list[tuple]:
    return [(m.index(c), m.index(d)) for c, d in pairs]
