"""Name -> runner table used by the CLI ``check`` command.

Runners take a dict of decoded parameters (monoids as spec strings, elements by
label, pairs as two-element lists) and return a ConstructionReport.
"""
from __future__ import annotations

from typing import Callable

from ..constructions import direct_product
from ..formats import SpecError, parse_monoid_spec, parse_pairs
from ..monoid import FiniteMonoid, idempotents
from . import brandt, fuzz, products, regular, submonoids
from .report import ConstructionReport


class CheckError(ValueError):
    pass


class _Params:
    def __init__(self, name: str, params: dict):
        self.name = name
        self.p = dict(params)
        self.used: set = set()

    def get(self, key, default=None):
        self.used.add(key)
        return self.p.get(key, default)

    def need(self, key):
        self.used.add(key)
        if key not in self.p:
            raise CheckError(f"{self.name}: missing parameter {key!r}")
        return self.p[key]

    def monoid(self, key, default=None) -> FiniteMonoid:
        spec = self.get(key, default)
        if spec is None:
            raise CheckError(f"{self.name}: missing parameter {key!r}")
        m = parse_monoid_spec(str(spec))
        if not isinstance(m, FiniteMonoid):
            raise CheckError(f"{self.name}: {key} must be a finite monoid")
        return m

    def pairs(self, key):
        v = self.get(key, [])
        if isinstance(v, str):
            return parse_pairs(v)
        return [tuple(p) for p in v]

    def indices(self, key, default=None):
        v = self.get(key, default)
        if isinstance(v, int) and not isinstance(v, bool):
            return list(range(1, v + 1))
        if v is None:
            raise CheckError(f"{self.name}: missing parameter {key!r}")
        return list(v)

    def finish(self):
        extra = set(self.p) - self.used
        if extra:
            raise CheckError(f"{self.name}: unknown parameters {sorted(extra)}")


def _regular_annihilator(p: _Params):
    return regular.regular_annihilator_check(p.monoid("S"), p.pairs("X"), p.need("a"))


def _rees_ideal(p: _Params):
    I = p.indices("I", 2)
    return regular.rees_ideal_check(p.monoid("G", "Z2"), I, p.indices("Lambda", len(I)),
                                    p.get("P"), int(p.get("samples", 4)), int(p.get("seed", 0)))


def _brandt_zero_closure(p: _Params):
    return regular.brandt_zero_closure_check(p.monoid("G", "Z2"), p.indices("I", 3),
                                             p.get("i"), p.get("g"))


def _ebr_quotient(p: _Params):
    G = p.monoid("G", "Z2")
    return regular.ebr_quotient_check(G, p.get("theta"), int(p.get("radius", 12)),
                                      int(p.get("samples", 20)), int(p.get("seed", 0)))


def _retraction(p: _Params):
    mode = p.get("mode", "map")
    if mode == "projection":
        P = direct_product(p.monoid("S"), p.monoid("T"))
        T, theta = submonoids.projection_retraction(P)
        S = P
    elif mode == "ideal":
        S = p.monoid("S")
        T, theta = submonoids.ideal_retraction(S, p.need("I"))
    elif mode == "map":
        S = p.monoid("S")
        mapping = p.get("theta")
        if mapping is None:
            theta = list(S.elements)
        else:
            theta = [S.index(mapping.get(S.label(x), S.label(x))) for x in S.elements]
        T = p.get("T", sorted({S.label(x) for x in theta}))
    else:
        raise CheckError(f"retraction_check: unknown mode {mode!r} (map, ideal, projection)")
    return submonoids.retraction_check(S, T, theta)


def _identity_adjunction(p: _Params):
    return submonoids.identity_adjunction_check(p.monoid("M"), p.pairs("H"), p.need("a"), p.get("b"))


def _jclass(p: _Params):
    return submonoids.jclass_check(p.monoid("S"), p.need("x"), p.pairs("H"), p.get("a"), p.get("b"))


def _tilde(p: _Params):
    S = p.monoid("S")
    E = p.get("E", "all")
    E = idempotents(S) if E == "all" else E
    H = p.get("H")
    return submonoids.tilde_conditions_check(S, p.need("M"), E, None if H is None else p.pairs("H"),
                                             p.get("a"), p.get("b"), int(p.get("samples", 2)),
                                             int(p.get("seed", 0)))


def _brandt_normalize(p: _Params):
    from ..constructions import brandt as build
    S = build(p.monoid("M"), p.indices("I", 2))
    return brandt.brandt_normalize(S, p.pairs("K"), p.get("bullet"))[1]


def _brandt_free(p: _Params):
    return brandt.brandt_free_transfer_check(p.monoid("M"), p.indices("I", 2),
                                             [tuple(q) for q in p.get("A", [])], p.get("bullet"))


def _brandt_ann(p: _Params):
    return brandt.brandt_annihilator_check(p.monoid("M"), p.indices("I", 2), p.pairs("K"),
                                           p.need("a"), p.get("bullet"))


def _brandt_int(p: _Params):
    return brandt.brandt_intersection_check(p.monoid("M"), p.indices("I", 2), p.pairs("K"),
                                            p.need("a"), p.need("b"), p.get("bullet"))


def _zero_adjunction(p: _Params):
    return brandt.zero_adjunction_check(p.monoid("M"), p.pairs("H"), p.need("a"), p.get("b"))


def _free_product(p: _Params):
    return products.free_product_check(int(p.get("n_max", 5)), int(p.get("radius", 14)),
                                       int(p.get("cap", 3)), int(p.get("pair_cap", 2)),
                                       int(p.get("samples", 20)), int(p.get("seed", 0)))


def _product_act(p: _Params):
    H = [((int(c[0]), tuple(c[1])), (int(d[0]), tuple(d[1]))) for c, d in p.get("H", [])]
    return products.product_act_check(p.monoid("S"), p.monoid("T"), int(p.get("generators", 1)), H)


def _fuzz(p: _Params):
    return fuzz.fuzz_implications(int(p.get("count", 200)), int(p.get("seed", 0)),
                                  int(p.get("max_size", 7)))


def _oracle(p: _Params):
    return fuzz.oracle_equivalence(int(p.get("count", 200)), int(p.get("seed", 0)),
                                   int(p.get("max_size", 8)), int(p.get("max_act", 12)),
                                   int(p.get("max_pairs", 4)))


CHECKS: dict[str, tuple[Callable, str]] = {
    "regular_annihilator_check": (_regular_annihilator, "S, X (pairs), a"),
    "rees_ideal_check": (_rees_ideal, "G, I, Lambda, P, samples, seed"),
    "brandt_zero_closure_check": (_brandt_zero_closure, "G, I, i, g"),
    "ebr_quotient_check": (_ebr_quotient, "G, theta, radius, samples, seed"),
    "retraction_check": (_retraction, "mode=map|ideal|projection, S, T, I, theta"),
    "identity_adjunction_check": (_identity_adjunction, "M, H (pairs over M with 1!), a, b"),
    "jclass_check": (_jclass, "S, x (member of the J-class), H, a, b"),
    "tilde_conditions_check": (_tilde, "S, M (elements), E (elements or 'all'), H, a, b"),
    "brandt_normalize": (_brandt_normalize, "M, I, K (pairs), bullet"),
    "brandt_free_transfer_check": (_brandt_free, "M, I, A (quadruples i,b,k,c), bullet"),
    "brandt_annihilator_check": (_brandt_ann, "M, I, K, a, bullet"),
    "brandt_intersection_check": (_brandt_int, "M, I, K, a, b, bullet"),
    "zero_adjunction_check": (_zero_adjunction, "M, H, a, b"),
    "free_product_check": (_free_product, "n_max, radius, cap, pair_cap, samples, seed"),
    "product_act_check": (_product_act, "S, T, generators, H ([[x,[s,t]],[y,[s,t]]] pairs)"),
    "fuzz_implications": (_fuzz, "count, seed, max_size"),
    "oracle_equivalence": (_oracle, "count, seed, max_size, max_act, max_pairs"),
}


def run_check(name: str, params: dict) -> ConstructionReport:
    if name not in CHECKS:
        raise CheckError(f"unknown check {name!r}; available: {', '.join(sorted(CHECKS))}")
    p = _Params(name, params)
    try:
        rep = CHECKS[name][0](p)
    except KeyError as e:
        raise CheckError(f"{name}: unresolved label {e.args[0]}") from None
    p.finish()
    return rep


__all__ = ["CHECKS", "CheckError", "SpecError", "run_check"]
