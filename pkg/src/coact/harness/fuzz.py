"""Randomised suites: closure against the H-sequence oracle, and instance-wise
checks of the unitary/SRCEP implications on small random monoids."""
from __future__ import annotations

import random

from ..acts import FiniteRightAct, FreeAct, regular_act
from ..congruence import ActCongruence, congruence_closure, quotient_act, srcep_check
from ..constructions import (cyclic_group, direct_product, symmetric_inverse_monoid,
                             transformation_monoid, u2)
from ..monoid import (FiniteMonoid, Verdict, green, idempotents, is_inverse, is_regular,
                      subsemigroup_identity, tilde_relations, unitary_status)
from ..oracles import hsequence_partition
from .report import ConstructionReport
from .submonoids import monoid_jclasses


# --- random instances ---------------------------------------------------------------------------

def random_transformations(rng: random.Random, max_size: int = 7, max_degree: int = 4):
    """A random transformation monoid with at most ``max_size`` elements and its maps.

    A target size is drawn uniformly first; plain rejection sampling would
    mostly return the trivial monoid and other tiny ones.
    """
    target = rng.randint(1, max_size)
    best = None
    for _ in range(400):
        degree = rng.randint(2 if target > 1 else 1, max_degree)
        gens = [tuple(rng.randrange(degree) for _ in range(degree))
                for _ in range(rng.randint(1, 3))]
        m = transformation_monoid(gens, degree, max_size=max_size)
        if m is None:
            continue
        if best is None or abs(m.size - target) < abs(best[0].size - target):
            best = (m, degree)
        if m.size == target:
            break
    m, degree = best
    maps = [tuple(int(c) for c in m.label(x)) for x in m.elements]
    return m, maps, degree


def point_act(m: FiniteMonoid, maps, degree: int) -> FiniteRightAct:
    """``i * f = f(i)`` on the points ``0..degree-1``."""
    return FiniteRightAct(m, [[maps[f][i] for f in m.elements] for i in range(degree)],
                          [f"p{i}" for i in range(degree)])


def random_act(rng: random.Random, m: FiniteMonoid, maps=None, degree: int = 0,
               max_size: int = 12) -> FiniteRightAct:
    kinds = ["regular", "free", "quotient"]
    if maps is not None:
        kinds.append("points")
    kind = rng.choice(kinds)
    if kind == "points":
        return point_act(m, maps, degree)
    if kind == "regular" or m.size * 2 > max_size:
        A = regular_act(m)
    else:
        A = FreeAct(m, ["x", "y"][: rng.randint(1, min(2, max_size // m.size))])
    if kind == "quotient":
        pairs = random_pairs(rng, A, 2)
        reps = hsequence_partition(A, pairs)
        A = quotient_act(A, ActCongruence(A, reps))
    return A


def random_pairs(rng: random.Random, A, max_pairs: int = 4) -> list[tuple]:
    return [(rng.randrange(A.size), rng.randrange(A.size)) for _ in range(rng.randint(0, max_pairs))]


def random_small_monoid(rng: random.Random, max_size: int = 8):
    """Mostly transformation monoids, with a few catalog monoids mixed in."""
    r = rng.random()
    if r < 0.15:
        cat = [cyclic_group(2), cyclic_group(3), u2(), direct_product(u2(), u2()),
               direct_product(u2(), cyclic_group(2)), symmetric_inverse_monoid(1)]
        cat = [m for m in cat if m.size <= max_size]
        return rng.choice(cat), None, 0
    return random_transformations(rng, max_size=max_size)


# --- oracle equivalence --------------------------------------------------------------------------

def closure_mismatch(A: FiniteRightAct, H) -> bool:
    return congruence_closure(A, H).reps != tuple(hsequence_partition(A, H))


def shrink_pairs(A: FiniteRightAct, H, failing=closure_mismatch) -> list[tuple]:
    """Drop generating pairs one at a time while the failure persists."""
    H = list(H)
    changed = True
    while changed:
        changed = False
        for k in range(len(H)):
            trial = H[:k] + H[k + 1:]
            if failing(A, trial):
                H = trial
                changed = True
                break
    return H


def oracle_equivalence(count: int = 200, seed: int = 0, max_size: int = 8, max_act: int = 12,
                       max_pairs: int = 4) -> ConstructionReport:
    """Union-find closure against the BFS H-sequence partition on random instances."""
    rng = random.Random(seed)
    rep = ConstructionReport(
        "oracle_equivalence",
        "the union-find closure of H equals the partition into H-sequence components",
        {"count": count, "seed": seed, "max_size": max_size, "max_act": max_act,
         "max_pairs": max_pairs},
    )
    sizes = []
    for k in range(count):
        m, maps, degree = random_small_monoid(rng, max_size)
        A = random_act(rng, m, maps, degree, max_act)
        H = random_pairs(rng, A, max_pairs)
        sizes.append(A.size)
        if closure_mismatch(A, H):
            small = shrink_pairs(A, H)
            rep.fail("closure differs from the H-sequence oracle", instance=k,
                     table=[list(r) for r in m.rows], act=[list(r) for r in A.rows],
                     H=small, closure=list(congruence_closure(A, small).reps),
                     oracle=list(hsequence_partition(A, small)))
    rep.artifacts["instances"] = count
    rep.artifacts["max_act_size"] = max(sizes, default=0)
    return rep


# --- unitary / SRCEP implications ----------------------------------------------------------------------

def generated_subsemigroup(S: FiniteMonoid, gens) -> list[int]:
    out = set(gens)
    stack = list(gens)
    while stack:
        x = stack.pop()
        for g in list(out):
            for y in (S.mul(x, g), S.mul(g, x)):
                if y not in out:
                    out.add(y)
                    stack.append(y)
    return sorted(out)


def fuzz_implications(count: int = 200, seed: int = 0, max_size: int = 7,
                      rho_samples: int = 2) -> ConstructionReport:
    """Weakly left unitary monoid subsemigroups have SRCEP; monoid J-classes are weakly
    left and right unitary; plus regularity and tilde-relation invariants."""
    rng = random.Random(seed)
    rep = ConstructionReport(
        "fuzz_implications",
        "a weakly left unitary monoid subsemigroup has SRCEP; a monoid J-class is weakly left "
        "and right unitary; inverse implies regular; on a regular monoid the tilde relations "
        "for all idempotents are R and L",
        {"count": count, "seed": seed, "max_size": max_size, "rho_samples": rho_samples},
    )
    stats = {"monoids": 0, "jclasses": 0, "subsemigroups": 0, "weakly_left_unitary": 0,
             "srcep_checks": 0, "regular": 0}
    for k in range(count):
        S, _, _ = random_transformations(rng, max_size=max_size)
        stats["monoids"] += 1
        table = [list(r) for r in S.rows]
        for J, e in monoid_jclasses(S):
            stats["jclasses"] += 1
            for side in ("left", "right"):
                st = unitary_status(S, J, side)
                if st.weakly_unitary is not Verdict.TRUE:
                    rep.fail(f"monoid J-class not weakly {side} unitary", instance=k, table=table,
                             J=J, witness=st.weak_witness)
        inv, reg = is_inverse(S), is_regular(S)
        if inv and not reg:
            rep.fail("inverse monoid reported non-regular", instance=k, table=table)
        if reg:
            stats["regular"] += 1
            g = green(S)
            tr = tilde_relations(S, idempotents(S))
            if tuple(tr.R) != tuple(g.R) or tuple(tr.L) != tuple(g.L):
                rep.fail("tilde relations differ from R, L on a regular monoid", instance=k,
                         table=table)
        for e in idempotents(S):
            eSe = sorted({S.mul(S.mul(e, s), e) for s in S.elements})
            X = rng.sample(eSe, min(len(eSe), rng.randint(0, 2)))
            T = generated_subsemigroup(S, [e] + X)
            stats["subsemigroups"] += 1
            if subsemigroup_identity(S.mul, T) != e:
                rep.fail("e is not the identity of <X u {e}>", instance=k, table=table, T=T)
                continue
            if unitary_status(S, T, "left").weakly_unitary is not Verdict.TRUE:
                continue
            stats["weakly_left_unitary"] += 1
            pair_sets = [[(c, d)] for i, c in enumerate(T) for d in T[i + 1:]]
            for _ in range(rho_samples):
                pair_sets.append([(rng.choice(T), rng.choice(T)) for _ in range(rng.randint(1, 3))])
            for pairs in pair_sets:
                stats["srcep_checks"] += 1
                res = srcep_check(S, T, pairs)
                if not res.holds:
                    rep.fail("weakly left unitary subsemigroup without SRCEP", instance=k,
                             table=table, T=T, pairs=pairs,
                             restriction=res.restriction_witness, classes=res.class_witness)
    rep.artifacts.update(stats)
    return rep


def fuzz_summary(seed: int = 1, count: int = 50, max_size: int = 7) -> dict:
    """Both suites; ``ok`` is False on any failure, with the first counterexample attached."""
    reports = [oracle_equivalence(count, seed, max_size=max(max_size, 1)),
               fuzz_implications(count, seed, max_size=max_size)]
    out = {"seed": seed, "count": count, "ok": all(r.verified for r in reports), "suites": []}
    for r in reports:
        entry = {"check": r.check, "verified": r.verified, "failures": len(r.failures),
                 "artifacts": r.artifacts}
        if r.failures:
            entry["counterexample"] = r.failures[0]
        out["suites"].append(entry)
    return out
