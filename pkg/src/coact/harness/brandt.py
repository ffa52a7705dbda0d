"""Brandt monoids B(M;I)^1: generator normal forms, the passage to a free M-act,
and the annihilator and intersection generating sets; plus zero adjunction."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from ..acts import FreeAct, minimal_generating_set, regular_act
from ..congruence import (ActCongruence, ann_of_class, annihilator, congruence_closure,
                          irredundant_generators, quotient_act, restrict_to)
from ..constructions import ReesMatrixMonoid, adjoin_zero, brandt
from ..monoid import FiniteMonoid
from .report import ConstructionReport, lab, partition_difference, resolve_pairs, subact_of


@dataclass
class BrandtCongruenceData:
    """Normal-form generating data: quadruples ``A``, zero pairs ``B`` and a bullet index.

    Quadruples are ``(i, b, k, c)`` and zero pairs ``(j, d)`` with index labels and
    M element indices.
    """

    case: str
    bullet: object
    A: tuple = ()
    B: tuple = ()
    index: Optional[object] = None

    def support(self, S: ReesMatrixMonoid) -> list:
        used = {str(q[0]) for q in self.A} | {str(q[2]) for q in self.A}
        return [i for i in S.I if str(i) in used]

    def quad_pairs(self, S: ReesMatrixMonoid) -> list[tuple]:
        t = S.triple
        return [(t(i, b, self.bullet), t(k, c, self.bullet)) for i, b, k, c in self.A]

    def generators(self, S: ReesMatrixMonoid) -> list[tuple]:
        one, zero = S.identity, S.zero
        if self.case == "i":
            return [(one, zero)]
        H = []
        if self.case == "iii":
            H.append((S.triple(self.index, S.base.identity, self.index), one))
        H += self.quad_pairs(S)
        H += [(S.triple(j, d, self.bullet), zero) for j, d in self.B]
        return H

    def describe(self, S: ReesMatrixMonoid) -> dict:
        M = S.base
        return {
            "case": self.case,
            "bullet": str(self.bullet),
            "index": None if self.index is None else str(self.index),
            "A": [[str(i), M.label(b), str(k), M.label(c)] for i, b, k, c in self.A],
            "B": [[str(j), M.label(d)] for j, d in self.B],
            "support": [str(i) for i in self.support(S)],
        }


def _require_brandt(S) -> None:
    if not (isinstance(S, ReesMatrixMonoid) and S.is_brandt and S.with_zero
            and S.identity == S.size - 1):
        raise ValueError("expected a Brandt monoid with adjoined identity")


def _same(x, y) -> bool:
    return str(x) == str(y)


def brandt_normalize(S: ReesMatrixMonoid, K, bullet=None) -> tuple[BrandtCongruenceData, ConstructionReport]:
    """Rewrite a generating set of a right congruence on S into normal form."""
    _require_brandt(S)
    K = resolve_pairs(S, K)
    bullet = S.I[0] if bullet is None else bullet
    if str(bullet) not in {str(i) for i in S.I}:
        raise ValueError(f"bullet {bullet!r} is not an index")
    one, zero, M = S.identity, S.zero, S.base
    A_S = regular_act(S)
    rho = congruence_closure(A_S, K)
    rep = ConstructionReport(
        "brandt_normalize",
        "every right congruence on B(M;I)^1 is universal (generated by (1,0)), has 1 rho = {1} "
        "with generators over A and B, or has a generator ((i,1_M,i),1) with A non-empty "
        "supported on {i}",
        {"M": M.size, "I": [str(i) for i in S.I], "K": lab(S, K), "bullet": str(bullet)},
    )

    if rho.related(one, zero):
        data = BrandtCongruenceData("i", bullet)
    else:
        quads, zeros, with_one = [], [], []
        for x, y in K:
            if x == y:
                continue
            if y == one or x == zero:
                x, y = y, x
            if x == one:
                with_one.append(y)
            elif y == zero:
                i, b, _ = S.decode(x)
                zeros.append((i, b))
            else:
                (i, b, j), (k, c, l) = S.decode(x), S.decode(y)
                if _same(j, l):
                    quads.append((i, b, k, c))
                else:
                    zeros += [(i, b), (k, c)]
        index = None
        if with_one:
            index = S.decode(with_one[0])[0]
            for t in with_one:
                i, b, j = S.decode(t)
                if not (_same(i, index) and _same(j, index)):
                    rep.fail("pair with 1 off the diagonal of the index", element=S.label(t))
                quads.append((index, M.identity, index, b))
            kept = []
            for i, b, k, c in quads:
                if _same(i, index) and _same(k, index):
                    kept.append((i, b, k, c))
                else:
                    zeros += [(i, b), (k, c)]
            quads = kept or [(index, M.identity, index, M.identity)]
        data = BrandtCongruenceData(
            "iii" if with_one else "ii", bullet,
            tuple(sorted(set(quads), key=lambda q: (S.I.index(q[0]), q[1], S.I.index(q[2]), q[3]))),
            tuple(sorted(set(zeros), key=lambda p: (S.I.index(p[0]), p[1]))),
            index,
        )

    H = data.generators(S)
    rep.artifacts["data"] = data.describe(S)
    rep.artifacts["H"] = lab(S, H)

    one_class = rho.class_of(one)
    case_by_closure = "i" if rho.related(one, zero) else ("ii" if len(one_class) == 1 else "iii")
    rep.artifacts["case_by_closure"] = case_by_closure
    rep.expect(case_by_closure == data.case, "syntactic case differs from the closure case",
               syntactic=data.case, closure=case_by_closure)
    diff = partition_difference(congruence_closure(A_S, H), rho)
    if diff is not None:
        rep.fail("<H> differs from <K>", pair=lab(S, diff))
    if data.case == "iii":
        rep.expect(bool(data.A), "case (iii) with empty A")
        rep.expect([str(i) for i in data.support(S)] == [str(data.index)],
                   "case (iii) support is not the single index", support=rep.artifacts["data"]["support"])
    bad = bullet_invariance_violation(S, rho, bullet)
    if bad is not None:
        rep.fail("bullet invariance fails", pair=lab(S, bad))
    return data, rep


def bullet_invariance_violation(S: ReesMatrixMonoid, rho: ActCongruence, bullet) -> Optional[tuple]:
    """First triple pair with a common third index whose relatedness differs after
    moving the third index to ``bullet``."""
    trip = [x for x in S.elements if S.is_triple(x)]
    for x in trip:
        i, b, j = S.decode(x)
        xb = S.triple(i, b, bullet)
        for y in trip:
            k, c, l = S.decode(y)
            if not _same(j, l):
                continue
            if rho.related(x, y) != rho.related(xb, S.triple(k, c, bullet)):
                return (x, y)
    return None


# --- the free M-act F_A -------------------------------------------------------------------

def _free_side(S: ReesMatrixMonoid, data: BrandtCongruenceData, basis=None):
    supp = data.support(S) if basis is None else list(basis)
    if not supp:
        return None, None, supp
    F = FreeAct(S.base, supp)
    G = [(F.element(i, b), F.element(k, c)) for i, b, k, c in data.A]
    return F, congruence_closure(F, G), supp


def brandt_free_transfer_check(M: FiniteMonoid, I: Sequence, A, bullet=None) -> ConstructionReport:
    """``(p,d,bullet) rho_A (q,e,bullet)`` iff ``x_p d tau_A x_q e``, for all p, q in supp A."""
    S = brandt(M, I)
    bullet = S.I[0] if bullet is None else bullet
    A = tuple((i, M.index(b), k, M.index(c)) for i, b, k, c in A)
    data = BrandtCongruenceData("ii", bullet, A)
    rep = ConstructionReport(
        "brandt_free_transfer_check",
        "(p,d,bullet) rho_A (q,e,bullet) iff x_p d tau_A x_q e, where rho_A = <H_A> on S and "
        "tau_A = <G_A> on the free M-act over supp A",
        {"M": M.size, "I": [str(i) for i in S.I], "bullet": str(bullet),
         "A": data.describe(S)["A"]},
    )
    A_S = regular_act(S)
    rhoA = congruence_closure(A_S, data.quad_pairs(S))
    F, tau, supp = _free_side(S, data)
    rep.artifacts["support"] = [str(i) for i in supp]
    checked = 0
    if F is None:
        rep.notes.append("A is empty, so the biconditional is vacuous")
    else:
        for p in supp:
            for d in M.elements:
                x, fx = S.triple(p, d, bullet), F.element(p, d)
                for q in supp:
                    for e in M.elements:
                        y, fy = S.triple(q, e, bullet), F.element(q, e)
                        checked += 1
                        if rhoA.related(x, y) != tau.related(fx, fy):
                            rep.fail("biconditional fails", left=S.label(x), right=S.label(y),
                                     rho_A=rhoA.related(x, y), tau_A=tau.related(fx, fy))
    rep.artifacts["pairs_checked"] = checked
    # side facts: {1} and {0} are classes and related triples share the third index
    rep.expect(len(rhoA.class_of(S.identity)) == 1, "1 is not a singleton rho_A-class")
    rep.expect(len(rhoA.class_of(S.zero)) == 1, "0 is not a singleton rho_A-class")
    for cls in rhoA.classes():
        thirds = {str(S.decode(x)[2]) for x in cls if S.is_triple(x)}
        if len(thirds) > 1:
            rep.fail("rho_A relates triples with different third index", cls=lab(S, sorted(cls)))
    return rep


def _least(M: FiniteMonoid, pred) -> Optional[int]:
    for m in M.elements:
        if pred(m):
            return m
    return None


# --- annihilators -----------------------------------------------------------------------------

def brandt_annihilator_check(M: FiniteMonoid, I: Sequence, K, a, bullet=None) -> ConstructionReport:
    """R1 u R2 u R3 generates ann(a rho) for rho = <K> on B(M;I)^1."""
    S = brandt(M, I)
    data, norm = brandt_normalize(S, K, bullet)
    H = data.generators(S)
    a = S.index(a)
    one, zero = S.identity, S.zero
    rep = ConstructionReport(
        "brandt_annihilator_check",
        "for a = (u,a,v): R1 from generators of ann(a) in M and (1,(v,1_M,v)), R2 from generators "
        "of ann((x_u a) tau_A), R3 = ((v,h,v),0) over B and the intersection generators; "
        "<R1 u R2 u R3> = ann(a rho)",
        {"M": M.size, "I": [str(i) for i in S.I], "K": lab(S, resolve_pairs(S, K)),
         "a": S.label(a)},
    )
    rep.artifacts["data"] = norm.artifacts["data"]
    rep.failures += norm.failures
    A_S = regular_act(S)
    rho = congruence_closure(A_S, H)
    target = ann_of_class(A_S, rho, a)
    if a == one:
        rep.artifacts["route"] = "identity: ann(1 rho) = rho"
        R = H
    elif rho.related(a, zero):
        rep.artifacts["route"] = "zero: ann(a rho) = S x S"
        R = [(one, zero)]
    else:
        rep.artifacts["route"] = "triple"
        u, x, v = S.decode(a)
        if data.case == "iii" and not _same(u, data.index):
            rep.fail("first index of a differs from the case (iii) index although a is not rho 0")
        T = irredundant_generators(annihilator(regular_act(M), x))
        R1 = [(S.triple(v, s, v), S.triple(v, t, v)) for s, t in T]
        R1.append((one, S.triple(v, M.identity, v)))
        R3, Nrec = [], []
        # the free act is taken over all of I: indices outside supp A are inert there,
        # and zero pairs (j,d) in B can still meet a when u or j lies outside supp A
        F, tau, supp = _free_side(S, data, S.I)
        xu = F.element(u, x)
        U = irredundant_generators(ann_of_class(F, tau, xu))
        R2 = [(S.triple(v, s, v), S.triple(v, t, v)) for s, t in U]
        rep.artifacts["U"] = lab(M, U)
        Q = quotient_act(F, tau)
        top_u = subact_of(Q, [Q.cls(xu)])
        for j, d in data.B:
            xj = F.element(j, d)
            inter = top_u & subact_of(Q, [Q.cls(xj)])
            if not inter:
                continue
            for g in minimal_generating_set(Q, inter):
                w = Q.class_rep[g]
                h = _least(M, lambda m: tau.related(F.act(xu, m), w))
                k = _least(M, lambda m: tau.related(F.act(xj, m), w))
                Nrec.append({"alpha": [str(j), M.label(d)], "w": F.label(w),
                             "h": M.label(h), "k": M.label(k)})
                pair = (S.triple(v, h, v), zero)
                if pair not in R3:
                    R3.append(pair)
        rep.artifacts["T"] = lab(M, T)
        rep.artifacts["N"] = Nrec
        rep.artifacts["R1"], rep.artifacts["R2"], rep.artifacts["R3"] = (
            lab(S, R1), lab(S, R2), lab(S, R3))
        R = R1 + R2 + R3
    rep.artifacts["R"] = lab(S, R)
    diff = partition_difference(congruence_closure(A_S, R), target)
    if diff is not None:
        rep.fail("<R> differs from ann(a rho)", pair=lab(S, diff))
    return rep


# --- intersections ------------------------------------------------------------------------------

def brandt_intersection_check(M: FiniteMonoid, I: Sequence, K, a, b, bullet=None) -> ConstructionReport:
    """U u V (with 0 rho) generates (a rho)S n (b rho)S for rho = <K> on B(M;I)^1."""
    S = brandt(M, I)
    data, norm = brandt_normalize(S, K, bullet)
    bullet = data.bullet
    H = data.generators(S)
    a, b = S.index(a), S.index(b)
    one, zero = S.identity, S.zero
    rep = ConstructionReport(
        "brandt_intersection_check",
        "for triples a = (u,a,v), b = (w,b,z): U = {(u,c,u) rho : c in C} with aM n bM = CM, "
        "V = {(u,ad,bullet) rho : d in D} from the free-act intersection; together with 0 rho "
        "they generate (a rho)S n (b rho)S",
        {"M": M.size, "I": [str(i) for i in S.I], "K": lab(S, resolve_pairs(S, K)),
         "a": S.label(a), "b": S.label(b)},
    )
    rep.artifacts["data"] = norm.artifacts["data"]
    rep.failures += norm.failures
    A_S = regular_act(S)
    rho = congruence_closure(A_S, H)
    Q = quotient_act(A_S, rho)
    want = subact_of(Q, [Q.cls(a)]) & subact_of(Q, [Q.cls(b)])

    mono = None
    if rho.related(a, one):
        mono = b
    elif rho.related(b, one):
        mono = a
    elif rho.related(a, zero) or rho.related(b, zero):
        mono = zero
    elif a == b:
        mono = a
    if mono is not None:
        rep.artifacts["route"] = "monogenic"
        rep.artifacts["generator"] = S.label(mono)
        got = subact_of(Q, [Q.cls(mono)])
    else:
        rep.artifacts["route"] = "triples"
        u, x, v = S.decode(a)
        w, y, z = S.decode(b)
        gens = [Q.cls(zero)]
        C, D = [], []
        if _same(u, w):
            AM = regular_act(M)
            meet = subact_of(AM, [x]) & subact_of(AM, [y])
            if meet:
                C = minimal_generating_set(AM, meet)
                gens += [Q.cls(S.triple(u, c, u)) for c in C]
        F, tau, supp = _free_side(S, data)
        if F is not None and any(_same(u, i) for i in supp) and any(_same(w, i) for i in supp):
            QF = quotient_act(F, tau)
            xu = F.element(u, x)
            inter = subact_of(QF, [QF.cls(xu)]) & subact_of(QF, [QF.cls(F.element(w, y))])
            if inter:
                for g in minimal_generating_set(QF, inter):
                    d = _least(M, lambda m: QF.cls(F.act(xu, m)) == g)
                    D.append(d)
                    gens.append(Q.cls(S.triple(u, M.mul(x, d), bullet)))
        rep.artifacts["C"] = lab(M, C)
        rep.artifacts["D"] = lab(M, D)
        rep.artifacts["W_generators"] = [S.label(Q.class_rep[g]) for g in gens]
        got = subact_of(Q, gens)
    rep.expect(got == want, "generated subact differs from (a rho)S n (b rho)S",
               missing=sorted(S.label(Q.class_rep[g]) for g in want - got),
               extra=sorted(S.label(Q.class_rep[g]) for g in got - want))
    return rep


# --- zero adjunction ---------------------------------------------------------------------------

def zero_adjunction_check(M: FiniteMonoid, H, a, b=None) -> ConstructionReport:
    """rho^0 = rho u {(0,0)}, ann(a rho^0) = ann(a rho) u {(0,0)}, and generating sets
    pass back from M with a zero adjoined to M."""
    Z = adjoin_zero(M)
    zero = Z.zero
    H = resolve_pairs(M, H)
    a = M.index(a)
    b = a if b is None else M.index(b)
    rep = ConstructionReport(
        "zero_adjunction_check",
        "rho^0 = rho u {(0,0)}; ann(a rho^0) = ann(a rho) u {(0,0)}; generators of ann(a rho^0) "
        "and of (a rho^0)M0 n (b rho^0)M0 pass to M",
        {"M": M.size, "H": lab(M, H), "a": M.label(a), "b": M.label(b)},
    )
    AM, AZ = regular_act(M), regular_act(Z)
    Mel = list(M.elements)
    rho = congruence_closure(AM, H)
    rho0 = congruence_closure(AZ, H)
    rep.expect(set(rho0.class_of(zero)) == {zero}, "0 rho^0 is not {0}")
    rep.expect(restrict_to(rho0, Mel) == rho.reps, "rho^0 restricted to M differs from rho")
    ann0 = ann_of_class(AZ, rho0, a)
    ann = ann_of_class(AM, rho, a)
    rep.expect(set(ann0.class_of(zero)) == {zero}, "0 is not a singleton class of ann(a rho^0)")
    rep.expect(restrict_to(ann0, Mel) == ann.reps, "ann(a rho^0) restricted to M differs from ann(a rho)")
    G = [p for p in irredundant_generators(ann0) if zero not in p]
    rep.artifacts["ann_generators"] = lab(Z, G)
    diff = partition_difference(congruence_closure(AM, G), ann)
    if diff is not None:
        rep.fail("generators of ann(a rho^0) do not generate ann(a rho)", pair=lab(M, diff))
    Q0, Q = quotient_act(AZ, rho0), quotient_act(AM, rho)
    inter0 = subact_of(Q0, [Q0.cls(a)]) & subact_of(Q0, [Q0.cls(b)])
    X = [Q0.class_rep[g] for g in minimal_generating_set(Q0, inter0)]
    X = [x for x in X if x != zero]
    rep.artifacts["X"] = lab(Z, X)
    got = subact_of(Q, [Q.cls(x) for x in X])
    want = subact_of(Q, [Q.cls(a)]) & subact_of(Q, [Q.cls(b)])
    rep.expect(got == want, "{x rho : x in X} does not generate (a rho)M n (b rho)M")
    return rep
