"""Checks for monoid subsemigroups: retractions, adjoined identities, monoid
J-classes, and the tilde-relation conditions (a)-(d)."""
from __future__ import annotations

import random
from typing import Iterable, Optional, Sequence

from ..acts import FiniteRightAct, minimal_generating_set, regular_act
from ..congruence import (ActCongruence, ann_of_class, congruence_closure, irredundant_generators,
                          quotient_act, restrict_to, srcep_check)
from ..constructions import DirectProduct, adjoin_identity, submonoid
from ..monoid import (FiniteMonoid, MonoidError, Verdict, green, is_right_compatible,
                      subsemigroup_identity, tilde_relations, unitary_status)
from .report import ConstructionReport, lab, partition_difference, resolve, resolve_pairs, subact_of


# --- retractions ----------------------------------------------------------------

def retraction_check(S: FiniteMonoid, T: Iterable, theta_map: Sequence) -> ConstructionReport:
    """Whether ``theta_map`` (image of each element of S) is a retraction of S onto T."""
    T = frozenset(resolve(S, T))
    th = [S.index(x) for x in theta_map]
    if len(th) != S.size:
        raise ValueError("theta must give an image for every element")
    rep = ConstructionReport(
        "retraction_check",
        "theta is a morphism of S with image T that fixes T pointwise",
        {"size": S.size, "T": lab(S, sorted(T))},
    )
    for x in S.elements:
        for y in S.elements:
            if th[S.mul(x, y)] != S.mul(th[x], th[y]):
                rep.fail("not a morphism", x=S.label(x), y=S.label(y))
                break
        if rep.failures:
            break
    rep.expect(frozenset(th) == T, "image differs from T", image=lab(S, sorted(set(th))))
    for t in sorted(T):
        if th[t] != t:
            rep.fail("theta moves an element of T", t=S.label(t))
    rep.artifacts["theta"] = {S.label(x): S.label(th[x]) for x in S.elements}
    return rep


def ideal_retraction(S: FiniteMonoid, I: Iterable) -> tuple[list, list]:
    """``a -> ea`` for a two-sided ideal ``I`` with identity ``e``; returns (T, theta)."""
    I = sorted(set(resolve(S, I)))
    Iset = set(I)
    for x in I:
        for s in S.elements:
            if S.mul(x, s) not in Iset or S.mul(s, x) not in Iset:
                raise MonoidError("not a two-sided ideal")
    e = subsemigroup_identity(S.mul, I)
    return I, [S.mul(e, a) for a in S.elements]


def projection_retraction(P: DirectProduct) -> tuple[list, list]:
    """``(s, t) -> (s, 1_T)`` onto ``S x {1_T}``."""
    one = P.right.identity
    theta = [P.pair(P.decode(x)[0], one) for x in P.elements]
    return sorted(set(theta)), theta


# --- adjoined identity -------------------------------------------------------------

def identity_adjunction_check(M: FiniteMonoid, H, a, b=None) -> ConstructionReport:
    """On S = M with a new identity adjoined: nu = rho n (M x M) is generated by K, and
    ann(a rho) by ann(a nu) together with (1_M, new 1)."""
    S = adjoin_identity(M)
    new, one = S.identity, M.identity
    H = resolve_pairs(S, H)
    a = S.index(a)
    rep = ConstructionReport(
        "identity_adjunction_check",
        "nu = rho n (M x M) = <K>_M with K = (H n M x M) u {(1_M, x) : (new1, x) in H-bar}; "
        "ann(a rho) = <ann(a nu) u {(1_M, new1)}>",
        {"M": M.size, "H": lab(S, H), "a": S.label(a)},
    )
    AS, AM = regular_act(S), regular_act(M)
    rho = congruence_closure(AS, H)
    Mel = list(M.elements)
    nu = ActCongruence(AM, restrict_to(rho, Mel))
    hbar = H + [(d, c) for c, d in H]
    K = [(c, d) for c, d in H if c != new and d != new]
    K += [(one, x) for c, x in hbar if c == new and x != new]
    K = sorted(set(K))
    genK = congruence_closure(AM, K)
    rep.artifacts["K"] = lab(M, K)
    diff = partition_difference(genK, nu)
    if diff is not None:
        rep.fail("<K>_M differs from the restriction of rho", pair=lab(M, diff))
    if a == new:
        rep.notes.append("a is the adjoined identity, so ann(a rho) = rho")
        diff = partition_difference(ann_of_class(AS, rho, a), rho)
        rep.expect(diff is None, "ann(1 rho) != rho")
        return rep
    ann_nu = ann_of_class(AM, nu, a)
    gens = irredundant_generators(ann_nu)
    kappa = congruence_closure(AS, gens + [(one, new)])
    target = ann_of_class(AS, rho, a)
    rep.artifacts["ann_a_nu_generators"] = lab(M, gens)
    diff = partition_difference(kappa, target)
    if diff is not None:
        rep.fail("kappa differs from ann(a rho)", pair=lab(S, diff))
    if b is not None:
        b = S.index(b)
        Q = quotient_act(AS, rho)
        top = subact_of(Q, [Q.cls(new)])
        Sa, Sb = subact_of(Q, [Q.cls(a)]), subact_of(Q, [Q.cls(b)])
        if Sa != top and Sb != top:
            QM = quotient_act(AM, nu)
            inter_M = subact_of(QM, [QM.cls(a)]) & subact_of(QM, [QM.cls(b)])
            inter_S = Sa & Sb
            mapped = {Q.cls(QM.class_rep[k]) for k in inter_M}
            rep.expect(mapped == set(inter_S), "(a rho)S n (b rho)S differs from (a nu)M n (b nu)M",
                       b=S.label(b))
    return rep


# --- monoid J-classes ------------------------------------------------------------------

def monoid_jclasses(S: FiniteMonoid) -> list[tuple]:
    """J-classes that are subsemigroups with an identity, as (elements, identity)."""
    out = []
    for J in green(S).classes("J"):
        try:
            e = subsemigroup_identity(S.mul, J)
        except MonoidError:
            continue
        out.append((J, e))
    return out


def _sub_act(S: FiniteMonoid, elements: Sequence[int]):
    sub, embed = submonoid(S, elements)
    pos = {x: k for k, x in enumerate(embed)}
    return sub, embed, pos


def jclass_check(S: FiniteMonoid, x, H=(), a=None, b=None) -> ConstructionReport:
    """For the monoid J-class J of ``x``: unitary and SRCEP, H' generating ann_J(a rho),
    and Y' generating (a rho)J n (b rho)J."""
    x = S.index(x)
    Jc = green(S).class_of("J", x)
    e = subsemigroup_identity(S.mul, Jc)
    H = resolve_pairs(S, H)
    sub, embed, pos = _sub_act(S, Jc)
    for c, d in H:
        if c not in pos or d not in pos:
            raise ValueError("generating pairs must lie in J x J")
    a = e if a is None else S.index(a)
    b = a if b is None else S.index(b)
    if a not in pos or b not in pos:
        raise ValueError("a and b must lie in J")
    rep = ConstructionReport(
        "jclass_check",
        "a monoid J-class J is weakly left and right unitary with SRCEP; "
        "H' = {(ec,ed) in J x J} generates ann_J(a rho) and Y' = {x' rho : x' in eX n J} "
        "generates (a rho)J n (b rho)J",
        {"size": S.size, "J": lab(S, Jc), "e": S.label(e), "H": lab(S, H),
         "a": S.label(a), "b": S.label(b)},
    )
    for side in ("left", "right"):
        st = unitary_status(S, Jc, side)
        rep.expect(st.weakly_unitary is Verdict.TRUE, f"J is not weakly {side} unitary",
                   witness=lab(S, st.weak_witness) if st.weak_witness else None)
    sr = srcep_check(S, Jc, H)
    rep.expect(sr.holds, "J lacks SRCEP for this rho",
               restriction=sr.restriction_witness, classes=sr.class_witness)

    AS, AJ = regular_act(S), regular_act(sub)
    rhoS = congruence_closure(AS, H)
    rho = congruence_closure(AJ, [(pos[c], pos[d]) for c, d in H])
    G = irredundant_generators(ann_of_class(AS, rhoS, a))
    Hp = []
    for c, d in G:
        ec, ed = S.mul(e, c), S.mul(e, d)
        if ec in pos and ed in pos and (ec, ed) not in Hp:
            Hp.append((ec, ed))
    rep.artifacts["ann_generators_S"] = lab(S, G)
    rep.artifacts["H_prime"] = lab(S, Hp)
    tau = congruence_closure(AJ, [(pos[c], pos[d]) for c, d in Hp])
    diff = partition_difference(tau, ann_of_class(AJ, rho, pos[a]))
    if diff is not None:
        rep.fail("<H'>_J differs from ann_J(a rho)", pair=lab(sub, diff))

    Q = quotient_act(AS, rhoS)
    inter = subact_of(Q, [Q.cls(a)]) & subact_of(Q, [Q.cls(b)])
    Y = minimal_generating_set(Q, inter) if inter else []
    X = [Q.class_rep[y] for y in Y]
    Xp = sorted({S.mul(e, v) for v in X} & set(pos))
    QJ = quotient_act(AJ, rho)
    got = subact_of(QJ, [QJ.cls(pos[v]) for v in Xp])
    want = subact_of(QJ, [QJ.cls(pos[a])]) & subact_of(QJ, [QJ.cls(pos[b])])
    rep.artifacts["X"] = lab(S, X)
    rep.artifacts["X_prime"] = lab(S, Xp)
    rep.expect(got == want, "Y'J differs from (a rho)J n (b rho)J",
               missing=len(want - got), extra=len(got - want))
    return rep


# --- tilde conditions ---------------------------------------------------------------------

def find_pq(S: FiniteMonoid, u: int, v: int, Mset) -> Optional[tuple]:
    """Least (p, q) with u = u(pq), v = v(pq) and up, vp in M."""
    for p in S.elements:
        up, vp = S.mul(u, p), S.mul(v, p)
        if up not in Mset or vp not in Mset:
            continue
        for q in S.elements:
            pq = S.mul(p, q)
            if S.mul(u, pq) == u and S.mul(v, pq) == v:
                return (p, q)
    return None


def tilde_conditions_check(S: FiniteMonoid, M: Iterable, E: Iterable, H=None, a=None, b=None,
                           samples: int = 2, seed: int = 0) -> ConstructionReport:
    """Conditions (a)-(d) for M inside S relative to E; when they hold, the K' and T
    constructions for congruences on M."""
    Ml = sorted(set(resolve(S, M)))
    Mset = set(Ml)
    E = sorted(set(resolve(S, E)))
    e = subsemigroup_identity(S.mul, Ml)
    rep = ConstructionReport(
        "tilde_conditions_check",
        "(a) e in E; (b) tilde-H_E is a right congruence; (c) M is the tilde-H_E-class of e; "
        "(d) e R~ u H~ v implies u = upq, v = vpq with up, vp in M; then K' generates ann(a rho) "
        "and T generates (a rho)M n (b rho)M",
        {"size": S.size, "M": lab(S, Ml), "E": lab(S, E), "e": S.label(e)},
    )
    tr = tilde_relations(S, E)
    conds = {}
    conds["a"] = rep.expect(e in E, "(a) fails: e is not in E")
    bad = is_right_compatible(S, tr.H)
    conds["b"] = rep.expect(bad is None, "(b) fails: tilde-H_E is not a right congruence",
                            witness=lab(S, list(bad)) if bad else None)
    cls_e = {x for x in S.elements if tr.H[x] == tr.H[e]}
    conds["c"] = rep.expect(cls_e == Mset, "(c) fails: M is not the tilde-H_E-class of e",
                            h_class=lab(S, sorted(cls_e)))
    choices = {}
    d_ok = True
    for u in S.elements:
        if tr.R[u] != tr.R[e]:
            continue
        for v in S.elements:
            if tr.H[v] != tr.H[u]:
                continue
            pq = find_pq(S, u, v, Mset)
            if pq is None:
                d_ok = False
                rep.fail("(d) fails: no p, q for u, v", u=S.label(u), v=S.label(v))
            else:
                choices[(u, v)] = pq
    conds["d"] = d_ok
    rep.artifacts["conditions"] = conds
    rep.artifacts["pq"] = {f"{S.label(u)}|{S.label(v)}": [S.label(p), S.label(q)]
                           for (u, v), (p, q) in sorted(choices.items())}
    if not all(conds.values()):
        return rep

    sub, embed, pos = _sub_act(S, Ml)
    AS, AM = regular_act(S), regular_act(sub)
    rng = random.Random(seed)
    if H is not None:
        pair_sets = [resolve_pairs(S, H)]
    else:
        pair_sets = [[]]
        for _ in range(samples):
            pair_sets.append([(rng.choice(Ml), rng.choice(Ml)) for _ in range(rng.randint(1, 2))])
    a_list = [S.index(a)] if a is not None else Ml
    b_list = [S.index(b)] if b is not None else Ml
    runs = []
    for Hs in pair_sets:
        for c, d in Hs:
            if c not in Mset or d not in Mset:
                raise ValueError("generating pairs must lie in M x M")
        rhoS = congruence_closure(AS, Hs)
        rho = congruence_closure(AM, [(pos[c], pos[d]) for c, d in Hs])
        QS, QM = quotient_act(AS, rhoS), quotient_act(AM, rho)
        for x in a_list:
            K = irredundant_generators(ann_of_class(AS, rhoS, x))
            Kp = []
            for u, v in K:
                eu, ev = S.mul(e, u), S.mul(e, v)
                if tr.R[eu] == tr.R[e] and tr.H[eu] == tr.H[ev]:
                    p, _ = choices[(eu, ev)]
                    pair = (S.mul(eu, p), S.mul(ev, p))
                    if pair not in Kp:
                        Kp.append(pair)
            tau = congruence_closure(AM, [(pos[c], pos[d]) for c, d in Kp])
            diff = partition_difference(tau, ann_of_class(AM, rho, pos[x]))
            if diff is not None:
                rep.fail("<K'>_M differs from ann(a rho)", H=lab(S, Hs), a=S.label(x),
                         pair=lab(sub, diff))
            for y in b_list:
                inter = subact_of(QS, [QS.cls(x)]) & subact_of(QS, [QS.cls(y)])
                C = [QS.class_rep[k] for k in minimal_generating_set(QS, inter)] if inter else []
                T = []
                for c in C:
                    if tr.R[c] == tr.R[e]:
                        p, _ = choices[(c, c)]
                        T.append(QM.cls(pos[S.mul(c, p)]))
                got = subact_of(QM, T)
                want = subact_of(QM, [QM.cls(pos[x])]) & subact_of(QM, [QM.cls(pos[y])])
                if got != want:
                    rep.fail("T does not generate (a rho)M n (b rho)M", H=lab(S, Hs),
                             a=S.label(x), b=S.label(y))
            runs.append({"H": lab(S, Hs), "a": S.label(x), "K_prime": lab(S, Kp)})
    rep.artifacts["runs"] = runs if len(runs) <= 20 else runs[:20]
    rep.artifacts["run_count"] = len(runs)
    return rep
