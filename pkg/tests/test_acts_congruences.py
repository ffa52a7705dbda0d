import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coact.acts import (ActError, FreeAct, free_act, ideal_quotient, is_minimal_generating_set,
                        is_right_ideal, minimal_generating_set, regular_act, rho_closure,
                        subact_generated, subact_intersection)
from coact.congruence import (ActCongruence, annihilator, ann_of_class, congruence_closure,
                              h_sequence_witness, quotient_act, right_congruence, srcep_check,
                              symmetric_closure)
from coact.constructions import (brandt, cyclic_group, full_transformation_monoid,
                                 transformation_monoid, u2)
from coact.harness.fuzz import random_act, random_small_monoid
from coact.oracles import hsequence_partition


class TestFreeAct:
    def test_u2_one_generator(self, U2):
        F = free_act(U2, ["x"])
        assert [F.label(a) for a in F.elements] == ["(x,1)", "(x,e)"]
        assert F.act(F.element("x"), U2.index("e")) == F.element("x", "e")

    def test_z2_two_generators(self, Z2):
        F = free_act(Z2, ["x", "y"])
        assert F.size == 4
        assert len({F.orbit(a) for a in F.elements}) == 2

    def test_defining_law(self, bz2):
        F = FreeAct(bz2, ["x", "y"])
        for a in F.elements:
            x, s = F.decode(a)
            for t in bz2.elements:
                assert F.decode(F.act(a, t)) == (x, bz2.mul(s, t))

    def test_validates(self, bz2):
        assert FreeAct(bz2, ["x"]).validate() is None


class TestClosure:
    def test_empty(self, backend, bz2):
        rho = congruence_closure(regular_act(bz2), [])
        assert rho.is_identity()

    def test_one_zero_universal(self, backend, b12):
        rho = right_congruence(b12, [("1!", "0!")])
        assert rho.is_universal()

    def test_u2_universal(self, backend, U2):
        assert right_congruence(U2, [("1", "e")]).is_universal()

    def test_generator_propagation_agrees(self, backend):
        T3 = full_transformation_monoid(3)
        gens = ["120", "102", "011"]  # generators of T3: a 3-cycle, a transposition, a rank-2 map
        A = regular_act(T3)
        rng = random.Random(4)
        for _ in range(20):
            H = [(rng.randrange(27), rng.randrange(27)) for _ in range(rng.randint(1, 3))]
            assert congruence_closure(A, H, generators=gens) == congruence_closure(A, H)


class TestWitness:
    def test_trivial(self, U2):
        w = h_sequence_witness(regular_act(U2), [], "e", "e")
        assert len(w) == 0

    def test_u2_single_step(self, backend, U2):
        A = regular_act(U2)
        w = h_sequence_witness(A, [("1", "e")], "1", "e")
        assert len(w) == 1
        k, t = w.steps[0]
        assert w.pairs[k] == (U2.index("1"), U2.index("e")) and t == U2.identity
        assert w.replay(A.act)

    def test_brandt_replay(self, backend, b12):
        A = regular_act(b12)
        w = h_sequence_witness(A, [("1!", "0!")], "(1,1,2)", "0!")
        assert w.replay(A.act)
        (c, d), = w.chain(A.act)
        assert b12.label(c) == "(1,1,2)" and b12.label(d) == "0!"

    def test_unrelated(self, U2):
        assert h_sequence_witness(regular_act(U2), [], "1", "e") is None


class TestQuotient:
    def test_identity(self, bz2):
        A = regular_act(bz2)
        Q = quotient_act(A, congruence_closure(A, []))
        assert Q.size == A.size
        assert all(Q.class_rep[Q.act(Q.cls(a), s)] == A.act(a, s) for a in A.elements
                   for s in bz2.elements)

    def test_universal(self, b12):
        A = regular_act(b12)
        assert quotient_act(A, right_congruence(b12, [("1!", "0!")])).size == 1

    def test_size_is_class_count(self, bz2):
        rho = right_congruence(bz2, [("(1,g,1)", "(1,1,1)")])
        assert quotient_act(regular_act(bz2), rho).size == rho.num_classes

    def test_not_congruence(self):
        T2 = full_transformation_monoid(2)
        A = regular_act(T2)
        # relate the identity to one constant map only; the transposition separates them
        keys = [0 if T2.label(x) in ("01", "00") else x + 1 for x in T2.elements]
        with pytest.raises(ActError):
            quotient_act(A, ActCongruence.from_keys(A, keys))


class TestAnnihilator:
    def test_free_basis_identity(self, bz2):
        F = FreeAct(bz2, ["x"])
        assert annihilator(F, F.element("x")).is_identity()

    def test_brandt_scan(self, b12):
        A = regular_act(b12)
        a = b12.index("(1,1,1)")
        ann = annihilator(A, a)
        for u in b12.elements:
            for v in b12.elements:
                assert ann.related(u, v) == (b12.mul(a, u) == b12.mul(a, v))

    @pytest.mark.parametrize("label", ["(1,1,1)", "(2,g,1)", "0!", "1!"])
    def test_quotient_iso_principal(self, bz2, label):
        A = regular_act(bz2)
        a = bz2.index(label)
        ann = annihilator(A, a)
        # u ann(a) -> au is a well-defined bijection S/ann(a) -> aS
        image = {}
        for u in bz2.elements:
            image.setdefault(ann.rep(u), set()).add(bz2.mul(a, u))
        assert all(len(v) == 1 for v in image.values())
        targets = [next(iter(v)) for v in image.values()]
        assert len(set(targets)) == len(targets)
        assert set(targets) == set(bz2.rows[a])

    def test_ann_of_class(self, bz2):
        A = regular_act(bz2)
        rho = right_congruence(bz2, [("(1,g,1)", "(1,1,1)")])
        a = bz2.index("(1,1,2)")
        ann = ann_of_class(A, rho, a)
        for u in bz2.elements:
            for v in bz2.elements:
                assert ann.related(u, v) == rho.related(bz2.mul(a, u), bz2.mul(a, v))


class TestSubacts:
    def test_identity_generates(self, bz2):
        A = regular_act(bz2)
        assert subact_generated(A, [bz2.identity]) == frozenset(A.elements)

    def test_distinct_rows_meet_at_zero(self, b12):
        A = regular_act(b12)
        U = subact_generated(A, [b12.index("(1,1,1)")])
        V = subact_generated(A, [b12.index("(2,1,1)")])
        assert subact_intersection(A, U, V) == {b12.zero}

    def test_minimal_zero(self, b12):
        A = regular_act(b12)
        assert minimal_generating_set(A, [b12.zero]) == [b12.zero]

    def test_minimality(self):
        T3 = full_transformation_monoid(3)
        A = regular_act(T3)
        U = subact_generated(A, [T3.index("011"), T3.index("000"), T3.index("122")])
        gens = minimal_generating_set(A, U)
        assert is_minimal_generating_set(A, U, gens)

    def test_empty_subact(self, U2):
        A = regular_act(U2)
        assert subact_generated(A, []) == frozenset()
        assert minimal_generating_set(A, []) == []


class TestIdeals:
    def test_identity_closure(self, bz2):
        A = regular_act(bz2)
        I = subact_generated(A, [bz2.index("(1,g,2)")])
        assert rho_closure(bz2, I, congruence_closure(A, [])) == I

    def test_quotient_by_one(self, bz2):
        I = subact_generated(regular_act(bz2), [bz2.index("(2,1,1)")])
        assert ideal_quotient(bz2, I, bz2.identity) == I

    def test_zero_ideal_closure(self, bz2):
        rho = right_congruence(bz2, [("(1,g,1)", "1!")])
        got = rho_closure(bz2, [bz2.zero], rho)
        R2 = {x for x in bz2.elements if bz2.decode(x) is not None and bz2.decode(x)[0] == 2}
        assert got == {bz2.zero} | R2

    def test_empty_quotient(self, bz2):
        I = subact_generated(regular_act(bz2), [bz2.index("(1,1,1)")])
        assert ideal_quotient(bz2, I, bz2.index("(2,1,2)")) == {x for x in bz2.elements
                                                                if bz2.mul(bz2.index("(2,1,2)"), x) in I}

    def test_not_ideal(self, bz2):
        with pytest.raises(ActError):
            ideal_quotient(bz2, [bz2.index("(1,1,1)")], bz2.identity)


class TestSRCEP:
    def test_whole_monoid(self, bz2):
        assert srcep_check(bz2, list(bz2.elements), [("(1,g,1)", "1!")]).holds

    def test_engineered_failure(self):
        S = transformation_monoid([(1, 1, 0), (2, 2, 1)], 3)
        T = [S.index(x) for x in ["012", "110", "111", "222", "000"]]
        res = srcep_check(S, T, [("110", "222")])
        assert not res.restriction_exact
        x, y = res.restriction_witness
        rho_S = right_congruence(S, [("110", "222")])
        assert rho_S.related(x, y)

    def test_pairs_outside(self, bz2):
        T = [bz2.identity, bz2.index("(1,1,1)")]
        with pytest.raises(ActError):
            srcep_check(bz2, T, [("(1,g,1)", "1!")])


# --- properties over random instances -------------------------------------------------------

instances = st.integers(0, 2**32 - 1)


def _instance(seed):
    rng = random.Random(seed)
    m, maps, degree = random_small_monoid(rng, 8)
    A = random_act(rng, m, maps, degree, 12)
    H = [(rng.randrange(A.size), rng.randrange(A.size)) for _ in range(rng.randint(0, 4))]
    return rng, m, A, H


@settings(max_examples=60, deadline=None)
@given(instances)
def test_closure_matches_oracle(seed):
    _, _, A, H = _instance(seed)
    assert congruence_closure(A, H).reps == tuple(hsequence_partition(A, H))


@settings(max_examples=60, deadline=None)
@given(instances)
def test_witnesses_replay(seed):
    rng, _, A, H = _instance(seed)
    rho = congruence_closure(A, H)
    for _ in range(5):
        a, b = rng.randrange(A.size), rng.randrange(A.size)
        w = rho.witness(a, b)
        assert (w is not None) == rho.related(a, b)
        if w is not None:
            assert w.replay(A.act)


@settings(max_examples=40, deadline=None)
@given(instances)
def test_symmetric_closure_same(seed):
    _, _, A, H = _instance(seed)
    assert congruence_closure(A, H) == congruence_closure(A, symmetric_closure(H))


@settings(max_examples=40, deadline=None)
@given(instances)
def test_monotone(seed):
    rng, _, A, H = _instance(seed)
    more = H + [(rng.randrange(A.size), rng.randrange(A.size))]
    assert congruence_closure(A, H).refines(congruence_closure(A, more))


@settings(max_examples=40, deadline=None)
@given(instances)
def test_closure_is_congruence(seed):
    _, _, A, H = _instance(seed)
    assert congruence_closure(A, H).is_congruence() is None


@settings(max_examples=40, deadline=None)
@given(instances)
def test_backends_agree(seed):
    from coact import kernels
    _, _, A, H = _instance(seed)
    parts = set()
    prev = kernels.BACKEND
    try:
        for b in kernels.BACKENDS:
            kernels.use_backend(b)
            parts.add(congruence_closure(A, H).reps)
    finally:
        kernels.use_backend(prev)
    assert len(parts) == 1


@settings(max_examples=40, deadline=None)
@given(instances)
def test_ideal_quotient_constant_on_classes(seed):
    rng = random.Random(seed)
    m, _, _ = random_small_monoid(rng, 8)
    A = regular_act(m)
    rho = congruence_closure(A, [(rng.randrange(m.size), rng.randrange(m.size))
                                 for _ in range(rng.randint(0, 3))])
    I = subact_generated(A, rng.sample(range(m.size), rng.randint(0, min(2, m.size))))
    J = rho_closure(m, I, rho)
    assert J >= I and is_right_ideal(m, J)
    for x in m.elements:
        for y in rho.class_of(x):
            assert ideal_quotient(m, J, x) == ideal_quotient(m, J, y)
