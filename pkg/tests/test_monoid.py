import numpy as np
import pytest

from coact.computable import BicyclicMonoid
from coact.constructions import (brandt, cyclic_group, direct_product, full_transformation_monoid,
                                 nilpotent_monoid, symmetric_inverse_monoid, u2)
from coact.monoid import (FiniteMonoid, MonoidError, Verdict, green, idempotents, is_inverse,
                          is_regular, natural_order, non_regular_element, partition_classes,
                          refines, tilde_relations, unitary_status, validate)


def labels(m, xs):
    return {m.label(x) for x in xs}


class TestValidate:
    def test_u2_ok(self, U2):
        assert validate(U2).ok

    def test_non_associative_names_triple(self):
        # (a*a)*a = b*a = b but a*(a*a) = a*b = a
        rows = [[0, 1, 2], [1, 2, 1], [2, 2, 2]]
        v = validate(FiniteMonoid(np.array(rows), 0, labels=["1", "a", "b"]))
        assert not v.ok
        assert "associativity" in v.reason
        a, b, c = v.witness
        t = rows
        assert t[t[a][b]][c] != t[a][t[b][c]]

    def test_brandt_trivial_ok(self, b12):
        assert validate(b12).ok
        assert b12.size == 6


class TestIdempotents:
    def test_u2(self, U2):
        assert labels(U2, idempotents(U2)) == {"1", "e"}

    def test_z2(self, Z2):
        assert labels(Z2, idempotents(Z2)) == {"1"}

    def test_brandt(self, b12):
        assert labels(b12, idempotents(b12)) == {"1!", "0!", "(1,1,1)", "(2,1,2)"}


class TestNaturalOrder:
    def test_u2(self, U2):
        one, e = U2.index("1"), U2.index("e")
        assert natural_order(U2, e, one)
        assert not natural_order(U2, one, e)

    def test_brandt_zero_below(self, b12):
        assert natural_order(b12, b12.index("0!"), b12.index("(1,1,1)"))

    def test_non_idempotent_rejected(self, Z2):
        with pytest.raises(MonoidError):
            natural_order(Z2, Z2.index("g"), Z2.index("1"))


class TestGreen:
    def test_group_single_class(self, Z2):
        g = green(Z2)
        for name in "RLHDJ":
            assert len(g.classes(name)) == 1

    def test_u2(self, U2):
        g = green(U2)
        for name in "RLHJ":
            assert sorted(labels(U2, c) for c in [set(c) for c in g.classes(name)]) == \
                sorted([{"1"}, {"e"}])

    def test_brandt_r_classes(self, b12):
        got = sorted(sorted(b12.label(x) for x in c) for c in green(b12).classes("R"))
        assert got == sorted([["1!"], ["0!"], ["(1,1,1)", "(1,1,2)"], ["(2,1,1)", "(2,1,2)"]])

    @pytest.mark.parametrize("m", [u2(), brandt(cyclic_group(2), [1, 2]), full_transformation_monoid(3),
                                   nilpotent_monoid(), symmetric_inverse_monoid(2)],
                             ids=["U2", "B(Z2;2)", "T3", "N3", "I2"])
    def test_structure_invariants(self, m):
        g = green(m)
        for a in m.elements:
            for b in m.elements:
                assert (g.H[a] == g.H[b]) == (g.R[a] == g.R[b] and g.L[a] == g.L[b])
                assert (g.J[a] == g.J[b]) == (g.leqJ[a][b] and g.leqJ[b][a])
        assert refines(g.R, g.D) and refines(g.L, g.D)


class TestRegular:
    def test_brandt_over_group(self, bz2):
        assert is_regular(bz2) and is_inverse(bz2)

    def test_nilpotent(self):
        m = nilpotent_monoid()
        assert not is_regular(m)
        assert m.label(non_regular_element(m)) == "a"

    def test_u2(self, U2):
        assert is_regular(U2) and is_inverse(U2)

    def test_t3_regular_not_inverse(self):
        m = full_transformation_monoid(3)
        assert is_regular(m) and not is_inverse(m)


class TestTilde:
    def test_identity_only_is_universal(self, bz2):
        t = tilde_relations(bz2, [bz2.identity])
        assert len(partition_classes(t.R)) == 1

    def test_brandt_rows(self, bz2):
        E = [bz2.index("(1,1,1)"), bz2.index("(2,1,2)"), bz2.zero]
        t = tilde_relations(bz2, E)
        for x in bz2.elements:
            for y in bz2.elements:
                dx, dy = bz2.decode(x), bz2.decode(y)
                if dx is not None and dy is not None:
                    assert (t.R[x] == t.R[y]) == (dx[0] == dy[0])
        for special in (bz2.identity, bz2.zero):
            assert [x for x in bz2.elements if t.R[x] == t.R[special]] == [special]

    @pytest.mark.parametrize("m", [u2(), brandt(cyclic_group(2), [1, 2]), full_transformation_monoid(3),
                                   symmetric_inverse_monoid(2)], ids=["U2", "B", "T3", "I2"])
    def test_regular_full_E_is_green(self, m):
        t = tilde_relations(m, idempotents(m))
        g = green(m)
        assert t.R == g.R and t.L == g.L

    def test_green_refines_tilde(self):
        m = full_transformation_monoid(3)
        g = green(m)
        E = idempotents(m)[:3]
        t = tilde_relations(m, E)
        assert refines(g.R, t.R) and refines(g.L, t.L) and refines(g.H, t.H)

    def test_non_idempotent_rejected(self, Z2):
        with pytest.raises(MonoidError):
            tilde_relations(Z2, [Z2.index("g")])


class TestUnitary:
    def test_bicyclic_weakly_not_left(self):
        B = BicyclicMonoid()
        st = unitary_status(B, [(1, 1)], "left", radius=6)
        assert st.weakly_left_unitary is Verdict.UNKNOWN  # no counterexample inside the ball
        assert st.left_unitary is Verdict.FALSE
        a, b = st.unitary_witness
        assert (a, b) == ((1, 1), (0, 0))
        assert B.multiply(a, b) == (1, 1)

    def test_whole_monoid(self, U2):
        st = unitary_status(U2, list(U2.elements))
        assert st.left_unitary is Verdict.TRUE and st.weakly_left_unitary is Verdict.TRUE

    def test_brandt_exhaustive(self, b12):
        T = [b12.identity, b12.index("(1,1,1)")]
        st = unitary_status(b12, T)
        # brute force over a, ab in T
        Tset = set(T)
        expect = all(b in Tset for a in T for b in b12.elements if b12.mul(a, b) in Tset)
        assert (st.left_unitary is Verdict.TRUE) == expect
        if not expect:
            a, b = st.unitary_witness
            assert b12.mul(a, b) in Tset and b not in Tset

    def test_not_subsemigroup(self, U2):
        with pytest.raises(MonoidError):
            unitary_status(direct_product(U2, U2), [1, 2])

    def test_radius_required(self):
        with pytest.raises(ValueError):
            unitary_status(BicyclicMonoid(), [(1, 1)])

    def test_verdict_not_boolean(self):
        with pytest.raises(TypeError):
            bool(Verdict.TRUE)
