import itertools

import pytest

from coact.computable import ONE, check_associative
from coact.constructions import (ZERO_ENTRY, BREndo, adjoin_identity, adjoin_zero, bicyclic, brandt,
                                 bruck_reilly, cyclic_group, direct_product, extended_bruck_reilly,
                                 free_monoid, full_transformation_monoid, isomorphism_holds,
                                 rees_matrix, trivial_monoid, u2)
from coact.monoid import MonoidError, green, idempotents, natural_order, validate


class TestAdjoin:
    def test_identity_on_u2(self, U2):
        m = adjoin_identity(U2)
        assert m.size == 3 and validate(m).ok
        new, e, old = m.index("1!"), m.index("e"), m.index("1")
        assert m.identity == new == m.size - 1
        assert m.mul(new, e) == e
        assert m.mul(old, old) == old

    def test_identity_on_group_not_group(self, Z2):
        m = adjoin_identity(Z2)
        assert m.size == 3
        # the old identity is a second idempotent, so no longer a group
        assert len(idempotents(m)) == 2
        assert len(green(m).classes("H")) > 1

    def test_twice(self, U2):
        assert adjoin_identity(adjoin_identity(U2)).size == U2.size + 2

    def test_zero(self, Z2):
        m = adjoin_zero(Z2)
        assert m.size == 3 and m.zero == m.size - 1 and validate(m).ok

    @pytest.mark.parametrize("base", [cyclic_group(2), u2(), full_transformation_monoid(2)])
    def test_zero_no_divisors(self, base):
        m = adjoin_zero(base)
        for a in m.elements:
            for b in m.elements:
                if m.mul(a, b) == m.zero:
                    assert m.zero in (a, b)

    @pytest.mark.parametrize("base", [cyclic_group(2), u2(), cyclic_group(3)])
    def test_zero_then_one_is_single_index_brandt(self, base):
        a = adjoin_identity(adjoin_zero(base))
        b = brandt(base, ["@"])
        mapping = [None] * a.size
        for x in base.elements:
            mapping[a.index(base.label(x))] = b.triple("@", x, "@")
        mapping[a.zero] = b.zero
        mapping[a.identity] = b.identity
        assert isomorphism_holds(a, b, mapping)


class TestProduct:
    def test_size_and_identity(self, U2, Z2):
        p = direct_product(U2, Z2)
        assert p.size == 4 and validate(p).ok
        assert p.identity == p.pair(U2.identity, Z2.identity)

    def test_componentwise(self, U2, Z2):
        p = direct_product(U2, Z2)
        for x, y in itertools.product(p.elements, repeat=2):
            (s1, t1), (s2, t2) = p.decode(x), p.decode(y)
            assert p.decode(p.mul(x, y)) == (U2.mul(s1, s2), Z2.mul(t1, t2))


class TestRees:
    def test_size_all_one(self, Z2):
        m = rees_matrix(Z2, [1, 2], [1, 2], [["1", "1"], ["1", "1"]])
        assert m.size == 9 and validate(m).ok

    def test_formula(self, Z2):
        m = rees_matrix(Z2, [1, 2], [1, 2], [["1", "1"], ["1", "1"]])
        g = Z2.index("g")
        for h in Z2.elements:
            assert m.mul(m.triple(1, g, 1), m.triple(2, h, 2)) == m.triple(1, Z2.mul(g, h), 2)

    def test_zero_entry(self, Z2):
        P = [["1", ZERO_ENTRY], ["1", "1"]]
        m = rees_matrix(Z2, [1, 2], [1, 2], P, with_zero=True)
        assert validate(m).ok
        # p_{lambda=1, j=2} is zero
        assert m.mul(m.triple(1, 0, 1), m.triple(2, 0, 2)) == m.zero

    def test_zero_entry_needs_flag(self, Z2):
        with pytest.raises(MonoidError):
            rees_matrix(Z2, [1, 2], [1, 2], [["1", ZERO_ENTRY], ["1", "1"]])


class TestBrandt:
    def test_size(self, b12):
        assert b12.size == 6

    def test_rule(self, Z2):
        m = brandt(Z2, [1, 2])
        for a in Z2.elements:
            for b in Z2.elements:
                assert m.mul(m.triple(1, a, 2), m.triple(2, b, 1)) == m.triple(1, Z2.mul(a, b), 1)
                assert m.mul(m.triple(1, a, 2), m.triple(1, b, 1)) == m.zero

    def test_empty_index(self, Z2):
        with pytest.raises(MonoidError):
            brandt(Z2, [])

    @pytest.mark.parametrize("base", [cyclic_group(2), u2()])
    def test_agrees_with_rees_identity_matrix(self, base):
        I = [1, 2, 3]
        P = [[base.label(base.identity) if l == i else ZERO_ENTRY for i in I] for l in I]
        r = rees_matrix(base, I, I, P, with_zero=True)
        b = brandt(base, I)
        assert r.rows == b.rows

    def test_adjoined_last(self, bz2):
        assert bz2.zero == bz2.size - 2 and bz2.identity == bz2.size - 1


class TestBruckReilly:
    def test_t_zero(self, Z2):
        S = bruck_reilly(Z2, BREndo.identity_map(Z2))
        for g in Z2.elements:
            for h in Z2.elements:
                assert S.multiply((0, g, 0), (0, h, 0)) == (0, Z2.mul(g, h), 0)

    def test_shift(self, Z2):
        theta = BREndo.trivial_map(Z2)
        S = bruck_reilly(Z2, theta)
        for g in Z2.elements:
            for h in Z2.elements:
                assert S.multiply((1, g, 2), (3, h, 4)) == (2, Z2.mul(theta(g), h), 4)

    def test_bicyclic_over_trivial(self):
        S = bruck_reilly(trivial_monoid(), BREndo.identity_map(trivial_monoid()))
        assert S.multiply((1, 0, 1), (0, 0, 0)) == (1, 0, 1)
        assert bicyclic().multiply((1, 1), (0, 0)) == (1, 1)

    def test_not_endomorphism(self):
        Z3 = cyclic_group(3)
        with pytest.raises(MonoidError):
            BREndo(Z3, ["g", "g", "g"])

    @pytest.mark.parametrize("theta", ["identity", "trivial"])
    def test_associative_ball4(self, Z2, theta):
        t = BREndo.identity_map(Z2) if theta == "identity" else BREndo.trivial_map(Z2)
        S = bruck_reilly(Z2, t)
        assert check_associative(S, S.ball(4)) is None

    def test_ebr_associative_and_idempotent_chain(self, Z2):
        S = extended_bruck_reilly(Z2, BREndo.identity_map(Z2))
        ball = S.ball(2)
        assert check_associative(S, ball) is None
        idem = [x for x in ball if S.multiply(x, x) == x]
        assert set(idem) == {ONE} | {(i, 0, i) for i in range(-2, 3)}
        chain = sorted((x for x in idem if x != ONE), key=lambda x: x[0])
        for e, f in zip(chain, chain[1:]):
            # (i+1, 1, i+1) lies below (i, 1, i)
            assert S.multiply(e, f) == f == S.multiply(f, e)


class TestFree:
    def test_concat(self):
        F = free_monoid("axb")
        assert F.multiply("ax", "b") == "axb"
        assert F.multiply(F.identity, "xa") == "xa"

    def test_ball_count(self):
        assert len(free_monoid("axb").ball(2)) == 13

    def test_bicyclic_associative(self):
        B = bicyclic()
        assert check_associative(B, B.ball(4)) is None
