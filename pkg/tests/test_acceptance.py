"""Acceptance suite: ten criteria, each with an instance count, exactness demand and time limit.

Every test records a single PASS/FAIL line (shown in the terminal summary) and
then asserts. Instances are drawn from fixed seeds, so runs are reproducible.
"""
import random
import time

import pytest

from coact.congruence import right_congruence
from coact.constructions import (adjoin_identity, brandt, cyclic_group, direct_product,
                                 nilpotent_monoid, symmetric_inverse_monoid, trivial_monoid, u2)
from coact.harness import brandt as hb
from coact.harness import fuzz, products, regular, submonoids
from coact.harness.fuzz import random_transformations
from coact.monoid import is_regular


class Criterion:
    def __init__(self, log, number: int, title: str, limit: float):
        self.log, self.number, self.title, self.limit = log, number, title, limit
        self.failures: list = []
        self.count = 0

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def record(self, rep, **context):
        self.count += 1
        if not rep.verified:
            self.failures.append({"context": context, "failures": rep.failures[:3]})

    def __exit__(self, exc_type, exc, tb):
        self.elapsed = time.perf_counter() - self.t0
        ok = exc_type is None and not self.failures and self.elapsed < self.limit
        status = "PASS" if ok else "FAIL"
        extra = "" if exc_type is None else f", raised {exc_type.__name__}"
        line = (f"[{status}] criterion {self.number:2d} {self.title}: {self.count} instances, "
                f"{len(self.failures)} failures, {self.elapsed:.2f}s (limit {self.limit:.0f}s){extra}")
        self.log.append(line)
        print(line)
        return False

    def check(self, minimum: int):
        assert not self.failures, self.failures[:3]
        assert self.count >= minimum
        assert self.elapsed < self.limit, f"{self.elapsed:.2f}s over the {self.limit}s limit"


SMALL = [trivial_monoid(), cyclic_group(2), cyclic_group(3), u2(), nilpotent_monoid(),
         cyclic_group(4), direct_product(u2(), u2())]  # |M| <= 4


def _random_pairs(rng, S, k):
    return [(rng.randrange(S.size), rng.randrange(S.size)) for _ in range(k)]


def test_01_oracle_equivalence(acceptance_log):
    with Criterion(acceptance_log, 1, "closure equals H-sequence oracle", 30) as c:
        rep = fuzz.oracle_equivalence(count=200, seed=2024, max_size=8, max_act=12, max_pairs=4)
        c.record(rep)
        c.count = rep.artifacts["instances"]
    assert rep.artifacts["max_act_size"] <= 12
    c.check(200)


def test_02_brandt_normalization(acceptance_log):
    rng = random.Random(52)
    cases = set()
    with Criterion(acceptance_log, 2, "Brandt congruence normal form", 30) as c:
        S = brandt(trivial_monoid(), [1, 2])
        data, rep = hb.brandt_normalize(S, [(S.identity, S.zero)])
        assert data.case == "i" and right_congruence(S, [(S.identity, S.zero)]).is_universal()
        c.record(rep, K="(1,0)")
        while c.count < 100:
            M = rng.choice(SMALL)
            I = list(range(1, rng.randint(1, 3) + 1))
            S = brandt(M, I)
            K = _random_pairs(rng, S, rng.randint(0, 3))
            data, rep = hb.brandt_normalize(S, K)
            cases.add(data.case)
            assert rep.artifacts["case_by_closure"] == data.case
            c.record(rep, M=M.size, I=I, K=K)
    assert cases == {"i", "ii", "iii"}
    c.check(100)


def test_03_free_act_transfer(acceptance_log):
    rng = random.Random(53)
    with Criterion(acceptance_log, 3, "free-act transfer biconditional", 30) as c:
        while c.count < 50:
            M = rng.choice(SMALL)
            I = list(range(1, rng.randint(1, 3) + 1))
            A = [(rng.choice(I), M.label(rng.randrange(M.size)), rng.choice(I),
                  M.label(rng.randrange(M.size))) for _ in range(rng.randint(0, 3))]
            c.record(hb.brandt_free_transfer_check(M, I, A), M=M.labels, I=I, A=A)
    c.check(50)


REGULAR = [brandt(cyclic_group(2), [1, 2]), brandt(cyclic_group(3), [1, 2]),
           brandt(cyclic_group(2), [1, 2, 3]), brandt(cyclic_group(2), [1]), u2(),
           symmetric_inverse_monoid(2), direct_product(u2(), u2()), direct_product(u2(), cyclic_group(2)),
           adjoin_identity(cyclic_group(2)), brandt(u2(), [1, 2])]


def test_04_regular_annihilator(acceptance_log):
    rng = random.Random(54)
    assert all(is_regular(S) for S in REGULAR)
    with Criterion(acceptance_log, 4, "annihilator generators over regular monoids", 60) as c:
        while c.count < 50:
            S = rng.choice(REGULAR)
            X = _random_pairs(rng, S, rng.randint(0, 3))
            X = X + [(d, b) for b, d in X]
            a = rng.randrange(S.size)
            c.record(regular.regular_annihilator_check(S, X, a), S=S.size, X=X, a=a)
    c.check(50)


def test_05_brandt_annihilator_and_intersection(acceptance_log):
    rng = random.Random(55)
    routes = {"ann": 0, "int": 0}
    with Criterion(acceptance_log, 5, "Brandt annihilator and intersection generators", 60) as c:
        while routes["ann"] < 30 or routes["int"] < 30:
            M = rng.choice([cyclic_group(2), u2()])
            S = brandt(M, [1, 2])
            K = _random_pairs(rng, S, rng.randint(0, 3))
            trip = [x for x in S.elements if S.is_triple(x)]
            if routes["ann"] < 30:
                a = rng.choice(trip)
                rep = hb.brandt_annihilator_check(M, [1, 2], K, a)
                c.record(rep, kind="ann", M=M.labels, K=K, a=a)
                routes["ann"] += rep.artifacts["route"] == "triple"
            if routes["int"] < 30:
                a, b = rng.sample(trip, 2)
                rep = hb.brandt_intersection_check(M, [1, 2], K, a, b)
                c.record(rep, kind="int", M=M.labels, K=K, a=a, b=b)
                routes["int"] += rep.artifacts["route"] == "triples"
    c.check(60)


def test_06_free_square(acceptance_log):
    with Criterion(acceptance_log, 6, "free monoid square, n = 0..5 at radius 14", 60) as c:
        rep = products.free_product_check(n_max=5, radius=14)
        c.record(rep)
        c.count = len(rep.artifacts["per_n"])
    assert rep.bound_relative
    for rec in rep.artifacts["per_n"]:
        assert rec["class_size"] == rec["n"] + 1
        if rec["n"] >= 1:
            assert rec["negative_tested"] > 0
    c.check(6)


def test_07_brandt_zero_closure(acceptance_log):
    with Criterion(acceptance_log, 7, "zero-ideal closure in Brandt monoids", 10) as c:
        for G in (cyclic_group(2), cyclic_group(3)):
            for n in (2, 3, 4):
                I = list(range(1, n + 1))
                for i in I:
                    for g in G.labels:
                        c.record(regular.brandt_zero_closure_check(G, I, i, g), G=G.size, I=n, i=i, g=g)
    c.check(6)


def test_08_ebr_quotients(acceptance_log):
    with Criterion(acceptance_log, 8, "EBR ideal quotients on ball(12)", 30) as c:
        for theta in ("identity", "trivial"):
            rep = regular.ebr_quotient_check(cyclic_group(2), theta, radius=12, samples=20, seed=8)
            c.record(rep, theta=theta)
            assert rep.bound_relative
            sampled = [x for x in rep.artifacts["cases"] if x[2].endswith("S") and x[2].startswith("(")]
            assert len(sampled) == 20
    c.check(2)


def _small_monoid(rng, max_size):
    return random_transformations(rng, max_size=max_size)[0]


def test_09_transfers(acceptance_log):
    rng = random.Random(59)
    counts = {"identity": 0, "zero": 0, "product": 0}
    with Criterion(acceptance_log, 9, "identity/zero adjunction and product-act transfers", 60) as c:
        for _ in range(30):
            M = _small_monoid(rng, 5)
            big = adjoin_identity(M)
            H = [(big.label(x), big.label(y)) for x, y in _random_pairs(rng, big, rng.randint(0, 3))]
            a = M.label(rng.randrange(M.size))
            b = M.label(rng.randrange(M.size))
            c.record(submonoids.identity_adjunction_check(M, H, a, b), kind="identity", M=M.labels, H=H)
            counts["identity"] += 1

            M = _small_monoid(rng, 5)
            H = [(M.label(x), M.label(y)) for x, y in _random_pairs(rng, M, rng.randint(0, 3))]
            a, b = M.label(rng.randrange(M.size)), M.label(rng.randrange(M.size))
            c.record(hb.zero_adjunction_check(M, H, a, b), kind="zero", M=M.labels, H=H)
            counts["zero"] += 1

            S = _small_monoid(rng, 5)
            T = _small_monoid(rng, 3)
            gens = rng.randint(1, 2)
            H = []
            for _ in range(rng.randint(0, 2)):
                H.append(tuple((rng.randrange(gens), (S.label(rng.randrange(S.size)),
                                                      T.label(rng.randrange(T.size))))
                               for _ in range(2)))
            c.record(products.product_act_check(S, T, gens, H), kind="product", S=S.labels,
                     T=T.labels, H=H)
            counts["product"] += 1
    assert min(counts.values()) == 30
    c.check(90)


def test_10_implication_fuzz(acceptance_log):
    with Criterion(acceptance_log, 10, "unitary/SRCEP/tilde implication fuzz", 60) as c:
        rep = fuzz.fuzz_implications(count=200, seed=10, max_size=7)
        c.record(rep)
        c.count = rep.artifacts["monoids"]
    c.check(200)
