#include <doctest.h>

#include <random>
#include <set>

#include "hecke5/ideal.hpp"
#include "oracle.hpp"

using namespace hecke5;

namespace {

RingElt E(long a, long b) { return RingElt(Integer(a), Integer(b)); }
IdealHNF I(const RingElt& g) { return ideal_from_generator(g); }
const RingElt tau = E(2, 1);

} // namespace

TEST_CASE("HNF of principal ideals") {
    CHECK(I(RingElt(2)) == IdealHNF::from_hnf(2, 0, 2));
    CHECK(I(RingElt(2)).norm() == 4);
    CHECK(I(tau) == IdealHNF::from_hnf(1, 3, 5));
    CHECK(I(tau).contains(RingElt(5)));
    CHECK(I(RingElt::lambda() * tau) == I(tau));
    CHECK(I(RingElt(1)).is_unit_ideal());
    CHECK_THROWS_AS(I(RingElt(0)), Error);
    CHECK_THROWS_AS(IdealHNF::from_hnf(1, 1, 2), Error); // not closed under L
    CHECK_THROWS_AS(IdealHNF::from_hnf(2, 2, 2), Error);
}

TEST_CASE("ideal membership agrees with exact division") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        RingElt g = oracle::random_element(rng, 30);
        if (g.is_zero()) continue;
        const IdealHNF A = I(g);
        CHECK(A.norm() == norm(g));
        for (int j = 0; j < 20; ++j) {
            const RingElt x = oracle::random_element(rng, 200);
            CHECK(A.contains(x) == divides(g, x));
            const RingElt r = A.reduce(x);
            CHECK(A.contains(x - r));
            CHECK(A.reduce(r) == r);
        }
    }
}

TEST_CASE("ideal multiplication and divisibility") {
    CHECK(ideal_mul(I(RingElt(2)), I(RingElt(3))) == I(RingElt(6)));
    CHECK(ideal_mul(I(RingElt(2)), I(RingElt(3))).norm() == 36);
    CHECK(ideal_mul(I(tau), I(tau)) == I(RingElt(5)));
    CHECK(ideal_mul(I(E(7, 3)), IdealHNF()) == I(E(7, 3)));
    CHECK(ideal_pow(I(tau), 3) == I(tau * tau * tau));
    CHECK(ideal_divides(I(tau), I(RingElt(5))));
    CHECK_FALSE(ideal_divides(I(RingElt(2)), I(RingElt(3))));
    CHECK(ideal_divides(I(E(4, 1)), I(E(4, 1))));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const RingElt x = oracle::random_element(rng, 40), y = oracle::random_element(rng, 40);
        if (x.is_zero() || y.is_zero()) continue;
        CHECK(ideal_mul(I(x), I(y)) == I(x * y));
        CHECK(I(ideal_generator(I(x))) == I(x));
    }
}

TEST_CASE("rational prime splitting") {
    const auto five = split_rational_prime(5);
    REQUIRE(five.size() == 1);
    CHECK(five[0].prime == I(tau));
    CHECK(five[0].exponent == 2);
    CHECK(five[0].ramified);

    const auto two = split_rational_prime(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].prime == I(RingElt(2)));
    CHECK(two[0].residue_degree == 2);

    const auto eleven = split_rational_prime(11);
    REQUIRE(eleven.size() == 2);
    CHECK(ideal_mul(eleven[0].prime, eleven[1].prime) == I(RingElt(11)));
    CHECK_THROWS_AS(split_rational_prime(15), Error);

    for (long p = 2; p <= 200; ++p) {
        if (!is_rational_prime(p)) continue;
        const auto f = split_rational_prime(p);
        if (p % 5 == 1 || p % 5 == 4) {
            REQUIRE(f.size() == 2);
            CHECK(f[0].prime != f[1].prime);
            CHECK(f[0].prime.norm() == p);
            CHECK(f[1].prime.norm() == p);
            CHECK(ideal_mul(f[0].prime, f[1].prime) == I(RingElt(p)));
            CHECK(I(f[0].generator) == f[0].prime);
        } else if (p != 5) {
            REQUIRE(f.size() == 1);
            CHECK(f[0].prime.norm() == p * p);
        }
    }
}

TEST_CASE("factorisation") {
    const auto six = factor_ideal(I(RingElt(6)));
    REQUIRE(six.size() == 2);
    CHECK(six[0].prime == I(RingElt(2)));
    CHECK(six[1].prime == I(RingElt(3)));

    const auto five = factor_ideal(I(RingElt(5)));
    REQUIRE(five.size() == 1);
    CHECK(five[0].exponent == 2);

    const auto eleven = factor_ideal(I(RingElt(11)));
    REQUIRE(eleven.size() == 2);
    CHECK(eleven[0].prime.norm() == 11);
    CHECK(eleven[1].prime.norm() == 11);

    CHECK(factor_integer(360) == std::vector<std::pair<Integer, unsigned>>{{2, 3}, {3, 2}, {5, 1}});

    std::mt19937_64 rng(21);
    int done = 0;
    while (done < 1000) {
        const RingElt g = oracle::random_element(rng, 600);
        if (g.is_zero() || norm(g) > 1'000'000) continue;
        const IdealHNF A = I(g);
        CHECK(reconstruct(factor_ideal(A)) == A);
        ++done;
    }
}

TEST_CASE("residue rings") {
    ResidueRing r25(I(RingElt(25)));
    const RingElt l5 = RingElt::lambda_power(5);
    CHECK(reduce(RingElt(20) * l5, r25) == reduce(RingElt(60), r25));
    CHECK(reduce(RingElt(60), r25) == reduce(RingElt(10), r25));
    CHECK(reduce(tau, ResidueRing(I(tau))) == ResElt{0, 0});
    ResidueRing unit(IdealHNF{});
    CHECK(reduce(E(17, -3), unit) == unit.zero());

    // Canonical representatives are exactly the box 0 <= x < d1, 0 <= y < d2.
    for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
            const RingElt g = E(a, b);
            if (g.is_zero() || norm(g) > 100) continue;
            const IdealHNF A = I(g);
            ResidueRing ring(A);
            std::set<std::pair<std::int64_t, std::int64_t>> seen;
            for (long x = -15; x <= 15; ++x)
                for (long y = -15; y <= 15; ++y) {
                    const ResElt e = reduce(E(x, y), ring);
                    seen.insert({e.x, e.y});
                }
            CHECK(Integer(static_cast<unsigned long>(seen.size())) == A.norm());
            CHECK(static_cast<std::int64_t>(ring.size()) == A.norm().get_si());
        }
    }
}

TEST_CASE("reduction is a ring homomorphism") {
    std::mt19937_64 rng(13);
    for (long g : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 25L}) {
        for (const IdealHNF& A : {I(RingElt(g)), I(E(g, 1))}) {
            ResidueRing ring(A);
            for (int i = 0; i < 200; ++i) {
                const RingElt x = oracle::random_element(rng, 10'000), y = oracle::random_element(rng, 10'000);
                CHECK(reduce(x + y, ring) == ring.add(reduce(x, ring), reduce(y, ring)));
                CHECK(reduce(x * y, ring) == ring.mul(reduce(x, ring), reduce(y, ring)));
                CHECK(reduce(ring.lift(reduce(x, ring)), ring) == reduce(x, ring));
            }
        }
    }
}
