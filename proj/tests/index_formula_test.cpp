#include <doctest.h>

#include "hecke5/index_formula.hpp"
#include "hecke5/quotient.hpp"

using namespace hecke5;

namespace {

RingElt E(long a, long b) { return RingElt(Integer(a), Integer(b)); }
IdealHNF I(const RingElt& g) { return ideal_from_generator(g); }
const RingElt tau = E(2, 1);

} // namespace

TEST_CASE("closed formula") {
    CHECK(index_formula(I(RingElt(2))).total == 10);
    CHECK(index_formula(I(RingElt(7))).total == 117600);
    CHECK(index_formula(I(RingElt(11))).total == 1742400);
    CHECK(index_formula(I(tau * tau * tau)).total == 1875000);
    CHECK(index_formula(I(RingElt(8))).total == 20480);
    CHECK(index_formula(I(RingElt(9))).total == 87480);
    CHECK(index_formula(I(E(3, 1))).total == 1320);
    CHECK_THROWS_AS(index_formula(IdealHNF{}), Error);

    const IndexReport r = index_formula(I(RingElt(2 * 2 * 3 * 7) * tau));
    CHECK(r.exponent_two == 2);
    CHECK(r.exponent_three == 1);
    CHECK(r.I_a == 320);
    CHECK(r.J_b == 120);
    CHECK(r.coprime_part_norm == 5 * 49);
    CHECK(r.coprime_part_index == Integer(120) * 117600);
    CHECK(r.total == r.I_a * r.J_b * r.coprime_part_index);
}

TEST_CASE("constants") {
    CHECK(two_part_index(0) == 1);
    CHECK(two_part_index(1) == 10);
    CHECK(two_part_index(2) == 320);
    CHECK(two_part_index(3) == 20480);
    CHECK(three_part_index(0) == 1);
    CHECK(three_part_index(1) == 120);
    CHECK(three_part_index(2) == 87480);
}

TEST_CASE("prime power cases") {
    const PrimePowerIndex p8 = index_prime_power(I(RingElt(8)));
    CHECK(p8.kind == PrimePowerCase::PowerOf2);
    CHECK(p8.index == 20480);
    CHECK(index_prime_power(I(RingElt(9))).index == 87480);
    const PrimePowerIndex t11 = index_prime_power(I(E(3, 1)));
    CHECK(t11.kind == PrimePowerCase::Split);
    CHECK(t11.index == 1320);
    CHECK(index_prime_power(I(RingElt(11))).index == 1742400);
    const PrimePowerIndex seven = index_prime_power(I(RingElt(49)));
    CHECK(seven.kind == PrimePowerCase::Inert);
    CHECK(seven.index == Integer(117600) * 117649);
    const PrimePowerIndex five = index_prime_power(I(tau * tau * tau));
    CHECK(five.kind == PrimePowerCase::Ramified5);
    CHECK(five.index == 1875000);
    CHECK(to_string(PrimePowerCase::Inert) == "inert");
    CHECK_THROWS_AS(index_prime_power(I(RingElt(6))), Error);
}

TEST_CASE("tower steps") {
    const IdealHNF t = I(tau), two = I(RingElt(2)), three = I(RingElt(3));
    CHECK(index_bound_step(t, 2).step == 125);
    CHECK(index_bound_step(two, 1).step == 32);
    CHECK(index_bound_step(two, 2).step == 64);
    CHECK(index_bound_step(three, 1).step == 729);
    CHECK_THROWS_AS(index_bound_step(I(RingElt(6)), 1), Error);
    CHECK_THROWS_AS(index_bound_step(two, 0), Error);

    for (const IdealHNF& p : {t, two, three, I(E(3, 1)), I(RingElt(7))}) {
        for (unsigned n = 1; n <= 3; ++n) {
            const Integer lo = index_formula(ideal_pow(p, n)).total;
            const Integer hi = index_formula(ideal_pow(p, n + 1)).total;
            const TowerStep s = index_bound_step(p, n);
            CHECK(hi == lo * s.step);
            CHECK(s.step <= s.bound);
        }
    }
}

TEST_CASE("formula equals SL2 order away from 2 and 3") {
    for (const RingElt& g : {tau, RingElt(7), RingElt(11), E(3, 1), RingElt(5) * RingElt(7), RingElt(13) * E(4, 1)}) {
        CHECK(index_formula(I(g)).total == sl2_order(I(g)));
    }
}

TEST_CASE("formula is multiplicative over coprime levels") {
    const std::vector<RingElt> parts{RingElt(2), RingElt(9), tau, RingElt(7), E(3, 1), RingElt(4)};
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            if (gcd(norm(parts[i]), norm(parts[j])) != 1) continue;
            CHECK(index_formula(I(parts[i] * parts[j])).total ==
                  index_formula(I(parts[i])).total * index_formula(I(parts[j])).total);
        }
}
