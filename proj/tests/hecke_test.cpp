#include <doctest.h>

#include <random>

#include "hecke5/hecke.hpp"
#include "hecke5/ideal.hpp"
#include "oracle.hpp"

using namespace hecke5;

namespace {

RingElt E(long a, long b) { return RingElt(Integer(a), Integer(b)); }
const RingElt L = RingElt::lambda();

} // namespace

TEST_CASE("words") {
    CHECK(eval_word(parse_word("SSSS")) == Mat2::identity());
    CHECK(eval_word({}) == Mat2::identity());
    // ST has order 5 already in H5, not only modulo -I.
    const Mat2 st = eval_word(parse_word("ST"));
    CHECK(pow(st, 5) == Mat2::identity());
    for (long k = 1; k < 5; ++k) {
        CHECK(pow(st, k) != Mat2::identity());
        CHECK(pow(st, k) != -Mat2::identity());
    }
    CHECK(pow(gen_S(), 2) == -Mat2::identity());
    CHECK(eval_word(parse_word("Ss")) == Mat2::identity());
    CHECK(eval_word(parse_word("Tt")) == Mat2::identity());
    CHECK(eval_word(parse_word("TS")) == gen_T() * gen_S());
    CHECK(to_string(parse_word("STst")) == "STst");
    CHECK(to_string(Word{}).empty());
    CHECK_THROWS_AS(parse_word("SxT"), ParseError);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Word u = oracle::random_word(rng, 12), v = oracle::random_word(rng, 12);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(eval_word(uv) == eval_word(u) * eval_word(v));
    }
}

TEST_CASE("matrix literals") {
    const Mat2 m = parse_matrix("[[1+2L, 2+2L],[2L, 1+2L]]");
    CHECK(m == Mat2{E(1, 2), E(2, 2), E(0, 2), E(1, 2)});
    CHECK(parse_matrix(to_string(m)) == m);
    try {
        parse_matrix("[[1,2],[3,4]");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 12);
    }
    CHECK(m.inverse() * m == Mat2::identity());
}

TEST_CASE("reduced factor") {
    CHECK(reduce_fraction(RingElt(2), RingElt(3) * L).e == 2);
    CHECK(reduce_fraction(RingElt(1), RingElt(0)).e == 0);
    CHECK(reduce_fraction(RingElt(1), RingElt(1)).e == 1);
    CHECK(reduce_fraction(RingElt::lambda_power(3), RingElt(0)).e == -3);
    CHECK_THROWS_AS(reduce_fraction(RingElt(0), RingElt(0)), Error);
    CHECK_THROWS_AS(reduce_fraction(RingElt(2), RingElt(4)), Error);

    CHECK(is_reduced(RingElt(2) * L * L, RingElt(3) * pow(L, 3)));
    CHECK_FALSE(is_reduced(RingElt(1), RingElt(1)));
    CHECK(is_reduced(RingElt(0), RingElt(1)));

    const ReductionResult r = reduce_fraction(E(3, 2), E(-1, 4));
    CHECK(r.completion.det() == RingElt(1));
    const RingElt rem = r.unit.sign * RingElt::lambda_power(r.unit.exponent);
    CHECK(r.completion.a11 * rem == E(3, 2));
    CHECK(r.completion.a21 * rem == E(-1, 4));
}

TEST_CASE("reduced columns agree with word enumeration") {
    // Every column reached by short words is reduced; its non-trivial
    // L-shifts are not.
    for (const Mat2& m : oracle::word_matrices(7)) {
        REQUIRE(is_reduced(m.a11, m.a21));
        REQUIRE(is_reduced(m.a12, m.a22));
        REQUIRE(reduce_fraction(m.a11 * L, m.a21 * L).e == -1);
    }
}

TEST_CASE("membership") {
    CHECK(is_member(Mat2{E(1, 2), E(2, 2), E(0, 2), E(1, 2)}));
    CHECK_FALSE(is_member(Mat2{1, 1, 0, 1}));
    CHECK_FALSE(is_member(Mat2{-L, L, E(0, -2), E(1, 2)}));
    CHECK(is_member(gen_S()));
    CHECK(is_member(gen_T()));
    CHECK(is_member(-Mat2::identity()));
    CHECK_FALSE(is_member(Mat2{2, 0, 0, 1}));
}

TEST_CASE("column completion") {
    for (const auto& [a, c] : std::vector<std::pair<RingElt, RingElt>>{
             {RingElt(1), RingElt(0)}, {RingElt(0), RingElt(-1)}, {RingElt(2) * L * L, RingElt(3) * pow(L, 3)},
             {E(1, 2), E(0, 2)}, {RingElt(-1), RingElt(0)}}) {
        const Mat2 x = complete_column(a, c);
        CHECK(is_member(x));
        CHECK(x.a11 == a);
        CHECK(x.a21 == c);
    }
    CHECK_THROWS_AS(complete_column(RingElt(1), RingElt(1)), Error);
    CHECK_THROWS_AS(complete_column(RingElt(2), RingElt(0)), Error);
}

TEST_CASE("parabolic conjugates") {
    const RingElt a = RingElt(2) * L * L;
    for (long p : {3L, 5L, 7L}) {
        const RingElt c = RingElt(p) * pow(L, 3);
        CHECK(parabolic_conjugate(a, c, 0) == Mat2::identity());
        for (long m : {1L, 2L, p, 5L}) {
            const Mat2 x = parabolic_conjugate(a, c, m);
            const RingElt ml = RingElt(m) * L;
            CHECK(x == Mat2{RingElt(1) - a * c * ml, a * a * ml, -(c * c * ml), RingElt(1) + a * c * ml});
            CHECK(is_member(x));
            const IdealHNF A = ideal_from_generator(RingElt(m));
            CHECK(A.contains(x.a12));
            CHECK(A.contains(x.a21));
            CHECK(A.contains(x.a11 - RingElt(1)));
        }
    }
    const Mat2 s = parabolic_conjugate(a, RingElt(5) * pow(L, 3), 5);
    ResidueRing r25(ideal_from_generator(RingElt(25)));
    CHECK(reduce(s.a12, r25) == reduce(RingElt(10), r25));
    CHECK(reduce(s.a21, r25) == r25.zero());
}
