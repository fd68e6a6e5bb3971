#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hecke5/golden.hpp"

namespace hecke5 {

// 2x2 matrix over Z[L].
struct Mat2 {
    RingElt a11, a12, a21, a22;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    RingElt det() const { return a11 * a22 - a12 * a21; }
    RingElt trace() const { return a11 + a22; }

    // Adjugate; equals the inverse when det() == 1.
    Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }
    Mat2 inverse() const;

    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    friend Mat2 operator-(const Mat2& x) { return {-x.a11, -x.a12, -x.a21, -x.a22}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 pow(const Mat2& m, long e); // negative e uses the inverse

// Generators of the Hecke group H5.
inline Mat2 gen_S() { return {0, 1, -1, 0}; }
inline Mat2 gen_T() { return {1, RingElt::lambda(), 0, 1}; }
// Translation by m*L, i.e. T^m.
inline Mat2 translation(const Integer& m) { return {1, RingElt(Integer(0), m), 0, 1}; }
// The swap [[0,1],[1,0]]; not in H5 but normalises it.
inline Mat2 swap_J() { return {0, 1, 1, 0}; }

enum class Letter : char { S = 'S', SInv = 's', T = 'T', TInv = 't' };

using Word = std::vector<Letter>;

Mat2 letter_matrix(Letter l);

// Product of the letters, left to right.
Mat2 eval_word(const Word& w);

// Word literal over S, s (= S^-1), T, t (= T^-1). Whitespace is ignored.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

// Matrix literal "[[a,b],[c,d]]" with element literals as entries.
Mat2 parse_matrix(std::string_view text);
std::string to_string(const Mat2& m);

struct ReductionResult {
    // Reduced factor: (a L^e, b L^e) is a column of an element of H5.
    long e = 0;
    // Element of H5 with completion * (r, 0)^T = (a, b)^T, r the final remainder.
    Mat2 completion;
    UnitDecomposition unit; // final remainder = sign * L^exponent
    std::vector<Integer> quotients;
};

/**
 * Runs the pseudo-Euclidean recursion on a/b, accumulating each step
 * x = (qL) y + r as the factor T^q J of the completion matrix, and reads the
 * reduced factor off the final remainder +-L^k as e = -k.
 *
 * Throws if (a, b) = (0, 0) or if gcd(a, b) is not a unit.
 */
ReductionResult reduce_fraction(const RingElt& a, const RingElt& b);

// e(a/b) == 0. Requires gcd(a, b) to be a unit.
bool is_reduced(const RingElt& a, const RingElt& b);

// det == 1 and both columns are in reduced form.
bool is_member(const Mat2& m);

// An element of H5 whose first column is (a, c). Requires (a, c) reduced.
Mat2 complete_column(const RingElt& a, const RingElt& c);

// X T^m X^-1 for X = complete_column(a, c); equals
// [[1 - acmL, a^2 mL], [-c^2 mL, 1 + acmL]].
Mat2 parabolic_conjugate(const RingElt& a, const RingElt& c, const Integer& m);

} // namespace hecke5
