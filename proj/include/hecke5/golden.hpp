#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hecke5 {

using Integer = mpz_class;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed element, matrix or word literal. `position()` is the 0-based
// character offset in the input where parsing failed.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/**
 * An element a + b*L of Z[L], where L = (1 + sqrt 5)/2 satisfies L^2 = L + 1.
 *
 * The representation is unique, so equality is coordinate-wise.
 */
class RingElt {
public:
    RingElt() = default;
    RingElt(long a) : a_(a) {}  // NOLINT: rational integers embed implicitly
    RingElt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
    explicit RingElt(const Integer& a) : a_(a) {}

    static RingElt lambda() { return RingElt(Integer(0), Integer(1)); }
    static RingElt lambda_power(long k);

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    // Galois conjugate: L -> 1 - L.
    RingElt conjugate() const { return RingElt(a_ + b_, -b_); }

    RingElt& operator+=(const RingElt& o);
    RingElt& operator-=(const RingElt& o);
    RingElt& operator*=(const RingElt& o);

    friend RingElt operator+(RingElt x, const RingElt& y) { return x += y; }
    friend RingElt operator-(RingElt x, const RingElt& y) { return x -= y; }
    friend RingElt operator*(const RingElt& x, const RingElt& y);
    friend RingElt operator-(const RingElt& x) { return RingElt(-x.a_, -x.b_); }

    friend bool operator==(const RingElt& x, const RingElt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    Integer a_{0};
    Integer b_{0};
};

// a^2 + ab - b^2, i.e. x times its conjugate. Sign matters for division.
Integer signed_norm(const RingElt& x);

// Absolute norm |a^2 + ab - b^2|.
Integer norm(const RingElt& x);

// Sign of x under the real embedding L -> (1 + sqrt 5)/2. Exact.
int sign_real(const RingElt& x);

// Order of x and y under the real embedding, decided by integer sign tests only.
std::strong_ordering compare_real(const RingElt& x, const RingElt& y);

RingElt abs_real(const RingElt& x);

// Exact quotient x / y when y divides x in Z[L]; throws otherwise.
RingElt exact_div(const RingElt& x, const RingElt& y);
bool divides(const RingElt& y, const RingElt& x);

RingElt pow(RingElt x, unsigned long e);

struct PseudoDivision {
    Integer quotient;  // rational integer q
    RingElt remainder; // r = a - q*L*b, with -|bL|/2 < r <= |bL|/2
};

// a = (q*L)*b + r with r in the half-open interval (-|bL|/2, |bL|/2].
PseudoDivision divmod_pseudo(const RingElt& a, const RingElt& b);

// True iff r lies in (-|bL|/2, |bL|/2].
bool in_pseudo_interval(const RingElt& r, const RingElt& b);

struct PseudoGcd {
    RingElt gcd;                   // last nonzero remainder
    std::vector<Integer> quotients; // q_1, q_2, ... in order
    std::size_t iterations = 0;
};

// Iterated pseudo-Euclidean division until the remainder vanishes.
PseudoGcd gcd_pseudo(const RingElt& a, const RingElt& b);

// Iteration cap applied by gcd_pseudo: 64 + 4 * (bit length of largest coordinate).
std::size_t gcd_iteration_cap(const RingElt& a, const RingElt& b);

struct UnitDecomposition {
    int sign = 1;      // +1 or -1
    long exponent = 0; // x = sign * L^exponent

    friend bool operator==(const UnitDecomposition&, const UnitDecomposition&) = default;
};

bool is_unit(const RingElt& x);

// Writes a unit as sign * L^k. Throws Error("not a unit") if norm(x) != 1.
UnitDecomposition unit_log(const RingElt& x);

// Element literals: integers and `L` terms, e.g. "3+2L", "-4L-2", "L", "0".
RingElt parse_element(std::string_view text);

// Canonical "a+bL" / "a-bL" form; always re-parses to the same value.
std::string to_string(const RingElt& x);

std::ostream& operator<<(std::ostream& os, const RingElt& x);

} // namespace hecke5
