#include "hecke5/golden.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace hecke5 {

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

RingElt RingElt::lambda_power(long k) {
    if (k >= 0) return pow(lambda(), static_cast<unsigned long>(k));
    // L^-1 = L - 1
    return pow(RingElt(Integer(-1), Integer(1)), static_cast<unsigned long>(-k));
}

RingElt& RingElt::operator+=(const RingElt& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

RingElt& RingElt::operator-=(const RingElt& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

RingElt& RingElt::operator*=(const RingElt& o) {
    *this = *this * o;
    return *this;
}

RingElt operator*(const RingElt& x, const RingElt& y) {
    Integer bb = x.b_ * y.b_;
    return RingElt(Integer(x.a_ * y.a_ + bb), Integer(x.a_ * y.b_ + y.a_ * x.b_ + bb));
}

Integer signed_norm(const RingElt& x) {
    return x.a() * x.a() + x.a() * x.b() - x.b() * x.b();
}

Integer norm(const RingElt& x) {
    return abs(signed_norm(x));
}

int sign_real(const RingElt& x) {
    // 2x = (2a + b) + b*sqrt(5)
    const Integer u = 2 * x.a() + x.b();
    const int su = sgn(u);
    const int sb = sgn(x.b());
    if (sb == 0) return su;
    if (su == 0 || su == sb) return sb;
    return cmp(u * u, 5 * x.b() * x.b()) > 0 ? su : sb;
}

std::strong_ordering compare_real(const RingElt& x, const RingElt& y) {
    const int s = sign_real(x - y);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

RingElt abs_real(const RingElt& x) {
    return sign_real(x) < 0 ? -x : x;
}

RingElt exact_div(const RingElt& x, const RingElt& y) {
    if (y.is_zero()) throw Error("division by zero in Z[L]");
    const Integer n = signed_norm(y);
    const RingElt num = x * y.conjugate();
    if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t())) {
        throw Error(to_string(y) + " does not divide " + to_string(x));
    }
    Integer qa, qb;
    mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
    mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
    return RingElt(std::move(qa), std::move(qb));
}

bool divides(const RingElt& y, const RingElt& x) {
    if (y.is_zero()) return x.is_zero();
    const Integer n = signed_norm(y);
    const RingElt num = x * y.conjugate();
    return mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) &&
           mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t());
}

RingElt pow(RingElt x, unsigned long e) {
    RingElt result(1);
    while (e) {
        if (e & 1) result *= x;
        e >>= 1;
        if (e) x *= x;
    }
    return result;
}

bool in_pseudo_interval(const RingElt& r, const RingElt& b) {
    const RingElt bound = abs_real(b * RingElt::lambda());
    const RingElt twice = r + r;
    return sign_real(twice + bound) > 0 && sign_real(bound - twice) >= 0;
}

namespace {

std::size_t bit_length(const Integer& x) {
    return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// Nearest integer to (u + v*L)/n, accurate to within one.
Integer approximate_quotient(const Integer& u, const Integer& v, const Integer& n) {
    const std::size_t prec = bit_length(v) + 16;
    Integer one_scaled;
    mpz_ui_pow_ui(one_scaled.get_mpz_t(), 2, prec);
    Integer root5;
    mpz_sqrt(root5.get_mpz_t(), Integer(5 * one_scaled * one_scaled).get_mpz_t());
    const Integer lambda_scaled = (one_scaled + root5) / 2;
    Integer num = u * one_scaled + v * lambda_scaled;
    Integer den = n * one_scaled;
    if (sgn(den) < 0) {
        num = -num;
        den = -den;
    }
    // round(num/den) = floor((2num + den) / 2den)
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), Integer(2 * num + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    return q;
}

} // namespace

PseudoDivision divmod_pseudo(const RingElt& a, const RingElt& b) {
    if (b.is_zero()) throw Error("pseudo-Euclidean division by zero");
    const RingElt bl = b * RingElt::lambda();
    // a/(bL) = a * conj(bL) / N(bL)
    const RingElt num = a * bl.conjugate();
    const Integer q0 = approximate_quotient(num.a(), num.b(), signed_norm(bl));
    // The approximation is off by at most one; the exact test decides.
    for (long offset = 0;; ++offset) {
        for (const long delta : {offset, -offset}) {
            const Integer q = q0 + delta;
            RingElt r = a - RingElt(q) * bl;
            if (in_pseudo_interval(r, b)) return {q, std::move(r)};
            if (offset == 0) break;
        }
        if (offset > 64) throw Error("pseudo-Euclidean quotient search failed");
    }
}

std::size_t gcd_iteration_cap(const RingElt& a, const RingElt& b) {
    const std::size_t bits = std::max({bit_length(a.a()), bit_length(a.b()),
                                       bit_length(b.a()), bit_length(b.b())});
    return 64 + 4 * bits;
}

PseudoGcd gcd_pseudo(const RingElt& a, const RingElt& b) {
    if (a.is_zero() && b.is_zero()) throw Error("gcd of (0, 0) is undefined");
    const std::size_t cap = gcd_iteration_cap(a, b);
    PseudoGcd out;
    RingElt x = a, y = b;
    while (!y.is_zero()) {
        if (out.iterations == cap) {
            throw Error("pseudo-Euclidean recursion exceeded " + std::to_string(cap) +
                        " steps for (" + to_string(a) + ", " + to_string(b) + ")");
        }
        PseudoDivision d = divmod_pseudo(x, y);
        out.quotients.push_back(std::move(d.quotient));
        x = std::move(y);
        y = std::move(d.remainder);
        ++out.iterations;
    }
    out.gcd = std::move(x);
    return out;
}

bool is_unit(const RingElt& x) {
    return norm(x) == 1;
}

UnitDecomposition unit_log(const RingElt& x) {
    if (!is_unit(x)) throw Error("not a unit: " + to_string(x));
    UnitDecomposition out;
    RingElt y = x;
    if (sign_real(y) < 0) {
        out.sign = -1;
        y = -y;
    }
    const RingElt one(1);
    const RingElt inv_lambda(Integer(-1), Integer(1));
    while (y != one) {
        if (compare_real(y, one) > 0) {
            y *= inv_lambda;
            ++out.exponent;
        } else {
            y *= RingElt::lambda();
            --out.exponent;
        }
    }
    return out;
}

namespace {

void skip_space(std::string_view s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

} // namespace

RingElt parse_element(std::string_view text) {
    std::size_t i = 0;
    skip_space(text, i);
    if (i == text.size()) throw ParseError("empty element literal", i);
    Integer a = 0, b = 0;
    bool first = true;
    while (true) {
        skip_space(text, i);
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_space(text, i);
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        const std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        std::string digits(text.substr(start, i - start));
        skip_space(text, i);
        bool has_lambda = false;
        if (i < text.size() && text[i] == '*' && !digits.empty()) {
            ++i;
            skip_space(text, i);
            if (i == text.size() || text[i] != 'L') throw ParseError("expected 'L' after '*'", i);
        }
        if (i < text.size() && text[i] == 'L') {
            has_lambda = true;
            ++i;
        }
        if (digits.empty() && !has_lambda) {
            throw ParseError(i < text.size() ? std::string("unexpected character '") + text[i] + "'"
                                             : std::string("dangling sign"),
                             i);
        }
        Integer coeff = digits.empty() ? Integer(1) : Integer(digits);
        if (sign < 0) coeff = -coeff;
        (has_lambda ? b : a) += coeff;
        first = false;
    }
    return RingElt(std::move(a), std::move(b));
}

std::string to_string(const RingElt& x) {
    std::string out = x.a().get_str();
    out += sgn(x.b()) < 0 ? '-' : '+';
    out += Integer(abs(x.b())).get_str();
    out += 'L';
    return out;
}

std::ostream& operator<<(std::ostream& os, const RingElt& x) {
    return os << to_string(x);
}

} // namespace hecke5
