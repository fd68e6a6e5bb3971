#include "hecke5/hecke.hpp"

#include <cctype>

namespace hecke5 {

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

Mat2 Mat2::inverse() const {
    const RingElt d = det();
    if (d == RingElt(1)) return adjugate();
    if (!is_unit(d)) throw Error("matrix " + to_string(*this) + " is not invertible over Z[L]");
    const RingElt inv = exact_div(RingElt(1), d);
    const Mat2 adj = adjugate();
    return {adj.a11 * inv, adj.a12 * inv, adj.a21 * inv, adj.a22 * inv};
}

Mat2 pow(const Mat2& m, long e) {
    Mat2 base = e < 0 ? m.inverse() : m;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Mat2 result = Mat2::identity();
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Mat2 letter_matrix(Letter l) {
    switch (l) {
    case Letter::S: return gen_S();
    case Letter::SInv: return {0, -1, 1, 0};
    case Letter::T: return gen_T();
    case Letter::TInv: return {1, -RingElt::lambda(), 0, 1};
    }
    throw Error("invalid letter");
}

Mat2 eval_word(const Word& w) {
    Mat2 m = Mat2::identity();
    for (Letter l : w) m = m * letter_matrix(l);
    return m;
}

Word parse_word(std::string_view text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        switch (c) {
        case 'S': w.push_back(Letter::S); break;
        case 's': w.push_back(Letter::SInv); break;
        case 'T': w.push_back(Letter::T); break;
        case 't': w.push_back(Letter::TInv); break;
        default: throw ParseError(std::string("invalid word letter '") + c + "'", i);
        }
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    out.reserve(w.size());
    for (Letter l : w) out.push_back(static_cast<char>(l));
    return out;
}

namespace {

class MatrixParser {
public:
    explicit MatrixParser(std::string_view text) : text_(text) {}

    Mat2 parse() {
        expect('[');
        auto [a, b] = row();
        expect(',');
        auto [c, d] = row();
        expect(']');
        skip();
        if (pos_ != text_.size()) throw ParseError("trailing characters after matrix", pos_);
        return {std::move(a), std::move(b), std::move(c), std::move(d)};
    }

private:
    std::pair<RingElt, RingElt> row() {
        expect('[');
        RingElt x = entry(',');
        expect(',');
        RingElt y = entry(']');
        expect(']');
        return {std::move(x), std::move(y)};
    }

    RingElt entry(char terminator) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != terminator && text_[pos_] != '[' &&
               text_[pos_] != ']' && text_[pos_] != ',') {
            ++pos_;
        }
        try {
            return parse_element(text_.substr(start, pos_ - start));
        } catch (const ParseError& e) {
            throw ParseError("bad matrix entry", start + e.position());
        }
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw ParseError(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Mat2 parse_matrix(std::string_view text) {
    return MatrixParser(text).parse();
}

std::string to_string(const Mat2& m) {
    return "[[" + to_string(m.a11) + "," + to_string(m.a12) + "],[" + to_string(m.a21) + "," +
           to_string(m.a22) + "]]";
}

ReductionResult reduce_fraction(const RingElt& a, const RingElt& b) {
    if (a.is_zero() && b.is_zero()) throw Error("reduced factor of 0/0 is undefined");
    ReductionResult out;
    const std::size_t cap = gcd_iteration_cap(a, b);
    const Mat2 J = swap_J();
    Mat2 m = Mat2::identity();
    bool odd = false;
    RingElt x = a, y = b;
    // Invariant: (a, b)^T = m (x, y)^T.
    while (!y.is_zero()) {
        if (out.quotients.size() == cap) {
            throw Error("pseudo-Euclidean recursion exceeded " + std::to_string(cap) + " steps");
        }
        PseudoDivision d = divmod_pseudo(x, y);
        m = m * translation(d.quotient) * J;
        odd = !odd;
        out.quotients.push_back(std::move(d.quotient));
        x = std::move(y);
        y = std::move(d.remainder);
    }
    if (!is_unit(x)) {
        throw Error("not coprime: gcd(" + to_string(a) + ", " + to_string(b) + ") = " + to_string(x));
    }
    // An odd number of swaps leaves det -1; flipping column two restores det 1
    // without touching the pinned first column.
    if (odd) {
        m.a12 = -m.a12;
        m.a22 = -m.a22;
    }
    out.unit = unit_log(x);
    out.e = -out.unit.exponent;
    out.completion = std::move(m);
    return out;
}

bool is_reduced(const RingElt& a, const RingElt& b) {
    return reduce_fraction(a, b).e == 0;
}

bool is_member(const Mat2& m) {
    if (m.det() != RingElt(1)) return false;
    return is_reduced(m.a11, m.a21) && is_reduced(m.a12, m.a22);
}

Mat2 complete_column(const RingElt& a, const RingElt& c) {
    ReductionResult r = reduce_fraction(a, c);
    if (r.e != 0) {
        throw Error(to_string(a) + "/" + to_string(c) + " is not in reduced form (e = " +
                    std::to_string(r.e) + ")");
    }
    return r.unit.sign < 0 ? -r.completion : r.completion;
}

Mat2 parabolic_conjugate(const RingElt& a, const RingElt& c, const Integer& m) {
    const Mat2 x = complete_column(a, c);
    return x * translation(m) * x.inverse();
}

} // namespace hecke5
