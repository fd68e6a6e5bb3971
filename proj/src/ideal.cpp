#include "hecke5/ideal.hpp"

#include <algorithm>
#include <tuple>

namespace hecke5 {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::int64_t to_i64(const Integer& x) {
    if (!x.fits_slong_p()) throw Error("integer does not fit in 64 bits: " + x.get_str());
    return x.get_si();
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

} // namespace

IdealHNF IdealHNF::from_hnf(Integer d1, Integer k, Integer d2) {
    if (sgn(d1) <= 0 || sgn(d2) <= 0) throw Error("HNF diagonal entries must be positive");
    if (sgn(k) < 0 || k >= d2) throw Error("HNF entry k must satisfy 0 <= k < d2");
    IdealHNF out(std::move(d1), std::move(k), std::move(d2));
    for (const RingElt& e : out.basis()) {
        if (!out.contains(e * RingElt::lambda())) {
            throw Error("lattice " + to_string(out) + " is not closed under multiplication by L");
        }
    }
    return out;
}

IdealHNF IdealHNF::from_rows(const std::vector<std::array<Integer, 2>>& rows) {
    // Pivot row accumulates gcd of the x-coordinates; eliminated rows leave y only.
    Integer px = 0, py = 0;
    std::vector<Integer> ys;
    for (const auto& [x, y] : rows) {
        if (sgn(x) == 0) {
            ys.push_back(y);
            continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), px.get_mpz_t(), x.get_mpz_t());
        const Integer cx = x / g;
        const Integer cp = px / g;
        ys.push_back(cx * py - cp * y);
        const Integer ny = s * py + t * y;
        px = g;
        py = ny;
    }
    Integer d2 = 0;
    for (const Integer& y : ys) d2 = gcd(d2, y);
    if (sgn(px) == 0 || sgn(d2) == 0) throw Error("lattice does not have full rank");
    if (sgn(px) < 0) {
        px = -px;
        py = -py;
    }
    Integer k = floor_mod(py, d2);
    return from_hnf(std::move(px), std::move(k), std::move(d2));
}

bool IdealHNF::contains(const RingElt& x) const {
    if (!mpz_divisible_p(x.a().get_mpz_t(), d1_.get_mpz_t())) return false;
    const Integer m = x.a() / d1_;
    const Integer rest = x.b() - m * k_;
    return mpz_divisible_p(rest.get_mpz_t(), d2_.get_mpz_t()) != 0;
}

RingElt IdealHNF::reduce(const RingElt& x) const {
    const Integer m = floor_div(x.a(), d1_);
    Integer a = x.a() - m * d1_;
    Integer b = floor_mod(x.b() - m * k_, d2_);
    return RingElt(std::move(a), std::move(b));
}

std::array<RingElt, 2> IdealHNF::basis() const {
    return {RingElt(d1_, k_), RingElt(Integer(0), d2_)};
}

bool operator<(const IdealHNF& x, const IdealHNF& y) {
    const Integer nx = x.norm(), ny = y.norm();
    if (nx != ny) return nx < ny;
    return std::tie(x.d1_, x.k_, x.d2_) < std::tie(y.d1_, y.k_, y.d2_);
}

std::string to_string(const IdealHNF& ideal) {
    return "[" + ideal.d1().get_str() + "," + ideal.k().get_str() + "," + ideal.d2().get_str() + "]";
}

IdealHNF ideal_from_generator(const RingElt& g) {
    if (g.is_zero()) throw Error("the zero ideal has no HNF");
    const RingElt lg = g * RingElt::lambda();
    return IdealHNF::from_rows({{g.a(), g.b()}, {lg.a(), lg.b()}});
}

IdealHNF ideal_mul(const IdealHNF& x, const IdealHNF& y) {
    std::vector<std::array<Integer, 2>> rows;
    for (const RingElt& u : x.basis()) {
        for (const RingElt& v : y.basis()) {
            const RingElt p = u * v;
            rows.push_back({p.a(), p.b()});
        }
    }
    return IdealHNF::from_rows(rows);
}

IdealHNF ideal_pow(const IdealHNF& x, unsigned e) {
    IdealHNF out;
    for (unsigned i = 0; i < e; ++i) out = ideal_mul(out, x);
    return out;
}

bool ideal_divides(const IdealHNF& divisor, const IdealHNF& ideal) {
    for (const RingElt& e : ideal.basis()) {
        if (!divisor.contains(e)) return false;
    }
    return true;
}

namespace {

Integer coefficient_size(const RingElt& x) { return abs(x.a()) + abs(x.b()); }

// Associate of x with small coefficients and positive real value.
RingElt balance_units(RingElt x) {
    if (x.is_zero()) return x;
    const RingElt up = RingElt::lambda();
    const RingElt down = RingElt::lambda_power(-1);
    for (;;) {
        RingElt y = x * up;
        if (coefficient_size(y) >= coefficient_size(x)) y = x * down;
        if (coefficient_size(y) >= coefficient_size(x)) break;
        x = std::move(y);
    }
    return sign_real(x) < 0 ? -x : x;
}

} // namespace

RingElt ideal_generator(const IdealHNF& ideal) {
    const auto [u, v] = ideal.basis();
    RingElt g = balance_units(gcd_pseudo(u, v).gcd);
    if (ideal_from_generator(g) != ideal) {
        throw Error("failed to find a generator for " + to_string(ideal));
    }
    return g;
}

bool is_rational_prime(const Integer& p) {
    return sgn(p) > 0 && mpz_probab_prime_p(p.get_mpz_t(), 50) > 0;
}

std::vector<PrimeFactor> split_rational_prime(const Integer& p) {
    if (!is_rational_prime(p)) throw Error(p.get_str() + " is not a rational prime");
    std::vector<PrimeFactor> out;
    if (p == 5) {
        const RingElt tau(Integer(2), Integer(1));
        out.push_back({ideal_from_generator(tau), tau, 2, 1, true, p});
        return out;
    }
    const unsigned long r = mpz_fdiv_ui(p.get_mpz_t(), 5);
    if (r == 1 || r == 4) {
        if (!p.fits_ulong_p()) throw Error("split prime too large for root scan: " + p.get_str());
        const unsigned long pu = p.get_ui();
        for (unsigned long t = 0; t < pu; ++t) {
            // t^2 = t + 1 (mod p)
            const Integer lhs = Integer(t) * t - t - 1;
            if (!mpz_divisible_ui_p(lhs.get_mpz_t(), pu)) continue;
            const RingElt g =
                balance_units(gcd_pseudo(RingElt(p), RingElt(Integer(-static_cast<long>(t)), Integer(1))).gcd);
            if (norm(g) != p) throw Error("split prime generator has wrong norm");
            out.push_back({ideal_from_generator(g), g, 1, 1, false, p});
        }
        if (out.size() != 2 || out[0].prime == out[1].prime) {
            throw Error("expected two distinct primes above " + p.get_str());
        }
        std::sort(out.begin(), out.end(),
                  [](const PrimeFactor& x, const PrimeFactor& y) { return x.prime < y.prime; });
        return out;
    }
    out.push_back({ideal_from_generator(RingElt(p)), RingElt(p), 1, 2, false, p});
    return out;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n) {
    if (sgn(n) <= 0) throw Error("can only factor positive integers");
    std::vector<std::pair<Integer, unsigned>> out;
    for (Integer d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<PrimeFactor> factor_ideal(const IdealHNF& ideal) {
    std::vector<PrimeFactor> out;
    for (const auto& [p, unused] : factor_integer(ideal.norm())) {
        for (PrimeFactor f : split_rational_prime(p)) {
            unsigned e = 0;
            IdealHNF power = f.prime;
            while (ideal_divides(power, ideal)) {
                ++e;
                power = ideal_mul(power, f.prime);
            }
            if (e == 0) continue;
            f.exponent = e;
            out.push_back(std::move(f));
        }
    }
    if (reconstruct(out) != ideal) throw Error("factorization of " + to_string(ideal) + " is incomplete");
    return out;
}

IdealHNF reconstruct(const std::vector<PrimeFactor>& factors) {
    IdealHNF out;
    for (const PrimeFactor& f : factors) out = ideal_mul(out, ideal_pow(f.prime, f.exponent));
    return out;
}

ResidueRing::ResidueRing(const IdealHNF& modulus) : modulus_(modulus) {
    if (modulus.norm() > kMaxSize) {
        throw Error("residue ring of size " + modulus.norm().get_str() + " exceeds the supported 2^30");
    }
    d1_ = to_i64(modulus.d1());
    k_ = to_i64(modulus.k());
    d2_ = to_i64(modulus.d2());
    one_ = reduce(1, 0);
}

ResElt ResidueRing::reduce(std::int64_t a, std::int64_t b) const {
    const std::int64_t m = floor_div(a, d1_);
    a -= m * d1_;
    b = floor_mod(floor_mod(b, d2_) - floor_mod(m, d2_) * k_ % d2_, d2_);
    return {a, b};
}

ResElt ResidueRing::reduce(const RingElt& x) const {
    const RingElt r = modulus_.reduce(x);
    return {r.a().get_si(), r.b().get_si()};
}

ResElt ResidueRing::add(const ResElt& u, const ResElt& v) const {
    return reduce(u.x + v.x, u.y + v.y);
}

ResElt ResidueRing::sub(const ResElt& u, const ResElt& v) const {
    return reduce(u.x - v.x, u.y - v.y);
}

ResElt ResidueRing::neg(const ResElt& u) const {
    return reduce(-u.x, -u.y);
}

ResElt ResidueRing::mul(const ResElt& u, const ResElt& v) const {
    const std::int64_t yy = u.y * v.y;
    return reduce(u.x * v.x + yy, u.x * v.y + v.x * u.y + yy);
}

ResElt reduce(const RingElt& x, const ResidueRing& ring) {
    return ring.reduce(x);
}

std::string to_string(const ResElt& e) {
    return to_string(RingElt(Integer(static_cast<long>(e.x)), Integer(static_cast<long>(e.y))));
}

} // namespace hecke5
