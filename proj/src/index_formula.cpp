#include "hecke5/index_formula.hpp"

#include <set>

namespace hecke5 {

namespace {

Integer ipow(const Integer& base, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

// N(P)^(3e) (1 - N(P)^-2) = N(P)^(3e-2) (N(P)^2 - 1), e >= 1.
Integer prime_power_sl2(const Integer& np, unsigned e) {
    return ipow(np, 3ul * e - 2) * (np * np - 1);
}

} // namespace

Integer two_part_index(unsigned a) {
    if (a == 0) return 1;
    if (a == 1) return 10;
    return 5 * ipow(2, 6ul * (a - 1));
}

Integer three_part_index(unsigned b) {
    if (b == 0) return 1;
    return 120 * ipow(3, 6ul * (b - 1));
}

IndexReport index_formula(const IdealHNF& level) {
    if (level.is_unit_ideal()) throw Error("index formula needs a proper nonzero ideal");
    IndexReport r;
    r.level = level;
    r.coprime_part_norm = 1;
    mpq_class coprime = 1;
    Integer partial_product = 1;
    std::vector<Integer> coprime_prime_norms;
    for (const PrimeFactor& f : factor_ideal(level)) {
        Integer partial;
        if (f.rational_prime == 2) {
            r.exponent_two = f.exponent;
            partial = two_part_index(f.exponent);
        } else if (f.rational_prime == 3) {
            r.exponent_three = f.exponent;
            partial = three_part_index(f.exponent);
        } else {
            const Integer np = f.prime.norm();
            r.coprime_part_norm *= ipow(np, f.exponent);
            coprime *= mpq_class(np * np - 1, np * np);
            partial = prime_power_sl2(np, f.exponent);
            partial_product *= partial;
        }
        r.factors.push_back({f, std::move(partial)});
    }
    coprime *= mpq_class(ipow(r.coprime_part_norm, 3));
    coprime.canonicalize();
    if (coprime.get_den() != 1 || coprime.get_num() != partial_product) {
        throw Error("coprime part of the index is inconsistent for " + to_string(level));
    }
    r.coprime_part_index = coprime.get_num();
    r.I_a = two_part_index(r.exponent_two);
    r.J_b = three_part_index(r.exponent_three);
    r.total = r.I_a * r.J_b * r.coprime_part_index;
    return r;
}

std::string to_string(PrimePowerCase c) {
    switch (c) {
    case PrimePowerCase::Ramified5: return "ramified-5";
    case PrimePowerCase::PowerOf2: return "power-of-2";
    case PrimePowerCase::PowerOf3: return "power-of-3";
    case PrimePowerCase::Inert: return "inert";
    case PrimePowerCase::Split: return "split";
    }
    return "unknown";
}

PrimePowerIndex index_prime_power(const IdealHNF& level) {
    if (level.is_unit_ideal()) throw Error("index of the unit ideal level requested");
    const std::vector<PrimeFactor> factors = factor_ideal(level);
    std::set<Integer> primes;
    for (const PrimeFactor& f : factors) primes.insert(f.rational_prime);
    if (primes.size() != 1) {
        throw Error("level " + to_string(level) + " has norm divisible by several rational primes; factor it first");
    }
    const Integer p = *primes.begin();
    const unsigned e = factors.front().exponent;
    if (p == 5) return {PrimePowerCase::Ramified5, p, 120 * ipow(5, 3ul * (e - 1))};
    if (p == 2) return {PrimePowerCase::PowerOf2, p, two_part_index(e)};
    if (p == 3) return {PrimePowerCase::PowerOf3, p, three_part_index(e)};
    if (factors.front().residue_degree == 2) {
        // p^(6(n-1)) |SL(2, p^2)|
        const Integer q = p * p;
        return {PrimePowerCase::Inert, p, ipow(p, 6ul * (e - 1)) * q * (q * q - 1)};
    }
    Integer index = 1;
    for (const PrimeFactor& f : factors) index *= prime_power_sl2(p, f.exponent);
    return {PrimePowerCase::Split, p, index};
}

TowerStep index_bound_step(const IdealHNF& prime, unsigned n) {
    if (n < 1) throw Error("tower step needs n >= 1");
    if (prime.is_unit_ideal()) throw Error("the unit ideal is not prime");
    const std::vector<PrimeFactor> factors = factor_ideal(prime);
    if (factors.size() != 1 || factors.front().exponent != 1) {
        throw Error(to_string(prime) +
                    " is not a prime ideal; supported: (2), (3), (2+L), inert (p), split primes above p = +-1 mod 5");
    }
    const PrimeFactor& f = factors.front();
    const Integer np = f.prime.norm();
    const Integer bound = np * np * np;
    if (f.rational_prime == 2) return {n == 1 ? Integer(32) : Integer(64), bound};
    return {bound, bound};
}

} // namespace hecke5
