#pragma once

#include <string>
#include <vector>

#include "hecke5/ideal.hpp"

namespace hecke5 {

struct FactorIndex {
    PrimeFactor factor;
    Integer partial; // contribution of this prime power to the total
};

/**
 * Closed-form [H5 : H(A)] for A = 2^a 3^b pi with gcd(N(pi), 6) = 1:
 *
 *     I_a * J_b * N(pi)^3 * prod_{P | pi} (1 - N(P)^-2)
 *
 * with I_0 = 1, I_1 = 10, I_a = 5 * 2^(6(a-1)) for a >= 2 and
 * J_0 = 1, J_b = 120 * 3^(6(b-1)) for b >= 1.
 */
struct IndexReport {
    IdealHNF level;
    std::vector<FactorIndex> factors;
    unsigned exponent_two = 0;   // a
    unsigned exponent_three = 0; // b
    Integer I_a;
    Integer J_b;
    Integer coprime_part_norm;   // N(pi)
    Integer coprime_part_index;  // N(pi)^3 prod (1 - N(P)^-2)
    Integer total;
};

Integer two_part_index(unsigned a);   // I_a
Integer three_part_index(unsigned b); // J_b

IndexReport index_formula(const IdealHNF& level);

enum class PrimePowerCase { Ramified5, PowerOf2, PowerOf3, Inert, Split };

std::string to_string(PrimePowerCase c);

struct PrimePowerIndex {
    PrimePowerCase kind;
    Integer rational_prime;
    Integer index;
};

// Index for a level whose norm is a power of a single rational prime.
// Throws if the norm involves two or more rational primes.
PrimePowerIndex index_prime_power(const IdealHNF& level);

struct TowerStep {
    Integer step;  // [H(P^n) : H(P^(n+1))]
    Integer bound; // N(P)^3
};

// Exact index of H(P^(n+1)) in H(P^n) for a prime ideal P and n >= 1.
TowerStep index_bound_step(const IdealHNF& prime, unsigned n);

} // namespace hecke5
