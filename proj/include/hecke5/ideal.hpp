#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hecke5/golden.hpp"

namespace hecke5 {

/**
 * A nonzero ideal of Z[L] stored as the Hermite normal form of its lattice
 * in coordinates (coefficient of 1, coefficient of L):
 *
 *     { m*(d1, k) + n*(0, d2) : m, n in Z },   0 <= k < d2.
 *
 * The triple is canonical, so two ideals are equal iff their triples are.
 * Closure under multiplication by L forces d1 | d2.
 */
class IdealHNF {
public:
    // The unit ideal (1).
    IdealHNF() = default;

    // Validates shape and L-closure; throws Error otherwise.
    static IdealHNF from_hnf(Integer d1, Integer k, Integer d2);

    // HNF of the Z-span of arbitrary integer rows (rank 2 required).
    static IdealHNF from_rows(const std::vector<std::array<Integer, 2>>& rows);

    const Integer& d1() const noexcept { return d1_; }
    const Integer& k() const noexcept { return k_; }
    const Integer& d2() const noexcept { return d2_; }

    Integer norm() const { return d1_ * d2_; }
    bool is_unit_ideal() const { return d1_ == 1 && d2_ == 1; }

    bool contains(const RingElt& x) const;

    // Canonical representative of x modulo this ideal: 0 <= a < d1, 0 <= b < d2.
    RingElt reduce(const RingElt& x) const;

    // Z-basis d1 + k*L and d2*L.
    std::array<RingElt, 2> basis() const;

    friend bool operator==(const IdealHNF&, const IdealHNF&) = default;
    friend bool operator<(const IdealHNF& x, const IdealHNF& y);

private:
    IdealHNF(Integer d1, Integer k, Integer d2)
        : d1_(std::move(d1)), k_(std::move(k)), d2_(std::move(d2)) {}

    Integer d1_{1};
    Integer k_{0};
    Integer d2_{1};
};

std::string to_string(const IdealHNF& ideal); // "[d1,k,d2]"

IdealHNF ideal_from_generator(const RingElt& g);
IdealHNF ideal_mul(const IdealHNF& x, const IdealHNF& y);
IdealHNF ideal_pow(const IdealHNF& x, unsigned e);

// True iff `divisor` divides `ideal`, i.e. ideal is contained in divisor.
bool ideal_divides(const IdealHNF& divisor, const IdealHNF& ideal);

// A generator of the (principal) ideal: the pseudo-Euclidean gcd of its
// HNF basis, moved by a unit to small coefficients and positive real value.
RingElt ideal_generator(const IdealHNF& ideal);

struct PrimeFactor {
    IdealHNF prime;
    RingElt generator;
    unsigned exponent = 1;
    unsigned residue_degree = 1; // norm(prime) = p^residue_degree
    bool ramified = false;
    Integer rational_prime;      // the p below this prime
};

bool is_rational_prime(const Integer& p);

// Prime ideals above p: p = 5 ramifies as (2+L)^2, p = +-1 mod 5 splits into
// two degree-1 primes, every other p stays inert. Throws if p is not prime.
std::vector<PrimeFactor> split_rational_prime(const Integer& p);

// Rational prime factorization by trial division, ascending.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

// Full prime factorization, ordered by rational prime then HNF. The unit
// ideal has the empty factorization.
std::vector<PrimeFactor> factor_ideal(const IdealHNF& ideal);

// Product of prime^exponent over all factors.
IdealHNF reconstruct(const std::vector<PrimeFactor>& factors);

/**
 * Element of a residue ring Z[L]/A as its canonical coordinates
 * (x, y), 0 <= x < d1, 0 <= y < d2. Arithmetic goes through the owning
 * ResidueRing, which keeps ResElt small enough for large enumerations.
 */
struct ResElt {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const ResElt&, const ResElt&) = default;
};

/**
 * The finite ring Z[L]/A with machine-word arithmetic. Restricted to
 * norm(A) <= 2^30 so that products of canonical coordinates cannot overflow.
 */
class ResidueRing {
public:
    static constexpr std::int64_t kMaxSize = std::int64_t{1} << 30;

    explicit ResidueRing(const IdealHNF& modulus);

    const IdealHNF& modulus() const noexcept { return modulus_; }
    std::int64_t size() const noexcept { return d1_ * d2_; }
    std::int64_t d1() const noexcept { return d1_; }
    std::int64_t d2() const noexcept { return d2_; }

    ResElt reduce(const RingElt& x) const;
    ResElt reduce(std::int64_t a, std::int64_t b) const;
    RingElt lift(const ResElt& e) const { return RingElt(Integer(static_cast<long>(e.x)), Integer(static_cast<long>(e.y))); }

    ResElt zero() const { return {0, 0}; }
    ResElt one() const { return one_; }

    ResElt add(const ResElt& u, const ResElt& v) const;
    ResElt sub(const ResElt& u, const ResElt& v) const;
    ResElt neg(const ResElt& u) const;
    ResElt mul(const ResElt& u, const ResElt& v) const;

    // Dense index in [0, size()) and its inverse.
    std::int64_t index(const ResElt& e) const { return e.x * d2_ + e.y; }
    ResElt element(std::int64_t i) const { return {i / d2_, i % d2_}; }

private:
    IdealHNF modulus_;
    std::int64_t d1_;
    std::int64_t k_;
    std::int64_t d2_;
    ResElt one_;
};

ResElt reduce(const RingElt& x, const ResidueRing& ring);

std::string to_string(const ResElt& e);

} // namespace hecke5
