#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke5/hecke.hpp"
#include "hecke5/ideal.hpp"

namespace hecke5 {

// 2x2 matrix over a residue ring Z[L]/A. Entries are canonical.
struct ResMat {
    ResElt a11, a12, a21, a22;

    friend bool operator==(const ResMat&, const ResMat&) = default;
};

ResMat reduce(const Mat2& m, const ResidueRing& ring);
Mat2 lift(const ResMat& m, const ResidueRing& ring);
ResMat identity(const ResidueRing& ring);
ResMat mul(const ResidueRing& ring, const ResMat& x, const ResMat& y);
ResElt det(const ResidueRing& ring, const ResMat& m);
// Inverse of a det-1 matrix (the adjugate).
ResMat inverse(const ResidueRing& ring, const ResMat& m);
ResMat pow(const ResidueRing& ring, const ResMat& m, std::uint64_t e);
ResMat conjugate(const ResidueRing& ring, const ResMat& by, const ResMat& m); // by * m * by^-1
std::string to_string(const ResMat& m, const ResidueRing& ring);

// The eight canonical coordinates packed into two words.
struct MatKey {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    friend bool operator==(const MatKey&, const MatKey&) = default;
    friend bool operator<(const MatKey& x, const MatKey& y) {
        return x.hi != y.hi ? x.hi < y.hi : x.lo < y.lo;
    }
};

MatKey pack(const ResidueRing& ring, const ResMat& m);
ResMat unpack(const ResidueRing& ring, const MatKey& k);

// Enumeration stopped after `count` elements.
class CapExceeded : public Error {
public:
    CapExceeded(std::size_t cap, std::size_t count);
    std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_;
};

inline constexpr std::size_t kDefaultCap = 5'000'000;

/**
 * A finite matrix group over Z[L]/A, enumerated by breadth-first closure of
 * its generators from the identity (right multiplication only; in a finite
 * group the generated semigroup is the group). Element 0 is the identity and
 * every other element records the element and generator it was reached from.
 */
class MatrixGroup {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    MatrixGroup(ResidueRing ring, std::vector<ResMat> generators, std::size_t cap = kDefaultCap);

    const ResidueRing& ring() const noexcept { return ring_; }
    const std::vector<ResMat>& generators() const noexcept { return generators_; }
    std::size_t order() const noexcept { return keys_.size(); }

    ResMat element(std::size_t i) const { return unpack(ring_, keys_[i]); }
    const MatKey& key(std::size_t i) const { return keys_[i]; }
    std::optional<std::uint32_t> find(const ResMat& m) const;
    bool contains(const ResMat& m) const { return find(m).has_value(); }

    // Predecessor index and generator index; kNone for the identity.
    std::uint32_t parent(std::size_t i) const { return parent_[i]; }
    std::uint8_t via(std::size_t i) const { return via_[i]; }

    // Generator indices spelling element i from the identity.
    std::vector<std::uint8_t> path(std::size_t i) const;

    bool is_abelian() const;
    // Least common multiple of element orders.
    std::uint64_t exponent() const;

private:
    std::optional<std::uint32_t> lookup(const MatKey& k) const;
    bool insert(const MatKey& k, std::uint32_t parent, std::uint8_t via);
    void grow();

    ResidueRing ring_;
    std::vector<ResMat> generators_;
    std::vector<MatKey> keys_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> via_;
    std::vector<std::uint32_t> slots_; // open addressing over indices into keys_
};

// Closure of an arbitrary generator list. Redundant generators are dropped
// before the final enumeration, so long lists stay cheap.
MatrixGroup generate_group(const ResidueRing& ring, std::span<const ResMat> gens,
                           std::size_t cap = kDefaultCap);

std::uint64_t element_order(const ResidueRing& ring, const ResMat& m, std::uint64_t limit);

/**
 * The image of H5 in SL(2, Z[L]/A), i.e. H5 / H(A), generated by the images
 * of S and T. Parent words use only the letters S and T.
 */
class QuotientGroup {
public:
    QuotientGroup(const IdealHNF& level, std::size_t cap = kDefaultCap);

    const IdealHNF& level() const noexcept { return level_; }
    const ResidueRing& ring() const noexcept { return group_.ring(); }
    const MatrixGroup& group() const noexcept { return group_; }
    std::size_t order() const noexcept { return group_.order(); }

    ResMat element(std::size_t i) const { return group_.element(i); }
    std::optional<std::uint32_t> find(const ResMat& m) const { return group_.find(m); }
    bool contains(const ResMat& m) const { return group_.contains(m); }

    ResMat image_S() const { return group_.generators()[0]; }
    ResMat image_T() const { return group_.generators()[1]; }
    ResMat image(const Mat2& m) const { return reduce(m, ring()); }

    Word word(std::size_t i) const;

private:
    IdealHNF level_;
    MatrixGroup group_;
};

QuotientGroup build_quotient(const IdealHNF& level, std::size_t cap = kDefaultCap);

// [H5 : H(A)] by enumeration.
std::size_t index_h(const IdealHNF& level, std::size_t cap = kDefaultCap);

// |SL(2, Z[L]/A)| = N(A)^3 prod_{P | A} (1 - N(P)^-2).
Integer sl2_order(const IdealHNF& level);

bool is_surjective(const IdealHNF& level, std::size_t cap = kDefaultCap);

// -I == I modulo A, i.e. A divides (2).
bool minus_i_in_level(const IdealHNF& level);

// [G5 : G(A)]: index_h halved unless -I lies in H(A).
std::size_t index_g(const IdealHNF& level, std::size_t cap = kDefaultCap);

std::vector<std::pair<ResMat, Word>> coset_words(const QuotientGroup& q);

// A subgroup of a built quotient. Must not outlive the quotient.
struct SubgroupHandle {
    const QuotientGroup* group = nullptr;
    std::vector<std::uint32_t> members; // sorted element indices into *group
    std::string description;

    std::size_t order() const noexcept { return members.size(); }
    std::size_t index() const noexcept { return group->order() / members.size(); }
    bool contains(std::uint32_t i) const;
    bool contains(const ResMat& m) const;
    bool is_normal() const; // invariant under conjugation by the images of S and T
    bool is_abelian() const;
    std::uint64_t exponent() const;
};

enum class CongruenceKind { H0, H1 };

// H0: a21 = 0. H1: additionally a11 = a22 = 1.
SubgroupHandle subgroup_from_predicate(const QuotientGroup& q, CongruenceKind which);

// Throws if a generator is not an element of q.
SubgroupHandle subgroup_generated(const QuotientGroup& q, std::span<const ResMat> gens,
                                  std::string description = "generated");

// Subgroup generated by all k-th powers; normal by construction.
SubgroupHandle power_subgroup(const QuotientGroup& q, std::uint64_t k);

} // namespace hecke5
