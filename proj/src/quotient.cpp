#include "hecke5/quotient.hpp"

#include <algorithm>
#include <numeric>

namespace hecke5 {

ResMat reduce(const Mat2& m, const ResidueRing& ring) {
    return {ring.reduce(m.a11), ring.reduce(m.a12), ring.reduce(m.a21), ring.reduce(m.a22)};
}

Mat2 lift(const ResMat& m, const ResidueRing& ring) {
    return {ring.lift(m.a11), ring.lift(m.a12), ring.lift(m.a21), ring.lift(m.a22)};
}

ResMat identity(const ResidueRing& ring) {
    return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

ResMat mul(const ResidueRing& r, const ResMat& x, const ResMat& y) {
    return {r.add(r.mul(x.a11, y.a11), r.mul(x.a12, y.a21)),
            r.add(r.mul(x.a11, y.a12), r.mul(x.a12, y.a22)),
            r.add(r.mul(x.a21, y.a11), r.mul(x.a22, y.a21)),
            r.add(r.mul(x.a21, y.a12), r.mul(x.a22, y.a22))};
}

ResElt det(const ResidueRing& r, const ResMat& m) {
    return r.sub(r.mul(m.a11, m.a22), r.mul(m.a12, m.a21));
}

ResMat inverse(const ResidueRing& r, const ResMat& m) {
    return {m.a22, r.neg(m.a12), r.neg(m.a21), m.a11};
}

ResMat pow(const ResidueRing& ring, const ResMat& m, std::uint64_t e) {
    ResMat result = identity(ring);
    ResMat base = m;
    while (e) {
        if (e & 1) result = mul(ring, result, base);
        e >>= 1;
        if (e) base = mul(ring, base, base);
    }
    return result;
}

ResMat conjugate(const ResidueRing& ring, const ResMat& by, const ResMat& m) {
    return mul(ring, mul(ring, by, m), inverse(ring, by));
}

std::string to_string(const ResMat& m, const ResidueRing& ring) {
    return to_string(lift(m, ring));
}

MatKey pack(const ResidueRing& ring, const ResMat& m) {
    const auto n = static_cast<std::uint64_t>(ring.size());
    return {static_cast<std::uint64_t>(ring.index(m.a11)) * n + static_cast<std::uint64_t>(ring.index(m.a12)),
            static_cast<std::uint64_t>(ring.index(m.a21)) * n + static_cast<std::uint64_t>(ring.index(m.a22))};
}

ResMat unpack(const ResidueRing& ring, const MatKey& k) {
    const auto n = static_cast<std::uint64_t>(ring.size());
    auto at = [&](std::uint64_t i) { return ring.element(static_cast<std::int64_t>(i)); };
    return {at(k.hi / n), at(k.hi % n), at(k.lo / n), at(k.lo % n)};
}

CapExceeded::CapExceeded(std::size_t cap, std::size_t count)
    : Error("enumeration cap of " + std::to_string(cap) + " elements exceeded (reached " +
            std::to_string(count) + ")"),
      count_(count) {}

namespace {

std::uint64_t mix(const MatKey& k) {
    // splitmix64 finaliser over both words
    std::uint64_t z = k.hi * 0x9e3779b97f4a7c15ULL ^ (k.lo + 0x632be59bd9b4e5f5ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

MatrixGroup::MatrixGroup(ResidueRing ring, std::vector<ResMat> generators, std::size_t cap)
    : ring_(std::move(ring)), generators_(std::move(generators)), slots_(1024, kNone) {
    if (generators_.size() > 255) throw Error("too many generators for a single closure");
    insert(pack(ring_, identity(ring_)), kNone, 0);
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        const ResMat x = element(i);
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            const MatKey k = pack(ring_, mul(ring_, x, generators_[g]));
            if (insert(k, static_cast<std::uint32_t>(i), static_cast<std::uint8_t>(g)) &&
                keys_.size() > cap) {
                throw CapExceeded(cap, keys_.size());
            }
        }
    }
}

std::optional<std::uint32_t> MatrixGroup::lookup(const MatKey& k) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t s = mix(k) & mask;; s = (s + 1) & mask) {
        const std::uint32_t idx = slots_[s];
        if (idx == kNone) return std::nullopt;
        if (keys_[idx] == k) return idx;
    }
}

bool MatrixGroup::insert(const MatKey& k, std::uint32_t parent, std::uint8_t via) {
    const std::size_t mask = slots_.size() - 1;
    std::size_t s = mix(k) & mask;
    for (;; s = (s + 1) & mask) {
        const std::uint32_t idx = slots_[s];
        if (idx == kNone) break;
        if (keys_[idx] == k) return false;
    }
    slots_[s] = static_cast<std::uint32_t>(keys_.size());
    keys_.push_back(k);
    parent_.push_back(parent);
    via_.push_back(via);
    if (2 * keys_.size() > slots_.size()) grow();
    return true;
}

void MatrixGroup::grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, kNone);
    const std::size_t mask = next.size() - 1;
    for (std::uint32_t i = 0; i < keys_.size(); ++i) {
        std::size_t s = mix(keys_[i]) & mask;
        while (next[s] != kNone) s = (s + 1) & mask;
        next[s] = i;
    }
    slots_ = std::move(next);
}

std::optional<std::uint32_t> MatrixGroup::find(const ResMat& m) const {
    return lookup(pack(ring_, m));
}

std::vector<std::uint8_t> MatrixGroup::path(std::size_t i) const {
    std::vector<std::uint8_t> out;
    for (std::size_t j = i; parent_[j] != kNone; j = parent_[j]) out.push_back(via_[j]);
    std::reverse(out.begin(), out.end());
    return out;
}

bool MatrixGroup::is_abelian() const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        for (std::size_t j = i + 1; j < generators_.size(); ++j) {
            if (mul(ring_, generators_[i], generators_[j]) != mul(ring_, generators_[j], generators_[i])) {
                return false;
            }
        }
    }
    return true;
}

std::uint64_t element_order(const ResidueRing& ring, const ResMat& m, std::uint64_t limit) {
    const ResMat id = identity(ring);
    ResMat x = m;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        if (x == id) return k;
        x = mul(ring, x, m);
    }
    throw Error("element order exceeds " + std::to_string(limit));
}

std::uint64_t MatrixGroup::exponent() const {
    std::uint64_t e = 1;
    for (std::size_t i = 0; i < order(); ++i) e = std::lcm(e, element_order(ring_, element(i), order()));
    return e;
}

MatrixGroup generate_group(const ResidueRing& ring, std::span<const ResMat> gens, std::size_t cap) {
    std::vector<ResMat> useful;
    MatrixGroup current(ring, {}, cap);
    for (const ResMat& g : gens) {
        if (current.contains(g)) continue;
        useful.push_back(g);
        current = MatrixGroup(ring, useful, cap);
    }
    return current;
}

QuotientGroup::QuotientGroup(const IdealHNF& level, std::size_t cap)
    : level_(level),
      group_([&] {
          if (level.is_unit_ideal()) throw Error("the quotient by the unit ideal is trivial");
          ResidueRing ring(level);
          std::vector<ResMat> gens{reduce(gen_S(), ring), reduce(gen_T(), ring)};
          return MatrixGroup(std::move(ring), std::move(gens), cap);
      }()) {}

Word QuotientGroup::word(std::size_t i) const {
    Word w;
    for (std::uint8_t g : group_.path(i)) w.push_back(g == 0 ? Letter::S : Letter::T);
    return w;
}

QuotientGroup build_quotient(const IdealHNF& level, std::size_t cap) {
    return QuotientGroup(level, cap);
}

std::size_t index_h(const IdealHNF& level, std::size_t cap) {
    return build_quotient(level, cap).order();
}

Integer sl2_order(const IdealHNF& level) {
    if (level.is_unit_ideal()) throw Error("SL2 order requested for the unit ideal");
    const Integer n = level.norm();
    mpq_class result = mpq_class(n * n * n);
    for (const PrimeFactor& f : factor_ideal(level)) {
        const Integer np = f.prime.norm();
        result *= mpq_class(np * np - 1, np * np);
    }
    result.canonicalize();
    if (result.get_den() != 1) throw Error("SL2 order is not integral");
    return result.get_num();
}

bool is_surjective(const IdealHNF& level, std::size_t cap) {
    return Integer(static_cast<unsigned long>(index_h(level, cap))) == sl2_order(level);
}

bool minus_i_in_level(const IdealHNF& level) {
    return ideal_divides(level, ideal_from_generator(RingElt(2)));
}

std::size_t index_g(const IdealHNF& level, std::size_t cap) {
    const std::size_t h = index_h(level, cap);
    return minus_i_in_level(level) ? h : h / 2;
}

std::vector<std::pair<ResMat, Word>> coset_words(const QuotientGroup& q) {
    std::vector<std::pair<ResMat, Word>> out;
    out.reserve(q.order());
    for (std::size_t i = 0; i < q.order(); ++i) out.emplace_back(q.element(i), q.word(i));
    return out;
}

bool SubgroupHandle::contains(std::uint32_t i) const {
    return std::binary_search(members.begin(), members.end(), i);
}

bool SubgroupHandle::contains(const ResMat& m) const {
    const auto i = group->find(m);
    return i && contains(*i);
}

bool SubgroupHandle::is_normal() const {
    const ResidueRing& ring = group->ring();
    for (const ResMat& g : {group->image_S(), group->image_T()}) {
        for (std::uint32_t i : members) {
            if (!contains(conjugate(ring, g, group->element(i)))) return false;
        }
    }
    return true;
}

bool SubgroupHandle::is_abelian() const {
    const ResidueRing& ring = group->ring();
    std::vector<ResMat> elems;
    elems.reserve(members.size());
    for (std::uint32_t i : members) elems.push_back(group->element(i));
    // Abelian iff a generating set commutes pairwise.
    const MatrixGroup span = generate_group(ring, elems, members.size());
    return span.is_abelian();
}

std::uint64_t SubgroupHandle::exponent() const {
    std::uint64_t e = 1;
    for (std::uint32_t i : members) {
        e = std::lcm(e, element_order(group->ring(), group->element(i), members.size()));
    }
    return e;
}

SubgroupHandle subgroup_from_predicate(const QuotientGroup& q, CongruenceKind which) {
    const ResidueRing& ring = q.ring();
    SubgroupHandle h{&q, {}, which == CongruenceKind::H0 ? "H0" : "H1"};
    for (std::uint32_t i = 0; i < q.order(); ++i) {
        const ResMat m = q.element(i);
        if (m.a21 != ring.zero()) continue;
        if (which == CongruenceKind::H1 && (m.a11 != ring.one() || m.a22 != ring.one())) continue;
        h.members.push_back(i);
    }
    return h;
}

SubgroupHandle subgroup_generated(const QuotientGroup& q, std::span<const ResMat> gens,
                                  std::string description) {
    for (const ResMat& g : gens) {
        if (!q.contains(g)) throw Error("generator " + to_string(g, q.ring()) + " is not in the quotient");
    }
    const MatrixGroup span = generate_group(q.ring(), gens, q.order());
    SubgroupHandle h{&q, {}, std::move(description)};
    h.members.reserve(span.order());
    for (std::size_t i = 0; i < span.order(); ++i) h.members.push_back(*q.find(span.element(i)));
    std::sort(h.members.begin(), h.members.end());
    return h;
}

SubgroupHandle power_subgroup(const QuotientGroup& q, std::uint64_t k) {
    if (k == 0) throw Error("power subgroup exponent must be positive");
    std::vector<MatKey> seen;
    std::vector<ResMat> powers;
    for (std::size_t i = 0; i < q.order(); ++i) {
        const ResMat p = pow(q.ring(), q.element(i), k);
        seen.push_back(pack(q.ring(), p));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    powers.reserve(seen.size());
    for (const MatKey& key : seen) powers.push_back(unpack(q.ring(), key));
    return subgroup_generated(q, powers, std::to_string(k) + "-th powers");
}

} // namespace hecke5
