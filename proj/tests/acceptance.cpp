// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hecke5/index_formula.hpp"
#include "hecke5/quotient.hpp"
#include "hecke5/verify.hpp"
#include "properties.hpp"

using namespace hecke5;

namespace {

RingElt E(long a, long b) { return RingElt(Integer(a), Integer(b)); }
IdealHNF I(const RingElt& g) { return ideal_from_generator(g); }

const RingElt tau = E(2, 1);
const RingElt tau11 = E(3, 1); // a prime of norm 11

struct Level {
    std::string name;
    RingElt generator;
    std::size_t expected;
};

const std::vector<Level>& criterion_one_levels() {
    static const std::vector<Level> levels{
        {"(2)", RingElt(2), 10},        {"(3)", RingElt(3), 120},     {"(2+L)", tau, 120},
        {"(4)", RingElt(4), 320},       {"(5)", RingElt(5), 15000},   {"(8)", RingElt(8), 20480},
        {"(9)", RingElt(9), 87480},     {"(7)", RingElt(7), 117600},  {"(3+L)", tau11, 1320},
        {"(11)", RingElt(11), 1742400}};
    return levels;
}

// Enumerated indices shared by criteria 1-3.
std::map<std::string, std::size_t>& enumerated() {
    static std::map<std::string, std::size_t> cache;
    return cache;
}

std::size_t enumerate(const std::string& name, const RingElt& g) {
    auto& cache = enumerated();
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    return cache[name] = index_h(I(g));
}

struct Result {
    bool passed = true;
    std::ostringstream note;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (!passed) note << "; ";
            note << what;
            passed = false;
        }
    }
};

bool report_ok(const VerificationReport& r, Result& out) {
    for (const Check& c : r.checks) {
        out.expect(c.passed, r.name + ": " + c.name + " computed " + c.computed + " expected " + c.expected);
    }
    return r.passed();
}

Result criterion1() {
    Result r;
    for (const Level& l : criterion_one_levels()) {
        const auto start = std::chrono::steady_clock::now();
        const std::size_t got = enumerate(l.name, l.generator);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.expect(got == l.expected, "index_h" + l.name + " = " + std::to_string(got) + ", want " + std::to_string(l.expected));
        const double limit = l.name == "(11)" ? 300.0 : 60.0;
        r.expect(secs < limit, "index_h" + l.name + " took " + std::to_string(secs) + " s");
    }
    r.note << (r.passed ? "9 levels plus (11) = 1742400" : "");
    return r;
}

Result criterion2() {
    Result r;
    std::vector<std::pair<std::string, RingElt>> levels;
    for (const Level& l : criterion_one_levels()) levels.emplace_back(l.name, l.generator);
    levels.emplace_back("(6)", RingElt(6));
    levels.emplace_back("(10)", RingElt(2) * tau * tau);
    levels.emplace_back("(14)", RingElt(14));
    for (const auto& [name, g] : levels) {
        const Integer formula = index_formula(I(g)).total;
        const Integer counted(static_cast<unsigned long>(enumerate(name, g)));
        r.expect(formula == counted, name + ": formula " + formula.get_str() + " vs enumeration " + counted.get_str());
    }
    // Multiplicativity over the coprime splittings.
    r.expect(enumerate("(6)", RingElt(6)) == enumerate("(2)", RingElt(2)) * enumerate("(3)", RingElt(3)), "(6) != (2)(3)");
    r.expect(enumerate("(10)", RingElt(10)) == enumerate("(2)", RingElt(2)) * enumerate("(5)", RingElt(5)), "(10) != (2)(5)");
    r.expect(enumerate("(14)", RingElt(14)) == enumerate("(2)", RingElt(2)) * enumerate("(7)", RingElt(7)), "(14) != (2)(7)");
    if (r.passed) r.note << levels.size() << " levels agree, (6), (10), (14) multiplicative";
    return r;
}

Result criterion3() {
    Result r;
    std::vector<std::pair<std::string, RingElt>> levels;
    for (const Level& l : criterion_one_levels()) levels.emplace_back(l.name, l.generator);
    levels.emplace_back("(6)", RingElt(6));
    std::size_t surjective = 0;
    for (const auto& [name, g] : levels) {
        const IdealHNF A = I(g);
        const bool coprime_to_6 = gcd(A.norm(), Integer(6)) == 1;
        const bool got = is_surjective(A);
        r.expect(got == coprime_to_6, name + " surjective = " + (got ? "true" : "false"));
        const Integer full = sl2_order(A);
        const Integer h(static_cast<unsigned long>(enumerate(name, g)));
        if (!coprime_to_6) r.expect(h < full, name + ": index_h " + h.get_str() + " not below " + full.get_str());
        surjective += got ? 1 : 0;
    }
    if (r.passed) r.note << surjective << " surjective (norm prime to 6), the rest strictly smaller";
    return r;
}

Result criterion4() {
    Result r;
    const std::size_t g2 = index_g(I(RingElt(2))), g4 = index_g(I(RingElt(4)));
    r.expect(g2 == 10, "[G5 : G(2)] = " + std::to_string(g2));
    r.expect(g4 / g2 == 16 && g4 % g2 == 0, "[G(2) : G(4)] = " + std::to_string(g4) + "/" + std::to_string(g2));
    const RingElt l2 = E(0, 2);
    const std::vector<Mat2> omega2{{1, l2, 0, 1}, {1, 0, l2, 1}, {E(1, 2), E(2, 2), l2, E(1, 2)},
                                   {E(1, 2), l2, E(2, 2), E(1, 2)}};
    const QuotientGroup q4 = build_quotient(I(RingElt(4)));
    std::vector<ResMat> imgs;
    for (const Mat2& m : omega2) imgs.push_back(q4.image(m));
    const SubgroupHandle h = subgroup_generated(q4, imgs, "omega2");
    r.expect(h.order() == 16, "omega2 image mod 4 has order " + std::to_string(h.order()));
    r.expect(h.exponent() == 2 && h.is_abelian(), "omega2 image mod 4 not elementary abelian");
    if (r.passed) r.note << "[G5 : G(2)] = 10, [G(2) : G(4)] = 16 = |<omega2> mod 4|";
    return r;
}

Result criterion5() {
    Result r;
    const std::vector<std::pair<unsigned, unsigned>> params{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {7, 1}};
    const auto start = std::chrono::steady_clock::now();
    for (const auto& [p, n] : params) report_ok(verify_elementary_layer(p, n), r);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.expect(secs < 30, "took " + std::to_string(secs) + " s");
    if (r.passed) r.note << "5 parameter pairs";
    return r;
}

Result criterion6() {
    Result r;
    const VerificationReport rep = verify_invariant_subspaces();
    report_ok(rep, r);
    const auto conj = actions_by_conjugation();
    r.expect(conj == actions_from_relations(), "action derivations disagree");
    r.expect(subspaces_f5_cubed().size() == 64, "subspace count");
    r.expect(invariant_subspaces({conj.begin(), conj.end()}).size() == 2, "invariant subspace count");
    if (r.passed) r.note << "derivations agree; 2 of 64 subspaces invariant";
    return r;
}

Result criterion7() {
    Result r;
    report_ok(verify_power_subgroup_mod5(), r);
    if (r.passed) r.note << "|Q| = 15000, <a,b,c> order 125 normal elementary abelian, fifth powers index 1";
    return r;
}

Result criterion8() {
    Result r;
    const VerificationReport rep = verify_matrix_identities();
    report_ok(rep, r);
    if (r.passed) r.note << rep.checks.size() << " identity checks";
    return r;
}

Result criterion9() {
    Result r;
    const std::pair<const char*, properties::Outcome> runs[] = {
        {"division", properties::pseudo_division(10'000, 101)},
        {"words", properties::word_membership(1000, 102)},
        {"tampered", properties::tampered_rejection(1000, 103)},
        {"e-shift", properties::e_shift(1000, 104)}};
    for (const auto& [name, o] : runs) r.expect(o.passed, std::string(name) + ": " + o.detail);
    if (r.passed) r.note << "10^4 divisions, 10^3 words, 10^3 tampered, 10^3 shifts";
    return r;
}

Result criterion10() {
    Result r;
    for (const RingElt& g : {RingElt(2), RingElt(3), tau, RingElt(4)}) {
        const QuotientGroup q = build_quotient(I(g));
        const auto words = coset_words(q);
        const std::string name = to_string(q.level());
        r.expect(words.size() == q.order(), name + ": word count " + std::to_string(words.size()));
        std::set<std::pair<std::uint64_t, std::uint64_t>> keys;
        for (const auto& [m, w] : words) {
            r.expect(reduce(eval_word(w), q.ring()) == m, name + ": word " + to_string(w) + " does not reduce to its element");
            const MatKey k = pack(q.ring(), m);
            keys.insert({k.hi, k.lo});
        }
        r.expect(keys.size() == words.size(), name + ": duplicate elements");
    }
    if (r.passed) r.note << "(2), (3), (2+L), (4)";
    return r;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"enumerated indices match the known constants", criterion1},
        {"closed formula equals enumeration", criterion2},
        {"surjective exactly when the norm is prime to 6", criterion3},
        {"inhomogeneous indices at levels 2 and 4", criterion4},
        {"elementary layers of order p^6", criterion5},
        {"only trivial invariant subspaces mod 5", criterion6},
        {"fifth-power subgroup modulo 5", criterion7},
        {"explicit matrix identities", criterion8},
        {"randomised properties", criterion9},
        {"coset words", criterion10}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.passed = false;
            r.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << r.note.str() << ") [" << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s]\n";
        failures += r.passed ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
