#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke5/golden.hpp"
#include "hecke5/hecke.hpp"
#include "hecke5/ideal.hpp"
#include "hecke5/index_formula.hpp"
#include "hecke5/quotient.hpp"
#include "hecke5/verify.hpp"

using namespace hecke5;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct UsageError : Error {
    using Error::Error;
};

std::string schema(const std::string& command) { return "hecke5." + command + "/1"; }

RingElt element_arg(const std::string& name, const std::string& text) {
    try {
        return parse_element(text);
    } catch (const ParseError& e) {
        throw UsageError(name + ": " + e.what() + " in '" + text + "'");
    }
}

Mat2 matrix_arg(const std::string& text) {
    try {
        return parse_matrix(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("matrix: ") + e.what() + " in '" + text + "'");
    }
}

IdealHNF level_arg(const std::string& generator, const std::string& hnf) {
    if (!generator.empty() && !hnf.empty()) throw UsageError("give either --level or --hnf, not both");
    if (!hnf.empty()) {
        std::vector<Integer> parts;
        std::stringstream ss(hnf);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                parts.emplace_back(item);
            } catch (const std::invalid_argument&) {
                throw UsageError("--hnf: '" + item + "' is not an integer");
            }
        }
        if (parts.size() != 3) throw UsageError("--hnf expects d1,k,d2");
        try {
            return IdealHNF::from_hnf(parts[0], parts[1], parts[2]);
        } catch (const Error& e) {
            throw UsageError(std::string("--hnf: ") + e.what());
        }
    }
    if (generator.empty()) throw UsageError("a level is required (--level or --hnf)");
    const RingElt g = element_arg("--level", generator);
    if (g.is_zero()) throw UsageError("--level: the zero ideal has infinite index");
    return ideal_from_generator(g);
}

json integers(const std::vector<Integer>& v) {
    json out = json::array();
    for (const Integer& x : v) out.push_back(x.get_str());
    return out;
}

std::string join(const std::vector<Integer>& v) {
    std::string out;
    for (const Integer& x : v) out += (out.empty() ? "" : " ") + x.get_str();
    return out;
}

json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

json hnf_json(const IdealHNF& ideal) {
    return json::array({integer_json(ideal.d1()), integer_json(ideal.k()), integer_json(ideal.d2())});
}

json check_json(const Check& c) {
    json j{{"name", c.name}, {"passed", c.passed}, {"computed", c.computed}, {"expected", c.expected},
           {"source", c.source}};
    if (!c.passed) j["witness"] = c.witness;
    return j;
}

struct Output {
    bool as_json = false;
    json doc;
    std::ostringstream text;

    void emit() const {
        if (as_json) {
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << text.str();
        }
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic in Z[L] (L^2 = L + 1) and congruence quotients of the Hecke group H5"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a single JSON document");
    app.fallthrough();

    std::string x_text, y_text, matrix_text, level_text, hnf_text, out_path, which = "all";
    std::size_t cap = kDefaultCap;
    bool enumerate = false, formula = false, both = false;

    auto* norm_cmd = app.add_subcommand("norm", "signed and absolute norm of an element");
    norm_cmd->add_option("x", x_text, "element, e.g. 3+2L")->required();

    auto* factor_cmd = app.add_subcommand("factor", "prime ideal factorisation of (x) or of an HNF ideal");
    factor_cmd->add_option("x", x_text, "generator of the ideal");
    factor_cmd->add_option("--hnf", hnf_text, "ideal as d1,k,d2");

    auto* divmod_cmd = app.add_subcommand("divmod", "pseudo-Euclidean division a = (qL) b + r");
    divmod_cmd->add_option("a", x_text)->required();
    divmod_cmd->add_option("b", y_text)->required();

    auto* gcd_cmd = app.add_subcommand("gcd", "pseudo-Euclidean gcd with quotient sequence");
    gcd_cmd->add_option("a", x_text)->required();
    gcd_cmd->add_option("b", y_text)->required();

    auto* efactor_cmd = app.add_subcommand("efactor", "reduced factor e(a/b) and completion matrix");
    efactor_cmd->add_option("a", x_text)->required();
    efactor_cmd->add_option("b", y_text)->required();

    auto* member_cmd = app.add_subcommand("member", "membership in H5 of a matrix [[a,b],[c,d]]");
    member_cmd->add_option("matrix", matrix_text)->required();

    auto* complete_cmd = app.add_subcommand("complete", "element of H5 with first column (a, c)");
    complete_cmd->add_option("a", x_text)->required();
    complete_cmd->add_option("c", y_text)->required();

    auto* index_cmd = app.add_subcommand("index", "[H5 : H(A)] by enumeration and/or closed formula");
    index_cmd->add_option("--level", level_text, "generator of A");
    index_cmd->add_option("--hnf", hnf_text, "A as d1,k,d2");
    auto* mode = index_cmd->add_option_group("mode");
    mode->add_flag("--enumerate", enumerate, "enumerate H5/H(A) (default)");
    mode->add_flag("--formula", formula, "closed formula only");
    mode->add_flag("--both", both, "both, and compare");
    mode->require_option(0, 1);
    index_cmd->add_option("--cap", cap, "enumeration cap")->capture_default_str();

    auto* cosets_cmd = app.add_subcommand("cosets", "one S,T-word per element of H5/H(A)");
    cosets_cmd->add_option("--level", level_text, "generator of A");
    cosets_cmd->add_option("--hnf", hnf_text, "A as d1,k,d2");
    cosets_cmd->add_option("--out", out_path, "write word<TAB>matrix lines to this file");
    cosets_cmd->add_option("--cap", cap, "enumeration cap")->capture_default_str();

    auto* verify_cmd = app.add_subcommand("verify", "run the verification reports");
    verify_cmd->add_option("which", which, "all | lemma-a | lemma-b | section7 | identities")
        ->check(CLI::IsMember({"all", "lemma-a", "lemma-b", "section7", "identities"}))
        ->capture_default_str();

    auto* sl2_cmd = app.add_subcommand("sl2order", "|SL(2, Z[L]/A)|");
    sl2_cmd->add_option("--level", level_text, "generator of A");
    sl2_cmd->add_option("--hnf", hnf_text, "A as d1,k,d2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Output out;
    out.as_json = as_json;
    int status = kOk;
    try {
        if (*norm_cmd) {
            const RingElt x = element_arg("x", x_text);
            out.doc = {{"schema", schema("norm")}, {"element", to_string(x)},
                       {"signed_norm", signed_norm(x).get_str()}, {"norm", norm(x).get_str()},
                       {"conjugate", to_string(x.conjugate())}};
            out.text << "element: " << x << "\nsigned_norm: " << signed_norm(x) << "\nnorm: " << norm(x)
                     << "\nconjugate: " << x.conjugate() << '\n';
        } else if (*factor_cmd) {
            IdealHNF ideal;
            if (!x_text.empty() && !hnf_text.empty()) throw UsageError("give either x or --hnf, not both");
            if (!hnf_text.empty()) {
                ideal = level_arg("", hnf_text);
            } else {
                if (x_text.empty()) throw UsageError("factor needs an element or --hnf");
                const RingElt x = element_arg("x", x_text);
                if (x.is_zero()) throw UsageError("cannot factor zero");
                ideal = ideal_from_generator(x);
            }
            json factors = json::array();
            out.text << "ideal: " << to_string(ideal) << "\nnorm: " << ideal.norm() << '\n';
            for (const PrimeFactor& f : factor_ideal(ideal)) {
                factors.push_back({{"hnf", hnf_json(f.prime)}, {"generator", to_string(f.generator)},
                                   {"exponent", f.exponent}, {"norm", f.prime.norm().get_str()},
                                   {"rational_prime", f.rational_prime.get_str()},
                                   {"degree", f.residue_degree}, {"ramified", f.ramified}});
                out.text << "prime: (" << f.generator << ") " << to_string(f.prime) << " exponent " << f.exponent
                         << " norm " << f.prime.norm() << (f.ramified ? " ramified" : "") << '\n';
            }
            out.doc = {{"schema", schema("factor")}, {"ideal", hnf_json(ideal)},
                       {"norm", ideal.norm().get_str()}, {"factors", factors}};
        } else if (*divmod_cmd) {
            const RingElt a = element_arg("a", x_text), b = element_arg("b", y_text);
            if (b.is_zero()) throw UsageError("division by zero");
            const PseudoDivision d = divmod_pseudo(a, b);
            out.doc = {{"schema", schema("divmod")}, {"a", to_string(a)}, {"b", to_string(b)},
                       {"quotient", d.quotient.get_str()}, {"remainder", to_string(d.remainder)}};
            out.text << "quotient: " << d.quotient << "\nremainder: " << d.remainder << '\n';
        } else if (*gcd_cmd) {
            const RingElt a = element_arg("a", x_text), b = element_arg("b", y_text);
            const PseudoGcd g = gcd_pseudo(a, b);
            out.doc = {{"schema", schema("gcd")}, {"gcd", to_string(g.gcd)}, {"quotients", integers(g.quotients)},
                       {"iterations", g.iterations}, {"unit", is_unit(g.gcd)}};
            out.text << "gcd: " << g.gcd << "\nquotients: " << join(g.quotients) << "\niterations: " << g.iterations
                     << '\n';
        } else if (*efactor_cmd) {
            const RingElt a = element_arg("a", x_text), b = element_arg("b", y_text);
            const ReductionResult r = reduce_fraction(a, b);
            const RingElt shift = RingElt::lambda_power(r.e);
            out.doc = {{"schema", schema("efactor")}, {"e", r.e}, {"completion", to_string(r.completion)},
                       {"reduced", {to_string(a * shift), to_string(b * shift)}},
                       {"unit", {{"sign", r.unit.sign}, {"exponent", r.unit.exponent}}},
                       {"quotients", integers(r.quotients)}};
            out.text << "e: " << r.e << "\nreduced: " << a * shift << " / " << b * shift
                     << "\ncompletion: " << to_string(r.completion) << '\n';
        } else if (*member_cmd) {
            const Mat2 m = matrix_arg(matrix_text);
            const bool member = is_member(m);
            std::string reason = "det 1 and both columns reduced";
            if (m.det() != RingElt(1)) {
                reason = "det is " + to_string(m.det());
            } else if (!member) {
                reason = is_reduced(m.a11, m.a21) ? "second column not reduced" : "first column not reduced";
            }
            out.doc = {{"schema", schema("member")}, {"matrix", to_string(m)}, {"member", member},
                       {"reason", reason}};
            out.text << (member ? "true" : "false") << " (" << reason << ")\n";
        } else if (*complete_cmd) {
            const RingElt a = element_arg("a", x_text), c = element_arg("c", y_text);
            const Mat2 m = complete_column(a, c);
            out.doc = {{"schema", schema("complete")}, {"matrix", to_string(m)}};
            out.text << to_string(m) << '\n';
        } else if (*index_cmd) {
            const IdealHNF level = level_arg(level_text, hnf_text);
            const bool run_enum = both || enumerate || !formula;
            const bool run_formula = both || formula;
            out.doc = {{"schema", schema("index")}, {"level", hnf_json(level)}, {"norm", level.norm().get_str()}};
            out.text << "level: " << to_string(level) << "\nnorm: " << level.norm() << '\n';
            std::optional<Integer> enumerated, closed;
            if (run_enum) {
                std::cerr << "enumerating H5/H(A) for A = " << to_string(level) << "...\n";
                const QuotientGroup q = build_quotient(level, cap);
                enumerated = Integer(static_cast<unsigned long>(q.order()));
                const Integer g_index = minus_i_in_level(level) ? *enumerated : Integer(*enumerated / 2);
                const Integer full = sl2_order(level);
                out.doc["index_h"] = enumerated->get_str();
                out.doc["index_g"] = g_index.get_str();
                out.doc["sl2_order"] = full.get_str();
                out.doc["surjective"] = *enumerated == full;
                out.text << "enumerated: " << *enumerated << "\nindex_g: " << g_index << "\nsl2_order: " << full
                         << "\nsurjective: " << (*enumerated == full ? "true" : "false") << '\n';
            }
            if (run_formula) {
                const IndexReport rep = index_formula(level);
                closed = rep.total;
                json factors = json::array();
                for (const FactorIndex& f : rep.factors) {
                    factors.push_back({{"hnf", hnf_json(f.factor.prime)}, {"generator", to_string(f.factor.generator)},
                                       {"exponent", f.factor.exponent}, {"partial", f.partial.get_str()}});
                }
                out.doc["formula"] = {{"total", rep.total.get_str()}, {"I_a", rep.I_a.get_str()},
                                      {"J_b", rep.J_b.get_str()}, {"a", rep.exponent_two}, {"b", rep.exponent_three},
                                      {"coprime_part_norm", rep.coprime_part_norm.get_str()},
                                      {"coprime_part_index", rep.coprime_part_index.get_str()}, {"factors", factors}};
                out.text << "formula: " << rep.total << " (I_a " << rep.I_a << ", J_b " << rep.J_b
                         << ", coprime part " << rep.coprime_part_index << ")\n";
            }
            if (enumerated && closed) {
                const bool agrees = *enumerated == *closed;
                out.doc["agrees"] = agrees;
                out.text << "agrees: " << (agrees ? "true" : "false") << '\n';
                if (!agrees) status = kMathFailure;
            }
        } else if (*cosets_cmd) {
            const IdealHNF level = level_arg(level_text, hnf_text);
            std::cerr << "enumerating H5/H(A) for A = " << to_string(level) << "...\n";
            const QuotientGroup q = build_quotient(level, cap);
            const auto words = coset_words(q);
            std::ostringstream lines;
            json entries = json::array();
            for (const auto& [m, w] : words) {
                lines << to_string(w) << '\t' << to_string(m, q.ring()) << '\n';
                if (out.as_json && out_path.empty()) entries.push_back({{"word", to_string(w)}, {"matrix", to_string(m, q.ring())}});
            }
            out.doc = {{"schema", schema("cosets")}, {"level", hnf_json(level)}, {"count", words.size()}};
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw UsageError("cannot open " + out_path + " for writing");
                f << lines.str();
                out.doc["out"] = out_path;
                out.text << "count: " << words.size() << "\nwritten: " << out_path << '\n';
            } else {
                out.doc["cosets"] = entries;
                out.text << lines.str();
            }
        } else if (*verify_cmd) {
            std::vector<VerificationReport> reports;
            if (which == "all") {
                reports = verify_all();
            } else if (which == "lemma-a") {
                for (const auto& [p, n] : default_layer_parameters()) reports.push_back(verify_elementary_layer(p, n));
            } else if (which == "lemma-b") {
                reports.push_back(verify_invariant_subspaces());
            } else if (which == "section7") {
                reports.push_back(verify_power_subgroup_mod5());
            } else {
                reports.push_back(verify_matrix_identities());
            }
            json docs = json::array();
            bool all_passed = true;
            for (const VerificationReport& r : reports) {
                json checks = json::array();
                out.text << (r.passed() ? "PASS " : "FAIL ") << r.name << '\n';
                for (const Check& c : r.checks) {
                    checks.push_back(check_json(c));
                    out.text << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
                    if (!c.passed) out.text << "\n       computed " << c.computed << "\n       expected " << c.expected;
                    out.text << '\n';
                }
                docs.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", checks}});
                all_passed = all_passed && r.passed();
            }
            out.doc = {{"schema", schema("verify")}, {"passed", all_passed}, {"reports", docs}};
            if (!all_passed) status = kMathFailure;
        } else if (*sl2_cmd) {
            const IdealHNF level = level_arg(level_text, hnf_text);
            const Integer order = sl2_order(level);
            out.doc = {{"schema", schema("sl2order")}, {"level", hnf_json(level)}, {"order", order.get_str()}};
            out.text << order << '\n';
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "; raise --cap\n";
        return kMathFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMathFailure;
    }
    out.emit();
    return status;
}
