#include "hecke5/verify.hpp"

#include <algorithm>
#include <bitset>
#include <set>

#include "hecke5/hecke.hpp"
#include "hecke5/ideal.hpp"
#include "hecke5/quotient.hpp"

namespace hecke5 {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string check_name, bool ok, std::string computed,
                             std::string expected, std::string source) {
    Check c{std::move(check_name), ok, std::move(computed), std::move(expected), std::move(source), {}};
    if (!ok) c.witness = c.computed;
    checks.push_back(std::move(c));
}

const Check* VerificationReport::find(const std::string& check_name) const {
    for (const Check& c : checks) {
        if (c.name == check_name) return &c;
    }
    return nullptr;
}

namespace {

const RingElt kL = RingElt::lambda();

RingElt L(long k) { return RingElt::lambda_power(k); }

IdealHNF level(const RingElt& g) { return ideal_from_generator(g); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string str(std::size_t n) { return std::to_string(n); }

bool congruent_identity(const Mat2& m, const IdealHNF& ideal) {
    return ideal.contains(m.a11 - RingElt(1)) && ideal.contains(m.a12) && ideal.contains(m.a21) &&
           ideal.contains(m.a22 - RingElt(1));
}

bool congruent(const Mat2& x, const Mat2& y, const IdealHNF& ideal) {
    return ideal.contains(x.a11 - y.a11) && ideal.contains(x.a12 - y.a12) &&
           ideal.contains(x.a21 - y.a21) && ideal.contains(x.a22 - y.a22);
}

Mat2 scale(const RingElt& c, const Mat2& m) {
    return {c * m.a11, c * m.a12, c * m.a21, c * m.a22};
}

Mat2 add(const Mat2& x, const Mat2& y) {
    return {x.a11 + y.a11, x.a12 + y.a12, x.a21 + y.a21, x.a22 + y.a22};
}

// The order-125 layer H(2+L)/H(5) is generated by a, SaS^-1 and JaJ^-1.
Mat2 delta_a() {
    return {RingElt(Integer(-6), Integer(-11)), RingElt(Integer(5), Integer(10)),
            RingElt(Integer(3), Integer(4)), RingElt(Integer(-2), Integer(-4))};
}

Mat2 delta_b() {
    const Mat2 s = gen_S();
    return s * delta_a() * s.inverse();
}

Mat2 delta_c() {
    const Mat2 j = swap_J();
    return j * delta_a() * j;
}

const RingElt kTau(Integer(2), Integer(1));

// I + (2+L) U for an integer matrix U.
Mat2 identity_plus_tau(long u11, long u12, long u21, long u22) {
    return add(Mat2::identity(), scale(kTau, Mat2{u11, u12, u21, u22}));
}

struct LayerBasis {
    ResidueRing ring;
    ResMat r, s, t;
};

LayerBasis layer_basis() {
    ResidueRing ring(level(5));
    const ResMat a = reduce(delta_a(), ring);
    const ResMat b = reduce(delta_b(), ring);
    const ResMat c = reduce(delta_c(), ring);
    const ResMat ac = mul(ring, a, c);
    const ResMat ab = mul(ring, a, b);
    return {ring, mul(ring, ac, ab), mul(ring, ac, inverse(ring, ab)), mul(ring, b, c)};
}

ActionMatrix from_columns(std::array<int, 3> r, std::array<int, 3> s, std::array<int, 3> t) {
    ActionMatrix m{};
    for (int i = 0; i < 3; ++i) {
        m[i][0] = ((r[i] % 5) + 5) % 5;
        m[i][1] = ((s[i] % 5) + 5) % 5;
        m[i][2] = ((t[i] % 5) + 5) % 5;
    }
    return m;
}

std::string to_string(const ActionMatrix& m) {
    std::string out = "[";
    for (int i = 0; i < 3; ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < 3; ++j) out += (j ? "," : "") + std::to_string(m[i][j]);
        out += "]";
    }
    return out + "]";
}

int encode(int i, int j, int k) { return 25 * i + 5 * j + k; }

std::array<int, 3> decode(int v) { return {v / 25, (v / 5) % 5, v % 5}; }

int apply(const ActionMatrix& m, int v) {
    const auto x = decode(v);
    std::array<int, 3> y{};
    for (int i = 0; i < 3; ++i) y[i] = (m[i][0] * x[0] + m[i][1] * x[1] + m[i][2] * x[2]) % 5;
    return encode(y[0], y[1], y[2]);
}

} // namespace

std::array<ActionMatrix, 3> actions_from_relations() {
    // r^S = s^-1, s^S = r^-1, t^S = t^-1
    // r^T = r s t^2, s^T = s, t^T = s t
    // r^J = s, s^J = r, t^J = t^-1
    return {from_columns({0, -1, 0}, {-1, 0, 0}, {0, 0, -1}),
            from_columns({1, 1, 2}, {0, 1, 0}, {0, 1, 1}),
            from_columns({0, 1, 0}, {1, 0, 0}, {0, 0, -1})};
}

std::array<ActionMatrix, 3> actions_with_variant_rT() {
    auto a = actions_from_relations();
    a[1] = from_columns({1, -1, 2}, {0, 1, 0}, {0, 1, 1});
    return a;
}

std::array<ActionMatrix, 3> actions_by_conjugation() {
    const LayerBasis basis = layer_basis();
    const ResidueRing& ring = basis.ring;
    // Coordinates of every r^i s^j t^k.
    std::vector<std::pair<MatKey, int>> coords;
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            for (int k = 0; k < 5; ++k) {
                const ResMat m = mul(ring, mul(ring, pow(ring, basis.r, i), pow(ring, basis.s, j)),
                                     pow(ring, basis.t, k));
                coords.emplace_back(pack(ring, m), encode(i, j, k));
            }
        }
    }
    auto coordinates = [&](const ResMat& m) {
        const MatKey key = pack(ring, m);
        for (const auto& [k, v] : coords) {
            if (k == key) return decode(v);
        }
        throw Error("conjugate left the layer <r, s, t>");
    };
    const std::array<ResMat, 3> conjugators{reduce(gen_S(), ring), reduce(gen_T(), ring),
                                            reduce(swap_J(), ring)};
    std::array<ActionMatrix, 3> out{};
    for (std::size_t g = 0; g < 3; ++g) {
        const ResMat& by = conjugators[g];
        // J has det -1 but is its own inverse.
        const ResMat by_inv = g == 2 ? by : inverse(ring, by);
        auto image = [&](const ResMat& x) { return coordinates(mul(ring, mul(ring, by, x), by_inv)); };
        out[g] = from_columns(image(basis.r), image(basis.s), image(basis.t));
    }
    return out;
}

std::vector<std::vector<int>> subspaces_f5_cubed() {
    auto span = [](const std::vector<int>& gens) {
        std::set<int> out{0};
        for (int g : gens) {
            std::set<int> next;
            const auto gv = decode(g);
            for (int v : out) {
                const auto x = decode(v);
                for (int c = 0; c < 5; ++c) {
                    next.insert(encode((x[0] + c * gv[0]) % 5, (x[1] + c * gv[1]) % 5, (x[2] + c * gv[2]) % 5));
                }
            }
            out = std::move(next);
        }
        return std::vector<int>(out.begin(), out.end());
    };
    std::set<std::vector<int>> all;
    all.insert(span({}));
    for (int v = 0; v < 125; ++v) {
        all.insert(span({v}));
        for (int w = v + 1; w < 125; ++w) all.insert(span({v, w}));
    }
    all.insert(span({encode(1, 0, 0), encode(0, 1, 0), encode(0, 0, 1)}));
    return {all.begin(), all.end()};
}

std::vector<std::vector<int>> invariant_subspaces(const std::vector<ActionMatrix>& actions) {
    std::vector<std::vector<int>> out;
    for (const auto& w : subspaces_f5_cubed()) {
        std::bitset<125> member;
        for (int v : w) member.set(static_cast<std::size_t>(v));
        const bool invariant = std::all_of(actions.begin(), actions.end(), [&](const ActionMatrix& m) {
            return std::all_of(w.begin(), w.end(), [&](int v) { return member.test(static_cast<std::size_t>(apply(m, v))); });
        });
        if (invariant) out.push_back(w);
    }
    return out;
}

VerificationReport verify_elementary_layer(unsigned p, unsigned n) {
    VerificationReport rep{"elementary-layer p=" + std::to_string(p) + " n=" + std::to_string(n), {}};
    const std::string src = "six-generator layer modulo p^(n+1)";
    const Integer pn = [&] { Integer x; mpz_ui_pow_ui(x.get_mpz_t(), p, n); return x; }();
    const RingElt c(pn);
    const IdealHNF modulus = level(RingElt(Integer(pn * p)));
    ResidueRing ring(modulus);

    std::vector<Mat2> exact;
    for (long i = 0; i < 2; ++i) exact.push_back({1, c * L(i), 0, 1});                 // X_i
    for (long i = 0; i < 2; ++i) exact.push_back({1, 0, -(c * L(i)), 1});              // Y_i
    for (long i = 0; i < 2; ++i) {
        exact.push_back({RingElt(1) - c * L(i + 1), c * L(i + 2), -(c * L(i)), RingElt(1) + c * L(i + 1)}); // Z_i
    }
    bool dets = std::all_of(exact.begin(), exact.end(), [](const Mat2& m) { return m.det() == RingElt(1); });
    rep.add("generators have determinant 1", dets, yes_no(dets), "true", src);

    std::vector<ResMat> gens;
    for (const Mat2& m : exact) gens.push_back(reduce(m, ring));

    // (I + p^n U)(I + p^n V) = I + p^n (U + V) modulo p^(n+1)
    bool additive = true;
    const ResMat id = identity(ring);
    for (const ResMat& x : gens) {
        for (const ResMat& y : gens) {
            const ResMat prod = mul(ring, x, y);
            const ResMat sum{ring.sub(ring.add(x.a11, y.a11), id.a11), ring.add(x.a12, y.a12),
                             ring.add(x.a21, y.a21), ring.sub(ring.add(x.a22, y.a22), id.a22)};
            additive = additive && prod == sum;
        }
    }
    rep.add("products add the perturbations", additive, yes_no(additive), "true", src);

    const Integer p6 = [&] { Integer x; mpz_ui_pow_ui(x.get_mpz_t(), p, 6); return x; }();
    const MatrixGroup group(ring, gens, p6.get_ui() + 1);
    rep.add("order", Integer(static_cast<unsigned long>(group.order())) == p6, str(group.order()), p6.get_str(), src);
    rep.add("abelian", group.is_abelian(), yes_no(group.is_abelian()), "true", src);

    bool exponent_p = true;
    std::string offender;
    for (std::size_t i = 1; i < group.order(); ++i) {
        const ResMat g = group.element(i);
        if (pow(ring, g, p) != id) {
            exponent_p = false;
            offender = to_string(g, ring);
            break;
        }
    }
    rep.add("every non-identity element has order p", exponent_p, exponent_p ? "true" : offender, "true", src);

    const MatrixGroup m_half(ring, {gens[0], gens[1], gens[2], gens[3]}, group.order());
    const MatrixGroup n_half(ring, {gens[4], gens[5]}, group.order());
    const std::size_t p4 = static_cast<std::size_t>(p) * p * p * p;
    const std::size_t p2 = static_cast<std::size_t>(p) * p;
    rep.add("|M| = p^4", m_half.order() == p4, str(m_half.order()), str(p4), src);
    rep.add("|N| = p^2", n_half.order() == p2, str(n_half.order()), str(p2), src);
    std::size_t meet = 0;
    for (std::size_t i = 0; i < n_half.order(); ++i) meet += m_half.contains(n_half.element(i)) ? 1 : 0;
    rep.add("M meets N trivially", meet == 1, str(meet), "1", src);
    return rep;
}

VerificationReport verify_invariant_subspaces() {
    VerificationReport rep{"invariant-subspaces", {}};
    const std::string src = "conjugation action on the order-125 layer modulo 5";
    const IdealHNF tau = level(kTau);
    const Mat2 a = delta_a();
    const Mat2 m4{RingElt(Integer(2), Integer(3)), RingElt(Integer(-3), Integer(-2)),
                  RingElt(Integer(3), Integer(4)), RingElt(Integer(-2), Integer(-4))};
    rep.add("a = T^-2 M with M in H5", a == pow(gen_T(), -2) * m4 && is_member(m4), to_string(a), "T^-2 M", src);
    rep.add("a is congruent to I mod (2+L)", congruent_identity(a, tau), yes_no(congruent_identity(a, tau)), "true", src);

    const LayerBasis basis = layer_basis();
    const ResidueRing& ring = basis.ring;
    const IdealHNF five = level(5);
    struct Expect { const char* name; const ResMat* m; Mat2 target; };
    const Expect expects[] = {{"r = (ac)(ab)", &basis.r, identity_plus_tau(0, 0, 3, 0)},
                              {"s = (ac)(ab)^-1", &basis.s, identity_plus_tau(0, 3, 0, 0)},
                              {"t = bc", &basis.t, identity_plus_tau(-3, 0, 0, 3)}};
    for (const Expect& e : expects) {
        const bool ok = congruent(lift(*e.m, ring), e.target, five);
        rep.add(std::string(e.name) + " mod 5", ok, to_string(*e.m, ring), to_string(reduce(e.target, ring), ring), src);
    }

    const std::vector<ResMat> abc{reduce(a, ring), reduce(delta_b(), ring), reduce(delta_c(), ring)};
    const std::vector<ResMat> rst{basis.r, basis.s, basis.t};
    const MatrixGroup g_abc(ring, abc, 200);
    const MatrixGroup g_rst(ring, rst, 200);
    bool same = g_abc.order() == g_rst.order();
    for (std::size_t i = 0; same && i < g_rst.order(); ++i) same = g_abc.contains(g_rst.element(i));
    rep.add("<a,b,c> has order 125", g_abc.order() == 125, str(g_abc.order()), "125", src);
    rep.add("<r,s,t> = <a,b,c>", same, yes_no(same), "true", src);

    const auto from_table = actions_from_relations();
    const auto by_conj = actions_by_conjugation();
    const char* names[] = {"S", "T", "J"};
    for (std::size_t g = 0; g < 3; ++g) {
        rep.add(std::string("action of ") + names[g] + ": relations agree with conjugation",
                from_table[g] == by_conj[g], to_string(by_conj[g]), to_string(from_table[g]), src);
    }
    const auto variant = actions_with_variant_rT();
    const bool only_rT_differs = variant[1] != by_conj[1] && variant[1][1][0] == 4 && by_conj[1][1][0] == 1 &&
                                 variant[0] == by_conj[0] && variant[2] == by_conj[2];
    rep.add("variant r^T = r s^-1 t^2 rejected: conjugation gives r s t^2", only_rT_differs,
            to_string(by_conj[1]), to_string(variant[1]), "variant relation table");

    const auto subspaces = subspaces_f5_cubed();
    rep.add("subspaces of F_5^3", subspaces.size() == 64, str(subspaces.size()), "64", "2 + 2(5^3 - 1)/(5 - 1)");
    const auto inv = invariant_subspaces({by_conj.begin(), by_conj.end()});
    const bool only_trivial = inv.size() == 2 && inv[0].size() + inv[1].size() == 126;
    std::string sizes;
    for (const auto& w : inv) sizes += (sizes.empty() ? "" : ",") + str(w.size());
    rep.add("invariant subspaces are exactly {0} and everything", only_trivial, "sizes " + sizes, "sizes 1,125", src);
    const auto inv_variant = invariant_subspaces({variant.begin(), variant.end()});
    rep.add("same conclusion under the variant relation table", inv_variant.size() == 2,
            str(inv_variant.size()), "2", "variant relation table");
    return rep;
}

VerificationReport verify_power_subgroup_mod5() {
    VerificationReport rep{"power-subgroup-mod-5", {}};
    const std::string src = "H5 / H(5)";
    const QuotientGroup q = build_quotient(level(5));
    rep.add("|H5 / H(5)|", q.order() == 15000, str(q.order()), "15000", "120 * 5^3");

    const std::vector<ResMat> delta{q.image(delta_a()), q.image(delta_b()), q.image(delta_c())};
    const SubgroupHandle d = subgroup_generated(q, delta, "<a,b,c>");
    rep.add("|<a,b,c>|", d.order() == 125, str(d.order()), "125", src);
    rep.add("<a,b,c> is abelian", d.is_abelian(), yes_no(d.is_abelian()), "true", src);
    rep.add("<a,b,c> has exponent 5", d.exponent() == 5, str(d.exponent()), "5", src);
    rep.add("<a,b,c> is normal", d.is_normal(), yes_no(d.is_normal()), "true", src);
    rep.add("quotient by <a,b,c> has order 120", q.order() / d.order() == 120 && q.order() % d.order() == 0,
            str(q.order() / d.order()), "120", src);

    // The layer is exactly the kernel of reduction mod (2+L).
    const IdealHNF tau = level(kTau);
    std::vector<std::uint32_t> kernel;
    for (std::uint32_t i = 0; i < q.order(); ++i) {
        if (congruent_identity(lift(q.element(i), q.ring()), tau)) kernel.push_back(i);
    }
    rep.add("<a,b,c> = H(2+L) / H(5)", kernel == d.members, str(kernel.size()), "125", src);
    const QuotientGroup q_tau = build_quotient(tau);
    rep.add("|H5 / H(2+L)|", q_tau.order() == 120, str(q_tau.order()), "120", "SL(2, 5)");
    const SubgroupHandle p_tau = power_subgroup(q_tau, 5);
    rep.add("fifth powers generate H5 / H(2+L)", p_tau.index() == 1, str(p_tau.index()), "1",
            "SL(2, 5) has no normal subgroup of index 5");

    const SubgroupHandle fifth = power_subgroup(q, 5);
    rep.add("index of the fifth-power subgroup", fifth.index() == 1, str(fifth.index()), "1",
            "finite-group enumeration");
    const bool s_in = fifth.contains(q.image_S());
    const bool t5_in = fifth.contains(pow(q.ring(), q.image_T(), 5));
    rep.add("S and T^5 are products of fifth powers", s_in && t5_in, yes_no(s_in && t5_in), "true", src);
    return rep;
}

VerificationReport verify_matrix_identities() {
    VerificationReport rep{"matrix-identities", {}};
    const RingElt two_l(Integer(0), Integer(2));
    const RingElt one_two_l(Integer(1), Integer(2));
    const RingElt two_two_l(Integer(2), Integer(2));

    // Generators of H(2) modulo +-I.
    const std::vector<Mat2> omega2{{1, two_l, 0, 1},
                                   {1, 0, two_l, 1},
                                   {one_two_l, two_two_l, two_l, one_two_l},
                                   {one_two_l, two_l, two_two_l, one_two_l}};
    const IdealHNF two = level(2);
    for (std::size_t i = 0; i < omega2.size(); ++i) {
        const bool ok = is_member(omega2[i]) && congruent_identity(omega2[i], two);
        rep.add("omega2[" + str(i) + "] in H(2)", ok, to_string(omega2[i]), "member, I mod 2", "generators of G(2)");
    }
    {
        const QuotientGroup q4 = build_quotient(level(4));
        std::vector<ResMat> imgs;
        for (const Mat2& m : omega2) imgs.push_back(q4.image(m));
        const SubgroupHandle h = subgroup_generated(q4, imgs, "omega2 mod 4");
        rep.add("omega2 mod 4 has order 16", h.order() == 16, str(h.order()), "16", "G(2)/G(4) elementary abelian");
        const bool elem = h.is_abelian() && h.exponent() == 2;
        rep.add("omega2 mod 4 is elementary abelian", elem, yes_no(elem), "true", "G(2)/G(4) elementary abelian");
        const bool minus_i_out = !h.contains(q4.image(-Mat2::identity()));
        rep.add("-I is not in the omega2 image mod 4", minus_i_out, yes_no(minus_i_out), "true",
                "[H(2) : H(4)] = 2 [G(2) : G(4)]");
    }

    // Explicit matrices used to build congruences; the third has det -L and is not in H5.
    const Mat2 list37[] = {
        {one_two_l, two_two_l, two_l, one_two_l},
        {kL, RingElt(Integer(2), Integer(1)), kL, RingElt(Integer(1), Integer(2))},
        {-kL, kL, -two_l, RingElt(Integer(1), Integer(2))},
        {RingElt(Integer(2), Integer(3)), RingElt(Integer(-3), Integer(-2)), RingElt(Integer(3), Integer(4)),
         RingElt(Integer(-2), Integer(-4))}};
    for (std::size_t i : {0, 1, 3}) {
        rep.add("listed matrix " + str(i + 1) + " in H5", is_member(list37[i]), to_string(list37[i]), "member",
                "explicit H5 elements");
    }
    rep.add("listed matrix 3 rejected: det = -L", list37[2].det() == -kL && !is_member(list37[2]),
            to_string(list37[2].det()), to_string(-kL), "explicit H5 candidates");
    const Mat2 fixed3{-1, kL, -two_l, RingElt(Integer(1), Integer(2))};
    rep.add("det-1 variant [[-1,L],[-2L,2L+1]] in H5", is_member(fixed3), to_string(fixed3), "member",
            "variant used for the mod-9 congruence");

    // T from two translations of coprime integral step.
    for (const auto& [x, y] : std::vector<std::pair<long, long>>{{2, 3}, {4, 9}, {8, 5}, {7, 11}, {25, 4}}) {
        Integer g, m, n;
        mpz_gcdext(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t(), Integer(x).get_mpz_t(), Integer(y).get_mpz_t());
        const Mat2 tx = translation(x), ty = translation(y);
        const bool in_levels = congruent_identity(tx, level(x)) && congruent_identity(ty, level(y));
        const Mat2 prod = pow(tx, m.get_si()) * pow(ty, n.get_si());
        rep.add("T from T^" + str(x) + " and T^" + str(y), in_levels && prod == gen_T(), to_string(prod),
                to_string(gen_T()), "coprime levels generate T");
    }

    const RingElt a = RingElt(2) * L(2);
    // Parabolic conjugates for a = 2L^2, c = pL^3.
    for (long p : {3, 5, 7}) {
        const RingElt c = RingElt(p) * L(3);
        const long e = reduce_fraction(RingElt(2), RingElt(p) * kL).e;
        rep.add("e(2/" + str(p) + "L) = 2", e == 2, std::to_string(e), "2", "reduced form 2L^2 / pL^3");
        const Mat2 x = complete_column(a, c);
        rep.add("completion of (2L^2, " + str(p) + "L^3)", is_member(x) && x.a11 == a && x.a21 == c,
                to_string(x), "member with the given first column", "reduced form 2L^2 / pL^3");
        for (long m : {1L, p, 2 * p}) {
            const Mat2 conj = parabolic_conjugate(a, c, m);
            const RingElt ml = RingElt(m) * kL;
            const Mat2 closed{RingElt(1) - a * c * ml, a * a * ml, -(c * c * ml), RingElt(1) + a * c * ml};
            const bool ok = conj == closed && is_member(conj) && congruent_identity(conj, level(m));
            rep.add("parabolic conjugate p=" + str(p) + " m=" + str(m), ok, to_string(conj), to_string(closed),
                    "X T^m X^-1 in H(m)");
        }
    }

    {
        const Mat2 s5 = parabolic_conjugate(a, RingElt(5) * L(3), 5);
        const IdealHNF m25 = level(25);
        const Mat2 target{1, RingElt(20) * L(5), 0, 1};
        const Mat2 target60{1, 60, 0, 1};
        const bool ok = congruent(s5, target, m25) && congruent(s5, target60, m25) &&
                        congruent_identity(s5, level(5));
        rep.add("p=5 parabolic conjugate = [[1,20L^5],[0,1]] = [[1,60],[0,1]] mod 25", ok,
                to_string(reduce(s5, ResidueRing(m25)), ResidueRing(m25)),
                to_string(reduce(target60, ResidueRing(m25)), ResidueRing(m25)),
                "translation by 12*5 modulo 25");
    }

    {
        const Mat2 da = delta_a();
        const bool ok = da == pow(gen_T(), -2) * list37[3] && is_member(da) && congruent_identity(da, level(kTau));
        rep.add("a = T^-2 M in H(2+L)", ok, to_string(da), "member congruent to I mod (2+L)", "level 2+L element");
    }
    {
        const IdealHNF five = level(5);
        const std::pair<const char*, std::pair<Mat2, Mat2>> cases[] = {
            {"a = I + (2+L)[[4,0],[4,1]] mod 5", {delta_a(), identity_plus_tau(4, 0, 4, 1)}},
            {"b = I + (2+L)[[1,1],[0,4]] mod 5", {delta_b(), identity_plus_tau(1, 1, 0, 4)}},
            {"c = I + (2+L)[[1,4],[0,4]] mod 5", {delta_c(), identity_plus_tau(1, 4, 0, 4)}}};
        ResidueRing ring(five);
        for (const auto& [name, mats] : cases) {
            rep.add(name, congruent(mats.first, mats.second, five), to_string(reduce(mats.first, ring), ring),
                    to_string(reduce(mats.second, ring), ring), "generators of the order-125 layer");
        }
    }
    {
        const RingElt four_l(Integer(0), Integer(4));
        const Mat2 prod = Mat2{1, 0, -four_l, 1} * Mat2{1, -four_l, 0, 1} * pow(omega2[2], 2);
        const bool ok = congruent(prod, Mat2{1, 4, 0, 1}, level(8)) && congruent_identity(prod, level(4)) &&
                        is_member(prod);
        ResidueRing r8(level(8));
        rep.add("translation by 4 in H(4)/H(8)", ok, to_string(reduce(prod, r8), r8),
                to_string(reduce(Mat2{1, 4, 0, 1}, r8), r8),
                "H(4) element congruent to [[1,4],[0,1]] mod 8");
    }
    {
        const Mat2 x{kL, RingElt(Integer(2), Integer(1)), kL, RingElt(Integer(1), Integer(2))};
        const Mat2 big_a = x * fixed3.inverse();
        const Mat2 expect{RingElt(Integer(4), Integer(9)), RingElt(Integer(-3), Integer(-2)),
                          RingElt(Integer(6), Integer(9)), RingElt(Integer(-2), Integer(-3))};
        rep.add("A = X Y^-1 = [[9L+4,-2L-3],[9L+6,-3L-2]]", big_a == expect && big_a.det() == RingElt(1) && is_member(big_a),
                to_string(big_a), to_string(expect), "explicit mod-9 witness");
        const Mat2 e3 = pow(big_a, -3);
        ResidueRing r9(level(9));
        const bool ok = congruent(e3, Mat2{1, 3, 0, 1}, level(9)) && congruent_identity(e3, level(3));
        rep.add("A^-3 = [[1,3],[0,1]] mod 9", ok, to_string(reduce(e3, r9), r9),
                to_string(reduce(Mat2{1, 3, 0, 1}, r9), r9),
                "H(3) element congruent to [[1,3],[0,1]] mod 9");
    }
    for (long p : {7, 11, 13}) {
        const Mat2 sp = parabolic_conjugate(a, RingElt(p) * L(3), p);
        const Mat2 prod = translation(Integer(-20 * p)) * sp;
        const IdealHNF p2 = level(p * p);
        ResidueRing ring(p2);
        const bool ok = congruent(prod, Mat2{1, 12 * p, 0, 1}, p2) && congruent_identity(prod, level(p)) &&
                        is_member(prod);
        rep.add("T^-20p S = [[1,12p],[0,1]] mod p^2, p=" + str(p), ok, to_string(reduce(prod, ring), ring),
                to_string(reduce(Mat2{1, 12 * p, 0, 1}, ring), ring), "H(p) element for p-power towers");
    }
    return rep;
}

const std::vector<std::pair<unsigned, unsigned>>& default_layer_parameters() {
    static const std::vector<std::pair<unsigned, unsigned>> params{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}, {7, 2}};
    return params;
}

std::vector<VerificationReport> verify_all() {
    std::vector<VerificationReport> out;
    for (const auto& [p, n] : default_layer_parameters()) out.push_back(verify_elementary_layer(p, n));
    out.push_back(verify_invariant_subspaces());
    out.push_back(verify_power_subgroup_mod5());
    out.push_back(verify_matrix_identities());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
    return out;
}

} // namespace hecke5
