#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

#include "purespin/spinalg.hpp"
#include "support.hpp"

using namespace purespin;
using testsupport::label;

namespace {

FockElement random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-3, 3);
    FockElement x;
    for (unsigned s = 0; s < 32; ++s)
        if (int c = coef(rng)) x.add(std::uint8_t(s), Rational(c));
    return x;
}

WeightLabel fierz_var(std::string const& tok) {
    if (tok == "l") return lam();
    if (tok[0] == 'w') return w_var(tok[1] - '0', tok[2] - '0');
    return p_var(tok[1] - '0');
}

using TermKey = std::tuple<std::string, WeightLabel, std::string>;  // coeff, var, x index

std::map<WeightLabel, std::set<TermKey>> printed_fierz() {
    std::map<WeightLabel, std::set<TermKey>> out;
    for (auto const& line : testsupport::golden_lines("fierz_finite.txt")) {
        std::istringstream is(line);
        std::string lab, tok, x;
        is >> lab;
        auto& s = out[label(lab)];
        while (is >> tok >> x) {
            std::string c = tok[0] == '-' ? "-1" : "1";
            s.insert({c, fierz_var(tok.substr(1)), x.substr(1)});
        }
    }
    return out;
}

}  // namespace

TEST_CASE("Clifford relations in the Fock model") {
    std::mt19937 rng(5);
    for (int n = 0; n < 10; ++n) {
        FockElement x = random_element(rng);
        for (int i = 1; i <= 5; ++i) {
            CHECK(clifford_apply({i, false}, clifford_apply({i, false}, x)).is_zero());
            CHECK(clifford_apply({i, true}, clifford_apply({i, true}, x)).is_zero());
            for (int j = 1; j <= 5; ++j) {
                FockElement anti = clifford_apply({i, false}, clifford_apply({j, true}, x)) +
                                   clifford_apply({j, true}, clifford_apply({i, false}, x));
                CHECK(anti == (i == j ? x : FockElement()));
            }
        }
    }
}

TEST_CASE("root operators regenerate the diagrams") {
    auto fin_list = affine_covers({0, 0});
    std::set<Cover> fin(fin_list.begin(), fin_list.end());
    auto g = generate_hasse({0, 0});
    CHECK(std::set<Cover>(g.begin(), g.end()) == fin);
    CHECK(g.size() == 20);
    auto w = generate_hasse({0, 1});
    auto ref = affine_covers({0, 1});
    CHECK(std::set<Cover>(w.begin(), w.end()) == std::set<Cover>(ref.begin(), ref.end()));
    for (auto const& op : root_ops())
        for (auto a : window_elements({0, 1}))
            if (auto img = apply_root(op, a)) {
                CHECK((img->sign == 1 || img->sign == -1));
                CHECK(ht(img->label) == ht(a) + 1);
            }
}

TEST_CASE("quadrics match the printed list") {
    auto lines = testsupport::golden_lines("quadrics.txt");
    REQUIRE(lines.size() == 10);
    for (auto const& line : lines) {
        auto sp = line.find(' ');
        auto s = parse_vector_index(line.substr(0, sp));
        REQUIRE(s);
        CHECK(gamma(*s) == parse_poly(line.substr(sp + 1)));
    }
    auto pf = gamma_quadrics_pfaffian();
    for (std::size_t k = 0; k < pf.size(); ++k) CHECK(pf[k] == gamma_quadrics()[k]);
}

TEST_CASE("quadrics agree with the invariant pairing up to the coordinate twist") {
    auto fock = fock_quadrics();
    auto const& c = coordinate_twist();
    int flips = 0;
    for (int v : c) flips += v < 0;
    CHECK(flips == 1);
    CHECK(c[index_of(FiniteWeight::w0)] == -1);
    for (std::size_t k = 0; k < fock.size(); ++k) {
        ExactPoly t = fock[k].substitute(
            [&](WeightLabel a) { return ExactPoly::term(Rational(c[index_of(a.weight)]), Monomial::var(a)); });
        CHECK((t == gamma_quadrics()[k] || t == -gamma_quadrics()[k]));
    }
}

TEST_CASE("each quadric has a single torus weight") {
    for (auto s : all_vector_indices()) {
        std::set<TorusWeight> weights;
        for (auto const& [m, c] : gamma(s).terms()) {
            TorusWeight w;
            for (auto const& [a, e] : m.entries())
                for (int i = 0; i < e; ++i) w = w * torus_weight(a);
            weights.insert(w);
        }
        CHECK(weights.size() == 1);
        CHECK(*weights.begin() == vector_weight(s).inverse());
    }
}

TEST_CASE("quadric coefficients and affine quadrics") {
    for (auto s : all_vector_indices()) {
        CHECK(affine_quadric(s, 0, {0, 0}) == gamma(s));
        // mode 2 is the level shift of mode 0
        ExactPoly shifted = gamma(s).substitute([](WeightLabel a) { return ExactPoly::var(shift(a, 1)); });
        CHECK(affine_quadric(s, 2, {1, 1}) == shifted);
    }
    CHECK(gamma_coeff({1, false}, FiniteWeight::w0, FiniteWeight::w1) == Rational(1, 2));
}

TEST_CASE("Fierz identities match the printed list and vanish") {
    auto printed = printed_fierz();
    REQUIRE(printed.size() == 16);
    for (auto const& h : fierz_identities()) {
        std::set<TermKey> got;
        for (auto const& t : h.terms) {
            CHECK(t.mode == 0);
            got.insert({t.coeff.get_str(), t.var, to_string(t.rel)});
        }
        CHECK_MESSAGE(got == printed[h.label], to_text(h));
        CHECK(substitute_finite(h).zero());
    }
}

TEST_CASE("affine Fierz identities vanish on a window") {
    LevelRange w{0, 1};
    for (int k = 0; k <= 1; ++k)
        for (auto a : all_finite_weights()) CHECK(substitute_affine(affine_fierz(a, k, w), w).zero());
}

TEST_CASE("Weyl generators") {
    auto const& g = weyl_generators();
    for (auto const& s : g) {
        for (auto a : window_elements({-1, 1})) {
            NHatPoint p = psi(a);
            CHECK(psi_inverse(p) == a);
            CHECK(act(s, act(s, p)) == p);
        }
    }
    SignedPermutation bad;
    bad.eps = {1, 0, 0, 0, 0};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    // s6 sends (45)^r to (0)^{r+1}
    CHECK(psi_inverse(act(g[5], psi(label("(45)@0")))) == label("(0)@1"));
    CHECK(psi_inverse(act(g[5], psi(label("(3)@2")))) == label("(12)@3"));
}

TEST_CASE("Weyl graphs are the undirected diagrams") {
    auto const& g = weyl_generators();
    std::vector<SignedPermutation> five(g.begin(), g.begin() + 5), six(g.begin(), g.end());
    auto q5 = weyl_graph(five, window_elements({0, 0}));
    auto u5 = undirected(affine_covers({0, 0}));
    CHECK(std::set<UndirectedEdge>(q5.begin(), q5.end()) == std::set<UndirectedEdge>(u5.begin(), u5.end()));
    auto q6 = weyl_graph(six, window_elements({0, 1}));
    auto u6 = undirected(affine_covers({0, 1}));
    CHECK(std::set<UndirectedEdge>(q6.begin(), q6.end()) == std::set<UndirectedEdge>(u6.begin(), u6.end()));
    auto orbit = weyl_orbit_check(IntervalPoset(label("(0)"), label("(1)")), six);
    CHECK(orbit.ok);
    CHECK(orbit.clutters == 10);
}

TEST_CASE("automorphism u") {
    auto const& t = automorphism_u();
    for (auto const& [from, sign, to] : lemma_u_values()) {
        CHECK(t.image[index_of(from)].sign == sign);
        CHECK(t.image[index_of(from)].label.weight == to);
    }
    for (auto w : all_finite_weights()) {
        auto const& img = t.image[index_of(w)];
        CHECK(img.label.weight == u_permutation(w));
        auto const& back = t.image[index_of(img.label.weight)];
        CHECK(back.label.weight == w);
        CHECK(back.sign * img.sign == 1);
    }
    std::vector<ExactPoly> both(gamma_quadrics().begin(), gamma_quadrics().end());
    for (auto const& q : gamma_quadrics()) {
        CHECK(apply_u(apply_u(q)) == q);
        both.push_back(apply_u(q));
    }
    CHECK(span_rank(both) == 10);
}

TEST_CASE("json emitters") {
    CHECK(quadrics_json().find("\"schema_version\": 1") != std::string::npos);
    CHECK(fierz_json().find("\"schema_version\": 1") != std::string::npos);
    CHECK(u_table_json().find("\"(45)\"") != std::string::npos);
}
