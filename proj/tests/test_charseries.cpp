#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "purespin/charseries.hpp"
#include "support.hpp"

using namespace purespin;
using testsupport::label;

namespace {

SpecializedChar poly(std::vector<int> const& coeffs) {
    SpecializedChar p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k]) p = p + SpecializedChar::simple(coeffs[k], int(k), std::nullopt);
    return p;
}

SpecializedChar over_one_minus_t(SpecializedChar p, int n) {
    for (int i = 0; i < n; ++i) p = p * SpecializedChar::simple(1, 0, Rational(1));
    return p;
}

bool same_series(Series const& a, Series const& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k] == b[k])) return false;
    return true;
}

}  // namespace

TEST_CASE("chain series: dynamic programme against enumeration") {
    for (auto [lo, hi] : {std::pair{"(0)", "(5)"}, std::pair{"(12)", "(34)"}, std::pair{"(45)", "(24)@1"}}) {
        IntervalPoset iv(label(lo), label(hi));
        CHECK(same_series(chain_series_direct(iv, 4), chain_series_bruteforce(iv, 4)));
    }
}

TEST_CASE("closed forms at s=1, q=1") {
    auto at = all_ones();
    auto c15 = character_specialized(IntervalPoset(label("(0)"), label("(15)")), at);
    CHECK(c15.equals(over_one_minus_t(poly({1}), 5)));
    auto c5 = character_specialized(IntervalPoset(label("(0)"), label("(5)")), at);
    CHECK(c5.equals(over_one_minus_t(poly({1, 1}), 7)));
    CHECK(c5.reduced().pole_order_at_one() == 7);
    auto c1 = character_specialized(IntervalPoset(label("(0)"), label("(1)")), at);
    CHECK(c1.equals(over_one_minus_t(poly({1, 5, 5, 1}), 11)));
    CHECK(c1.reduced().numerator_string() == "1+5t+5t^2+t^3");
    CHECK(c1.reduced().denominator_string() == "(1-t)^11");
    auto ser = c1.series(4);
    std::vector<int> want = {1, 16, 126, 672, 2772};
    for (int k = 0; k <= 4; ++k) CHECK(ser[k] == want[k]);
    CHECK(series_csv(ser).rfind("k,coefficient\n0,1\n", 0) == 0);
}

TEST_CASE("transfer matrices as printed equal the derived ones") {
    for (int l = -8; l <= 24; ++l) {
        auto a = transfer_matrix(l), b = derived_transfer_matrix(l);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK_MESSAGE(a.u[i][j].equals(b.u[i][j]), "l=" << l);
    }
}

TEST_CASE("characters agree with chain counting on random intervals") {
    auto els = window_elements({-1, 0});
    std::mt19937 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    int n = 0;
    while (n < 15) {
        WeightLabel a = els[pick(rng)], b = els[pick(rng)];
        if (!leq(a, b)) continue;
        IntervalPoset iv(a, b);
        CHECK_MESSAGE(same_series(character(iv).series(4), chain_series_direct(iv, 4)),
                      to_string(a) << " " << to_string(b));
        ++n;
    }
}

TEST_CASE("the closed product with the normalization row over-counts") {
    IntervalPoset iv(label("(0)"), label("(1)"));
    CHECK_FALSE(same_series(character_as_printed(iv).series(3), chain_series_direct(iv, 3)));
}

TEST_CASE("rational characters: arithmetic is series arithmetic") {
    IntervalPoset a(label("(0)"), label("(5)")), b(label("(13)"), label("(4)"));
    RationalChar x = character(a), y = character(b);
    CHECK(same_series((x + y).series(4), series_add(x.series(4), y.series(4))));
    CHECK(same_series((x * y).series(4), series_mul(x.series(4), y.series(4), 4)));
    CHECK((x - x).is_zero());
    CHECK(x.equals(x * RationalChar::one()));
}

TEST_CASE("lower-bound recursions") {
    CHECK(lower_bound_recursions_check(4, false).ok);
    auto printed = lower_bound_recursions_check(4, true);
    CHECK_FALSE(printed.ok);
    for (auto const& f : printed.failures) CHECK(f.find("l=2") != std::string::npos);
}

TEST_CASE("recursions along the J sequence") {
    auto rep = recursion_check_J(2, 5);
    CHECK(rep.ok);
    for (auto const& f : rep.failures) MESSAGE(f);
}

TEST_CASE("Delannoy polynomials") {
    auto lines = testsupport::golden_lines("delannoy.txt");
    REQUIRE(lines.size() == 12);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        std::istringstream is(lines[n]);
        DelannoyPoly printed;
        for (mpz_class c; is >> c;) printed.push_back(c);
        CHECK(delannoy(int(n)) == printed);
    }
    for (int n = 0; n <= 15; ++n) {
        auto d = delannoy(n);
        CHECK(d.size() == std::size_t(n + 1));
        for (std::size_t k = 0; k < d.size(); ++k) CHECK(d[k] == d[d.size() - 1 - k]);
    }
    CHECK_THROWS_AS(delannoy(-1), std::invalid_argument);
}

TEST_CASE("J sequence and B_r") {
    CHECK(delta_J(0) == label("(15)"));
    CHECK(delta_J(1) == label("(5)"));
    CHECK(delta_J(2) == label("(0)@1"));
    CHECK(delta_J(3) == label("(1)"));
    CHECK(delta_J(4) == label("(15)@1"));
    for (int r = 0; r <= 8; ++r) CHECK(ht(delta_J(r)) == 4 + 2 * r);
    CHECK(delannoy_acceptance(5, 8).ok);
    CHECK(delannoy_generating_function_check(8).ok);
}

TEST_CASE("specialization at other points") {
    IntervalPoset iv(label("(0)"), label("(5)"));
    std::array<Rational, 6> at = {2, Rational(1, 3), 5, 1, Rational(-1, 2), 3};
    SpecSeries via = character_specialized(iv, at).series(4);
    SpecSeries direct = specialize(chain_series_direct(iv, 4), at);
    CHECK(via == direct);
}

TEST_CASE("emitters") {
    IntervalPoset iv(label("(0)"), label("(15)"));
    auto js = series_json(chain_series_direct(iv, 2));
    CHECK(js.find("\"schema_version\": 1") != std::string::npos);
    auto c = character_specialized(iv, all_ones()).reduced();
    CHECK(c.latex() == "\\frac{1}{(1-t)^{5}}");
}
