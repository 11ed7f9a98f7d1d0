#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "purespin/weightlattice.hpp"

namespace purespin {

using Rational = mpq_class;

// Position of a generator in the total order on Ê. Restricted to one level it
// is (0)<(12)<(13)<(14)<(23)<(15)<(24)<(25)<(34)<(35)<(5)<(45)<(4)<(3)<(2)<(1);
// across levels (3)^{r-1},(2)^{r-1},(1)^{r-1} interleave with (0)^r,(12)^r,(13)^r.
long long order_rank(WeightLabel a);
inline bool var_less(WeightLabel a, WeightLabel b) { return order_rank(a) < order_rank(b); }

class Monomial {
public:
    using Entry = std::pair<WeightLabel, int>;

    Monomial() = default;
    static Monomial var(WeightLabel a, int e = 1);
    static Monomial from_entries(std::vector<Entry> entries);

    // Sorted by order_rank ascending, exponents positive.
    std::vector<Entry> const& entries() const { return entries_; }
    int degree() const { return degree_; }
    int exponent(WeightLabel a) const;
    bool is_one() const { return entries_.empty(); }

    bool divides(Monomial const& other) const;
    // Requires divides(*this, other) reversed: other | *this.
    Monomial quotient(Monomial const& divisor) const;
    Monomial lcm(Monomial const& other) const;
    bool coprime(Monomial const& other) const;

    friend Monomial operator*(Monomial const& a, Monomial const& b);
    friend bool operator==(Monomial const& a, Monomial const& b) { return a.entries_ == b.entries_; }

private:
    std::vector<Entry> entries_;
    int degree_ = 0;
};

// The tie-break of the degree-lexicographic order is not fixed by the source.
// Grevlex (smallest variable first, smaller exponent wins) puts every quadric
// tip on its clutter; Deglex (largest variable first, larger exponent wins)
// is kept for comparison.
enum class MonomialOrder { Grevlex, Deglex };

// <0, 0, >0
int cmp_monomials(Monomial const& a, Monomial const& b, MonomialOrder ord = MonomialOrder::Grevlex);

struct GrevlexLess {
    bool operator()(Monomial const& a, Monomial const& b) const { return cmp_monomials(a, b) < 0; }
};

class ExactPoly {
public:
    using Terms = std::map<Monomial, Rational, GrevlexLess>;

    ExactPoly() = default;
    static ExactPoly constant(Rational c);
    static ExactPoly var(WeightLabel a);
    static ExactPoly term(Rational c, Monomial m);

    Terms const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(Monomial const& m) const;
    // -1 for the zero polynomial; max degree otherwise.
    int degree() const;
    bool is_homogeneous() const;
    std::vector<WeightLabel> variables() const;

    void add_term(Monomial const& m, Rational const& c);

    ExactPoly& operator+=(ExactPoly const& o);
    ExactPoly& operator-=(ExactPoly const& o);
    ExactPoly& operator*=(Rational const& c);
    friend ExactPoly operator+(ExactPoly a, ExactPoly const& b) { return a += b; }
    friend ExactPoly operator-(ExactPoly a, ExactPoly const& b) { return a -= b; }
    friend ExactPoly operator-(ExactPoly a) { return a *= Rational(-1); }
    friend ExactPoly operator*(ExactPoly a, Rational const& c) { return a *= c; }
    friend ExactPoly operator*(Rational const& c, ExactPoly a) { return a *= c; }
    friend ExactPoly operator*(ExactPoly const& a, ExactPoly const& b);
    friend ExactPoly operator*(ExactPoly const& a, Monomial const& m);
    friend bool operator==(ExactPoly const& a, ExactPoly const& b) { return a.terms_ == b.terms_; }

    // Replace every variable a by image(a) (a polynomial).
    template <class Fn>
    ExactPoly substitute(Fn&& image) const;

private:
    Terms terms_;
};

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Throws std::invalid_argument on the zero polynomial.
Term tip(ExactPoly const& f, MonomialOrder ord = MonomialOrder::Grevlex);
ExactPoly normalize_tip(ExactPoly const& f, MonomialOrder ord = MonomialOrder::Grevlex);
ExactPoly s_polynomial(ExactPoly const& f, ExactPoly const& g,
                       MonomialOrder ord = MonomialOrder::Grevlex);

struct ReductionStep {
    Rational coeff;
    Monomial multiplier;
    std::size_t relation = 0;
};

// Normal form modulo G; the largest divisible monomial is rewritten first.
// If trace is given it receives the steps with f - result = sum coeff*multiplier*G[relation].
ExactPoly reduce(ExactPoly const& f, std::vector<ExactPoly> const& G,
                 MonomialOrder ord = MonomialOrder::Grevlex,
                 std::vector<ReductionStep>* trace = nullptr);

struct BuchbergerReport {
    bool ok = true;
    std::size_t pairs_total = 0;
    std::size_t pairs_coprime = 0;
    std::size_t pairs_reduced = 0;
    std::vector<std::pair<std::size_t, std::size_t>> failing;
};

BuchbergerReport buchberger_check(std::vector<ExactPoly> const& G,
                                  MonomialOrder ord = MonomialOrder::Grevlex);

// All degree-k monomials in vars (vars kept in the given order).
std::vector<Monomial> monomials_of_degree(std::vector<WeightLabel> const& vars, int k);

// dim of the degree-k part of Q[vars]/(G). G must be homogeneous and
// supported on vars; generators of degree < k are multiplied up.
long long graded_quotient_dim(std::vector<ExactPoly> const& G, std::vector<WeightLabel> const& vars,
                              int k);

// Rank over Q of the span of the given polynomials.
long long span_rank(std::vector<ExactPoly> const& polys);

// Text format: terms "c * l{(ij)^r}^e * ..." joined by " + ", zero is "0".
std::string to_text(ExactPoly const& f);
std::string to_text(Monomial const& m);
// Throws std::invalid_argument with a position on malformed input.
ExactPoly parse_poly(std::string_view s);

template <class Fn>
ExactPoly ExactPoly::substitute(Fn&& image) const {
    ExactPoly out;
    for (auto const& [m, c] : terms_) {
        ExactPoly prod = constant(c);
        for (auto const& [a, e] : m.entries()) {
            ExactPoly v = image(a);
            for (int i = 0; i < e; ++i) prod = prod * v;
        }
        out += prod;
    }
    return out;
}

}  // namespace purespin
