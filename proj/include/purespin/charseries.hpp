#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "purespin/polyring.hpp"
#include "purespin/spinalg.hpp"
#include "purespin/weightlattice.hpp"

namespace purespin {

// Exponents of s1..s5 and q.
using LaurentMono = std::array<int, 6>;

LaurentMono to_mono(TorusWeight const& w);
LaurentMono mono_of(WeightLabel a);
LaurentMono operator*(LaurentMono a, LaurentMono const& b);
LaurentMono q_power(int n);

class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly constant(Rational c);
    static LaurentPoly mono(LaurentMono m, Rational c = 1);

    std::map<LaurentMono, Rational> const& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(LaurentMono const& m, Rational const& c);

    LaurentPoly& operator+=(LaurentPoly const& o);
    LaurentPoly& operator-=(LaurentPoly const& o);
    friend LaurentPoly operator+(LaurentPoly a, LaurentPoly const& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, LaurentPoly const& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b);
    friend LaurentPoly operator*(LaurentPoly a, Rational const& c);
    friend bool operator==(LaurentPoly const&, LaurentPoly const&) = default;

    // Values for s1..s5 and q, all nonzero.
    Rational evaluate(std::array<Rational, 6> const& at) const;
    std::string str() const;

private:
    std::map<LaurentMono, Rational> terms_;
};

// Truncated power series in t; entry k is the t^k coefficient.
using Series = std::vector<LaurentPoly>;
using SpecSeries = std::vector<Rational>;

Series series_mul(Series const& a, Series const& b, int k_max);
Series series_add(Series const& a, Series const& b);

// numerator(t) / prod (1 - m t), the factors kept unexpanded.
class RationalChar {
public:
    RationalChar() = default;  // zero
    static RationalChar one();
    // c t^k / (1 - d t); nullopt d means no denominator.
    static RationalChar simple(LaurentMono num, int t_pow, std::optional<LaurentMono> den);

    std::vector<LaurentPoly> const& numerator() const { return num_; }
    std::vector<LaurentMono> const& denominator() const { return den_; }
    bool is_zero() const;

    friend RationalChar operator+(RationalChar const& a, RationalChar const& b);
    friend RationalChar operator-(RationalChar const& a, RationalChar const& b);
    friend RationalChar operator*(RationalChar const& a, RationalChar const& b);

    // t -> q^n t
    RationalChar subs_qt(int n) const;
    Series series(int k_max) const;
    // Cross-multiplied numerator identity.
    bool equals(RationalChar const& o) const;

private:
    std::vector<LaurentPoly> num_;  // trimmed, empty for zero
    std::vector<LaurentMono> den_;  // sorted multiset
    void trim();
};

// Univariate specialization with rational constants c in the factors (1 - c t).
class SpecializedChar {
public:
    SpecializedChar() = default;
    static SpecializedChar one();
    static SpecializedChar simple(Rational num, int t_pow, std::optional<Rational> den);

    std::vector<Rational> const& numerator() const { return num_; }
    std::vector<Rational> const& denominator() const { return den_; }

    friend SpecializedChar operator+(SpecializedChar const& a, SpecializedChar const& b);
    friend SpecializedChar operator*(SpecializedChar const& a, SpecializedChar const& b);

    // Cancels every factor (1 - c t) that divides the numerator.
    SpecializedChar reduced() const;
    SpecSeries series(int k_max) const;
    bool equals(SpecializedChar const& o) const;
    // Multiplicity of the factor (1 - t) after reduction.
    int pole_order_at_one() const;

    std::string numerator_string() const;    // "1+5t+5t^2+t^3"
    std::string denominator_string() const;  // "(1-t)^11"
    std::string latex() const;

private:
    std::vector<Rational> num_;
    std::vector<Rational> den_;
    void trim();
};

SpecializedChar specialize(RationalChar const& f, std::array<Rational, 6> const& at);
inline std::array<Rational, 6> all_ones() { return {1, 1, 1, 1, 1, 1}; }

// ---------------------------------------------------------------- chains

// Coefficient of t^k: sum over multichains x1 <= ... <= xk of e_{x1}...e_{xk}.
Series chain_series_direct(IntervalPoset const& iv, int k_max);
// Brute-force enumeration of multichains, for small cases.
Series chain_series_bruteforce(IntervalPoset const& iv, int k_max);
SpecSeries specialize(Series const& s, std::array<Rational, 6> const& at);

// ---------------------------------------------------------------- transfer matrices

template <class T>
using Mat2 = std::array<std::array<T, 2>, 2>;

struct TransferMatrix {
    int l = 0;
    Mat2<RationalChar> u;
};

// U_1..U_8 as printed, U_{l+8}(t) = U_l(qt).
TransferMatrix transfer_matrix(int l);
// Same matrix rebuilt from the covers of the ht table.
TransferMatrix derived_transfer_matrix(int l);

// Throws std::invalid_argument unless lo <= hi.
RationalChar character(IntervalPoset const& iv);
SpecializedChar character_specialized(IntervalPoset const& iv, std::array<Rational, 6> const& at);
// The closed matrix product row * swap^k * U_{ht(lo)} ... U_{ht(hi)} * swap^k * col
// with the normalization row, kept for comparison; it does not reproduce
// chain counts (it applies U_{ht(lo)} once too often).
RationalChar character_as_printed(IntervalPoset const& iv);

// ---------------------------------------------------------------- recursions

// Lower-index identities: (A_x, A_x') at ht l-1 equals (A_y, A_y') at ht l times M_l.
TransferMatrix lower_matrix(int l, bool as_printed);
struct IdentityReport {
    bool ok = true;
    std::vector<std::string> failures;
};
IdentityReport lower_bound_recursions_check(int k_max, bool as_printed = false);

// The four recursions for A^{(5)^r}, A^{(15)^r}, A^{(1)^r}, A^{(0)^r}
// with lower bound (0)^0.
IdentityReport recursion_check_J(int r_max, int k_max);

// ---------------------------------------------------------------- Delannoy

using DelannoyPoly = std::vector<mpz_class>;
DelannoyPoly delannoy(int n);
// J sequence (15),(5),(0)^1,(1),(15)^1,(5)^1,...
WeightLabel delta_J(int r);
IdentityReport delannoy_acceptance(int r_max, int k_max);
// Sum_r B_r s^r against 1/((1-t)((1-t)^4 - (1+t)(1-t)^2 s - t s^2)) up to total degree.
IdentityReport delannoy_generating_function_check(int total_degree);

// ---------------------------------------------------------------- emitters

std::string series_csv(SpecSeries const& s);
std::string series_json(Series const& s);

}  // namespace purespin
