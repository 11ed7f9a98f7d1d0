#include "purespin/charseries.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace purespin {

// ---------------------------------------------------------------- Laurent

LaurentMono to_mono(TorusWeight const& w) {
    return {w.s[0], w.s[1], w.s[2], w.s[3], w.s[4], w.q};
}

LaurentMono mono_of(WeightLabel a) { return to_mono(torus_weight(a)); }

LaurentMono operator*(LaurentMono a, LaurentMono const& b) {
    for (int i = 0; i < 6; ++i) a[i] += b[i];
    return a;
}

LaurentMono q_power(int n) { return {0, 0, 0, 0, 0, n}; }

LaurentPoly LaurentPoly::constant(Rational c) { return mono(LaurentMono{}, std::move(c)); }

LaurentPoly LaurentPoly::mono(LaurentMono m, Rational c) {
    LaurentPoly p;
    p.add(m, c);
    return p;
}

void LaurentPoly::add(LaurentMono const& m, Rational const& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(LaurentPoly const& o) {
    for (auto const& [m, c] : o.terms_) add(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(LaurentPoly const& o) {
    for (auto const& [m, c] : o.terms_) add(m, -c);
    return *this;
}

LaurentPoly operator*(LaurentPoly const& a, LaurentPoly const& b) {
    LaurentPoly out;
    for (auto const& [m1, c1] : a.terms_)
        for (auto const& [m2, c2] : b.terms_) out.add(m1 * m2, c1 * c2);
    return out;
}

LaurentPoly operator*(LaurentPoly a, Rational const& c) {
    if (c == 0) return {};
    for (auto& [m, v] : a.terms_) v *= c;
    return a;
}

namespace {
Rational power(Rational const& x, int e) {
    Rational r = 1;
    Rational b = e >= 0 ? x : Rational(1 / x);
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}
}  // namespace

Rational LaurentPoly::evaluate(std::array<Rational, 6> const& at) const {
    Rational out = 0;
    for (auto const& [m, c] : terms_) {
        Rational v = c;
        for (int i = 0; i < 6; ++i)
            if (m[i] != 0) v *= power(at[i], m[i]);
        out += v;
    }
    return out;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    static char const* names[6] = {"s1", "s2", "s3", "s4", "s5", "q"};
    std::ostringstream os;
    bool first = true;
    for (auto const& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        for (int i = 0; i < 6; ++i)
            if (m[i] != 0) os << "*" << names[i] << "^" << m[i];
    }
    return os.str();
}

Series series_mul(Series const& a, Series const& b, int k_max) {
    Series out(k_max + 1);
    for (std::size_t i = 0; i < a.size() && int(i) <= k_max; ++i)
        for (std::size_t j = 0; j < b.size() && int(i + j) <= k_max; ++j) out[i + j] += a[i] * b[j];
    return out;
}

Series series_add(Series const& a, Series const& b) {
    Series out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

// ---------------------------------------------------------------- RationalChar

namespace {

using TPoly = std::vector<LaurentPoly>;

TPoly tpoly_mul(TPoly const& a, TPoly const& b) {
    if (a.empty() || b.empty()) return {};
    TPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

TPoly tpoly_add(TPoly const& a, TPoly const& b) {
    TPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

// times (1 - m t)
TPoly tpoly_times_factor(TPoly const& a, LaurentMono const& m) {
    if (a.empty()) return a;
    TPoly out(a.size() + 1);
    LaurentPoly mm = LaurentPoly::mono(m, -1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
        out[i + 1] += a[i] * mm;
    }
    return out;
}

void tpoly_trim(TPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

// Multiset difference a \ b, both sorted.
std::vector<LaurentMono> multiset_minus(std::vector<LaurentMono> const& a, std::vector<LaurentMono> const& b) {
    std::vector<LaurentMono> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

RationalChar RationalChar::one() {
    RationalChar r;
    r.num_ = {LaurentPoly::constant(1)};
    return r;
}

RationalChar RationalChar::simple(LaurentMono num, int t_pow, std::optional<LaurentMono> den) {
    RationalChar r;
    r.num_.assign(t_pow + 1, LaurentPoly{});
    r.num_[t_pow] = LaurentPoly::mono(num);
    if (den) r.den_.push_back(*den);
    return r;
}

bool RationalChar::is_zero() const { return num_.empty(); }

void RationalChar::trim() {
    tpoly_trim(num_);
    std::sort(den_.begin(), den_.end());
    if (num_.empty()) den_.clear();
}

RationalChar operator+(RationalChar const& a, RationalChar const& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalChar r;
    std::set_union(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(r.den_));
    TPoly na = a.num_, nb = b.num_;
    for (auto const& m : multiset_minus(r.den_, a.den_)) na = tpoly_times_factor(na, m);
    for (auto const& m : multiset_minus(r.den_, b.den_)) nb = tpoly_times_factor(nb, m);
    r.num_ = tpoly_add(na, nb);
    r.trim();
    return r;
}

RationalChar operator-(RationalChar const& a, RationalChar const& b) {
    RationalChar nb = b;
    for (auto& c : nb.num_) c = c * Rational(-1);
    return a + nb;
}

RationalChar operator*(RationalChar const& a, RationalChar const& b) {
    RationalChar r;
    if (a.is_zero() || b.is_zero()) return r;
    r.num_ = tpoly_mul(a.num_, b.num_);
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    r.trim();
    return r;
}

RationalChar RationalChar::subs_qt(int n) const {
    RationalChar r = *this;
    for (std::size_t k = 0; k < r.num_.size(); ++k) r.num_[k] = r.num_[k] * LaurentPoly::mono(q_power(n * int(k)));
    for (auto& m : r.den_) m = m * q_power(n);
    r.trim();
    return r;
}

Series RationalChar::series(int k_max) const {
    Series s(k_max + 1);
    for (std::size_t k = 0; k < num_.size() && int(k) <= k_max; ++k) s[k] = num_[k];
    for (auto const& m : den_) {
        // multiply by 1/(1 - m t): s_k += m s_{k-1}
        LaurentPoly mm = LaurentPoly::mono(m);
        for (int k = 1; k <= k_max; ++k) s[k] += mm * s[k - 1];
    }
    return s;
}

bool RationalChar::equals(RationalChar const& o) const {
    TPoly lhs = num_, rhs = o.num_;
    for (auto const& m : o.den_) lhs = tpoly_times_factor(lhs, m);
    for (auto const& m : den_) rhs = tpoly_times_factor(rhs, m);
    tpoly_trim(lhs);
    tpoly_trim(rhs);
    return lhs == rhs;
}

// ---------------------------------------------------------------- SpecializedChar

SpecializedChar SpecializedChar::one() {
    SpecializedChar r;
    r.num_ = {Rational(1)};
    return r;
}

SpecializedChar SpecializedChar::simple(Rational num, int t_pow, std::optional<Rational> den) {
    SpecializedChar r;
    r.num_.assign(t_pow + 1, Rational(0));
    r.num_[t_pow] = num;
    if (den) r.den_.push_back(*den);
    r.trim();
    return r;
}

void SpecializedChar::trim() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
    den_.erase(std::remove(den_.begin(), den_.end(), Rational(0)), den_.end());
    std::sort(den_.begin(), den_.end());
    if (num_.empty()) den_.clear();
}

namespace {

std::vector<Rational> upoly_times_factor(std::vector<Rational> const& a, Rational const& c) {
    if (a.empty()) return a;
    std::vector<Rational> out(a.size() + 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
        out[i + 1] -= c * a[i];
    }
    return out;
}

std::vector<Rational> rmultiset_minus(std::vector<Rational> const& a, std::vector<Rational> const& b) {
    std::vector<Rational> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SpecializedChar operator+(SpecializedChar const& a, SpecializedChar const& b) {
    if (a.num_.empty()) return b;
    if (b.num_.empty()) return a;
    SpecializedChar r;
    std::set_union(a.den_.begin(), a.den_.end(), b.den_.begin(), b.den_.end(), std::back_inserter(r.den_));
    auto na = a.num_, nb = b.num_;
    for (auto const& c : rmultiset_minus(r.den_, a.den_)) na = upoly_times_factor(na, c);
    for (auto const& c : rmultiset_minus(r.den_, b.den_)) nb = upoly_times_factor(nb, c);
    r.num_.assign(std::max(na.size(), nb.size()), Rational(0));
    for (std::size_t i = 0; i < na.size(); ++i) r.num_[i] += na[i];
    for (std::size_t i = 0; i < nb.size(); ++i) r.num_[i] += nb[i];
    r.trim();
    return r;
}

SpecializedChar operator*(SpecializedChar const& a, SpecializedChar const& b) {
    SpecializedChar r;
    if (a.num_.empty() || b.num_.empty()) return r;
    r.num_.assign(a.num_.size() + b.num_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.num_.size(); ++i)
        for (std::size_t j = 0; j < b.num_.size(); ++j) r.num_[i + j] += a.num_[i] * b.num_[j];
    r.den_ = a.den_;
    r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
    r.trim();
    return r;
}

SpecializedChar SpecializedChar::reduced() const {
    SpecializedChar r = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t f = 0; f < r.den_.size(); ++f) {
            Rational c = r.den_[f];
            // divide numerator by (1 - c t): q_k = n_k + c q_{k-1}
            if (r.num_.size() < 2) continue;
            std::vector<Rational> q(r.num_.size() - 1);
            q[0] = r.num_[0];
            for (std::size_t k = 1; k < q.size(); ++k) q[k] = r.num_[k] + c * q[k - 1];
            Rational rem = r.num_.back() + c * q.back();
            if (rem != 0) continue;
            r.num_ = std::move(q);
            r.den_.erase(r.den_.begin() + long(f));
            changed = true;
            break;
        }
    }
    r.trim();
    return r;
}

SpecSeries SpecializedChar::series(int k_max) const {
    SpecSeries s(k_max + 1, Rational(0));
    for (std::size_t k = 0; k < num_.size() && int(k) <= k_max; ++k) s[k] = num_[k];
    for (auto const& c : den_)
        for (int k = 1; k <= k_max; ++k) s[k] += c * s[k - 1];
    return s;
}

bool SpecializedChar::equals(SpecializedChar const& o) const {
    auto lhs = num_, rhs = o.num_;
    for (auto const& c : o.den_) lhs = upoly_times_factor(lhs, c);
    for (auto const& c : den_) rhs = upoly_times_factor(rhs, c);
    while (!lhs.empty() && lhs.back() == 0) lhs.pop_back();
    while (!rhs.empty() && rhs.back() == 0) rhs.pop_back();
    return lhs == rhs;
}

int SpecializedChar::pole_order_at_one() const {
    auto r = reduced();
    return static_cast<int>(std::count(r.den_.begin(), r.den_.end(), Rational(1)));
}

namespace {

std::string upoly_string(std::vector<Rational> const& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        Rational c = p[k];
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (neg)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (k == 0 || a != 1) os << a.get_str();
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::vector<std::pair<Rational, int>> grouped(std::vector<Rational> const& den) {
    std::vector<std::pair<Rational, int>> g;
    for (auto const& c : den) {
        if (!g.empty() && g.back().first == c)
            ++g.back().second;
        else
            g.push_back({c, 1});
    }
    return g;
}

std::string factor_string(Rational const& c) {
    if (c == 1) return "(1-t)";
    if (c == -1) return "(1+t)";
    if (c < 0) return "(1+" + Rational(-c).get_str() + "t)";
    return "(1-" + c.get_str() + "t)";
}

}  // namespace

std::string SpecializedChar::numerator_string() const { return upoly_string(num_); }

std::string SpecializedChar::denominator_string() const {
    if (den_.empty()) return "1";
    std::string out;
    for (auto const& [c, e] : grouped(den_)) {
        out += factor_string(c);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string SpecializedChar::latex() const {
    std::string num = upoly_string(num_);
    std::string den;
    for (auto const& [c, e] : grouped(den_)) {
        den += factor_string(c);
        if (e > 1) den += "^{" + std::to_string(e) + "}";
    }
    if (den.empty()) den = "1";
    return "\\frac{" + num + "}{" + den + "}";
}

SpecializedChar specialize(RationalChar const& f, std::array<Rational, 6> const& at) {
    SpecializedChar r;
    std::vector<Rational> num;
    for (auto const& c : f.numerator()) num.push_back(c.evaluate(at));
    std::vector<Rational> den;
    for (auto const& m : f.denominator()) den.push_back(LaurentPoly::mono(m).evaluate(at));
    // Assemble through the public operations to keep the invariants.
    SpecializedChar n;
    for (std::size_t k = 0; k < num.size(); ++k) n = n + SpecializedChar::simple(num[k], int(k), std::nullopt);
    r = n;
    for (auto const& c : den) r = r * SpecializedChar::simple(1, 0, c);
    return r;
}

// ---------------------------------------------------------------- chains

Series chain_series_direct(IntervalPoset const& iv, int k_max) {
    Series out(k_max + 1);
    out[0] = LaurentPoly::constant(1);
    auto const& el = iv.elements();  // sorted by ht: a linear extension
    std::size_t n = el.size();
    std::vector<LaurentPoly> weight(n);
    for (std::size_t i = 0; i < n; ++i) weight[i] = LaurentPoly::mono(mono_of(el[i]));
    // f[i]: weighted multichains of the current length ending at el[i]
    std::vector<LaurentPoly> f(n);
    for (int k = 1; k <= k_max; ++k) {
        std::vector<LaurentPoly> g(n);
        for (std::size_t i = 0; i < n; ++i) {
            LaurentPoly below = k == 1 ? LaurentPoly::constant(1) : LaurentPoly{};
            if (k > 1)
                for (std::size_t j = 0; j <= i; ++j)
                    if (leq(el[j], el[i])) below += f[j];
            g[i] = weight[i] * below;
            out[k] += g[i];
        }
        f = std::move(g);
    }
    return out;
}

Series chain_series_bruteforce(IntervalPoset const& iv, int k_max) {
    Series out(k_max + 1);
    auto const& el = iv.elements();
    std::vector<std::size_t> chain;
    // each call sees a distinct multichain, the empty one included
    std::function<void(int)> rec = [&](int left) {
        LaurentMono m{};
        for (auto i : chain) m = m * mono_of(el[i]);
        out[chain.size()].add(m, 1);
        if (left == 0) return;
        std::size_t start = chain.empty() ? 0 : chain.back();
        for (std::size_t i = start; i < el.size(); ++i) {
            if (!chain.empty() && !leq(el[chain.back()], el[i])) continue;
            chain.push_back(i);
            rec(left - 1);
            chain.pop_back();
        }
    };
    rec(k_max);
    return out;
}

SpecSeries specialize(Series const& s, std::array<Rational, 6> const& at) {
    SpecSeries out;
    for (auto const& c : s) out.push_back(c.evaluate(at));
    return out;
}

// ---------------------------------------------------------------- transfer matrices

namespace {

struct Entry {
    enum Kind { Zero, Plain, Weighted } kind = Zero;
    WeightLabel num{};  // Weighted: e_num t / (1 - e_den t)
    WeightLabel den{};
};

using F = FiniteWeight;
constexpr Entry Z{};
Entry plain(F d, int dl = 0) { return {Entry::Plain, {}, {d, dl}}; }
Entry weighted(F n, int nl, F d, int dl = 0) { return {Entry::Weighted, {n, nl}, {d, dl}}; }

RationalChar to_char(Entry const& e, int shift_levels) {
    switch (e.kind) {
        case Entry::Zero: return {};
        case Entry::Plain: return RationalChar::simple(LaurentMono{}, 0, mono_of(shift(e.den, shift_levels)));
        case Entry::Weighted:
            return RationalChar::simple(mono_of(shift(e.num, shift_levels)), 1, mono_of(shift(e.den, shift_levels)));
    }
    return {};
}

using EntryMat = std::array<std::array<Entry, 2>, 2>;

// Row-major as displayed; rows index the ht l-1 pair, columns the ht l pair.
std::array<EntryMat, 8> const& printed_upper() {
    static std::array<EntryMat, 8> const m = {{
        {{{weighted(F::w0, 0, F::w12), Z}, {plain(F::w12), plain(F::w2, -1)}}},
        {{{plain(F::w13), Z}, {weighted(F::w2, -1, F::w13), plain(F::w1, -1)}}},
        {{{plain(F::w14), plain(F::w23)}, {Z, weighted(F::w1, -1, F::w23)}}},
        {{{plain(F::w15), weighted(F::w14, 0, F::w24)}, {Z, plain(F::w24)}}},
        {{{weighted(F::w15, 0, F::w25), Z}, {plain(F::w25), plain(F::w34)}}},
        {{{plain(F::w35), Z}, {weighted(F::w34, 0, F::w35), plain(F::w5)}}},
        {{{plain(F::w45), plain(F::w4)}, {Z, weighted(F::w5, 0, F::w4)}}},
        {{{plain(F::w0, 1), weighted(F::w45, 0, F::w3)}, {Z, plain(F::w3)}}},
    }};
    return m;
}

// Lower-index system; rows index the ht l pair, columns the ht l-1 pair.
std::array<EntryMat, 8> lower_table(bool as_printed) {
    std::array<EntryMat, 8> m = {{
        {{{plain(F::w0), weighted(F::w12, 0, F::w3, -1)}, {Z, plain(F::w3, -1)}}},
        {{{plain(F::w12), plain(F::w2, -1)}, {Z, weighted(F::w1, -1, F::w2, -1)}}},
        {{{plain(F::w13), Z}, {weighted(F::w23, 0, F::w13), plain(F::w1, -1)}}},
        {{{weighted(F::w15, 0, F::w14), Z}, {plain(F::w14), plain(F::w23)}}},
        {{{plain(F::w15), weighted(F::w25, 0, F::w24)}, {Z, plain(F::w24)}}},
        {{{plain(F::w25), plain(F::w34)}, {Z, weighted(F::w5, 0, F::w34)}}},
        {{{plain(F::w35), Z}, {weighted(F::w4, 0, F::w35), plain(F::w5)}}},
        {{{weighted(F::w0, 1, F::w45), Z}, {plain(F::w45), plain(F::w4)}}},
    }};
    // The displayed l=2 entry carries e_(2) t without the q^{-1} twist.
    if (as_printed) m[1][1][1] = weighted(F::w1, -1, F::w2, 0);
    return m;
}

TransferMatrix from_entries(EntryMat const& e, int l, int shift_levels) {
    TransferMatrix t;
    t.l = l;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) t.u[i][j] = to_char(e[i][j], shift_levels);
    return t;
}

int floor_div8(int l) { return l >= 0 ? l / 8 : -((-l + 7) / 8); }

template <class C>
using Row = std::array<C, 2>;

template <class C>
Row<C> row_times(Row<C> const& r, Mat2<C> const& m) {
    return {r[0] * m[0][0] + r[1] * m[1][0], r[0] * m[0][1] + r[1] * m[1][1]};
}

// Shared by the weighted and the specialized character.
template <class C, class Conv>
C character_impl(IntervalPoset const& iv, Conv conv) {
    WeightLabel lo = iv.lo(), hi = iv.hi();
    int h0 = ht(lo), h1 = ht(hi);
    auto geometric = [&](WeightLabel x) { return conv(RationalChar::simple(LaurentMono{}, 0, mono_of(x))); };
    Row<C> row;
    row[ht_column(lo)] = geometric(lo);
    if (h1 == h0) return row[ht_column(hi)];
    // first step: each element one ht above lo that covers it
    Row<C> next;
    for (int j = 0; j < 2; ++j) {
        WeightLabel x = label_at_ht(h0 + 1, j);
        if (leq(lo, x)) next[j] = row[ht_column(lo)] * geometric(x);
    }
    row = next;
    for (int h = h0 + 2; h <= h1; ++h) {
        TransferMatrix u = transfer_matrix(h);
        Mat2<C> m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m[i][j] = conv(u.u[i][j]);
        row = row_times(row, m);
    }
    return row[ht_column(hi)];
}

}  // namespace

TransferMatrix transfer_matrix(int l) {
    int n = floor_div8(l - 1);
    int base = l - 8 * n;  // 1..8
    return from_entries(printed_upper()[base - 1], l, n);
}

TransferMatrix derived_transfer_matrix(int l) {
    TransferMatrix t;
    t.l = l;
    for (int j = 0; j < 2; ++j) {
        WeightLabel x = label_at_ht(l, j);
        std::vector<int> below;
        for (int i = 0; i < 2; ++i)
            if (leq(label_at_ht(l - 1, i), x)) below.push_back(i);
        auto geo = RationalChar::simple(LaurentMono{}, 0, mono_of(x));
        if (below.size() == 1) {
            t.u[below[0]][j] = geo;
            continue;
        }
        if (below.size() != 2) throw std::logic_error("ht table element without lower cover");
        WeightLabel a0 = label_at_ht(l - 1, 0), a1 = label_at_ht(l - 1, 1);
        WeightLabel m = meet(a0, a1);
        // the tail side has the meet as its only lower cover
        auto single_cover = [&](WeightLabel a) {
            int c = 0;
            for (int i = 0; i < 2; ++i) c += leq(label_at_ht(l - 2, i), a) ? 1 : 0;
            return c == 1 && ht(m) == ht(a) - 1;
        };
        int tail = single_cover(a0) ? 0 : (single_cover(a1) ? 1 : -1);
        if (tail < 0) throw std::logic_error("no tail below a pair in the ht table");
        WeightLabel ta = tail == 0 ? a0 : a1;
        t.u[tail][j] = RationalChar::simple(mono_of(ta), 1, mono_of(x));
        t.u[1 - tail][j] = geo;
    }
    return t;
}

RationalChar character(IntervalPoset const& iv) {
    return character_impl<RationalChar>(iv, [](RationalChar const& c) { return c; });
}

SpecializedChar character_specialized(IntervalPoset const& iv, std::array<Rational, 6> const& at) {
    return character_impl<SpecializedChar>(iv, [&](RationalChar const& c) { return specialize(c, at); });
}

RationalChar character_as_printed(IntervalPoset const& iv) {
    WeightLabel lo = iv.lo(), hi = iv.hi();
    Row<RationalChar> row{RationalChar::simple(LaurentMono{}, 0, mono_of(lo)), RationalChar{}};
    auto swap = [](Row<RationalChar> const& r) { return Row<RationalChar>{r[1], r[0]}; };
    if (ht_column(lo) == 1) row = swap(row);
    for (int h = ht(lo); h <= ht(hi); ++h) row = row_times(row, transfer_matrix(h).u);
    if (ht_column(hi) == 1) row = swap(row);
    return row[0];
}

// ---------------------------------------------------------------- recursions

TransferMatrix lower_matrix(int l, bool as_printed) {
    int n = floor_div8(l - 1);
    int base = l - 8 * n;
    return from_entries(lower_table(as_printed)[base - 1], l, n);
}

namespace {

Series series_of(WeightLabel lo, WeightLabel hi, int k_max) {
    if (!leq(lo, hi)) return Series(k_max + 1);
    return chain_series_direct(IntervalPoset(lo, hi), k_max);
}

bool series_equal(Series a, Series b) {
    std::size_t n = std::max(a.size(), b.size());
    a.resize(n);
    b.resize(n);
    return a == b;
}

RationalChar make_char(std::vector<std::tuple<int, LaurentMono, int>> const& num,
                       std::vector<LaurentMono> const& den) {
    RationalChar n;
    for (auto const& [c, m, k] : num) {
        RationalChar t = RationalChar::simple(m, k, std::nullopt);
        n = c > 0 ? n + t : n - t;
    }
    for (auto const& d : den) n = n * RationalChar::simple(LaurentMono{}, 0, d);
    return n;
}

}  // namespace

IdentityReport lower_bound_recursions_check(int k_max, bool as_printed) {
    IdentityReport rep;
    for (WeightLabel top : {WeightLabel{F::w1, 0}, WeightLabel{F::w1, 1}}) {
        for (int l = 1; l <= 8; ++l) {
            if (ht(top) < l + 1) continue;
            auto m = lower_matrix(l, as_printed);
            Row<Series> upper{series_of(label_at_ht(l, 0), top, k_max), series_of(label_at_ht(l, 1), top, k_max)};
            for (int j = 0; j < 2; ++j) {
                Series rhs(k_max + 1);
                for (int i = 0; i < 2; ++i)
                    rhs = series_add(rhs, series_mul(upper[i], m.u[i][j].series(k_max), k_max));
                Series lhs = series_of(label_at_ht(l - 1, j), top, k_max);
                if (!series_equal(lhs, rhs)) {
                    rep.ok = false;
                    rep.failures.push_back("l=" + std::to_string(l) + " column " + std::to_string(j) +
                                           " below " + to_string(top));
                }
            }
        }
    }
    return rep;
}

IdentityReport recursion_check_J(int r_max, int k_max) {
    IdentityReport rep;
    WeightLabel g{F::w0, 0};
    auto w = [](F f, int lv) { return mono_of({f, lv}); };
    auto check = [&](std::string const& name, int r, WeightLabel target, RationalChar const& p, WeightLabel a,
                     RationalChar const& q, WeightLabel b) {
        Series lhs = series_of(g, target, k_max);
        Series rhs = series_add(series_mul(p.series(k_max), series_of(g, a, k_max), k_max),
                                series_mul(q.series(k_max), series_of(g, b, k_max), k_max));
        if (!series_equal(lhs, rhs)) {
            rep.ok = false;
            rep.failures.push_back(name + " r=" + std::to_string(r));
        }
    };
    for (int r = 1; r <= r_max; ++r) {
        {
            std::vector<LaurentMono> den = {w(F::w24, r), w(F::w34, r), w(F::w5, r), w(F::w23, r)};
            auto p = make_char({{1, {}, 0},
                                {-1, w(F::w15, r), 1},
                                {-1, w(F::w14, r) * w(F::w23, r), 2},
                                {1, w(F::w15, r) * w(F::w14, r) * w(F::w23, r), 3}},
                               den);
            auto q = make_char({{1, w(F::w1, r - 1), 1}}, den);
            check("(5)^r", r, {F::w5, r}, p, {F::w15, r}, q, {F::w1, r - 1});
        }
        {
            std::vector<LaurentMono> den = {w(F::w13, r), w(F::w14, r), w(F::w15, r), w(F::w12, r)};
            auto p = make_char({{1, {}, 0},
                                {-1, w(F::w1, r - 1), 1},
                                {-1, w(F::w2, r - 1) * w(F::w12, r), 2},
                                {1, w(F::w1, r - 1) * w(F::w2, r - 1) * w(F::w12, r), 3}},
                               den);
            auto q = make_char({{1, w(F::w0, r), 1}}, den);
            check("(15)^r", r, {F::w15, r}, p, {F::w1, r - 1}, q, {F::w0, r});
        }
        {
            std::vector<LaurentMono> den = {w(F::w3, r), w(F::w2, r), w(F::w1, r), w(F::w4, r)};
            auto p = make_char({{1, {}, 0},
                                {-1, w(F::w0, r + 1), 1},
                                {-1, w(F::w45, r) * w(F::w4, r), 2},
                                {1, w(F::w0, r + 1) * w(F::w45, r) * w(F::w4, r), 3}},
                               den);
            auto q = make_char({{1, w(F::w5, r), 1}}, den);
            check("(1)^r", r, {F::w1, r}, p, {F::w0, r + 1}, q, {F::w5, r});
        }
        {
            // numerator and denominator of the displayed form divided by q^3
            std::vector<LaurentMono> den = {w(F::w35, r - 1), w(F::w45, r - 1), w(F::w0, r), w(F::w25, r - 1)};
            auto p = make_char({{1, {}, 0},
                                {-1, w(F::w5, r - 1), 1},
                                {-1, w(F::w34, r - 1) * w(F::w25, r - 1), 2},
                                {1, w(F::w34, r - 1) * w(F::w5, r - 1) * w(F::w25, r - 1), 3}},
                               den);
            auto q = make_char({{1, w(F::w15, r - 1), 1}}, den);
            check("(0)^r", r, {F::w0, r}, p, {F::w5, r - 1}, q, {F::w15, r - 1});
        }
    }
    return rep;
}

// ---------------------------------------------------------------- Delannoy

DelannoyPoly delannoy(int n) {
    if (n < 0) throw std::invalid_argument("delannoy: negative index");
    DelannoyPoly prev2 = {1}, prev = {1, 1};
    if (n == 0) return prev2;
    for (int k = 2; k <= n; ++k) {
        DelannoyPoly cur(k + 1, 0);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            cur[i] += prev[i];
            cur[i + 1] += prev[i];
        }
        for (std::size_t i = 0; i < prev2.size(); ++i) cur[i + 1] += prev2[i];
        prev2 = std::move(prev);
        prev = std::move(cur);
    }
    return prev;
}

WeightLabel delta_J(int r) {
    static std::array<F, 4> const base = {F::w15, F::w5, F::w0, F::w1};
    static std::array<int, 4> const level = {0, 0, 1, 0};
    int n = r >= 0 ? r / 4 : -((-r + 3) / 4);
    int j = r - 4 * n;
    return {base[j], level[j] + n};
}

namespace {

SpecializedChar delannoy_char(int r) {
    auto d = delannoy(r);
    SpecializedChar c;
    for (std::size_t k = 0; k < d.size(); ++k) c = c + SpecializedChar::simple(Rational(d[k]), int(k), std::nullopt);
    for (int i = 0; i < 5 + 2 * r; ++i) c = c * SpecializedChar::simple(1, 0, Rational(1));
    return c;
}

}  // namespace

IdentityReport delannoy_acceptance(int r_max, int k_max) {
    IdentityReport rep;
    WeightLabel lo{F::w0, 0};
    for (int r = 0; r <= r_max; ++r) {
        WeightLabel hi = delta_J(r);
        if (ht(hi) != 4 + 2 * r) {
            rep.ok = false;
            rep.failures.push_back("delta_" + std::to_string(r) + " has wrong ht");
        }
        auto c = character_specialized(IntervalPoset(lo, hi), all_ones());
        auto d = delannoy_char(r);
        if (c.series(k_max) != d.series(k_max)) {
            rep.ok = false;
            rep.failures.push_back("series mismatch at r=" + std::to_string(r));
        }
        if (!c.equals(d)) {
            rep.ok = false;
            rep.failures.push_back("rational function mismatch at r=" + std::to_string(r));
        }
    }
    return rep;
}

IdentityReport delannoy_generating_function_check(int total_degree) {
    IdentityReport rep;
    int D = total_degree;
    // G(s,t) = (1-t)((1-t)^4 - (1+t)(1-t)^2 s - t s^2), as coeff[s][t]
    std::vector<std::vector<Rational>> G(3, std::vector<Rational>(7, Rational(0)));
    auto binom_poly = [](std::vector<Rational> const& a, std::vector<Rational> const& b) {
        std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<Rational> omt = {1, -1};
    auto omt2 = binom_poly(omt, omt);
    auto omt4 = binom_poly(omt2, omt2);
    auto s1 = binom_poly(std::vector<Rational>{1, 1}, omt2);
    std::vector<Rational> s2 = {0, 1};
    auto put = [&](int si, std::vector<Rational> const& p, int sign) {
        auto q = binom_poly(omt, p);
        for (std::size_t k = 0; k < q.size(); ++k) G[si][k] += sign * q[k];
    };
    put(0, omt4, 1);
    put(1, s1, -1);
    put(2, s2, -1);
    // F = 1/G as a bivariate series: F[a][b] for a+b <= D
    std::vector<std::vector<Rational>> Fs(D + 1, std::vector<Rational>(D + 1, Rational(0)));
    for (int tot = 0; tot <= D; ++tot)
        for (int a = 0; a <= tot; ++a) {
            int b = tot - a;
            Rational acc = (a == 0 && b == 0) ? Rational(1) : Rational(0);
            for (int i = 0; i <= std::min(a, 2); ++i)
                for (int j = 0; j <= std::min(b, 6); ++j) {
                    if (i == 0 && j == 0) continue;
                    acc -= G[i][j] * Fs[a - i][b - j];
                }
            Fs[a][b] = acc / G[0][0];
        }
    WeightLabel lo{F::w0, 0};
    for (int r = 0; r <= D; ++r) {
        auto series = character_specialized(IntervalPoset(lo, delta_J(r)), all_ones()).series(D - r);
        for (int k = 0; k <= D - r; ++k)
            if (series[k] != Fs[r][k]) {
                rep.ok = false;
                rep.failures.push_back("coefficient s^" + std::to_string(r) + " t^" + std::to_string(k));
            }
    }
    return rep;
}

// ---------------------------------------------------------------- emitters

std::string series_csv(SpecSeries const& s) {
    std::ostringstream os;
    os << "k,coefficient\n";
    for (std::size_t k = 0; k < s.size(); ++k) os << k << "," << s[k].get_str() << "\n";
    return os.str();
}

std::string series_json(Series const& s) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < s.size(); ++k) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (auto const& [m, c] : s[k].terms())
            terms.push_back({{"s", std::vector<int>(m.begin(), m.begin() + 5)}, {"q", m[5]}, {"coeff", c.get_str()}});
        j["coefficients"].push_back({{"k", k}, {"terms", terms}});
    }
    return j.dump(2) + "\n";
}

}  // namespace purespin
