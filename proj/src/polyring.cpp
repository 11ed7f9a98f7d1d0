#include "purespin/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace purespin {

namespace {

int block_position(FiniteWeight w, int* block_shift) {
    using F = FiniteWeight;
    *block_shift = 0;
    switch (w) {
        case F::w0: return 0;
        case F::w3: *block_shift = 1; return 1;
        case F::w12: return 2;
        case F::w2: *block_shift = 1; return 3;
        case F::w13: return 4;
        case F::w1: *block_shift = 1; return 5;
        case F::w14: return 6;
        case F::w23: return 7;
        case F::w15: return 8;
        case F::w24: return 9;
        case F::w25: return 10;
        case F::w34: return 11;
        case F::w35: return 12;
        case F::w5: return 13;
        case F::w45: return 14;
        case F::w4: return 15;
    }
    return -1;
}

}  // namespace

long long order_rank(WeightLabel a) {
    int bs = 0;
    int pos = block_position(a.weight, &bs);
    return 16LL * (a.level + bs) + pos;
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(WeightLabel a, int e) {
    Monomial m;
    if (e > 0) {
        m.entries_.push_back({a, e});
        m.degree_ = e;
    }
    return m;
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](Entry const& x, Entry const& y) { return var_less(x.first, y.first); });
    Monomial m;
    for (auto const& [a, e] : entries) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == a)
            m.entries_.back().second += e;
        else
            m.entries_.push_back({a, e});
        m.degree_ += e;
    }
    return m;
}

int Monomial::exponent(WeightLabel a) const {
    for (auto const& [b, e] : entries_)
        if (b == a) return e;
    return 0;
}

bool Monomial::divides(Monomial const& other) const {
    if (degree_ > other.degree_) return false;
    auto it = other.entries_.begin();
    for (auto const& [a, e] : entries_) {
        long long ra = order_rank(a);
        while (it != other.entries_.end() && order_rank(it->first) < ra) ++it;
        if (it == other.entries_.end() || it->first != a || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::quotient(Monomial const& divisor) const {
    if (!divisor.divides(*this)) throw std::invalid_argument("monomial quotient is not exact");
    std::vector<Entry> out = entries_;
    for (auto const& [a, e] : divisor.entries_)
        for (auto& en : out)
            if (en.first == a) en.second -= e;
    return from_entries(std::move(out));
}

Monomial Monomial::lcm(Monomial const& other) const {
    std::vector<Entry> out = entries_;
    for (auto const& [a, e] : other.entries_) {
        bool found = false;
        for (auto& en : out)
            if (en.first == a) {
                en.second = std::max(en.second, e);
                found = true;
            }
        if (!found) out.push_back({a, e});
    }
    return from_entries(std::move(out));
}

bool Monomial::coprime(Monomial const& other) const {
    for (auto const& [a, e] : entries_)
        if (other.exponent(a) > 0) return false;
    return true;
}

Monomial operator*(Monomial const& a, Monomial const& b) {
    std::vector<Monomial::Entry> all = a.entries_;
    all.insert(all.end(), b.entries_.begin(), b.entries_.end());
    return Monomial::from_entries(std::move(all));
}

int cmp_monomials(Monomial const& a, Monomial const& b, MonomialOrder ord) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto const& x = a.entries();
    auto const& y = b.entries();
    if (ord == MonomialOrder::Grevlex) {
        // smallest variable first; the smaller exponent there is the larger monomial
        std::size_t i = 0, j = 0;
        while (i < x.size() || j < y.size()) {
            long long rx = i < x.size() ? order_rank(x[i].first) : (1LL << 62);
            long long ry = j < y.size() ? order_rank(y[j].first) : (1LL << 62);
            int ex = 0, ey = 0;
            if (rx <= ry) ex = x[i].second;
            if (ry <= rx) ey = y[j].second;
            if (ex != ey) return ex < ey ? 1 : -1;
            if (rx <= ry) ++i;
            if (ry <= rx) ++j;
        }
        return 0;
    }
    // largest variable first; the larger exponent there is the larger monomial
    long long i = static_cast<long long>(x.size()) - 1, j = static_cast<long long>(y.size()) - 1;
    while (i >= 0 || j >= 0) {
        long long rx = i >= 0 ? order_rank(x[i].first) : -(1LL << 62);
        long long ry = j >= 0 ? order_rank(y[j].first) : -(1LL << 62);
        int ex = 0, ey = 0;
        if (rx >= ry) ex = x[i].second;
        if (ry >= rx) ey = y[j].second;
        if (ex != ey) return ex < ey ? -1 : 1;
        if (rx >= ry) --i;
        if (ry >= rx) --j;
    }
    return 0;
}

// ---------------------------------------------------------------- ExactPoly

ExactPoly ExactPoly::constant(Rational c) { return term(std::move(c), Monomial{}); }

ExactPoly ExactPoly::var(WeightLabel a) { return term(Rational(1), Monomial::var(a)); }

ExactPoly ExactPoly::term(Rational c, Monomial m) {
    ExactPoly p;
    p.add_term(m, c);
    return p;
}

Rational ExactPoly::coeff(Monomial const& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ExactPoly::degree() const {
    int d = -1;
    for (auto const& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool ExactPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](auto const& t) { return t.first.degree() == d; });
}

std::vector<WeightLabel> ExactPoly::variables() const {
    std::vector<WeightLabel> out;
    for (auto const& [m, c] : terms_)
        for (auto const& [a, e] : m.entries())
            if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    std::sort(out.begin(), out.end(), var_less);
    return out;
}

void ExactPoly::add_term(Monomial const& m, Rational const& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ExactPoly& ExactPoly::operator+=(ExactPoly const& o) {
    for (auto const& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ExactPoly& ExactPoly::operator-=(ExactPoly const& o) {
    for (auto const& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ExactPoly& ExactPoly::operator*=(Rational const& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ExactPoly operator*(ExactPoly const& a, ExactPoly const& b) {
    ExactPoly out;
    for (auto const& [m1, c1] : a.terms_)
        for (auto const& [m2, c2] : b.terms_) out.add_term(m1 * m2, c1 * c2);
    return out;
}

ExactPoly operator*(ExactPoly const& a, Monomial const& m) {
    ExactPoly out;
    for (auto const& [m1, c1] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), m1 * m, c1);
    return out;
}

// ---------------------------------------------------------------- Gröbner

Term tip(ExactPoly const& f, MonomialOrder ord) {
    if (f.is_zero()) throw std::invalid_argument("tip of the zero polynomial");
    if (ord == MonomialOrder::Grevlex) {
        auto it = f.terms().rbegin();
        return {it->first, it->second};
    }
    auto best = f.terms().begin();
    for (auto it = f.terms().begin(); it != f.terms().end(); ++it)
        if (cmp_monomials(it->first, best->first, ord) > 0) best = it;
    return {best->first, best->second};
}

ExactPoly normalize_tip(ExactPoly const& f, MonomialOrder ord) {
    Rational lc = tip(f, ord).coeff;
    return f * Rational(1 / lc);
}

ExactPoly s_polynomial(ExactPoly const& f, ExactPoly const& g, MonomialOrder ord) {
    Term tf = tip(f, ord), tg = tip(g, ord);
    Monomial l = tf.monomial.lcm(tg.monomial);
    return (g * l.quotient(tg.monomial)) * tf.coeff - (f * l.quotient(tf.monomial)) * tg.coeff;
}

ExactPoly reduce(ExactPoly const& f, std::vector<ExactPoly> const& G, MonomialOrder ord,
                 std::vector<ReductionStep>* trace) {
    std::vector<Term> tips;
    tips.reserve(G.size());
    for (auto const& g : G) tips.push_back(tip(g, ord));

    ExactPoly p = f;
    if (ord == MonomialOrder::Grevlex) {
        // Walk downwards; terms above the cursor are already irreducible.
        auto const& t = p.terms();
        std::optional<Monomial> cursor;
        while (true) {
            auto it = cursor ? t.lower_bound(*cursor) : t.end();
            bool done = true;
            while (it != t.begin()) {
                --it;
                Monomial m = it->first;
                Rational c = it->second;
                std::size_t hit = G.size();
                for (std::size_t i = 0; i < G.size(); ++i)
                    if (tips[i].monomial.divides(m)) {
                        hit = i;
                        break;
                    }
                if (hit == G.size()) continue;
                Rational k = c / tips[hit].coeff;
                Monomial q = m.quotient(tips[hit].monomial);
                p -= (G[hit] * q) * k;
                if (trace) trace->push_back({k, q, hit});
                cursor = m;
                done = false;
                break;
            }
            if (done) break;
        }
        return p;
    }
    // generic order: restart from the largest divisible term each time
    while (true) {
        std::optional<Term> best;
        std::size_t hit = 0;
        for (auto const& [m, c] : p.terms())
            for (std::size_t i = 0; i < G.size(); ++i)
                if (tips[i].monomial.divides(m)) {
                    if (!best || cmp_monomials(m, best->monomial, ord) > 0) {
                        best = Term{m, c};
                        hit = i;
                    }
                    break;
                }
        if (!best) break;
        Rational k = best->coeff / tips[hit].coeff;
        Monomial q = best->monomial.quotient(tips[hit].monomial);
        p -= (G[hit] * q) * k;
        if (trace) trace->push_back({k, q, hit});
    }
    return p;
}

BuchbergerReport buchberger_check(std::vector<ExactPoly> const& G, MonomialOrder ord) {
    BuchbergerReport rep;
    std::vector<ExactPoly> N;
    for (auto const& g : G) N.push_back(normalize_tip(g, ord));
    for (std::size_t i = 0; i < N.size(); ++i)
        for (std::size_t j = i + 1; j < N.size(); ++j) {
            ++rep.pairs_total;
            if (tip(N[i], ord).monomial.coprime(tip(N[j], ord).monomial)) {
                ++rep.pairs_coprime;
                continue;
            }
            ++rep.pairs_reduced;
            if (!reduce(s_polynomial(N[i], N[j], ord), N, ord).is_zero()) {
                rep.ok = false;
                rep.failing.push_back({i, j});
            }
        }
    return rep;
}

// ---------------------------------------------------------------- rank oracle

std::vector<Monomial> monomials_of_degree(std::vector<WeightLabel> const& vars, int k) {
    std::vector<Monomial> out;
    if (k < 0) return out;
    std::vector<Monomial::Entry> cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
        if (left == 0) {
            out.push_back(Monomial::from_entries(cur));
            return;
        }
        for (std::size_t i = start; i < vars.size(); ++i) {
            cur.push_back({vars[i], 1});
            self(self, i, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

namespace {

using SparseRow = std::vector<std::pair<int, mpz_class>>;

void remove_content(SparseRow& row) {
    mpz_class g = 0;
    for (auto const& [c, v] : row) g = gcd(g, v);
    if (g > 1)
        for (auto& [c, v] : row) v /= g;
    if (!row.empty() && row.front().second < 0)
        for (auto& [c, v] : row) v = -v;
}

// row <- piv_lead*row - row_lead*pivot, both sorted by column.
SparseRow eliminate(SparseRow const& row, SparseRow const& pivot) {
    mpz_class a = pivot.front().second;
    mpz_class b = row.front().second;
    SparseRow out;
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
            out.push_back({row[i].first, a * row[i].second});
            ++i;
        } else if (i == row.size() || pivot[j].first < row[i].first) {
            out.push_back({pivot[j].first, -b * pivot[j].second});
            ++j;
        } else {
            mpz_class v = a * row[i].second - b * pivot[j].second;
            if (v != 0) out.push_back({row[i].first, v});
            ++i;
            ++j;
        }
    }
    remove_content(out);
    return out;
}

// Fraction-free row reduction; returns the rank.
long long sparse_rank(std::vector<SparseRow> rows) {
    std::map<int, SparseRow> pivots;
    for (auto& row : rows) {
        remove_content(row);
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                pivots.emplace(row.front().first, std::move(row));
                break;
            }
            row = eliminate(row, it->second);
        }
    }
    return static_cast<long long>(pivots.size());
}

SparseRow to_integer_row(ExactPoly const& f, std::map<Monomial, int, GrevlexLess> const& index) {
    mpz_class den = 1;
    for (auto const& [m, c] : f.terms()) den = lcm(den, mpz_class(c.get_den()));
    SparseRow row;
    for (auto const& [m, c] : f.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("relation uses a variable outside the given set: " +
                                        to_text(m));
        Rational scaled = c * den;
        row.push_back({it->second, scaled.get_num()});
    }
    std::sort(row.begin(), row.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
    return row;
}

}  // namespace

long long graded_quotient_dim(std::vector<ExactPoly> const& G, std::vector<WeightLabel> const& vars,
                              int k) {
    if (k < 0) return 0;
    auto basis = monomials_of_degree(vars, k);
    std::map<Monomial, int, GrevlexLess> index;
    // columns numbered from the largest monomial down
    std::vector<Monomial> sorted = basis;
    std::sort(sorted.begin(), sorted.end(), GrevlexLess{});
    for (std::size_t i = 0; i < sorted.size(); ++i)
        index.emplace(sorted[i], static_cast<int>(sorted.size() - 1 - i));

    std::vector<SparseRow> rows;
    for (auto const& g : G) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("graded_quotient_dim: inhomogeneous relation");
        int d = g.degree();
        if (d > k) continue;
        for (auto const& m : monomials_of_degree(vars, k - d)) rows.push_back(to_integer_row(g * m, index));
    }
    return static_cast<long long>(basis.size()) - sparse_rank(std::move(rows));
}

long long span_rank(std::vector<ExactPoly> const& polys) {
    std::map<Monomial, int, GrevlexLess> index;
    for (auto const& f : polys)
        for (auto const& [m, c] : f.terms()) index.emplace(m, 0);
    int n = 0;
    for (auto it = index.rbegin(); it != index.rend(); ++it) it->second = n++;
    std::vector<SparseRow> rows;
    for (auto const& f : polys)
        if (!f.is_zero()) rows.push_back(to_integer_row(f, index));
    return sparse_rank(std::move(rows));
}

// ---------------------------------------------------------------- text format

std::string to_text(Monomial const& m) {
    std::ostringstream os;
    bool first = true;
    for (auto const& [a, e] : m.entries()) {
        if (!first) os << " * ";
        first = false;
        os << "l{" << tag(a.weight) << "^" << a.level << "}^" << e;
    }
    return os.str();
}

std::string to_text(ExactPoly const& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        if (!it->first.is_one()) os << " * " << to_text(it->first);
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    ExactPoly parse() {
        ExactPoly out;
        skip();
        if (at_end()) fail("empty input");
        bool negate = false;
        if (peek() == '-') {
            negate = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            Term t = term();
            out.add_term(t.monomial, negate ? Rational(-t.coeff) : t.coeff);
            skip();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            negate = (c == '-');
            ++pos_;
        }
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::string const& what) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char c) {
        skip();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    int integer() {
        skip();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }
    Rational coefficient() {
        skip();
        std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        std::string txt(s_.substr(start, pos_ - start));
        if (!txt.empty() && txt.front() == '+') txt.erase(0, 1);
        try {
            Rational r(txt);
            r.canonicalize();
            return r;
        } catch (std::exception const&) {
            fail("bad coefficient '" + txt + "'");
        }
    }
    Monomial::Entry factor() {
        skip();
        if (peek() != 'l') fail("expected 'l{'");
        ++pos_;
        expect('{');
        skip();
        std::size_t start = pos_;
        while (!at_end() && peek() != ')') ++pos_;
        if (at_end()) fail("unterminated weight tag");
        ++pos_;
        auto w = parse_finite_weight(s_.substr(start, pos_ - start));
        if (!w) fail("unknown weight tag");
        int level = 0;
        skip();
        if (peek() == '^') {
            ++pos_;
            level = integer();
        }
        expect('}');
        int e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            e = integer();
            if (e <= 0) fail("exponent must be positive");
        }
        return {WeightLabel{*w, level}, e};
    }
    Term term() {
        skip();
        Rational c(1);
        std::vector<Monomial::Entry> entries;
        if (peek() == 'l') {
            entries.push_back(factor());
        } else {
            c = coefficient();
        }
        while (true) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            entries.push_back(factor());
        }
        return {Monomial::from_entries(std::move(entries)), c};
    }
};

}  // namespace

ExactPoly parse_poly(std::string_view s) {
    std::string_view t = s;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t == "0") return {};
    return PolyParser(t).parse();
}

}  // namespace purespin
