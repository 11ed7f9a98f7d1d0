#include "purespin/spinalg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace purespin {

// ---------------------------------------------------------------- Fock space

FockElement FockElement::basis(std::uint8_t subset, Rational c) {
    FockElement x;
    x.add(subset, c);
    return x;
}

FockElement FockElement::theta(FiniteWeight w) { return basis(subset_mask(w)); }

Rational FockElement::coeff(std::uint8_t subset) const {
    auto it = coords_.find(subset);
    return it == coords_.end() ? Rational(0) : it->second;
}

void FockElement::add(std::uint8_t subset, Rational const& c) {
    if (c == 0) return;
    auto [it, inserted] = coords_.try_emplace(subset, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coords_.erase(it);
    }
}

FockElement& FockElement::operator+=(FockElement const& o) {
    for (auto const& [s, c] : o.coords_) add(s, c);
    return *this;
}

FockElement operator*(Rational const& c, FockElement a) {
    if (c == 0) return {};
    for (auto& [s, v] : a.coords_) v *= c;
    return a;
}

FockElement clifford_apply(CliffordGen gen, FockElement const& x) {
    if (gen.i < 1 || gen.i > 5) throw std::invalid_argument("clifford generator index out of range");
    std::uint8_t bit = std::uint8_t(1u << (gen.i - 1));
    FockElement out;
    for (auto const& [s, c] : x.coords()) {
        bool present = (s & bit) != 0;
        if (present != gen.dual) continue;  // wedge needs absent, contraction needs present
        int before = __builtin_popcount(static_cast<unsigned>(s & (bit - 1)));
        Rational v = (before % 2) ? Rational(-c) : c;
        out.add(std::uint8_t(s ^ bit), v);
    }
    return out;
}

// ---------------------------------------------------------------- root operators

std::array<RootOp, 6> const& root_ops() {
    static std::array<RootOp, 6> const ops = {{
        {1, "v2 v1*", {{2, false}, {1, true}}, 0},
        {2, "v1 v2", {{1, false}, {2, false}}, 0},
        {3, "v3 v2*", {{3, false}, {2, true}}, 0},
        {4, "v4 v3*", {{4, false}, {3, true}}, 0},
        {5, "v5 v4*", {{5, false}, {4, true}}, 0},
        {6, "v4* v5* z", {{4, true}, {5, true}}, 1},
    }};
    return ops;
}

std::optional<SignedLabel> apply_root(RootOp const& op, WeightLabel a) {
    FockElement x = FockElement::theta(a.weight);
    for (auto it = op.word.rbegin(); it != op.word.rend(); ++it) x = clifford_apply(*it, x);
    if (x.is_zero()) return std::nullopt;
    if (x.coords().size() != 1) throw std::logic_error("root operator image is not a weight vector");
    auto [subset, c] = *x.coords().begin();
    auto w = from_subset_mask(subset);
    if (!w || (c != 1 && c != -1)) throw std::logic_error("root operator left the spinor basis");
    return SignedLabel{c > 0 ? 1 : -1, {*w, a.level + op.z_shift}};
}

std::vector<Cover> root_operator_graph(LevelRange window) {
    std::vector<Cover> out;
    if (window.empty()) return out;
    for (auto x : window_elements(window))
        for (auto const& op : root_ops()) {
            auto img = apply_root(op, x);
            if (img && window.contains(img->label.level)) out.push_back({x, img->label});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cover> generate_hasse(LevelRange window) {
    auto got = root_operator_graph(window);
    if (window.empty()) return got;
    auto want = affine_covers(window);
    std::sort(want.begin(), want.end());
    if (got != want) throw std::logic_error("root operator graph differs from the reference diagram");
    return got;
}

// ---------------------------------------------------------------- quadrics

std::string to_string(VectorIndex s) { return std::to_string(s.i) + (s.star ? "*" : ""); }

std::optional<VectorIndex> parse_vector_index(std::string_view s) {
    if (s.empty() || s[0] < '1' || s[0] > '5') return std::nullopt;
    if (s.size() == 1) return VectorIndex{s[0] - '0', false};
    if (s.size() == 2 && s[1] == '*') return VectorIndex{s[0] - '0', true};
    return std::nullopt;
}

std::array<VectorIndex, 10> const& all_vector_indices() {
    static std::array<VectorIndex, 10> const all = {{{1, false}, {2, false}, {3, false}, {4, false},
                                                     {5, false}, {1, true}, {2, true}, {3, true},
                                                     {4, true}, {5, true}}};
    return all;
}

int position(VectorIndex s) { return (s.star ? 5 : 0) + s.i - 1; }

WeightLabel lam() { return {FiniteWeight::w0, 0}; }

WeightLabel w_var(int i, int j) {
    if (i > j) std::swap(i, j);
    auto w = parse_finite_weight("(" + std::to_string(i) + std::to_string(j) + ")");
    if (!w || i == j) throw std::invalid_argument("bad w index");
    return {*w, 0};
}

WeightLabel p_var(int k) {
    auto w = parse_finite_weight("(" + std::to_string(k) + ")");
    if (!w || k == 0) throw std::invalid_argument("bad p index");
    return {*w, 0};
}

namespace {

// w_ij as a signed variable, w_ji = -w_ij, w_ii = 0
ExactPoly w_poly(int i, int j) {
    if (i == j) return {};
    ExactPoly v = ExactPoly::var(w_var(i, j));
    return i < j ? v : -v;
}

ExactPoly p_poly(int k) { return ExactPoly::var(p_var(k)); }

int sgn(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<ExactPoly> gamma_quadrics_pfaffian() {
    std::vector<ExactPoly> out;
    for (int i = 1; i <= 5; ++i) {
        std::vector<int> r;
        for (int j = 1; j <= 5; ++j)
            if (j != i) r.push_back(j);
        ExactPoly pf = w_poly(r[0], r[1]) * w_poly(r[2], r[3]) - w_poly(r[0], r[2]) * w_poly(r[1], r[3]) +
                       w_poly(r[0], r[3]) * w_poly(r[1], r[2]);
        ExactPoly g = ExactPoly::var(lam()) * p_poly(i) + pf;
        out.push_back(g * Rational(sgn(i + 1)));
    }
    for (int i = 1; i <= 5; ++i) {
        ExactPoly g;
        for (int j = 1; j <= 5; ++j) g += w_poly(i, j) * p_poly(j) * Rational(sgn(j + 1));
        out.push_back(g);
    }
    return out;
}

std::vector<std::string> const& reference_quadric_text() {
    static std::vector<std::string> const text = {
        "l{(0)}*l{(1)} + l{(25)}*l{(34)} - l{(24)}*l{(35)} + l{(23)}*l{(45)}",
        "-l{(0)}*l{(2)} - l{(15)}*l{(34)} + l{(14)}*l{(35)} - l{(13)}*l{(45)}",
        "l{(0)}*l{(3)} + l{(15)}*l{(24)} - l{(14)}*l{(25)} + l{(12)}*l{(45)}",
        "-l{(0)}*l{(4)} - l{(15)}*l{(23)} + l{(13)}*l{(25)} - l{(12)}*l{(35)}",
        "l{(0)}*l{(5)} + l{(14)}*l{(23)} - l{(13)}*l{(24)} + l{(12)}*l{(34)}",
        "-l{(2)}*l{(12)} + l{(3)}*l{(13)} - l{(4)}*l{(14)} + l{(5)}*l{(15)}",
        "-l{(1)}*l{(12)} + l{(3)}*l{(23)} - l{(4)}*l{(24)} + l{(5)}*l{(25)}",
        "-l{(1)}*l{(13)} + l{(2)}*l{(23)} - l{(4)}*l{(34)} + l{(5)}*l{(35)}",
        "-l{(1)}*l{(14)} + l{(2)}*l{(24)} - l{(3)}*l{(34)} + l{(5)}*l{(45)}",
        "-l{(1)}*l{(15)} + l{(2)}*l{(25)} - l{(3)}*l{(35)} + l{(4)}*l{(45)}",
    };
    return text;
}

std::vector<ExactPoly> const& gamma_quadrics() {
    static std::vector<ExactPoly> const q = [] {
        auto built = gamma_quadrics_pfaffian();
        auto const& ref = reference_quadric_text();
        for (std::size_t k = 0; k < built.size(); ++k)
            if (!(built[k] == parse_poly(ref[k])))
                throw std::logic_error("quadric " + to_string(all_vector_indices()[k]) +
                                       " disagrees with the expanded list");
        return built;
    }();
    return q;
}

ExactPoly const& gamma(VectorIndex s) { return gamma_quadrics()[position(s)]; }

Rational gamma_coeff(VectorIndex s, FiniteWeight a, FiniteWeight b) {
    WeightLabel la{a, 0}, lb{b, 0};
    Monomial m = Monomial::var(la) * Monomial::var(lb);
    Rational c = gamma(s).coeff(m);
    return a == b ? c : Rational(c / 2);
}

ExactPoly affine_quadric(VectorIndex s, int l, LevelRange window) {
    ExactPoly out;
    if (window.empty()) return out;
    for (auto const& [m, c] : gamma(s).terms()) {
        // each monomial is a product of two level-0 variables
        std::vector<WeightLabel> v;
        for (auto const& [a, e] : m.entries())
            for (int k = 0; k < e; ++k) v.push_back(a);
        for (int a = window.lo; a <= window.hi; ++a) {
            int b = l - a;
            if (!window.contains(b)) continue;
            out.add_term(Monomial::var(shift(v[0], a)) * Monomial::var(shift(v[1], b)), c);
        }
    }
    return out;
}

// ---------------------------------------------------------------- Fierz

namespace {

// Coefficient of lambda^b in dGamma^s/dlambda^a.
Rational derivative_coeff(VectorIndex s, FiniteWeight a, FiniteWeight b) {
    Rational c = gamma_coeff(s, a, b);
    return 2 * c;
}

}  // namespace

std::vector<FormalElement> const& fierz_identities() {
    static std::vector<FormalElement> const hs = [] {
        std::vector<FormalElement> out;
        for (auto a : all_finite_weights()) out.push_back(affine_fierz(a, 0, {0, 0}));
        return out;
    }();
    return hs;
}

FormalElement affine_fierz(FiniteWeight a, int k, LevelRange window) {
    FormalElement h;
    h.label = {a, k};
    for (auto s : all_vector_indices())
        for (auto b : all_finite_weights()) {
            Rational c = derivative_coeff(s, a, b);
            if (c == 0) continue;
            for (int lp = window.lo; lp <= window.hi; ++lp)
                h.terms.push_back({c, {b, lp}, bar(s), k - lp});
        }
    return h;
}

FierzResidue substitute(FormalElement const& h, RelationLookup const& lookup) {
    FierzResidue out;
    for (auto const& t : h.terms) {
        auto rel = lookup(t.rel, t.mode);
        if (!rel) {
            out.missing.push_back({t.rel, t.mode});
            continue;
        }
        out.residue += (*rel * Monomial::var(t.var)) * t.coeff;
    }
    return out;
}

FierzResidue substitute_finite(FormalElement const& h) {
    return substitute(h, [](VectorIndex s, int mode) -> std::optional<ExactPoly> {
        if (mode != 0) return std::nullopt;
        return gamma(s);
    });
}

FierzResidue substitute_affine(FormalElement const& h, LevelRange window) {
    return substitute(h, [window](VectorIndex s, int mode) -> std::optional<ExactPoly> {
        return affine_quadric(s, mode, window);
    });
}

std::string to_text(FormalElement const& h) {
    std::ostringstream os;
    os << "h{" << tag(h.label.weight) << "^" << h.label.level << "} =";
    bool first = true;
    for (auto const& t : h.terms) {
        os << (first ? " " : " + ") << t.coeff.get_str() << " * l{" << tag(t.var.weight) << "^"
           << t.var.level << "} * x{" << to_string(t.rel) << "^" << t.mode << "}";
        first = false;
    }
    if (first) os << " 0";
    return os.str();
}

// ---------------------------------------------------------------- JSON

std::string quadrics_json() {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["quadrics"] = nlohmann::ordered_json::array();
    for (auto s : all_vector_indices())
        j["quadrics"].push_back({{"index", to_string(s)}, {"poly", to_text(gamma(s))}});
    return j.dump(2) + "\n";
}

std::string fierz_json() {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["identities"] = nlohmann::ordered_json::array();
    for (auto const& h : fierz_identities()) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (auto const& t : h.terms)
            terms.push_back({{"coeff", t.coeff.get_str()},
                             {"var", to_string(t.var)},
                             {"relation", to_string(t.rel)},
                             {"mode", t.mode}});
        j["identities"].push_back({{"label", to_string(h.label)},
                                   {"terms", terms},
                                   {"residue", to_text(substitute_finite(h).residue)}});
    }
    return j.dump(2) + "\n";
}

}  // namespace purespin
