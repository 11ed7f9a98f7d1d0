#include "purespin/weightlattice.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace purespin {

namespace {

using F = FiniteWeight;

constexpr std::array<F, 16> kAll = {F::w0,  F::w12, F::w13, F::w14, F::w15, F::w23,
                                    F::w24, F::w25, F::w34, F::w35, F::w45, F::w1,
                                    F::w2,  F::w3,  F::w4,  F::w5};

constexpr std::array<char const*, 16> kTags = {"(0)",  "(12)", "(13)", "(14)", "(15)", "(23)",
                                               "(24)", "(25)", "(34)", "(35)", "(45)", "(1)",
                                               "(2)",  "(3)",  "(4)",  "(5)"};

constexpr std::array<FiniteCover, 20> kFiniteCovers = {{
    // rows of the 4x4 grid
    {F::w0, F::w12}, {F::w12, F::w13}, {F::w13, F::w23},
    {F::w14, F::w24}, {F::w24, F::w34}, {F::w34, F::w5},
    {F::w15, F::w25}, {F::w25, F::w35}, {F::w35, F::w4},
    {F::w45, F::w3}, {F::w3, F::w2}, {F::w2, F::w1},
    // columns
    {F::w13, F::w14}, {F::w23, F::w24}, {F::w14, F::w15}, {F::w24, F::w25},
    {F::w34, F::w35}, {F::w5, F::w4}, {F::w35, F::w45}, {F::w4, F::w3},
}};

constexpr std::array<FiniteCover, 4> kCrossCovers = {{
    {F::w45, F::w0}, {F::w3, F::w12}, {F::w2, F::w13}, {F::w1, F::w23},
}};

// ht table: offsets within a block of eight, per column.
constexpr std::array<F, 8> kColumn0 = {F::w0,  F::w12, F::w13, F::w14,
                                       F::w15, F::w25, F::w35, F::w45};
constexpr std::array<F, 8> kColumn1 = {F::w3,  F::w2,  F::w1, F::w23,
                                       F::w24, F::w34, F::w5, F::w4};
// Column-1 entries 0..2 sit one level below the block index.
constexpr int column1_level_offset(int j) { return j < 3 ? -1 : 0; }

int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Reachability on two consecutive levels; index = level*16 + weight.
struct TwoLevelClosure {
    std::array<std::bitset<32>, 32> reach;
    TwoLevelClosure() {
        for (int i = 0; i < 32; ++i) reach[i].set(i);
        auto add = [&](int a, int b) { reach[a].set(b); };
        for (int lv = 0; lv < 2; ++lv)
            for (auto [a, b] : kFiniteCovers) add(lv * 16 + index_of(a), lv * 16 + index_of(b));
        for (auto [a, b] : kCrossCovers) add(index_of(a), 16 + index_of(b));
        // Warshall
        for (int k = 0; k < 32; ++k)
            for (int i = 0; i < 32; ++i)
                if (reach[i].test(k)) reach[i] |= reach[k];
    }
};

TwoLevelClosure const& closure() {
    static TwoLevelClosure const c;
    return c;
}

}  // namespace

std::array<FiniteWeight, kNumFiniteWeights> const& all_finite_weights() { return kAll; }

int index_of(FiniteWeight w) { return static_cast<int>(w); }

FiniteWeight finite_weight_at(int idx) {
    if (idx < 0 || idx >= kNumFiniteWeights) throw std::out_of_range("finite weight index");
    return kAll[idx];
}

std::string tag(FiniteWeight w) { return kTags[index_of(w)]; }

std::optional<FiniteWeight> parse_finite_weight(std::string_view s) {
    std::string t(s);
    if (t.empty()) return std::nullopt;
    if (t.front() != '(') t = "(" + t + ")";
    for (int i = 0; i < kNumFiniteWeights; ++i)
        if (t == kTags[i]) return kAll[i];
    return std::nullopt;
}

std::uint8_t subset_mask(FiniteWeight w) {
    std::string t = tag(w);
    std::uint8_t m = 0;
    for (char c : t)
        if (c >= '1' && c <= '5') m |= std::uint8_t(1u << (c - '1'));
    // (k) is the complement of {k}
    if (t.size() == 3 && t != "(0)") m = std::uint8_t(0x1f & ~m);
    return m;
}

std::optional<FiniteWeight> from_subset_mask(std::uint8_t mask) {
    for (auto w : kAll)
        if (subset_mask(w) == mask) return w;
    return std::nullopt;
}

std::string to_string(WeightLabel a) { return tag(a.weight) + "@" + std::to_string(a.level); }

std::optional<WeightLabel> parse_label(std::string_view s) {
    auto close = s.find(')');
    if (close == std::string_view::npos) return std::nullopt;
    auto w = parse_finite_weight(s.substr(0, close + 1));
    if (!w) return std::nullopt;
    auto rest = s.substr(close + 1);
    if (rest.empty()) return WeightLabel{*w, 0};
    if (rest.front() != '@' && rest.front() != '^') return std::nullopt;
    rest.remove_prefix(1);
    if (rest.empty()) return std::nullopt;
    try {
        std::size_t used = 0;
        int lv = std::stoi(std::string(rest), &used);
        if (used != rest.size()) return std::nullopt;
        return WeightLabel{*w, lv};
    } catch (std::exception const&) {
        return std::nullopt;
    }
}

std::span<FiniteCover const> finite_covers() { return kFiniteCovers; }

std::span<FiniteCover const> cross_level_cover_table() { return kCrossCovers; }

std::vector<Cover> affine_covers(LevelRange window) {
    if (window.empty()) throw std::invalid_argument("affine_covers: empty level window");
    std::vector<Cover> out;
    for (int r = window.lo; r <= window.hi; ++r) {
        for (auto [a, b] : kFiniteCovers) out.push_back({{a, r}, {b, r}});
        if (r + 1 <= window.hi)
            for (auto [a, b] : kCrossCovers) out.push_back({{a, r}, {b, r + 1}});
    }
    return out;
}

bool leq(WeightLabel a, WeightLabel b) {
    int d = b.level - a.level;
    if (d >= 2) return true;
    if (d < 0) return false;
    return closure().reach[index_of(a.weight)].test(d * 16 + index_of(b.weight));
}

WeightLabel meet(WeightLabel a, WeightLabel b) {
    if (leq(a, b)) return a;
    if (leq(b, a)) return b;
    int top = std::min(a.level, b.level);
    std::vector<WeightLabel> lower;
    for (auto x : window_elements({top - 2, top}))
        if (leq(x, a) && leq(x, b)) lower.push_back(x);
    for (auto m : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](WeightLabel x) { return leq(x, m); }))
            return m;
    throw std::logic_error("meet does not exist");
}

WeightLabel join(WeightLabel a, WeightLabel b) {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    int bottom = std::max(a.level, b.level);
    std::vector<WeightLabel> upper;
    for (auto x : window_elements({bottom, bottom + 2}))
        if (leq(a, x) && leq(b, x)) upper.push_back(x);
    for (auto m : upper)
        if (std::all_of(upper.begin(), upper.end(), [&](WeightLabel x) { return leq(m, x); }))
            return m;
    throw std::logic_error("join does not exist");
}

int ht(WeightLabel a) {
    for (int j = 0; j < 8; ++j) {
        if (kColumn0[j] == a.weight) return 8 * a.level + j;
        if (kColumn1[j] == a.weight) return 8 * (a.level - column1_level_offset(j)) + j;
    }
    throw std::logic_error("ht: unreachable");
}

WeightLabel label_at_ht(int h, int column) {
    int r = floor_div(h, 8);
    int j = h - 8 * r;
    if (column == 0) return {kColumn0[j], r};
    return {kColumn1[j], r + column1_level_offset(j)};
}

int ht_column(WeightLabel a) {
    return std::find(kColumn0.begin(), kColumn0.end(), a.weight) != kColumn0.end() ? 0 : 1;
}

WeightLabel shift(WeightLabel a, int k) { return {a.weight, a.level + k}; }

FiniteWeight u_permutation(FiniteWeight w) {
    static std::map<F, F> const table = [] {
        std::map<F, F> m;
        std::array<std::pair<F, F>, 8> pairs = {{{F::w0, F::w1},
                                                 {F::w12, F::w2},
                                                 {F::w13, F::w3},
                                                 {F::w14, F::w4},
                                                 {F::w15, F::w5},
                                                 {F::w23, F::w45},
                                                 {F::w24, F::w35},
                                                 {F::w25, F::w34}}};
        for (auto [x, y] : pairs) {
            m[x] = y;
            m[y] = x;
        }
        return m;
    }();
    return table.at(w);
}

WeightLabel anti_auto(WeightLabel a) { return {u_permutation(a.weight), -a.level}; }

std::vector<WeightLabel> window_elements(LevelRange window) {
    std::vector<WeightLabel> out;
    for (int r = window.lo; r <= window.hi; ++r)
        for (auto w : kAll) out.push_back({w, r});
    return out;
}

IntervalPoset::IntervalPoset(WeightLabel lo, WeightLabel hi) : lo_(lo), hi_(hi) {
    if (!leq(lo, hi))
        throw std::invalid_argument("interval endpoints not ordered: " + to_string(lo) + " vs " +
                                    to_string(hi));
    for (int h = ht(lo); h <= ht(hi); ++h)
        for (int c = 0; c < 2; ++c) {
            auto x = label_at_ht(h, c);
            if (leq(lo, x) && leq(x, hi)) elements_.push_back(x);
        }
    for (auto const& cv : affine_covers({lo.level, hi.level}))
        if (contains(cv.first) && contains(cv.second)) covers_.push_back(cv);
    std::sort(covers_.begin(), covers_.end(), [](Cover const& x, Cover const& y) {
        auto key = [](Cover const& c) {
            return std::tuple(ht(c.first), ht_column(c.first), ht_column(c.second));
        };
        return key(x) < key(y);
    });
}

bool IntervalPoset::contains(WeightLabel x) const { return leq(lo_, x) && leq(x, hi_); }

LevelRange IntervalPoset::levels() const {
    LevelRange r{elements_.front().level, elements_.front().level};
    for (auto x : elements_) {
        r.lo = std::min(r.lo, x.level);
        r.hi = std::max(r.hi, x.level);
    }
    return r;
}

std::vector<std::pair<WeightLabel, WeightLabel>> clutters(IntervalPoset const& iv) {
    std::vector<std::pair<WeightLabel, WeightLabel>> out;
    auto const& el = iv.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (!comparable(el[i], el[j])) out.push_back({el[i], el[j]});
    return out;
}

std::vector<WeightLabel> lower_covers(IntervalPoset const& iv, WeightLabel x) {
    std::vector<WeightLabel> out;
    for (auto const& [a, b] : iv.covers())
        if (b == x) out.push_back(a);
    return out;
}

Decomposition decompose_below(IntervalPoset const& iv, WeightLabel top) {
    if (top != iv.hi()) throw std::invalid_argument("decompose_below: top is not the maximum");
    auto below = lower_covers(iv, top);
    Decomposition d;
    if (below.empty()) return d;
    if (below.size() == 1) {
        d.kind = Decomposition::Kind::Tail;
        d.a = below[0];
        return d;
    }
    if (below.size() != 2) throw std::logic_error("interval is not convenient");
    WeightLabel m = meet(below[0], below[1]);
    for (int i = 0; i < 2; ++i) {
        auto lc = lower_covers(iv, below[i]);
        if (lc.size() == 1 && lc[0] == m) {
            d.kind = Decomposition::Kind::Pair;
            d.a = below[i];
            d.b = below[1 - i];
            return d;
        }
    }
    throw std::logic_error("interval is not narrow below " + to_string(top));
}

int longest_chain(IntervalPoset const& iv) {
    std::map<WeightLabel, int> best;
    int out = 0;
    for (auto x : iv.elements()) {  // elements are sorted by ht
        int b = 1;
        for (auto y : lower_covers(iv, x)) b = std::max(b, best[y] + 1);
        best[x] = b;
        out = std::max(out, b);
    }
    return out;
}

namespace {
std::string node_id(WeightLabel a) {
    std::string t = tag(a.weight);
    std::string id = "w";
    for (char c : t)
        if (std::isdigit(static_cast<unsigned char>(c))) id += c;
    id += "_";
    id += a.level < 0 ? "m" + std::to_string(-a.level) : std::to_string(a.level);
    return id;
}
}  // namespace

std::string hasse_to_dot(std::vector<WeightLabel> const& nodes, std::vector<Cover> const& covers) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=LR;\n";
    for (auto a : nodes)
        os << "  " << node_id(a) << " [label=\"" << tag(a.weight) << "^" << a.level
           << "\", tag=\"" << tag(a.weight) << "\", level=" << a.level << ", ht=" << ht(a)
           << "];\n";
    for (auto const& [a, b] : covers) os << "  " << node_id(a) << " -> " << node_id(b) << ";\n";
    os << "}\n";
    return os.str();
}

std::string hasse_to_json(std::vector<WeightLabel> const& nodes, std::vector<Cover> const& covers) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["nodes"] = nlohmann::ordered_json::array();
    for (auto a : nodes)
        j["nodes"].push_back({{"id", to_string(a)},
                              {"tag", tag(a.weight)},
                              {"level", a.level},
                              {"ht", ht(a)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (auto const& [a, b] : covers)
        j["edges"].push_back({{"from", to_string(a)}, {"to", to_string(b)}});
    return j.dump(2) + "\n";
}

}  // namespace purespin
