#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace purespin {

// The sixteen weights of the half-spin representation, in the order
// (0),(12),...,(45),(1),...,(5).
enum class FiniteWeight : std::uint8_t {
    w0, w12, w13, w14, w15, w23, w24, w25, w34, w35, w45, w1, w2, w3, w4, w5
};

inline constexpr int kNumFiniteWeights = 16;

std::array<FiniteWeight, kNumFiniteWeights> const& all_finite_weights();
int index_of(FiniteWeight w);
FiniteWeight finite_weight_at(int idx);

// "(12)" style tag; parse accepts the same form, with or without parentheses.
std::string tag(FiniteWeight w);
std::optional<FiniteWeight> parse_finite_weight(std::string_view s);

// Subset of {1..5} spanned by the Fock basis vector theta_w, bit i-1 for v_i.
std::uint8_t subset_mask(FiniteWeight w);
std::optional<FiniteWeight> from_subset_mask(std::uint8_t mask);

struct WeightLabel {
    FiniteWeight weight = FiniteWeight::w0;
    int level = 0;

    // Storage order only (level, then weight index); not the poset order.
    friend auto operator<=>(WeightLabel const& a, WeightLabel const& b) {
        if (a.level != b.level) return a.level <=> b.level;
        return index_of(a.weight) <=> index_of(b.weight);
    }
    friend bool operator==(WeightLabel const&, WeightLabel const&) = default;
};

// "(12)@1"; parse also accepts "(12)^1" and a bare tag (level 0).
std::string to_string(WeightLabel a);
std::optional<WeightLabel> parse_label(std::string_view s);

using Cover = std::pair<WeightLabel, WeightLabel>;
using FiniteCover = std::pair<FiniteWeight, FiniteWeight>;

struct LevelRange {
    int lo = 0;
    int hi = 0;
    bool empty() const { return hi < lo; }
    bool contains(int r) const { return lo <= r && r <= hi; }
};

std::span<FiniteCover const> finite_covers();

// The covers (45)^r->(0)^{r+1}, (3)^r->(12)^{r+1}, (2)^r->(13)^{r+1},
// (1)^r->(23)^{r+1} as drawn in the [(0),(1)^1] picture (r = 0).
std::span<FiniteCover const> cross_level_cover_table();

// Throws std::invalid_argument on an empty window.
std::vector<Cover> affine_covers(LevelRange window);

bool leq(WeightLabel a, WeightLabel b);
inline bool comparable(WeightLabel a, WeightLabel b) { return leq(a, b) || leq(b, a); }
WeightLabel meet(WeightLabel a, WeightLabel b);
WeightLabel join(WeightLabel a, WeightLabel b);

int ht(WeightLabel a);
// Element of the given ht in the first (column 0) or second column of the ht table.
WeightLabel label_at_ht(int h, int column);
int ht_column(WeightLabel a);

WeightLabel shift(WeightLabel a, int k);
WeightLabel anti_auto(WeightLabel a);
// The finite weight permutation underlying anti_auto.
FiniteWeight u_permutation(FiniteWeight w);

std::vector<WeightLabel> window_elements(LevelRange window);

class IntervalPoset {
public:
    // Throws std::invalid_argument unless lo <= hi.
    IntervalPoset(WeightLabel lo, WeightLabel hi);

    WeightLabel lo() const { return lo_; }
    WeightLabel hi() const { return hi_; }
    // Sorted by (ht, column).
    std::vector<WeightLabel> const& elements() const { return elements_; }
    std::vector<Cover> const& covers() const { return covers_; }
    bool contains(WeightLabel x) const;
    std::size_t size() const { return elements_.size(); }
    // Levels touched by the elements.
    LevelRange levels() const;

private:
    WeightLabel lo_;
    WeightLabel hi_;
    std::vector<WeightLabel> elements_;
    std::vector<Cover> covers_;
};

// Unordered incomparable pairs, each stored with the smaller ht first
// (ties broken by column).
std::vector<std::pair<WeightLabel, WeightLabel>> clutters(IntervalPoset const& iv);

// Lower covers of x inside iv.
std::vector<WeightLabel> lower_covers(IntervalPoset const& iv, WeightLabel x);

struct Decomposition {
    enum class Kind { Point, Tail, Pair };
    Kind kind = Kind::Point;
    // Tail: a is the unique element below top. Pair: a is the tail side
    // (an element with a single lower cover in the interval), b the other.
    WeightLabel a{};
    WeightLabel b{};
};

// top must be the maximum of iv. Throws std::logic_error if the interval
// below top is neither a tail nor a narrow pair.
Decomposition decompose_below(IntervalPoset const& iv, WeightLabel top);

// Longest chain, counted in elements.
int longest_chain(IntervalPoset const& iv);

std::string hasse_to_dot(std::vector<WeightLabel> const& nodes, std::vector<Cover> const& covers);
std::string hasse_to_json(std::vector<WeightLabel> const& nodes, std::vector<Cover> const& covers);

}  // namespace purespin
