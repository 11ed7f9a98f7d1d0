#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "purespin/polyring.hpp"
#include "purespin/spinalg.hpp"
#include "purespin/weightlattice.hpp"

namespace purespin {

using LabelPair = std::pair<WeightLabel, WeightLabel>;

// Unordered pair in canonical form (smaller ht first, then column).
LabelPair canonical_pair(WeightLabel a, WeightLabel b);

struct AffineRelation {
    VectorIndex s;
    int mode = 0;
    ExactPoly body;
    LabelPair clutter;
};

struct RelationProjection {
    VectorIndex s;
    int mode = 0;
    ExactPoly body;
    // The clutter of the full relation Gamma^{s^mode}.
    LabelPair clutter;
    bool retained = false;
};

// Clutter monomials of a quadratic polynomial.
std::vector<LabelPair> clutter_monomials(ExactPoly const& f);
// The unique clutter of Gamma^{s^l} over all of Ê; throws std::logic_error
// if there is not exactly one.
LabelPair relation_clutter(VectorIndex s, int l);

// Every (s, l) whose projection to the interval's variables is nonzero.
std::vector<RelationProjection> relation_projections(IntervalPoset const& iv);
// The retained projections; throws std::logic_error if a retained body has
// other than one clutter, or if retained clutters differ from clutters(iv).
std::vector<AffineRelation> build_relations(IntervalPoset const& iv);
std::vector<ExactPoly> bodies(std::vector<AffineRelation> const& rels);

struct ShapeReport {
    bool ok = true;
    std::string detail;
};
// Solved for its clutter, the relation is +-(meet * join) plus terms
// lambda^g lambda^g' with g < meet and g' > join, all coefficients +-1.
ShapeReport straightening_shape_check(AffineRelation const& rel);

long long standard_monomials(IntervalPoset const& iv, int k);
std::vector<Monomial> standard_monomial_list(IntervalPoset const& iv, int k);

struct StraightenedRow {
    int k = 0;
    long long standard = 0;
    long long quotient = 0;
};

struct StraightenedLawReport {
    bool ok = true;
    BuchbergerReport buchberger;
    std::vector<StraightenedRow> rows;
};

StraightenedLawReport straightened_law_check(IntervalPoset const& iv, int k_max);

struct Obstruction {
    WeightLabel outer;
    LabelPair inner;
    friend bool operator==(Obstruction const&, Obstruction const&) = default;
};

struct ObstructionPair {
    Obstruction first;
    Obstruction second;
    Monomial product;
    // Label of the Fierz element covering the pair, if found.
    std::optional<WeightLabel> label;
};

// Triples {a,b,c} with (a,b), (a,c) clutters and b, c comparable; b before c.
std::vector<ObstructionPair> enumerate_obstructions(IntervalPoset const& iv);

struct CoverageReport {
    bool ok = true;
    std::vector<ObstructionPair> pairs;  // with labels filled in
    std::vector<ObstructionPair> uncovered;
};

// Every pair appears in some h_{a^k} (tensor form lambda^outer (x) Gamma monomial)
// with coefficients +1 and -1.
CoverageReport obstruction_coverage_check(IntervalPoset const& iv);

struct DimensionReport {
    int chain_len = 0;
    int ht_diff = 0;
    int pole_order = 0;
};

DimensionReport dimension_report(IntervalPoset const& iv);

struct RegularSequenceReport {
    bool ok = true;
    // hilbert[j][k]: dim in degree k after quotienting by the first j forms
    std::vector<std::vector<long long>> hilbert;
};

// y_i = sum of the generators of ht i, i = ht(lo)..ht(hi).
RegularSequenceReport regular_sequence_check(IntervalPoset const& iv, int d_max);

std::string to_string(Obstruction const& o);
std::string relations_json(IntervalPoset const& iv, std::vector<AffineRelation> const& rels);
std::string obstructions_json(IntervalPoset const& iv, CoverageReport const& rep);

}  // namespace purespin
