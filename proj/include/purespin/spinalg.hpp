#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "purespin/polyring.hpp"
#include "purespin/weightlattice.hpp"

namespace purespin {

// ---------------------------------------------------------------- Fock space

// Exterior algebra of W = C^5; a basis vector is a subset of {1..5}
// (bit i-1 for v_i), ordered increasingly.
class FockElement {
public:
    FockElement() = default;
    static FockElement basis(std::uint8_t subset, Rational c = 1);
    static FockElement theta(FiniteWeight w);

    std::map<std::uint8_t, Rational> const& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    Rational coeff(std::uint8_t subset) const;
    void add(std::uint8_t subset, Rational const& c);

    FockElement& operator+=(FockElement const& o);
    friend FockElement operator+(FockElement a, FockElement const& b) { return a += b; }
    friend FockElement operator*(Rational const& c, FockElement a);
    friend bool operator==(FockElement const&, FockElement const&) = default;

private:
    std::map<std::uint8_t, Rational> coords_;
};

// v_i (wedge, dual = false) or v_{i*} (contraction, dual = true), i in 1..5.
struct CliffordGen {
    int i = 1;
    bool dual = false;
};

FockElement clifford_apply(CliffordGen gen, FockElement const& x);

// ---------------------------------------------------------------- root operators

struct SignedLabel {
    int sign = 1;
    WeightLabel label;
    friend bool operator==(SignedLabel const&, SignedLabel const&) = default;
};

// An operator word acting right to left, times z^z_shift.
struct RootOp {
    int index = 0;
    std::string name;
    std::vector<CliffordGen> word;
    int z_shift = 0;
};

std::array<RootOp, 6> const& root_ops();
// Image of theta_a z^level, or nullopt when it is zero.
std::optional<SignedLabel> apply_root(RootOp const& op, WeightLabel a);

// Directed graph from the root operators, without comparison.
std::vector<Cover> root_operator_graph(LevelRange window);
// Same, but throws std::logic_error if it differs from affine_covers(window).
// An empty window gives an empty graph.
std::vector<Cover> generate_hasse(LevelRange window);

// ---------------------------------------------------------------- quadrics

// s in {1..5, 1*..5*}
struct VectorIndex {
    int i = 1;
    bool star = false;
    friend auto operator<=>(VectorIndex const&, VectorIndex const&) = default;
};

std::string to_string(VectorIndex s);
std::optional<VectorIndex> parse_vector_index(std::string_view s);
inline VectorIndex bar(VectorIndex s) { return {s.i, !s.star}; }
// 1..5 then 1*..5*
std::array<VectorIndex, 10> const& all_vector_indices();
int position(VectorIndex s);

// Level-0 generators under their classical names.
WeightLabel lam();
WeightLabel w_var(int i, int j);
WeightLabel p_var(int k);

// Gamma^i = (-1)^{i+1}(lambda p_i + Pf_i(w)), Gamma^{i*} = sum_j w_ij (-1)^{j+1} p_j.
std::vector<ExactPoly> gamma_quadrics_pfaffian();
// The expanded list as printed, in the text format.
std::vector<std::string> const& reference_quadric_text();
// Pfaffian construction checked term by term against the printed list;
// throws std::logic_error on a sign mismatch. Order as all_vector_indices().
std::vector<ExactPoly> const& gamma_quadrics();
ExactPoly const& gamma(VectorIndex s);

// Gamma^s = sum_{a,b} Gamma^s_{ab} lambda^a lambda^b with Gamma^s symmetric,
// so an off-diagonal monomial coefficient is 2 Gamma^s_{ab}.
Rational gamma_coeff(VectorIndex s, FiniteWeight a, FiniteWeight b);

// Coefficient of z^l in Gamma^s(lambda(z)), lambda^a(z) = sum_{r in window} lambda^{a^r} z^r.
ExactPoly affine_quadric(VectorIndex s, int l, LevelRange window);

// ---------------------------------------------------------------- Fierz

struct FormalTerm {
    Rational coeff;
    WeightLabel var;
    VectorIndex rel;
    int mode = 0;
};

struct FormalElement {
    WeightLabel label;
    std::vector<FormalTerm> terms;
};

// h_a = sum_s (dGamma^s/dlambda^a) x_{bar s}; labels at level 0, order of all_finite_weights().
std::vector<FormalElement> const& fierz_identities();
FormalElement affine_fierz(FiniteWeight a, int k, LevelRange window);

using RelationLookup = std::function<std::optional<ExactPoly>(VectorIndex, int)>;

struct FierzResidue {
    ExactPoly residue;
    // Relation symbols the lookup could not supply.
    std::vector<std::pair<VectorIndex, int>> missing;
    bool zero() const { return residue.is_zero() && missing.empty(); }
};

FierzResidue substitute(FormalElement const& h, RelationLookup const& lookup);
// Substitution of the finite quadrics (modes must be 0).
FierzResidue substitute_finite(FormalElement const& h);
// Substitution of affine_quadric(s, l, window).
FierzResidue substitute_affine(FormalElement const& h, LevelRange window);

std::string to_text(FormalElement const& h);

// ---------------------------------------------------------------- torus

// Exponents in the half-step variables s_i (s_i^2 = z_i) and in q.
struct TorusWeight {
    std::array<int, 5> s{};
    int q = 0;
    friend auto operator<=>(TorusWeight const&, TorusWeight const&) = default;
    friend TorusWeight operator*(TorusWeight a, TorusWeight const& b);
    TorusWeight inverse() const;
};

TorusWeight torus_weight(WeightLabel a);
// Weight of v_i is z_i, of v_{i*} is z_i^{-1}.
TorusWeight vector_weight(VectorIndex s);
std::string to_string(TorusWeight const& w);

// ---------------------------------------------------------------- Weyl

// (sigma, eps, m) acting on N-hat = N x Z by
// (sigma,eps,m)(eta,n) = (sigma(eps+eta), -1/2 sum (-1)^{eta_i} m_i + n).
struct SignedPermutation {
    std::array<int, 5> perm{0, 1, 2, 3, 4};  // i -> perm[i], 0-based
    std::array<int, 5> eps{};
    std::array<int, 5> m{};
    std::string name;
};

struct NHatPoint {
    std::array<int, 5> eta{};
    int n = 0;
    friend auto operator<=>(NHatPoint const&, NHatPoint const&) = default;
};

// Throws std::invalid_argument unless eps has even sum and m even coordinate sum.
void validate(SignedPermutation const& g);
NHatPoint act(SignedPermutation const& g, NHatPoint x);
NHatPoint psi(WeightLabel a);
WeightLabel psi_inverse(NHatPoint x);

// s1 = sigma12, s2 = r_{11000}, s3..s5 = sigma23, sigma34, sigma45,
// s6 = (sigma45, 00011, (0,0,0,1,1)).
std::array<SignedPermutation, 6> const& weyl_generators();

using UndirectedEdge = std::pair<WeightLabel, WeightLabel>;  // first < second (storage order)
std::vector<UndirectedEdge> weyl_graph(std::vector<SignedPermutation> const& gens,
                                       std::vector<WeightLabel> const& carrier);
std::vector<UndirectedEdge> undirected(std::vector<Cover> const& covers);

struct OrbitReport {
    bool ok = true;
    std::size_t clutters = 0;
    std::size_t orbit_size = 0;
    std::vector<std::pair<WeightLabel, WeightLabel>> outside;
};

// Every clutter of the interval lies in the Sym^2 orbit of the first one, the
// orbit being explored inside levels [lo-pad, hi+pad].
OrbitReport weyl_orbit_check(IntervalPoset const& iv, std::vector<SignedPermutation> const& gens,
                             int pad = 2);

// ---------------------------------------------------------------- automorphism u

struct UTable {
    std::array<SignedLabel, 16> image;  // level 0 labels
};

// u = e2 e3 e4 e5 with e_i = v_i + v_{i*}; throws std::logic_error if an image
// is not a signed basis vector.
UTable const& automorphism_u();
// The eight values printed in the lemma, as (from, sign, to).
std::vector<std::tuple<FiniteWeight, int, FiniteWeight>> const& lemma_u_values();
// Gamma^s(x) = 1/2 <x, v_s x> from the form <x, y> = top part of rev(x) ^ y,
// in coordinates on the theta basis.
std::vector<ExactPoly> fock_quadrics();
// Signs c with gamma(s)(lambda) = +-fock_quadrics()[s](c lambda) for every s, the
// fewest flips first. The printed quadrics and the theta basis differ by these.
std::array<int, 16> const& coordinate_twist();
// Pull back a polynomial in level-0 variables along u, read through coordinate_twist().
ExactPoly apply_u(ExactPoly const& f);

std::string quadrics_json();
std::string fierz_json();
std::string u_table_json();

}  // namespace purespin
