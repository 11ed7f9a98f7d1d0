#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "purespin/spinalg.hpp"

namespace purespin {

// ---------------------------------------------------------------- torus

TorusWeight operator*(TorusWeight a, TorusWeight const& b) {
    for (int i = 0; i < 5; ++i) a.s[i] += b.s[i];
    a.q += b.q;
    return a;
}

TorusWeight TorusWeight::inverse() const {
    TorusWeight w = *this;
    for (auto& x : w.s) x = -x;
    w.q = -w.q;
    return w;
}

TorusWeight torus_weight(WeightLabel a) {
    TorusWeight w;
    std::uint8_t mask = subset_mask(a.weight);
    // det^{-1/2} z_S with S the Fock subset: exponents -1 + 2[i in S]
    for (int i = 0; i < 5; ++i) w.s[i] = (mask >> i) & 1 ? 1 : -1;
    w.q = a.level;
    return w;
}

TorusWeight vector_weight(VectorIndex s) {
    TorusWeight w;
    w.s[s.i - 1] = s.star ? -2 : 2;
    return w;
}

std::string to_string(TorusWeight const& w) {
    std::ostringstream os;
    os << "s^(";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << w.s[i];
    os << ") q^" << w.q;
    return os.str();
}

// ---------------------------------------------------------------- Weyl

void validate(SignedPermutation const& g) {
    std::array<int, 5> seen{};
    for (int i : g.perm) {
        if (i < 0 || i > 4 || seen[i]++) throw std::invalid_argument("not a permutation of {1..5}");
    }
    if (std::accumulate(g.eps.begin(), g.eps.end(), 0) % 2 != 0)
        throw std::invalid_argument("sign vector must have even sum");
    if (std::accumulate(g.m.begin(), g.m.end(), 0) % 2 != 0)
        throw std::invalid_argument("translation must have even coordinate sum");
}

NHatPoint act(SignedPermutation const& g, NHatPoint x) {
    NHatPoint y;
    int twice = 0;
    for (int i = 0; i < 5; ++i) {
        y.eta[g.perm[i]] = (g.eps[i] + x.eta[i]) % 2;
        twice += (x.eta[i] ? -1 : 1) * g.m[i];
    }
    if (twice % 2 != 0) throw std::logic_error("half-integral level shift");
    y.n = x.n - twice / 2;
    return y;
}

NHatPoint psi(WeightLabel a) {
    NHatPoint x;
    std::uint8_t mask = subset_mask(a.weight);
    for (int i = 0; i < 5; ++i) x.eta[i] = (mask >> i) & 1;
    x.n = a.level;
    return x;
}

WeightLabel psi_inverse(NHatPoint x) {
    std::uint8_t mask = 0;
    for (int i = 0; i < 5; ++i)
        if (x.eta[i]) mask |= std::uint8_t(1u << i);
    auto w = from_subset_mask(mask);
    if (!w) throw std::invalid_argument("odd vector is not in N");
    return {*w, x.n};
}

namespace {
SignedPermutation transposition(int i, int j, std::string name) {
    SignedPermutation g;
    std::swap(g.perm[i], g.perm[j]);
    g.name = std::move(name);
    return g;
}
}  // namespace

std::array<SignedPermutation, 6> const& weyl_generators() {
    static std::array<SignedPermutation, 6> const gens = [] {
        std::array<SignedPermutation, 6> g;
        g[0] = transposition(0, 1, "s1");
        g[1].eps = {1, 1, 0, 0, 0};
        g[1].name = "s2";
        g[2] = transposition(1, 2, "s3");
        g[3] = transposition(2, 3, "s4");
        g[4] = transposition(3, 4, "s5");
        g[5] = transposition(3, 4, "s6");
        g[5].eps = {0, 0, 0, 1, 1};
        g[5].m = {0, 0, 0, 1, 1};
        for (auto const& x : g) validate(x);
        return g;
    }();
    return gens;
}

std::vector<UndirectedEdge> weyl_graph(std::vector<SignedPermutation> const& gens,
                                       std::vector<WeightLabel> const& carrier) {
    std::set<WeightLabel> inside(carrier.begin(), carrier.end());
    std::set<UndirectedEdge> edges;
    for (auto x : carrier)
        for (auto const& g : gens) {
            WeightLabel y = psi_inverse(act(g, psi(x)));
            if (y == x || !inside.count(y)) continue;
            edges.insert(x < y ? UndirectedEdge{x, y} : UndirectedEdge{y, x});
        }
    return {edges.begin(), edges.end()};
}

std::vector<UndirectedEdge> undirected(std::vector<Cover> const& covers) {
    std::set<UndirectedEdge> edges;
    for (auto [a, b] : covers) edges.insert(a < b ? UndirectedEdge{a, b} : UndirectedEdge{b, a});
    return {edges.begin(), edges.end()};
}

OrbitReport weyl_orbit_check(IntervalPoset const& iv, std::vector<SignedPermutation> const& gens,
                             int pad) {
    OrbitReport rep;
    auto cl = clutters(iv);
    rep.clutters = cl.size();
    if (cl.empty()) return rep;
    LevelRange lv = iv.levels();
    LevelRange box{lv.lo - pad, lv.hi + pad};
    using P = std::pair<WeightLabel, WeightLabel>;
    auto canon = [](WeightLabel a, WeightLabel b) { return a < b ? P{a, b} : P{b, a}; };
    std::set<P> seen{canon(cl[0].first, cl[0].second)};
    std::deque<P> todo{*seen.begin()};
    while (!todo.empty()) {
        P cur = todo.front();
        todo.pop_front();
        for (auto const& g : gens) {
            WeightLabel a = psi_inverse(act(g, psi(cur.first)));
            WeightLabel b = psi_inverse(act(g, psi(cur.second)));
            if (!box.contains(a.level) || !box.contains(b.level)) continue;
            if (seen.insert(canon(a, b)).second) todo.push_back(canon(a, b));
        }
    }
    rep.orbit_size = seen.size();
    for (auto const& [a, b] : cl)
        if (!seen.count(canon(a, b))) {
            rep.ok = false;
            rep.outside.push_back({a, b});
        }
    return rep;
}

// ---------------------------------------------------------------- automorphism u

UTable const& automorphism_u() {
    static UTable const table = [] {
        UTable t;
        for (auto w : all_finite_weights()) {
            FockElement x = FockElement::theta(w);
            for (int i = 5; i >= 2; --i) x = clifford_apply({i, false}, x) + clifford_apply({i, true}, x);
            if (x.coords().size() != 1) throw std::logic_error("u does not permute weight lines");
            auto [subset, c] = *x.coords().begin();
            auto img = from_subset_mask(subset);
            if (!img || (c != 1 && c != -1)) throw std::logic_error("u image is not a signed basis vector");
            t.image[index_of(w)] = {c > 0 ? 1 : -1, {*img, 0}};
        }
        return t;
    }();
    return table;
}

std::vector<std::tuple<FiniteWeight, int, FiniteWeight>> const& lemma_u_values() {
    using F = FiniteWeight;
    static std::vector<std::tuple<F, int, F>> const v = {
        {F::w0, 1, F::w1},   {F::w12, -1, F::w2},  {F::w13, 1, F::w3},  {F::w14, -1, F::w4},
        {F::w15, 1, F::w5},  {F::w23, -1, F::w45}, {F::w24, 1, F::w35}, {F::w25, -1, F::w34},
    };
    return v;
}

namespace {

int wedge_sign(unsigned a, unsigned b) {
    int inv = 0;
    for (int i = 0; i < 5; ++i)
        if ((a >> i) & 1)
            for (int j = 0; j < i; ++j) inv += (b >> j) & 1;
    return inv % 2 ? -1 : 1;
}

Rational pairing(FockElement const& x, FockElement const& y) {
    Rational r = 0;
    for (auto const& [a, ca] : x.coords())
        for (auto const& [b, cb] : y.coords()) {
            if ((a & b) || (a | b) != 31) continue;
            int k = std::popcount(a);
            int rev = (k * (k - 1) / 2) % 2 ? -1 : 1;
            r += ca * cb * (rev * wedge_sign(a, b));
        }
    return r;
}

// +1 or -1 if f = +-g, 0 otherwise
int proportional_sign(ExactPoly const& f, ExactPoly const& g) {
    if (f == g) return 1;
    if (f == -g) return -1;
    return 0;
}

}  // namespace

std::vector<ExactPoly> fock_quadrics() {
    std::vector<ExactPoly> out;
    for (auto s : all_vector_indices()) {
        ExactPoly g;
        for (auto a : all_finite_weights())
            for (auto b : all_finite_weights()) {
                Rational c = pairing(FockElement::theta(a), clifford_apply({s.i, s.star}, FockElement::theta(b)));
                if (c != 0) g += ExactPoly::term(c / 2, Monomial::var({a, 0}) * Monomial::var({b, 0}));
            }
        out.push_back(g);
    }
    return out;
}

std::array<int, 16> const& coordinate_twist() {
    static std::array<int, 16> const twist = [] {
        auto fock = fock_quadrics();
        std::vector<unsigned> masks(1u << 16);
        std::iota(masks.begin(), masks.end(), 0u);
        std::stable_sort(masks.begin(), masks.end(),
                         [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
        for (unsigned mask : masks) {
            std::array<int, 16> c;
            for (int i = 0; i < 16; ++i) c[i] = (mask >> i) & 1 ? -1 : 1;
            bool ok = true;
            for (std::size_t k = 0; ok && k < fock.size(); ++k) {
                ExactPoly twisted = fock[k].substitute([&](WeightLabel a) {
                    return ExactPoly::term(Rational(c[index_of(a.weight)]), Monomial::var(a));
                });
                ok = proportional_sign(gamma_quadrics()[k], twisted) != 0;
            }
            if (ok) return c;
        }
        throw std::logic_error("printed quadrics are not a sign twist of the Fock quadrics");
    }();
    return twist;
}

ExactPoly apply_u(ExactPoly const& f) {
    auto const& t = automorphism_u();
    auto const& c = coordinate_twist();
    return f.substitute([&](WeightLabel a) {
        if (a.level != 0) throw std::invalid_argument("apply_u: level-0 variables only");
        auto const& img = t.image[index_of(a.weight)];
        int sign = img.sign * c[index_of(a.weight)] * c[index_of(img.label.weight)];
        return ExactPoly::term(Rational(sign), Monomial::var(img.label));
    });
}

std::string u_table_json() {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["u"] = nlohmann::ordered_json::array();
    for (auto w : all_finite_weights()) {
        auto const& img = automorphism_u().image[index_of(w)];
        j["u"].push_back({{"from", tag(w)}, {"sign", img.sign}, {"to", tag(img.label.weight)}});
    }
    return j.dump(2) + "\n";
}

}  // namespace purespin
