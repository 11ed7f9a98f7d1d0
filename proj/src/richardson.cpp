#include "purespin/richardson.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "purespin/charseries.hpp"

namespace purespin {

LabelPair canonical_pair(WeightLabel a, WeightLabel b) {
    auto key = [](WeightLabel x) { return std::pair(ht(x), ht_column(x)); };
    return key(a) <= key(b) ? LabelPair{a, b} : LabelPair{b, a};
}

namespace {

std::pair<WeightLabel, WeightLabel> factors(Monomial const& m) {
    std::vector<WeightLabel> v;
    for (auto const& [a, e] : m.entries())
        for (int i = 0; i < e; ++i) v.push_back(a);
    if (v.size() != 2) throw std::logic_error("expected a quadratic monomial");
    return {v[0], v[1]};
}

bool inside(IntervalPoset const& iv, Monomial const& m) {
    return std::all_of(m.entries().begin(), m.entries().end(),
                       [&](auto const& en) { return iv.contains(en.first); });
}

int floor_half(int l) { return l >= 0 ? l / 2 : -((-l + 1) / 2); }

}  // namespace

std::vector<LabelPair> clutter_monomials(ExactPoly const& f) {
    std::vector<LabelPair> out;
    for (auto const& [m, c] : f.terms()) {
        auto [a, b] = factors(m);
        if (!comparable(a, b)) out.push_back(canonical_pair(a, b));
    }
    return out;
}

LabelPair relation_clutter(VectorIndex s, int l) {
    // levels of a clutter differ by at most one, so a+b=l pins them
    int a = floor_half(l);
    auto cl = clutter_monomials(affine_quadric(s, l, {a, l - a}));
    if (cl.size() != 1)
        throw std::logic_error("relation " + to_string(s) + "^" + std::to_string(l) + " has " +
                               std::to_string(cl.size()) + " clutters");
    return cl[0];
}

std::vector<RelationProjection> relation_projections(IntervalPoset const& iv) {
    std::vector<RelationProjection> out;
    LevelRange lv = iv.levels();
    for (int l = 2 * lv.lo; l <= 2 * lv.hi; ++l)
        for (auto s : all_vector_indices()) {
            ExactPoly body;
            ExactPoly full = affine_quadric(s, l, lv);
            for (auto const& [m, c] : full.terms())
                if (inside(iv, m)) body.add_term(m, c);
            if (body.is_zero()) continue;
            RelationProjection p{s, l, std::move(body), relation_clutter(s, l), false};
            p.retained = iv.contains(p.clutter.first) && iv.contains(p.clutter.second);
            out.push_back(std::move(p));
        }
    return out;
}

std::vector<AffineRelation> build_relations(IntervalPoset const& iv) {
    std::vector<AffineRelation> out;
    std::set<LabelPair> seen;
    for (auto& p : relation_projections(iv)) {
        if (!p.retained) continue;
        auto cl = clutter_monomials(p.body);
        if (cl.size() != 1 || cl[0] != p.clutter)
            throw std::logic_error("retained relation " + to_string(p.s) + "^" + std::to_string(p.mode) +
                                   " does not have a unique clutter");
        if (!seen.insert(p.clutter).second) throw std::logic_error("two relations share a clutter");
        out.push_back({p.s, p.mode, std::move(p.body), p.clutter});
    }
    std::set<LabelPair> want;
    for (auto const& [a, b] : clutters(iv)) want.insert(canonical_pair(a, b));
    if (want != seen) throw std::logic_error("retained relations are not in bijection with clutters");
    return out;
}

std::vector<ExactPoly> bodies(std::vector<AffineRelation> const& rels) {
    std::vector<ExactPoly> out;
    for (auto const& r : rels) out.push_back(r.body);
    return out;
}

ShapeReport straightening_shape_check(AffineRelation const& rel) {
    ShapeReport rep;
    auto fail = [&](std::string what) {
        rep.ok = false;
        rep.detail = std::move(what);
        return rep;
    };
    auto [a, b] = rel.clutter;
    WeightLabel mt = meet(a, b), jn = join(a, b);
    Monomial cm = Monomial::var(a) * Monomial::var(b);
    Monomial pm = Monomial::var(mt) * Monomial::var(jn);
    Rational c = rel.body.coeff(cm);
    if (c == 0) return fail("clutter monomial missing");
    if (abs(rel.body.coeff(pm)) != abs(c)) return fail("meet-join partner missing");
    for (auto const& [m, d] : rel.body.terms()) {
        if (m == cm || m == pm) continue;
        if (abs(d) != abs(c)) return fail("coefficient is not +-1 relative to the clutter");
        auto [g, gp] = factors(m);
        if (!leq(g, gp)) std::swap(g, gp);
        if (!leq(g, gp)) return fail("second clutter in " + to_text(m));
        bool below = leq(g, mt) && g != mt;
        bool above = leq(jn, gp) && gp != jn;
        if (!below || !above) return fail("term " + to_text(m) + " is not outside [meet, join]");
    }
    return rep;
}

long long standard_monomials(IntervalPoset const& iv, int k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    auto const& el = iv.elements();
    std::vector<long long> f(el.size(), 1);
    for (int step = 2; step <= k; ++step) {
        std::vector<long long> g(el.size(), 0);
        for (std::size_t i = 0; i < el.size(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (leq(el[j], el[i])) g[i] += f[j];
        f = std::move(g);
    }
    long long total = 0;
    for (auto v : f) total += v;
    return total;
}

std::vector<Monomial> standard_monomial_list(IntervalPoset const& iv, int k) {
    std::vector<Monomial> out;
    auto const& el = iv.elements();
    std::vector<std::size_t> chain;
    auto rec = [&](auto&& self, int left) -> void {
        if (left == 0) {
            std::vector<Monomial::Entry> en;
            for (auto i : chain) en.push_back({el[i], 1});
            out.push_back(Monomial::from_entries(std::move(en)));
            return;
        }
        std::size_t start = chain.empty() ? 0 : chain.back();
        for (std::size_t i = start; i < el.size(); ++i) {
            if (!chain.empty() && !leq(el[chain.back()], el[i])) continue;
            chain.push_back(i);
            self(self, left - 1);
            chain.pop_back();
        }
    };
    if (k >= 0) rec(rec, k);
    return out;
}

StraightenedLawReport straightened_law_check(IntervalPoset const& iv, int k_max) {
    StraightenedLawReport rep;
    auto G = bodies(build_relations(iv));
    rep.buchberger = buchberger_check(G);
    rep.ok = rep.buchberger.ok;
    for (int k = 0; k <= k_max; ++k) {
        StraightenedRow row{k, standard_monomials(iv, k), graded_quotient_dim(G, iv.elements(), k)};
        if (row.standard != row.quotient) rep.ok = false;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<ObstructionPair> enumerate_obstructions(IntervalPoset const& iv) {
    std::vector<ObstructionPair> out;
    auto const& el = iv.elements();
    std::size_t n = el.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::array<WeightLabel, 3> t = {el[i], el[j], el[k]};
                bool c01 = !comparable(t[0], t[1]), c02 = !comparable(t[0], t[2]), c12 = !comparable(t[1], t[2]);
                if (c01 + c02 + c12 != 2) continue;
                WeightLabel a, b, c;  // a clutters with b and with c
                if (!c12) {
                    a = t[0], b = t[1], c = t[2];
                } else if (!c02) {
                    a = t[1], b = t[0], c = t[2];
                } else {
                    a = t[2], b = t[0], c = t[1];
                }
                if (!leq(b, c)) std::swap(b, c);
                ObstructionPair p;
                p.first = {c, canonical_pair(a, b)};
                p.second = {b, canonical_pair(a, c)};
                p.product = Monomial::var(a) * Monomial::var(b) * Monomial::var(c);
                out.push_back(p);
            }
    return out;
}

CoverageReport obstruction_coverage_check(IntervalPoset const& iv) {
    CoverageReport rep;
    rep.pairs = enumerate_obstructions(iv);
    if (rep.pairs.empty()) return rep;
    LevelRange lv = iv.levels();
    using Key = std::pair<WeightLabel, Monomial>;
    auto key_less = [](Key const& x, Key const& y) {
        if (x.first != y.first) return x.first < y.first;
        return GrevlexLess{}(x.second, y.second);
    };
    std::map<int, std::vector<ObstructionPair*>> by_level;
    for (auto& p : rep.pairs) {
        int sum = 0;
        for (auto const& [a, e] : p.product.entries()) sum += a.level * e;
        by_level[sum].push_back(&p);
    }
    for (auto& [k, todo] : by_level) {
        for (auto a : all_finite_weights()) {
            FormalElement h = affine_fierz(a, k, lv);
            std::map<Key, Rational, decltype(key_less)> tensor(key_less);
            for (auto const& t : h.terms) {
                if (!iv.contains(t.var)) continue;
                ExactPoly rel = affine_quadric(t.rel, t.mode, lv);
                for (auto const& [m, d] : rel.terms()) {
                    if (!inside(iv, m)) continue;
                    tensor[{t.var, m}] += t.coeff * d;
                }
            }
            auto coef = [&](Obstruction const& o) {
                auto it = tensor.find({o.outer, Monomial::var(o.inner.first) * Monomial::var(o.inner.second)});
                return it == tensor.end() ? Rational(0) : it->second;
            };
            for (auto* p : todo) {
                if (p->label) continue;
                Rational x = coef(p->first), y = coef(p->second);
                if (abs(x) == 1 && x + y == 0) p->label = h.label;
            }
        }
    }
    for (auto const& p : rep.pairs)
        if (!p.label) {
            rep.ok = false;
            rep.uncovered.push_back(p);
        }
    return rep;
}

DimensionReport dimension_report(IntervalPoset const& iv) {
    DimensionReport d;
    d.chain_len = longest_chain(iv);
    d.ht_diff = ht(iv.hi()) - ht(iv.lo());
    d.pole_order = character_specialized(iv, all_ones()).pole_order_at_one();
    return d;
}

RegularSequenceReport regular_sequence_check(IntervalPoset const& iv, int d_max) {
    if (d_max < 2) throw std::invalid_argument("regular_sequence_check: d_max must be at least 2");
    RegularSequenceReport rep;
    auto G = bodies(build_relations(iv));
    auto const& vars = iv.elements();
    auto hilbert = [&]() {
        std::vector<long long> h;
        for (int k = 0; k <= d_max; ++k) h.push_back(graded_quotient_dim(G, vars, k));
        return h;
    };
    rep.hilbert.push_back(hilbert());
    for (int i = ht(iv.lo()); i <= ht(iv.hi()); ++i) {
        ExactPoly y;
        for (auto x : vars)
            if (ht(x) == i) y += ExactPoly::var(x);
        G.push_back(y);
        auto h = hilbert();
        auto const& prev = rep.hilbert.back();
        for (int k = 0; k <= d_max; ++k)
            if (h[k] != prev[k] - (k > 0 ? prev[k - 1] : 0)) rep.ok = false;
        rep.hilbert.push_back(std::move(h));
    }
    return rep;
}

std::string to_string(Obstruction const& o) {
    return "(" + to_string(o.outer) + ", (" + to_string(o.inner.first) + ", " + to_string(o.inner.second) + "))";
}

std::string relations_json(IntervalPoset const& iv, std::vector<AffineRelation> const& rels) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["lo"] = to_string(iv.lo());
    j["hi"] = to_string(iv.hi());
    j["clutters"] = clutters(iv).size();
    j["relations"] = nlohmann::ordered_json::array();
    for (auto const& r : rels)
        j["relations"].push_back({{"index", to_string(r.s)},
                                  {"mode", r.mode},
                                  {"clutter", {to_string(r.clutter.first), to_string(r.clutter.second)}},
                                  {"shape_ok", straightening_shape_check(r).ok},
                                  {"poly", to_text(r.body)}});
    return j.dump(2) + "\n";
}

std::string obstructions_json(IntervalPoset const& iv, CoverageReport const& rep) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["lo"] = to_string(iv.lo());
    j["hi"] = to_string(iv.hi());
    j["covered"] = rep.ok;
    j["pairs"] = nlohmann::ordered_json::array();
    for (auto const& p : rep.pairs)
        j["pairs"].push_back({{"label", p.label ? to_string(*p.label) : std::string()},
                              {"first", to_string(p.first)},
                              {"second", to_string(p.second)}});
    return j.dump(2) + "\n";
}

}  // namespace purespin
