#pragma once

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "purespin/richardson.hpp"
#include "purespin/weightlattice.hpp"

#ifndef PURESPIN_GOLDEN_DIR
#define PURESPIN_GOLDEN_DIR "tests/golden"
#endif

namespace testsupport {

using purespin::WeightLabel;

inline std::string golden_path(std::string const& name) { return std::string(PURESPIN_GOLDEN_DIR) + "/" + name; }

inline std::vector<std::string> golden_lines(std::string const& name) {
    std::ifstream in(golden_path(name));
    if (!in) throw std::runtime_error("cannot open golden file " + name);
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

inline WeightLabel label(std::string const& s) {
    auto a = purespin::parse_label(s);
    if (!a) throw std::runtime_error("bad label " + s);
    return *a;
}

// (outer, {inner pair in storage order})
using Entry = std::tuple<WeightLabel, WeightLabel, WeightLabel>;
using ObstructionTable = std::map<WeightLabel, std::set<Entry>>;

inline Entry entry(WeightLabel outer, WeightLabel a, WeightLabel b) {
    if (b < a) std::swap(a, b);
    return {outer, a, b};
}

// Lines "label | outer a b | outer a b".
inline ObstructionTable load_obstructions(std::string const& name) {
    ObstructionTable t;
    for (auto const& line : golden_lines(name)) {
        std::istringstream is(line);
        std::string lab, bar, o1, a1, b1, o2, a2, b2;
        is >> lab >> bar >> o1 >> a1 >> b1 >> bar >> o2 >> a2 >> b2;
        auto& s = t[label(lab)];
        s.insert(entry(label(o1), label(a1), label(b1)));
        s.insert(entry(label(o2), label(a2), label(b2)));
    }
    return t;
}

inline ObstructionTable table_of(std::vector<purespin::ObstructionPair> const& pairs) {
    ObstructionTable t;
    for (auto const& p : pairs) {
        if (!p.label) throw std::runtime_error("unlabelled obstruction pair");
        auto& s = t[*p.label];
        for (auto const& o : {p.first, p.second}) s.insert(entry(o.outer, o.inner.first, o.inner.second));
    }
    return t;
}

inline int level_sum(purespin::Monomial const& m) {
    int s = 0;
    for (auto const& [a, e] : m.entries()) s += a.level * e;
    return s;
}

}  // namespace testsupport
