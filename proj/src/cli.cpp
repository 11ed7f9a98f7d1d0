#include "purespin/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "purespin/charseries.hpp"
#include "purespin/richardson.hpp"
#include "purespin/spinalg.hpp"

namespace purespin::cli {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view s, char const* what) {
    std::string t = trim(s);
    if (t.empty()) throw ParseError(std::string("empty ") + what);
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(t, &used);
    } catch (std::exception const&) {
        throw ParseError(std::string("bad ") + what + " '" + t + "'");
    }
    if (used != t.size()) throw ParseError(std::string("bad ") + what + " '" + t + "'");
    return v;
}

Rational parse_rational(std::string_view s) {
    std::string t = trim(s);
    Rational r;
    if (t.empty() || r.set_str(t, 10) != 0) throw ParseError("bad rational '" + t + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + t + "'");
    r.canonicalize();
    return r;
}

json parse_json(std::string const& s) { return json::parse(s); }

json labels_json(std::vector<std::pair<WeightLabel, WeightLabel>> const& v) {
    json a = json::array();
    for (auto const& [x, y] : v) a.push_back({to_string(x), to_string(y)});
    return a;
}

template <class T>
std::set<T> as_set(std::vector<T> const& v) {
    return {v.begin(), v.end()};
}

struct Outcome {
    bool ok = true;
    std::string text;
};

// ---------------------------------------------------------------- commands

using Handler = std::function<Outcome(JobConfig const&, json&)>;

struct CommandSpec {
    std::string name;
    std::vector<OutputFormat> formats;
    Handler handler;
};

IntervalPoset interval(JobConfig const& cfg) {
    auto [lo, hi] = interval_of(cfg);
    return IntervalPoset(lo, hi);
}

Outcome cmd_hasse(JobConfig const& cfg, json& result) {
    std::vector<WeightLabel> nodes;
    std::vector<Cover> covers;
    bool ok = true;
    if (cfg.lo || cfg.hi) {
        IntervalPoset iv = interval(cfg);
        nodes = iv.elements();
        covers = iv.covers();
    } else {
        LevelRange w = cfg.window.value_or(LevelRange{0, 0});
        nodes = window_elements(w);
        covers = affine_covers(w);
        std::vector<Cover> regenerated;
        try {
            regenerated = generate_hasse(w);
        } catch (std::logic_error const&) {
            ok = false;
        }
        ok = ok && as_set(regenerated) == as_set(covers);
        result["regenerated_from_root_operators"] = ok;
    }
    if (cfg.format == OutputFormat::Dot) return {ok, hasse_to_dot(nodes, covers)};
    json h = parse_json(hasse_to_json(nodes, covers));
    result["nodes"] = h["nodes"];
    result["edges"] = h["edges"];
    return {ok, {}};
}

Outcome cmd_relations(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto rels = build_relations(iv);
    json r = parse_json(relations_json(iv, rels));
    bool ok = true;
    for (auto const& x : r["relations"]) ok = ok && x["shape_ok"].get<bool>();
    result["clutters"] = r["clutters"];
    result["bijection"] = true;
    result["relations"] = r["relations"];
    return {ok, {}};
}

Outcome cmd_groebner(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto G = bodies(build_relations(iv));
    auto rep = buchberger_check(G, cfg.order);
    result["order"] = cfg.order == MonomialOrder::Grevlex ? "grevlex" : "deglex";
    result["generators"] = G.size();
    json tips = json::array();
    for (auto const& g : G) tips.push_back(to_text(tip(g, cfg.order).monomial));
    result["tips"] = tips;
    result["pairs_total"] = rep.pairs_total;
    result["pairs_coprime"] = rep.pairs_coprime;
    result["pairs_reduced"] = rep.pairs_reduced;
    json failing = json::array();
    for (auto [i, j] : rep.failing) failing.push_back({i, j});
    result["failing"] = failing;
    return {rep.ok, {}};
}

Outcome cmd_fierz(JobConfig const& cfg, json& result) {
    LevelRange w = cfg.window.value_or(LevelRange{0, 0});
    bool ok = true;
    json items = json::array();
    for (int k = w.lo; k <= w.hi; ++k)
        for (auto a : all_finite_weights()) {
            FormalElement h = affine_fierz(a, k, w);
            FierzResidue res = w.lo == 0 && w.hi == 0 ? substitute_finite(h) : substitute_affine(h, w);
            ok = ok && res.zero();
            json missing = json::array();
            for (auto const& [s, l] : res.missing) missing.push_back(to_string(s) + "^" + std::to_string(l));
            items.push_back({{"label", to_string(h.label)},
                             {"terms", h.terms.size()},
                             {"zero", res.zero()},
                             {"residue", to_text(res.residue)},
                             {"missing", missing}});
        }
    result["identities"] = items;
    return {ok, {}};
}

Outcome cmd_straightened(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto rep = straightened_law_check(iv, cfg.k_max);
    result["buchberger_ok"] = rep.buchberger.ok;
    json rows = json::array();
    std::ostringstream csv;
    csv << "k,standard,quotient\n";
    for (auto const& r : rep.rows) {
        rows.push_back({{"k", r.k}, {"standard", r.standard}, {"quotient", r.quotient}});
        csv << r.k << "," << r.standard << "," << r.quotient << "\n";
    }
    result["rows"] = rows;
    return {rep.ok, cfg.format == OutputFormat::Csv ? csv.str() : std::string()};
}

Outcome cmd_obstructions(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto rep = obstruction_coverage_check(iv);
    json o = parse_json(obstructions_json(iv, rep));
    for (auto it = o.begin(); it != o.end(); ++it)
        if (it.key() != "schema_version" && it.key() != "lo" && it.key() != "hi") result[it.key()] = it.value();
    return {rep.ok, {}};
}

Outcome cmd_dims(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto d = dimension_report(iv);
    result["chain_len"] = d.chain_len;
    result["ht_diff"] = d.ht_diff;
    result["pole_order"] = d.pole_order;
    bool ok = d.chain_len == d.pole_order && d.chain_len == d.ht_diff + 1;
    std::ostringstream csv;
    csv << "chain_len,ht_diff,pole_order\n" << d.chain_len << "," << d.ht_diff << "," << d.pole_order << "\n";
    return {ok, cfg.format == OutputFormat::Csv ? csv.str() : std::string()};
}

std::string mono_text(LaurentMono const& m) {
    std::ostringstream os;
    os << "s^(";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << m[i];
    os << ") q^" << m[5];
    return os.str();
}

Outcome cmd_character(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    RationalChar ch = character(iv);
    Series direct = chain_series_direct(iv, cfg.k_max);
    Series via = ch.series(cfg.k_max);
    bool ok = via == direct;
    result["oracle_agrees"] = ok;
    if (cfg.specialize) {
        auto const& at = *cfg.specialize;
        SpecializedChar sc = specialize(ch, at).reduced();
        SpecSeries ser = sc.series(cfg.k_max);
        SpecSeries oracle = specialize(direct, at);
        ok = ok && ser == oracle;
        json point = json::array();
        for (auto const& x : at) point.push_back(x.get_str());
        result["specialization"] = point;
        result["numerator"] = sc.numerator_string();
        result["denominator"] = sc.denominator_string();
        result["pole_order_at_one"] = sc.pole_order_at_one();
        json coeffs = json::array();
        for (auto const& c : ser) coeffs.push_back(c.get_str());
        result["series"] = coeffs;
        if (cfg.format == OutputFormat::Csv) return {ok, series_csv(ser)};
        if (cfg.format == OutputFormat::Latex) return {ok, sc.latex() + "\n"};
        return {ok, {}};
    }
    json num = json::array();
    for (std::size_t k = 0; k < ch.numerator().size(); ++k)
        num.push_back({{"t", k}, {"coeff", ch.numerator()[k].str()}});
    json den = json::array();
    for (auto const& m : ch.denominator()) den.push_back(mono_text(m));
    result["numerator"] = num;
    result["denominator_factors"] = den;
    result["series"] = parse_json(series_json(via))["coefficients"];
    return {ok, {}};
}

Outcome cmd_delannoy(JobConfig const& cfg, json& result) {
    auto acc = delannoy_acceptance(cfg.r_max, cfg.k_max);
    auto gf = delannoy_generating_function_check(cfg.k_max);
    json polys = json::array();
    for (int n = 0; n <= cfg.r_max; ++n) {
        json row = json::array();
        for (auto const& c : delannoy(n)) row.push_back(c.get_str());
        polys.push_back({{"n", n}, {"delta", to_string(delta_J(n))}, {"coefficients", row}});
    }
    result["delannoy"] = polys;
    result["characters_match"] = acc.ok;
    result["generating_function_match"] = gf.ok;
    json failures = json::array();
    for (auto const* rep : {&acc, &gf})
        for (auto const& f : rep->failures) failures.push_back(f);
    result["failures"] = failures;
    return {acc.ok && gf.ok, {}};
}

Outcome cmd_weyl(JobConfig const& cfg, json& result) {
    LevelRange w = cfg.window.value_or(LevelRange{0, 1});
    auto const& g = weyl_generators();
    std::vector<SignedPermutation> five(g.begin(), g.begin() + 5), six(g.begin(), g.end());
    auto fin = weyl_graph(five, window_elements({0, 0}));
    bool fin_ok = as_set(fin) == as_set(undirected(affine_covers({0, 0})));
    auto aff = weyl_graph(six, window_elements(w));
    bool aff_ok = as_set(aff) == as_set(undirected(affine_covers(w)));
    IntervalPoset iv = interval(cfg);
    auto orbit = weyl_orbit_check(iv, six);
    result["finite_graph_matches"] = fin_ok;
    result["finite_edges"] = fin.size();
    result["window_graph_matches"] = aff_ok;
    result["window_edges"] = aff.size();
    result["orbit"] = {{"clutters", orbit.clutters},
                       {"orbit_size", orbit.orbit_size},
                       {"outside", labels_json(orbit.outside)}};
    return {fin_ok && aff_ok && orbit.ok, {}};
}

Outcome cmd_regseq(JobConfig const& cfg, json& result) {
    IntervalPoset iv = interval(cfg);
    auto rep = regular_sequence_check(iv, cfg.k_max);
    result["degree"] = cfg.k_max;
    result["hilbert"] = rep.hilbert;
    return {rep.ok, {}};
}

std::vector<CommandSpec> const& specs() {
    using F = OutputFormat;
    static std::vector<CommandSpec> const v = {
        {"hasse", {F::Json, F::Dot}, cmd_hasse},
        {"relations", {F::Json}, cmd_relations},
        {"groebner-check", {F::Json}, cmd_groebner},
        {"fierz-check", {F::Json}, cmd_fierz},
        {"straightened-check", {F::Json, F::Csv}, cmd_straightened},
        {"obstructions", {F::Json}, cmd_obstructions},
        {"dims", {F::Json, F::Csv}, cmd_dims},
        {"character", {F::Json, F::Csv, F::Latex}, cmd_character},
        {"delannoy-check", {F::Json}, cmd_delannoy},
        {"weyl-check", {F::Json}, cmd_weyl},
        {"regseq-check", {F::Json}, cmd_regseq},
    };
    return v;
}

CommandSpec const* find_spec(std::string const& name) {
    for (auto const& s : specs())
        if (s.name == name) return &s;
    return nullptr;
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Dot: return "dot";
        case OutputFormat::Latex: return "latex";
    }
    return "json";
}

json config_json(JobConfig const& cfg) {
    json c;
    c["lo"] = cfg.lo ? json(to_string(*cfg.lo)) : json(nullptr);
    c["hi"] = cfg.hi ? json(to_string(*cfg.hi)) : json(nullptr);
    c["window"] = cfg.window ? json({cfg.window->lo, cfg.window->hi}) : json(nullptr);
    c["k_max"] = cfg.k_max;
    c["r_max"] = cfg.r_max;
    if (cfg.specialize) {
        json at = json::array();
        for (auto const& x : *cfg.specialize) at.push_back(x.get_str());
        c["specialize"] = at;
    } else {
        c["specialize"] = nullptr;
    }
    c["format"] = format_name(cfg.format);
    c["order"] = cfg.order == MonomialOrder::Grevlex ? "grevlex" : "deglex";
    return c;
}

}  // namespace

std::vector<std::string> const& commands() {
    static std::vector<std::string> const names = [] {
        std::vector<std::string> n;
        for (auto const& s : specs()) n.push_back(s.name);
        return n;
    }();
    return names;
}

OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "dot") return OutputFormat::Dot;
    if (s == "latex") return OutputFormat::Latex;
    throw ParseError("unknown format '" + std::string(s) + "'");
}

std::string extension(OutputFormat f) {
    switch (f) {
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
        case OutputFormat::Dot: return "dot";
        case OutputFormat::Latex: return "tex";
    }
    return "json";
}

MonomialOrder parse_order(std::string_view s) {
    if (s == "grevlex") return MonomialOrder::Grevlex;
    if (s == "deglex") return MonomialOrder::Deglex;
    throw ParseError("unknown monomial order '" + std::string(s) + "'");
}

LevelRange parse_window(std::string_view s) {
    auto dots = s.find("..");
    LevelRange w;
    if (dots == std::string_view::npos) {
        w.lo = w.hi = parse_int(s, "window");
    } else {
        w.lo = parse_int(s.substr(0, dots), "window start");
        w.hi = parse_int(s.substr(dots + 2), "window end");
    }
    if (w.empty()) throw ParseError("empty window '" + std::string(s) + "'");
    return w;
}

std::array<Rational, 6> parse_specialization(std::string_view s) {
    std::array<std::optional<Rational>, 6> at;
    std::string text(s);
    std::istringstream is(text);
    for (std::string item; std::getline(is, item, ',');) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("specialization item '" + item + "' lacks '='");
        std::string var = trim(std::string_view(item).substr(0, eq));
        Rational v = parse_rational(std::string_view(item).substr(eq + 1));
        if (v == 0) throw ParseError("specialization value for " + var + " must be nonzero");
        if (var == "s") {
            for (int i = 0; i < 5; ++i) at[i] = v;
        } else if (var == "q") {
            at[5] = v;
        } else if (var.size() == 2 && var[0] == 's' && var[1] >= '1' && var[1] <= '5') {
            at[var[1] - '1'] = v;
        } else {
            throw ParseError("unknown specialization variable '" + var + "'");
        }
    }
    std::array<Rational, 6> out;
    for (int i = 0; i < 6; ++i) {
        if (!at[i]) throw ParseError(std::string("specialization leaves ") + (i < 5 ? "s" + std::to_string(i + 1) : "q") +
                                     " unassigned");
        out[i] = *at[i];
    }
    return out;
}

WeightLabel parse_endpoint(std::string_view s) {
    auto a = parse_label(trim(s));
    if (!a) throw ParseError("bad weight label '" + std::string(s) + "' (expected e.g. (12)@1)");
    return *a;
}

std::string default_output_dir() {
    char const* env = std::getenv("PURESPIN_OUT_DIR");
    return env && *env ? std::string(env) : std::string(".");
}

std::pair<WeightLabel, WeightLabel> interval_of(JobConfig const& cfg) {
    if (cfg.lo || cfg.hi) {
        if (!cfg.lo || !cfg.hi) throw ParseError("--lo and --hi must be given together");
        return {*cfg.lo, *cfg.hi};
    }
    if (cfg.window) return {{FiniteWeight::w0, cfg.window->lo}, {FiniteWeight::w1, cfg.window->hi}};
    return {{FiniteWeight::w0, 0}, {FiniteWeight::w1, 0}};
}

void validate(JobConfig const& cfg) {
    CommandSpec const* spec = find_spec(cfg.command);
    if (!spec) throw ParseError("unknown command '" + cfg.command + "'");
    if (std::find(spec->formats.begin(), spec->formats.end(), cfg.format) == spec->formats.end())
        throw ParseError("command " + cfg.command + " cannot write " + format_name(cfg.format));
    if (cfg.format != OutputFormat::Json && cfg.command == "character" && !cfg.specialize)
        throw ParseError("character --format " + format_name(cfg.format) + " needs --specialize");
    if (cfg.k_max < 0 || cfg.r_max < 0) throw ParseError("--k-max and --r-max must be nonnegative");
    if (cfg.command == "regseq-check" && cfg.k_max < 2) throw ParseError("regseq-check needs --k-max >= 2");
    auto [lo, hi] = interval_of(cfg);
    if (!leq(lo, hi)) throw ParseError("interval endpoints are not ordered: " + to_string(lo) + " > " + to_string(hi));
}

std::string render(JobConfig const& cfg, int* exit_code) {
    validate(cfg);
    CommandSpec const* spec = find_spec(cfg.command);
    json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = cfg.command;
    report["config"] = config_json(cfg);
    auto [lo, hi] = interval_of(cfg);
    report["interval"] = {to_string(lo), to_string(hi)};
    json result = json::object();
    Outcome out;
    try {
        out = spec->handler(cfg, result);
    } catch (std::exception const& e) {
        out.ok = false;
        result["error"] = e.what();
        out.text.clear();
    }
    *exit_code = out.ok ? kExitOk : kExitProperty;
    if (!out.text.empty()) return out.text;
    report["ok"] = out.ok;
    report["result"] = result;
    return report.dump(2) + "\n";
}

RunResult run(std::string const& command, JobConfig const& cfg_in) {
    JobConfig cfg = cfg_in;
    cfg.command = command;
    RunResult res;
    std::string text;
    try {
        text = render(cfg, &res.exit_code);
    } catch (ParseError const& e) {
        return {kExitParse, {}, e.what()};
    }
    std::filesystem::path path = cfg.out.empty()
                                     ? std::filesystem::path(default_output_dir()) / (command + "." + extension(cfg.format))
                                     : std::filesystem::path(cfg.out);
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream f(path, std::ios::binary);
    if (!f) return {kExitParse, {}, "cannot write " + path.string()};
    f << text;
    res.artifact = path.string();
    res.message = command + ": " + (res.exit_code == kExitOk ? "ok" : "property check failed") + ", wrote " +
                  res.artifact;
    return res;
}

}  // namespace purespin::cli
