#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "purespin/polyring.hpp"
#include "purespin/weightlattice.hpp"

namespace purespin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitProperty = 3;
inline constexpr int kReportSchemaVersion = 1;

enum class OutputFormat { Json, Csv, Dot, Latex };

// Bad command line or configuration; maps to kExitParse.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct JobConfig {
    std::string command;
    std::optional<WeightLabel> lo;
    std::optional<WeightLabel> hi;
    std::optional<LevelRange> window;
    int k_max = 4;
    int r_max = 4;
    // s1..s5, q
    std::optional<std::array<Rational, 6>> specialize;
    OutputFormat format = OutputFormat::Json;
    // groebner-check only
    MonomialOrder order = MonomialOrder::Grevlex;
    // Empty: <default_output_dir()>/<command>.<ext>
    std::string out;
};

struct RunResult {
    int exit_code = kExitOk;
    std::string artifact;  // path written, empty if none
    std::string message;   // one line for stderr
};

std::vector<std::string> const& commands();

OutputFormat parse_format(std::string_view s);
MonomialOrder parse_order(std::string_view s);
std::string extension(OutputFormat f);
// "a..b" or a single level "a".
LevelRange parse_window(std::string_view s);
// Comma separated "s=v", "s1=v" .. "s5=v", "q=v" with integer or p/q values;
// every variable must end up assigned.
std::array<Rational, 6> parse_specialization(std::string_view s);
WeightLabel parse_endpoint(std::string_view s);

// PURESPIN_OUT_DIR or ".".
std::string default_output_dir();

// Throws ParseError on an unknown command, a missing or inverted interval, or
// a format the command cannot produce.
void validate(JobConfig const& cfg);

// The interval the command works on: lo/hi if given, else [(0)@a,(1)@b] from
// the window, else [(0),(1)].
std::pair<WeightLabel, WeightLabel> interval_of(JobConfig const& cfg);

// Computes the report, writes it and returns the exit status.
RunResult run(std::string const& command, JobConfig const& cfg);

// The report text without writing it; exit status in *exit_code.
std::string render(JobConfig const& cfg, int* exit_code);

}  // namespace purespin::cli
