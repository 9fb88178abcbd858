#ifndef EXTREMAL_CLI_HPP
#define EXTREMAL_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/io.hpp"

namespace extremal {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_pass = 0, exit_check_failure = 1, exit_usage = 2 };

/// Named verifications selectable with --checks.
inline const std::vector<std::string> all_checks = {"construction", "lambda2",  "spectra",  "charpoly",  "graeffe",
                                                    "lemma10",      "packing",  "rigidity", "identities"};

/// "a..b" or "a"; throws usage_error otherwise (and on a > b).
std::pair<int, int> parse_int_range(std::string_view text);

/// "all" or a comma-separated subset of all_checks.
std::set<std::string> parse_checks(std::string_view text);

struct SweepSpec
{
    std::pair<int, int> m_range{1, 1};
    std::optional<std::pair<int, int>> d_range; ///< nullopt: 2m+2 .. 2m+8 per m
    std::set<std::string> checks;
    std::uint64_t seed = 0;
    int threads = 0; ///< 0: hardware concurrency
};

/// (m, d) pairs of the sweep with d >= 2m+2, sorted. Throws usage_error if empty.
std::vector<std::pair<int, int>> sweep_items(const SweepSpec& spec);

/// Checks on one (m, d). Each entry of the returned object has an "ok" field.
json verify_item(int m, int d, const std::set<std::string>& checks);

struct SweepResult
{
    json report;
    std::vector<GraeffeRow> graeffe_rows;
    bool ok = true;
};

/// Runs the sweep on a worker pool; the report is ordered by (m, d).
SweepResult run_sweep(const SweepSpec& spec);

/// Vertex limit for the exact-arithmetic oracle inside sweeps.
inline constexpr int verify_oracle_max_vertices = 128;

/// Entry point of the command-line tool; argv[0] is the program name.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace extremal

#endif
