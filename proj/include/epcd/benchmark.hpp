#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "epcd/graph.hpp"
#include "epcd/labels.hpp"
#include "epcd/models.hpp"
#include "epcd/objectives.hpp"
#include "epcd/spectral.hpp"

namespace epcd {

enum class MethodKind { EP, AEP, SCR, LES };

struct Method {
    MethodKind kind = MethodKind::EP;
    Criterion criterion = Criterion::BM;  ///< used by EP only

    /// "ep-bm", "aep", "scr", "les", ...
    std::string name() const;
    bool operator==(const Method&) const = default;
};

/// Parses "ep-bm", "ep-dc", "ep-ng", "ep-ex", "aep", "scr" or "les".
Method parse_method(std::string_view name);

/// Expands a methods list against a criteria list: a bare "ep" becomes one EP method per
/// criterion; other entries pass through.
std::vector<Method> expand_methods(const std::vector<std::string>& methods, const std::vector<std::string>& criteria);

struct MethodParams {
    double epsilon = kDefaultEpsilon;
    double tol = kDefaultTolerance;
    std::size_t restarts = 40;
    std::uint64_t seed = 1;
};

struct MethodOutcome {
    Labels labels;
    std::size_t candidates_evaluated = 0;
    std::optional<double> objective_value;
};

/// Runs one detection method on a graph.
MethodOutcome run_method(const Graph& graph, const Method& method, const MethodParams& params);

/// One (method, replication) result of a simulation run.
struct BenchmarkRow {
    std::string method;
    std::string criterion;  ///< "-" for methods without a criterion
    std::size_t n = 0;
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    double w1 = 0.0;
    double w2 = 0.0;
    double r = 0.0;
    double lambda = 0.0;
    double gamma = 0.0;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::size_t rep = 0;
    double nmi = 0.0;
    double misclustered = 0.0;
    double wall_ms = 0.0;
    std::size_t candidates = 0;
};

inline constexpr std::string_view kCsvSchema = "epcd-bench-v1";

/// Header line (without newline). The first column is always "schema".
std::string csv_header();
std::string csv_row(const BenchmarkRow& row);
void write_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows);
std::vector<BenchmarkRow> read_csv(std::istream& in);

struct SimulationPlan {
    SimConfig config;
    std::vector<Method> methods;
    std::vector<double> r_grid;       ///< empty: config.r only
    std::vector<double> lambda_grid;  ///< empty: config.lambda only
    std::size_t reps = 100;
    std::uint64_t seed = 1;
    std::size_t jobs = 1;
    MethodParams params;
    /// Record wall-clock milliseconds; when false wall_ms is 0 and output is reproducible
    /// byte for byte.
    bool timing = false;
};

/// Validates every grid point (feasibility of P) before doing any work, then runs
/// reps replications per grid point with seeds derived from (seed, grid index, rep).
/// Rows are ordered by grid point, replication, then method regardless of jobs.
std::vector<BenchmarkRow> run_simulation(const SimulationPlan& plan);

struct MethodSummary {
    std::string method;
    double r = 0.0;
    double lambda = 0.0;
    std::size_t count = 0;
    double mean_nmi = 0.0;
    double sd_nmi = 0.0;
    double mean_misclustered = 0.0;
};

/// Per (grid point, method) aggregates in first-appearance order.
std::vector<MethodSummary> summarize(const std::vector<BenchmarkRow>& rows);

}  // namespace epcd
