#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "limax/stats.hpp"
#include "limax/walker.hpp"

namespace limax {

/// Run-length collapse of equal consecutive steps.
std::vector<int> compress(std::span<const int> steps);

struct WalkMetrics {
    int wlen = 0;
    int cwlen = 0;
    int wdist = 0;
    int cwdist = 0;
    std::optional<double> cr1; // cwlen / wlen, undefined for an empty walk
    std::optional<double> cr2; // cwdist / wdist
    int wvar = 0;              // distinct step sizes
    int step_range = 0;        // max step - min step
    int adaptive_length = 0;   // longest run of equal steps
    bool hierarchical = false; // compressed steps strictly increase and cwlen > 1

    bool operator==(const WalkMetrics&) const = default;
};

WalkMetrics step_metrics(std::span<const int> steps);
WalkMetrics walk_metrics(const WalkView& walk);
WalkMetrics walk_metrics(const Walk& walk);

std::vector<WalkMetrics> all_walk_metrics(const WalkSet& ws);

/// Per-instance aggregates over one walk per start.
///
/// wlen, cwlen, wdist and cwdist are summarized over every walk; cr1, cr2,
/// wvar, step_range and adaptive_length only over walks with wlen > 0.
/// whier divides by all walks.
struct WalkSetSummary {
    std::string problem_id;
    std::uint64_t walks = 0;
    std::uint64_t nonempty_walks = 0;
    std::uint64_t hierarchical_walks = 0;
    std::uint64_t total_moves = 0;
    double whier = 0.0;
    int max_adaptive_length = 0;
    std::optional<double> mean_step_size; // total distance / total moves

    std::optional<stats::Summary> wlen, cwlen, wdist, cwdist;
    std::optional<stats::Summary> cr1, cr2, wvar, step_range, adaptive_length;
};

WalkSetSummary aggregate_walks(std::span<const WalkMetrics> metrics, std::string problem_id = {});
WalkSetSummary aggregate_walkset(const WalkSet& ws, std::span<const WalkMetrics> metrics);

/// Column order of the per-instance summary CSV; stable across versions.
std::vector<std::string> walk_summary_columns();
std::vector<std::string> walk_summary_row(const WalkSetSummary& s);
void write_walk_summary_csv(std::span<const WalkSetSummary> rows, std::ostream& out);

} // namespace limax
