#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "limax/genotype.hpp"
#include "limax/landscapes.hpp"
#include "limax/network.hpp"

namespace limax {

/// Fraction of the n one-bit neighbours that are strictly less fit.
double plf(const Landscape& landscape, Genotype g);
std::vector<double> all_plf(const Landscape& landscape);

inline bool is_plf_local_optimum(double plf_value) { return plf_value == 1.0; }

/// Local optimum score from a node's in/out step-size statistics.
/// 0 for a node nothing enters; 7 for a node nothing leaves.
double los(const NodeAggregates& node);

struct PullValues {
    double degree = 0.0;
    double step_strength = 0.0;
    double invstep_strength = 0.0; // equals the node's viscosity

    bool operator==(const PullValues&) const = default;
};

/// Per measure: 0 if the in-side is 0, the in-value if the out-side is 0,
/// otherwise in / out.
PullValues pull_values(const NodeAggregates& node);

enum class PullMeasure { Degree, StepStrength, InvstepStrength };
enum class Reference { Plf, Los };

std::string_view to_string(PullMeasure m);
std::string_view to_string(Reference r);
inline constexpr PullMeasure kPullMeasures[] = {PullMeasure::Degree, PullMeasure::StepStrength,
                                                 PullMeasure::InvstepStrength};

double pull_of(const PullValues& p, PullMeasure m);

struct PullEvaluation {
    PullMeasure measure = PullMeasure::Degree;
    Reference reference = Reference::Plf;
    std::uint64_t evaluated_nodes = 0;
    std::uint64_t false_positives = 0;
    double error_rate = 0.0;
    std::optional<std::uint64_t> edit_distance; // los reference only
    std::optional<double> rank_distance;         // los reference only
    bool degenerate = false;                     // nothing left after filtering
};

/// Scores a reference sequence already in pull order. For Plf the values are
/// binarized at 1.0. `node_count` is the error-rate denominator.
PullEvaluation evaluate_reference_sequence(std::span<const double> reference_in_pull_order, Reference reference,
                                           std::uint64_t node_count);

/// Nodes with nonzero pull under `measure`, excluding the global optima,
/// ordered by decreasing local-optimum potential (descending pull for degree
/// and invstep-strength, ascending for step-strength); ties by node id.
std::vector<std::uint32_t> pull_order(std::span<const PullValues> pulls, PullMeasure measure,
                                      std::span<const Genotype> global_optima);

/// `reference_values` holds plf or los per node, matching `reference`.
PullEvaluation evaluate_pull_measure(std::span<const PullValues> pulls, std::span<const double> reference_values,
                                     std::span<const Genotype> global_optima, PullMeasure measure,
                                     Reference reference);

struct LocalOptimaCounts {
    std::uint64_t plf_count = 0;
    std::uint64_t los_count = 0;
    std::optional<double> mean_plf_of_los_positive;
    std::int64_t difference = 0; // plf_count - los_count
    bool los_within_plf = true;  // every los-positive node has plf == 1
};

LocalOptimaCounts count_local_optima(std::span<const double> plf_values, std::span<const double> los_values);

/// Everything the local-optimum stage derives per node.
struct LocalOptimaTable {
    std::vector<double> plf;
    std::vector<double> los;
    std::vector<PullValues> pulls;
};

LocalOptimaTable local_optima_table(const Landscape& landscape, std::span<const NodeAggregates> nodes);

void write_local_optima_csv(const LocalOptimaTable& table, std::ostream& out);
LocalOptimaTable read_local_optima_csv(std::istream& in);

void write_pull_evaluations_csv(std::string_view instance, std::span<const PullEvaluation> evals, std::ostream& out,
                                bool header = true);

} // namespace limax
