#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "limax/genotype.hpp"
#include "limax/walker.hpp"

namespace limax {

/// A distinct ordered pair (from, to) with the number of walk moves that
/// traversed it. The step label is always hamming(from, to).
struct Edge {
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    std::uint64_t multiplicity = 0;

    int step() const noexcept { return std::popcount(from ^ to); }
    bool operator==(const Edge&) const = default;
};

/// Directed weighted multigraph over all 2^n genotypes built from walks.
/// Immutable after construction.
class LimaxNetwork {
public:
    /// Edges must be distinct; they are sorted by (from, to) on construction.
    LimaxNetwork(int n, std::vector<Edge> edges);

    int n() const noexcept { return n_; }
    std::uint64_t node_count() const noexcept { return space_size(n_); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::uint64_t total_traversals() const noexcept { return traversals_; }

    std::span<const Edge> out_edges(std::uint32_t node) const;
    /// Indices into edges() of the edges ending at `node`.
    std::span<const std::uint32_t> in_edge_ids(std::uint32_t node) const;
    /// 0 when no walk moved from -> to.
    std::uint64_t multiplicity(std::uint32_t from, std::uint32_t to) const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> out_offsets_;
    std::vector<std::uint64_t> in_offsets_;
    std::vector<std::uint32_t> in_ids_;
    std::uint64_t traversals_ = 0;
};

/// Throws CorruptionError if a recorded step differs from the Hamming
/// distance of its endpoints.
LimaxNetwork build_network(const WalkSet& ws);
LimaxNetwork build_network(int n, std::span<const Walk> walks);

/// Per-node traversal-counted aggregates. Step statistics of an empty side are 0.
struct NodeAggregates {
    std::uint64_t in_degree = 0;
    std::uint64_t out_degree = 0;
    double in_step_strength = 0.0;
    double out_step_strength = 0.0;
    double in_invstep_strength = 0.0;
    double out_invstep_strength = 0.0;
    double viscosity = 0.0;
    bool is_source = false;
    bool is_sink = false;
    int in_max = 0;
    double in_avg = 0.0;
    int in_mode = 0;
    int out_min = 0;
    double out_avg = 0.0;
    int out_mode = 0;

    bool operator==(const NodeAggregates&) const = default;
};

/// in / out invstep-strength; the in-value when nothing leaves; 0 for sources.
double viscosity(double in_invstep_strength, double out_invstep_strength);

std::vector<NodeAggregates> node_aggregates(const LimaxNetwork& net);

struct NetworkCounts {
    std::uint64_t unique_edges = 0;
    std::uint64_t source_count = 0;
    std::uint64_t sink_count = 0;
    std::uint64_t component_count = 0; // weakly connected, over all 2^n nodes

    bool operator==(const NetworkCounts&) const = default;
};

NetworkCounts network_counts(const LimaxNetwork& net);

/// (v, fraction of values >= v) for each distinct v ascending.
std::vector<std::pair<double, double>> reversed_cumulative_distribution(std::span<const double> values);

/// `# n=<bits>` comment line, then `from,to,step,multiplicity` rows.
void write_edges_csv(const LimaxNetwork& net, std::ostream& out);
LimaxNetwork read_edges_csv(std::istream& in);
void write_graphml(const LimaxNetwork& net, std::ostream& out);

void write_node_aggregates_csv(std::span<const NodeAggregates> nodes, std::ostream& out);
std::vector<NodeAggregates> read_node_aggregates_csv(std::istream& in);

} // namespace limax
