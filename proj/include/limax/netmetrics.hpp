#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "limax/genotype.hpp"
#include "limax/network.hpp"
#include "limax/stats.hpp"
#include "limax/walker.hpp"

namespace limax {

/// Number of walks in which each node is an interior point (neither the
/// walk's start nor its terminal).
std::vector<std::uint32_t> centrality(const WalkSet& ws);
std::vector<std::uint32_t> centrality(std::uint64_t node_count, std::span<const Walk> walks);

/// Nodes that are neither sources nor global optima, ascending. Every
/// comparative statistic below runs over this pool.
std::vector<std::uint32_t> eligible_pool(std::span<const NodeAggregates> nodes, std::span<const Genotype> global_optima);

struct TopSet {
    double threshold = 0.0;
    std::vector<std::uint32_t> nodes; // ascending
};

/// Every node except the global optima, ascending. Sources stay in, with
/// viscosity 0, when ranking viscosities for a percentile threshold.
std::vector<std::uint32_t> non_optimal_nodes(std::uint64_t node_count, std::span<const Genotype> global_optima);

/// Nodes of `pool` whose value is >= the nearest-rank (1 - top_fraction)
/// percentile of the pool's values. Ties at the threshold are included.
TopSet top_fraction_nodes(std::span<const double> values, std::span<const std::uint32_t> pool, double top_fraction);
/// Threshold ranked over `ranked`, members taken from `members`.
TopSet top_fraction_nodes(std::span<const double> values, std::span<const std::uint32_t> ranked,
                          std::span<const std::uint32_t> members, double top_fraction);
inline TopSet top_quartile_nodes(std::span<const double> values, std::span<const std::uint32_t> pool) {
    return top_fraction_nodes(values, pool, 0.25);
}
inline TopSet top_quartile_nodes(std::span<const double> values, std::span<const std::uint32_t> ranked,
                                 std::span<const std::uint32_t> members) {
    return top_fraction_nodes(values, ranked, members, 0.25);
}

struct CentralityComparison {
    stats::Summary top;
    stats::Summary all;
    stats::Summary random; // |top| nodes drawn from the pool without replacement
};

CentralityComparison centrality_comparison(std::span<const std::uint32_t> centrality,
                                           std::span<const std::uint32_t> pool, const TopSet& top,
                                           std::uint64_t sample_seed);

struct Correlation {
    std::optional<double> pearson;
    std::optional<double> spearman;
};

Correlation viscosity_centrality_correlation(std::span<const std::uint32_t> centrality,
                                             std::span<const double> viscosity, std::span<const std::uint32_t> pool);

enum class EdgeBasis { Distinct, Traversal };

/// Node membership flags; empty means every node.
using NodeMask = std::vector<std::uint8_t>;
NodeMask mask_of(std::uint64_t node_count, std::span<const std::uint32_t> nodes);

/// Pearson correlation of (value(from), value(to)) over edges whose
/// endpoints both pass `include`. Traversal basis repeats an edge by its
/// multiplicity. nullopt when undefined (zero variance, < 2 edges).
std::optional<double> assortativity(const LimaxNetwork& net, std::span<const double> values,
                                    const NodeMask& include = {}, EdgeBasis basis = EdgeBasis::Distinct);

/// Mean assortativity after shuffling `values` among the included nodes.
struct PermutationBaseline {
    std::optional<double> mean;
    std::vector<double> samples;
};

PermutationBaseline permuted_assortativity(const LimaxNetwork& net, std::span<const double> values,
                                           const NodeMask& include, int permutations, std::uint64_t seed,
                                           EdgeBasis basis = EdgeBasis::Distinct);

struct EdgeMixing {
    std::uint64_t edges = 0;        // distinct edges with both endpoints included
    std::uint64_t double_edges = 0; // both endpoints in the top set
    std::uint64_t single_edges = 0; // exactly one endpoint in the top set
    double double_fraction = 0.0;
    double single_fraction = 0.0;
    std::optional<double> ratio; // double / single
};

EdgeMixing edge_mixing(const LimaxNetwork& net, const NodeMask& top, const NodeMask& include = {});

/// Mean Hamming distance over all unordered pairs; nullopt for < 2 nodes.
std::optional<double> massive_central(std::span<const std::uint32_t> nodes, int n);

} // namespace limax
