#include "limax/netmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "limax/errors.hpp"
#include "limax/rng.hpp"

namespace limax {

namespace {

template <typename Moves>
void count_interior(std::vector<std::uint32_t>& out, const Moves& moves) {
    // Walks are self-avoiding, so each interior node occurs once per walk.
    for (std::size_t i = 0; i + 1 < moves.size(); ++i) ++out.at(moves[i].to.bits);
}

std::vector<double> gather(std::span<const double> values, std::span<const std::uint32_t> nodes) {
    std::vector<double> out;
    out.reserve(nodes.size());
    for (auto v : nodes) out.push_back(values[v]);
    return out;
}

std::vector<double> gather(std::span<const std::uint32_t> values, std::span<const std::uint32_t> nodes) {
    std::vector<double> out;
    out.reserve(nodes.size());
    for (auto v : nodes) out.push_back(values[v]);
    return out;
}

bool included(const NodeMask& mask, std::uint32_t v) { return mask.empty() || mask[v]; }

// Partial Fisher-Yates: the first k entries become a uniform sample.
void sample_prefix(std::vector<std::uint32_t>& items, std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(items.size() - i));
        std::swap(items[i], items[j]);
    }
}

} // namespace

std::vector<std::uint32_t> centrality(const WalkSet& ws) {
    std::vector<std::uint32_t> out(ws.size(), 0);
    for (std::uint64_t g = 0; g < ws.size(); ++g) count_interior(out, ws.walk(g).moves);
    return out;
}

std::vector<std::uint32_t> centrality(std::uint64_t node_count, std::span<const Walk> walks) {
    std::vector<std::uint32_t> out(node_count, 0);
    for (const auto& w : walks) count_interior(out, w.moves);
    return out;
}

std::vector<std::uint32_t> eligible_pool(std::span<const NodeAggregates> nodes, std::span<const Genotype> global_optima) {
    std::vector<std::uint32_t> pool;
    for (std::uint32_t v = 0; v < nodes.size(); ++v) {
        if (nodes[v].is_source) continue;
        if (std::find(global_optima.begin(), global_optima.end(), Genotype{v}) != global_optima.end()) continue;
        pool.push_back(v);
    }
    return pool;
}

std::vector<std::uint32_t> non_optimal_nodes(std::uint64_t node_count, std::span<const Genotype> global_optima) {
    std::vector<std::uint32_t> nodes;
    nodes.reserve(node_count);
    for (std::uint32_t v = 0; v < node_count; ++v)
        if (std::find(global_optima.begin(), global_optima.end(), Genotype{v}) == global_optima.end()) nodes.push_back(v);
    return nodes;
}

TopSet top_fraction_nodes(std::span<const double> values, std::span<const std::uint32_t> pool, double top_fraction) {
    return top_fraction_nodes(values, pool, pool, top_fraction);
}

TopSet top_fraction_nodes(std::span<const double> values, std::span<const std::uint32_t> ranked,
                          std::span<const std::uint32_t> members, double top_fraction) {
    const auto pool = ranked;
    if (pool.empty()) throw ParameterError("top_fraction_nodes: empty pool");
    if (!(top_fraction > 0.0 && top_fraction <= 1.0)) throw ParameterError("top_fraction must be in (0, 1]");
    auto sorted = gather(values, pool);
    std::sort(sorted.begin(), sorted.end());
    // Nearest rank: smallest value with at least p * m values at or below it.
    const double p = 1.0 - top_fraction;
    auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(sorted.size()) - 1e-9));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    TopSet top;
    top.threshold = sorted[rank - 1];
    for (auto v : members)
        if (values[v] >= top.threshold) top.nodes.push_back(v);
    return top;
}

CentralityComparison centrality_comparison(std::span<const std::uint32_t> centrality,
                                           std::span<const std::uint32_t> pool, const TopSet& top,
                                           std::uint64_t sample_seed) {
    if (pool.empty() || top.nodes.empty()) throw ParameterError("centrality_comparison: empty pool or top set");
    if (top.nodes.size() > pool.size()) throw ParameterError("centrality_comparison: top set larger than pool");
    CentralityComparison c;
    c.top = stats::summarize(gather(centrality, top.nodes));
    c.all = stats::summarize(gather(centrality, pool));
    std::vector<std::uint32_t> sample(pool.begin(), pool.end());
    Rng rng(sample_seed);
    sample_prefix(sample, top.nodes.size(), rng);
    sample.resize(top.nodes.size());
    c.random = stats::summarize(gather(centrality, sample));
    return c;
}

Correlation viscosity_centrality_correlation(std::span<const std::uint32_t> centrality,
                                             std::span<const double> viscosity, std::span<const std::uint32_t> pool) {
    const auto x = gather(viscosity, pool);
    const auto y = gather(centrality, pool);
    return Correlation{stats::pearson(x, y), stats::spearman(x, y)};
}

NodeMask mask_of(std::uint64_t node_count, std::span<const std::uint32_t> nodes) {
    NodeMask mask(node_count, 0);
    for (auto v : nodes) mask.at(v) = 1;
    return mask;
}

std::optional<double> assortativity(const LimaxNetwork& net, std::span<const double> values, const NodeMask& include,
                                    EdgeBasis basis) {
    if (values.size() != net.node_count()) throw ParameterError("assortativity: one value per node required");
    auto weight_of = [&](const Edge& e) {
        return basis == EdgeBasis::Distinct ? 1.0 : static_cast<double>(e.multiplicity);
    };
    auto kept = [&](const Edge& e) { return included(include, e.from) && included(include, e.to); };
    double w = 0.0, sx = 0.0, sy = 0.0;
    std::uint64_t edges = 0;
    for (const auto& e : net.edges()) {
        if (!kept(e)) continue;
        const double weight = weight_of(e);
        ++edges;
        w += weight;
        sx += weight * values[e.from];
        sy += weight * values[e.to];
    }
    if (edges < 2) return std::nullopt;
    const double mx = sx / w;
    const double my = sy / w;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (const auto& e : net.edges()) {
        if (!kept(e)) continue;
        const double weight = weight_of(e);
        const double dx = values[e.from] - mx;
        const double dy = values[e.to] - my;
        cov += weight * dx * dy;
        vx += weight * dx * dx;
        vy += weight * dy * dy;
    }
    if (!(vx > 0.0) || !(vy > 0.0)) return std::nullopt;
    return std::clamp(cov / std::sqrt(vx * vy), -1.0, 1.0);
}

PermutationBaseline permuted_assortativity(const LimaxNetwork& net, std::span<const double> values,
                                           const NodeMask& include, int permutations, std::uint64_t seed,
                                           EdgeBasis basis) {
    std::vector<std::uint32_t> nodes;
    for (std::uint32_t v = 0; v < net.node_count(); ++v)
        if (included(include, v)) nodes.push_back(v);
    PermutationBaseline out;
    std::vector<double> shuffled(values.begin(), values.end());
    for (int p = 0; p < permutations; ++p) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(p)));
        auto order = nodes;
        sample_prefix(order, order.size(), rng);
        for (std::size_t i = 0; i < nodes.size(); ++i) shuffled[nodes[i]] = values[order[i]];
        if (auto r = assortativity(net, shuffled, include, basis)) out.samples.push_back(*r);
    }
    if (!out.samples.empty()) {
        double sum = 0.0;
        for (double r : out.samples) sum += r;
        out.mean = sum / static_cast<double>(out.samples.size());
    }
    return out;
}

EdgeMixing edge_mixing(const LimaxNetwork& net, const NodeMask& top, const NodeMask& include) {
    EdgeMixing m;
    const bool no_top = top.empty();
    for (const auto& e : net.edges()) {
        if (!included(include, e.from) || !included(include, e.to)) continue;
        ++m.edges;
        if (no_top) continue;
        const int hits = (top[e.from] ? 1 : 0) + (top[e.to] ? 1 : 0);
        if (hits == 2) ++m.double_edges;
        if (hits == 1) ++m.single_edges;
    }
    if (m.edges > 0) {
        m.double_fraction = static_cast<double>(m.double_edges) / static_cast<double>(m.edges);
        m.single_fraction = static_cast<double>(m.single_edges) / static_cast<double>(m.edges);
    }
    if (m.single_edges > 0) m.ratio = static_cast<double>(m.double_edges) / static_cast<double>(m.single_edges);
    return m;
}

std::optional<double> massive_central(std::span<const std::uint32_t> nodes, int n) {
    if (nodes.size() < 2) return std::nullopt;
    // Each locus contributes ones * zeros differing pairs.
    double total = 0.0;
    const double m = static_cast<double>(nodes.size());
    for (int i = 0; i < n; ++i) {
        double ones = 0.0;
        for (auto v : nodes) ones += (v >> i) & 1U;
        total += ones * (m - ones);
    }
    return total / (m * (m - 1.0) / 2.0);
}

} // namespace limax
