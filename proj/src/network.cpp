#include "limax/network.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "limax/csv.hpp"
#include "limax/errors.hpp"

namespace limax {

LimaxNetwork::LimaxNetwork(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1 || n_ > kMaxBits) throw ParameterError("LimaxNetwork: n out of range");
    const std::uint64_t size = space_size(n_);
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.from, a.to) < std::pair(b.from, b.to); });
    out_offsets_.assign(size + 1, 0);
    in_offsets_.assign(size + 1, 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        if (e.from >= size || e.to >= size) throw CorruptionError("edge endpoint outside the search space");
        if (e.from == e.to) throw CorruptionError("self loop in walk network");
        if (e.multiplicity == 0) throw CorruptionError("edge with zero multiplicity");
        if (i > 0 && edges_[i - 1].from == e.from && edges_[i - 1].to == e.to)
            throw CorruptionError("duplicate edge in walk network");
        ++out_offsets_[e.from + 1];
        ++in_offsets_[e.to + 1];
        traversals_ += e.multiplicity;
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());
    in_ids_.resize(edges_.size());
    auto cursor = in_offsets_;
    for (std::size_t i = 0; i < edges_.size(); ++i) in_ids_[cursor[edges_[i].to]++] = static_cast<std::uint32_t>(i);
}

std::span<const Edge> LimaxNetwork::out_edges(std::uint32_t node) const {
    const auto lo = out_offsets_.at(node);
    return std::span<const Edge>(edges_).subspan(lo, out_offsets_[node + 1] - lo);
}

std::span<const std::uint32_t> LimaxNetwork::in_edge_ids(std::uint32_t node) const {
    const auto lo = in_offsets_.at(node);
    return std::span<const std::uint32_t>(in_ids_).subspan(lo, in_offsets_[node + 1] - lo);
}

std::uint64_t LimaxNetwork::multiplicity(std::uint32_t from, std::uint32_t to) const {
    const auto out = out_edges(from);
    const auto it = std::lower_bound(out.begin(), out.end(), to, [](const Edge& e, std::uint32_t t) { return e.to < t; });
    return (it != out.end() && it->to == to) ? it->multiplicity : 0;
}

namespace {

LimaxNetwork network_from_pairs(int n, std::vector<std::uint64_t> keys) {
    std::sort(keys.begin(), keys.end());
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        edges.push_back(Edge{static_cast<std::uint32_t>(keys[i] >> 32), static_cast<std::uint32_t>(keys[i]), j - i});
        i = j;
    }
    return LimaxNetwork(n, std::move(edges));
}

void append_walk(std::vector<std::uint64_t>& keys, Genotype start, std::span<const Move> moves) {
    std::uint32_t prev = start.bits;
    for (const auto& mv : moves) {
        if (static_cast<int>(mv.step) != hamming(Genotype{prev}, mv.to))
            throw CorruptionError("walk from " + std::to_string(start.bits) + ": recorded step " +
                                  std::to_string(mv.step) + " != hamming(" + std::to_string(prev) + ", " +
                                  std::to_string(mv.to.bits) + ")");
        keys.push_back((std::uint64_t{prev} << 32) | mv.to.bits);
        prev = mv.to.bits;
    }
}

} // namespace

LimaxNetwork build_network(const WalkSet& ws) {
    std::vector<std::uint64_t> keys;
    keys.reserve(ws.total_moves());
    for (std::uint64_t g = 0; g < ws.size(); ++g) {
        const auto w = ws.walk(g);
        append_walk(keys, w.start, w.moves);
    }
    return network_from_pairs(ws.n(), std::move(keys));
}

LimaxNetwork build_network(int n, std::span<const Walk> walks) {
    std::vector<std::uint64_t> keys;
    for (const auto& w : walks) append_walk(keys, w.start, w.moves);
    return network_from_pairs(n, std::move(keys));
}

double viscosity(double in_invstep_strength, double out_invstep_strength) {
    if (in_invstep_strength == 0.0) return 0.0;
    return out_invstep_strength > 0.0 ? in_invstep_strength / out_invstep_strength : in_invstep_strength;
}

namespace {

using StepHistogram = std::array<std::uint64_t, kMaxBits + 1>;

// Most frequent step; ties go to the smaller step.
int histogram_mode(const StepHistogram& h) {
    int mode = 0;
    std::uint64_t best = 0;
    for (int s = 1; s <= kMaxBits; ++s)
        if (h[static_cast<std::size_t>(s)] > best) {
            best = h[static_cast<std::size_t>(s)];
            mode = s;
        }
    return mode;
}

} // namespace

std::vector<NodeAggregates> node_aggregates(const LimaxNetwork& net) {
    std::vector<NodeAggregates> out(net.node_count());
    const auto edges = net.edges();
    for (std::uint32_t v = 0; v < out.size(); ++v) {
        auto& a = out[v];
        StepHistogram in_hist{}, out_hist{};
        for (const auto id : net.in_edge_ids(v)) {
            const auto& e = edges[id];
            const int z = e.step();
            in_hist[static_cast<std::size_t>(z)] += e.multiplicity;
            a.in_degree += e.multiplicity;
            a.in_step_strength += static_cast<double>(e.multiplicity) * z;
            a.in_invstep_strength += static_cast<double>(e.multiplicity) * (1.0 / z);
            a.in_max = std::max(a.in_max, z);
        }
        for (const auto& e : net.out_edges(v)) {
            const int z = e.step();
            out_hist[static_cast<std::size_t>(z)] += e.multiplicity;
            a.out_degree += e.multiplicity;
            a.out_step_strength += static_cast<double>(e.multiplicity) * z;
            a.out_invstep_strength += static_cast<double>(e.multiplicity) * (1.0 / z);
            a.out_min = a.out_min == 0 ? z : std::min(a.out_min, z);
        }
        a.is_source = a.in_degree == 0;
        a.is_sink = a.out_degree == 0;
        if (a.in_degree > 0) {
            a.in_avg = a.in_step_strength / static_cast<double>(a.in_degree);
            a.in_mode = histogram_mode(in_hist);
        }
        if (a.out_degree > 0) {
            a.out_avg = a.out_step_strength / static_cast<double>(a.out_degree);
            a.out_mode = histogram_mode(out_hist);
        }
        a.viscosity = viscosity(a.in_invstep_strength, a.out_invstep_strength);
    }
    return out;
}

NetworkCounts network_counts(const LimaxNetwork& net) {
    NetworkCounts c;
    c.unique_edges = net.edges().size();
    const auto size = net.node_count();
    std::vector<std::uint32_t> parent(size);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> has_in(size, 0), has_out(size, 0);
    for (const auto& e : net.edges()) {
        has_out[e.from] = has_in[e.to] = 1;
        const auto a = find(e.from), b = find(e.to);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    for (std::uint32_t v = 0; v < size; ++v) {
        c.source_count += !has_in[v];
        c.sink_count += !has_out[v];
        c.component_count += find(v) == v;
    }
    return c;
}

std::vector<std::pair<double, double>> reversed_cumulative_distribution(std::span<const double> values) {
    if (values.empty()) throw ParameterError("reversed_cumulative_distribution: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const double total = static_cast<double>(sorted.size());
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < sorted.size();) {
        out.emplace_back(sorted[i], static_cast<double>(sorted.size() - i) / total);
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        i = j;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Files

void write_edges_csv(const LimaxNetwork& net, std::ostream& out) {
    out << "# n=" << net.n() << '\n' << "from,to,step,multiplicity\n";
    for (const auto& e : net.edges()) out << e.from << ',' << e.to << ',' << e.step() << ',' << e.multiplicity << '\n';
}

LimaxNetwork read_edges_csv(std::istream& in) {
    constexpr std::string_view what = "edges csv";
    std::string line;
    if (!csv::read_line(in, line) || line.rfind("# n=", 0) != 0) throw CorruptionError("edges csv: missing '# n=' line");
    const int n = csv::parse_int<int>(std::string_view(line).substr(4), what);
    if (n < 1 || n > kMaxBits) throw CorruptionError("edges csv: n out of range");
    if (!csv::read_line(in, line) || line != "from,to,step,multiplicity") throw CorruptionError("edges csv: bad header");
    std::vector<Edge> edges;
    while (csv::read_line(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 4) throw CorruptionError("edges csv: row needs 4 fields");
        Edge e{csv::parse_int<std::uint32_t>(f[0], what), csv::parse_int<std::uint32_t>(f[1], what),
               csv::parse_int<std::uint64_t>(f[3], what)};
        if (csv::parse_int<int>(f[2], what) != e.step()) throw CorruptionError("edges csv: step != hamming(from, to)");
        edges.push_back(e);
    }
    return LimaxNetwork(n, std::move(edges));
}

void write_graphml(const LimaxNetwork& net, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
           "  <key id=\"step\" for=\"edge\" attr.name=\"step\" attr.type=\"int\"/>\n"
           "  <key id=\"multiplicity\" for=\"edge\" attr.name=\"multiplicity\" attr.type=\"long\"/>\n"
           "  <graph id=\"limax\" edgedefault=\"directed\">\n";
    for (std::uint64_t v = 0; v < net.node_count(); ++v) out << "    <node id=\"n" << v << "\"/>\n";
    for (const auto& e : net.edges())
        out << "    <edge source=\"n" << e.from << "\" target=\"n" << e.to << "\"><data key=\"step\">" << e.step()
            << "</data><data key=\"multiplicity\">" << e.multiplicity << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

namespace {

constexpr std::string_view kNodeHeader =
    "node,in_degree,out_degree,in_step_strength,out_step_strength,in_invstep_strength,out_invstep_strength,"
    "viscosity,is_source,is_sink,in_max,in_avg,in_mode,out_min,out_avg,out_mode";

} // namespace

void write_node_aggregates_csv(std::span<const NodeAggregates> nodes, std::ostream& out) {
    out << kNodeHeader << '\n';
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        const auto& a = nodes[v];
        out << v << ',' << a.in_degree << ',' << a.out_degree << ',' << csv::real(a.in_step_strength) << ','
            << csv::real(a.out_step_strength) << ',' << csv::real(a.in_invstep_strength) << ','
            << csv::real(a.out_invstep_strength) << ',' << csv::real(a.viscosity) << ',' << int(a.is_source) << ','
            << int(a.is_sink) << ',' << a.in_max << ',' << csv::real(a.in_avg) << ',' << a.in_mode << ','
            << a.out_min << ',' << csv::real(a.out_avg) << ',' << a.out_mode << '\n';
    }
}

std::vector<NodeAggregates> read_node_aggregates_csv(std::istream& in) {
    constexpr std::string_view what = "node csv";
    std::string line;
    if (!csv::read_line(in, line) || line != kNodeHeader) throw CorruptionError("node csv: bad header");
    std::vector<NodeAggregates> nodes;
    while (csv::read_line(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 16) throw CorruptionError("node csv: row needs 16 fields");
        if (csv::parse_int<std::uint64_t>(f[0], what) != nodes.size()) throw CorruptionError("node csv: rows out of order");
        NodeAggregates a;
        a.in_degree = csv::parse_int<std::uint64_t>(f[1], what);
        a.out_degree = csv::parse_int<std::uint64_t>(f[2], what);
        a.in_step_strength = csv::parse_real(f[3], what);
        a.out_step_strength = csv::parse_real(f[4], what);
        a.in_invstep_strength = csv::parse_real(f[5], what);
        a.out_invstep_strength = csv::parse_real(f[6], what);
        a.viscosity = csv::parse_real(f[7], what);
        a.is_source = csv::parse_int<int>(f[8], what) != 0;
        a.is_sink = csv::parse_int<int>(f[9], what) != 0;
        a.in_max = csv::parse_int<int>(f[10], what);
        a.in_avg = csv::parse_real(f[11], what);
        a.in_mode = csv::parse_int<int>(f[12], what);
        a.out_min = csv::parse_int<int>(f[13], what);
        a.out_avg = csv::parse_real(f[14], what);
        a.out_mode = csv::parse_int<int>(f[15], what);
        nodes.push_back(a);
    }
    if (nodes.empty() || !std::has_single_bit(nodes.size())) throw CorruptionError("node csv: row count is not 2^n");
    return nodes;
}

} // namespace limax
