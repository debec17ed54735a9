#include "limax/experiments.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "limax/csv.hpp"
#include "limax/errors.hpp"
#include "limax/localopt.hpp"
#include "limax/netmetrics.hpp"
#include "limax/network.hpp"
#include "limax/rng.hpp"
#include "limax/stats.hpp"
#include "limax/walker.hpp"
#include "limax/walkstats.hpp"

namespace fs = std::filesystem;

namespace limax::experiments {

// ---------------------------------------------------------------------------
// Grid

namespace {

std::string_view kind_token(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::NK: return "nk";
    case ProblemKind::OneMax: return "onemax";
    case ProblemKind::HiffC: return "hiffc";
    case ProblemKind::HiffM: return "hiffm";
    }
    return "?";
}

void validate(const GridCell& c) {
    if (c.n < 1 || c.n > kMaxBits) throw ParameterError("grid cell " + c.id() + ": n out of range");
    switch (c.kind) {
    case ProblemKind::NK:
        if (c.k < 0 || c.k > c.n - 1) throw ParameterError("grid cell " + c.id() + ": k must be in [0, n-1]");
        break;
    case ProblemKind::HiffC:
        if (!std::has_single_bit(static_cast<unsigned>(c.n)))
            throw ParameterError("grid cell " + c.id() + ": HIFF needs n a power of two");
        [[fallthrough]];
    case ProblemKind::OneMax:
        if (c.k != 0) throw ParameterError("grid cell " + c.id() + ": k only applies to NK");
        break;
    case ProblemKind::HiffM:
        throw ParameterError("HIFF-M is a plugin kind and cannot be generated from the grid");
    }
}

} // namespace

std::string GridCell::id() const {
    std::string s = std::string(kind_token(kind)) + "_n" + std::to_string(n);
    if (kind == ProblemKind::NK) s += "_k" + std::to_string(k);
    return s;
}

std::uint64_t GridCell::key() const {
    return (static_cast<std::uint64_t>(kind) << 32) | (static_cast<std::uint64_t>(n) << 16) |
           static_cast<std::uint64_t>(k);
}

std::vector<GridCell> parse_grid(std::string_view text) {
    std::vector<GridCell> grid;
    for (auto item : csv::split(text)) {
        if (item.empty()) continue;
        std::vector<std::string_view> parts;
        std::size_t begin = 0;
        for (;;) {
            const auto colon = item.find(':', begin);
            parts.push_back(item.substr(begin, colon == std::string_view::npos ? colon : colon - begin));
            if (colon == std::string_view::npos) break;
            begin = colon + 1;
        }
        GridCell c;
        const auto name = parts[0];
        if (name == "nk")
            c.kind = ProblemKind::NK;
        else if (name == "onemax")
            c.kind = ProblemKind::OneMax;
        else if (name == "hiffc")
            c.kind = ProblemKind::HiffC;
        else
            throw ParameterError("grid: unknown kind '" + std::string(name) + "' (use nk, onemax, hiffc)");
        const std::size_t expected = c.kind == ProblemKind::NK ? 3 : 2;
        if (parts.size() != expected)
            throw ParameterError("grid: '" + std::string(item) + "' should be " +
                                 (c.kind == ProblemKind::NK ? "nk:N:K" : std::string(name) + ":N"));
        try {
            c.n = csv::parse_int<int>(parts[1], "grid");
            if (c.kind == ProblemKind::NK) c.k = csv::parse_int<int>(parts[2], "grid");
        } catch (const CorruptionError& e) {
            throw ParameterError(e.what());
        }
        validate(c);
        if (std::find(grid.begin(), grid.end(), c) == grid.end()) grid.push_back(c);
    }
    if (grid.empty()) throw ParameterError("grid: no cells given");
    return grid;
}

std::string format_grid(const std::vector<GridCell>& grid) {
    std::string s;
    for (const auto& c : grid) {
        if (!s.empty()) s += ',';
        s += std::string(kind_token(c.kind)) + ':' + std::to_string(c.n);
        if (c.kind == ProblemKind::NK) s += ':' + std::to_string(c.k);
    }
    return s;
}

std::vector<GridCell> full_grid() {
    return {{ProblemKind::NK, 14, 2},  {ProblemKind::NK, 14, 6},     {ProblemKind::NK, 14, 10},
            {ProblemKind::NK, 16, 4},  {ProblemKind::NK, 16, 8},     {ProblemKind::NK, 16, 12},
            {ProblemKind::OneMax, 14, 0}, {ProblemKind::HiffC, 16, 0}};
}

std::vector<GridCell> quick_grid() {
    return {{ProblemKind::NK, 14, 2}, {ProblemKind::NK, 14, 6}, {ProblemKind::NK, 14, 10}};
}

void apply_quick_profile(ExperimentConfig& config) {
    config.grid = quick_grid();
    config.instances_per_cell = 10;
}

std::uint64_t instance_seed(std::uint64_t master_seed, const GridCell& cell, int replicate) {
    return mix_seed(mix_seed(master_seed, cell.key()), static_cast<std::uint64_t>(replicate));
}

std::string instance_id(const GridCell& cell, int replicate) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "_r%02d", replicate);
    return cell.id() + buf;
}

Problem generate_instance(const GridCell& cell, std::uint64_t& seed, const std::string& id) {
    validate(cell);
    switch (cell.kind) {
    case ProblemKind::NK:
        for (;;) {
            auto problem = Problem::nk(nk_generate(cell.n, cell.k, seed), id);
            if (enumerate_global_optima(problem).size() == 1) return problem;
            std::clog << "[gen] " << id << ": tied global optimum for seed " << seed << ", retrying with seed+1\n";
            ++seed;
        }
    case ProblemKind::OneMax: return Problem::onemax(cell.n, id).with_seed(seed);
    case ProblemKind::HiffC: return Problem::hiff_c(cell.n, id).with_seed(seed);
    case ProblemKind::HiffM: break;
    }
    throw ParameterError("HIFF-M cannot be generated");
}

// ---------------------------------------------------------------------------
// File helpers

namespace {

constexpr const char* kManifestHeader = "id,kind,n,k,replicate,seed";

struct Layout {
    fs::path root;

    fs::path instances() const { return root / "instances"; }
    fs::path manifest() const { return instances() / "manifest.csv"; }
    fs::path instance(const std::string& id) const { return instances() / (id + ".json"); }
    fs::path walks(const std::string& id) const { return root / "walks" / (id + ".csv"); }
    fs::path walk_diag(const std::string& id) const { return root / "walks" / (id + "_diag.csv"); }
    fs::path edges(const std::string& id) const { return root / "net" / (id + "_edges.csv"); }
    fs::path nodes(const std::string& id) const { return root / "net" / (id + "_nodes.csv"); }
    fs::path net_counts(const std::string& id) const { return root / "net" / (id + "_counts.csv"); }
    fs::path graphml(const std::string& id) const { return root / "net" / (id + ".graphml"); }
    fs::path lo_nodes(const std::string& id) const { return root / "localopt" / (id + "_nodes.csv"); }
    fs::path lo_eval(const std::string& id) const { return root / "localopt" / (id + "_eval.csv"); }
    fs::path lo_counts(const std::string& id) const { return root / "localopt" / (id + "_counts.csv"); }
    fs::path walk_summary(const std::string& id) const { return root / "metrics" / (id + "_walks.csv"); }
    fs::path net_metrics(const std::string& id) const { return root / "metrics" / (id + "_network.csv"); }
    fs::path reports() const { return root / "reports"; }
};

std::ifstream open_in(const fs::path& path, const std::string& stage) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DependencyError(stage, "missing artifact " + path.string() + " (run `limax " + stage + "` first)");
    return in;
}

std::ofstream open_out(const fs::path& path) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void close_checked(std::ofstream& out, const fs::path& path) {
    out.close();
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

void write_row(const fs::path& path, const std::vector<std::string>& header, const std::vector<std::string>& row) {
    auto out = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
    close_checked(out, path);
}

using Row = std::map<std::string, std::string, std::less<>>;

Row read_row(const fs::path& path, const std::string& stage) {
    auto in = open_in(path, stage);
    std::string header, values;
    if (!csv::read_line(in, header) || !csv::read_line(in, values))
        throw CorruptionError(path.string() + ": expected a header and one row");
    const auto h = csv::split(header);
    const auto v = csv::split(values);
    if (h.size() != v.size()) throw CorruptionError(path.string() + ": header/row width mismatch");
    Row row;
    for (std::size_t i = 0; i < h.size(); ++i) row.emplace(std::string(h[i]), std::string(v[i]));
    return row;
}

std::optional<double> field(const Row& row, std::string_view name) {
    const auto it = row.find(name);
    if (it == row.end()) throw CorruptionError("missing column '" + std::string(name) + "'");
    if (it->second.empty()) return std::nullopt;
    return csv::parse_real(it->second, name);
}

Problem load_instance(const Layout& layout, const ManifestEntry& e) {
    auto in = open_in(layout.instance(e.id), "gen");
    return read_instance_json(in);
}

WalkSet load_walks(const Layout& layout, const std::string& id) {
    auto in = open_in(layout.walks(id), "walk");
    return read_walkset_csv(in);
}

std::vector<NodeAggregates> load_nodes(const Layout& layout, const std::string& id) {
    auto in = open_in(layout.nodes(id), "net");
    return read_node_aggregates_csv(in);
}

void log_stage(std::string_view stage, const std::string& id) { std::clog << "[" << stage << "] " << id << '\n'; }

std::string opt(const std::optional<double>& v) { return csv::real(v); }
std::string num(double v) { return csv::real(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

double massive_central_fraction(int n) { return n >= 16 ? 0.10 : 0.25; }

constexpr std::uint64_t kCentralityStream = 0x63656e7472616cULL;
constexpr std::uint64_t kPermutationStream = 0x7065726d757465ULL;

} // namespace

std::vector<ManifestEntry> read_manifest(const fs::path& out_dir) {
    const Layout layout{out_dir};
    auto in = open_in(layout.manifest(), "gen");
    std::string line;
    if (!csv::read_line(in, line) || line != kManifestHeader) throw CorruptionError("manifest: bad header");
    std::vector<ManifestEntry> entries;
    while (csv::read_line(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 6) throw CorruptionError("manifest: row needs 6 fields");
        ManifestEntry e;
        e.id = std::string(f[0]);
        e.cell.kind = problem_kind_from_string(f[1]);
        e.cell.n = csv::parse_int<int>(f[2], "manifest");
        e.cell.k = csv::parse_int<int>(f[3], "manifest");
        e.replicate = csv::parse_int<int>(f[4], "manifest");
        e.seed = csv::parse_int<std::uint64_t>(f[5], "manifest");
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw DependencyError("gen", "manifest lists no instances (run `limax gen` first)");
    return entries;
}

// ---------------------------------------------------------------------------
// Stages

void run_gen(const ExperimentConfig& config) {
    if (config.grid.empty()) throw ParameterError("gen: empty grid");
    if (config.instances_per_cell < 1) throw ParameterError("gen: instances per cell must be >= 1");
    const Layout layout{config.out_dir};
    std::ostringstream manifest;
    manifest << kManifestHeader << '\n';
    for (const auto& cell : config.grid) {
        validate(cell);
        for (int r = 0; r < config.instances_per_cell; ++r) {
            const auto id = instance_id(cell, r);
            std::uint64_t seed = instance_seed(config.master_seed, cell, r);
            const Problem problem = generate_instance(cell, seed, id);
            const auto path = layout.instance(id);
            auto out = open_out(path);
            write_instance_json(problem, out);
            close_checked(out, path);
            manifest << id << ',' << to_string(cell.kind) << ',' << cell.n << ',' << cell.k << ',' << r << ',' << seed
                     << '\n';
        }
        log_stage("gen", cell.id() + " x" + std::to_string(config.instances_per_cell));
    }
    auto out = open_out(layout.manifest());
    out << manifest.str();
    close_checked(out, layout.manifest());
}

void run_walk(const ExperimentConfig& config) {
    const Layout layout{config.out_dir};
    for (const auto& e : read_manifest(config.out_dir)) {
        const Landscape landscape(load_instance(layout, e), config.threads);
        const auto ws = run_all_walks(landscape, config.walk_seed.value_or(e.seed), config.max_step, config.threads);
        const auto path = layout.walks(e.id);
        auto out = open_out(path);
        write_walkset_csv(ws, out);
        close_checked(out, path);
        write_row(layout.walk_diag(e.id), {"instance", "walks", "total_moves", "visited_rejections", "candidates_scanned"},
                  {e.id, num(ws.size()), num(ws.total_moves()), num(ws.counters().visited_rejections),
                   num(ws.counters().candidates_scanned)});
        log_stage("walk", e.id);
    }
}

void run_net(const ExperimentConfig& config) {
    const Layout layout{config.out_dir};
    for (const auto& e : read_manifest(config.out_dir)) {
        const auto net = build_network(load_walks(layout, e.id));
        {
            const auto path = layout.edges(e.id);
            auto out = open_out(path);
            write_edges_csv(net, out);
            close_checked(out, path);
        }
        {
            const auto path = layout.nodes(e.id);
            auto out = open_out(path);
            write_node_aggregates_csv(node_aggregates(net), out);
            close_checked(out, path);
        }
        if (config.graphml) {
            const auto path = layout.graphml(e.id);
            auto out = open_out(path);
            write_graphml(net, out);
            close_checked(out, path);
        }
        const auto c = network_counts(net);
        write_row(layout.net_counts(e.id),
                  {"instance", "nodes", "total_traversals", "unique_edges", "source_count", "sink_count", "component_count"},
                  {e.id, num(net.node_count()), num(net.total_traversals()), num(c.unique_edges), num(c.source_count),
                   num(c.sink_count), num(c.component_count)});
        log_stage("net", e.id);
    }
}

void run_localopt(const ExperimentConfig& config) {
    const Layout layout{config.out_dir};
    for (const auto& e : read_manifest(config.out_dir)) {
        const Landscape landscape(load_instance(layout, e), config.threads);
        const auto nodes = load_nodes(layout, e.id);
        const auto table = local_optima_table(landscape, nodes);
        {
            const auto path = layout.lo_nodes(e.id);
            auto out = open_out(path);
            write_local_optima_csv(table, out);
            close_checked(out, path);
        }
        std::vector<PullEvaluation> evals;
        for (auto ref : {Reference::Plf, Reference::Los})
            for (auto m : kPullMeasures)
                evals.push_back(evaluate_pull_measure(table.pulls, ref == Reference::Plf ? table.plf : table.los,
                                                      landscape.global_optima(), m, ref));
        {
            const auto path = layout.lo_eval(e.id);
            auto out = open_out(path);
            write_pull_evaluations_csv(e.id, evals, out);
            close_checked(out, path);
        }
        const auto c = count_local_optima(table.plf, table.los);
        write_row(layout.lo_counts(e.id),
                  {"instance", "plf_count", "los_count", "mean_plf_of_los_positive", "plf_minus_los", "los_within_plf"},
                  {e.id, num(c.plf_count), num(c.los_count), opt(c.mean_plf_of_los_positive),
                   std::to_string(c.difference), std::to_string(int(c.los_within_plf))});
        log_stage("localopt", e.id);
    }
}

namespace {

const std::vector<std::string>& network_metric_columns() {
    static const std::vector<std::string> cols{
        "instance", "eligible_nodes", "top_threshold", "top_nodes", "top_edges", "assortativity",
        "assortativity_pool", "assortativity_traversal", "assortativity_permuted_mean", "double_fraction", "single_fraction",
        "double_single_ratio", "massive_central_fraction", "massive_central_threshold", "massive_central_nodes",
        "massive_central", "centrality_all_mean", "centrality_all_median", "centrality_all_std",
        "centrality_top_mean", "centrality_top_median", "centrality_top_std", "centrality_random_mean",
        "centrality_random_median", "centrality_random_std", "pearson", "spearman"};
    return cols;
}

} // namespace

void run_metrics(const ExperimentConfig& config) {
    const Layout layout{config.out_dir};
    for (const auto& e : read_manifest(config.out_dir)) {
        const Landscape landscape(load_instance(layout, e), config.threads);
        const auto ws = load_walks(layout, e.id);
        const auto metrics = all_walk_metrics(ws);
        const auto summary = aggregate_walkset(ws, metrics);
        write_row(layout.walk_summary(e.id), walk_summary_columns(), walk_summary_row(summary));

        const auto nodes = load_nodes(layout, e.id);
        auto edges_in = open_in(layout.edges(e.id), "net");
        const auto net = read_edges_csv(edges_in);
        if (net.node_count() != nodes.size()) throw CorruptionError(e.id + ": edge and node files disagree on n");

        std::vector<double> visc(nodes.size());
        for (std::size_t v = 0; v < nodes.size(); ++v) visc[v] = nodes[v].viscosity;
        const auto pool = eligible_pool(nodes, landscape.global_optima());
        std::vector<std::string> row{e.id, num(static_cast<std::uint64_t>(pool.size()))};
        if (pool.empty()) {
            row.resize(network_metric_columns().size());
        } else {
            const auto include = mask_of(nodes.size(), pool);
            const auto ranked = non_optimal_nodes(nodes.size(), landscape.global_optima());
            const auto top = top_quartile_nodes(visc, ranked, pool);
            const auto top_mask = mask_of(nodes.size(), top.nodes);
            const auto mixing = edge_mixing(net, top_mask);
            const auto mc_fraction = massive_central_fraction(landscape.n());
            const auto mc_set = top_fraction_nodes(visc, ranked, pool, mc_fraction);
            const auto cent = centrality(ws);
            const auto cmp = centrality_comparison(cent, pool, top, mix_seed(e.seed, kCentralityStream));
            const auto corr = viscosity_centrality_correlation(cent, visc, pool);
            const auto perm = permuted_assortativity(net, visc, {}, config.permutations,
                                                     mix_seed(e.seed, kPermutationStream));
            row.insert(row.end(),
                       {num(top.threshold), num(static_cast<std::uint64_t>(top.nodes.size())), num(mixing.double_edges),
                        opt(assortativity(net, visc)), opt(assortativity(net, visc, include)),
                        opt(assortativity(net, visc, {}, EdgeBasis::Traversal)), opt(perm.mean),
                        num(mixing.double_fraction), num(mixing.single_fraction), opt(mixing.ratio), num(mc_fraction),
                        num(mc_set.threshold), num(static_cast<std::uint64_t>(mc_set.nodes.size())),
                        opt(massive_central(mc_set.nodes, landscape.n())), num(cmp.all.mean), num(cmp.all.median),
                        num(cmp.all.std), num(cmp.top.mean), num(cmp.top.median), num(cmp.top.std),
                        num(cmp.random.mean), num(cmp.random.median), num(cmp.random.std), opt(corr.pearson),
                        opt(corr.spearman)});
        }
        write_row(layout.net_metrics(e.id), network_metric_columns(), row);
        log_stage("metrics", e.id);
    }
}

// ---------------------------------------------------------------------------
// Report

namespace {

/// A report table: per-instance rows, then per-cell summary rows computed
/// from those rows with stats::summarize.
class Exhibit {
public:
    Exhibit(std::string name, std::vector<std::string> columns, bool with_count = false)
        : name_(std::move(name)), columns_(std::move(columns)), with_count_(with_count) {}

    void add(const std::string& cell, const std::string& instance, std::vector<std::optional<double>> values) {
        if (values.size() != columns_.size()) throw std::logic_error(name_ + ": row width mismatch");
        if (std::find(cells_.begin(), cells_.end(), cell) == cells_.end()) cells_.push_back(cell);
        rows_.push_back({cell, instance, std::move(values)});
    }

    void add_extra(const std::string& cell, const std::string& instance, const std::string& row_type,
                   std::vector<std::optional<double>> values) {
        extras_.push_back({cell, instance, row_type, std::move(values)});
    }

    bool empty() const { return rows_.empty(); }

    void write(const fs::path& dir) const {
        const auto path = dir / name_;
        auto out = open_out(path);
        out << "cell,instance,row_type";
        for (const auto& c : columns_) out << ',' << c;
        out << '\n';
        for (const auto& cell : cells_) {
            for (const auto& r : rows_) {
                if (r.cell != cell) continue;
                out << r.cell << ',' << r.instance << ",instance";
                for (const auto& v : r.values) out << ',' << opt(v);
                out << '\n';
            }
            std::vector<std::optional<stats::Summary>> sums(columns_.size());
            std::vector<double> totals(columns_.size(), 0.0);
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                std::vector<double> vals;
                for (const auto& r : rows_)
                    if (r.cell == cell && r.values[c]) vals.push_back(*r.values[c]);
                if (!vals.empty()) sums[c] = stats::summarize(vals);
                for (double v : vals) totals[c] += v;
            }
            auto emit = [&](const char* type, auto get) {
                out << cell << ",," << type;
                for (std::size_t c = 0; c < columns_.size(); ++c) out << ',' << (sums[c] ? opt(get(c, *sums[c])) : "");
                out << '\n';
            };
            emit("mean", [](std::size_t, const stats::Summary& s) { return std::optional<double>(s.mean); });
            emit("std", [](std::size_t, const stats::Summary& s) { return std::optional<double>(s.std); });
            emit("median", [](std::size_t, const stats::Summary& s) { return std::optional<double>(s.median); });
            emit("ci95", [](std::size_t, const stats::Summary& s) { return s.ci95_halfwidth; });
            if (with_count_)
                emit("count", [&](std::size_t c, const stats::Summary&) { return std::optional<double>(totals[c]); });
            for (const auto& x : extras_) {
                if (x.cell != cell) continue;
                out << x.cell << ',' << x.instance << ',' << x.row_type;
                for (const auto& v : x.values) out << ',' << opt(v);
                out << '\n';
            }
        }
        close_checked(out, path);
    }

private:
    struct InstanceRow {
        std::string cell;
        std::string instance;
        std::vector<std::optional<double>> values;
    };
    struct ExtraRow {
        std::string cell;
        std::string instance;
        std::string row_type;
        std::vector<std::optional<double>> values;
    };

    std::string name_;
    std::vector<std::string> columns_;
    bool with_count_;
    std::vector<std::string> cells_;
    std::vector<InstanceRow> rows_;
    std::vector<ExtraRow> extras_;
};

std::vector<std::optional<double>> fields(const Row& row, std::initializer_list<std::string_view> names) {
    std::vector<std::optional<double>> out;
    for (auto n : names) out.push_back(field(row, n));
    return out;
}

struct NodeStat {
    double mean, std, median;
};

NodeStat node_stat(const std::vector<double>& v) {
    const auto s = stats::summarize(v);
    return {s.mean, s.std, s.median};
}

void write_distribution(const fs::path& path, const std::vector<std::tuple<std::string, std::string, std::string,
                                                                           std::vector<double>>>& series) {
    auto out = open_out(path);
    out << "cell,instance,series,value,fraction\n";
    for (const auto& [cell, instance, name, values] : series)
        for (const auto& [value, fraction] : reversed_cumulative_distribution(values))
            out << cell << ',' << instance << ',' << name << ',' << num(value) << ',' << num(fraction) << '\n';
    close_checked(out, path);
}

} // namespace

std::vector<std::string> report_names() {
    return {"fig01_walklen.csv",          "fig02_step_variability.csv", "fig03_adaptive_length.csv",
            "fig04_whier.csv",            "fig05_edges_sources.csv",    "fig06_degree_dist.csv",
            "fig07_step_strength_dist.csv", "fig08_invstep_strength_dist.csv", "tab01_degree_strength.csv",
            "tab02_local_optima.csv",     "tab05_pull_values.csv",      "tab06a_zero_error.csv",
            "tab06b_zero_edit.csv",       "fig10_pull_eval.csv",        "fig11_pull_eval.csv",
            "tab07_top_quartile.csv",     "tab08_centrality.csv",       "fig12_centrality.csv",
            "fig13_visc_centrality_corr.csv", "fig14_assortativity.csv", "fig15_massive_central.csv",
            "diagnostics.csv"};
}

void run_report(const ExperimentConfig& config) {
    const Layout layout{config.out_dir};
    const auto manifest = read_manifest(config.out_dir);

    Exhibit fig01("fig01_walklen.csv", {"wlen_mean", "wdist_mean", "cr1_mean", "cr2_mean"});
    Exhibit fig02("fig02_step_variability.csv", {"wvar_mean", "mean_step_size", "step_range_mean"});
    Exhibit fig03("fig03_adaptive_length.csv", {"max_adaptive_length", "adaptive_length_mean"});
    Exhibit fig04("fig04_whier.csv", {"whier"});
    Exhibit fig05("fig05_edges_sources.csv", {"unique_edges", "source_count", "sink_count", "component_count"});
    std::vector<std::string> tab01_cols;
    for (const char* q : {"in_degree", "out_degree", "degree", "in_step_strength", "out_step_strength", "step_strength",
                          "in_invstep_strength", "out_invstep_strength", "invstep_strength"})
        for (const char* s : {"_mean", "_std", "_median"}) tab01_cols.push_back(std::string(q) + s);
    Exhibit tab01("tab01_degree_strength.csv", tab01_cols);
    Exhibit tab02("tab02_local_optima.csv", {"plf_count", "los_count", "mean_plf_of_los_positive", "plf_minus_los"});
    std::vector<std::string> tab05_cols;
    for (auto m : kPullMeasures)
        for (const char* s : {"_median", "_mean", "_std"}) tab05_cols.push_back(std::string(to_string(m)) + s);
    Exhibit tab05("tab05_pull_values.csv", tab05_cols);
    std::vector<std::string> tab06a_cols, tab06b_cols, eval_cols;
    for (auto ref : {Reference::Plf, Reference::Los})
        for (auto m : kPullMeasures) {
            const auto key = std::string(to_string(m)) + "_" + std::string(to_string(ref));
            tab06a_cols.push_back("zero_error_" + key);
            eval_cols.push_back(key + "_false_positives");
            eval_cols.push_back(key + "_error_rate");
            if (ref == Reference::Los) {
                tab06b_cols.push_back("zero_edit_" + key);
                eval_cols.push_back(key + "_edit_distance");
                eval_cols.push_back(key + "_rank_distance");
            }
        }
    Exhibit tab06a("tab06a_zero_error.csv", tab06a_cols, true);
    Exhibit tab06b("tab06b_zero_edit.csv", tab06b_cols, true);
    Exhibit fig10("fig10_pull_eval.csv", eval_cols);
    Exhibit fig11("fig11_pull_eval.csv", eval_cols);
    Exhibit tab07("tab07_top_quartile.csv", {"top_threshold", "top_nodes", "top_edges"});
    const std::vector<std::string> cent_cols{"all_median", "all_mean", "all_std", "top_median", "top_mean",
                                             "top_std", "random_median", "random_mean", "random_std"};
    Exhibit tab08("tab08_centrality.csv", cent_cols);
    Exhibit fig12("fig12_centrality.csv", {"top_mean", "all_mean", "random_mean", "top_median", "all_median",
                                           "random_median"});
    Exhibit fig13("fig13_visc_centrality_corr.csv", {"pearson", "spearman"});
    Exhibit fig14("fig14_assortativity.csv", {"assortativity", "assortativity_permuted_mean", "assortativity_pool",
                                              "assortativity_traversal", "double_fraction", "single_fraction",
                                              "double_single_ratio"});
    Exhibit fig15("fig15_massive_central.csv", {"massive_central_fraction", "massive_central_nodes", "massive_central"});
    Exhibit diag("diagnostics.csv", {"total_moves", "visited_rejections", "sink_count", "reached_sinks"});

    std::vector<std::tuple<std::string, std::string, std::string, std::vector<double>>> degree_dist, step_dist, inv_dist;
    std::map<std::string, std::vector<std::pair<int, double>>> spearman_by_cell;

    for (const auto& e : manifest) {
        const auto cell = e.cell.id();
        const auto ws = read_row(layout.walk_summary(e.id), "metrics");
        fig01.add(cell, e.id, fields(ws, {"wlen_mean", "wdist_mean", "cr1_mean", "cr2_mean"}));
        fig02.add(cell, e.id, fields(ws, {"wvar_mean", "mean_step_size", "step_range_mean"}));
        fig03.add(cell, e.id, fields(ws, {"max_adaptive_length", "adaptive_length_mean"}));
        fig04.add(cell, e.id, fields(ws, {"whier"}));

        const auto nc = read_row(layout.net_counts(e.id), "net");
        fig05.add(cell, e.id, fields(nc, {"unique_edges", "source_count", "sink_count", "component_count"}));
        const auto wd = read_row(layout.walk_diag(e.id), "walk");

        const auto nodes = load_nodes(layout, e.id);
        std::vector<double> q[9];
        for (const auto& a : nodes) {
            q[0].push_back(static_cast<double>(a.in_degree));
            q[1].push_back(static_cast<double>(a.out_degree));
            q[2].push_back(static_cast<double>(a.in_degree + a.out_degree));
            q[3].push_back(a.in_step_strength);
            q[4].push_back(a.out_step_strength);
            q[5].push_back(a.in_step_strength + a.out_step_strength);
            q[6].push_back(a.in_invstep_strength);
            q[7].push_back(a.out_invstep_strength);
            q[8].push_back(a.in_invstep_strength + a.out_invstep_strength);
        }
        std::vector<std::optional<double>> t1;
        for (const auto& v : q) {
            const auto s = node_stat(v);
            t1.insert(t1.end(), {s.mean, s.std, s.median});
        }
        tab01.add(cell, e.id, t1);
        if (e.replicate == 0) {
            degree_dist.emplace_back(cell, e.id, "in", q[0]);
            degree_dist.emplace_back(cell, e.id, "out", q[1]);
            degree_dist.emplace_back(cell, e.id, "total", q[2]);
            step_dist.emplace_back(cell, e.id, "in", q[3]);
            step_dist.emplace_back(cell, e.id, "out", q[4]);
            step_dist.emplace_back(cell, e.id, "total", q[5]);
            inv_dist.emplace_back(cell, e.id, "in", q[6]);
            inv_dist.emplace_back(cell, e.id, "out", q[7]);
            inv_dist.emplace_back(cell, e.id, "total", q[8]);
        }

        const auto lc = read_row(layout.lo_counts(e.id), "localopt");
        tab02.add(cell, e.id, fields(lc, {"plf_count", "los_count", "mean_plf_of_los_positive", "plf_minus_los"}));

        auto lo_in = open_in(layout.lo_nodes(e.id), "localopt");
        const auto lo = read_local_optima_csv(lo_in);
        std::vector<std::optional<double>> t5;
        for (auto m : kPullMeasures) {
            std::vector<double> v;
            v.reserve(lo.pulls.size());
            for (const auto& p : lo.pulls) v.push_back(pull_of(p, m));
            const auto s = node_stat(v);
            t5.insert(t5.end(), {s.median, s.mean, s.std});
        }
        tab05.add(cell, e.id, t5);

        // Evaluation rows are written in (reference, measure) order by localopt.
        auto ev_in = open_in(layout.lo_eval(e.id), "localopt");
        std::string line;
        csv::read_line(ev_in, line);
        std::map<std::string, std::vector<std::string>> ev;
        while (csv::read_line(ev_in, line)) {
            if (line.empty()) continue;
            const auto f = csv::split(line);
            ev[std::string(f[1]) + "_" + std::string(f[2])] = {std::string(f[4]), std::string(f[5]), std::string(f[6]),
                                                                std::string(f[7])};
        }
        std::vector<std::optional<double>> t6a, t6b, evals;
        for (auto ref : {Reference::Plf, Reference::Los})
            for (auto m : kPullMeasures) {
                const auto key = std::string(to_string(m)) + "_" + std::string(to_string(ref));
                const auto it = ev.find(key);
                if (it == ev.end()) throw CorruptionError(e.id + ": evaluation row " + key + " missing");
                const auto& f = it->second;
                const double fp = csv::parse_real(f[0], "eval");
                t6a.push_back(fp == 0.0 ? 1.0 : 0.0);
                evals.push_back(fp);
                evals.push_back(csv::parse_real(f[1], "eval"));
                if (ref == Reference::Los) {
                    const double edit = csv::parse_real(f[2], "eval");
                    t6b.push_back(edit == 0.0 ? 1.0 : 0.0);
                    evals.push_back(edit);
                    evals.push_back(csv::parse_real(f[3], "eval"));
                }
            }
        tab06a.add(cell, e.id, t6a);
        tab06b.add(cell, e.id, t6b);
        (e.cell.n <= 14 ? fig10 : fig11).add(cell, e.id, evals);

        const auto nm = read_row(layout.net_metrics(e.id), "metrics");
        tab07.add(cell, e.id, fields(nm, {"top_threshold", "top_nodes", "top_edges"}));
        tab08.add(cell, e.id,
                  fields(nm, {"centrality_all_median", "centrality_all_mean", "centrality_all_std",
                              "centrality_top_median", "centrality_top_mean", "centrality_top_std",
                              "centrality_random_median", "centrality_random_mean", "centrality_random_std"}));
        fig12.add(cell, e.id,
                  fields(nm, {"centrality_top_mean", "centrality_all_mean", "centrality_random_mean",
                              "centrality_top_median", "centrality_all_median", "centrality_random_median"}));
        const auto corr = fields(nm, {"pearson", "spearman"});
        fig13.add(cell, e.id, corr);
        if (corr[1]) spearman_by_cell[cell].emplace_back(e.replicate, *corr[1]);
        fig14.add(cell, e.id,
                  fields(nm, {"assortativity", "assortativity_permuted_mean", "assortativity_pool",
                              "assortativity_traversal", "double_fraction", "single_fraction", "double_single_ratio"}));
        fig15.add(cell, e.id, fields(nm, {"massive_central_fraction", "massive_central_nodes", "massive_central"}));

        std::uint64_t sinks = 0;
        for (const auto& a : nodes) sinks += a.is_sink && a.in_degree > 0;
        diag.add(cell, e.id,
                 {field(wd, "total_moves"), field(wd, "visited_rejections"), field(nc, "sink_count"),
                  static_cast<double>(sinks)});
    }

    // Paired t-test of Spearman rho between consecutive K at fixed N, paired by replicate.
    std::vector<GridCell> nk_cells;
    for (const auto& e : manifest)
        if (e.cell.kind == ProblemKind::NK && std::find(nk_cells.begin(), nk_cells.end(), e.cell) == nk_cells.end())
            nk_cells.push_back(e.cell);
    std::sort(nk_cells.begin(), nk_cells.end(), [](const GridCell& a, const GridCell& b) {
        return std::pair(a.n, a.k) < std::pair(b.n, b.k);
    });
    for (std::size_t i = 0; i + 1 < nk_cells.size(); ++i) {
        if (nk_cells[i].n != nk_cells[i + 1].n) continue;
        const auto& lo = spearman_by_cell[nk_cells[i].id()];
        const auto& hi = spearman_by_cell[nk_cells[i + 1].id()];
        std::vector<double> a, b;
        for (const auto& [rep, rho] : lo)
            for (const auto& [rep2, rho2] : hi)
                if (rep == rep2) {
                    a.push_back(rho);
                    b.push_back(rho2);
                }
        const auto p = stats::paired_t_test(a, b);
        fig13.add_extra(nk_cells[i].id(), nk_cells[i + 1].id(), "paired_t_p", {p, p});
    }

    const auto dir = layout.reports();
    for (const Exhibit* x : {&fig01, &fig02, &fig03, &fig04, &fig05, &tab01, &tab02, &tab05, &tab06a, &tab06b, &fig10,
                             &fig11, &tab07, &tab08, &fig12, &fig13, &fig14, &fig15, &diag})
        x->write(dir);
    write_distribution(dir / "fig06_degree_dist.csv", degree_dist);
    write_distribution(dir / "fig07_step_strength_dist.csv", step_dist);
    write_distribution(dir / "fig08_invstep_strength_dist.csv", inv_dist);
    log_stage("report", dir.string());
}

} // namespace limax::experiments
