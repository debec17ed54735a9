#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "limax/landscapes.hpp"

namespace limax::experiments {

/// One (kind, n, k) cell of the experimental grid. k is 0 for non-NK kinds.
struct GridCell {
    ProblemKind kind = ProblemKind::NK;
    int n = 0;
    int k = 0;

    /// e.g. "nk_n14_k2", "onemax_n14", "hiffc_n16".
    std::string id() const;
    std::uint64_t key() const;
    bool operator==(const GridCell&) const = default;
};

/// Comma-separated cells: "nk:14:2,onemax:14,hiffc:16". Validates each cell.
std::vector<GridCell> parse_grid(std::string_view text);
std::string format_grid(const std::vector<GridCell>& grid);
/// Six NK cells (N=14, K=2/6/10; N=16, K=4/8/12) plus OneMax-14 and HIFF-C-16.
std::vector<GridCell> full_grid();
/// The N=14 NK cells only.
std::vector<GridCell> quick_grid();

struct ExperimentConfig {
    std::vector<GridCell> grid;
    int instances_per_cell = 30;
    std::uint64_t master_seed = 1;
    std::optional<std::uint64_t> walk_seed; // overrides each instance's own seed
    std::optional<int> max_step;
    std::filesystem::path out_dir = "limax_run";
    unsigned threads = 0;
    int permutations = 30;
    bool graphml = false;
};

/// Applies the quick profile: N=14 NK cells, 10 instances each.
void apply_quick_profile(ExperimentConfig& config);

/// Seed of replicate r of a cell: mix of master seed, cell key and r.
std::uint64_t instance_seed(std::uint64_t master_seed, const GridCell& cell, int replicate);
std::string instance_id(const GridCell& cell, int replicate);

/// Builds the problem for a cell. NK instances whose global optimum is tied
/// are regenerated with seed + 1 until unique; `seed` is updated to match.
Problem generate_instance(const GridCell& cell, std::uint64_t& seed, const std::string& id);

struct ManifestEntry {
    std::string id;
    GridCell cell;
    int replicate = 0;
    std::uint64_t seed = 0;
};

/// Reads <out>/instances/manifest.csv; DependencyError("gen") if absent.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& out_dir);

/// Stage entry points. Each reads its inputs from out_dir and writes its
/// artifacts there; a missing upstream artifact raises DependencyError
/// naming the stage that produces it.
void run_gen(const ExperimentConfig& config);
void run_walk(const ExperimentConfig& config);
void run_net(const ExperimentConfig& config);
void run_localopt(const ExperimentConfig& config);
void run_metrics(const ExperimentConfig& config);
void run_report(const ExperimentConfig& config);

/// Names of the report files run_report writes.
std::vector<std::string> report_names();

} // namespace limax::experiments
