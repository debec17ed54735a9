#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "limax/genotype.hpp"
#include "limax/landscapes.hpp"

namespace limax {

struct Move {
    Genotype to;
    std::uint32_t step = 0;

    bool operator==(const Move&) const = default;
};

/// A walk owning its moves.
struct Walk {
    Genotype start;
    std::vector<Move> moves;

    Genotype terminal() const { return moves.empty() ? start : moves.back().to; }
    bool operator==(const Walk&) const = default;
};

/// Non-owning view of a walk stored in a WalkSet.
struct WalkView {
    Genotype start;
    std::span<const Move> moves;

    Genotype terminal() const { return moves.empty() ? start : moves.back().to; }
};

/// All flip masks of an n-bit string grouped by popcount, ascending within
/// each group. Shared by every walk on a landscape.
class FlipMasks {
public:
    explicit FlipMasks(int n);

    int n() const noexcept { return n_; }
    std::span<const std::uint32_t> at_distance(int d) const;

private:
    int n_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::size_t> offsets_; // offsets_[d] .. offsets_[d+1]
};

/// The C(n, d) genotypes at Hamming distance exactly d from g, ordered by
/// ascending flip mask.
std::vector<Genotype> neighbors_at_distance(Genotype g, int d, int n);

/// Tallies kept while walking; any nonzero visited_rejections means an
/// improving candidate was already on the path, which strict improvement
/// rules out.
struct WalkCounters {
    std::uint64_t visited_rejections = 0;
    std::uint64_t candidates_scanned = 0;

    WalkCounters& operator+=(const WalkCounters& o) {
        visited_rejections += o.visited_rejections;
        candidates_scanned += o.candidates_scanned;
        return *this;
    }
};

/// The per-start seed used by run_all_walks.
std::uint64_t walk_seed_for(std::uint64_t master_seed, Genotype start);

/// Limax walker: from the current node, scan distances d = 1, 2, ... (up to
/// max_step, if given), collect every unvisited strictly fitter genotype at
/// the first d that has any, move to one of them uniformly at random.
class LimaxWalker {
public:
    explicit LimaxWalker(const Landscape& landscape, std::optional<int> max_step = std::nullopt);

    Walk walk(Genotype start, std::uint64_t walk_seed, WalkCounters* counters = nullptr) const;

    /// Appends the moves of the walk from `start` to `out`.
    void walk_into(Genotype start, std::uint64_t walk_seed, std::vector<Move>& out,
                   WalkCounters* counters = nullptr) const;

    std::optional<int> max_step() const noexcept { return max_step_; }

private:
    const Landscape* landscape_;
    FlipMasks masks_;
    std::optional<int> max_step_;
};

Walk limax_walk(const Landscape& landscape, Genotype start, std::uint64_t walk_seed,
                std::optional<int> max_step = std::nullopt, WalkCounters* counters = nullptr);

/// One walk per genotype, indexed by start, stored contiguously.
class WalkSet {
public:
    WalkSet() = default;
    /// `offsets` has 2^n + 1 entries; walk g owns moves[offsets[g], offsets[g+1]).
    WalkSet(int n, std::string problem_id, std::uint64_t master_seed, std::optional<int> max_step,
            std::vector<std::uint64_t> offsets, std::vector<Move> moves);
    /// Builds from explicit walks; walks[g].start must equal g.
    static WalkSet from_walks(int n, std::span<const Walk> walks, std::string problem_id = {},
                              std::uint64_t master_seed = 0, std::optional<int> max_step = std::nullopt);

    int n() const noexcept { return n_; }
    const std::string& problem_id() const noexcept { return problem_id_; }
    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::optional<int> max_step() const noexcept { return max_step_; }

    std::uint64_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    WalkView walk(std::uint64_t start) const;
    std::uint64_t total_moves() const noexcept { return moves_.size(); }
    std::span<const Move> all_moves() const noexcept { return moves_; }

    /// Accumulated over run_all_walks; zero for sets read from disk.
    const WalkCounters& counters() const noexcept { return counters_; }
    void set_counters(const WalkCounters& c) { counters_ = c; }

    bool operator==(const WalkSet& o) const {
        return n_ == o.n_ && problem_id_ == o.problem_id_ && master_seed_ == o.master_seed_ &&
               max_step_ == o.max_step_ && offsets_ == o.offsets_ && moves_ == o.moves_;
    }

private:
    int n_ = 0;
    std::string problem_id_;
    std::uint64_t master_seed_ = 0;
    std::optional<int> max_step_;
    std::vector<std::uint64_t> offsets_;
    std::vector<Move> moves_;
    WalkCounters counters_;
};

/// Walk for start g uses walk_seed_for(master_seed, g), so the result does
/// not depend on the number of threads.
WalkSet run_all_walks(const Landscape& landscape, std::uint64_t master_seed,
                      std::optional<int> max_step = std::nullopt, unsigned threads = 0);

/// CSV layout:
///   problem_id,master_seed,max_step,n
///   <id>,<seed>,<cap or empty>,<n>
///   start,step_index,to,step_size
///   one row per move, grouped by start, step_index from 0
void write_walkset_csv(const WalkSet& ws, std::ostream& out);
WalkSet read_walkset_csv(std::istream& in);

} // namespace limax
