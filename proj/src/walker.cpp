#include "limax/walker.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>

#include "limax/csv.hpp"
#include "limax/errors.hpp"
#include "limax/parallel.hpp"
#include "limax/rng.hpp"

namespace limax {

FlipMasks::FlipMasks(int n) : n_(n) {
    if (n < 1 || n > kMaxBits) throw ParameterError("FlipMasks: n out of range");
    const std::uint64_t size = space_size(n);
    std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 2, 0);
    for (std::uint64_t m = 0; m < size; ++m) ++counts[static_cast<std::size_t>(std::popcount(m)) + 1];
    offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
    for (std::size_t d = 1; d < offsets_.size(); ++d) offsets_[d] = offsets_[d - 1] + counts[d];
    masks_.resize(size);
    auto cursor = offsets_;
    for (std::uint64_t m = 0; m < size; ++m)
        masks_[cursor[static_cast<std::size_t>(std::popcount(m))]++] = static_cast<std::uint32_t>(m);
}

std::span<const std::uint32_t> FlipMasks::at_distance(int d) const {
    if (d < 1 || d > n_)
        throw ParameterError("distance " + std::to_string(d) + " outside [1, " + std::to_string(n_) + "]");
    const auto lo = offsets_[static_cast<std::size_t>(d)];
    const auto hi = offsets_[static_cast<std::size_t>(d) + 1];
    return std::span<const std::uint32_t>(masks_).subspan(lo, hi - lo);
}

std::vector<Genotype> neighbors_at_distance(Genotype g, int d, int n) {
    if (n < 1 || n > kMaxBits) throw ParameterError("neighbors_at_distance: n out of range");
    if (d < 1 || d > n)
        throw ParameterError("distance " + std::to_string(d) + " outside [1, " + std::to_string(n) + "]");
    // Gosper's hack walks the popcount-d masks in ascending order.
    std::vector<Genotype> out;
    const std::uint64_t limit = space_size(n);
    for (std::uint64_t m = (std::uint64_t{1} << d) - 1; m < limit;) {
        out.push_back(Genotype{g.bits ^ static_cast<std::uint32_t>(m)});
        const std::uint64_t c = m & (0 - m);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t walk_seed_for(std::uint64_t master_seed, Genotype start) {
    return mix_seed(master_seed, start.bits);
}

LimaxWalker::LimaxWalker(const Landscape& landscape, std::optional<int> max_step)
    : landscape_(&landscape), masks_(landscape.n()), max_step_(max_step) {
    if (max_step && (*max_step < 1 || *max_step > landscape.n()))
        throw ParameterError("max_step must be in [1, n]");
}

void LimaxWalker::walk_into(Genotype start, std::uint64_t walk_seed, std::vector<Move>& out,
                            WalkCounters* counters) const {
    if (start.bits >= landscape_->size()) throw ParameterError("start genotype does not fit in n bits");
    const int limit = max_step_.value_or(landscape_->n());
    const auto fitness = landscape_->fitness_table();
    Rng rng(walk_seed);
    std::vector<std::uint32_t> path{start.bits};
    std::vector<std::uint32_t> candidates;
    WalkCounters local;

    std::uint32_t current = start.bits;
    for (;;) {
        const double here = fitness[current];
        int chosen_step = 0;
        for (int d = 1; d <= limit; ++d) {
            candidates.clear();
            const auto masks = masks_.at_distance(d);
            local.candidates_scanned += masks.size();
            for (std::uint32_t m : masks) {
                const std::uint32_t y = current ^ m;
                if (!(fitness[y] > here)) continue;
                if (std::find(path.begin(), path.end(), y) != path.end()) {
                    ++local.visited_rejections;
                    continue;
                }
                candidates.push_back(y);
            }
            if (!candidates.empty()) {
                chosen_step = d;
                break;
            }
        }
        if (chosen_step == 0) break;
        current = candidates[rng.below(candidates.size())];
        path.push_back(current);
        out.push_back(Move{Genotype{current}, static_cast<std::uint32_t>(chosen_step)});
    }
    if (counters) *counters += local;
}

Walk LimaxWalker::walk(Genotype start, std::uint64_t walk_seed, WalkCounters* counters) const {
    Walk w{start, {}};
    walk_into(start, walk_seed, w.moves, counters);
    return w;
}

Walk limax_walk(const Landscape& landscape, Genotype start, std::uint64_t walk_seed,
                std::optional<int> max_step, WalkCounters* counters) {
    return LimaxWalker(landscape, max_step).walk(start, walk_seed, counters);
}

// ---------------------------------------------------------------------------
// WalkSet

WalkSet::WalkSet(int n, std::string problem_id, std::uint64_t master_seed, std::optional<int> max_step,
                 std::vector<std::uint64_t> offsets, std::vector<Move> moves)
    : n_(n), problem_id_(std::move(problem_id)), master_seed_(master_seed), max_step_(max_step),
      offsets_(std::move(offsets)), moves_(std::move(moves)) {
    if (n_ < 1 || n_ > kMaxBits) throw ParameterError("WalkSet: n out of range");
    if (offsets_.size() != space_size(n_) + 1 || offsets_.front() != 0 || offsets_.back() != moves_.size() ||
        !std::is_sorted(offsets_.begin(), offsets_.end()))
        throw CorruptionError("WalkSet: offsets do not describe 2^n walks over the move array");
}

WalkSet WalkSet::from_walks(int n, std::span<const Walk> walks, std::string problem_id,
                            std::uint64_t master_seed, std::optional<int> max_step) {
    if (walks.size() != space_size(n)) throw ParameterError("WalkSet::from_walks: need exactly 2^n walks");
    std::vector<std::uint64_t> offsets{0};
    std::vector<Move> moves;
    for (std::size_t g = 0; g < walks.size(); ++g) {
        if (walks[g].start.bits != g) throw ParameterError("WalkSet::from_walks: walk index != start");
        moves.insert(moves.end(), walks[g].moves.begin(), walks[g].moves.end());
        offsets.push_back(moves.size());
    }
    return WalkSet(n, std::move(problem_id), master_seed, max_step, std::move(offsets), std::move(moves));
}

WalkView WalkSet::walk(std::uint64_t start) const {
    if (start >= size()) throw ParameterError("WalkSet::walk: start out of range");
    const auto lo = offsets_[start];
    return WalkView{Genotype{static_cast<std::uint32_t>(start)},
                    std::span<const Move>(moves_).subspan(lo, offsets_[start + 1] - lo)};
}

WalkSet run_all_walks(const Landscape& landscape, std::uint64_t master_seed, std::optional<int> max_step,
                      unsigned threads) {
    const LimaxWalker walker(landscape, max_step);
    const std::uint64_t size = landscape.size();
    constexpr std::uint64_t kBlock = 2048;
    const std::uint64_t blocks = (size + kBlock - 1) / kBlock;

    struct BlockResult {
        std::vector<std::uint64_t> lengths;
        std::vector<Move> moves;
        WalkCounters counters;
    };
    std::vector<BlockResult> results(blocks);
    parallel_blocks(size, kBlock, threads, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t b) {
        auto& r = results[b];
        r.lengths.reserve(hi - lo);
        for (std::uint64_t g = lo; g < hi; ++g) {
            const auto before = r.moves.size();
            const Genotype start{static_cast<std::uint32_t>(g)};
            walker.walk_into(start, walk_seed_for(master_seed, start), r.moves, &r.counters);
            r.lengths.push_back(r.moves.size() - before);
        }
    });

    std::uint64_t total = 0;
    for (const auto& r : results) total += r.moves.size();
    std::vector<std::uint64_t> offsets;
    offsets.reserve(size + 1);
    offsets.push_back(0);
    std::vector<Move> moves;
    moves.reserve(total);
    WalkCounters counters;
    for (auto& r : results) {
        for (auto len : r.lengths) offsets.push_back(offsets.back() + len);
        moves.insert(moves.end(), r.moves.begin(), r.moves.end());
        counters += r.counters;
        r = BlockResult{};
    }
    WalkSet ws(landscape.n(), landscape.problem().identifier(), master_seed, max_step, std::move(offsets),
               std::move(moves));
    ws.set_counters(counters);
    return ws;
}

// ---------------------------------------------------------------------------
// CSV

void write_walkset_csv(const WalkSet& ws, std::ostream& out) {
    out << "problem_id,master_seed,max_step,n\n";
    out << ws.problem_id() << ',' << ws.master_seed() << ',';
    if (ws.max_step()) out << *ws.max_step();
    out << ',' << ws.n() << '\n';
    out << "start,step_index,to,step_size\n";
    std::string line;
    for (std::uint64_t g = 0; g < ws.size(); ++g) {
        const auto w = ws.walk(g);
        for (std::size_t i = 0; i < w.moves.size(); ++i) {
            line.clear();
            line += std::to_string(g);
            line += ',';
            line += std::to_string(i);
            line += ',';
            line += std::to_string(w.moves[i].to.bits);
            line += ',';
            line += std::to_string(w.moves[i].step);
            line += '\n';
            out << line;
        }
    }
}

WalkSet read_walkset_csv(std::istream& in) {
    constexpr std::string_view what = "walkset csv";
    std::string line;
    if (!csv::read_line(in, line) || line != "problem_id,master_seed,max_step,n")
        throw CorruptionError("walkset csv: missing provenance header");
    if (!csv::read_line(in, line)) throw CorruptionError("walkset csv: missing provenance row");
    const auto head = csv::split(line);
    if (head.size() != 4) throw CorruptionError("walkset csv: provenance row needs 4 fields");
    const std::string problem_id(head[0]);
    const auto master_seed = csv::parse_int<std::uint64_t>(head[1], what);
    std::optional<int> max_step;
    if (!head[2].empty()) max_step = csv::parse_int<int>(head[2], what);
    const int n = csv::parse_int<int>(head[3], what);
    if (n < 1 || n > kMaxBits) throw CorruptionError("walkset csv: n out of range");
    if (!csv::read_line(in, line) || line != "start,step_index,to,step_size")
        throw CorruptionError("walkset csv: missing move header");

    const std::uint64_t size = space_size(n);
    std::vector<std::uint64_t> lengths(size, 0);
    std::vector<Move> moves;
    std::uint64_t previous_start = 0;
    bool any = false;
    while (csv::read_line(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 4) throw CorruptionError("walkset csv: move row needs 4 fields");
        const auto start = csv::parse_int<std::uint64_t>(f[0], what);
        const auto index = csv::parse_int<std::uint64_t>(f[1], what);
        const auto to = csv::parse_int<std::uint32_t>(f[2], what);
        const auto step = csv::parse_int<std::uint32_t>(f[3], what);
        if (start >= size || to >= size) throw CorruptionError("walkset csv: genotype out of range");
        if (any && start < previous_start) throw CorruptionError("walkset csv: rows not grouped by start");
        if (index != lengths[start]) throw CorruptionError("walkset csv: step_index not contiguous");
        const std::uint32_t from = index == 0 ? static_cast<std::uint32_t>(start) : moves.back().to.bits;
        if (step == 0 || static_cast<std::uint32_t>(std::popcount(from ^ to)) != step)
            throw CorruptionError("walkset csv: step_size disagrees with Hamming distance");
        ++lengths[start];
        previous_start = start;
        any = true;
        moves.push_back(Move{Genotype{to}, step});
    }
    std::vector<std::uint64_t> offsets(size + 1, 0);
    for (std::uint64_t g = 0; g < size; ++g) offsets[g + 1] = offsets[g] + lengths[g];
    return WalkSet(n, problem_id, master_seed, max_step, std::move(offsets), std::move(moves));
}

} // namespace limax
