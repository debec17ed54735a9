#include "limax/walkstats.hpp"

#include <algorithm>
#include <ostream>

#include "limax/csv.hpp"
#include "limax/errors.hpp"

namespace limax {

std::vector<int> compress(std::span<const int> steps) {
    std::vector<int> out;
    for (int s : steps)
        if (out.empty() || out.back() != s) out.push_back(s);
    return out;
}

WalkMetrics step_metrics(std::span<const int> steps) {
    WalkMetrics m;
    m.wlen = static_cast<int>(steps.size());
    if (steps.empty()) return m;
    for (int s : steps)
        if (s < 1) throw ParameterError("step sizes must be >= 1");

    const auto compressed = compress(steps);
    m.cwlen = static_cast<int>(compressed.size());
    for (int s : steps) m.wdist += s;
    for (int s : compressed) m.cwdist += s;
    m.cr1 = static_cast<double>(m.cwlen) / m.wlen;
    m.cr2 = static_cast<double>(m.cwdist) / m.wdist;

    std::vector<int> distinct(steps.begin(), steps.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    m.wvar = static_cast<int>(distinct.size());
    m.step_range = distinct.back() - distinct.front();

    int run = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        run = (i > 0 && steps[i] == steps[i - 1]) ? run + 1 : 1;
        m.adaptive_length = std::max(m.adaptive_length, run);
    }
    m.hierarchical = m.cwlen > 1 && std::adjacent_find(compressed.begin(), compressed.end(),
                                                       [](int a, int b) { return b <= a; }) ==
                                        compressed.end();
    return m;
}

namespace {

template <typename Moves>
WalkMetrics metrics_of_moves(const Moves& moves) {
    std::vector<int> steps;
    steps.reserve(moves.size());
    for (const auto& mv : moves) steps.push_back(static_cast<int>(mv.step));
    return step_metrics(steps);
}

} // namespace

WalkMetrics walk_metrics(const WalkView& walk) { return metrics_of_moves(walk.moves); }
WalkMetrics walk_metrics(const Walk& walk) { return metrics_of_moves(walk.moves); }

std::vector<WalkMetrics> all_walk_metrics(const WalkSet& ws) {
    std::vector<WalkMetrics> out;
    out.reserve(ws.size());
    for (std::uint64_t g = 0; g < ws.size(); ++g) out.push_back(walk_metrics(ws.walk(g)));
    return out;
}

WalkSetSummary aggregate_walks(std::span<const WalkMetrics> metrics, std::string problem_id) {
    WalkSetSummary s;
    s.problem_id = std::move(problem_id);
    s.walks = metrics.size();
    if (metrics.empty()) return s;

    std::vector<double> wlen, cwlen, wdist, cwdist, cr1, cr2, wvar, range, adaptive;
    std::uint64_t distance = 0;
    for (const auto& m : metrics) {
        wlen.push_back(m.wlen);
        cwlen.push_back(m.cwlen);
        wdist.push_back(m.wdist);
        cwdist.push_back(m.cwdist);
        s.total_moves += static_cast<std::uint64_t>(m.wlen);
        distance += static_cast<std::uint64_t>(m.wdist);
        if (m.hierarchical) ++s.hierarchical_walks;
        if (m.wlen == 0) continue;
        ++s.nonempty_walks;
        cr1.push_back(*m.cr1);
        cr2.push_back(*m.cr2);
        wvar.push_back(m.wvar);
        range.push_back(m.step_range);
        adaptive.push_back(m.adaptive_length);
        s.max_adaptive_length = std::max(s.max_adaptive_length, m.adaptive_length);
    }
    s.whier = static_cast<double>(s.hierarchical_walks) / static_cast<double>(s.walks);
    if (s.total_moves > 0)
        s.mean_step_size = static_cast<double>(distance) / static_cast<double>(s.total_moves);

    s.wlen = stats::summarize(wlen);
    s.cwlen = stats::summarize(cwlen);
    s.wdist = stats::summarize(wdist);
    s.cwdist = stats::summarize(cwdist);
    if (!cr1.empty()) {
        s.cr1 = stats::summarize(cr1);
        s.cr2 = stats::summarize(cr2);
        s.wvar = stats::summarize(wvar);
        s.step_range = stats::summarize(range);
        s.adaptive_length = stats::summarize(adaptive);
    }
    return s;
}

WalkSetSummary aggregate_walkset(const WalkSet& ws, std::span<const WalkMetrics> metrics) {
    if (metrics.size() != ws.size()) throw ParameterError("aggregate_walkset: one metrics entry per walk required");
    return aggregate_walks(metrics, ws.problem_id());
}

namespace {

constexpr const char* kSummaryFields[] = {"wlen", "cwlen", "wdist", "cwdist", "cr1",
                                           "cr2", "wvar", "step_range", "adaptive_length"};

const std::optional<stats::Summary>& field(const WalkSetSummary& s, std::size_t i) {
    const std::optional<stats::Summary>* fields[] = {&s.wlen, &s.cwlen, &s.wdist, &s.cwdist,
                                                     &s.cr1, &s.cr2, &s.wvar, &s.step_range,
                                                     &s.adaptive_length};
    return *fields[i];
}

} // namespace

std::vector<std::string> walk_summary_columns() {
    std::vector<std::string> cols{"problem_id", "walks", "nonempty_walks", "hierarchical_walks",
                                  "total_moves", "whier", "max_adaptive_length", "mean_step_size"};
    for (const char* f : kSummaryFields) {
        cols.push_back(std::string(f) + "_mean");
        cols.push_back(std::string(f) + "_std");
        cols.push_back(std::string(f) + "_median");
    }
    return cols;
}

std::vector<std::string> walk_summary_row(const WalkSetSummary& s) {
    std::vector<std::string> row{s.problem_id,
                                 std::to_string(s.walks),
                                 std::to_string(s.nonempty_walks),
                                 std::to_string(s.hierarchical_walks),
                                 std::to_string(s.total_moves),
                                 csv::real(s.whier),
                                 std::to_string(s.max_adaptive_length),
                                 csv::real(s.mean_step_size)};
    for (std::size_t i = 0; i < std::size(kSummaryFields); ++i) {
        const auto& f = field(s, i);
        row.push_back(f ? csv::real(f->mean) : "");
        row.push_back(f ? csv::real(f->std) : "");
        row.push_back(f ? csv::real(f->median) : "");
    }
    return row;
}

void write_walk_summary_csv(std::span<const WalkSetSummary> rows, std::ostream& out) {
    const auto cols = walk_summary_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const auto& s : rows) {
        const auto r = walk_summary_row(s);
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
        out << '\n';
    }
}

} // namespace limax
