#include "limax/localopt.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>

#include "limax/csv.hpp"
#include "limax/errors.hpp"

namespace limax {

double plf(const Landscape& landscape, Genotype g) {
    const double here = landscape.fitness(g);
    int lower = 0;
    for (int i = 0; i < landscape.n(); ++i)
        if (landscape.fitness(Genotype{g.bits ^ (1U << i)}) < here) ++lower;
    return static_cast<double>(lower) / landscape.n();
}

std::vector<double> all_plf(const Landscape& landscape) {
    std::vector<double> out(landscape.size());
    for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = plf(landscape, Genotype{static_cast<std::uint32_t>(x)});
    return out;
}

double los(const NodeAggregates& node) {
    if (node.in_max == 0) return 0.0;
    if (node.out_min == 0) return 7.0;
    double score = 0.0;
    if (node.out_mode > node.in_mode) score += node.out_mode - node.in_mode;
    if (node.out_avg > node.in_avg) score += node.out_avg - node.in_avg;
    if (node.out_min > node.in_max) score += node.out_min - node.in_max;
    return score;
}

namespace {

double pull_ratio(double in, double out) {
    if (in == 0.0) return 0.0;
    return out == 0.0 ? in : in / out;
}

} // namespace

PullValues pull_values(const NodeAggregates& node) {
    return PullValues{pull_ratio(static_cast<double>(node.in_degree), static_cast<double>(node.out_degree)),
                      pull_ratio(node.in_step_strength, node.out_step_strength),
                      pull_ratio(node.in_invstep_strength, node.out_invstep_strength)};
}

std::string_view to_string(PullMeasure m) {
    switch (m) {
    case PullMeasure::Degree: return "pull_degree";
    case PullMeasure::StepStrength: return "pull_step_strength";
    case PullMeasure::InvstepStrength: return "pull_invstep_strength";
    }
    return "?";
}

std::string_view to_string(Reference r) { return r == Reference::Plf ? "plf" : "los"; }

double pull_of(const PullValues& p, PullMeasure m) {
    switch (m) {
    case PullMeasure::Degree: return p.degree;
    case PullMeasure::StepStrength: return p.step_strength;
    case PullMeasure::InvstepStrength: return p.invstep_strength;
    }
    return 0.0;
}

PullEvaluation evaluate_reference_sequence(std::span<const double> seq, Reference reference,
                                           std::uint64_t node_count) {
    PullEvaluation ev;
    ev.reference = reference;
    ev.evaluated_nodes = seq.size();
    ev.degenerate = seq.empty();

    std::vector<double> values(seq.begin(), seq.end());
    if (reference == Reference::Plf)
        for (auto& v : values) v = is_plf_local_optimum(v) ? 1.0 : 0.0;

    std::size_t last_positive = 0; // one past the last positive entry
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] > 0.0) last_positive = i + 1;
    std::vector<double> in_pull_order;
    for (std::size_t i = 0; i < last_positive; ++i) {
        if (values[i] > 0.0)
            in_pull_order.push_back(values[i]);
        else
            ++ev.false_positives;
    }
    ev.error_rate = node_count ? static_cast<double>(ev.false_positives) / static_cast<double>(node_count) : 0.0;

    if (reference == Reference::Los) {
        auto ideal = in_pull_order;
        std::sort(ideal.begin(), ideal.end(), std::greater<>());
        std::uint64_t edit = 0;
        double rank = 0.0;
        for (std::size_t i = 0; i < ideal.size(); ++i) {
            if (ideal[i] != in_pull_order[i]) ++edit;
            rank += std::fabs(ideal[i] - in_pull_order[i]);
        }
        ev.edit_distance = edit;
        ev.rank_distance = rank;
    }
    return ev;
}

std::vector<std::uint32_t> pull_order(std::span<const PullValues> pulls, PullMeasure measure,
                                      std::span<const Genotype> global_optima) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t v = 0; v < pulls.size(); ++v) {
        if (pull_of(pulls[v], measure) == 0.0) continue;
        if (std::find(global_optima.begin(), global_optima.end(), Genotype{v}) != global_optima.end()) continue;
        order.push_back(v);
    }
    const bool ascending = measure == PullMeasure::StepStrength;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const double pa = pull_of(pulls[a], measure);
        const double pb = pull_of(pulls[b], measure);
        if (pa != pb) return ascending ? pa < pb : pa > pb;
        return a < b;
    });
    return order;
}

PullEvaluation evaluate_pull_measure(std::span<const PullValues> pulls, std::span<const double> reference_values,
                                     std::span<const Genotype> global_optima, PullMeasure measure,
                                     Reference reference) {
    if (pulls.size() != reference_values.size())
        throw ParameterError("evaluate_pull_measure: pull and reference tables differ in size");
    const auto order = pull_order(pulls, measure, global_optima);
    std::vector<double> seq;
    seq.reserve(order.size());
    for (auto v : order) seq.push_back(reference_values[v]);

    auto ev = evaluate_reference_sequence(seq, reference, pulls.size());
    ev.measure = measure;

    if (reference == Reference::Los) {
        // The pull-ordered positives must be a permutation of every positive
        // los outside the global optima.
        std::vector<double> all_positive;
        for (std::uint32_t v = 0; v < reference_values.size(); ++v)
            if (reference_values[v] > 0.0 &&
                std::find(global_optima.begin(), global_optima.end(), Genotype{v}) == global_optima.end())
                all_positive.push_back(reference_values[v]);
        std::vector<double> ordered;
        for (double v : seq)
            if (v > 0.0) ordered.push_back(v);
        std::sort(all_positive.begin(), all_positive.end());
        std::sort(ordered.begin(), ordered.end());
        if (all_positive != ordered)
            throw CorruptionError("pull-ordered los sequence is not a permutation of the positive los values");
    }
    return ev;
}

LocalOptimaCounts count_local_optima(std::span<const double> plf_values, std::span<const double> los_values) {
    if (plf_values.size() != los_values.size()) throw ParameterError("count_local_optima: size mismatch");
    LocalOptimaCounts c;
    double plf_sum = 0.0;
    for (std::size_t v = 0; v < plf_values.size(); ++v) {
        if (is_plf_local_optimum(plf_values[v])) ++c.plf_count;
        if (los_values[v] > 0.0) {
            ++c.los_count;
            plf_sum += plf_values[v];
            if (!is_plf_local_optimum(plf_values[v])) c.los_within_plf = false;
        }
    }
    if (c.los_count > 0) c.mean_plf_of_los_positive = plf_sum / static_cast<double>(c.los_count);
    c.difference = static_cast<std::int64_t>(c.plf_count) - static_cast<std::int64_t>(c.los_count);
    return c;
}

LocalOptimaTable local_optima_table(const Landscape& landscape, std::span<const NodeAggregates> nodes) {
    if (nodes.size() != landscape.size()) throw ParameterError("local_optima_table: node table size != 2^n");
    LocalOptimaTable t;
    t.plf = all_plf(landscape);
    t.los.reserve(nodes.size());
    t.pulls.reserve(nodes.size());
    for (const auto& a : nodes) {
        t.los.push_back(los(a));
        t.pulls.push_back(pull_values(a));
    }
    return t;
}

namespace {

constexpr std::string_view kLocalOptHeader = "node,plf,los,pull_degree,pull_step_strength,pull_invstep_strength";

} // namespace

void write_local_optima_csv(const LocalOptimaTable& t, std::ostream& out) {
    out << kLocalOptHeader << '\n';
    for (std::size_t v = 0; v < t.plf.size(); ++v)
        out << v << ',' << csv::real(t.plf[v]) << ',' << csv::real(t.los[v]) << ',' << csv::real(t.pulls[v].degree)
            << ',' << csv::real(t.pulls[v].step_strength) << ',' << csv::real(t.pulls[v].invstep_strength) << '\n';
}

LocalOptimaTable read_local_optima_csv(std::istream& in) {
    constexpr std::string_view what = "localopt csv";
    std::string line;
    if (!csv::read_line(in, line) || line != kLocalOptHeader) throw CorruptionError("localopt csv: bad header");
    LocalOptimaTable t;
    while (csv::read_line(in, line)) {
        if (line.empty()) continue;
        const auto f = csv::split(line);
        if (f.size() != 6) throw CorruptionError("localopt csv: row needs 6 fields");
        if (csv::parse_int<std::uint64_t>(f[0], what) != t.plf.size())
            throw CorruptionError("localopt csv: rows out of order");
        t.plf.push_back(csv::parse_real(f[1], what));
        t.los.push_back(csv::parse_real(f[2], what));
        t.pulls.push_back(PullValues{csv::parse_real(f[3], what), csv::parse_real(f[4], what),
                                     csv::parse_real(f[5], what)});
    }
    return t;
}

void write_pull_evaluations_csv(std::string_view instance, std::span<const PullEvaluation> evals, std::ostream& out,
                                bool header) {
    if (header)
        out << "instance,measure,reference,evaluated_nodes,false_positives,error_rate,edit_distance,rank_distance,"
               "degenerate\n";
    for (const auto& e : evals) {
        out << instance << ',' << to_string(e.measure) << ',' << to_string(e.reference) << ',' << e.evaluated_nodes
            << ',' << e.false_positives << ',' << csv::real(e.error_rate) << ',';
        if (e.edit_distance) out << *e.edit_distance;
        out << ',' << csv::real(e.rank_distance) << ',' << int(e.degenerate) << '\n';
    }
}

} // namespace limax
