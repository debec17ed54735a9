// limax: staged driver for Limax walk experiments.
#include <CLI11.hpp>

#include <iostream>

#include "limax/errors.hpp"
#include "limax/experiments.hpp"

using namespace limax;
using namespace limax::experiments;

namespace {

struct Options {
    std::string grid;
    int instances = 0;
    std::optional<std::uint64_t> seed;
    std::optional<int> max_step;
    std::string out = "limax_run";
    bool quick = false;
    unsigned threads = 0;
    int permutations = 30;
    bool graphml = false;
};

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--out", o.out, "Run directory")->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads (0 = hardware)");
}

ExperimentConfig make_config(const Options& o, bool generating) {
    ExperimentConfig c;
    if (o.quick) apply_quick_profile(c);
    else c.grid = full_grid();
    if (!o.grid.empty()) c.grid = parse_grid(o.grid);
    if (o.instances != 0) c.instances_per_cell = o.instances;
    if (o.seed) {
        if (generating) c.master_seed = *o.seed;
        else c.walk_seed = *o.seed;
    }
    if (o.max_step) {
        if (*o.max_step < 1) throw ParameterError("--max-step must be >= 1");
        c.max_step = o.max_step;
    }
    if (o.permutations < 1) throw ParameterError("--permutations must be >= 1");
    c.out_dir = o.out;
    c.threads = o.threads;
    c.permutations = o.permutations;
    c.graphml = o.graphml;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Limax walk landscape experiments"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Generate problem instances and the manifest");
    add_common(gen, o);
    gen->add_option("--grid", o.grid, "Cells, e.g. nk:14:2,onemax:14,hiffc:16");
    gen->add_option("--instances", o.instances, "Instances per cell");
    gen->add_option("--seed", o.seed, "Master seed");
    gen->add_flag("--quick", o.quick, "N=14 NK cells, 10 instances each");

    auto* walk = app.add_subcommand("walk", "Run one Limax walk from every genotype");
    add_common(walk, o);
    walk->add_option("--seed", o.seed, "Walk seed for every instance (default: instance seed)");
    walk->add_option("--max-step", o.max_step, "Largest Hamming step a walk may take");

    auto* net = app.add_subcommand("net", "Build Limax networks from walks");
    add_common(net, o);
    net->add_flag("--graphml", o.graphml, "Also write GraphML");

    auto* localopt = app.add_subcommand("localopt", "Local optima and pull evaluations");
    add_common(localopt, o);

    auto* metrics = app.add_subcommand("metrics", "Walk summaries and network metrics");
    add_common(metrics, o);
    metrics->add_option("--permutations", o.permutations, "Assortativity permutation baseline size");

    auto* report = app.add_subcommand("report", "Aggregate per-instance results into tables");
    add_common(report, o);

    auto* run = app.add_subcommand("run", "All stages in order");
    add_common(run, o);
    run->add_option("--grid", o.grid, "Cells, e.g. nk:14:2,onemax:14,hiffc:16");
    run->add_option("--instances", o.instances, "Instances per cell");
    run->add_option("--seed", o.seed, "Master seed");
    run->add_option("--max-step", o.max_step, "Largest Hamming step a walk may take");
    run->add_flag("--quick", o.quick, "N=14 NK cells, 10 instances each");
    run->add_flag("--graphml", o.graphml, "Also write GraphML");
    run->add_option("--permutations", o.permutations, "Assortativity permutation baseline size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) run_gen(make_config(o, true));
        else if (walk->parsed()) run_walk(make_config(o, false));
        else if (net->parsed()) run_net(make_config(o, false));
        else if (localopt->parsed()) run_localopt(make_config(o, false));
        else if (metrics->parsed()) run_metrics(make_config(o, false));
        else if (report->parsed()) run_report(make_config(o, false));
        else if (run->parsed()) {
            const auto c = make_config(o, true);
            run_gen(c);
            run_walk(c);
            run_net(c);
            run_localopt(c);
            run_metrics(c);
            run_report(c);
        }
    } catch (const DependencyError& e) {
        std::cerr << "error [" << e.stage() << "]: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
