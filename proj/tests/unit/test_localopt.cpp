#include <doctest.h>

#include <sstream>

#include "limax/errors.hpp"
#include "limax/localopt.hpp"

using namespace limax;

namespace {

NodeAggregates tabled(std::uint64_t in_deg, std::uint64_t out_deg, double in_step, double out_step, double in_inv,
                      double out_inv, int in_max, double in_avg, int in_mode, int out_min, double out_avg, int out_mode) {
    NodeAggregates a;
    a.in_degree = in_deg;
    a.out_degree = out_deg;
    a.in_step_strength = in_step;
    a.out_step_strength = out_step;
    a.in_invstep_strength = in_inv;
    a.out_invstep_strength = out_inv;
    a.viscosity = viscosity(in_inv, out_inv);
    a.in_max = in_max;
    a.in_avg = in_avg;
    a.in_mode = in_mode;
    a.out_min = out_min;
    a.out_avg = out_avg;
    a.out_mode = out_mode;
    return a;
}

} // namespace

TEST_CASE("los follows the scoring rule") {
    const auto n17404 = tabled(5055, 5056, 12035, 20224, 2401.17, 1264, 4, 12035.0 / 5055, 2, 4, 4, 4);
    const auto n29681 = tabled(313, 314, 470, 628, 193 + 83 / 2.0 + 37 / 3.0, 157, 3, 470.0 / 313, 1, 2, 2, 2);
    const auto n36743 = tabled(195, 196, 195, 588, 195, 196 / 3.0, 1, 1, 1, 3, 3, 3);
    CHECK(los(n17404) == doctest::Approx(3.6192).epsilon(5e-5));
    CHECK(los(n29681) == doctest::Approx(1.4984).epsilon(5e-5));
    CHECK(los(n36743) == 6.0);

    NodeAggregates source;
    CHECK(los(source) == 0.0);
    NodeAggregates sink = tabled(3, 0, 3, 0, 3, 0, 1, 1, 1, 0, 0, 0);
    CHECK(los(sink) == 7.0);
    // Positive parts only.
    CHECK(los(tabled(2, 2, 6, 2, 1, 2, 3, 3, 3, 1, 1, 1)) == 0.0);
}

TEST_CASE("pull values") {
    const auto p = pull_values(tabled(5055, 5056, 12035, 20224, 2401.17, 1264, 4, 2.38, 2, 4, 4, 4));
    CHECK(p.degree == doctest::Approx(0.9998).epsilon(5e-5));
    CHECK(p.step_strength == doctest::Approx(0.5951).epsilon(5e-5));
    CHECK(p.invstep_strength == doctest::Approx(1.8997).epsilon(5e-5));
    CHECK(pull_values(NodeAggregates{}) == PullValues{});
    const auto sink = pull_values(tabled(3, 0, 6, 0, 1.5, 0, 2, 2, 2, 0, 0, 0));
    CHECK(sink == PullValues{3.0, 6.0, 1.5});
    CHECK(pull_of(sink, PullMeasure::StepStrength) == 6.0);
}

TEST_CASE("plf") {
    const Landscape om(Problem::onemax(6), 1);
    CHECK(plf(om, Genotype{63}) == 1.0);
    CHECK(plf(om, Genotype{0}) == 0.0);
    CHECK(plf(om, Genotype{0b000111}) == 0.5);
    const auto all = all_plf(om);
    CHECK(std::count(all.begin(), all.end(), 1.0) == 1);
}

TEST_CASE("reference sequence evaluation") {
    const auto ideal = evaluate_reference_sequence(std::vector<double>{3, 2, 1, 0, 0}, Reference::Los, 32);
    CHECK(ideal.false_positives == 0);
    CHECK(*ideal.edit_distance == 0);
    CHECK(*ideal.rank_distance == 0.0);

    const auto one_fp = evaluate_reference_sequence(std::vector<double>{3, 0, 2, 1}, Reference::Los, 16);
    CHECK(one_fp.false_positives == 1);
    CHECK(one_fp.error_rate == 1.0 / 16);
    CHECK(*one_fp.edit_distance == 0);
    CHECK(*one_fp.rank_distance == 0.0);

    const auto swapped = evaluate_reference_sequence(std::vector<double>{2, 3, 1}, Reference::Los, 8);
    CHECK(swapped.false_positives == 0);
    CHECK(*swapped.edit_distance == 2);
    CHECK(*swapped.rank_distance == 2.0);

    const auto plf_ref = evaluate_reference_sequence(std::vector<double>{1, 0, 0, 1, 0}, Reference::Plf, 8);
    CHECK(plf_ref.false_positives == 2);
    CHECK_FALSE(plf_ref.edit_distance.has_value());

    const auto nothing = evaluate_reference_sequence(std::vector<double>{}, Reference::Los, 8);
    CHECK(nothing.degenerate);
    CHECK(nothing.false_positives == 0);
}

TEST_CASE("pull order sorts by measure and filters") {
    std::vector<PullValues> pulls{{0, 0, 0}, {2, 2, 1}, {1, 1, 3}, {2, 0.5, 3}, {5, 5, 5}};
    const std::vector<Genotype> optima{Genotype{4}};
    CHECK(pull_order(pulls, PullMeasure::Degree, optima) == std::vector<std::uint32_t>{1, 3, 2});
    CHECK(pull_order(pulls, PullMeasure::InvstepStrength, optima) == std::vector<std::uint32_t>{2, 3, 1});
    CHECK(pull_order(pulls, PullMeasure::StepStrength, optima) == std::vector<std::uint32_t>{3, 2, 1});

    const std::vector<double> ref{0, 0, 1.5, 0.5, 7};
    const auto e = evaluate_pull_measure(pulls, ref, optima, PullMeasure::InvstepStrength, Reference::Los);
    CHECK(e.evaluated_nodes == 3);
    CHECK(e.false_positives == 0);
    CHECK(*e.edit_distance == 0);
    const auto d = evaluate_pull_measure(pulls, ref, optima, PullMeasure::Degree, Reference::Los);
    CHECK(d.false_positives == 1);
    CHECK(*d.edit_distance == 2);
    CHECK(*d.rank_distance == 2.0);
}

TEST_CASE("local optima on a real NK instance") {
    const Landscape land(Problem::nk(nk_generate(10, 2, 6)), 1);
    const auto net = build_network(run_all_walks(land, 4, std::nullopt, 1));
    const auto nodes = node_aggregates(net);
    const auto t = local_optima_table(land, nodes);
    const auto optimum = land.global_optima()[0].bits;
    CHECK(t.plf[optimum] == 1.0);
    CHECK(nodes[optimum].out_degree == 0);
    CHECK(t.los[optimum] == 7.0);
    const auto c = count_local_optima(t.plf, t.los);
    CHECK(c.los_within_plf);
    CHECK(c.difference >= 0);
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        CHECK((t.pulls[v] == PullValues{}) == nodes[v].is_source);
        CHECK(t.pulls[v].invstep_strength == nodes[v].viscosity);
    }
    for (auto ref : {Reference::Plf, Reference::Los})
        for (auto m : kPullMeasures) {
            const auto e = evaluate_pull_measure(t.pulls, ref == Reference::Plf ? t.plf : t.los, land.global_optima(), m, ref);
            CHECK(e.error_rate == static_cast<double>(e.false_positives) / 1024.0);
        }

    std::ostringstream out;
    write_local_optima_csv(t, out);
    std::istringstream in(out.str());
    const auto back = read_local_optima_csv(in);
    CHECK(back.plf == t.plf);
    CHECK(back.los == t.los);
    CHECK(back.pulls == t.pulls);
}

TEST_CASE("count_local_optima") {
    const auto c = count_local_optima(std::vector<double>{1, 1, 0.5, 1}, std::vector<double>{2, 0, 0, 1});
    CHECK(c.plf_count == 3);
    CHECK(c.los_count == 2);
    CHECK(*c.mean_plf_of_los_positive == 1.0);
    CHECK(c.difference == 1);
    CHECK(c.los_within_plf);
    const auto bad = count_local_optima(std::vector<double>{0.5}, std::vector<double>{1});
    CHECK_FALSE(bad.los_within_plf);
}
