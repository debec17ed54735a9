#include <doctest.h>

#include "limax/rng.hpp"
#include "limax/walker.hpp"
#include "limax/walkstats.hpp"

using namespace limax;

TEST_CASE("compress") {
    CHECK(compress(std::vector<int>{1, 1, 2, 3, 2, 2, 2, 5}) == std::vector<int>{1, 2, 3, 2, 5});
    CHECK(compress(std::vector<int>{2, 2, 2}) == std::vector<int>{2});
    CHECK(compress(std::vector<int>{}).empty());
}

TEST_CASE("worked example walk metrics") {
    const std::vector<int> steps{1, 1, 2, 3, 2, 2, 2, 5};
    const auto m = step_metrics(steps);
    CHECK(m.wlen == 8);
    CHECK(m.cwlen == 5);
    CHECK(m.wdist == 18);
    CHECK(m.cwdist == 13);
    CHECK(*m.cr1 == 0.625);
    CHECK(*m.cr2 == 13.0 / 18.0);
    CHECK(m.wvar == 4);
    CHECK(m.adaptive_length == 3);
    CHECK(m.step_range == 4);
    CHECK_FALSE(m.hierarchical);

    CHECK(step_metrics(std::vector<int>{1, 2, 4}).hierarchical);
    CHECK(step_metrics(std::vector<int>{1, 1, 3}).hierarchical);
    CHECK_FALSE(step_metrics(std::vector<int>{2, 2}).hierarchical);
    CHECK_FALSE(step_metrics(std::vector<int>{3, 1}).hierarchical);

    const auto empty = step_metrics(std::vector<int>{});
    CHECK(empty.wlen == 0);
    CHECK_FALSE(empty.cr1.has_value());
    CHECK_FALSE(empty.cr2.has_value());
    CHECK_FALSE(empty.hierarchical);
}

TEST_CASE("metric invariants over random step sequences") {
    Rng rng(3);
    for (int t = 0; t < 2000; ++t) {
        std::vector<int> s(rng.below(12));
        for (auto& x : s) x = 1 + static_cast<int>(rng.below(4));
        const auto m = step_metrics(s);
        CHECK(m.cwlen <= m.wlen);
        CHECK(m.cwdist <= m.wdist);
        CHECK(m.wvar <= m.cwlen);
        CHECK(m.adaptive_length <= m.wlen);
        CHECK(m.step_range >= 0);
        if (m.hierarchical) CHECK(m.cwlen > 1);
        if (m.wlen > 0) {
            CHECK(*m.cr1 > 0.0);
            CHECK(*m.cr1 <= 1.0);
            CHECK(*m.cr2 > 0.0);
            CHECK(*m.cr2 <= 1.0);
        }
    }
}

TEST_CASE("walk_metrics reads steps from a walk") {
    const Walk w{Genotype{0}, {{Genotype{1}, 1}, {Genotype{7}, 2}}};
    const auto m = walk_metrics(w);
    CHECK(m.wlen == 2);
    CHECK(m.wdist == 3);
    CHECK(m.hierarchical);
}

TEST_CASE("aggregation over OneMax n=14") {
    const Landscape land(Problem::onemax(14, "om"), 1);
    const auto ws = run_all_walks(land, 1, std::nullopt, 1);
    const auto metrics = all_walk_metrics(ws);
    const auto s = aggregate_walkset(ws, metrics);
    CHECK(s.walks == 16384);
    CHECK(s.nonempty_walks == 16383);
    CHECK(s.whier == 0.0);
    CHECK(s.wdist->mean == 7.0);
    CHECK(s.wvar->mean == 1.0);
    CHECK(s.total_moves == 114688);
    CHECK(s.max_adaptive_length == 14);
    CHECK(*s.mean_step_size == 1.0);
    CHECK(walk_summary_columns().size() == walk_summary_row(s).size());
}

TEST_CASE("aggregation of a single empty walk") {
    const std::vector<WalkMetrics> one{step_metrics(std::vector<int>{})};
    const auto s = aggregate_walks(one);
    CHECK(s.whier == 0.0);
    CHECK_FALSE(s.cr1.has_value());
    CHECK_FALSE(s.wvar.has_value());
    CHECK(s.wlen->mean == 0.0);
}

TEST_CASE("whier counts hierarchical walks over all walks") {
    std::vector<WalkMetrics> m{step_metrics(std::vector<int>{1, 2}), step_metrics(std::vector<int>{1, 1}),
                               step_metrics(std::vector<int>{}), step_metrics(std::vector<int>{2, 3, 3})};
    const auto s = aggregate_walks(m);
    CHECK(s.hierarchical_walks == 2);
    CHECK(s.whier == 0.5);
}
