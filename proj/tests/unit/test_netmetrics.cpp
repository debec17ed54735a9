#include <doctest.h>

#include "limax/errors.hpp"
#include "limax/netmetrics.hpp"
#include "oracles.hpp"

using namespace limax;

TEST_CASE("centrality counts interior visits") {
    // a=0 -> b=1 -> c=3 and d=2 -> b=1 -> c=3 on n=2.
    std::vector<Walk> walks{{Genotype{0}, {{Genotype{1}, 1}, {Genotype{3}, 1}}},
                            {Genotype{1}, {{Genotype{3}, 1}}},
                            {Genotype{2}, {{Genotype{0}, 1}, {Genotype{1}, 1}, {Genotype{3}, 1}}},
                            {Genotype{3}, {}}};
    const auto c = centrality(4, walks);
    CHECK(c == std::vector<std::uint32_t>{1, 2, 0, 0});
    std::vector<Walk> short_walks{{Genotype{0}, {{Genotype{1}, 1}}}, {Genotype{1}, {}}};
    CHECK(centrality(2, short_walks) == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("top fraction with nearest rank and ties") {
    std::vector<double> v{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    std::vector<std::uint32_t> pool{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    auto t = top_quartile_nodes(v, pool);
    CHECK(t.threshold == 7.0);
    CHECK(t.nodes == std::vector<std::uint32_t>{7, 8, 9});
    std::vector<double> same(10, 0.5);
    CHECK(top_quartile_nodes(same, pool).nodes.size() == 10);
    CHECK_THROWS_AS(top_quartile_nodes(v, std::vector<std::uint32_t>{}), ParameterError);

    // Ranked over everything, members limited to a sub-pool.
    std::vector<std::uint32_t> members{8, 9, 1};
    t = top_quartile_nodes(v, pool, members);
    CHECK(t.threshold == 7.0);
    CHECK(t.nodes == std::vector<std::uint32_t>{8, 9});
}

TEST_CASE("eligible pool and non-optimal nodes") {
    std::vector<NodeAggregates> nodes(4);
    nodes[0].is_source = true;
    const std::vector<Genotype> optima{Genotype{3}};
    CHECK(eligible_pool(nodes, optima) == std::vector<std::uint32_t>{1, 2});
    CHECK(non_optimal_nodes(4, optima) == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("centrality comparison") {
    std::vector<std::uint32_t> cent{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<std::uint32_t> pool{1, 2, 3, 4, 5, 6, 7};
    TopSet all{0.0, pool};
    const auto c = centrality_comparison(cent, pool, all, 3);
    CHECK(c.top.mean == c.all.mean);
    CHECK(c.random.mean == c.all.mean);
    TopSet top{0.0, {6, 7}};
    const auto d = centrality_comparison(cent, pool, top, 3);
    CHECK(d.top.mean == 6.5);
    CHECK(d.random.count == 2);
}

TEST_CASE("assortativity") {
    CHECK(*assortativity(LimaxNetwork(1, {{0, 1, 1}, {1, 0, 1}}), std::vector<double>{0, 1}) == doctest::Approx(-1.0));

    // Three edges with endpoint values (1,2), (2,1), (1,1).
    std::vector<double> vals{1, 2, 1, 1};
    LimaxNetwork net(2, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
    const auto hand = oracle::pearson({1, 2, 1}, {2, 1, 1});
    CHECK(*assortativity(net, vals) == doctest::Approx(hand));
    CHECK(hand == doctest::Approx(-0.5));

    // Traversal basis repeats edges.
    LimaxNetwork multi(2, {{0, 1, 2}, {1, 2, 1}, {2, 3, 1}});
    CHECK(*assortativity(multi, vals, {}, EdgeBasis::Traversal) == doctest::Approx(oracle::pearson({1, 1, 2, 1}, {2, 2, 1, 1})));

    std::vector<double> flat(4, 3.0);
    CHECK_FALSE(assortativity(net, flat).has_value());
    CHECK_FALSE(assortativity(LimaxNetwork(1, {{0, 1, 1}}), std::vector<double>{0, 1}).has_value());

    // Mask removes edges touching excluded nodes.
    const auto mask = mask_of(4, std::vector<std::uint32_t>{0, 1, 2});
    CHECK(*assortativity(net, vals, mask) == doctest::Approx(-1.0));
}

TEST_CASE("permuted assortativity is near zero on a real network") {
    const Landscape land(Problem::nk(nk_generate(12, 2, 5)), 1);
    const auto net = build_network(run_all_walks(land, 1, std::nullopt, 1));
    const auto agg = node_aggregates(net);
    std::vector<double> v;
    for (const auto& a : agg) v.push_back(a.viscosity);
    const auto perm = permuted_assortativity(net, v, {}, 30, 9);
    CHECK(perm.samples.size() == 30);
    CHECK(std::abs(*perm.mean) < 0.05);
    const auto again = permuted_assortativity(net, v, {}, 30, 9);
    CHECK(again.samples == perm.samples);
    for (double s : perm.samples) {
        CHECK(s >= -1.0);
        CHECK(s <= 1.0);
    }
}

TEST_CASE("edge mixing") {
    LimaxNetwork net(2, {{0, 1, 1}, {0, 2, 1}});
    const auto none = edge_mixing(net, NodeMask(4, 0));
    CHECK(none.double_fraction == 0.0);
    CHECK(none.single_fraction == 0.0);
    CHECK_FALSE(none.ratio.has_value());
    const auto m = edge_mixing(net, mask_of(4, std::vector<std::uint32_t>{0, 1}));
    CHECK(m.double_fraction == 0.5);
    CHECK(m.single_fraction == 0.5);
    CHECK(*m.ratio == 1.0);
}

TEST_CASE("massive central") {
    CHECK(*massive_central(std::vector<std::uint32_t>{0b0000, 0b1111}, 4) == 4.0);
    CHECK(*massive_central(std::vector<std::uint32_t>{0b000, 0b011, 0b101}, 3) == 2.0);
    CHECK_FALSE(massive_central(std::vector<std::uint32_t>{1}, 3).has_value());
    Rng rng(4);
    std::vector<std::uint32_t> nodes;
    for (int i = 0; i < 40; ++i) nodes.push_back(static_cast<std::uint32_t>(rng.below(1u << 10)));
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    double brute = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) brute += std::popcount(nodes[i] ^ nodes[j]);
    brute /= nodes.size() * (nodes.size() - 1) / 2.0;
    CHECK(*massive_central(nodes, 10) == doctest::Approx(brute));
    auto shifted = nodes;
    for (auto& x : shifted) x ^= 0x2A5;
    CHECK(*massive_central(shifted, 10) == doctest::Approx(brute));
}

TEST_CASE("viscosity-centrality correlation") {
    std::vector<std::uint32_t> cent{0, 1, 5, 9, 100};
    std::vector<double> visc{0, 0.1, 0.2, 0.3, 0.4};
    const auto c = viscosity_centrality_correlation(cent, visc, std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    CHECK(*c.spearman == doctest::Approx(1.0));
    CHECK(*c.pearson < 1.0);
}
