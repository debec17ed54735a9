#include <doctest.h>

#include <map>
#include <sstream>

#include "limax/errors.hpp"
#include "limax/network.hpp"
#include "limax/walkstats.hpp"

using namespace limax;

namespace {

std::vector<Walk> empty_walks(int n) {
    std::vector<Walk> w;
    for (std::uint32_t g = 0; g < space_size(n); ++g) w.push_back({Genotype{g}, {}});
    return w;
}

} // namespace

TEST_CASE("build_network from hand walks") {
    auto walks = empty_walks(3);
    walks[0].moves = {{Genotype{0b001}, 1}, {Genotype{0b011}, 1}};
    auto net = build_network(3, walks);
    CHECK(net.edges().size() == 2);
    CHECK(net.multiplicity(0b000, 0b001) == 1);
    CHECK(net.multiplicity(0b001, 0b011) == 1);
    CHECK(network_counts(net).unique_edges == 2);

    walks[4].moves = {{Genotype{0b101}, 1}, {Genotype{0b001}, 1}, {Genotype{0b011}, 1}};
    net = build_network(3, walks);
    CHECK(net.multiplicity(0b001, 0b011) == 2);
    CHECK(net.total_traversals() == 5);

    walks[7].moves = {{Genotype{0}, 2}};
    CHECK_THROWS_AS(build_network(3, walks), CorruptionError);
}

TEST_CASE("node aggregates follow traversal multisets") {
    // Node 0b0011 receives steps {1, 1, 2} and leaves with steps {2, 2}.
    auto walks = empty_walks(4);
    walks[0b0001].moves = {{Genotype{0b0011}, 1}, {Genotype{0b1111}, 2}};
    walks[0b0010].moves = {{Genotype{0b0011}, 1}, {Genotype{0b1111}, 2}};
    walks[0b0000].moves = {{Genotype{0b0011}, 2}};
    const auto net = build_network(4, walks);
    const auto agg = node_aggregates(net);
    const auto& a = agg[0b0011];
    CHECK(a.in_degree == 3);
    CHECK(a.out_degree == 2);
    CHECK(a.in_step_strength == 4.0);
    CHECK(a.out_step_strength == 4.0);
    CHECK(a.in_invstep_strength == 2.5);
    CHECK(a.out_invstep_strength == 1.0);
    CHECK(a.viscosity == 2.5);
    CHECK(a.in_max == 2);
    CHECK(a.in_avg == doctest::Approx(4.0 / 3.0));
    CHECK(a.in_mode == 1);
    CHECK(a.out_min == 2);
    CHECK(a.out_avg == 2.0);
    CHECK(a.out_mode == 2);

    const auto& src = agg[0b0001];
    CHECK(src.is_source);
    CHECK(src.viscosity == 0.0);
    CHECK(src.in_max == 0);
    CHECK(src.in_mode == 0);

    const auto& sink = agg[0b1111];
    CHECK(sink.is_sink);
    CHECK(sink.out_min == 0);
    CHECK(sink.viscosity == 1.0); // in-value when out side is empty
}

TEST_CASE("viscosity rule and mode tie-break") {
    CHECK(viscosity(0.0, 3.0) == 0.0);
    CHECK(viscosity(2401.17, 1264.0) == doctest::Approx(1.8997).epsilon(5e-5));
    CHECK(viscosity(195.0, 196.0 / 3.0) == doctest::Approx(2.9847).epsilon(5e-5));
    CHECK(viscosity(4.0, 0.0) == 4.0);

    auto walks = empty_walks(3);
    walks[0b001].moves = {{Genotype{0b111}, 2}};
    walks[0b110].moves = {{Genotype{0b111}, 1}};
    const auto agg = node_aggregates(build_network(3, walks));
    CHECK(agg[0b111].in_mode == 1);
}

TEST_CASE("counts, conservation and components") {
    const Landscape land(Problem::nk(nk_generate(10, 2, 3)), 1);
    const auto ws = run_all_walks(land, 1, std::nullopt, 1);
    const auto net = build_network(ws);
    const auto agg = node_aggregates(net);
    std::uint64_t in = 0, out = 0, wlen = 0;
    for (const auto& a : agg) {
        in += a.in_degree;
        out += a.out_degree;
        CHECK(a.is_source == (a.in_degree == 0));
        CHECK(a.is_sink == (a.out_degree == 0));
        CHECK(a.in_invstep_strength <= static_cast<double>(a.in_degree));
        if (a.in_degree > 0) CHECK(a.in_avg == doctest::Approx(a.in_step_strength / static_cast<double>(a.in_degree)));
    }
    for (const auto& m : all_walk_metrics(ws)) wlen += static_cast<std::uint64_t>(m.wlen);
    CHECK(in == ws.total_moves());
    CHECK(out == ws.total_moves());
    CHECK(wlen == ws.total_moves());
    const auto c = network_counts(net);
    CHECK(c.sink_count == 1);
    CHECK(c.component_count == 1);

    const Landscape hiff(Problem::hiff_c(8), 1);
    const auto hc = network_counts(build_network(run_all_walks(hiff, 2, std::nullopt, 1)));
    CHECK(hc.sink_count == 2);
}

TEST_CASE("reversed cumulative distribution") {
    const auto d = reversed_cumulative_distribution(std::vector<double>{1, 1, 2});
    REQUIRE(d.size() == 2);
    CHECK(d[0] == std::pair(1.0, 1.0));
    CHECK(d[1].first == 2.0);
    CHECK(d[1].second == doctest::Approx(1.0 / 3.0));
    CHECK(reversed_cumulative_distribution(std::vector<double>{5, 5}) == std::vector<std::pair<double, double>>{{5.0, 1.0}});
    CHECK_THROWS_AS(reversed_cumulative_distribution(std::vector<double>{}), ParameterError);
}

TEST_CASE("edge CSV, node CSV and GraphML") {
    const Landscape land(Problem::nk(nk_generate(6, 2, 3)), 1);
    const auto net = build_network(run_all_walks(land, 1, std::nullopt, 1));
    std::ostringstream e;
    write_edges_csv(net, e);
    std::istringstream ein(e.str());
    const auto back = read_edges_csv(ein);
    CHECK(std::equal(back.edges().begin(), back.edges().end(), net.edges().begin(), net.edges().end()));

    const auto agg = node_aggregates(net);
    std::ostringstream n;
    write_node_aggregates_csv(agg, n);
    std::istringstream nin(n.str());
    CHECK(read_node_aggregates_csv(nin) == agg);

    std::ostringstream g;
    write_graphml(net, g);
    CHECK(g.str().find("<graphml") != std::string::npos);
    CHECK(g.str().find("multiplicity") != std::string::npos);

    std::istringstream bad("# n=2\nfrom,to,step,multiplicity\n0,3,1,1\n");
    CHECK_THROWS_AS(read_edges_csv(bad), CorruptionError);
}

TEST_CASE("network rejects malformed edge lists") {
    CHECK_THROWS(LimaxNetwork(2, {{0, 0, 1}}));
    CHECK_THROWS(LimaxNetwork(2, {{0, 1, 1}, {0, 1, 2}}));
    CHECK_THROWS(LimaxNetwork(2, {{0, 1, 0}}));
}
