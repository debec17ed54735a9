#include <doctest.h>

#include <sstream>

#include "limax/errors.hpp"
#include "limax/walker.hpp"
#include "oracles.hpp"

using namespace limax;

TEST_CASE("neighbors_at_distance") {
    CHECK(neighbors_at_distance(Genotype{0}, 1, 3) == std::vector<Genotype>{{1}, {2}, {4}});
    CHECK(neighbors_at_distance(Genotype{0}, 3, 3) == std::vector<Genotype>{{7}});
    for (std::uint32_t g : {0u, 5u, 1000u}) {
        std::size_t total = 0;
        std::vector<std::uint32_t> previous;
        for (int d = 1; d <= 10; ++d) {
            const auto nb = neighbors_at_distance(Genotype{g}, d, 10);
            total += nb.size();
            std::vector<std::uint32_t> masks;
            for (auto y : nb) {
                CHECK(hamming(Genotype{g}, y) == d);
                masks.push_back(y.bits ^ g);
            }
            CHECK(std::is_sorted(masks.begin(), masks.end()));
        }
        CHECK(total == 1023);
    }
    CHECK_THROWS_AS(neighbors_at_distance(Genotype{0}, 0, 3), ParameterError);
    CHECK_THROWS_AS(neighbors_at_distance(Genotype{0}, 4, 3), ParameterError);
}

TEST_CASE("OneMax walks take unit steps to all-ones") {
    const Landscape land(Problem::onemax(4), 1);
    const auto w = limax_walk(land, Genotype{0}, 9);
    REQUIRE(w.moves.size() == 4);
    for (const auto& m : w.moves) CHECK(m.step == 1);
    CHECK(w.terminal() == Genotype{15});
    CHECK(limax_walk(land, Genotype{15}, 9).moves.empty());
}

TEST_CASE("walker equals the exhaustive-scan oracle") {
    for (std::uint64_t s : {1u, 2u, 3u}) {
        const auto p = Problem::nk(nk_generate(4, 1, s));
        const Landscape land(p, 1);
        for (std::uint32_t g = 0; g < 16; ++g)
            for (std::uint64_t seed : {0u, 17u}) CHECK(limax_walk(land, Genotype{g}, seed) == oracle::naive_limax_walk(p, g, seed));
    }
    const auto p = Problem::hiff_c(8);
    const Landscape land(p, 1);
    for (std::uint32_t g = 0; g < 256; g += 3) {
        CHECK(limax_walk(land, Genotype{g}, 5) == oracle::naive_limax_walk(p, g, 5));
        CHECK(limax_walk(land, Genotype{g}, 5, 2) == oracle::naive_limax_walk(p, g, 5, 2));
    }
}

TEST_CASE("walk invariants on NK(8,3)") {
    const auto p = Problem::nk(nk_generate(8, 3, 99));
    const Landscape land(p, 1);
    const auto optimum = land.global_optima().at(0);
    WalkCounters counters;
    for (std::uint32_t g = 0; g < 256; ++g) {
        const auto w = limax_walk(land, Genotype{g}, 3, std::nullopt, &counters);
        CHECK(w.terminal() == optimum);
        std::vector<std::uint32_t> nodes{g};
        Genotype prev{g};
        for (const auto& m : w.moves) {
            CHECK(static_cast<int>(m.step) == hamming(prev, m.to));
            CHECK(land.fitness(m.to) > land.fitness(prev));
            // No strictly fitter unvisited node exists at a smaller distance.
            for (std::uint32_t y = 0; y < 256; ++y)
                if (hamming(prev, Genotype{y}) < static_cast<int>(m.step) && std::find(nodes.begin(), nodes.end(), y) == nodes.end())
                    CHECK_FALSE(land.fitness(Genotype{y}) > land.fitness(prev));
            nodes.push_back(m.to.bits);
            prev = m.to;
        }
        std::sort(nodes.begin(), nodes.end());
        CHECK(std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end());
    }
    CHECK(counters.visited_rejections == 0);
}

TEST_CASE("capped walks") {
    const auto p = Problem::nk(nk_generate(8, 5, 4));
    const Landscape land(p, 1);
    for (std::uint32_t g = 0; g < 256; ++g) {
        CHECK(limax_walk(land, Genotype{g}, 1, 8) == limax_walk(land, Genotype{g}, 1));
        const auto w = limax_walk(land, Genotype{g}, 1, 1);
        for (const auto& m : w.moves) CHECK(m.step == 1);
        // A 1-capped walk stops at a 1-flip local optimum.
        const auto end = w.terminal();
        for (int i = 0; i < 8; ++i) CHECK_FALSE(land.fitness(Genotype{end.bits ^ (1u << i)}) > land.fitness(end));
    }
    CHECK_THROWS_AS(LimaxWalker(land, 0), ParameterError);
    CHECK_THROWS_AS(LimaxWalker(land, 9), ParameterError);
}

TEST_CASE("run_all_walks is deterministic and thread independent") {
    const Landscape land(Problem::nk(nk_generate(10, 4, 8)), 1);
    const auto a = run_all_walks(land, 123, std::nullopt, 1);
    const auto b = run_all_walks(land, 123, std::nullopt, 4);
    CHECK(a == b);
    CHECK(a.size() == 1024);
    for (std::uint32_t g = 0; g < 1024; ++g) {
        const auto v = a.walk(g);
        CHECK(v.start == Genotype{g});
        CHECK(std::equal(v.moves.begin(), v.moves.end(), limax_walk(land, Genotype{g}, walk_seed_for(123, Genotype{g})).moves.begin()));
    }
    CHECK_FALSE(a == run_all_walks(land, 124, std::nullopt, 1));
}

TEST_CASE("WalkSet CSV round trip") {
    const Landscape land(Problem::nk(nk_generate(6, 2, 1), "nk6"), 1);
    for (std::optional<int> cap : {std::optional<int>{}, std::optional<int>{2}}) {
        const auto ws = run_all_walks(land, 55, cap, 1);
        std::ostringstream out;
        write_walkset_csv(ws, out);
        std::istringstream in(out.str());
        const auto back = read_walkset_csv(in);
        CHECK(back == ws);
        CHECK(back.problem_id() == "nk6");
        CHECK(back.max_step() == cap);
    }
    std::istringstream bad("problem_id,master_seed,max_step,n\nx,1,,2\nstart,step_index,to,step_size\n0,0,3,1\n");
    CHECK_THROWS_AS(read_walkset_csv(bad), CorruptionError);
}

TEST_CASE("WalkSet::from_walks") {
    std::vector<Walk> walks;
    for (std::uint32_t g = 0; g < 4; ++g) walks.push_back({Genotype{g}, {}});
    walks[0].moves = {{Genotype{1}, 1}, {Genotype{3}, 1}};
    const auto ws = WalkSet::from_walks(2, walks);
    CHECK(ws.total_moves() == 2);
    CHECK(ws.walk(0).moves.size() == 2);
    walks[1].start = Genotype{2};
    CHECK_THROWS(WalkSet::from_walks(2, walks));
}
