import pytest

import limax


def test_worked_example_metrics():
    m = limax.step_metrics([1, 1, 2, 3, 2, 2, 2, 5])
    assert (m["wlen"], m["cwlen"], m["wdist"], m["cwdist"], m["wvar"]) == (8, 5, 18, 13, 4)
    assert m["cr1"] == 5 / 8
    assert m["cr2"] == 13 / 18
    assert not m["hierarchical"]
    assert limax.step_metrics([1, 2, 4])["hierarchical"]


def test_onemax_enumeration():
    land = limax.Landscape(limax.Problem.onemax(10))
    ws = limax.run_all_walks(land, 1)
    s = limax.summarize_walks(ws)
    assert len(ws) == 1024
    assert s["whier"] == 0.0
    assert s["mean_wdist"] == 5.0
    assert ws.visited_rejections == 0
    assert all(step == 1 for g in range(len(ws)) for _, step in ws.walk(g))


def test_hiff_network():
    land = limax.Landscape(limax.Problem.hiff_c(8))
    assert land.fitness(0xFF) == 32.0
    assert land.global_optima == [0, 255]
    ws = limax.run_all_walks(land, 7)
    net = limax.build_network(ws)
    counts = net.counts()
    assert counts["sink_count"] == 2
    assert counts["component_count"] == 1
    nodes = net.node_aggregates()
    assert sum(a.in_degree for a in nodes) == ws.total_moves == net.total_traversals


def test_walk_is_deterministic_and_improving():
    land = limax.Landscape(limax.Problem.nk(8, 3, 11))
    seed = limax.walk_seed_for(4, 17)
    moves = limax.limax_walk(land, 17, seed)
    assert moves == ws_walk(land, 4, 17)
    f = land.fitness(17)
    prev = 17
    for g, step in moves:
        assert land.fitness(g) > f
        assert bin(prev ^ g).count("1") == step
        f, prev = land.fitness(g), g
    assert prev in land.global_optima or limax.plf(land, prev) == 1.0


def ws_walk(land, master, start):
    return limax.run_all_walks(land, master).walk(start)


def test_csv_round_trip_and_corruption():
    land = limax.Landscape(limax.Problem.nk(6, 2, 3))
    ws = limax.run_all_walks(land, 9, max_step=2)
    back = limax.WalkSet.from_csv(ws.to_csv())
    assert back == ws
    assert back.max_step == 2
    with pytest.raises(limax.CorruptionError):
        limax.WalkSet.from_csv("garbage\n")


def test_parameter_errors():
    with pytest.raises(limax.ParameterError):
        limax.Problem.nk(4, 4, 1)
    with pytest.raises(ValueError):
        limax.Problem.onemax(4).evaluate(16)


def test_viscosity_and_pulls():
    node = limax.NodeAggregates()
    node.in_degree, node.out_degree = 195, 196
    node.in_step_strength, node.out_step_strength = 195.0, 588.0
    node.in_invstep_strength, node.out_invstep_strength = 195.0, 196 / 3
    node.in_max = node.in_mode = 1
    node.in_avg = 1.0
    node.out_min = node.out_mode = 3
    node.out_avg = 3.0
    assert limax.los(node) == pytest.approx(6.0)
    deg, step, inv = limax.pull_values(node)
    assert (deg, step, inv) == pytest.approx((0.9949, 0.3316, 2.9847), abs=5e-5)
    assert limax.viscosity(3.0, 0.0) == 3.0
    assert limax.viscosity(0.0, 2.0) == 0.0


def test_plugin_problem():
    p = limax.Problem.plugin(4, lambda g: float(bin(g).count("1")))
    land = limax.Landscape(p)
    assert land.global_optima == [15]
    s = limax.summarize_walks(limax.run_all_walks(land, 2))
    assert s["whier"] == 0.0


def test_json_round_trip():
    p = limax.Problem.nk(6, 2, 5, "inst")
    q = limax.Problem.from_json(p.to_json())
    assert q.identifier == "inst"
    assert all(p.evaluate(g) == q.evaluate(g) for g in range(64))
