#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "limax/errors.hpp"
#include "limax/landscapes.hpp"
#include "limax/localopt.hpp"
#include "limax/netmetrics.hpp"
#include "limax/network.hpp"
#include "limax/walker.hpp"
#include "limax/walkstats.hpp"

namespace py = pybind11;
using namespace limax;

namespace {

std::vector<std::uint32_t> bits_of(const std::vector<Genotype>& gs) {
    std::vector<std::uint32_t> out;
    out.reserve(gs.size());
    for (auto g : gs) out.push_back(g.bits);
    return out;
}

std::vector<std::pair<std::uint32_t, int>> moves_of(std::span<const Move> moves) {
    std::vector<std::pair<std::uint32_t, int>> out;
    out.reserve(moves.size());
    for (const auto& m : moves) out.emplace_back(m.to.bits, static_cast<int>(m.step));
    return out;
}

py::dict metrics_dict(const WalkMetrics& m) {
    py::dict d;
    d["wlen"] = m.wlen;
    d["cwlen"] = m.cwlen;
    d["wdist"] = m.wdist;
    d["cwdist"] = m.cwdist;
    d["cr1"] = m.cr1;
    d["cr2"] = m.cr2;
    d["wvar"] = m.wvar;
    d["step_range"] = m.step_range;
    d["adaptive_length"] = m.adaptive_length;
    d["hierarchical"] = m.hierarchical;
    return d;
}

py::object summary_mean(const std::optional<stats::Summary>& s) {
    return s ? py::cast(s->mean) : py::none();
}

} // namespace

PYBIND11_MODULE(_limax, m) {
    m.doc() = "Limax walks, networks and local-optimum scoring over fully enumerated landscapes";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<CorruptionError>(m, "CorruptionError", PyExc_ValueError);
    py::register_exception<DependencyError>(m, "DependencyError", PyExc_RuntimeError);

    py::class_<Problem>(m, "Problem")
        .def_static(
            "nk", [](int n, int k, std::uint64_t seed, std::string id) { return Problem::nk(nk_generate(n, k, seed), id); },
            py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("identifier") = "")
        .def_static("onemax", &Problem::onemax, py::arg("n"), py::arg("identifier") = "")
        .def_static("hiff_c", &Problem::hiff_c, py::arg("n"), py::arg("identifier") = "")
        .def_static(
            "plugin",
            [](int n, std::function<double(std::uint32_t)> f, std::string id) {
                if (!f) throw ParameterError("plugin fitness must be callable");
                return Problem::plugin(n, [f](Genotype g) {
                    py::gil_scoped_acquire gil;
                    return f(g.bits);
                }, id);
            },
            py::arg("n"), py::arg("fitness"), py::arg("identifier") = "")
        .def_property_readonly("kind", [](const Problem& p) { return std::string(to_string(p.kind())); })
        .def_property_readonly("n", &Problem::n)
        .def_property_readonly("identifier", &Problem::identifier)
        .def_property_readonly("seed", &Problem::seed)
        .def("evaluate", [](const Problem& p, std::uint32_t g) { return p.evaluate(Genotype{g}); })
        .def("to_json", [](const Problem& p) {
            std::ostringstream out;
            write_instance_json(p, out);
            return out.str();
        })
        .def_static("from_json", [](const std::string& text) {
            std::istringstream in(text);
            return read_instance_json(in);
        });

    py::class_<Landscape>(m, "Landscape")
        .def(py::init([](const Problem& p, bool plugin_serial) {
                 // Python plugins hold the GIL per call, so they are tabulated on one thread.
                 return Landscape(p, plugin_serial || p.kind() == ProblemKind::HiffM ? 1 : 0);
             }),
             py::arg("problem"), py::arg("serial") = false)
        .def_property_readonly("problem", &Landscape::problem)
        .def_property_readonly("n", &Landscape::n)
        .def_property_readonly("size", &Landscape::size)
        .def("fitness", [](const Landscape& l, std::uint32_t g) {
            if (g >= l.size()) throw ParameterError("genotype out of range");
            return l.fitness(Genotype{g});
        })
        .def_property_readonly("global_optima", [](const Landscape& l) { return bits_of(l.global_optima()); });

    m.def("walk_seed_for", [](std::uint64_t master, std::uint32_t start) { return walk_seed_for(master, Genotype{start}); });
    m.def(
        "limax_walk",
        [](const Landscape& l, std::uint32_t start, std::uint64_t seed, std::optional<int> max_step) {
            if (start >= l.size()) throw ParameterError("start genotype out of range");
            return moves_of(limax_walk(l, Genotype{start}, seed, max_step).moves);
        },
        py::arg("landscape"), py::arg("start"), py::arg("walk_seed"), py::arg("max_step") = py::none(),
        "Moves of one walk as (genotype, step size) pairs.");

    m.def("step_metrics", [](const std::vector<int>& steps) { return metrics_dict(step_metrics(steps)); });

    py::class_<WalkSet>(m, "WalkSet")
        .def_property_readonly("n", &WalkSet::n)
        .def_property_readonly("master_seed", &WalkSet::master_seed)
        .def_property_readonly("max_step", &WalkSet::max_step)
        .def_property_readonly("total_moves", &WalkSet::total_moves)
        .def_property_readonly("visited_rejections", [](const WalkSet& ws) { return ws.counters().visited_rejections; })
        .def("__len__", &WalkSet::size)
        .def("walk", [](const WalkSet& ws, std::uint64_t start) {
            if (start >= ws.size()) throw ParameterError("start genotype out of range");
            return moves_of(ws.walk(start).moves);
        })
        .def("to_csv", [](const WalkSet& ws) {
            std::ostringstream out;
            write_walkset_csv(ws, out);
            return out.str();
        })
        .def_static("from_csv", [](const std::string& text) {
            std::istringstream in(text);
            return read_walkset_csv(in);
        })
        .def("__eq__", [](const WalkSet& a, const WalkSet& b) { return a == b; });

    m.def(
        "run_all_walks",
        [](const Landscape& l, std::uint64_t seed, std::optional<int> max_step, unsigned threads) {
            py::gil_scoped_release release;
            return run_all_walks(l, seed, max_step, l.problem().kind() == ProblemKind::HiffM ? 1 : threads);
        },
        py::arg("landscape"), py::arg("master_seed"), py::arg("max_step") = py::none(), py::arg("threads") = 0);

    m.def("summarize_walks", [](const WalkSet& ws) {
        const auto s = aggregate_walkset(ws, all_walk_metrics(ws));
        py::dict d;
        d["walks"] = s.walks;
        d["total_moves"] = s.total_moves;
        d["hierarchical_walks"] = s.hierarchical_walks;
        d["whier"] = s.whier;
        d["max_adaptive_length"] = s.max_adaptive_length;
        d["mean_step_size"] = s.mean_step_size;
        d["mean_wlen"] = summary_mean(s.wlen);
        d["mean_cwlen"] = summary_mean(s.cwlen);
        d["mean_wdist"] = summary_mean(s.wdist);
        d["mean_cwdist"] = summary_mean(s.cwdist);
        d["mean_cr1"] = summary_mean(s.cr1);
        d["mean_cr2"] = summary_mean(s.cr2);
        d["mean_wvar"] = summary_mean(s.wvar);
        return d;
    });

    py::class_<NodeAggregates>(m, "NodeAggregates")
        .def(py::init<>())
        .def_readwrite("in_degree", &NodeAggregates::in_degree)
        .def_readwrite("out_degree", &NodeAggregates::out_degree)
        .def_readwrite("in_step_strength", &NodeAggregates::in_step_strength)
        .def_readwrite("out_step_strength", &NodeAggregates::out_step_strength)
        .def_readwrite("in_invstep_strength", &NodeAggregates::in_invstep_strength)
        .def_readwrite("out_invstep_strength", &NodeAggregates::out_invstep_strength)
        .def_readwrite("viscosity", &NodeAggregates::viscosity)
        .def_readwrite("is_source", &NodeAggregates::is_source)
        .def_readwrite("is_sink", &NodeAggregates::is_sink)
        .def_readwrite("in_max", &NodeAggregates::in_max)
        .def_readwrite("in_avg", &NodeAggregates::in_avg)
        .def_readwrite("in_mode", &NodeAggregates::in_mode)
        .def_readwrite("out_min", &NodeAggregates::out_min)
        .def_readwrite("out_avg", &NodeAggregates::out_avg)
        .def_readwrite("out_mode", &NodeAggregates::out_mode);

    py::class_<LimaxNetwork>(m, "Network")
        .def_property_readonly("n", &LimaxNetwork::n)
        .def_property_readonly("node_count", &LimaxNetwork::node_count)
        .def_property_readonly("total_traversals", &LimaxNetwork::total_traversals)
        .def("edges", [](const LimaxNetwork& net) {
            std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> out;
            for (const auto& e : net.edges()) out.emplace_back(e.from, e.to, e.multiplicity);
            return out;
        })
        .def("multiplicity", &LimaxNetwork::multiplicity)
        .def("counts", [](const LimaxNetwork& net) {
            const auto c = network_counts(net);
            py::dict d;
            d["unique_edges"] = c.unique_edges;
            d["source_count"] = c.source_count;
            d["sink_count"] = c.sink_count;
            d["component_count"] = c.component_count;
            return d;
        })
        .def("node_aggregates", &node_aggregates)
        .def("to_graphml", [](const LimaxNetwork& net) {
            std::ostringstream out;
            write_graphml(net, out);
            return out.str();
        });

    m.def("build_network", py::overload_cast<const WalkSet&>(&build_network));
    m.def("viscosity", &viscosity, py::arg("in_invstep_strength"), py::arg("out_invstep_strength"));
    m.def("los", &los);
    m.def("pull_values", [](const NodeAggregates& a) {
        const auto p = pull_values(a);
        return py::make_tuple(p.degree, p.step_strength, p.invstep_strength);
    });
    m.def("plf", [](const Landscape& l, std::uint32_t g) { return plf(l, Genotype{g}); });
    m.def("local_optima_counts", [](const Landscape& l, const std::vector<NodeAggregates>& nodes) {
        const auto t = local_optima_table(l, nodes);
        const auto c = count_local_optima(t.plf, t.los);
        py::dict d;
        d["plf_count"] = c.plf_count;
        d["los_count"] = c.los_count;
        d["difference"] = c.difference;
        d["los_within_plf"] = c.los_within_plf;
        return d;
    });
    m.def("reversed_cumulative_distribution",
          [](const std::vector<double>& v) { return reversed_cumulative_distribution(v); });
    m.def("assortativity", [](const LimaxNetwork& net, const std::vector<double>& values) {
        if (values.size() != net.node_count()) throw ParameterError("one value per node required");
        return assortativity(net, values);
    });
    m.def("massive_central", &massive_central, py::arg("nodes"), py::arg("n"));
}
