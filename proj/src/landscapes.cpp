#include "limax/landscapes.hpp"

#include <algorithm>
#include <bit>
#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "limax/errors.hpp"
#include "limax/parallel.hpp"
#include "limax/rng.hpp"

namespace limax {

namespace {

std::string hex_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double parse_double(const std::string& s) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || errno == ERANGE)
        throw CorruptionError("instance file: bad float literal '" + s + "'");
    return v;
}

void check_n(int n) {
    if (n < 1 || n > kMaxBits)
        throw ParameterError("n must be in [1, " + std::to_string(kMaxBits) + "], got " +
                             std::to_string(n));
}

} // namespace

std::string_view to_string(ProblemKind kind) {
    switch (kind) {
    case ProblemKind::NK: return "NK";
    case ProblemKind::OneMax: return "OneMax";
    case ProblemKind::HiffC: return "HIFF-C";
    case ProblemKind::HiffM: return "HIFF-M";
    }
    return "?";
}

ProblemKind problem_kind_from_string(std::string_view name) {
    for (auto kind : {ProblemKind::NK, ProblemKind::OneMax, ProblemKind::HiffC, ProblemKind::HiffM})
        if (to_string(kind) == name) return kind;
    throw ParameterError("unknown problem kind '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// NK

std::uint32_t NKInstance::local_configuration(int locus, Genotype g) const {
    std::uint32_t idx = (g.bits >> locus) & 1U;
    for (int j : neighbourhoods[static_cast<std::size_t>(locus)])
        idx = (idx << 1) | ((g.bits >> j) & 1U);
    return idx;
}

double NKInstance::evaluate(Genotype g) const {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += tables[static_cast<std::size_t>(i)][local_configuration(i, g)];
    return sum / n;
}

NKInstance nk_generate(int n, int k, std::uint64_t seed) {
    check_n(n);
    if (k < 0 || k > n - 1)
        throw ParameterError("k must be in [0, n-1], got k=" + std::to_string(k) +
                             " for n=" + std::to_string(n));
    NKInstance inst;
    inst.n = n;
    inst.k = k;
    inst.seed = seed;
    inst.neighbourhoods.resize(static_cast<std::size_t>(n));
    inst.tables.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        std::vector<int> others;
        others.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < n; ++j)
            if (j != i) others.push_back(j);
        for (int t = 0; t < k; ++t) {
            const auto pick = t + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1 - t)));
            std::swap(others[static_cast<std::size_t>(t)], others[static_cast<std::size_t>(pick)]);
        }
        auto& nb = inst.neighbourhoods[static_cast<std::size_t>(i)];
        nb.assign(others.begin(), others.begin() + k);
        std::sort(nb.begin(), nb.end());

        auto& table = inst.tables[static_cast<std::size_t>(i)];
        table.resize(std::size_t{1} << (k + 1));
        for (auto& v : table) v = rng.uniform01();
    }
    return inst;
}

// ---------------------------------------------------------------------------
// OneMax / HIFF

double onemax_fitness(Genotype g) { return static_cast<double>(std::popcount(g.bits)); }

double hiff_fitness(Genotype g, int n) {
    // Bottom-up over levels; bit b of ones/zeros marks block b as all-ones/all-zeros.
    double total = n;
    std::uint32_t ones = g.bits;
    std::uint32_t zeros = ~g.bits & static_cast<std::uint32_t>(space_size(n) - 1);
    for (int size = 2; size <= n; size *= 2) {
        std::uint32_t next_ones = 0;
        std::uint32_t next_zeros = 0;
        for (int b = 0; b < n / size; ++b) {
            const int left = 2 * b;
            const int right = 2 * b + 1;
            if (((ones >> left) & 1U) && ((ones >> right) & 1U)) next_ones |= 1U << b;
            if (((zeros >> left) & 1U) && ((zeros >> right) & 1U)) next_zeros |= 1U << b;
        }
        ones = next_ones;
        zeros = next_zeros;
        total += static_cast<double>(size) * std::popcount(ones | zeros);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Problem

Problem Problem::nk(NKInstance instance, std::string identifier) {
    check_n(instance.n);
    if (static_cast<int>(instance.neighbourhoods.size()) != instance.n ||
        static_cast<int>(instance.tables.size()) != instance.n)
        throw ParameterError("NK instance: neighbourhood/table count does not match n");
    for (int i = 0; i < instance.n; ++i) {
        const auto& nb = instance.neighbourhoods[static_cast<std::size_t>(i)];
        if (static_cast<int>(nb.size()) != instance.k)
            throw ParameterError("NK instance: neighbourhood size != k at locus " + std::to_string(i));
        for (std::size_t t = 0; t < nb.size(); ++t) {
            if (nb[t] < 0 || nb[t] >= instance.n || nb[t] == i || (t > 0 && nb[t] <= nb[t - 1]))
                throw ParameterError("NK instance: invalid neighbourhood at locus " + std::to_string(i));
        }
        if (instance.tables[static_cast<std::size_t>(i)].size() != (std::size_t{1} << (instance.k + 1)))
            throw ParameterError("NK instance: table size != 2^(k+1) at locus " + std::to_string(i));
    }
    Problem p;
    p.kind_ = ProblemKind::NK;
    p.n_ = instance.n;
    p.seed_ = instance.seed;
    p.identifier_ = identifier.empty()
                        ? "nk_n" + std::to_string(instance.n) + "_k" + std::to_string(instance.k)
                        : std::move(identifier);
    p.nk_ = std::make_shared<const NKInstance>(std::move(instance));
    return p;
}

Problem Problem::onemax(int n, std::string identifier) {
    check_n(n);
    Problem p;
    p.kind_ = ProblemKind::OneMax;
    p.n_ = n;
    p.identifier_ = identifier.empty() ? "onemax_n" + std::to_string(n) : std::move(identifier);
    return p;
}

Problem Problem::hiff_c(int n, std::string identifier) {
    check_n(n);
    if (!std::has_single_bit(static_cast<unsigned>(n)))
        throw ParameterError("HIFF requires n to be a power of two, got " + std::to_string(n));
    Problem p;
    p.kind_ = ProblemKind::HiffC;
    p.n_ = n;
    p.identifier_ = identifier.empty() ? "hiffc_n" + std::to_string(n) : std::move(identifier);
    return p;
}

Problem Problem::plugin(int n, FitnessFunction fitness, std::string identifier, ProblemKind kind) {
    check_n(n);
    if (!fitness) throw ParameterError("plugin problem requires a fitness function");
    if (kind == ProblemKind::HiffM && !std::has_single_bit(static_cast<unsigned>(n)))
        throw ParameterError("HIFF requires n to be a power of two, got " + std::to_string(n));
    Problem p;
    p.kind_ = kind;
    p.n_ = n;
    p.identifier_ = identifier.empty() ? "plugin_n" + std::to_string(n) : std::move(identifier);
    p.plugin_ = std::move(fitness);
    return p;
}

Problem Problem::with_seed(std::uint64_t seed) const {
    Problem p = *this;
    p.seed_ = seed;
    return p;
}

Problem Problem::with_identifier(std::string identifier) const {
    Problem p = *this;
    p.identifier_ = std::move(identifier);
    return p;
}

double Problem::evaluate(Genotype g) const {
    if (g.bits >= space_size(n_))
        throw ParameterError("genotype " + std::to_string(g.bits) + " does not fit in n=" +
                             std::to_string(n_) + " bits");
    if (plugin_) return plugin_(g);
    switch (kind_) {
    case ProblemKind::NK: return nk_->evaluate(g);
    case ProblemKind::OneMax: return onemax_fitness(g);
    case ProblemKind::HiffC: return hiff_fitness(g, n_);
    case ProblemKind::HiffM: break;
    }
    throw ParameterError("HIFF-M has no built-in fitness; construct it with Problem::plugin");
}

std::vector<Genotype> enumerate_global_optima(const Problem& problem) {
    const std::uint64_t size = space_size(problem.n());
    double best = -std::numeric_limits<double>::infinity();
    std::vector<Genotype> optima;
    for (std::uint64_t x = 0; x < size; ++x) {
        const Genotype g{static_cast<std::uint32_t>(x)};
        const double f = problem.evaluate(g);
        if (f > best) {
            best = f;
            optima.assign(1, g);
        } else if (f == best) {
            optima.push_back(g);
        }
    }
    return optima;
}

// ---------------------------------------------------------------------------
// Landscape

Landscape::Landscape(Problem problem, unsigned threads) : problem_(std::move(problem)) {
    const std::uint64_t size = space_size(problem_.n());
    fitness_.resize(size);
    parallel_blocks(size, 1U << 14, threads, [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t) {
        for (std::uint64_t x = lo; x < hi; ++x)
            fitness_[x] = problem_.evaluate(Genotype{static_cast<std::uint32_t>(x)});
    });
    const double best = *std::max_element(fitness_.begin(), fitness_.end());
    for (std::uint64_t x = 0; x < size; ++x)
        if (fitness_[x] == best) optima_.push_back(Genotype{static_cast<std::uint32_t>(x)});
}

// ---------------------------------------------------------------------------
// Instance files

void write_instance_json(const Problem& problem, std::ostream& out) {
    nlohmann::json j;
    j["kind"] = std::string(to_string(problem.kind()));
    j["n"] = problem.n();
    j["seed"] = problem.seed();
    j["identifier"] = problem.identifier();
    auto neighbourhoods = nlohmann::json::array();
    auto tables = nlohmann::json::array();
    int k = 0;
    if (const auto* nk = problem.nk_instance()) {
        k = nk->k;
        for (const auto& nb : nk->neighbourhoods) neighbourhoods.push_back(nb);
        for (const auto& table : nk->tables) {
            auto row = nlohmann::json::array();
            for (double v : table) row.push_back(hex_double(v));
            tables.push_back(std::move(row));
        }
    }
    j["k"] = k;
    j["neighbourhoods"] = std::move(neighbourhoods);
    j["tables"] = std::move(tables);
    out << j.dump(1) << '\n';
}

Problem read_instance_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
        const auto kind = problem_kind_from_string(j.at("kind").get<std::string>());
        const int n = j.at("n").get<int>();
        const auto seed = j.at("seed").get<std::uint64_t>();
        auto identifier = j.at("identifier").get<std::string>();
        switch (kind) {
        case ProblemKind::NK: {
            NKInstance inst;
            inst.n = n;
            inst.k = j.at("k").get<int>();
            inst.seed = seed;
            inst.neighbourhoods = j.at("neighbourhoods").get<std::vector<std::vector<int>>>();
            for (const auto& row : j.at("tables")) {
                std::vector<double> table;
                for (const auto& v : row) table.push_back(parse_double(v.get<std::string>()));
                inst.tables.push_back(std::move(table));
            }
            try {
                return Problem::nk(std::move(inst), std::move(identifier));
            } catch (const ParameterError& e) {
                throw CorruptionError(std::string("instance file: ") + e.what());
            }
        }
        case ProblemKind::OneMax: return Problem::onemax(n, std::move(identifier)).with_seed(seed);
        case ProblemKind::HiffC: return Problem::hiff_c(n, std::move(identifier)).with_seed(seed);
        case ProblemKind::HiffM:
            throw ParameterError("instance file: HIFF-M is a plugin kind and cannot be loaded from file");
        }
    } catch (const nlohmann::json::exception& e) {
        throw CorruptionError(std::string("instance file: ") + e.what());
    }
    throw CorruptionError("instance file: unreachable kind");
}

} // namespace limax
