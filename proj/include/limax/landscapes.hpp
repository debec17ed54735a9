#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "limax/genotype.hpp"

namespace limax {

enum class ProblemKind { NK, OneMax, HiffC, HiffM };

std::string_view to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(std::string_view name);

/// NK landscape with random neighbourhoods.
///
/// The local configuration of locus i is read with locus i as the high-order
/// bit followed by its neighbours in ascending locus order; that integer
/// indexes tables[i].
struct NKInstance {
    int n = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> neighbourhoods; // sorted ascending, size k, never containing i
    std::vector<std::vector<double>> tables;      // size 2^(k+1), entries in [0, 1)

    std::uint32_t local_configuration(int locus, Genotype g) const;
    double evaluate(Genotype g) const;

    bool operator==(const NKInstance&) const = default;
};

/// Draws an NK instance. Each locus i owns an Rng seeded with
/// mix_seed(seed, i): its neighbourhood is drawn first (partial Fisher-Yates
/// over the other loci), then its table entries in configuration order.
NKInstance nk_generate(int n, int k, std::uint64_t seed);

double onemax_fitness(Genotype g);

/// Canonical HIFF: every block of 2^m equal bits contributes 2^m (m = 0 for
/// single bits), summed over the full binary block hierarchy.
double hiff_fitness(Genotype g, int n);

using FitnessFunction = std::function<double(Genotype)>;

/// A fitness function over {0,1}^n plus what is needed to reproduce it.
/// Immutable and safe to share between threads.
class Problem {
public:
    static Problem nk(NKInstance instance, std::string identifier = {});
    static Problem onemax(int n, std::string identifier = {});
    static Problem hiff_c(int n, std::string identifier = {});
    /// Slot for fitness models defined elsewhere (HIFF-M). `fitness` must be pure.
    static Problem plugin(int n, FitnessFunction fitness, std::string identifier = {},
                          ProblemKind kind = ProblemKind::HiffM);

    ProblemKind kind() const noexcept { return kind_; }
    int n() const noexcept { return n_; }
    const std::string& identifier() const noexcept { return identifier_; }
    /// Carried into instance files; for NK it is also the generation seed.
    std::uint64_t seed() const noexcept { return seed_; }
    Problem with_seed(std::uint64_t seed) const;
    Problem with_identifier(std::string identifier) const;

    /// nullptr unless kind() == NK.
    const NKInstance* nk_instance() const noexcept { return nk_.get(); }

    double evaluate(Genotype g) const;

private:
    Problem() = default;

    ProblemKind kind_ = ProblemKind::OneMax;
    int n_ = 0;
    std::uint64_t seed_ = 0;
    std::string identifier_;
    std::shared_ptr<const NKInstance> nk_;
    FitnessFunction plugin_;
};

/// Exhaustively evaluates the problem; all argmax genotypes in ascending order.
std::vector<Genotype> enumerate_global_optima(const Problem& problem);

/// A problem together with its full fitness table, built once and shared by
/// the walker and local-optimum scoring.
class Landscape {
public:
    explicit Landscape(Problem problem, unsigned threads = 0);

    const Problem& problem() const noexcept { return problem_; }
    int n() const noexcept { return problem_.n(); }
    std::uint64_t size() const noexcept { return fitness_.size(); }
    double fitness(Genotype g) const { return fitness_[g.bits]; }
    std::span<const double> fitness_table() const noexcept { return fitness_; }
    const std::vector<Genotype>& global_optima() const noexcept { return optima_; }

private:
    Problem problem_;
    std::vector<double> fitness_;
    std::vector<Genotype> optima_;
};

/// JSON instance file: {kind, n, k, seed, neighbourhoods, tables, identifier}
/// with table entries as hexadecimal float strings.
void write_instance_json(const Problem& problem, std::ostream& out);
/// Plugin problems cannot be reconstructed from a file and raise ParameterError.
Problem read_instance_json(std::istream& in);

} // namespace limax
