#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace limax::stats {

struct Summary {
    std::uint64_t count = 0;
    double mean = 0.0;
    double std = 0.0; // sample standard deviation; 0 when count == 1
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
    /// t(0.975, count-1) * std / sqrt(count); undefined for a single value.
    std::optional<double> ci95_halfwidth;
};

/// Throws ParameterError on empty input.
Summary summarize(std::span<const double> values);

/// Two-sided 95% Student-t critical value with `df` degrees of freedom.
double t_critical_95(std::uint64_t df);

double median(std::vector<double> values);

/// Ranks starting at 1; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// nullopt when either side has zero variance or fewer than two points.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

/// Two-sided p-value of the paired t-test of mean(a - b) = 0.
/// nullopt when fewer than two pairs or the differences are constant.
std::optional<double> paired_t_test(std::span<const double> a, std::span<const double> b);

} // namespace limax::stats
