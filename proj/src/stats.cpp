#include "limax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "limax/errors.hpp"

namespace limax::stats {

double median(std::vector<double> values) {
    if (values.empty()) throw ParameterError("median of empty sequence");
    const auto mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double upper = values[mid];
    if (values.size() % 2 == 1) return upper;
    const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return lower + (upper - lower) / 2.0;
}

double t_critical_95(std::uint64_t df) {
    if (df == 0) throw ParameterError("t quantile needs df >= 1");
    const boost::math::students_t dist(static_cast<double>(df));
    return boost::math::quantile(dist, 0.975);
}

Summary summarize(std::span<const double> values) {
    if (values.empty()) throw ParameterError("summarize: empty input");
    Summary s;
    s.count = values.size();
    // Sort first so the result does not depend on input order.
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    const double n = static_cast<double>(s.count);
    s.mean = std::accumulate(sorted.begin(), sorted.end(), 0.0) / n;
    const auto mid = sorted.size() / 2;
    s.median = sorted.size() % 2 ? sorted[mid] : sorted[mid - 1] + (sorted[mid] - sorted[mid - 1]) / 2.0;
    if (s.count > 1) {
        double ss = 0.0;
        for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / (n - 1.0));
        s.ci95_halfwidth = t_critical_95(s.count - 1) * s.std / std::sqrt(n);
    }
    return s;
}

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = rank;
        i = j + 1;
    }
    return ranks;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ParameterError("pearson: length mismatch");
    if (x.size() < 2) return std::nullopt;
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) return std::nullopt;
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw ParameterError("spearman: length mismatch");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    return pearson(rx, ry);
}

std::optional<double> paired_t_test(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ParameterError("paired_t_test: length mismatch");
    if (a.size() < 2) return std::nullopt;
    std::vector<double> diff(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
    const auto s = summarize(diff);
    if (s.std == 0.0) return std::nullopt;
    const double t = s.mean / (s.std / std::sqrt(static_cast<double>(s.count)));
    const boost::math::students_t dist(static_cast<double>(s.count - 1));
    return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

} // namespace limax::stats
