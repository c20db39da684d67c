#include "emaware/wear_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "emaware/em_models.hpp"
#include "emaware/errors.hpp"

namespace emaware {

namespace {

std::size_t bin_of(std::uint64_t count, std::uint64_t max)
{
    // Integer comparison of 100*count against edge*max keeps the edges exact.
    __extension__ typedef unsigned __int128 wide;
    const wide scaled = static_cast<wide>(count) * 100;
    const wide m = max;
    if (scaled <= 25 * m) return 0;
    if (scaled <= 50 * m) return 1;
    if (scaled <= 75 * m) return 2;
    if (scaled <= 90 * m) return 3;
    return 4;
}

} // namespace

WriteHistogram histogram(std::span<const std::uint64_t> counts)
{
    if (counts.empty())
        throw std::invalid_argument("histogram of an empty structure");
    WriteHistogram h;
    h.num_entries = counts.size();
    h.max_writes = *std::max_element(counts.begin(), counts.end());
    long double sum = 0;
    for (auto c : counts)
        sum += c;
    h.avg_writes = static_cast<double>(sum / static_cast<long double>(counts.size()));
    for (auto c : counts)
        ++h.bins[h.max_writes == 0 ? 0 : bin_of(c, h.max_writes)];
    return h;
}

double avg_to_max(std::span<const std::uint64_t> counts)
{
    const WriteHistogram h = histogram(counts);
    if (h.max_writes == 0)
        throw DomainError("average-to-maximum ratio undefined: no writes recorded");
    return h.avg_writes / static_cast<double>(h.max_writes);
}

StructureReport improvement_report(std::span<const std::uint64_t> baseline,
                                   std::span<const std::uint64_t> aware, std::string structure)
{
    if (baseline.size() != aware.size())
        throw std::invalid_argument(structure + ": baseline and aware runs differ in entry count");
    StructureReport r;
    r.structure = std::move(structure);
    r.num_entries = baseline.size();
    r.histogram_baseline = histogram(baseline);
    r.histogram_aware = histogram(aware);
    r.counts_baseline.assign(baseline.begin(), baseline.end());
    r.counts_aware.assign(aware.begin(), aware.end());

    const auto ratio = [](const WriteHistogram& h) -> std::optional<double> {
        if (h.max_writes == 0)
            return std::nullopt;
        return h.avg_writes / static_cast<double>(h.max_writes);
    };
    r.avg_to_max_baseline = ratio(r.histogram_baseline);
    r.avg_to_max_aware = ratio(r.histogram_aware);

    const auto max_base = r.histogram_baseline.max_writes;
    const auto max_aware = r.histogram_aware.max_writes;
    if (max_base == 0 && max_aware == 0)
        r.mtf_improvement = 0.0;
    else if (max_aware == 0)
        r.mtf_improvement = std::nullopt;
    else if (max_base == 0)
        r.mtf_improvement = -1.0;
    else
        r.mtf_improvement =
            em::mtf_improvement(static_cast<double>(max_base), static_cast<double>(max_aware));
    return r;
}

double geo_mean(std::span<const double> improvements)
{
    if (improvements.empty())
        throw std::invalid_argument("geometric mean of an empty set");
    double log_sum = 0;
    for (double x : improvements) {
        if (!(x > -1.0))
            throw DomainError("improvement must be > -1 for a geometric mean");
        log_sum += std::log1p(x);
    }
    return std::expm1(log_sum / static_cast<double>(improvements.size()));
}

} // namespace emaware
