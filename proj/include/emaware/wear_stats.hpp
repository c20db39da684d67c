#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace emaware {

/**
 * Per-entry write counts bucketed by their share r = 100 * count / max:
 *   bin 0: r <= 25, bin 1: 25 < r <= 50, bin 2: 50 < r <= 75,
 *   bin 3: 75 < r <= 90, bin 4: r > 90.
 * All-zero input puts every entry in bin 0 with max_writes == 0.
 */
struct WriteHistogram {
    std::array<std::uint64_t, 5> bins{};
    std::uint64_t max_writes = 0;
    double avg_writes = 0.0;
    std::uint64_t num_entries = 0;

    bool operator==(const WriteHistogram&) const = default;
};

/// Throws std::invalid_argument on empty input.
WriteHistogram histogram(std::span<const std::uint64_t> counts);

/// mean / max. Throws DomainError when max == 0, std::invalid_argument when empty.
double avg_to_max(std::span<const std::uint64_t> counts);

struct StructureReport {
    std::string structure;
    std::uint64_t num_entries = 0;
    WriteHistogram histogram_baseline;
    WriteHistogram histogram_aware;
    /// Absent when the run recorded no writes at all.
    std::optional<double> avg_to_max_baseline;
    std::optional<double> avg_to_max_aware;
    /// max_baseline / max_aware - 1; absent means unbounded (aware max is 0
    /// while the baseline max is not). Two all-zero runs give 0.
    std::optional<double> mtf_improvement;
    std::vector<std::uint64_t> counts_baseline;
    std::vector<std::uint64_t> counts_aware;
};

/// Both runs must cover the same duration and have the same number of entries.
StructureReport improvement_report(std::span<const std::uint64_t> baseline,
                                   std::span<const std::uint64_t> aware, std::string structure);

/// Ratio-space geometric mean: (prod (1 + x_i))^(1/n) - 1. Throws DomainError on x_i <= -1.
double geo_mean(std::span<const double> improvements);

} // namespace emaware
