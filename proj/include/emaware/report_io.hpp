#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "emaware/wear_stats.hpp"

namespace emaware {

// report.csv columns:
//   structure,num_entries,max_baseline,max_aware,avg_to_max_baseline,avg_to_max_aware,
//   bins_baseline_0..4,bins_aware_0..4,mtf_improvement,mtf_improvement_pct
// Reals use the shortest round-trip decimal; mtf_improvement_pct is the
// rounded display column. Undefined ratios are empty cells, an unbounded
// improvement is the literal "unbounded".

void write_reports_csv(std::ostream& out, std::span<const StructureReport> reports);
/// Plot-ready per-entry counts: structure,entry,baseline,aware.
void write_counts_csv(std::ostream& out, std::span<const StructureReport> reports);

nlohmann::ordered_json reports_to_json(std::span<const StructureReport> reports);
std::vector<StructureReport> reports_from_json(const nlohmann::json& j);

std::string format_real(double x);
std::string format_improvement(const std::optional<double>& imp);

/// Aggregate of one structure across several runs.
struct MergedRow {
    std::string structure;
    std::size_t runs = 0;
    /// Absent when any run's improvement is unbounded.
    std::optional<double> geo_mean_improvement;
};

/// Groups by structure name (first-seen order) and takes the ratio-space geometric mean.
std::vector<MergedRow> merge_reports(std::span<const std::vector<StructureReport>> runs);

void write_merged_csv(std::ostream& out, std::span<const MergedRow> rows);
nlohmann::ordered_json merged_to_json(std::span<const MergedRow> rows);

} // namespace emaware
