#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emaware/alu_alloc.hpp"
#include "emaware/cache_rotate.hpp"
#include "emaware/regfile_rotate.hpp"
#include "emaware/wear_stats.hpp"
#include "emaware/workload.hpp"

namespace emaware {

enum class StructureSel { Alu, RegFile, Cache, All };

StructureSel parse_structure(std::string_view name);

struct AluSimConfig {
    std::size_t units = 3;
    AllocPolicy baseline = AllocPolicy::FixedPriority;
    AllocPolicy aware = AllocPolicy::Algorithm1;
};

struct RegFileSimConfig {
    std::vector<std::string> rings{"gpr16", "fp32"};
    std::uint64_t rotation_period = kDefaultRegRotationPeriod;
    bool count_rotation_shifts = false;
};

/// Everything one `simulate` run needs. Exactly one of trace_path / gen is set.
struct RunConfig {
    std::optional<std::filesystem::path> trace_path;
    std::optional<GenSpec> gen;
    StructureSel structure = StructureSel::All;
    AluSimConfig alu;
    RegFileSimConfig regfile;
    /// Rotation periods here describe the aware run; the baseline run uses the
    /// same geometry with rotation disabled.
    HierarchyConfig cache = HierarchyConfig::defaults();
    std::filesystem::path out_dir = "emaware-out";

    void validate() const;
};

/// Baseline vs aware ALU allocation; ready counts above N are clamped to N.
StructureReport simulate_alu(std::span<const Event> events, const AluSimConfig& cfg);

/// Per-slot writes without rotation, for one ring. Events outside the ring are ignored.
std::vector<std::uint64_t> replay_regfile(std::span<const Event> events,
                                          const std::vector<RingMember>& ring,
                                          std::uint64_t rotation_period, bool count_rotation_shifts);

/// One report per ring, named "regfile.<ring>".
std::vector<StructureReport> simulate_regfile(std::span<const Event> events,
                                              const RegFileSimConfig& cfg);

CacheHierarchy replay_hierarchy(std::span<const Event> events, const HierarchyConfig& cfg);

/// Two reports per level: "cache.<name>" (line entries) and "cache.<name>.sets" (tag store).
std::vector<StructureReport> simulate_cache(std::span<const Event> events, const HierarchyConfig& cfg);

/// Runs the selected structures (independent ones concurrently); result order is fixed.
std::vector<StructureReport> run_simulation(std::span<const Event> events, const RunConfig& cfg);

/// Loads the trace, simulates, writes report.csv / report.json / counts.csv
/// into cfg.out_dir and prints a summary to `summary`.
std::vector<StructureReport> cmd_simulate(const RunConfig& cfg, std::ostream& summary);

} // namespace emaware
