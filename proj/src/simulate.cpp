#include "emaware/simulate.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <ostream>

#include <fmt/format.h>

#include "emaware/errors.hpp"
#include "emaware/report_io.hpp"

namespace emaware {

StructureSel parse_structure(std::string_view name)
{
    if (name == "alu") return StructureSel::Alu;
    if (name == "regfile") return StructureSel::RegFile;
    if (name == "cache") return StructureSel::Cache;
    if (name == "all") return StructureSel::All;
    throw ConfigError("unknown structure '" + std::string(name) +
                      "' (expected alu, regfile, cache or all)");
}

void RunConfig::validate() const
{
    if (trace_path.has_value() == gen.has_value())
        throw ConfigError("give exactly one trace source: --trace or --gen");
    if (trace_path && !std::filesystem::is_regular_file(*trace_path))
        throw ConfigError("trace file '" + trace_path->string() + "' does not exist");
    if (gen)
        gen->validate();
    if (alu.units < 1)
        throw ConfigError("alu.units must be >= 1");
    for (const auto& ring : regfile.rings)
        ring_preset(ring);
    cache.validate();
    if (out_dir.empty())
        throw ConfigError("output directory must not be empty");
}

namespace {

std::vector<std::uint64_t> replay_alu(std::span<const Event> events, std::size_t units,
                                      AllocPolicy policy)
{
    AluAllocator alloc(units, policy);
    for (const Event& ev : events)
        if (const auto* a = std::get_if<AluIssue>(&ev.payload))
            alloc.allocate(std::min<std::size_t>(a->ready_count, units));
    return alloc.usage_snapshot();
}

} // namespace

StructureReport simulate_alu(std::span<const Event> events, const AluSimConfig& cfg)
{
    auto base = std::async(std::launch::async, replay_alu, events, cfg.units, cfg.baseline);
    const auto aware = replay_alu(events, cfg.units, cfg.aware);
    return improvement_report(base.get(), aware, "alu");
}

std::vector<std::uint64_t> replay_regfile(std::span<const Event> events,
                                          const std::vector<RingMember>& ring,
                                          std::uint64_t rotation_period, bool count_rotation_shifts)
{
    RotatingRegFile rf(ring, rotation_period, count_rotation_shifts);
    for (const Event& ev : events) {
        const auto* w = std::get_if<RegWrite>(&ev.payload);
        if (!w)
            continue;
        const auto idx = rf.ring_index(w->reg_class, w->arch_id);
        if (!idx)
            continue;
        rf.advance_to(ev.cycle);
        rf.write(*idx, ev.cycle);
    }
    return rf.phys_writes();
}

std::vector<StructureReport> simulate_regfile(std::span<const Event> events,
                                              const RegFileSimConfig& cfg)
{
    std::vector<StructureReport> out;
    for (const auto& name : cfg.rings) {
        const auto ring = ring_preset(name);
        auto base = std::async(std::launch::async, replay_regfile, events, std::cref(ring),
                               std::uint64_t{0}, false);
        const auto aware =
            replay_regfile(events, ring, cfg.rotation_period, cfg.count_rotation_shifts);
        out.push_back(improvement_report(base.get(), aware, "regfile." + name));
    }
    return out;
}

CacheHierarchy replay_hierarchy(std::span<const Event> events, const HierarchyConfig& cfg)
{
    CacheHierarchy h(cfg);
    for (const Event& ev : events)
        if (const auto* m = std::get_if<MemAccess>(&ev.payload))
            h.access(m->address, m->kind, m->space);
    return h;
}

std::vector<StructureReport> simulate_cache(std::span<const Event> events, const HierarchyConfig& cfg)
{
    auto base = std::async(std::launch::async, replay_hierarchy, events,
                           cfg.with_rotation_period(0));
    const CacheHierarchy aware = replay_hierarchy(events, cfg);
    const CacheHierarchy baseline = base.get();

    std::vector<StructureReport> out;
    for (std::size_t i = 0; i < aware.levels().size(); ++i) {
        const RotatingCache& a = aware.levels()[i];
        const RotatingCache& b = baseline.levels()[i];
        const std::string name = "cache." + a.config().name;
        out.push_back(improvement_report(b.line_writes(), a.line_writes(), name));
        out.push_back(improvement_report(b.set_writes(), a.set_writes(), name + ".sets"));
    }
    return out;
}

std::vector<StructureReport> run_simulation(std::span<const Event> events, const RunConfig& cfg)
{
    const bool all = cfg.structure == StructureSel::All;
    std::future<StructureReport> alu;
    std::future<std::vector<StructureReport>> rf;
    std::future<std::vector<StructureReport>> cache;
    if (all || cfg.structure == StructureSel::Alu)
        alu = std::async(std::launch::async, simulate_alu, events, std::cref(cfg.alu));
    if (all || cfg.structure == StructureSel::RegFile)
        rf = std::async(std::launch::async, simulate_regfile, events, std::cref(cfg.regfile));
    if (all || cfg.structure == StructureSel::Cache)
        cache = std::async(std::launch::async, simulate_cache, events, std::cref(cfg.cache));

    std::vector<StructureReport> reports;
    if (alu.valid())
        reports.push_back(alu.get());
    for (auto* f : {&rf, &cache})
        if (f->valid())
            for (auto& r : f->get())
                reports.push_back(std::move(r));
    return reports;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
    if (!out)
        throw ConfigError("write failed for '" + path.string() + "'");
}

} // namespace

std::vector<StructureReport> cmd_simulate(const RunConfig& cfg, std::ostream& summary)
{
    cfg.validate();
    std::vector<Event> events;
    if (cfg.trace_path) {
        std::ifstream in(*cfg.trace_path);
        if (!in)
            throw ConfigError("cannot open trace '" + cfg.trace_path->string() + "'");
        events = parse_trace(in);
    } else {
        events = generate(*cfg.gen);
    }

    auto reports = run_simulation(events, cfg);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + cfg.out_dir.string() +
                          "': " + ec.message());
    std::ostringstream csv, counts;
    write_reports_csv(csv, reports);
    write_counts_csv(counts, reports);
    write_file(cfg.out_dir / "report.csv", csv.str());
    write_file(cfg.out_dir / "counts.csv", counts.str());
    write_file(cfg.out_dir / "report.json", reports_to_json(reports).dump(2) + "\n");

    summary << fmt::format("{:<24} {:>8} {:>14} {:>14} {:>14}\n", "structure", "entries",
                           "max_baseline", "max_aware", "mtf_improv_%");
    for (const auto& r : reports) {
        const std::string imp =
            r.mtf_improvement ? fmt::format("{:.1f}", *r.mtf_improvement * 100.0) : "unbounded";
        summary << fmt::format("{:<24} {:>8} {:>14} {:>14} {:>14}\n", r.structure, r.num_entries,
                               r.histogram_baseline.max_writes, r.histogram_aware.max_writes, imp);
    }
    return reports;
}

} // namespace emaware
