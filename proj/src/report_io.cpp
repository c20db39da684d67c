#include "emaware/report_io.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "emaware/errors.hpp"

namespace emaware {

using nlohmann::json;
using nlohmann::ordered_json;

std::string format_real(double x)
{
    return fmt::format("{}", x);
}

std::string format_improvement(const std::optional<double>& imp)
{
    return imp ? format_real(*imp) : std::string("unbounded");
}

namespace {

std::string opt_cell(const std::optional<double>& v)
{
    return v ? format_real(*v) : std::string();
}

std::string pct_cell(const std::optional<double>& imp)
{
    if (!imp)
        return "unbounded";
    double pct = *imp * 100.0;
    if (pct == 0.0)
        pct = 0.0; // fold -0
    return fmt::format("{:.1f}", pct);
}

ordered_json histogram_json(const WriteHistogram& h)
{
    ordered_json j;
    j["bins"] = h.bins;
    j["max_writes"] = h.max_writes;
    j["avg_writes"] = h.avg_writes;
    j["num_entries"] = h.num_entries;
    return j;
}

WriteHistogram histogram_from(const json& j)
{
    WriteHistogram h;
    h.bins = j.at("bins").get<std::array<std::uint64_t, 5>>();
    h.max_writes = j.at("max_writes").get<std::uint64_t>();
    h.avg_writes = j.at("avg_writes").get<double>();
    h.num_entries = j.at("num_entries").get<std::uint64_t>();
    return h;
}

template <typename J>
J optional_real(const std::optional<double>& v)
{
    return v ? J(*v) : J(nullptr);
}

} // namespace

void write_reports_csv(std::ostream& out, std::span<const StructureReport> reports)
{
    out << "structure,num_entries,max_baseline,max_aware,avg_to_max_baseline,avg_to_max_aware";
    for (int i = 0; i < 5; ++i)
        out << ",bins_baseline_" << i;
    for (int i = 0; i < 5; ++i)
        out << ",bins_aware_" << i;
    out << ",mtf_improvement,mtf_improvement_pct\n";
    for (const auto& r : reports) {
        out << r.structure << ',' << r.num_entries << ',' << r.histogram_baseline.max_writes << ','
            << r.histogram_aware.max_writes << ',' << opt_cell(r.avg_to_max_baseline) << ','
            << opt_cell(r.avg_to_max_aware);
        for (auto b : r.histogram_baseline.bins)
            out << ',' << b;
        for (auto b : r.histogram_aware.bins)
            out << ',' << b;
        out << ',' << format_improvement(r.mtf_improvement) << ',' << pct_cell(r.mtf_improvement)
            << '\n';
    }
}

void write_counts_csv(std::ostream& out, std::span<const StructureReport> reports)
{
    out << "structure,entry,baseline,aware\n";
    for (const auto& r : reports)
        for (std::size_t i = 0; i < r.counts_baseline.size(); ++i)
            out << r.structure << ',' << i << ',' << r.counts_baseline[i] << ','
                << r.counts_aware[i] << '\n';
}

ordered_json reports_to_json(std::span<const StructureReport> reports)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["structure"] = r.structure;
        j["num_entries"] = r.num_entries;
        j["max_baseline"] = r.histogram_baseline.max_writes;
        j["max_aware"] = r.histogram_aware.max_writes;
        j["avg_to_max_baseline"] = optional_real<ordered_json>(r.avg_to_max_baseline);
        j["avg_to_max_aware"] = optional_real<ordered_json>(r.avg_to_max_aware);
        j["bins_baseline"] = r.histogram_baseline.bins;
        j["bins_aware"] = r.histogram_aware.bins;
        if (r.mtf_improvement)
            j["mtf_improvement"] = *r.mtf_improvement;
        else
            j["mtf_improvement"] = "unbounded";
        j["mtf_improvement_pct"] = pct_cell(r.mtf_improvement);
        j["histogram_baseline"] = histogram_json(r.histogram_baseline);
        j["histogram_aware"] = histogram_json(r.histogram_aware);
        j["counts_baseline"] = r.counts_baseline;
        j["counts_aware"] = r.counts_aware;
        arr.push_back(std::move(j));
    }
    ordered_json doc;
    doc["format"] = "emaware-report-v1";
    doc["structures"] = std::move(arr);
    return doc;
}

std::vector<StructureReport> reports_from_json(const json& doc)
{
    try {
        if (doc.at("format").get<std::string>() != "emaware-report-v1")
            throw ConfigError("unsupported report format");
        std::vector<StructureReport> out;
        for (const auto& j : doc.at("structures")) {
            StructureReport r;
            r.structure = j.at("structure").get<std::string>();
            r.num_entries = j.at("num_entries").get<std::uint64_t>();
            r.histogram_baseline = histogram_from(j.at("histogram_baseline"));
            r.histogram_aware = histogram_from(j.at("histogram_aware"));
            const auto ratio = [&j](const char* key) -> std::optional<double> {
                if (j.at(key).is_null())
                    return std::nullopt;
                return j.at(key).get<double>();
            };
            r.avg_to_max_baseline = ratio("avg_to_max_baseline");
            r.avg_to_max_aware = ratio("avg_to_max_aware");
            const auto& imp = j.at("mtf_improvement");
            if (imp.is_string()) {
                if (imp.get<std::string>() != "unbounded")
                    throw ConfigError("mtf_improvement must be a number or \"unbounded\"");
            } else {
                r.mtf_improvement = imp.get<double>();
            }
            r.counts_baseline = j.at("counts_baseline").get<std::vector<std::uint64_t>>();
            r.counts_aware = j.at("counts_aware").get<std::vector<std::uint64_t>>();
            out.push_back(std::move(r));
        }
        return out;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed report JSON: ") + e.what());
    }
}

std::vector<MergedRow> merge_reports(std::span<const std::vector<StructureReport>> runs)
{
    std::vector<MergedRow> rows;
    std::vector<std::vector<double>> values;
    std::vector<bool> unbounded;
    for (const auto& run : runs) {
        for (const auto& r : run) {
            std::size_t i = 0;
            while (i < rows.size() && rows[i].structure != r.structure)
                ++i;
            if (i == rows.size()) {
                rows.push_back({r.structure, 0, std::nullopt});
                values.emplace_back();
                unbounded.push_back(false);
            }
            ++rows[i].runs;
            if (r.mtf_improvement)
                values[i].push_back(*r.mtf_improvement);
            else
                unbounded[i] = true;
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!unbounded[i])
            rows[i].geo_mean_improvement = geo_mean(values[i]);
    return rows;
}

void write_merged_csv(std::ostream& out, std::span<const MergedRow> rows)
{
    out << "structure,runs,geo_mean_improvement,geo_mean_improvement_pct\n";
    for (const auto& r : rows)
        out << r.structure << ',' << r.runs << ',' << format_improvement(r.geo_mean_improvement) << ','
            << pct_cell(r.geo_mean_improvement) << '\n';
}

ordered_json merged_to_json(std::span<const MergedRow> rows)
{
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["structure"] = r.structure;
        j["runs"] = r.runs;
        if (r.geo_mean_improvement)
            j["geo_mean_improvement"] = *r.geo_mean_improvement;
        else
            j["geo_mean_improvement"] = "unbounded";
        arr.push_back(std::move(j));
    }
    ordered_json doc;
    doc["format"] = "emaware-merge-v1";
    doc["structures"] = std::move(arr);
    return doc;
}

} // namespace emaware
