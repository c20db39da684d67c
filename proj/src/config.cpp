#include "emaware/config.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "emaware/errors.hpp"

namespace emaware {

using nlohmann::json;

namespace {

void check_keys(const json& j, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    if (!j.is_object())
        throw ConfigError(std::string(where) + ": expected a JSON object");
    for (const auto& [key, _] : j.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || key == a;
        if (!ok)
            throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
    }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback)
{
    if (!j.contains(key))
        return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

template <typename T>
T get_required(const json& j, const char* key, std::string_view where)
{
    if (!j.contains(key))
        throw ConfigError(std::string(where) + ": missing '" + key + "'");
    return get_or<T>(j, key, T{});
}

RegClass reg_class_from(std::string_view s)
{
    if (s == "GPR") return RegClass::GPR;
    if (s == "FP") return RegClass::FP;
    if (s == "FLAGS") return RegClass::FLAGS;
    if (s == "SP") return RegClass::SP;
    throw ConfigError("unknown register class '" + std::string(s) + "'");
}

AddrSpace space_from(std::string_view s)
{
    if (s == "D") return AddrSpace::Data;
    if (s == "I") return AddrSpace::Instr;
    throw ConfigError("address space must be \"D\" or \"I\"");
}

CacheConfig level_from_json(const json& j, std::uint64_t default_period)
{
    check_keys(j, "cache level", {"role", "name", "sets", "entries", "size_bytes", "ways",
                                  "line_bytes", "rotation_period", "write_allocate"});
    CacheConfig c;
    c.role = parse_level_role(get_required<std::string>(j, "role", "cache level"));
    c.name = get_or<std::string>(j, "name", std::string(to_string(c.role)));
    c.ways = get_required<std::uint32_t>(j, "ways", c.name);
    const bool tlb = c.role == LevelRole::DTLB || c.role == LevelRole::ITLB || c.role == LevelRole::STLB;
    c.line_bytes = get_or<std::uint64_t>(j, "line_bytes", tlb ? 1 : 64);
    c.rotation_period = get_or<std::uint64_t>(j, "rotation_period", default_period);
    c.write_allocate = get_or<bool>(j, "write_allocate", true);
    if (c.ways == 0)
        throw ConfigError(c.name + ": ways must be >= 1");
    const int given = int(j.contains("sets")) + int(j.contains("entries")) + int(j.contains("size_bytes"));
    if (given != 1)
        throw ConfigError(c.name + ": give exactly one of sets, entries, size_bytes");
    if (j.contains("sets")) {
        c.sets = get_or<std::uint64_t>(j, "sets", 0);
    } else {
        std::uint64_t entries = j.contains("entries")
                                    ? get_or<std::uint64_t>(j, "entries", 0)
                                    : get_or<std::uint64_t>(j, "size_bytes", 0) / c.line_bytes;
        if (entries % c.ways != 0)
            throw ConfigError(c.name + ": entry count is not a multiple of the associativity");
        c.sets = entries / c.ways;
    }
    c.validate();
    return c;
}

} // namespace

GenSpec gen_spec_from_json(const json& j)
{
    if (!j.is_object())
        throw ConfigError("generator spec must be a JSON object");
    GenSpec spec;
    const auto kind = get_required<std::string>(j, "kind", "generator spec");
    spec.seed = get_or<std::uint64_t>(j, "seed", 1);
    spec.length = get_or<std::uint64_t>(j, "length", 0);
    if (kind == "zipf") {
        check_keys(j, "zipf spec", {"kind", "seed", "length", "num_regs", "zipf_s", "reg_class"});
        ZipfRegWrites z;
        z.num_regs = get_or<std::uint32_t>(j, "num_regs", z.num_regs);
        z.zipf_s = get_or<double>(j, "zipf_s", z.zipf_s);
        z.reg_class = reg_class_from(get_or<std::string>(j, "reg_class", "GPR"));
        spec.kind = z;
    } else if (kind == "skewed") {
        check_keys(j, "skewed spec", {"kind", "seed", "length", "working_set_lines", "hot_fraction",
                                      "hot_weight", "line_bytes", "write_fraction", "base_address",
                                      "space"});
        SkewedAddrs s;
        s.working_set_lines = get_or<std::uint64_t>(j, "working_set_lines", s.working_set_lines);
        s.hot_fraction = get_or<double>(j, "hot_fraction", s.hot_fraction);
        s.hot_weight = get_or<double>(j, "hot_weight", s.hot_weight);
        s.line_bytes = get_or<std::uint64_t>(j, "line_bytes", s.line_bytes);
        s.write_fraction = get_or<double>(j, "write_fraction", s.write_fraction);
        s.base_address = get_or<std::uint64_t>(j, "base_address", s.base_address);
        s.space = space_from(get_or<std::string>(j, "space", "D"));
        spec.kind = s;
    } else if (kind == "alu") {
        check_keys(j, "alu spec", {"kind", "seed", "length", "max_width", "width_distribution"});
        AluBursts a;
        a.max_width = get_or<std::uint32_t>(j, "max_width", a.max_width);
        a.width_weights = get_or<std::vector<double>>(j, "width_distribution", {});
        spec.kind = a;
    } else {
        throw ConfigError("unknown generator kind '" + kind + "' (expected zipf, skewed or alu)");
    }
    spec.validate();
    return spec;
}

json gen_spec_to_json(const GenSpec& spec)
{
    json j;
    j["seed"] = spec.seed;
    j["length"] = spec.length;
    std::visit(
        [&j](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ZipfRegWrites>) {
                j["kind"] = "zipf";
                j["num_regs"] = k.num_regs;
                j["zipf_s"] = k.zipf_s;
                j["reg_class"] = std::string(to_string(k.reg_class));
            } else if constexpr (std::is_same_v<T, SkewedAddrs>) {
                j["kind"] = "skewed";
                j["working_set_lines"] = k.working_set_lines;
                j["hot_fraction"] = k.hot_fraction;
                j["hot_weight"] = k.hot_weight;
                j["line_bytes"] = k.line_bytes;
                j["write_fraction"] = k.write_fraction;
                j["base_address"] = k.base_address;
                j["space"] = k.space == AddrSpace::Instr ? "I" : "D";
            } else {
                j["kind"] = "alu";
                j["max_width"] = k.max_width;
                j["width_distribution"] = k.width_weights;
            }
        },
        spec.kind);
    return j;
}

json load_json_arg(std::string_view arg)
{
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && arg[first] == '{') {
        text = std::string(arg);
    } else {
        std::ifstream in{std::filesystem::path(arg)};
        if (!in)
            throw ConfigError("cannot open JSON file '" + std::string(arg) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

HierarchyConfig hierarchy_from_json(const json& j)
{
    check_keys(j, "cache", {"rotation_period", "count_rotation_writebacks", "page_bytes", "levels"});
    const auto period = get_or<std::uint64_t>(j, "rotation_period", kDefaultCacheRotationPeriod);
    HierarchyConfig h = HierarchyConfig::defaults(period);
    if (j.contains("levels")) {
        if (!j.at("levels").is_array())
            throw ConfigError("cache.levels must be an array");
        h.levels.clear();
        for (const auto& level : j.at("levels"))
            h.levels.push_back(level_from_json(level, period));
    }
    h.count_rotation_writebacks = get_or<bool>(j, "count_rotation_writebacks", true);
    h.page_bytes = get_or<std::uint64_t>(j, "page_bytes", h.page_bytes);
    h.validate();
    return h;
}

RunConfig run_config_from_json(const json& j)
{
    check_keys(j, "config", {"trace", "gen", "structure", "alu", "regfile", "cache", "out", "seed"});
    RunConfig cfg;
    if (j.contains("trace"))
        cfg.trace_path = get_or<std::string>(j, "trace", "");
    if (j.contains("gen"))
        cfg.gen = gen_spec_from_json(j.at("gen"));
    if (j.contains("seed")) {
        if (!cfg.gen)
            throw ConfigError("'seed' only applies to generated traces");
        cfg.gen->seed = get_or<std::uint64_t>(j, "seed", 0);
    }
    if (j.contains("structure"))
        cfg.structure = parse_structure(get_or<std::string>(j, "structure", "all"));
    if (j.contains("out"))
        cfg.out_dir = get_or<std::string>(j, "out", "");
    if (j.contains("alu")) {
        const json& a = j.at("alu");
        check_keys(a, "alu", {"units", "baseline", "aware"});
        cfg.alu.units = get_or<std::size_t>(a, "units", cfg.alu.units);
        if (a.contains("baseline"))
            cfg.alu.baseline = parse_alloc_policy(get_or<std::string>(a, "baseline", ""));
        if (a.contains("aware"))
            cfg.alu.aware = parse_alloc_policy(get_or<std::string>(a, "aware", ""));
    }
    if (j.contains("regfile")) {
        const json& r = j.at("regfile");
        check_keys(r, "regfile", {"rings", "rotation_period", "count_rotation_shifts"});
        cfg.regfile.rings = get_or<std::vector<std::string>>(r, "rings", cfg.regfile.rings);
        cfg.regfile.rotation_period =
            get_or<std::uint64_t>(r, "rotation_period", cfg.regfile.rotation_period);
        cfg.regfile.count_rotation_shifts =
            get_or<bool>(r, "count_rotation_shifts", cfg.regfile.count_rotation_shifts);
    }
    if (j.contains("cache"))
        cfg.cache = hierarchy_from_json(j.at("cache"));
    return cfg;
}

} // namespace emaware
