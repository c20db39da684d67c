// emaware: baseline vs electromigration-aware allocation experiments.
//
//   emaware simulate   --gen spec.json --structure all --out results/
//   emaware gen-trace  --gen spec.json --out trace.txt
//   emaware em-calc    lifetime-extension 0.32
//   emaware report-merge results/a/report.json results/b/report.json --out merged/
//
// Exit codes: 0 ok, 2 configuration error, 3 trace parse error, 4 model/domain error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <fmt/format.h>

#include "emaware/config.hpp"
#include "emaware/em_models.hpp"
#include "emaware/errors.hpp"
#include "emaware/report_io.hpp"
#include "emaware/simulate.hpp"

namespace {

using namespace emaware;

constexpr int kExitConfig = 2;
constexpr int kExitTrace = 3;
constexpr int kExitDomain = 4;

struct SimulateArgs {
    std::string trace, gen, structure, policy, config, out;
    std::optional<std::uint64_t> seed, rotation_period;
    bool count_rotation_shifts = false;
    bool exclude_rotation_writebacks = false;
};

int run_simulate(const SimulateArgs& a)
{
    RunConfig cfg;
    if (!a.config.empty())
        cfg = run_config_from_json(load_json_arg(a.config));
    if (!a.trace.empty()) {
        cfg.trace_path = a.trace;
        cfg.gen.reset();
    }
    if (!a.gen.empty()) {
        cfg.gen = gen_spec_from_json(load_json_arg(a.gen));
        if (a.trace.empty())
            cfg.trace_path.reset();
    }
    if (a.seed) {
        if (!cfg.gen)
            throw ConfigError("--seed only applies to generated traces (--gen)");
        cfg.gen->seed = *a.seed;
    }
    if (!a.structure.empty())
        cfg.structure = parse_structure(a.structure);
    if (!a.policy.empty())
        cfg.alu.aware = parse_alloc_policy(a.policy);
    if (a.rotation_period) {
        cfg.regfile.rotation_period = *a.rotation_period;
        cfg.cache = cfg.cache.with_rotation_period(*a.rotation_period);
    }
    if (a.count_rotation_shifts)
        cfg.regfile.count_rotation_shifts = true;
    if (a.exclude_rotation_writebacks)
        cfg.cache.count_rotation_writebacks = false;
    if (!a.out.empty())
        cfg.out_dir = a.out;

    cmd_simulate(cfg, std::cout);
    std::cout << "reports written to " << cfg.out_dir.string() << "\n";
    return 0;
}

int run_gen_trace(const std::string& gen, const std::string& out, std::optional<std::uint64_t> seed,
                  std::optional<std::uint64_t> length)
{
    GenSpec spec = gen_spec_from_json(load_json_arg(gen));
    if (seed)
        spec.seed = *seed;
    if (length)
        spec.length = *length;
    const auto events = generate(spec);
    std::ofstream file(out, std::ios::binary | std::ios::trunc);
    if (!file)
        throw ConfigError("cannot write '" + out + "'");
    serialize_trace(file, events);
    if (!file)
        throw ConfigError("write failed for '" + out + "'");
    return 0;
}

int run_report_merge(const std::vector<std::string>& inputs, const std::string& out)
{
    std::vector<std::vector<StructureReport>> runs;
    for (const auto& path : inputs)
        runs.push_back(reports_from_json(load_json_arg(path)));
    const auto rows = merge_reports(runs);
    std::filesystem::create_directories(out);
    std::ofstream csv(std::filesystem::path(out) / "merged.csv", std::ios::binary);
    std::ofstream json(std::filesystem::path(out) / "merged.json", std::ios::binary);
    if (!csv || !json)
        throw ConfigError("cannot write into '" + out + "'");
    write_merged_csv(csv, rows);
    json << merged_to_json(rows).dump(2) << "\n";
    write_merged_csv(std::cout, rows);
    return 0;
}

/// Numeric inputs shared by the em-calc quantities.
struct EmArgs {
    em::TechParams tech;
    em::WireGeometry geom;
    em::SignalElectricals sig;
    em::RmsLimit limit;
    std::optional<double> temp_c, temp_k;
    double current_density = 0;
    double mtf_reduced = 0;
    double ratio = 0;
    double p_original = 0, p_aware = 0;

    void resolve_temperature()
    {
        if (temp_c)
            tech.temperature_k = em::celsius_to_kelvin(*temp_c);
        if (temp_k)
            tech.temperature_k = *temp_k;
    }
};

void add_tech(CLI::App* cmd, EmArgs& a)
{
    cmd->add_option("--A", a.tech.scale_a, "Black's law scale constant")->capture_default_str();
    cmd->add_option("--n", a.tech.exponent_n, "current-density exponent")->capture_default_str();
    cmd->add_option("--ea", a.tech.activation_energy_ev, "activation energy [eV]")->capture_default_str();
    auto* c = cmd->add_option("--temp-c", a.temp_c, "temperature [degC] (default 125)");
    auto* k = cmd->add_option("--temp-k", a.temp_k, "temperature [K]");
    c->excludes(k);
}

void add_geom(CLI::App* cmd, EmArgs& a)
{
    cmd->add_option("--width", a.geom.width_m, "metal width W [m]")->required();
    cmd->add_option("--height", a.geom.height_m, "metal height H [m]")->required();
}

void add_edges(CLI::App* cmd, EmArgs& a)
{
    cmd->add_option("--tr", a.sig.rise_s, "rise time [s]")->required();
    cmd->add_option("--tf", a.sig.fall_s, "fall time [s]")->required();
}

void add_switching(CLI::App* cmd, EmArgs& a, bool with_edges)
{
    cmd->add_option("--cap", a.sig.capacitance_f, "capacitance C [F]")->required();
    cmd->add_option("--vdd", a.sig.supply_v, "supply voltage [V]")->required();
    cmd->add_option("--freq", a.sig.frequency_hz, "clock frequency f / Fmax [Hz]")->required();
    cmd->add_option("--p", a.sig.toggle_p, "toggle rate p in [0,1]")->required();
    if (with_edges)
        add_edges(cmd, a);
}

void print_value(const char* name, double value, const char* unit)
{
    std::cout << name << " = " << format_real(value);
    if (*unit)
        std::cout << ' ' << unit;
    std::cout << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Electromigration-aware resource allocation simulator and reliability calculator"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "replay a trace through baseline and aware structures");
    simulate->add_option("--trace", sim.trace, "trace file");
    simulate->add_option("--gen", sim.gen, "generator spec (JSON text or file)");
    simulate->add_option("--structure", sim.structure, "alu | regfile | cache | all");
    simulate->add_option("--policy", sim.policy, "aware ALU policy: algorithm1 | counter-rotate");
    simulate->add_option("--config", sim.config, "run configuration (JSON text or file)");
    simulate->add_option("--out", sim.out, "output directory");
    simulate->add_option("--seed", sim.seed, "override generator seed");
    simulate->add_option("--rotation-period", sim.rotation_period,
                         "register-file (cycles) and cache (accesses) rotation period");
    simulate->add_flag("--count-rotation-shifts", sim.count_rotation_shifts,
                       "count register rotation shifts as writes");
    simulate->add_flag("--exclude-rotation-writebacks", sim.exclude_rotation_writebacks,
                       "do not count dirty flush traffic caused by cache rotation");

    std::string gen_spec, gen_out;
    std::optional<std::uint64_t> gen_seed, gen_length;
    auto* gen = app.add_subcommand("gen-trace", "write a synthetic trace");
    gen->add_option("--gen", gen_spec, "generator spec (JSON text or file)")->required();
    gen->add_option("--out", gen_out, "trace file to write")->required();
    gen->add_option("--seed", gen_seed, "override seed");
    gen->add_option("--length", gen_length, "override length");

    std::vector<std::string> merge_inputs;
    std::string merge_out;
    auto* merge = app.add_subcommand("report-merge", "geometric-mean improvements across runs");
    merge->add_option("reports", merge_inputs, "report.json files")->required();
    merge->add_option("--out", merge_out, "output directory")->required();

    EmArgs em;
    auto* calc = app.add_subcommand("em-calc", "evaluate the EM reliability models");
    calc->require_subcommand(1);

    auto* black = calc->add_subcommand("black-mtf", "A / J^n * exp(Ea / kT)");
    add_tech(black, em);
    black->add_option("--j", em.current_density, "current density [A/m^2]")->required();

    auto* density = calc->add_subcommand("current-density", "C VDD / (W H) * p f");
    add_switching(density, em, false);
    add_geom(density, em);

    auto* reduced = calc->add_subcommand("reduced-irms", "I_max * sqrt(MTF_tech / MTF_reduced)");
    reduced->add_option("--i-max", em.limit.i_rms_max_a, "I_RMS-max [A]")->required();
    reduced->add_option("--mtf-tech", em.limit.mtf_technology_years, "technology MTF [years]")
        ->capture_default_str();
    reduced->add_option("--mtf-reduced", em.mtf_reduced, "reduced MTF [years]")->required();

    auto* extension = calc->add_subcommand("lifetime-extension", "(I_max / I_reduced)^2");
    extension->add_option("ratio", em.ratio, "I_reduced / I_max in (0, 1]")->required();

    auto* k1 = calc->add_subcommand("k1", "A (W H)^n exp(Ea / kT)");
    add_tech(k1, em);
    add_geom(k1, em);

    auto* k2 = calc->add_subcommand("k2", "sqrt(1/tr + 1/tf)");
    add_edges(k2, em);

    auto* rms = calc->add_subcommand("rms-mtf", "RMS-EM median time to failure");
    add_tech(rms, em);
    add_geom(rms, em);
    add_switching(rms, em, true);

    auto* improvement = calc->add_subcommand("improvement", "p_max_original / p_max_aware - 1");
    improvement->add_option("p_max_original", em.p_original)->required();
    improvement->add_option("p_max_aware", em.p_aware)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*simulate)
            return run_simulate(sim);
        if (*gen)
            return run_gen_trace(gen_spec, gen_out, gen_seed, gen_length);
        if (*merge)
            return run_report_merge(merge_inputs, merge_out);

        em.resolve_temperature();
        if (*black) {
            print_value("black-mtf", em::black_mtf(em.tech, em.current_density), "(units of A)");
        } else if (*density) {
            print_value("current-density", em::current_density(em.sig, em.geom), "A/m^2");
        } else if (*reduced) {
            print_value("reduced-irms", em::reduced_rms_current(em.limit, em.mtf_reduced), "A");
        } else if (*extension) {
            print_value("lifetime-extension", em::lifetime_extension_from_current_ratio(em.ratio), "x");
        } else if (*k1) {
            print_value("k1", em::k1(em.tech, em.geom), "");
        } else if (*k2) {
            print_value("k2", em::k2(em.sig), "s^-1/2");
        } else if (*rms) {
            const auto mtf = em::rms_em_mtf(em.tech, em.geom, em.sig);
            if (mtf)
                print_value("rms-mtf", *mtf, "(model units)");
            else
                std::cout << "rms-mtf = unbounded (p = 0, the net never switches)\n";
        } else if (*improvement) {
            const double imp = em::mtf_improvement(em.p_original, em.p_aware);
            std::cout << "improvement = " << format_real(imp) << " ("
                      << fmt::format("{:.1f}", imp * 100.0) << "%)\n";
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const TraceParseError& e) {
        std::cerr << "trace error: " << e.what() << '\n';
        return kExitTrace;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
