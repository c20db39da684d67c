#include "emaware/workload.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "emaware/errors.hpp"

namespace emaware {

std::string_view to_string(RegClass c)
{
    switch (c) {
    case RegClass::GPR: return "GPR";
    case RegClass::FP: return "FP";
    case RegClass::FLAGS: return "FLAGS";
    case RegClass::SP: return "SP";
    }
    return "?";
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename UInt>
UInt parse_uint(std::string_view tok, std::size_t lineno, const char* field)
{
    int base = 10;
    if (tok.size() > 2 && tok[0] == '0' && (tok[1] == 'x' || tok[1] == 'X')) {
        tok.remove_prefix(2);
        base = 16;
    }
    UInt value{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value, base);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw TraceParseError(lineno, std::string("invalid ") + field + " '" + std::string(tok) + "'");
    return value;
}

RegClass parse_reg_class(std::string_view tok, std::size_t lineno)
{
    if (tok == "GPR") return RegClass::GPR;
    if (tok == "FP") return RegClass::FP;
    if (tok == "FLAGS") return RegClass::FLAGS;
    if (tok == "SP") return RegClass::SP;
    throw TraceParseError(lineno, "unknown register class '" + std::string(tok) + "'");
}

void expect_tokens(const std::vector<std::string_view>& toks, std::size_t n, std::size_t lineno)
{
    if (toks.size() != n)
        throw TraceParseError(lineno, "expected " + std::to_string(n) + " fields, got " +
                                          std::to_string(toks.size()));
}

Event parse_line(const std::vector<std::string_view>& toks, std::size_t lineno)
{
    if (toks.size() < 2)
        throw TraceParseError(lineno, "truncated event");
    Event ev;
    ev.cycle = parse_uint<std::uint64_t>(toks[0], lineno, "cycle");
    const std::string_view tag = toks[1];
    if (tag == "A") {
        expect_tokens(toks, 3, lineno);
        ev.payload = AluIssue{parse_uint<std::uint32_t>(toks[2], lineno, "ready count")};
    } else if (tag == "R") {
        expect_tokens(toks, 4, lineno);
        ev.payload = RegWrite{parse_reg_class(toks[2], lineno),
                              parse_uint<std::uint32_t>(toks[3], lineno, "register id")};
    } else if (tag == "M") {
        expect_tokens(toks, 5, lineno);
        MemAccess m;
        if (toks[2] == "R")
            m.kind = AccessKind::Read;
        else if (toks[2] == "W")
            m.kind = AccessKind::Write;
        else
            throw TraceParseError(lineno, "access kind must be R or W");
        m.address = parse_uint<std::uint64_t>(toks[3], lineno, "address");
        if (toks[4] == "D")
            m.space = AddrSpace::Data;
        else if (toks[4] == "I")
            m.space = AddrSpace::Instr;
        else
            throw TraceParseError(lineno, "address space must be D or I");
        ev.payload = m;
    } else {
        throw TraceParseError(lineno, "unknown event type '" + std::string(tag) + "'");
    }
    return ev;
}

} // namespace

std::vector<Event> parse_trace(std::istream& in)
{
    std::vector<Event> events;
    std::string line;
    std::size_t lineno = 0;
    std::uint64_t last_cycle = 0;
    std::uint64_t last_alu_cycle = 0;
    bool have_alu = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#')
            continue;
        Event ev = parse_line(toks, lineno);
        if (!events.empty() && ev.cycle < last_cycle)
            throw TraceParseError(lineno, "cycle " + std::to_string(ev.cycle) +
                                              " precedes previous cycle " + std::to_string(last_cycle));
        if (std::holds_alternative<AluIssue>(ev.payload)) {
            if (have_alu && last_alu_cycle == ev.cycle)
                throw TraceParseError(lineno, "second ALU issue record in cycle " +
                                                  std::to_string(ev.cycle));
            have_alu = true;
            last_alu_cycle = ev.cycle;
        }
        last_cycle = ev.cycle;
        events.push_back(std::move(ev));
    }
    return events;
}

std::vector<Event> parse_trace(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_trace(in);
}

void validate_trace(std::span<const Event> events)
{
    bool have_alu = false;
    std::uint64_t last_alu = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (i > 0 && events[i].cycle < events[i - 1].cycle)
            throw TraceParseError(0, "event " + std::to_string(i) + " has a decreasing cycle");
        if (std::holds_alternative<AluIssue>(events[i].payload)) {
            if (have_alu && last_alu == events[i].cycle)
                throw TraceParseError(0, "two ALU issue records in cycle " +
                                             std::to_string(events[i].cycle));
            have_alu = true;
            last_alu = events[i].cycle;
        }
    }
}

void serialize_trace(std::ostream& out, std::span<const Event> events)
{
    out << "# emaware trace v1\n";
    for (const Event& ev : events) {
        out << ev.cycle << ' ';
        std::visit(
            [&out](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, AluIssue>) {
                    out << "A " << p.ready_count;
                } else if constexpr (std::is_same_v<T, RegWrite>) {
                    out << "R " << to_string(p.reg_class) << ' ' << p.arch_id;
                } else {
                    out << "M " << (p.kind == AccessKind::Write ? 'W' : 'R') << ' ' << p.address << ' '
                        << (p.space == AddrSpace::Instr ? 'I' : 'D');
                }
            },
            ev.payload);
        out << '\n';
    }
}

std::string serialize_trace(std::span<const Event> events)
{
    std::ostringstream out;
    serialize_trace(out, events);
    return out.str();
}

// ---------------------------------------------------------------------------

DiscreteSampler::DiscreteSampler(std::span<const double> weights)
{
    if (weights.empty())
        throw ConfigError("sampler needs at least one weight");
    cumulative_.reserve(weights.size());
    double total = 0;
    for (double w : weights) {
        if (!(w >= 0) || !std::isfinite(w))
            throw ConfigError("sampler weights must be finite and >= 0");
        total += w;
        cumulative_.push_back(total);
    }
    if (!(total > 0))
        throw ConfigError("sampler weights sum to zero");
}

std::size_t DiscreteSampler::sample(SplitMix64& rng) const
{
    const double u = rng.next_unit() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    // u < total always, but guard the last bucket against rounding.
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
}

void GenSpec::validate() const
{
    std::visit(
        [](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ZipfRegWrites>) {
                if (k.num_regs < 1)
                    throw ConfigError("zipf: num_regs must be >= 1");
                if (!(k.zipf_s > 0) || !std::isfinite(k.zipf_s))
                    throw ConfigError("zipf: zipf_s must be > 0");
            } else if constexpr (std::is_same_v<T, SkewedAddrs>) {
                if (k.working_set_lines < 1)
                    throw ConfigError("skewed: working_set_lines must be >= 1");
                if (!(k.hot_fraction > 0 && k.hot_fraction <= 1))
                    throw ConfigError("skewed: hot_fraction must lie in (0, 1]");
                if (!(k.hot_weight >= 1) || !std::isfinite(k.hot_weight))
                    throw ConfigError("skewed: hot_weight must be >= 1");
                if (k.line_bytes < 1)
                    throw ConfigError("skewed: line_bytes must be >= 1");
                if (!(k.write_fraction >= 0 && k.write_fraction <= 1))
                    throw ConfigError("skewed: write_fraction must lie in [0, 1]");
            } else {
                if (k.max_width < 1)
                    throw ConfigError("alu: max_width must be >= 1");
                if (!k.width_weights.empty() && k.width_weights.size() != k.max_width + 1)
                    throw ConfigError("alu: width distribution needs max_width + 1 weights");
            }
        },
        kind);
}

namespace {

std::vector<Event> gen_zipf(const ZipfRegWrites& z, std::uint64_t length, SplitMix64& rng)
{
    std::vector<double> w(z.num_regs);
    for (std::uint32_t r = 0; r < z.num_regs; ++r)
        w[r] = std::pow(static_cast<double>(r + 1), -z.zipf_s);
    const DiscreteSampler sampler(w);
    std::vector<Event> events;
    events.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i) {
        const auto reg = static_cast<std::uint32_t>(sampler.sample(rng));
        events.push_back(Event{i, RegWrite{z.reg_class, reg}});
    }
    return events;
}

std::vector<Event> gen_skewed(const SkewedAddrs& s, std::uint64_t length, SplitMix64& rng)
{
    const auto lines = s.working_set_lines;
    auto hot = static_cast<std::uint64_t>(std::ceil(s.hot_fraction * static_cast<double>(lines)));
    hot = std::clamp<std::uint64_t>(hot, 1, lines);
    const std::uint64_t cold = lines - hot;
    const double hot_mass = static_cast<double>(hot) * s.hot_weight;
    const double p_hot = hot_mass / (hot_mass + static_cast<double>(cold));

    auto pick = [&rng](std::uint64_t n) {
        const auto i = static_cast<std::uint64_t>(rng.next_unit() * static_cast<double>(n));
        return std::min(i, n - 1);
    };

    std::vector<Event> events;
    events.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i) {
        const bool is_hot = cold == 0 || rng.next_unit() < p_hot;
        const std::uint64_t line = is_hot ? pick(hot) : hot + pick(cold);
        const bool write = rng.next_unit() < s.write_fraction;
        events.push_back(Event{i, MemAccess{write ? AccessKind::Write : AccessKind::Read,
                                            s.base_address + line * s.line_bytes, s.space}});
    }
    return events;
}

std::vector<Event> gen_alu(const AluBursts& a, std::uint64_t length, SplitMix64& rng)
{
    std::vector<double> w = a.width_weights;
    if (w.empty())
        w.assign(a.max_width + 1, 1.0);
    const DiscreteSampler sampler(w);
    std::vector<Event> events;
    events.reserve(length);
    for (std::uint64_t i = 0; i < length; ++i)
        events.push_back(Event{i, AluIssue{static_cast<std::uint32_t>(sampler.sample(rng))}});
    return events;
}

} // namespace

std::vector<Event> generate(const GenSpec& spec)
{
    spec.validate();
    SplitMix64 rng(spec.seed);
    return std::visit(
        [&](const auto& k) -> std::vector<Event> {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, ZipfRegWrites>)
                return gen_zipf(k, spec.length, rng);
            else if constexpr (std::is_same_v<T, SkewedAddrs>)
                return gen_skewed(k, spec.length, rng);
            else
                return gen_alu(k, spec.length, rng);
        },
        spec.kind);
}

} // namespace emaware
