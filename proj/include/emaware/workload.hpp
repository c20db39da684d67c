#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "emaware/rng.hpp"

namespace emaware {

enum class RegClass : std::uint8_t { GPR, FP, FLAGS, SP };
enum class AccessKind : std::uint8_t { Read, Write };
enum class AddrSpace : std::uint8_t { Data, Instr };

std::string_view to_string(RegClass c);

struct AluIssue {
    std::uint32_t ready_count = 0;
    bool operator==(const AluIssue&) const = default;
};

struct RegWrite {
    RegClass reg_class = RegClass::GPR;
    std::uint32_t arch_id = 0;
    bool operator==(const RegWrite&) const = default;
};

struct MemAccess {
    AccessKind kind = AccessKind::Read;
    std::uint64_t address = 0;
    AddrSpace space = AddrSpace::Data;
    bool operator==(const MemAccess&) const = default;
};

struct Event {
    std::uint64_t cycle = 0;
    std::variant<AluIssue, RegWrite, MemAccess> payload;
    bool operator==(const Event&) const = default;
};

// ---------------------------------------------------------------------------
// Text trace format, one event per line:
//   <cycle> A <ready_count>
//   <cycle> R <GPR|FP|FLAGS|SP> <arch_id>
//   <cycle> M <R|W> <address> <D|I>
// '#' starts a comment line; blank lines are ignored.
// ---------------------------------------------------------------------------

/// Parses and validates a trace. Throws TraceParseError (with line number).
std::vector<Event> parse_trace(std::istream& in);
std::vector<Event> parse_trace(std::string_view text);

/// Checks cycle monotonicity and the one-AluIssue-per-cycle rule.
void validate_trace(std::span<const Event> events);

void serialize_trace(std::ostream& out, std::span<const Event> events);
std::string serialize_trace(std::span<const Event> events);

// ---------------------------------------------------------------------------
// Synthetic generators
// ---------------------------------------------------------------------------

/// Register writes with rank-frequency weight (rank+1)^-zipf_s over arch ids 0..num_regs-1.
struct ZipfRegWrites {
    std::uint32_t num_regs = 16;
    double zipf_s = 1.0;
    RegClass reg_class = RegClass::GPR;
};

/// Memory accesses over a working set whose first ceil(hot_fraction * lines)
/// lines get hot_weight times the weight of the others.
struct SkewedAddrs {
    std::uint64_t working_set_lines = 1024;
    double hot_fraction = 0.1;
    double hot_weight = 10.0;
    std::uint64_t line_bytes = 64;
    double write_fraction = 0.5;
    std::uint64_t base_address = 0;
    AddrSpace space = AddrSpace::Data;
};

/// One AluIssue per cycle; width_weights[w] is the relative weight of width w
/// (size max_width + 1). Empty means uniform over 0..max_width.
struct AluBursts {
    std::uint32_t max_width = 3;
    std::vector<double> width_weights;
};

struct GenSpec {
    std::uint64_t seed = 1;
    std::uint64_t length = 0;
    std::variant<ZipfRegWrites, SkewedAddrs, AluBursts> kind;

    /// Throws ConfigError on violated invariants.
    void validate() const;
};

/// Deterministic: a pure function of `spec`. Event i is stamped with cycle i.
std::vector<Event> generate(const GenSpec& spec);

/**
 * Inverse-CDF sampler over a fixed weight vector. Exact up to the double
 * cumulative sums; O(log n) per draw.
 */
class DiscreteSampler {
  public:
    explicit DiscreteSampler(std::span<const double> weights);

    std::size_t sample(SplitMix64& rng) const;
    std::size_t size() const { return cumulative_.size(); }

  private:
    std::vector<double> cumulative_;
};

} // namespace emaware
