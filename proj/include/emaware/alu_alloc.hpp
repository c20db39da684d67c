#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace emaware {

enum class AllocPolicy {
    FixedPriority, ///< lowest index first; the baseline scheduler
    CounterRotate, ///< leading unit = cycle counter mod N, then consecutive units
    Algorithm1,    ///< per-unit bit + global bit balancing allocator
};

std::string_view to_string(AllocPolicy p);
/// Accepts "fixed-priority", "counter-rotate", "algorithm1". Throws ConfigError.
AllocPolicy parse_alloc_policy(std::string_view name);

/// Selection vector E: selected[i] is true when unit i is granted this cycle.
struct AllocResult {
    std::vector<bool> selected;

    std::size_t count() const;
    /// Indices of the selected units, ascending.
    std::vector<std::size_t> units() const;
};

/**
 * Allocates k of N identical execution units per cycle and keeps a usage
 * count per unit. One call to allocate() models one scheduling cycle.
 */
class AluAllocator {
  public:
    AluAllocator(std::size_t num_units, AllocPolicy policy);

    /// Throws std::invalid_argument when k > N. k == N selects every unit.
    AllocResult allocate(std::size_t k);

    std::vector<std::uint64_t> usage_snapshot() const { return usage_; }
    void reset();

    std::size_t num_units() const { return usage_.size(); }
    AllocPolicy policy() const { return policy_; }

    // Algorithm1 state.
    std::span<const std::uint8_t> ex_counter() const { return ex_counter_; }
    std::uint8_t global_counter() const { return global_counter_; }

    // CounterRotate state: the cycle counter reduced modulo N.
    std::size_t leading_unit() const { return leading_; }

  private:
    void select_fixed(std::size_t k, AllocResult& r) const;
    void select_rotating(std::size_t k, AllocResult& r);
    void select_balanced(std::size_t k, AllocResult& r);

    AllocPolicy policy_;
    std::vector<std::uint64_t> usage_;
    std::vector<std::uint8_t> ex_counter_;
    std::uint8_t global_counter_ = 0;
    std::size_t leading_ = 0;
};

} // namespace emaware
