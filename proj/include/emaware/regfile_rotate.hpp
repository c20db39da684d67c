#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emaware/workload.hpp"

namespace emaware {

struct RingMember {
    RegClass reg_class = RegClass::GPR;
    std::uint32_t arch_id = 0;
    bool operator==(const RingMember&) const = default;
};

/**
 * Named ring compositions:
 *   gpr16          GPR 0..15
 *   gpr-flags-sp   GPR 0..15, FLAGS at index 16, SP at index 17
 *   fp32           FP 0..31
 *   gpr:<N>, fp:<N> custom sizes
 * Throws ConfigError for anything else.
 */
std::vector<RingMember> ring_preset(std::string_view name);

/// Default trigger interval of the rotation pulse, in cycles.
inline constexpr std::uint64_t kDefaultRegRotationPeriod = 10'000'000;

/**
 * Register file whose architectural-to-physical mapping is
 * phys = (arch + rotator) mod N. rotate() bumps the rotator and shifts each
 * value one physical slot up so architectural contents are preserved.
 *
 * phys_writes counts functional write-port writes per physical slot. The
 * neighbour shift done by rotate() is only counted when count_rotation_shifts
 * is set.
 */
class RotatingRegFile {
  public:
    /// rotation_period == 0 disables periodic rotation in advance_to().
    explicit RotatingRegFile(std::vector<RingMember> members, std::uint64_t rotation_period = 0,
                             bool count_rotation_shifts = false);

    std::size_t size() const { return values_.size(); }

    /// Throws std::out_of_range for arch_index >= N.
    std::size_t map(std::size_t arch_index) const;
    void write(std::size_t arch_index, std::uint64_t value);
    std::uint64_t read(std::size_t arch_index) const;
    void rotate();
    /// Equivalent to `steps` consecutive rotate() calls.
    void rotate_by(std::uint64_t steps);

    /// Fires every periodic rotation scheduled at or before `cycle`
    /// (rotations happen at cycles P, 2P, 3P, ...).
    void advance_to(std::uint64_t cycle);

    /// Ring index of an architectural register, if it participates.
    std::optional<std::size_t> ring_index(RegClass cls, std::uint32_t arch_id) const;

    std::size_t rotator() const { return rotator_; }
    std::uint64_t rotations_done() const { return rotations_done_; }
    const std::vector<std::uint64_t>& phys_writes() const { return phys_writes_; }
    const std::vector<RingMember>& members() const { return members_; }
    std::uint64_t rotation_period() const { return rotation_period_; }

  private:
    std::vector<RingMember> members_;
    std::vector<std::uint64_t> values_;
    std::vector<std::uint64_t> phys_writes_;
    std::size_t rotator_ = 0;
    std::uint64_t rotations_done_ = 0;
    std::uint64_t rotation_period_;
    std::uint64_t next_rotation_;
    bool count_rotation_shifts_;
};

} // namespace emaware
