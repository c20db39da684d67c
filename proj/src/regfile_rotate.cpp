#include "emaware/regfile_rotate.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "emaware/errors.hpp"

namespace emaware {

namespace {

std::vector<RingMember> linear_ring(RegClass cls, std::uint32_t n)
{
    std::vector<RingMember> ring;
    for (std::uint32_t i = 0; i < n; ++i)
        ring.push_back({cls, i});
    return ring;
}

} // namespace

std::vector<RingMember> ring_preset(std::string_view name)
{
    if (name == "gpr16")
        return linear_ring(RegClass::GPR, 16);
    if (name == "fp32")
        return linear_ring(RegClass::FP, 32);
    if (name == "gpr-flags-sp") {
        auto ring = linear_ring(RegClass::GPR, 16);
        ring.push_back({RegClass::FLAGS, 0});
        ring.push_back({RegClass::SP, 0});
        return ring;
    }
    const auto colon = name.find(':');
    if (colon != std::string_view::npos) {
        const auto prefix = name.substr(0, colon);
        const auto digits = name.substr(colon + 1);
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && n >= 1) {
            if (prefix == "gpr")
                return linear_ring(RegClass::GPR, n);
            if (prefix == "fp")
                return linear_ring(RegClass::FP, n);
        }
    }
    throw ConfigError("unknown register ring '" + std::string(name) +
                      "' (expected gpr16, gpr-flags-sp, fp32, gpr:<N> or fp:<N>)");
}

RotatingRegFile::RotatingRegFile(std::vector<RingMember> members, std::uint64_t rotation_period,
                                 bool count_rotation_shifts)
    : members_(std::move(members)), values_(members_.size(), 0), phys_writes_(members_.size(), 0),
      rotation_period_(rotation_period), next_rotation_(rotation_period),
      count_rotation_shifts_(count_rotation_shifts)
{
    if (members_.empty())
        throw ConfigError("register ring must have at least one member");
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (members_[i] == members_[j])
                throw ConfigError("register ring members must be distinct");
}

std::size_t RotatingRegFile::map(std::size_t arch_index) const
{
    if (arch_index >= size())
        throw std::out_of_range("architectural register index " + std::to_string(arch_index) +
                                " outside ring of " + std::to_string(size()));
    return (arch_index + rotator_) % size();
}

void RotatingRegFile::write(std::size_t arch_index, std::uint64_t value)
{
    const std::size_t phys = map(arch_index);
    values_[phys] = value;
    ++phys_writes_[phys];
}

std::uint64_t RotatingRegFile::read(std::size_t arch_index) const
{
    return values_[map(arch_index)];
}

void RotatingRegFile::rotate()
{
    rotate_by(1);
}

void RotatingRegFile::rotate_by(std::uint64_t steps)
{
    if (steps == 0)
        return;
    const std::size_t n = size();
    const auto shift = static_cast<std::size_t>(steps % n);
    rotator_ = (rotator_ + shift) % n;
    rotations_done_ += steps;
    if (n == 1)
        return;
    // Every value moves `shift` slots up: the slot that now hosts its arch register.
    std::rotate(values_.rbegin(), values_.rbegin() + static_cast<std::ptrdiff_t>(shift), values_.rend());
    if (count_rotation_shifts_)
        for (auto& w : phys_writes_)
            w += steps;
}

void RotatingRegFile::advance_to(std::uint64_t cycle)
{
    if (rotation_period_ == 0 || cycle < next_rotation_)
        return;
    const std::uint64_t due = (cycle - next_rotation_) / rotation_period_ + 1;
    rotate_by(due);
    next_rotation_ += due * rotation_period_;
}

std::optional<std::size_t> RotatingRegFile::ring_index(RegClass cls, std::uint32_t arch_id) const
{
    const auto it = std::find(members_.begin(), members_.end(), RingMember{cls, arch_id});
    if (it == members_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - members_.begin());
}

} // namespace emaware
