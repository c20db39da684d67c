#include "emaware/alu_alloc.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "emaware/errors.hpp"

namespace emaware {

std::string_view to_string(AllocPolicy p)
{
    switch (p) {
    case AllocPolicy::FixedPriority: return "fixed-priority";
    case AllocPolicy::CounterRotate: return "counter-rotate";
    case AllocPolicy::Algorithm1: return "algorithm1";
    }
    return "?";
}

AllocPolicy parse_alloc_policy(std::string_view name)
{
    if (name == "fixed-priority") return AllocPolicy::FixedPriority;
    if (name == "counter-rotate") return AllocPolicy::CounterRotate;
    if (name == "algorithm1") return AllocPolicy::Algorithm1;
    throw ConfigError("unknown ALU policy '" + std::string(name) +
                      "' (expected fixed-priority, counter-rotate or algorithm1)");
}

std::size_t AllocResult::count() const
{
    return static_cast<std::size_t>(std::count(selected.begin(), selected.end(), true));
}

std::vector<std::size_t> AllocResult::units() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < selected.size(); ++i)
        if (selected[i])
            out.push_back(i);
    return out;
}

AluAllocator::AluAllocator(std::size_t num_units, AllocPolicy policy)
    : policy_(policy), usage_(num_units, 0), ex_counter_(num_units, 0)
{
    if (num_units < 1)
        throw ConfigError("ALU allocator needs at least one unit");
}

void AluAllocator::reset()
{
    std::fill(usage_.begin(), usage_.end(), 0);
    std::fill(ex_counter_.begin(), ex_counter_.end(), 0);
    global_counter_ = 0;
    leading_ = 0;
}

AllocResult AluAllocator::allocate(std::size_t k)
{
    const std::size_t n = num_units();
    if (k > n)
        throw std::invalid_argument("requested " + std::to_string(k) + " units but only " +
                                    std::to_string(n) + " exist");
    AllocResult r{std::vector<bool>(n, false)};
    switch (policy_) {
    case AllocPolicy::FixedPriority: select_fixed(k, r); break;
    case AllocPolicy::CounterRotate: select_rotating(k, r); break;
    case AllocPolicy::Algorithm1: select_balanced(k, r); break;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (r.selected[i])
            ++usage_[i];
    return r;
}

void AluAllocator::select_fixed(std::size_t k, AllocResult& r) const
{
    for (std::size_t i = 0; i < k; ++i)
        r.selected[i] = true;
}

void AluAllocator::select_rotating(std::size_t k, AllocResult& r)
{
    const std::size_t n = num_units();
    for (std::size_t j = 0; j < k; ++j)
        r.selected[(leading_ + j) % n] = true;
    // Tracking the counter modulo N directly avoids the bias a wrapping
    // 32-bit counter would have when N does not divide 2^32.
    leading_ = (leading_ + 1) % n;
}

void AluAllocator::select_balanced(std::size_t k, AllocResult& r)
{
    const std::size_t n = num_units();
    std::vector<std::size_t> matching; // M, ascending
    std::vector<std::size_t> others;   // U \ M, ascending
    for (std::size_t i = 0; i < n; ++i)
        (ex_counter_[i] == global_counter_ ? matching : others).push_back(i);

    if (k < matching.size()) {
        for (std::size_t j = 0; j < k; ++j) {
            r.selected[matching[j]] = true;
            ex_counter_[matching[j]] ^= 1;
        }
        return;
    }
    for (std::size_t i : matching) {
        r.selected[i] = true;
        ex_counter_[i] ^= 1;
    }
    for (std::size_t j = 0; j < k - matching.size(); ++j) {
        r.selected[others[j]] = true;
        ex_counter_[others[j]] ^= 1;
    }
    global_counter_ ^= 1;
}

} // namespace emaware
