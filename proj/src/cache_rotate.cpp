#include "emaware/cache_rotate.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "emaware/errors.hpp"

namespace emaware {

std::string_view to_string(LevelRole r)
{
    switch (r) {
    case LevelRole::L1D: return "l1d";
    case LevelRole::L1I: return "l1i";
    case LevelRole::L2: return "l2";
    case LevelRole::L3: return "l3";
    case LevelRole::DTLB: return "dtlb";
    case LevelRole::ITLB: return "itlb";
    case LevelRole::STLB: return "stlb";
    }
    return "?";
}

LevelRole parse_level_role(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    lower.erase(std::remove(lower.begin(), lower.end(), '-'), lower.end());
    for (auto r : {LevelRole::L1D, LevelRole::L1I, LevelRole::L2, LevelRole::L3, LevelRole::DTLB,
                   LevelRole::ITLB, LevelRole::STLB})
        if (lower == to_string(r))
            return r;
    throw ConfigError("unknown cache level role '" + std::string(name) + "'");
}

void CacheConfig::validate() const
{
    const std::string who = name.empty() ? std::string(to_string(role)) : name;
    if (sets == 0 || !std::has_single_bit(sets))
        throw ConfigError(who + ": sets must be a power of two >= 1");
    if (line_bytes == 0 || !std::has_single_bit(line_bytes))
        throw ConfigError(who + ": line_bytes must be a power of two");
    if (ways < 1)
        throw ConfigError(who + ": ways must be >= 1");
}

RotatingCache::RotatingCache(CacheConfig config) : config_(std::move(config))
{
    config_.validate();
    set_mask_ = config_.sets - 1;
    line_shift_ = static_cast<unsigned>(std::countr_zero(config_.line_bytes));
    lines_.resize(config_.sets * config_.ways);
    for (std::uint64_t s = 0; s < config_.sets; ++s)
        for (std::uint32_t w = 0; w < config_.ways; ++w)
            lines_[s * config_.ways + w].lru_rank = w;
    set_writes_.assign(config_.sets, 0);
    line_writes_.assign(lines_.size(), 0);
}

std::uint64_t RotatingCache::physical_set(std::uint64_t address) const
{
    const std::uint64_t index_field = (address >> line_shift_) & set_mask_;
    return (index_field + rot_counter_) & set_mask_;
}

void RotatingCache::touch(std::uint64_t set, std::uint32_t way)
{
    Line* base = &lines_[set * config_.ways];
    const std::uint32_t old = base[way].lru_rank;
    for (std::uint32_t w = 0; w < config_.ways; ++w)
        if (base[w].lru_rank < old)
            ++base[w].lru_rank;
    base[way].lru_rank = 0;
}

std::uint32_t RotatingCache::victim(std::uint64_t set) const
{
    const Line* base = &lines_[set * config_.ways];
    for (std::uint32_t w = 0; w < config_.ways; ++w)
        if (!base[w].valid)
            return w;
    for (std::uint32_t w = 0; w < config_.ways; ++w)
        if (base[w].lru_rank == config_.ways - 1)
            return w;
    return 0; // unreachable while the LRU permutation invariant holds
}

void RotatingCache::count_write(std::uint64_t set, std::uint32_t way)
{
    ++set_writes_[set];
    ++line_writes_[set * config_.ways + way];
}

AccessOutcome RotatingCache::access(std::uint64_t address, AccessKind kind, bool count_writes)
{
    AccessOutcome out;
    const std::uint64_t block = address >> line_shift_;
    const std::uint64_t set = physical_set(address);
    Line* base = &lines_[set * config_.ways];
    ++accesses_;

    std::uint32_t way = config_.ways;
    for (std::uint32_t w = 0; w < config_.ways; ++w) {
        if (base[w].valid && base[w].block == block) {
            way = w;
            break;
        }
    }

    if (way < config_.ways) {
        out.hit = true;
        ++hits_;
        touch(set, way);
        if (kind == AccessKind::Write) {
            base[way].dirty = true;
            ++write_hits_;
            if (count_writes)
                count_write(set, way);
        }
    } else if (kind == AccessKind::Read || config_.write_allocate) {
        way = victim(set);
        Line& line = base[way];
        if (line.valid && line.dirty) {
            out.writeback = line.block << line_shift_;
            ++writebacks_;
        }
        line.valid = true;
        line.block = block;
        line.dirty = kind == AccessKind::Write;
        touch(set, way);
        out.fill = true;
        ++fills_;
        if (count_writes)
            count_write(set, way);
    }

    if (config_.rotation_period != 0 && accesses_ % config_.rotation_period == 0)
        out.flushed = rotate();
    return out;
}

std::vector<std::uint64_t> RotatingCache::rotate()
{
    std::vector<std::uint64_t> flushed;
    for (Line& line : lines_) {
        if (line.valid && line.dirty)
            flushed.push_back(line.block << line_shift_);
        line.valid = false;
        line.dirty = false;
    }
    rot_counter_ = (rot_counter_ + 1) & set_mask_;
    ++invalidations_;
    return flushed;
}

bool RotatingCache::contains(std::uint64_t address) const
{
    const std::uint64_t block = address >> line_shift_;
    const Line* base = &lines_[physical_set(address) * config_.ways];
    for (std::uint32_t w = 0; w < config_.ways; ++w)
        if (base[w].valid && base[w].block == block)
            return true;
    return false;
}

bool RotatingCache::lru_consistent() const
{
    std::vector<bool> seen(config_.ways);
    for (std::uint64_t s = 0; s < config_.sets; ++s) {
        std::fill(seen.begin(), seen.end(), false);
        for (std::uint32_t w = 0; w < config_.ways; ++w) {
            const auto r = lines_[s * config_.ways + w].lru_rank;
            if (r >= config_.ways || seen[r])
                return false;
            seen[r] = true;
        }
    }
    return true;
}

} // namespace emaware
