#include "emaware/cache_rotate.hpp"

#include <algorithm>

#include "emaware/errors.hpp"

namespace emaware {

namespace {

CacheConfig geometry(std::string name, LevelRole role, std::uint64_t entries, std::uint32_t ways,
                     std::uint64_t line_bytes, std::uint64_t rotation_period)
{
    CacheConfig c;
    c.name = std::move(name);
    c.role = role;
    c.ways = ways;
    c.line_bytes = line_bytes;
    c.sets = entries / ways;
    c.rotation_period = rotation_period;
    return c;
}

} // namespace

HierarchyConfig HierarchyConfig::defaults(std::uint64_t rotation_period)
{
    constexpr std::uint64_t kLine = 64;
    HierarchyConfig h;
    // TLBs are caches over page numbers: one "byte" per page.
    h.levels = {
        geometry("dtlb", LevelRole::DTLB, 64, 4, 1, rotation_period),
        geometry("itlb", LevelRole::ITLB, 128, 4, 1, rotation_period),
        geometry("stlb", LevelRole::STLB, 512, 4, 1, rotation_period),
        geometry("l1d", LevelRole::L1D, 32 * 1024 / kLine, 8, kLine, rotation_period),
        geometry("l1i", LevelRole::L1I, 32 * 1024 / kLine, 4, kLine, rotation_period),
        geometry("l2", LevelRole::L2, 256 * 1024 / kLine, 8, kLine, rotation_period),
        geometry("l3", LevelRole::L3, 8 * 1024 * 1024 / kLine, 16, kLine, rotation_period),
    };
    return h;
}

void HierarchyConfig::validate() const
{
    if (page_bytes == 0 || (page_bytes & (page_bytes - 1)) != 0)
        throw ConfigError("page_bytes must be a power of two");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        levels[i].validate();
        for (std::size_t j = i + 1; j < levels.size(); ++j)
            if (levels[i].role == levels[j].role)
                throw ConfigError("hierarchy lists role '" + std::string(to_string(levels[i].role)) +
                                  "' twice");
    }
}

HierarchyConfig HierarchyConfig::with_rotation_period(std::uint64_t period) const
{
    HierarchyConfig h = *this;
    for (auto& l : h.levels)
        l.rotation_period = period;
    return h;
}

CacheHierarchy::CacheHierarchy(HierarchyConfig config) : config_(std::move(config))
{
    config_.validate();
    for (const auto& c : config_.levels)
        caches_.emplace_back(c);

    const auto l1d = index_of(LevelRole::L1D);
    const auto l1i = index_of(LevelRole::L1I);
    const auto l2 = index_of(LevelRole::L2);
    const auto l3 = index_of(LevelRole::L3);
    if (l1d) data_chain_.push_back(*l1d);
    if (l1i) instr_chain_.push_back(*l1i);
    for (auto shared : {l2, l3}) {
        if (shared) {
            data_chain_.push_back(*shared);
            instr_chain_.push_back(*shared);
        }
    }
    dtlb_ = index_of(LevelRole::DTLB);
    itlb_ = index_of(LevelRole::ITLB);
    stlb_ = index_of(LevelRole::STLB);
}

std::optional<std::size_t> CacheHierarchy::index_of(LevelRole role) const
{
    for (std::size_t i = 0; i < caches_.size(); ++i)
        if (caches_[i].config().role == role)
            return i;
    return std::nullopt;
}

const RotatingCache* CacheHierarchy::level(LevelRole role) const
{
    const auto i = index_of(role);
    return i ? &caches_[*i] : nullptr;
}

void CacheHierarchy::access(std::uint64_t address, AccessKind kind, AddrSpace space)
{
    const std::uint64_t page = address / config_.page_bytes;
    if (space == AddrSpace::Data) {
        tlb_access(dtlb_, page);
        cache_access(data_chain_, 0, address, kind, Via::Demand, true);
    } else {
        tlb_access(itlb_, page);
        cache_access(instr_chain_, 0, address, kind, Via::Demand, true);
    }
}

void CacheHierarchy::tlb_access(std::optional<std::size_t> first, std::uint64_t page)
{
    if (first && caches_[*first].access(page, AccessKind::Read).hit)
        return;
    if (stlb_)
        caches_[*stlb_].access(page, AccessKind::Read);
}

void CacheHierarchy::cache_access(const std::vector<std::size_t>& chain, std::size_t pos,
                                  std::uint64_t address, AccessKind kind, Via via, bool counted)
{
    if (pos == chain.size()) {
        if (kind == AccessKind::Write && counted)
            ++memory_writes_;
        return;
    }
    AccessOutcome out = caches_[chain[pos]].access(address, kind, counted);
    if (!out.hit) {
        if (!out.fill)
            cache_access(chain, pos + 1, address, kind, via, counted); // write no-allocate
        else if (via == Via::Demand)
            cache_access(chain, pos + 1, address, AccessKind::Read, Via::Demand, counted);
        // A written-back victim overwrites the whole line: nothing to fetch.
    }
    if (out.writeback)
        cache_access(chain, pos + 1, *out.writeback, AccessKind::Write, Via::Writeback, counted);
    const bool count_flush = counted && config_.count_rotation_writebacks;
    for (std::uint64_t block : out.flushed)
        cache_access(chain, pos + 1, block, AccessKind::Write, Via::Writeback, count_flush);
}

} // namespace emaware
