#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "emaware/workload.hpp"

namespace emaware {

enum class LevelRole : std::uint8_t { L1D, L1I, L2, L3, DTLB, ITLB, STLB };

std::string_view to_string(LevelRole r);
/// Accepts "l1d", "l1i", "l2", "l3", "dtlb", "itlb", "stlb" (case-insensitive).
LevelRole parse_level_role(std::string_view name);

/// Default rotation trigger, in accesses to the structure.
inline constexpr std::uint64_t kDefaultCacheRotationPeriod = 10'000'000;

struct CacheConfig {
    std::string name;
    std::uint64_t sets = 1;
    std::uint32_t ways = 1;
    std::uint64_t line_bytes = 64;
    /// Accesses between set rotations; 0 means never rotate.
    std::uint64_t rotation_period = 0;
    bool write_allocate = true;
    LevelRole role = LevelRole::L1D;

    /// Throws ConfigError unless sets and line_bytes are powers of two and ways >= 1.
    void validate() const;
};

struct AccessOutcome {
    bool hit = false;
    /// Byte address of a dirty victim evicted by this access's fill.
    std::optional<std::uint64_t> writeback;
    bool fill = false;
    /// Dirty blocks flushed by a rotation that fired at the end of this access.
    std::vector<std::uint64_t> flushed;
};

/**
 * Set-associative LRU cache whose physical set is
 *   ((address / line_bytes) mod S + rot_counter) mod S.
 *
 * Write accounting is per line entry: a fill and a write hit each count one
 * write on the touched entry (line_writes) and on its set (set_writes).
 * rotate() advances rot_counter and invalidates every line; clearing valid
 * bits is not counted as a write.
 *
 * The cache tracks presence only, there is no data payload.
 */
class RotatingCache {
  public:
    explicit RotatingCache(CacheConfig config);

    std::uint64_t physical_set(std::uint64_t address) const;

    /// `count_writes == false` updates state without touching the write counters.
    AccessOutcome access(std::uint64_t address, AccessKind kind, bool count_writes = true);

    /// Returns the byte addresses of the dirty blocks dropped by the invalidation.
    std::vector<std::uint64_t> rotate();

    bool contains(std::uint64_t address) const;

    const CacheConfig& config() const { return config_; }
    std::uint64_t rot_counter() const { return rot_counter_; }

    const std::vector<std::uint64_t>& set_writes() const { return set_writes_; }
    /// Flattened S x W, index set * ways + way.
    const std::vector<std::uint64_t>& line_writes() const { return line_writes_; }

    std::uint64_t accesses() const { return accesses_; }
    std::uint64_t hits() const { return hits_; }
    std::uint64_t misses() const { return accesses_ - hits_; }
    std::uint64_t fills() const { return fills_; }
    std::uint64_t write_hits() const { return write_hits_; }
    std::uint64_t writebacks() const { return writebacks_; }
    std::uint64_t invalidations() const { return invalidations_; }

    /// True when every set's LRU ranks form a permutation of 0..W-1.
    bool lru_consistent() const;

  private:
    struct Line {
        std::uint64_t block = 0;
        std::uint32_t lru_rank = 0; // 0 = most recently used
        bool valid = false;
        bool dirty = false;
    };

    void touch(std::uint64_t set, std::uint32_t way);
    std::uint32_t victim(std::uint64_t set) const;
    void count_write(std::uint64_t set, std::uint32_t way);

    CacheConfig config_;
    std::uint64_t set_mask_;
    unsigned line_shift_;
    std::uint64_t rot_counter_ = 0;
    std::vector<Line> lines_;
    std::vector<std::uint64_t> set_writes_;
    std::vector<std::uint64_t> line_writes_;
    std::uint64_t accesses_ = 0;
    std::uint64_t hits_ = 0;
    std::uint64_t fills_ = 0;
    std::uint64_t write_hits_ = 0;
    std::uint64_t writebacks_ = 0;
    std::uint64_t invalidations_ = 0;
};

struct HierarchyConfig {
    /// Any subset of the roles, each at most once.
    std::vector<CacheConfig> levels;
    std::uint64_t page_bytes = 4096;
    /// Dirty lines flushed by a rotation are written into the next level; when
    /// false that traffic still updates next-level state but is not counted.
    bool count_rotation_writebacks = true;

    /// Core-model defaults: 64 B lines, L1-D 32KB/8-way, L1-I 32KB/4-way,
    /// L2 256KB/8-way, L3 8MB/16-way, D-TLB 64/4-way, I-TLB 128/4-way,
    /// S-TLB 512/4-way, every structure rotating every `rotation_period` accesses.
    static HierarchyConfig defaults(std::uint64_t rotation_period = kDefaultCacheRotationPeriod);

    void validate() const;
    /// Same geometry with every rotation period replaced.
    HierarchyConfig with_rotation_period(std::uint64_t period) const;
};

/**
 * L1-D / L1-I in front of a shared L2 and L3, with D-/I-TLBs backed by an
 * S-TLB. Misses fetch from the next level down; dirty victims are written
 * into the next level (without fetching from below). Writes that fall past
 * the last level are counted in memory_writes().
 */
class CacheHierarchy {
  public:
    explicit CacheHierarchy(HierarchyConfig config);

    void access(std::uint64_t address, AccessKind kind, AddrSpace space);

    const RotatingCache* level(LevelRole role) const;
    const std::vector<RotatingCache>& levels() const { return caches_; }
    std::uint64_t memory_writes() const { return memory_writes_; }

  private:
    enum class Via { Demand, Writeback };

    void cache_access(const std::vector<std::size_t>& chain, std::size_t pos, std::uint64_t address,
                      AccessKind kind, Via via, bool counted);
    void tlb_access(std::optional<std::size_t> first, std::uint64_t page);
    std::optional<std::size_t> index_of(LevelRole role) const;

    HierarchyConfig config_;
    std::vector<RotatingCache> caches_;
    std::vector<std::size_t> data_chain_;
    std::vector<std::size_t> instr_chain_;
    std::optional<std::size_t> dtlb_, itlb_, stlb_;
    std::uint64_t memory_writes_ = 0;
};

} // namespace emaware
