#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "emaware/cache_rotate.hpp"
#include "emaware/errors.hpp"
#include "oracles/reference_models.hpp"

using namespace emaware;

namespace {

CacheConfig geom(std::uint64_t sets, std::uint32_t ways, std::uint64_t line = 64,
                 std::uint64_t period = 0)
{
    CacheConfig c;
    c.name = "test";
    c.sets = sets;
    c.ways = ways;
    c.line_bytes = line;
    c.rotation_period = period;
    return c;
}

std::uint64_t sum(const std::vector<std::uint64_t>& v)
{
    return std::accumulate(v.begin(), v.end(), std::uint64_t{0});
}

std::uint64_t max_of(const std::vector<std::uint64_t>& v)
{
    return *std::max_element(v.begin(), v.end());
}

} // namespace

TEST_CASE("physical_set adds the rotation counter to the index field")
{
    RotatingCache c(geom(64, 4));
    const std::uint64_t addr10 = (7 * 64 + 10) * 64 + 3; // tag 7, index 10, offset 3
    CHECK(c.physical_set(addr10) == 10);
    for (int i = 0; i < 5; ++i)
        c.rotate();
    CHECK(c.physical_set(addr10) == 15);

    RotatingCache d(geom(64, 4));
    d.rotate();
    d.rotate();
    CHECK(d.physical_set(63 * 64) == 1);
}

TEST_CASE("cold miss fills and counts one write")
{
    RotatingCache c(geom(8, 2));
    const auto out = c.access(0x1234, AccessKind::Read);
    CHECK_FALSE(out.hit);
    CHECK(out.fill);
    CHECK_FALSE(out.writeback.has_value());
    CHECK(sum(c.line_writes()) == 1);
    CHECK(c.set_writes()[c.physical_set(0x1234)] == 1);
}

TEST_CASE("two writes to one address: fill then write hit")
{
    RotatingCache c(geom(8, 2));
    const auto first = c.access(640, AccessKind::Write);
    const auto second = c.access(640, AccessKind::Write);
    CHECK((!first.hit && first.fill));
    CHECK((second.hit && !second.fill));
    CHECK(max_of(c.line_writes()) == 2);
    CHECK(sum(c.line_writes()) == 2);
    CHECK(c.write_hits() == 1);
    CHECK(c.fills() == 1);
}

TEST_CASE("read hits do not count as writes")
{
    RotatingCache c(geom(8, 2));
    c.access(0, AccessKind::Read);
    c.access(0, AccessKind::Read);
    c.access(0, AccessKind::Read);
    CHECK(sum(c.line_writes()) == 1);
    CHECK(c.hits() == 2);
}

TEST_CASE("direct-mapped conflict stream misses every time")
{
    const std::uint64_t sets = 16;
    RotatingCache c(geom(sets, 1));
    oracle::LruCache ref(sets, 1, 64);
    for (int pass = 0; pass < 4; ++pass) {
        for (std::uint64_t i = 0; i <= sets; ++i) {
            const std::uint64_t addr = (i * sets + 5) * 64; // same index field 5
            const bool want = ref.access(addr);
            const bool got = c.access(addr, AccessKind::Read).hit;
            CHECK(got == want);
            CHECK_FALSE(got);
        }
    }
}

TEST_CASE("dirty eviction reports the victim address")
{
    RotatingCache c(geom(4, 1));
    c.access(0, AccessKind::Write);
    const auto out = c.access(4 * 64, AccessKind::Read); // same set, evicts dirty block 0
    REQUIRE(out.writeback.has_value());
    CHECK(*out.writeback == 0);
    const auto clean = c.access(0, AccessKind::Read);
    CHECK_FALSE(clean.writeback.has_value());
    CHECK(c.writebacks() == 1);
}

TEST_CASE("write no-allocate misses leave the cache untouched")
{
    auto cfg = geom(4, 2);
    cfg.write_allocate = false;
    RotatingCache c(cfg);
    const auto out = c.access(128, AccessKind::Write);
    CHECK_FALSE(out.hit);
    CHECK_FALSE(out.fill);
    CHECK(sum(c.line_writes()) == 0);
    CHECK_FALSE(c.contains(128));
}

TEST_CASE("rotate invalidates without counting writes")
{
    RotatingCache empty(geom(8, 2));
    empty.rotate();
    CHECK(empty.rot_counter() == 1);
    CHECK(empty.invalidations() == 1);
    CHECK(sum(empty.line_writes()) == 0);
    CHECK(empty.accesses() == 0);

    RotatingCache c(geom(8, 2));
    for (std::uint64_t a = 0; a < 16; ++a)
        c.access(a * 64, a % 2 ? AccessKind::Write : AccessKind::Read);
    const auto before = c.line_writes();
    const auto flushed = c.rotate();
    CHECK(flushed.size() == 8);
    CHECK(c.line_writes() == before);
    for (std::uint64_t a = 0; a < 16; ++a) {
        CHECK_FALSE(c.contains(a * 64));
        CHECK_FALSE(c.access(a * 64, AccessKind::Read).hit);
    }
}

TEST_CASE("S rotations bring the counter back")
{
    RotatingCache c(geom(32, 2));
    for (int i = 0; i < 32; ++i)
        c.rotate();
    CHECK(c.rot_counter() == 0);
    CHECK(c.invalidations() == 32);
}

TEST_CASE("periodic rotation fires after every rotation_period accesses")
{
    RotatingCache c(geom(8, 2, 64, 3));
    c.access(0, AccessKind::Write);
    c.access(0, AccessKind::Write);
    const auto third = c.access(64, AccessKind::Read);
    CHECK(c.rot_counter() == 1);
    CHECK(third.flushed == std::vector<std::uint64_t>{0});
    CHECK_FALSE(c.access(0, AccessKind::Read).hit);
}

TEST_CASE("hammering one line spreads writes over every set")
{
    const std::uint64_t sets = 16, epoch = 50;
    RotatingCache rotated(geom(sets, 2, 64, epoch));
    RotatingCache fixed(geom(sets, 2));
    for (std::uint64_t i = 0; i < sets * epoch; ++i) {
        rotated.access(0x4000, AccessKind::Write);
        fixed.access(0x4000, AccessKind::Write);
    }
    for (auto w : rotated.set_writes())
        CHECK(w == epoch);
    CHECK(max_of(fixed.set_writes()) == sets * epoch);
    CHECK(max_of(rotated.set_writes()) * sets == max_of(fixed.set_writes()));
}

TEST_CASE("conservation and LRU permutation hold on random traffic")
{
    SplitMix64 rng(17);
    for (auto [sets, ways, period] : {std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>{1, 1, 0},
                                      {4, 2, 7},
                                      {16, 4, 100},
                                      {8, 8, 0},
                                      {64, 3, 1}}) {
        RotatingCache c(geom(sets, ways, 64, period));
        for (int i = 0; i < 20000; ++i) {
            const std::uint64_t addr = (rng.next() % 512) * 64 + rng.next() % 64;
            c.access(addr, rng.next() % 3 == 0 ? AccessKind::Write : AccessKind::Read);
            REQUIRE(c.lru_consistent());
        }
        CHECK(sum(c.line_writes()) == c.fills() + c.write_hits());
        CHECK(sum(c.set_writes()) == c.fills() + c.write_hits());
        CHECK(c.hits() + c.misses() == c.accesses());
    }
}

TEST_CASE("without rotation the cache matches the reference LRU model")
{
    SplitMix64 rng(4242);
    for (auto [sets, ways] : {std::pair<std::uint64_t, std::uint32_t>{1, 4}, {8, 1}, {64, 8}, {16, 3}}) {
        RotatingCache c(geom(sets, ways));
        oracle::LruCache ref(sets, ways, 64);
        for (int i = 0; i < 20000; ++i) {
            const std::uint64_t addr = (rng.next() % (sets * ways * 3)) * 64;
            const auto kind = rng.next() % 2 ? AccessKind::Write : AccessKind::Read;
            REQUIRE(c.access(addr, kind).hit == ref.access(addr));
        }
    }
}

TEST_CASE("geometry validation")
{
    CHECK_THROWS_AS(RotatingCache(geom(3, 2)), ConfigError);
    CHECK_THROWS_AS(RotatingCache(geom(4, 0)), ConfigError);
    CHECK_THROWS_AS(RotatingCache(geom(4, 2, 48)), ConfigError);
    CHECK_THROWS_AS(RotatingCache(geom(0, 2)), ConfigError);
    CHECK(parse_level_role("L1-D") == LevelRole::L1D);
    CHECK(parse_level_role("stlb") == LevelRole::STLB);
    CHECK_THROWS_AS(parse_level_role("l4"), ConfigError);
}
