#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "emaware/errors.hpp"
#include "emaware/wear_stats.hpp"

using namespace emaware;

using Counts = std::vector<std::uint64_t>;

TEST_CASE("histogram worked example")
{
    const Counts c{100, 90, 50, 10};
    const auto h = histogram(c);
    CHECK(h.bins == std::array<std::uint64_t, 5>{1, 1, 0, 1, 1});
    CHECK(h.max_writes == 100);
    CHECK(h.avg_writes == doctest::Approx(62.5));
    CHECK(h.num_entries == 4);
    CHECK(avg_to_max(c) == doctest::Approx(0.625));
}

TEST_CASE("histogram edge cases")
{
    CHECK(histogram(Counts{7, 7, 7}).bins == std::array<std::uint64_t, 5>{0, 0, 0, 0, 3});
    const auto z = histogram(Counts{0, 0});
    CHECK(z.bins == std::array<std::uint64_t, 5>{2, 0, 0, 0, 0});
    CHECK(z.max_writes == 0);
    CHECK_THROWS_AS(avg_to_max(Counts{0, 0}), DomainError);
    CHECK_THROWS_AS(histogram(Counts{}), std::invalid_argument);
    CHECK_THROWS_AS(avg_to_max(Counts{}), std::invalid_argument);
}

TEST_CASE("bin boundaries are inclusive on the upper edge")
{
    // share 25, 50, 75, 90 land in the lower bin; one more write moves up.
    const auto h = histogram(Counts{25, 50, 75, 90, 100});
    CHECK(h.bins == std::array<std::uint64_t, 5>{1, 1, 1, 1, 1});
    const auto g = histogram(Counts{26, 51, 76, 91, 100});
    CHECK(g.bins == std::array<std::uint64_t, 5>{0, 1, 1, 1, 2});
    // Non-decimal max: 1/3 of 3 is exactly representable only in integers.
    const auto k = histogram(Counts{1, 2, 3});
    CHECK(k.bins == std::array<std::uint64_t, 5>{0, 1, 1, 0, 1});
}

TEST_CASE("single hotspot gives 1/n")
{
    for (std::size_t n : {1u, 2u, 16u, 512u}) {
        Counts c(n, 0);
        c[n / 2] = 12345;
        CHECK(avg_to_max(c) == doctest::Approx(1.0 / double(n)));
    }
}

TEST_CASE("improvement report examples")
{
    const auto same = improvement_report(Counts{5, 3, 1}, Counts{5, 3, 1}, "x");
    REQUIRE(same.mtf_improvement.has_value());
    CHECK(*same.mtf_improvement == 0.0);

    const auto r = improvement_report(Counts{60, 30, 10}, Counts{34, 33, 33}, "alu");
    REQUIRE(r.mtf_improvement.has_value());
    CHECK(*r.mtf_improvement == doctest::Approx(26.0 / 34.0));
    CHECK(r.structure == "alu");
    CHECK(r.num_entries == 3);
    CHECK(*r.avg_to_max_baseline == doctest::Approx(100.0 / 3.0 / 60.0));
    CHECK(r.counts_aware == Counts{34, 33, 33});

    const auto unb = improvement_report(Counts{4, 0}, Counts{0, 0}, "u");
    CHECK_FALSE(unb.mtf_improvement.has_value());
    CHECK(unb.avg_to_max_baseline.has_value());
    CHECK_FALSE(unb.avg_to_max_aware.has_value());

    const auto idle = improvement_report(Counts{0, 0}, Counts{0, 0}, "i");
    CHECK(*idle.mtf_improvement == 0.0);
    const auto worse = improvement_report(Counts{0, 0}, Counts{1, 0}, "w");
    CHECK(*worse.mtf_improvement == -1.0);

    CHECK_THROWS(improvement_report(Counts{1, 2}, Counts{1}, "bad"));
}

TEST_CASE("geometric mean in ratio space")
{
    const std::vector<double> two{1.0, 3.0};
    CHECK(geo_mean(two) == doctest::Approx(std::sqrt(8.0) - 1.0));
    const std::vector<double> one{0.42};
    CHECK(geo_mean(one) == doctest::Approx(0.42));
    const std::vector<double> zeros{0.0, 0.0, 0.0};
    CHECK(geo_mean(zeros) == 0.0);
    const std::vector<double> bad{0.5, -1.0};
    CHECK_THROWS_AS(geo_mean(bad), DomainError);
}

TEST_CASE("histogram properties on random vectors")
{
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 40;
        Counts c(n);
        for (auto& x : c)
            x = rng() % 1000;
        const auto h = histogram(c);
        std::uint64_t total = 0;
        for (auto b : h.bins)
            total += b;
        CHECK(total == n);
        if (h.max_writes == 0)
            continue;
        CHECK(h.bins[4] >= 1);
        const double r = avg_to_max(c);
        CHECK(r > 0.0);
        CHECK(r <= 1.0);

        // Scaling every count leaves the shape unchanged.
        Counts scaled = c;
        for (auto& x : scaled)
            x *= 7;
        CHECK(histogram(scaled).bins == h.bins);
        CHECK(avg_to_max(scaled) == doctest::Approx(r));

        Counts other(n);
        for (auto& x : other)
            x = 1 + rng() % 1000;
        const auto ab = improvement_report(c, other, "a");
        const auto ba = improvement_report(other, c, "b");
        // (1 + x)(1 + y) == 1 for swapped arguments.
        CHECK((1.0 + *ab.mtf_improvement) * (1.0 + *ba.mtf_improvement) == doctest::Approx(1.0));
    }
}
