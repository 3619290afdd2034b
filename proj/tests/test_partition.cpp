#include "xm/partition.hpp"
#include "xm/qseries.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace xm;

TEST_CASE("partition basics") {
    const Partition nu({4, 2, 2, 2, 1});
    CHECK(Partition{}.size() == 0);
    CHECK(nu.size() == 11);
    CHECK(Partition({2, 2, 1}).size() == 5);

    CHECK(nu.multiplicity(2) == 3);
    CHECK(nu.multiplicity(1) == 1);
    CHECK(nu.multiplicity(4) == 1);
    CHECK(nu.multiplicity(3) == 0);
    CHECK(Partition{}.multiplicity(5) == 0);
    CHECK(Partition({2, 2, 1}).multiplicity(1) == 1);

    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("column counts") {
    CHECK(Partition{}.column_count(3) == 0);
    const Partition p({2, 2, 1});
    // min-sum oracle
    CHECK(p.column_count(2) == std::min(2, 2) + std::min(2, 2) + std::min(1, 2));
    CHECK(Partition({4, 2, 2, 2, 1}).column_count(1) == 5);
    CHECK(p.column_count(0) == 0);
    CHECK(p.column_count(99) == p.size());
}

TEST_CASE("column counts are monotone and concave") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(0, 6);
    for (int t = 0; t < 100; ++t) {
        std::vector<int> parts(static_cast<size_t>(dim(rng)));
        for (auto& part : parts) part = dim(rng) + 1;
        std::sort(parts.rbegin(), parts.rend());
        const Partition p(parts);
        long prev_gap = -1;
        for (int i = 0; i + 1 <= 8; ++i) {
            const long gap = p.column_count(i + 1) - p.column_count(i);
            CHECK(gap >= 0);
            if (prev_gap >= 0) CHECK(gap <= prev_gap);
            prev_gap = gap;
        }
        long weighted = 0;
        for (int i = 1; i <= 8; ++i) weighted += static_cast<long>(i) * p.multiplicity(i);
        CHECK(weighted == p.size());
    }
}

TEST_CASE("partitions_in_box enumeration") {
    CHECK(partitions_in_box(7, 0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_in_box(1, 2) ==
          std::vector<Partition>{Partition{}, Partition({1}), Partition({1, 1})});
    CHECK(partitions_in_box(1, 1).size() == 2);

    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= 6; ++m) {
            const auto all = partitions_in_box(p, m);
            CHECK(BigInt(all.size()) == q_binomial(p, m).at_one());
            CHECK(std::is_sorted(all.begin(), all.end()));
            CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
            for (const Partition& rho : all) {
                CHECK(rho.num_parts() <= m);
                CHECK(rho.largest() <= p);
            }
        }
}

TEST_CASE("partitions_of enumeration") {
    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4).size() == 5);
    const auto all = partitions_of(6);
    CHECK(all.size() == 11);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const Partition& rho : all) CHECK(rho.size() == 6);
}

TEST_CASE("complement_in_box") {
    CHECK(complement_in_box(Partition{}, 3, 2) == Partition({3, 3}));
    CHECK(complement_in_box(Partition({3, 3}), 3, 2) == Partition{});
    CHECK(complement_in_box(Partition({3}), 3, 1) == Partition{});
    CHECK(complement_in_box(Partition({2, 1}), 3, 3) == Partition({3, 2, 1}));
    CHECK_THROWS_AS(complement_in_box(Partition({4}), 3, 2), std::domain_error);
    CHECK_THROWS_AS(complement_in_box(Partition({1, 1}), 3, 1), std::domain_error);

    for (int p = 0; p <= 5; ++p)
        for (int m = 0; m <= 5; ++m)
            for (const Partition& rho : partitions_in_box(p, m)) {
                const Partition comp = complement_in_box(rho, p, m);
                CHECK(comp.num_parts() <= m);
                CHECK(comp.largest() <= p);
                CHECK(complement_in_box(comp, p, m) == rho);
            }
}
