#include "hesslab/error.hpp"
#include "hesslab/partitions.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hesslab;

TEST_CASE("partitions_of counts and order") {
    CHECK(partitions_of(1) == std::vector<Partition>{Partition({1})});
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(12).size() == 77);
    const auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
    CHECK_THROWS_AS(partitions_of(0), BoundedInputError);
    CHECK_THROWS_AS(partitions_of(13), BoundedInputError);
}

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS(Partition({1, 2}));
    CHECK_THROWS(Partition({2, 0}));
    CHECK(Partition::parse("2,1") == Partition({2, 1}));
    CHECK(Partition::parse("211") == Partition({2, 1, 1}));
    CHECK(Partition({3, 1}).to_string() == "3,1");
    CHECK(Partition({3, 1}).to_compact_string() == "31");
    CHECK(Partition::from_composition({0, 2, 0, 3}) == Partition({3, 2}));
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(Partition({2, 1}), Partition({3})));
    CHECK_FALSE(dominance_leq(Partition({3}), Partition({2, 1})));
    CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
    CHECK_THROWS(dominance_leq(Partition({2}), Partition({3})));
    for (int n = 1; n <= 8; ++n) {
        const auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
                CHECK(dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a)));
            }
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({4})) == Partition({1, 1, 1, 1}));
    CHECK(conjugate(Partition({2, 1})) == Partition({2, 1}));
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    for (const auto& p : partitions_of(9)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("character values") {
    CHECK(character_value(Partition({2, 1}), Partition({3})) == -1);
    CHECK(character_value(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(character_value(Partition({2, 1}), Partition({2, 1})) == 0);
    for (int n = 1; n <= 7; ++n)
        for (const auto& mu : partitions_of(n)) {
            CHECK(character_value(Partition({n}), mu) == 1);
            const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
            CHECK(character_value(conjugate(Partition({n})), mu) == sign);
        }
    // a 2x2 matrix model of the standard representation of S_3:
    // traces of identity, a transposition and a 3-cycle
    CHECK(dimension_of(Partition({2, 1})) == 2);
    CHECK(dimension_of(Partition({3, 2})) == 5);
    CHECK(dimension_of(Partition({4, 2, 1})) == 35);
}

TEST_CASE("character orthogonality up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto ps = partitions_of(n);
        std::int64_t sum_sq = 0;
        for (const auto& a : ps) {
            sum_sq += dimension_of(a) * dimension_of(a);
            for (const auto& b : ps) {
                std::int64_t s = 0;
                for (const auto& mu : ps)
                    s += factorial(n) / centralizer_order(mu) * character_value(a, mu) * character_value(b, mu);
                CHECK(s == (a == b ? factorial(n) : 0));
            }
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("invariant dimensions") {
    CHECK(invariant_dim(Partition({2, 1}), {1}) == 1);
    CHECK(invariant_dim(Partition({1, 1, 1}), {2}) == 0);
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> all(n - 1);
        std::iota(all.begin(), all.end(), 1);
        for (const auto& lambda : partitions_of(n)) {
            CHECK(invariant_dim(lambda, {}) == dimension_of(lambda));
            CHECK(invariant_dim(lambda, all) == (lambda == Partition({n}) ? 1 : 0));
            for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
                std::vector<int> J;
                for (int j = 1; j < n; ++j)
                    if (mask >> (j - 1) & 1) J.push_back(j);
                CHECK(invariant_dim(lambda, J) == oracle::invariant_dim_by_elements(lambda, J));
            }
        }
    }
    CHECK(young_blocks(5, {1, 3, 4}) == std::vector<int>{2, 3});
}
