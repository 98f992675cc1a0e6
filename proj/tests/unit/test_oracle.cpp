#include <gtest/gtest.h>

#include "ovp/oracle.hpp"

using namespace ovp::oracle;

TEST(Oracle, OverpartitionCounts) {
    const auto t1 = count_overpartition_tuples(1, 9);
    EXPECT_EQ(t1.counts, (std::vector<mpz_class>{1, 2, 4, 8, 14, 24, 40, 64, 100, 154}));
    EXPECT_EQ(count_overpartition_tuples(2, 3).counts, (std::vector<mpz_class>{1, 4, 12, 32}));
    EXPECT_EQ(count_overpartition_tuples(0, 3).counts, (std::vector<mpz_class>{1, 0, 0, 0}));
    EXPECT_EQ(t1.family, Family::overpartition_tuples);
}

TEST(Oracle, OddPartCounts) {
    EXPECT_EQ(count_opt_tuples(1, 5).counts, (std::vector<mpz_class>{1, 2, 2, 4, 6, 8}));
    EXPECT_EQ(count_opt_tuples(6, 2).counts, (std::vector<mpz_class>{1, 12, 72}));
}

TEST(Oracle, EnumerationAgrees) {
    for (unsigned t = 0; t <= 2; ++t) {
        const auto c = count_overpartition_tuples(t, 10);
        for (unsigned n = 0; n <= 10; ++n) {
            EXPECT_EQ(mpz_class(static_cast<unsigned long>(enumerate_tiny(t, n))), c.counts[n]) << t << "," << n;
        }
    }
}

TEST(Oracle, EnumerationBounds) {
    EXPECT_THROW(enumerate_tiny(4, 1), std::out_of_range);
    EXPECT_THROW(enumerate_tiny(1, 15), std::out_of_range);
}

TEST(Oracle, LargeValuesStayExact) {
    const auto c = count_overpartition_tuples(8, 200);
    EXPECT_GT(mpz_sizeinbase(c.counts[200].get_mpz_t(), 2), 64U);
}
