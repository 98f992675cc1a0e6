#include <gtest/gtest.h>

#include "ovp/binomial_tables.hpp"

using namespace ovp;

TEST(BinomialTables, Shapes) {
    const auto& t16 = binomial_table(16);
    EXPECT_EQ(t16.s, 7U);
    EXPECT_EQ(t16.period, 8U);
    EXPECT_EQ(t16.rows.size(), 8U);
    const auto& t32 = binomial_table(32);
    EXPECT_EQ(t32.s, 15U);
    EXPECT_EQ(t32.rows.size(), 16U);
    for (const auto& row : t32.rows) EXPECT_EQ(row.size(), t32.terms);
    EXPECT_THROW(binomial_table(8), std::invalid_argument);
}

TEST(BinomialTables, RowByHand) {
    // t = 1, s = 7: C(7, r) (-2)^r = -14, 84, -280 -> 2, 4, 8 (mod 16)
    EXPECT_EQ(binomial_row(binomial_table(16), 1), (std::vector<std::uint64_t>{2, 4, 8}));
    EXPECT_EQ(binomial_row(binomial_table(16), 0), (std::vector<std::uint64_t>{0, 0, 0}));
}

TEST(BinomialTables, ReplayPasses) {
    for (unsigned w : {16U, 32U}) {
        const auto r = replay_binomial_tables(w);
        EXPECT_TRUE(r.passed()) << w;
        for (const auto& row : r.rows) EXPECT_TRUE(row.ok()) << w << " row " << row.residue;
    }
}

TEST(BinomialTables, PeriodicInT) {
    const auto& t = binomial_table(32);
    for (std::uint64_t i = 0; i < t.period; ++i) {
        EXPECT_EQ(binomial_row(t, i), binomial_row(t, i + 3 * t.period)) << i;
    }
}
