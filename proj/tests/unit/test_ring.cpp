#include <gtest/gtest.h>

#include "ovp/ring.hpp"

using ovp::Ring;

TEST(Ring, ExactAndModularKinds) {
    EXPECT_TRUE(Ring::exact().is_exact());
    EXPECT_EQ(Ring::exact().modulus(), 0U);
    const Ring r = Ring::modular(12);
    EXPECT_TRUE(r.is_modular());
    EXPECT_EQ(r.modulus(), 12U);
    EXPECT_EQ(r.to_string(), "mod 12");
    EXPECT_EQ(Ring::exact().to_string(), "exact");
    EXPECT_NE(Ring::modular(12), Ring::modular(13));
    EXPECT_NE(Ring::modular(12), Ring::exact());
}

TEST(Ring, ModulusBounds) {
    EXPECT_THROW(Ring::modular(0), std::invalid_argument);
    EXPECT_THROW(Ring::modular(1), std::invalid_argument);
    EXPECT_NO_THROW(Ring::modular(2));
    EXPECT_NO_THROW(Ring::modular(Ring::max_modulus));
    EXPECT_THROW(Ring::modular(Ring::max_modulus + 1), std::invalid_argument);
}

TEST(Ring, ReduceIsCanonical) {
    const Ring r = Ring::modular(7);
    EXPECT_EQ(r.reduce(std::int64_t{-1}), 6U);
    EXPECT_EQ(r.reduce(std::int64_t{15}), 1U);
    EXPECT_EQ(r.reduce(ovp::Integer("-100000000000000000000")), 5U);  // -10^20 mod 7
}

TEST(Ring, InverseMod) {
    std::uint64_t inv = 0;
    ASSERT_TRUE(ovp::try_inverse_mod(3, 7, inv));
    EXPECT_EQ(inv, 5U);
    EXPECT_FALSE(ovp::try_inverse_mod(2, 4, inv));
    const std::uint64_t odd = Ring::max_modulus - 1;
    ASSERT_TRUE(ovp::try_inverse_mod(2, odd, inv));
    EXPECT_EQ(ovp::mul_mod(2, inv, odd), 1U);
}

TEST(Ring, ModularArithmeticNearTheLimit) {
    const std::uint64_t m = Ring::max_modulus;
    EXPECT_EQ(ovp::add_mod(m - 1, m - 1, m), m - 2);
    EXPECT_EQ(ovp::sub_mod(0, 1, m), m - 1);
    EXPECT_EQ(ovp::mul_mod(m - 1, m - 1, m), 1U);
}
