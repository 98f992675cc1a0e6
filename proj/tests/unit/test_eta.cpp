#include <gtest/gtest.h>

#include "ovp/eta.hpp"

using namespace ovp;

namespace {
const Ring Z = Ring::exact();

std::vector<long> coeffs(const Series& s) {
    std::vector<long> out;
    for (std::size_t n = 0; n < s.order(); ++n) {
        out.push_back(s.coeff(n).get_si());
    }
    return out;
}
}  // namespace

TEST(Euler, PentagonalExpansion) {
    EXPECT_EQ(coeffs(euler_product(1, Z, 13)), (std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    EXPECT_EQ(coeffs(euler_product(2, Z, 6)), (std::vector<long>{1, 0, -1, 0, -1, 0}));
    EXPECT_THROW(euler_product(0, Z, 5), std::invalid_argument);
}

TEST(Euler, TermsAreAscendingAndBelowOrder) {
    const auto terms = euler_terms(3, 100);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        EXPECT_LT(terms[i].offset, 100U);
        EXPECT_EQ(terms[i].offset % 3, 0U);
        if (i) EXPECT_GT(terms[i].offset, terms[i - 1].offset);
    }
}

TEST(Euler, PartitionNumbers) {
    EXPECT_EQ(coeffs(expand_eta_quotient(EtaQuotient{{1, -1}}, Z, 6)), (std::vector<long>{1, 1, 2, 3, 5, 7}));
}

TEST(Euler, SquareOfF1) {
    const Series s = expand_eta_quotient(EtaQuotient{{1, 2}}, Z, 4);
    EXPECT_EQ(s.coeff(2), -1);
    const Series m = expand_eta_quotient(EtaQuotient{{1, 2}}, Ring::modular(4), 4);
    EXPECT_EQ(m.coeff(1), 2);
}

TEST(EtaQuotient, ParseAndFormat) {
    const auto q = EtaQuotient::parse("f2^3 * f1^-2 * f4^-1");
    EXPECT_EQ(q.factors().size(), 3U);
    EXPECT_EQ(q.exponent_of(1), -2);
    EXPECT_EQ(q.to_string(), "f2^3 * f1^-2 * f4^-1");
    EXPECT_EQ(EtaQuotient::parse("f3").to_string(), "f3^1");
    EXPECT_TRUE(EtaQuotient::parse("1").empty());
    EXPECT_EQ(EtaQuotient::parse("f2 * f2^-1").exponent_of(2), 0);
    EXPECT_TRUE(EtaQuotient::parse("f2 * f2^-1").canonical().empty());
}

TEST(EtaQuotient, ParseErrors) {
    for (const char* bad : {"", "g2", "f0", "f2^", "f2 *", "f2^x", "f2 f3", "2"}) {
        EXPECT_THROW(EtaQuotient::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(EtaQuotient, Algebra) {
    const EtaQuotient a{{2, 1}, {1, -2}};
    EXPECT_EQ(a.raised(3), (EtaQuotient{{2, 3}, {1, -6}}));
    EXPECT_EQ((a * EtaQuotient{{1, 2}}).canonical(), (EtaQuotient{{2, 1}}));
    EXPECT_EQ(overpartition_quotient(2), (EtaQuotient{{2, 2}, {1, -4}}));
    EXPECT_EQ(opt_quotient(1), (EtaQuotient{{2, 3}, {1, -2}, {4, -1}}));
}

TEST(GeneratingFunctions, OverpartitionCounts) {
    EXPECT_EQ(coeffs(overpartition_gf(1, Z, 10)), (std::vector<long>{1, 2, 4, 8, 14, 24, 40, 64, 100, 154}));
    EXPECT_EQ(coeffs(overpartition_gf(2, Z, 4)), (std::vector<long>{1, 4, 12, 32}));
    EXPECT_EQ(coeffs(overpartition_gf(0, Z, 3)), (std::vector<long>{1, 0, 0}));
}

TEST(GeneratingFunctions, OddPartCounts) {
    EXPECT_EQ(coeffs(opt_gf(1, Z, 6)), (std::vector<long>{1, 2, 2, 4, 6, 8}));
    EXPECT_EQ(coeffs(opt_gf(6, Z, 3)), (std::vector<long>{1, 12, 72}));
}

TEST(GeneratingFunctions, RoutesAgreeOnLargeExponents) {
    const Ring r = Ring::modular(32);
    const auto q = overpartition_quotient(64);
    EXPECT_EQ(expand_eta_quotient(q, r, 300), expand_eta_quotient_reference(q, r, 300));
    const auto w = EtaQuotient{{8, 75}, {4, -30}, {16, -28}};
    EXPECT_EQ(expand_eta_quotient(w, r, 200), expand_eta_quotient_reference(w, r, 200));
}

TEST(GeneratingFunctions, MultiplyByQuotientExtends) {
    const Ring r = Ring::modular(8);
    const Series gf3 = overpartition_gf(3, r, 100);
    EXPECT_EQ(multiply_by_eta_quotient(gf3, overpartition_quotient(1).raised(4)), overpartition_gf(7, r, 100));
}
