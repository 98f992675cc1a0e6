#include <gtest/gtest.h>

#include "ovp/theta.hpp"

using namespace ovp;

namespace {
const Ring Z = Ring::exact();
}

TEST(Theta, BorweinA) {
    const Series a = borwein_A(Z, 8);
    const std::vector<long> want{1, 6, 0, 6, 6, 0, 0, 12};
    for (std::size_t n = 0; n < want.size(); ++n) {
        EXPECT_EQ(a.coeff(n), want[n]) << n;
    }
}

TEST(Theta, ComponentH) { EXPECT_EQ(theta_component(ThetaName::h, Z, 4).coeff(1), 5); }

TEST(Theta, JacobiTriangular) {
    const Series j = jacobi_triangular_series(Z, 11);
    EXPECT_EQ(j.coeff(0), 1);
    EXPECT_EQ(j.coeff(1), -3);
    EXPECT_EQ(j.coeff(3), 5);
    EXPECT_EQ(j.coeff(6), -7);
    EXPECT_EQ(j.coeff(10), 9);
    EXPECT_EQ(j.coeff(2), 0);
}

TEST(Theta, Names) {
    for (auto n : {ThetaName::A, ThetaName::a, ThetaName::b, ThetaName::c, ThetaName::d, ThetaName::g, ThetaName::h,
                   ThetaName::m}) {
        EXPECT_EQ(parse_theta_name(to_string(n)), n);
    }
    EXPECT_THROW(parse_theta_name("z"), std::invalid_argument);
}

TEST(Theta, ModularMatchesReducedExact) {
    for (auto n : {ThetaName::a, ThetaName::b, ThetaName::c, ThetaName::g}) {
        EXPECT_EQ(theta_component(n, Ring::modular(27), 60), reduce_ring(theta_component(n, Z, 60), 27));
    }
}
