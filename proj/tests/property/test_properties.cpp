#include <gtest/gtest.h>

#include "properties.hpp"

using namespace ovp::testing;

namespace {
constexpr std::size_t cases = 1000;

void expect_ok(const PropertyResult& r) {
    EXPECT_EQ(r.cases, cases);
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " failures, first: " << r.first_failure;
}
}  // namespace

TEST(Property, RingAxioms) { expect_ok(check_ring_axioms(11, cases)); }
TEST(Property, DissectionReconstruction) { expect_ok(check_dissection_reconstruction(12, cases)); }
TEST(Property, ReductionHomomorphism) { expect_ok(check_reduction_homomorphism(13, cases)); }
TEST(Property, PowAdditivity) { expect_ok(check_pow_additivity(14, cases)); }
TEST(Property, Inverse) { expect_ok(check_inverse(15, cases)); }
TEST(Property, LazyKernelMatchesBaseline) { expect_ok(check_lazy_kernel(16, cases)); }
TEST(Property, EtaRoutesAgree) { expect_ok(check_eta_routes(17, cases)); }
TEST(Property, EtaRoundTrip) { expect_ok(check_eta_round_trip(18, cases)); }
