#pragma once

// Randomized algebraic properties shared by the property tests and the
// acceptance runner. Each check draws `cases` independent inputs.

#include <cstddef>
#include <cstdint>
#include <string>

namespace ovp::testing {

struct PropertyResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const { return failures == 0; }
};

PropertyResult check_ring_axioms(std::uint64_t seed, std::size_t cases);
PropertyResult check_dissection_reconstruction(std::uint64_t seed, std::size_t cases);
PropertyResult check_reduction_homomorphism(std::uint64_t seed, std::size_t cases);
PropertyResult check_pow_additivity(std::uint64_t seed, std::size_t cases);
PropertyResult check_inverse(std::uint64_t seed, std::size_t cases);
PropertyResult check_lazy_kernel(std::uint64_t seed, std::size_t cases);
PropertyResult check_eta_routes(std::uint64_t seed, std::size_t cases);
PropertyResult check_eta_round_trip(std::uint64_t seed, std::size_t cases);

}  // namespace ovp::testing
