#pragma once

// Combinatorial ground truth for overpartition tuple counts. Nothing here
// touches Series or the Euler product machinery.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ovp::oracle {

enum class Family { overpartition_tuples, opt_tuples };

std::string to_string(Family family);

struct CountTable {
    Family family;
    std::uint64_t parameter;
    std::size_t upto;
    std::vector<mpz_class> counts;  // counts[n] for n = 0..upto
};

/// Number of overpartition t-tuples of n for n <= upto.
///
/// Each colour contributes prod_{i>=1} (1 + q^i)/(1 - q^i), and
///   (1 + q^i)/(1 - q^i) = 1 + 2q^i + 2q^{2i} + 2q^{3i} + ...
/// (part i may appear any number of times; when it appears at all, its
/// first occurrence is overlined or not). The table is built by convolving
/// with that sparse factor once per colour and part size.
CountTable count_overpartition_tuples(std::uint64_t t, std::size_t upto);

/// Same as above with only odd part sizes.
CountTable count_opt_tuples(std::uint64_t k, std::size_t upto);

inline constexpr unsigned enumerate_max_tuple = 3;
inline constexpr unsigned enumerate_max_n = 14;

/// Literal count of overpartition t-tuples of n by generating every tuple.
/// Throws std::out_of_range unless t <= 3 and n <= 14.
std::uint64_t enumerate_tiny(unsigned t, unsigned n);

}  // namespace ovp::oracle
