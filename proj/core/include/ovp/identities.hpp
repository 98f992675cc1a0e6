#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ovp/recipe.hpp"

namespace ovp {

enum class IdentityMode { exact, congruence };

/// A displayed identity lhs = rhs, or a congruence lhs == rhs (mod m).
struct IdentityCase {
    std::string key;
    Recipe lhs;
    Recipe rhs;
    IdentityMode mode = IdentityMode::exact;
    std::uint64_t modulus = 0;  // congruence mode only
    std::size_t default_order = 500;
};

enum class CheckStatus { pass, fail, error };

struct Mismatch {
    std::size_t exponent;
    Integer lhs;
    Integer rhs;
};

struct IdentityReport {
    std::string key;
    IdentityMode mode;
    std::uint64_t modulus;
    std::size_t order;
    CheckStatus status;
    std::optional<Mismatch> first_mismatch;
    std::string error;  // set when status == error
};

std::string to_string(IdentityMode mode);
std::string to_string(CheckStatus status);

/// Compares both sides coefficientwise below q^order, over Z for exact
/// cases and over Z/mZ for congruences. Evaluation failures (for example a
/// non-unit inversion) are reported with status error rather than thrown;
/// only order == 0 throws.
IdentityReport verify_identity(const IdentityCase& c, std::size_t order);

/// The 17 built-in cases: B1-p{2,3}-k{1..5} (f_1^{p^k} == f_p^{p^{k-1}}
/// mod p^k), D1, D1-SQ, D2, D3, D4, JACOBI and R13.
std::vector<IdentityCase> builtin_identities();

/// Runs the cases on `jobs` threads; the result is sorted by key.
std::vector<IdentityReport> verify_identities(const std::vector<IdentityCase>& cases, std::size_t order,
                                              unsigned jobs = 1);

}  // namespace ovp
