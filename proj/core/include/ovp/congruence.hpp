#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovp/eta.hpp"
#include "ovp/series.hpp"

namespace ovp {

/// Named integer parameters of one grid point, e.g. {t: 5, alpha: 1}.
/// Ordered so that reports sort deterministically.
using ParamMap = std::map<std::string, std::int64_t>;

std::string to_string(const ParamMap& params);

struct order_budget_exceeded : std::length_error {
    using std::length_error::length_error;
};

struct parameter_out_of_domain : std::domain_error {
    using std::domain_error::domain_error;
};

/// Bounds for the default parameter grids.
struct GridConfig {
    std::int64_t t_max = 64;
    std::int64_t alpha_max = 2;
    std::int64_t i_max = 3;
    std::int64_t j_max = 3;
    std::int64_t r_max = 15;    // odd multipliers 1, 3, ..., r_max
    std::int64_t k_max = 13;    // multipliers coprime to 6
    std::int64_t ell_max = 13;  // odd multipliers coprime to 3
    /// Restrict tuple counts t to primes where a family allows it.
    bool primes_only = false;
};

enum class GfKind { overpartition, opt };
enum class FamilyStatus { theorem, conjecture_only };

std::string to_string(GfKind kind);
std::string to_string(FamilyStatus status);

/// Coefficient index A n + B.
struct Progression {
    std::uint64_t a;
    std::uint64_t b;
};

struct ParamSpec {
    std::string name;
    std::string domain;  // human-readable
    std::function<std::vector<std::int64_t>(const GridConfig&)> values;
};

/// "coefficient at A n + B of GF(params) == expected (mod M)" for every
/// admissible parameter point and n >= 0.
struct CongruenceFamily {
    std::string key;
    std::string statement;  // the congruence in plain notation
    /// A family may belong to several groups (e.g. a mod 8 result that
    /// holds for every t is listed with the other progressions 8n + b).
    std::vector<std::string> groups;
    GfKind gf = GfKind::overpartition;
    std::string gf_parameter_expr;
    std::string progression_expr;
    std::string modulus_expr;
    std::vector<ParamSpec> params;
    FamilyStatus status = FamilyStatus::theorem;
    /// Expected residue is 2 when t is odd and n is triangular, else 0.
    bool triangular_residue = false;
    /// grid restriction to prime t honours GridConfig::primes_only
    bool prime_restrictable = false;

    std::function<std::uint64_t(const ParamMap&)> gf_parameter;
    std::function<Progression(const ParamMap&)> progression;
    std::function<std::uint64_t(const ParamMap&)> modulus;
    std::function<bool(const ParamMap&)> in_domain;

    std::uint64_t expected(const ParamMap& params, std::size_t n) const;
    /// Cartesian product of the parameter value lists, filtered by in_domain.
    std::vector<ParamMap> default_grid(const GridConfig& config) const;
};

/// n is triangular iff 8n + 1 is a perfect square.
bool is_triangular(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Every built-in family, sorted by key.
std::vector<CongruenceFamily> builtin_families();
/// Throws std::invalid_argument for an unknown key.
const CongruenceFamily& find_family(const std::vector<CongruenceFamily>& families, const std::string& key);

enum class ReportStatus { pass, fail, conjecture_pass, conjecture_fail };
std::string to_string(ReportStatus status);

struct Witness {
    ParamMap params;
    std::size_t n;
    std::uint64_t value;
    std::uint64_t modulus;
    std::uint64_t expected;
    std::string source;  // "modular" or "exact"
};

struct VerificationReport {
    std::string key;
    ReportStatus status = ReportStatus::pass;
    std::size_t params_tried = 0;
    std::size_t coefficients_checked = 0;
    std::size_t failures = 0;
    std::size_t order = 0;
    std::size_t exact_cross_checks = 0;
    std::vector<Witness> witnesses;  // sorted by params, then n; capped

    bool failed() const noexcept { return status == ReportStatus::fail; }
};

struct CheckOptions {
    std::size_t max_order = std::size_t{1} << 17;
    /// Grid points re-derived over Z and reduced, chosen with `seed`.
    std::size_t exact_samples = 0;
    /// Exact cross-checks look at most this many coefficients.
    std::size_t exact_order_cap = 400;
    std::uint64_t seed = 0;
    std::size_t witness_limit = 25;
};

/// Series order needed to read coefficients A n + B for n <= n_max.
std::size_t required_order(const CongruenceFamily& family, const ParamMap& params, std::size_t n_max);

/// Builds each generating function over Z/M(params)Z, extracts the
/// progression with dissect(A, B mod A) shifted by B div A, and compares
/// every coefficient n <= n_max with the expected residue.
///
/// Throws parameter_out_of_domain for a grid point the family excludes and
/// order_budget_exceeded when A n_max + B does not fit in max_order.
VerificationReport check_family(const CongruenceFamily& family, const std::vector<ParamMap>& grid,
                                std::size_t n_max, const CheckOptions& options = {});

}  // namespace ovp
