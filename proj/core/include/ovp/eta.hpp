#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ovp/kernels.hpp"
#include "ovp/series.hpp"

namespace ovp {

/// One factor f_scale^exponent of an eta quotient.
struct EtaFactor {
    std::uint64_t scale;
    std::int64_t exponent;

    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// Formal product of Euler products f_k = prod_{n>=1} (1 - q^{kn}) with
/// integer exponents.
///
/// Factors keep the order of first appearance so the textual form
/// round-trips; a repeated scale is merged into its first occurrence by
/// summing exponents. Expansion always multiplies in ascending scale order.
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(std::initializer_list<EtaFactor> factors);

    /// Parses "f2^3 * f1^-2 * f4^-1". A bare "fK" means exponent 1 and the
    /// literal "1" is the empty product. Throws std::invalid_argument.
    static EtaQuotient parse(std::string_view text);

    /// Inverse of parse(); the empty product prints as "1".
    std::string to_string() const;

    std::span<const EtaFactor> factors() const noexcept { return factors_; }
    std::int64_t exponent_of(std::uint64_t scale) const noexcept;
    bool empty() const noexcept { return factors_.empty(); }

    /// Appends (or merges) a factor. Throws std::invalid_argument for scale 0.
    EtaQuotient& times(std::uint64_t scale, std::int64_t exponent);
    EtaQuotient& operator*=(const EtaQuotient& other);
    /// Every exponent multiplied by n.
    EtaQuotient raised(std::int64_t n) const;

    /// Sorted by scale with zero exponents removed; two quotients denote the
    /// same series iff their canonical forms are equal.
    EtaQuotient canonical() const;

    friend bool operator==(const EtaQuotient&, const EtaQuotient&) = default;

private:
    std::vector<EtaFactor> factors_;
};

inline EtaQuotient operator*(EtaQuotient a, const EtaQuotient& b) { return a *= b; }

/// Nonzero non-constant terms of f_k below q^order, from the pentagonal
/// number theorem: exponents k*j(3j-1)/2 and k*j(3j+1)/2 with sign (-1)^j.
std::vector<kernels::SparseTerm> euler_terms(std::uint64_t k, std::size_t order);

/// Dense expansion of f_k. Throws std::invalid_argument for k == 0.
Series euler_product(std::uint64_t k, const Ring& ring, std::size_t order);

/// s * f_k^e by repeated sparse multiplication or division.
Series apply_euler_power(const Series& s, std::uint64_t k, std::int64_t e);

/// s * eq. Each factor is applied either by sparse passes or as a dense
/// power of f_1 substituted at q^k, whichever is estimated cheaper; both
/// routes give identical coefficients.
Series multiply_by_eta_quotient(const Series& s, const EtaQuotient& eq);

Series expand_eta_quotient(const EtaQuotient& eq, const Ring& ring, std::size_t order);

/// Literal product of pow(euler_product(scale), exponent) in ascending
/// scale order. Slow; used to cross-check the default route.
Series expand_eta_quotient_reference(const EtaQuotient& eq, const Ring& ring, std::size_t order);

/// f_2^t / f_1^{2t}: counts overpartition t-tuples.
EtaQuotient overpartition_quotient(std::uint64_t t);
/// f_2^{3k} / (f_1^{2k} f_4^k): counts overpartition k-tuples with odd parts.
EtaQuotient opt_quotient(std::uint64_t k);

Series overpartition_gf(std::uint64_t t, const Ring& ring, std::size_t order);
Series opt_gf(std::uint64_t k, const Ring& ring, std::size_t order);

}  // namespace ovp
