#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ovp/ring.hpp"

namespace ovp {

/// Dense truncated power series c_0 + c_1 q + ... + c_{N-1} q^{N-1} + O(q^N)
/// over a Ring. Values are immutable once built; every operation returns a
/// new series.
///
/// Coefficients are stored canonically: residues in [0, m) for a modular
/// ring, arbitrary-precision integers for the exact ring. The truncation
/// order N is always >= 1.
class Series {
public:
    using Residues = std::vector<std::uint64_t>;
    using Integers = std::vector<Integer>;

    static Series zero(const Ring& ring, std::size_t order);
    static Series one(const Ring& ring, std::size_t order);

    /// Takes ownership of already-canonical residues. Throws if any residue
    /// is >= m or the vector is empty.
    static Series from_residues(const Ring& ring, Residues coeffs);
    /// Takes ownership of integer coefficients for the exact ring.
    static Series from_integers(Integers coeffs);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t order() const noexcept;

    /// Coefficient at q^n as an integer (the canonical residue for modular
    /// rings). Throws std::out_of_range for n >= order().
    Integer coeff(std::size_t n) const;

    /// Modular rings only.
    std::span<const std::uint64_t> residues() const;
    /// Exact ring only.
    std::span<const Integer> integers() const;

    bool is_zero() const noexcept;

    /// "c0 + c1*q + c2*q^2 + ... (mod m; O(q^N))" or "(exact; O(q^N))".
    std::string to_string() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    Series(const Ring& ring, std::variant<Residues, Integers> coeffs)
        : ring_(ring), coeffs_(std::move(coeffs)) {}

    Ring ring_ = Ring::exact();
    std::variant<Residues, Integers> coeffs_;
};

/// Builds a canonical series of the given order, zero-padding `coeffs`.
/// Throws std::invalid_argument on order 0 or more coefficients than order.
Series make_series(const Ring& ring, std::span<const std::int64_t> coeffs, std::size_t order);
Series make_series(const Ring& ring, std::span<const Integer> coeffs, std::size_t order);
Series make_series(const Ring& ring, std::initializer_list<std::int64_t> coeffs, std::size_t order);

// Binary operations require equal rings (ring_mismatch otherwise) and
// truncate to the smaller of the two orders.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);
Series scale(const Series& a, const Integer& c);

/// Truncated Cauchy product using the fastest kernel available for the ring.
Series mul(const Series& a, const Series& b);
/// Reference schoolbook convolution, one reduction per product term.
Series mul_baseline(const Series& a, const Series& b);

/// Multiplicative inverse; throws not_a_unit unless c_0 is a unit.
Series invert(const Series& a);
/// Binary exponentiation; e < 0 inverts first. pow(a, 0) == 1.
Series pow(const Series& a, std::int64_t e);

/// a(q^k) at the order of `a`. Throws std::invalid_argument for k == 0.
Series substitute_power(const Series& a, std::size_t k);
/// a(q^k) at an explicit order, which may not exceed k * order(a).
Series substitute_power(const Series& a, std::size_t k, std::size_t order);

/// Coefficients c_{m j + r}, j >= 0. Requires m >= 1 and r < m; throws
/// std::invalid_argument if no coefficient of that class is known.
Series dissect(const Series& a, std::size_t m, std::size_t r);

/// q^j * a, order preserved (tail truncated).
Series shift(const Series& a, std::size_t j);

/// Reduction Z -> Z/mZ. Throws std::invalid_argument if `a` is modular.
Series reduce_ring(const Series& a, std::uint64_t m);

/// First `order` coefficients; order must be in [1, a.order()].
Series truncate(const Series& a, std::size_t order);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace ovp
