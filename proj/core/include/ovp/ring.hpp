#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace ovp {

/// Arbitrary-precision integer used by the exact coefficient ring.
using Integer = mpz_class;

struct ring_mismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an inversion needs a constant term that is not a unit.
struct not_a_unit : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coefficient domain of a series: the integers, or Z/mZ with m fitting in
/// one machine word.
class Ring {
public:
    enum class Kind { exact, modular };

    /// Largest admissible modulus; keeps a + b below 2^64 for reduced a, b.
    static constexpr std::uint64_t max_modulus = std::uint64_t{1} << 62;

    static Ring exact() noexcept { return Ring{}; }
    /// Throws std::invalid_argument unless 2 <= m <= max_modulus.
    static Ring modular(std::uint64_t m);

    Kind kind() const noexcept { return kind_; }
    bool is_exact() const noexcept { return kind_ == Kind::exact; }
    bool is_modular() const noexcept { return kind_ == Kind::modular; }
    /// 0 for the exact ring.
    std::uint64_t modulus() const noexcept { return modulus_; }

    /// Canonical residue in [0, m). Modular rings only.
    std::uint64_t reduce(std::int64_t v) const;
    std::uint64_t reduce(const Integer& v) const;

    /// "exact" or "mod <m>".
    std::string to_string() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring() = default;
    Ring(Kind k, std::uint64_t m) : kind_(k), modulus_(m) {}

    Kind kind_ = Kind::exact;
    std::uint64_t modulus_ = 0;
};

/// Inverse of `a` modulo `m`, if gcd(a, m) = 1.
bool try_inverse_mod(std::uint64_t a, std::uint64_t m, std::uint64_t& out) noexcept;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    const std::uint64_t s = a + b;
    return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    __extension__ using u128 = unsigned __int128;
    return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

}  // namespace ovp
