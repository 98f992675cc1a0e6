#include "ovp/ring.hpp"

namespace ovp {

Ring Ring::modular(std::uint64_t m) {
    if (m < 2) {
        throw std::invalid_argument("modular ring needs modulus >= 2, got " + std::to_string(m));
    }
    if (m > max_modulus) {
        throw std::invalid_argument("modulus " + std::to_string(m) + " exceeds one machine word budget");
    }
    return Ring{Kind::modular, m};
}

std::uint64_t Ring::reduce(std::int64_t v) const {
    if (is_exact()) {
        throw std::logic_error("reduce() called on the exact ring");
    }
    const auto m = static_cast<std::int64_t>(modulus_);
    std::int64_t r = v % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t Ring::reduce(const Integer& v) const {
    if (is_exact()) {
        throw std::logic_error("reduce() called on the exact ring");
    }
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 required for mpz_fdiv_ui");
    return mpz_fdiv_ui(v.get_mpz_t(), modulus_);
}

std::string Ring::to_string() const {
    return is_exact() ? std::string("exact") : "mod " + std::to_string(modulus_);
}

bool try_inverse_mod(std::uint64_t a, std::uint64_t m, std::uint64_t& out) noexcept {
    // extended Euclid on signed 128-bit to avoid overflow for m near 2^62
    __extension__ using i128 = __int128;
    i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        i128 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        return false;
    }
    i128 inv = old_s % static_cast<i128>(m);
    if (inv < 0) {
        inv += m;
    }
    out = static_cast<std::uint64_t>(inv);
    return true;
}

}  // namespace ovp
