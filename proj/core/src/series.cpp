#include "ovp/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ovp/kernels.hpp"

namespace ovp {

namespace {

void require_order(std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("series order must be >= 1");
    }
}

void require_same_ring(const Series& a, const Series& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw ring_mismatch(std::string(op) + ": ring mismatch (" + a.ring().to_string() + " vs " +
                            b.ring().to_string() + ")");
    }
}

template <typename Fn>
Series zip(const Series& a, const Series& b, const char* op, Fn&& fn) {
    require_same_ring(a, b, op);
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_modular()) {
        const auto m = a.ring().modulus();
        const auto x = a.residues();
        const auto y = b.residues();
        Series::Residues out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(x[i], y[i], m);
        }
        return Series::from_residues(a.ring(), std::move(out));
    }
    const auto x = a.integers();
    const auto y = b.integers();
    Series::Integers out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = fn(x[i], y[i], std::uint64_t{0});
    }
    return Series::from_integers(std::move(out));
}

struct AddOp {
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y, std::uint64_t m) const { return add_mod(x, y, m); }
    Integer operator()(const Integer& x, const Integer& y, std::uint64_t) const { return x + y; }
};

struct SubOp {
    std::uint64_t operator()(std::uint64_t x, std::uint64_t y, std::uint64_t m) const { return sub_mod(x, y, m); }
    Integer operator()(const Integer& x, const Integer& y, std::uint64_t) const { return x - y; }
};

Series invert_modular(const Series& a) {
    const auto m = a.ring().modulus();
    const auto x = a.residues();
    std::uint64_t inv0 = 0;
    if (!try_inverse_mod(x[0], m, inv0)) {
        throw not_a_unit("invert: constant term " + std::to_string(x[0]) + " is not a unit mod " +
                         std::to_string(m));
    }
    const std::size_t n = x.size();
    Series::Residues b(n, 0);
    b[0] = inv0;

    const std::uint64_t top = m - 1;
    const bool lazy = top <= std::numeric_limits<std::uint32_t>::max();
    const std::uint64_t block =
        !lazy || top == 0 ? 1 : (std::numeric_limits<std::uint64_t>::max() - top) / (top * top);

    for (std::size_t k = 1; k < n; ++k) {
        std::uint64_t acc = 0;
        if (lazy) {
            std::uint64_t pending = 0;
            for (std::size_t i = 1; i <= k; ++i) {
                acc += x[i] * b[k - i];
                if (++pending == block) {
                    acc %= m;
                    pending = 0;
                }
            }
            acc %= m;
        } else {
            for (std::size_t i = 1; i <= k; ++i) {
                acc = add_mod(acc, mul_mod(x[i], b[k - i], m), m);
            }
        }
        b[k] = mul_mod(sub_mod(0, acc, m), inv0, m);
    }
    return Series::from_residues(a.ring(), std::move(b));
}

Series invert_exact(const Series& a) {
    const auto x = a.integers();
    if (x[0] != 1 && x[0] != -1) {
        throw not_a_unit("invert: constant term " + x[0].get_str() + " is not a unit in Z");
    }
    const std::size_t n = x.size();
    Series::Integers b(n);
    b[0] = x[0];
    Integer acc;
    for (std::size_t k = 1; k < n; ++k) {
        acc = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (sgn(x[i]) != 0) {
                mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), b[k - i].get_mpz_t());
            }
        }
        // 1/c0 == c0 for c0 = +-1
        b[k] = -acc * x[0];
    }
    return Series::from_integers(std::move(b));
}

template <typename Vec>
Vec spread(const Vec& src, std::size_t k, std::size_t order) {
    Vec out(order);
    for (std::size_t j = 0; j < src.size() && j * k < order; ++j) {
        out[j * k] = src[j];
    }
    return out;
}

}  // namespace

Series Series::zero(const Ring& ring, std::size_t order) {
    require_order(order);
    if (ring.is_modular()) {
        return Series(ring, Residues(order, 0));
    }
    return Series(ring, Integers(order));
}

Series Series::one(const Ring& ring, std::size_t order) {
    require_order(order);
    if (ring.is_modular()) {
        Residues c(order, 0);
        c[0] = 1;
        return Series(ring, std::move(c));
    }
    Integers c(order);
    c[0] = 1;
    return Series(ring, std::move(c));
}

Series Series::from_residues(const Ring& ring, Residues coeffs) {
    if (!ring.is_modular()) {
        throw std::invalid_argument("from_residues needs a modular ring");
    }
    require_order(coeffs.size());
    const auto m = ring.modulus();
    if (std::any_of(coeffs.begin(), coeffs.end(), [m](std::uint64_t c) { return c >= m; })) {
        throw std::invalid_argument("from_residues: coefficient not reduced mod " + std::to_string(m));
    }
    return Series(ring, std::move(coeffs));
}

Series Series::from_integers(Integers coeffs) {
    require_order(coeffs.size());
    return Series(Ring::exact(), std::move(coeffs));
}

std::size_t Series::order() const noexcept {
    return std::visit([](const auto& v) { return v.size(); }, coeffs_);
}

Integer Series::coeff(std::size_t n) const {
    if (n >= order()) {
        throw std::out_of_range("coefficient " + std::to_string(n) + " beyond truncation order " +
                                std::to_string(order()));
    }
    if (const auto* r = std::get_if<Residues>(&coeffs_)) {
        return Integer(static_cast<unsigned long>((*r)[n]));
    }
    return std::get<Integers>(coeffs_)[n];
}

std::span<const std::uint64_t> Series::residues() const {
    if (const auto* r = std::get_if<Residues>(&coeffs_)) {
        return *r;
    }
    throw std::logic_error("residues() on an exact series");
}

std::span<const Integer> Series::integers() const {
    if (const auto* v = std::get_if<Integers>(&coeffs_)) {
        return *v;
    }
    throw std::logic_error("integers() on a modular series");
}

bool Series::is_zero() const noexcept {
    if (const auto* r = std::get_if<Residues>(&coeffs_)) {
        return std::all_of(r->begin(), r->end(), [](std::uint64_t c) { return c == 0; });
    }
    const auto& v = std::get<Integers>(coeffs_);
    return std::all_of(v.begin(), v.end(), [](const Integer& c) { return sgn(c) == 0; });
}

std::string Series::to_string() const {
    std::ostringstream os;
    const std::size_t n = order();
    for (std::size_t i = 0; i < n; ++i) {
        Integer c = coeff(i);
        if (i == 0) {
            os << c.get_str();
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            os << Integer(abs(c)).get_str() << "*q";
            if (i > 1) {
                os << '^' << i;
            }
        }
    }
    os << " (" << ring_.to_string() << "; O(q^" << n << "))";
    return os.str();
}

Series make_series(const Ring& ring, std::span<const std::int64_t> coeffs, std::size_t order) {
    require_order(order);
    if (coeffs.size() > order) {
        throw std::invalid_argument("make_series: more coefficients than the truncation order");
    }
    if (ring.is_modular()) {
        Series::Residues c(order, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            c[i] = ring.reduce(coeffs[i]);
        }
        return Series::from_residues(ring, std::move(c));
    }
    Series::Integers c(order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        c[i] = static_cast<long>(coeffs[i]);
    }
    return Series::from_integers(std::move(c));
}

Series make_series(const Ring& ring, std::span<const Integer> coeffs, std::size_t order) {
    require_order(order);
    if (coeffs.size() > order) {
        throw std::invalid_argument("make_series: more coefficients than the truncation order");
    }
    if (ring.is_modular()) {
        Series::Residues c(order, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            c[i] = ring.reduce(coeffs[i]);
        }
        return Series::from_residues(ring, std::move(c));
    }
    Series::Integers c(coeffs.begin(), coeffs.end());
    c.resize(order);
    return Series::from_integers(std::move(c));
}

Series make_series(const Ring& ring, std::initializer_list<std::int64_t> coeffs, std::size_t order) {
    return make_series(ring, std::span<const std::int64_t>(coeffs.begin(), coeffs.size()), order);
}

Series add(const Series& a, const Series& b) { return zip(a, b, "add", AddOp{}); }

Series sub(const Series& a, const Series& b) { return zip(a, b, "sub", SubOp{}); }

Series neg(const Series& a) { return sub(Series::zero(a.ring(), a.order()), a); }

Series scale(const Series& a, const Integer& c) {
    if (a.ring().is_modular()) {
        const auto m = a.ring().modulus();
        const auto k = a.ring().reduce(c);
        Series::Residues out(a.residues().begin(), a.residues().end());
        for (auto& v : out) {
            v = mul_mod(v, k, m);
        }
        return Series::from_residues(a.ring(), std::move(out));
    }
    Series::Integers out(a.integers().begin(), a.integers().end());
    for (auto& v : out) {
        v *= c;
    }
    return Series::from_integers(std::move(out));
}

Series mul(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_modular()) {
        Series::Residues out(n);
        kernels::convolve_mod_lazy(a.residues(), b.residues(), out, a.ring().modulus());
        return Series::from_residues(a.ring(), std::move(out));
    }
    Series::Integers out(n);
    kernels::convolve_exact(a.integers(), b.integers(), out);
    return Series::from_integers(std::move(out));
}

Series mul_baseline(const Series& a, const Series& b) {
    require_same_ring(a, b, "mul_baseline");
    const std::size_t n = std::min(a.order(), b.order());
    if (a.ring().is_modular()) {
        Series::Residues out(n);
        kernels::convolve_mod_baseline(a.residues(), b.residues(), out, a.ring().modulus());
        return Series::from_residues(a.ring(), std::move(out));
    }
    Series::Integers out(n);
    kernels::convolve_exact(a.integers(), b.integers(), out);
    return Series::from_integers(std::move(out));
}

Series invert(const Series& a) { return a.ring().is_modular() ? invert_modular(a) : invert_exact(a); }

Series pow(const Series& a, std::int64_t e) {
    if (e == 0) {
        return Series::one(a.ring(), a.order());
    }
    Series base = e < 0 ? invert(a) : a;
    // negate through unsigned to stay defined at INT64_MIN
    std::uint64_t n = e < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(e) : static_cast<std::uint64_t>(e);
    Series result = Series::one(a.ring(), a.order());
    bool first = true;
    while (n != 0) {
        if (n & 1U) {
            result = first ? base : mul(result, base);
            first = false;
        }
        n >>= 1U;
        if (n != 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Series substitute_power(const Series& a, std::size_t k) { return substitute_power(a, k, a.order()); }

Series substitute_power(const Series& a, std::size_t k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("substitute_power: k must be >= 1");
    }
    require_order(order);
    if (order > k * a.order()) {
        throw std::invalid_argument("substitute_power: order " + std::to_string(order) +
                                    " exceeds the known range " + std::to_string(k * a.order()));
    }
    if (a.ring().is_modular()) {
        const auto src = a.residues();
        return Series::from_residues(a.ring(), spread(Series::Residues(src.begin(), src.end()), k, order));
    }
    const auto src = a.integers();
    return Series::from_integers(spread(Series::Integers(src.begin(), src.end()), k, order));
}

Series dissect(const Series& a, std::size_t m, std::size_t r) {
    if (m == 0) {
        throw std::invalid_argument("dissect: modulus must be >= 1");
    }
    if (r >= m) {
        throw std::invalid_argument("dissect: residue " + std::to_string(r) + " >= modulus " + std::to_string(m));
    }
    const std::size_t n = a.order();
    if (r >= n) {
        throw std::invalid_argument("dissect: no coefficient of class " + std::to_string(r) + " mod " +
                                    std::to_string(m) + " below order " + std::to_string(n));
    }
    const std::size_t len = (n - r + m - 1) / m;
    if (a.ring().is_modular()) {
        const auto src = a.residues();
        Series::Residues out(len);
        for (std::size_t j = 0; j < len; ++j) {
            out[j] = src[m * j + r];
        }
        return Series::from_residues(a.ring(), std::move(out));
    }
    const auto src = a.integers();
    Series::Integers out(len);
    for (std::size_t j = 0; j < len; ++j) {
        out[j] = src[m * j + r];
    }
    return Series::from_integers(std::move(out));
}

Series shift(const Series& a, std::size_t j) {
    const std::size_t n = a.order();
    if (a.ring().is_modular()) {
        const auto src = a.residues();
        Series::Residues out(n, 0);
        for (std::size_t i = 0; i + j < n; ++i) {
            out[i + j] = src[i];
        }
        return Series::from_residues(a.ring(), std::move(out));
    }
    const auto src = a.integers();
    Series::Integers out(n);
    for (std::size_t i = 0; i + j < n; ++i) {
        out[i + j] = src[i];
    }
    return Series::from_integers(std::move(out));
}

Series reduce_ring(const Series& a, std::uint64_t m) {
    if (a.ring().is_modular()) {
        throw std::invalid_argument("reduce_ring: series is already over " + a.ring().to_string());
    }
    const Ring ring = Ring::modular(m);
    const auto src = a.integers();
    Series::Residues out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        out[i] = ring.reduce(src[i]);
    }
    return Series::from_residues(ring, std::move(out));
}

Series truncate(const Series& a, std::size_t order) {
    require_order(order);
    if (order > a.order()) {
        throw std::invalid_argument("truncate: order " + std::to_string(order) + " exceeds " +
                                    std::to_string(a.order()));
    }
    if (a.ring().is_modular()) {
        const auto src = a.residues();
        return Series::from_residues(a.ring(), Series::Residues(src.begin(), src.begin() + order));
    }
    const auto src = a.integers();
    return Series::from_integers(Series::Integers(src.begin(), src.begin() + order));
}

}  // namespace ovp
