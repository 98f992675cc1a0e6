#include "ovp/kernels.hpp"

#include <algorithm>
#include <limits>

namespace ovp::kernels {

void convolve_mod_baseline(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::span<std::uint64_t> out, std::uint64_t m) {
    const std::size_t n_out = out.size();
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < a.size() && i < n_out; ++i) {
        if (a[i] == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), n_out - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            out[i + j] = add_mod(out[i + j], mul_mod(a[i], b[j], m), m);
        }
    }
}

void convolve_mod_lazy(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                       std::span<std::uint64_t> out, std::uint64_t m) {
    const std::uint64_t top = m - 1;
    if (top > std::numeric_limits<std::uint32_t>::max()) {
        convolve_mod_baseline(a, b, out, m);
        return;
    }
    const std::uint64_t sq = top * top;
    // block length such that (m-1) + block * (m-1)^2 still fits in 64 bits
    const std::uint64_t block = sq == 0 ? std::numeric_limits<std::uint64_t>::max()
                                        : (std::numeric_limits<std::uint64_t>::max() - top) / sq;

    for (std::size_t n = 0; n < out.size(); ++n) {
        const std::size_t lo = n + 1 > b.size() ? n + 1 - b.size() : 0;
        const std::size_t hi = std::min(n + 1, a.size());
        std::uint64_t acc = 0;
        std::uint64_t pending = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            acc += a[i] * b[n - i];
            if (++pending == block) {
                acc %= m;
                pending = 0;
            }
        }
        out[n] = acc % m;
    }
}

void convolve_exact(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
    const std::size_t n_out = out.size();
    for (auto& c : out) {
        c = 0;
    }
    for (std::size_t i = 0; i < a.size() && i < n_out; ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        const std::size_t jmax = std::min(b.size(), n_out - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
}

void multiply_sparse(std::vector<std::uint64_t>& s, std::span<const SparseTerm> terms, std::uint64_t m) {
    const std::vector<std::uint64_t> src = s;
    const std::size_t n = s.size();
    for (const auto& term : terms) {
        if (term.offset >= n) {
            break;
        }
        const std::uint64_t* from = src.data();
        std::uint64_t* to = s.data() + term.offset;
        const std::size_t len = n - term.offset;
        if (term.sign > 0) {
            for (std::size_t i = 0; i < len; ++i) {
                to[i] = add_mod(to[i], from[i], m);
            }
        } else {
            for (std::size_t i = 0; i < len; ++i) {
                to[i] = sub_mod(to[i], from[i], m);
            }
        }
    }
}

void divide_sparse(std::vector<std::uint64_t>& s, std::span<const SparseTerm> terms, std::uint64_t m) {
    // b_n = a_n - sum(sign * b_{n - offset})
    for (std::size_t n = 1; n < s.size(); ++n) {
        std::uint64_t acc = s[n];
        for (const auto& term : terms) {
            if (term.offset > n) {
                break;
            }
            acc = term.sign > 0 ? sub_mod(acc, s[n - term.offset], m) : add_mod(acc, s[n - term.offset], m);
        }
        s[n] = acc;
    }
}

void multiply_sparse(std::vector<Integer>& s, std::span<const SparseTerm> terms) {
    const std::vector<Integer> src = s;
    const std::size_t n = s.size();
    for (const auto& term : terms) {
        if (term.offset >= n) {
            break;
        }
        for (std::size_t i = term.offset; i < n; ++i) {
            if (term.sign > 0) {
                s[i] += src[i - term.offset];
            } else {
                s[i] -= src[i - term.offset];
            }
        }
    }
}

void divide_sparse(std::vector<Integer>& s, std::span<const SparseTerm> terms) {
    for (std::size_t n = 1; n < s.size(); ++n) {
        for (const auto& term : terms) {
            if (term.offset > n) {
                break;
            }
            if (term.sign > 0) {
                s[n] -= s[n - term.offset];
            } else {
                s[n] += s[n - term.offset];
            }
        }
    }
}

}  // namespace ovp::kernels
