#pragma once

// Low-level coefficient kernels behind Series. All kernels write the first
// out.size() coefficients of their result.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ovp/ring.hpp"

namespace ovp::kernels {

/// One reduction per product term. Every faster modular kernel must agree
/// with this one coefficient for coefficient.
void convolve_mod_baseline(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                           std::span<std::uint64_t> out, std::uint64_t m);

/// Accumulates unreduced products in 64 bits and reduces only when the
/// running sum could overflow. Falls back to the baseline when (m-1)^2
/// does not fit in a word.
void convolve_mod_lazy(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                       std::span<std::uint64_t> out, std::uint64_t m);

void convolve_exact(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out);

/// A +-1 coefficient at q^offset of a sparse series with constant term 1.
struct SparseTerm {
    std::size_t offset;
    int sign;
};

// In-place multiplication / division by 1 + sum(sign * q^offset) over the
// listed terms (offsets > 0, ascending).
void multiply_sparse(std::vector<std::uint64_t>& s, std::span<const SparseTerm> terms, std::uint64_t m);
void divide_sparse(std::vector<std::uint64_t>& s, std::span<const SparseTerm> terms, std::uint64_t m);
void multiply_sparse(std::vector<Integer>& s, std::span<const SparseTerm> terms);
void divide_sparse(std::vector<Integer>& s, std::span<const SparseTerm> terms);

}  // namespace ovp::kernels
