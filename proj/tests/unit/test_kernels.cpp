#include <gtest/gtest.h>

#include <random>

#include "ovp/kernels.hpp"

using namespace ovp;

TEST(Kernels, LazyMatchesBaselineAcrossModuli) {
    std::mt19937_64 rng(7);
    for (std::uint64_t m : {std::uint64_t{2}, std::uint64_t{32}, std::uint64_t{1} << 31, (std::uint64_t{1} << 32) + 1,
                            (std::uint64_t{1} << 32) - 1, (std::uint64_t{1} << 40) + 3, std::uint64_t{1} << 62}) {
        std::vector<std::uint64_t> a(257), b(300);
        for (auto& x : a) x = rng() % m;
        for (auto& x : b) x = rng() % m;
        std::vector<std::uint64_t> lazy(257), base(257);
        kernels::convolve_mod_lazy(a, b, lazy, m);
        kernels::convolve_mod_baseline(a, b, base, m);
        EXPECT_EQ(lazy, base) << "m=" << m;
    }
}

TEST(Kernels, WorstCaseResiduesDoNotOverflow) {
    const std::uint64_t m = std::uint64_t{1} << 32;
    std::vector<std::uint64_t> a(5000, m - 1), out(5000), ref(5000);
    kernels::convolve_mod_lazy(a, a, out, m);
    kernels::convolve_mod_baseline(a, a, ref, m);
    EXPECT_EQ(out, ref);
}

TEST(Kernels, SparseDivideInvertsMultiply) {
    const std::vector<kernels::SparseTerm> terms{{1, -1}, {2, -1}, {5, 1}};
    std::vector<Integer> s{3, 1, 4, 1, 5, 9, 2, 6};
    const auto orig = s;
    kernels::multiply_sparse(s, terms);
    kernels::divide_sparse(s, terms);
    EXPECT_EQ(s, orig);
    std::vector<std::uint64_t> r{3, 1, 4, 1, 5, 9, 2, 6};
    const auto rorig = r;
    kernels::multiply_sparse(r, terms, 10);
    kernels::divide_sparse(r, terms, 10);
    EXPECT_EQ(r, rorig);
}

TEST(Kernels, ExactConvolution) {
    std::vector<Integer> a{1, 2}, b{3, 4, 5}, out(3);
    kernels::convolve_exact(a, b, out);
    EXPECT_EQ(out, (std::vector<Integer>{3, 10, 13}));
}
