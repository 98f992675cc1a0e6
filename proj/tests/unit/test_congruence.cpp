#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "ovp/congruence.hpp"

using namespace ovp;

namespace {
const std::vector<CongruenceFamily>& families() {
    static const auto all = builtin_families();
    return all;
}
}  // namespace

TEST(Registry, SortedUniqueKeys) {
    const auto& all = families();
    EXPECT_EQ(all.size(), 27U);
    std::set<std::string> keys;
    for (const auto& f : all) {
        keys.insert(f.key);
        EXPECT_FALSE(f.groups.empty()) << f.key;
        EXPECT_FALSE(f.statement.empty()) << f.key;
    }
    EXPECT_EQ(keys.size(), all.size());
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.key < b.key; }));
    EXPECT_THROW(find_family(all, "nope"), std::invalid_argument);
}

TEST(Registry, MultiGroupMembership) {
    const auto& f = find_family(families(), "pbar-8n+5-mod8");
    EXPECT_EQ(f.groups, (std::vector<std::string>{"pbar-theorems", "pbar-8n-all-t"}));
}

TEST(Helpers, Triangular) {
    for (std::uint64_t n : {0, 1, 3, 6, 10, 15, 21, 5050}) EXPECT_TRUE(is_triangular(n)) << n;
    for (std::uint64_t n : {2, 4, 5, 7, 9, 5051}) EXPECT_FALSE(is_triangular(n)) << n;
    EXPECT_TRUE(is_triangular(2147483648ULL * 4294967295ULL));
}

TEST(Helpers, Primes) {
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(1));
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(61));
    EXPECT_FALSE(is_prime(91));
}

TEST(Family, TriangularExpectation) {
    const auto& f = find_family(families(), "pbar-2^{2alpha+3}n+2^{2alpha}-mod4-triangular");
    EXPECT_EQ(f.expected({{"t", 1}, {"alpha", 0}}, 1), 2U);
    EXPECT_EQ(f.expected({{"t", 1}, {"alpha", 0}}, 2), 0U);
    EXPECT_EQ(f.expected({{"t", 2}, {"alpha", 0}}, 1), 0U);
    // p-bar(8*1+1) = 2 mod 4 for t = 1
    const auto r = check_family(f, {{{"t", 1}, {"alpha", 0}}}, 30);
    EXPECT_EQ(r.status, ReportStatus::pass);
}

TEST(Family, DomainAndBudgetErrors) {
    const auto& f = find_family(families(), "pbar-8n+1-mod2");
    EXPECT_THROW(check_family(f, {{{"t", 0}}}, 10), parameter_out_of_domain);
    EXPECT_THROW(check_family(f, {{{"s", 1}}}, 10), parameter_out_of_domain);
    CheckOptions small;
    small.max_order = 50;
    EXPECT_EQ(required_order(f, {{"t", 1}}, 10), 82U);
    EXPECT_THROW(check_family(f, {{{"t", 1}}}, 10, small), order_budget_exceeded);
}

TEST(Family, PrimesOnlyGrid) {
    const auto& f = find_family(families(), "pbar-8n+3-mod8");
    ASSERT_TRUE(f.prime_restrictable);
    GridConfig cfg;
    cfg.t_max = 20;
    cfg.primes_only = true;
    std::vector<std::int64_t> ts;
    for (const auto& p : f.default_grid(cfg)) ts.push_back(p.at("t"));
    EXPECT_EQ(ts, (std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
}

TEST(Family, OddPartThreeAdicExample) {
    // OPT_6(1) = 12, the first coefficient of the 3n+1 progression with k = 1
    const auto& f = find_family(families(), "opt-3n+1-mod-3^i2^{j+1}");
    const ParamMap p{{"i", 1}, {"j", 1}, {"k", 1}};
    EXPECT_EQ(f.gf_parameter(p), 6U);
    EXPECT_EQ(f.progression(p).a, 3U);
    EXPECT_EQ(f.progression(p).b, 1U);
    EXPECT_EQ(f.modulus(p), 12U);
    EXPECT_EQ(check_family(f, {p}, 60).status, ReportStatus::pass);
}

TEST(Family, ConjectureCounterexample) {
    const auto& f = find_family(families(), "opt-8n+4-mod-2^{2i+4}");
    EXPECT_EQ(f.status, FamilyStatus::conjecture_only);
    const auto r = check_family(f, {{{"i", 1}, {"r", 1}}}, 10);
    EXPECT_EQ(r.status, ReportStatus::conjecture_fail);
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses.front().n, 0U);
    EXPECT_EQ(r.witnesses.front().value, 32U);
    EXPECT_EQ(r.witnesses.front().modulus, 64U);
}

TEST(Family, ExactCrossCheckIsSeededAndAgrees) {
    const auto& f = find_family(families(), "pbar-8n+7-mod32");
    GridConfig cfg;
    cfg.t_max = 12;
    const auto grid = f.default_grid(cfg);
    CheckOptions opt;
    opt.exact_samples = 3;
    opt.seed = 7;
    const auto a = check_family(f, grid, 20, opt);
    const auto b = check_family(f, grid, 20, opt);
    EXPECT_EQ(a.status, ReportStatus::pass);
    EXPECT_EQ(a.exact_cross_checks, 3U);
    EXPECT_EQ(a.coefficients_checked, b.coefficients_checked);
}

TEST(Family, WitnessesAreCappedAndSorted) {
    auto f = find_family(families(), "pbar-8n+5-mod8");
    f.modulus = [](const ParamMap&) { return std::uint64_t{1024}; };  // deliberately wrong
    CheckOptions opt;
    opt.witness_limit = 5;
    GridConfig cfg;
    cfg.t_max = 4;
    const auto r = check_family(f, f.default_grid(cfg), 40, opt);
    EXPECT_EQ(r.status, ReportStatus::fail);
    EXPECT_EQ(r.witnesses.size(), 5U);
    EXPECT_GT(r.failures, 5U);
    for (std::size_t i = 1; i < r.witnesses.size(); ++i) {
        const auto& x = r.witnesses[i - 1];
        const auto& y = r.witnesses[i];
        EXPECT_TRUE(x.params < y.params || (x.params == y.params && x.n <= y.n));
    }
}
