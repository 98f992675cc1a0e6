#include "ovp/oracle.hpp"

#include <functional>
#include <stdexcept>

namespace ovp::oracle {

namespace {

// counts <- counts * (1 + 2q^i + 2q^{2i} + ...), truncated after q^upto
void apply_part_factor(std::vector<mpz_class>& counts, std::size_t i) {
    const std::vector<mpz_class> old = counts;
    for (std::size_t n = i; n < counts.size(); ++n) {
        mpz_class extra = 0;
        for (std::size_t used = i; used <= n; used += i) {
            extra += old[n - used];
        }
        counts[n] += 2 * extra;
    }
}

CountTable count_tuples(Family family, std::uint64_t colours, std::size_t upto, bool odd_only) {
    CountTable table{family, colours, upto, std::vector<mpz_class>(upto + 1, 0)};
    table.counts[0] = 1;
    for (std::uint64_t c = 0; c < colours; ++c) {
        for (std::size_t i = 1; i <= upto; ++i) {
            if (odd_only && i % 2 == 0) {
                continue;
            }
            apply_part_factor(table.counts, i);
        }
    }
    return table;
}

struct Part {
    unsigned size;
    bool overlined;
};
using Overpartition = std::vector<Part>;

// all partitions of n into parts <= max_part, non-increasing
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& prefix,
                std::vector<std::vector<unsigned>>& out) {
    if (n == 0) {
        out.push_back(prefix);
        return;
    }
    for (unsigned p = std::min(n, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions(n - p, p, prefix, out);
        prefix.pop_back();
    }
}

// every overpartition of n: a partition plus a choice of which distinct
// part sizes have their first occurrence overlined
std::vector<Overpartition> overpartitions(unsigned n) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> prefix;
    partitions(n, n, prefix, parts);

    std::vector<Overpartition> out;
    for (const auto& p : parts) {
        std::vector<std::size_t> firsts;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i == 0 || p[i] != p[i - 1]) {
                firsts.push_back(i);
            }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << firsts.size()); ++mask) {
            Overpartition op;
            for (unsigned size : p) {
                op.push_back({size, false});
            }
            for (std::size_t b = 0; b < firsts.size(); ++b) {
                if (mask & (std::uint64_t{1} << b)) {
                    op[firsts[b]].overlined = true;
                }
            }
            out.push_back(std::move(op));
        }
    }
    return out;
}

}  // namespace

std::string to_string(Family family) {
    return family == Family::overpartition_tuples ? "overpartition-tuples" : "opt-tuples";
}

CountTable count_overpartition_tuples(std::uint64_t t, std::size_t upto) {
    return count_tuples(Family::overpartition_tuples, t, upto, false);
}

CountTable count_opt_tuples(std::uint64_t k, std::size_t upto) {
    return count_tuples(Family::opt_tuples, k, upto, true);
}

std::uint64_t enumerate_tiny(unsigned t, unsigned n) {
    if (t > enumerate_max_tuple || n > enumerate_max_n) {
        throw std::out_of_range("enumerate_tiny supports t <= 3 and n <= 14");
    }
    std::vector<std::vector<Overpartition>> by_size;
    for (unsigned m = 0; m <= n; ++m) {
        by_size.push_back(overpartitions(m));
    }
    // walk every tuple (pi_1, ..., pi_t) with |pi_1| + ... + |pi_t| = n
    std::uint64_t count = 0;
    std::function<void(unsigned, unsigned)> walk = [&](unsigned coord, unsigned remaining) {
        if (coord == t) {
            if (remaining == 0) {
                ++count;
            }
            return;
        }
        for (unsigned m = 0; m <= remaining; ++m) {
            for (std::size_t idx = 0; idx < by_size[m].size(); ++idx) {
                walk(coord + 1, remaining - m);
            }
        }
    };
    walk(0, n);
    return count;
}

}  // namespace ovp::oracle
