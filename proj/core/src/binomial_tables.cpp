#include "ovp/binomial_tables.hpp"

#include <algorithm>
#include <stdexcept>

#include <gmpxx.h>

namespace ovp {

namespace {

BinomialTable make_table16() {
    return {16, 7, 8, 3,
            {{0, 0, 0}, {2, 4, 8}, {4, 12, 0}, {6, 8, 0}, {8, 8, 0}, {10, 12, 8}, {12, 4, 0}, {14, 0, 0}}};
}

BinomialTable make_table32() {
    return {32, 15, 16, 4,
            {{0, 0, 0, 0},
             {2, 4, 8, 16},
             {4, 12, 0, 16},
             {6, 24, 16, 16},
             {8, 8, 0, 16},
             {10, 28, 24, 0},
             {12, 20, 0, 0},
             {14, 16, 0, 0},
             {16, 16, 0, 0},
             {18, 20, 8, 16},
             {20, 28, 0, 16},
             {22, 8, 16, 16},
             {24, 24, 0, 16},
             {26, 12, 24, 0},
             {28, 4, 0, 0},
             {30, 0, 0, 0}}};
}

}  // namespace

const BinomialTable& binomial_table(unsigned width) {
    static const BinomialTable t16 = make_table16();
    static const BinomialTable t32 = make_table32();
    if (width == 16) {
        return t16;
    }
    if (width == 32) {
        return t32;
    }
    throw std::invalid_argument("binomial table width must be 16 or 32");
}

std::vector<std::uint64_t> binomial_row(const BinomialTable& table, std::uint64_t t) {
    std::vector<std::uint64_t> out;
    const mpz_class w = table.width;
    for (std::size_t r = 1; r <= table.terms; ++r) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), table.s * t, r);
        mpz_class sign_pow;
        mpz_ui_pow_ui(sign_pow.get_mpz_t(), 2, r);
        if (r % 2 == 1) {
            sign_pow = -sign_pow;
        }
        mpz_class v = c * sign_pow;
        mpz_class red;
        mpz_fdiv_r(red.get_mpz_t(), v.get_mpz_t(), w.get_mpz_t());
        out.push_back(red.get_ui());
    }
    return out;
}

bool BinomialReplayReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.ok(); });
}

BinomialReplayReport replay_binomial_tables(unsigned width) {
    const BinomialTable& table = binomial_table(width);
    BinomialReplayReport report{width, {}};
    for (std::uint64_t i = 0; i < table.rows.size(); ++i) {
        report.rows.push_back(
            {i, table.rows[i], binomial_row(table, i), binomial_row(table, i + table.period)});
    }
    return report;
}

}  // namespace ovp
