#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ovp {

/// Coefficient tables used when expanding f1^{s t} / f2^{...} modulo 16
/// (s = 7, residues of t mod 8) and modulo 32 (s = 15, residues mod 16).
/// Row i lists C(s t, r) (-2)^r mod w for r = 1..R, valid for every t = i
/// mod the period.
struct BinomialTable {
    unsigned width;       // 16 or 32
    std::uint64_t s;      // 7 or 15
    std::uint64_t period; // 8 or 16
    std::size_t terms;    // R = 3 or 4
    std::vector<std::vector<std::uint64_t>> rows;  // rows[i] = (a_i, b_i, ...)
};

/// Published table data. Throws std::invalid_argument unless width is 16 or 32.
const BinomialTable& binomial_table(unsigned width);

struct BinomialRowResult {
    std::uint64_t residue;
    std::vector<std::uint64_t> tabulated;
    std::vector<std::uint64_t> at_residue;         // computed with t = i
    std::vector<std::uint64_t> at_next_period;     // computed with t = i + period
    bool ok() const { return tabulated == at_residue && tabulated == at_next_period; }
};

struct BinomialReplayReport {
    unsigned width;
    std::vector<BinomialRowResult> rows;
    bool passed() const;
};

/// C(s t, r) (-2)^r mod width for r = 1..terms, computed over Z then reduced.
std::vector<std::uint64_t> binomial_row(const BinomialTable& table, std::uint64_t t);

/// Recomputes every row and compares with the tabulated values.
BinomialReplayReport replay_binomial_tables(unsigned width);

}  // namespace ovp
