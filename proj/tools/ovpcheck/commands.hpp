#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovp/congruence.hpp"

namespace ovpcheck {

/// Bad keys, out-of-domain parameters and similar input problems.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { table, json, csv };

struct Options {
    std::size_t order = 500;
    bool order_given = false;
    std::size_t n_max = 200;
    ovp::GridConfig grid;
    std::vector<std::string> only;
    Format format = Format::table;
    bool include_conjectures = false;
    unsigned jobs = 1;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::size_t max_order = std::size_t{1} << 17;
    std::size_t exact_samples = 1;

    // verify
    std::vector<std::string> keys;
    // oracle
    std::vector<std::uint64_t> oracle_t;
    std::vector<std::uint64_t> oracle_opt;
    std::size_t upto = 60;
    // replay
    std::optional<unsigned> width;
    std::string step;
    std::optional<std::int64_t> t;
    std::optional<std::int64_t> i;
    std::optional<std::int64_t> r;
};

struct Output {
    std::ostream& out;
    std::ostream& err;
};

int cmd_identities(const Options& opt, Output io);
int cmd_verify(const Options& opt, Output io);
int cmd_oracle(const Options& opt, Output io);
int cmd_replay(const Options& opt, Output io);
int cmd_families(const Options& opt, Output io);

}  // namespace ovpcheck
