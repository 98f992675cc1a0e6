#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ovp/congruence.hpp"
#include "ovp/identities.hpp"
#include "ovp/recipe.hpp"

namespace ovp {

/// One step of a proof-style expansion: a chain of recipes that must all be
/// congruent to the first one modulo `modulus(params)`.
struct DissectionStep {
    std::string key;
    std::string description;
    std::vector<std::string> param_names;
    std::function<bool(const ParamMap&)> in_domain;
    std::function<std::vector<ParamMap>()> default_grid;
    std::function<std::uint64_t(const ParamMap&)> modulus;
    std::function<std::vector<Recipe>(const ParamMap&)> chain;
};

/// Sorted by key.
const std::vector<DissectionStep>& builtin_steps();
/// Throws std::invalid_argument for an unknown key.
const DissectionStep& find_step(const std::string& key);

struct StepReport {
    std::string key;
    ParamMap params;
    std::uint64_t modulus = 0;
    std::size_t order = 0;
    CheckStatus status = CheckStatus::pass;
    /// Index in the chain of the first recipe that differs from chain[0].
    std::size_t failing_link = 0;
    std::optional<Mismatch> first_mismatch;
    std::string error;
};

inline constexpr std::size_t step_max_order = std::size_t{1} << 16;

/// Evaluates every link of the chain over Z/mZ to `order` coefficients.
/// Throws parameter_out_of_domain, order_budget_exceeded (order == 0 or
/// above step_max_order) and std::invalid_argument for an unknown key.
StepReport verify_dissection_step(const DissectionStep& step, const ParamMap& params, std::size_t order);
StepReport verify_dissection_step(const std::string& key, const ParamMap& params, std::size_t order);

/// Every step over its default grid, ordered by (key, params).
std::vector<StepReport> verify_all_steps(std::size_t order, unsigned jobs = 1);

}  // namespace ovp
