#include "ovp/dissection_steps.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ovp/binomial_tables.hpp"
#include "ovp/parallel.hpp"

namespace ovp {

namespace {

using I = std::int64_t;

std::int64_t get(const ParamMap& p, const char* name) {
    const auto it = p.find(name);
    if (it == p.end()) {
        throw parameter_out_of_domain(std::string("missing parameter '") + name + "'");
    }
    return it->second;
}

Recipe eta(std::initializer_list<EtaFactor> factors) { return Recipe::eta(EtaQuotient(factors)); }

// q^r f8^{5M - 6r} f4^{-(2M - 2r)} f16^{-(2M - 4r)}: the r-th term of
// (A - 2q B)^M with A = f8^5/(f4^2 f16^2) and B = f16^2/f8.
Recipe expansion_term(I big_m, I r) {
    return eta({{8, 5 * big_m - 6 * r}, {4, -(2 * big_m - 2 * r)}, {16, -(2 * big_m - 4 * r)}})
        .shifted(static_cast<std::size_t>(r));
}

Recipe expansion(I big_m, const std::vector<std::uint64_t>& coefs) {
    Recipe sum = expansion_term(big_m, 0);
    for (std::size_t r = 0; r < coefs.size(); ++r) {
        if (coefs[r] != 0) {
            sum = sum + expansion_term(big_m, static_cast<I>(r + 1)).scaled(Integer(coefs[r]));
        }
    }
    return sum;
}

std::vector<ParamMap> grid_of(const char* name, std::vector<std::int64_t> values) {
    std::vector<ParamMap> out;
    for (auto v : values) {
        out.push_back({{name, v}});
    }
    return out;
}

std::vector<std::int64_t> span(I lo, I hi, I step = 1) {
    std::vector<std::int64_t> v;
    for (I x = lo; x <= hi; x += step) {
        v.push_back(x);
    }
    return v;
}

std::int64_t pow_i(I base, I e) {
    I r = 1;
    while (e-- > 0) {
        r *= base;
    }
    return r;
}

bool odd_positive(I r) { return r >= 1 && r % 2 != 0; }

DissectionStep t_step(std::string key, std::string description, std::uint64_t modulus, I t_hi,
                      std::function<bool(I)> t_ok, std::function<std::vector<Recipe>(I)> chain) {
    DissectionStep s;
    s.key = std::move(key);
    s.description = std::move(description);
    s.param_names = {"t"};
    s.in_domain = [t_ok](const ParamMap& p) { return get(p, "t") >= 0 && t_ok(get(p, "t")); };
    s.default_grid = [t_hi, t_ok] {
        std::vector<std::int64_t> v;
        for (I t = 0; t <= t_hi; ++t) {
            if (t_ok(t)) {
                v.push_back(t);
            }
        }
        return grid_of("t", v);
    };
    s.modulus = [modulus](const ParamMap&) { return modulus; };
    s.chain = [chain](const ParamMap& p) { return chain(get(p, "t")); };
    return s;
}

DissectionStep find_in(const std::vector<DissectionStep>& steps, const std::string& key) {
    return *std::find_if(steps.begin(), steps.end(), [&](const auto& s) { return s.key == key; });
}

std::vector<DissectionStep> make_steps() {
    std::vector<DissectionStep> steps;
    const auto any = [](I) { return true; };

    steps.push_back(t_step("M1", "GF_t == f1^{2t}/f2^t (mod 4)", 4, 15, any, [](I t) {
        return std::vector<Recipe>{Recipe::overpartitions(static_cast<std::uint64_t>(t)), eta({{1, 2 * t}, {2, -t}})};
    }));

    steps.push_back(t_step("G4-even", "f1^{2t}/f2^t == f8^{5t}/(f4^{2t} f16^{2t}) == 1 (mod 4), t even", 4, 15,
                           [](I t) { return t % 2 == 0; }, [](I t) {
                               return std::vector<Recipe>{eta({{1, 2 * t}, {2, -t}}), expansion_term(t, 0),
                                                          Recipe::constant(1)};
                           }));

    steps.push_back(t_step(
        "G4-odd", "f1^{2t}/f2^t == f8^t/f4^{2t} + 2q f8^3 (mod 4), t odd", 4, 15, [](I t) { return t % 2 != 0; },
        [](I t) {
            return std::vector<Recipe>{eta({{1, 2 * t}, {2, -t}}), expansion(t, {2}),
                                       eta({{8, t}, {4, -2 * t}}) + eta({{8, 3}}).scaled(2).shifted(1)};
        }));

    steps.push_back(t_step("G8", "GF_t == f1^{6t}/f2^{3t} expanded by t mod 4 (mod 8)", 8, 15, any, [](I t) {
        static const std::array<std::vector<std::uint64_t>, 4> coefs{
            std::vector<std::uint64_t>{0, 0}, {2, 4}, {4, 4}, {6, 0}};
        std::vector<Recipe> chain{Recipe::overpartitions(static_cast<std::uint64_t>(t)),
                                  eta({{1, 6 * t}, {2, -3 * t}}), expansion(3 * t, coefs[t % 4])};
        const Recipe f8_3 = eta({{8, 3}}).shifted(1);
        const Recipe f16f32 = eta({{16, 1}, {32, 1}}).shifted(2);
        switch (t % 4) {
            case 0: chain.push_back(Recipe::constant(1)); break;
            case 1:
                chain.push_back(eta({{4, 2}, {8, 3}, {16, -2}}) + f8_3.scaled(2) + f16f32.scaled(4));
                break;
            case 2: chain.push_back(eta({{8, 2}, {4, -4}}) + f8_3.scaled(4) + f16f32.scaled(4)); break;
            default: chain.push_back(eta({{4, 6}, {8, 1}, {16, -2}}) - f8_3.scaled(2)); break;
        }
        return chain;
    }));

    for (unsigned width : {16U, 32U}) {
        const BinomialTable& table = binomial_table(width);
        const I s = static_cast<I>(table.s);
        steps.push_back(t_step("G" + std::to_string(width),
                               "GF_t == f1^{2st}/f2^{st} expanded with the mod " + std::to_string(width) + " table",
                               width, width == 16 ? 15 : 31, any, [&table, s](I t) {
                                   return std::vector<Recipe>{
                                       Recipe::overpartitions(static_cast<std::uint64_t>(t)),
                                       eta({{1, 2 * s * t}, {2, -s * t}}),
                                       expansion(s * t, table.rows[static_cast<std::size_t>(t) % table.period])};
                               }));
    }

    {
        DissectionStep st;
        st.key = "T11-odd-i1";
        st.description = "OPT_{2r}(2n+1) == -28r f1^{4r} f4^{2r+2}/f2^{6r-2} - 16k' q f4^9 (mod 32)";
        st.param_names = {"r"};
        st.in_domain = [](const ParamMap& p) { return odd_positive(get(p, "r")); };
        st.default_grid = [] { return grid_of("r", span(1, 15, 2)); };
        st.modulus = [](const ParamMap&) { return std::uint64_t{32}; };
        st.chain = [](const ParamMap& p) {
            const I r = get(p, "r");
            const I kp = 7 * r * (14 * r - 1) * (7 * r - 1) / 3;
            return std::vector<Recipe>{
                Recipe::odd_overpartitions(static_cast<std::uint64_t>(2 * r)).dissected(2, 1),
                eta({{1, 4 * r}, {4, 2 * r + 2}, {2, -(6 * r - 2)}}).scaled(-28 * r) -
                    eta({{4, 9}}).scaled(16 * kp).shifted(1)};
        };
        steps.push_back(std::move(st));
    }
    {
        DissectionStep st;
        st.key = "T11-odd";
        st.description = "OPT_{2^i r}(2n+1) == -2^{i+1} 7r f2^2 f4^2 - 2^{i+3} m q f4^9 (mod 2^{i+4}), i >= 2";
        st.param_names = {"i", "r"};
        st.in_domain = [](const ParamMap& p) { return get(p, "i") >= 2 && odd_positive(get(p, "r")); };
        st.default_grid = [] {
            std::vector<ParamMap> g;
            for (I i = 2; i <= 3; ++i) {
                for (I r = 1; r <= 15; r += 2) {
                    g.push_back({{"i", i}, {"r", r}});
                }
            }
            return g;
        };
        st.modulus = [](const ParamMap& p) { return static_cast<std::uint64_t>(pow_i(2, get(p, "i") + 4)); };
        st.chain = [](const ParamMap& p) {
            const I i = get(p, "i");
            const I r = get(p, "r");
            const I m = 7 * r * (pow_i(2, i) * 7 * r - 1) * (pow_i(2, i - 1) * 7 * r - 1) / 3;
            return std::vector<Recipe>{
                Recipe::odd_overpartitions(static_cast<std::uint64_t>(pow_i(2, i) * r)).dissected(2, 1),
                eta({{2, 2}, {4, 2}}).scaled(-pow_i(2, i + 1) * 7 * r) -
                    eta({{4, 9}}).scaled(Integer(pow_i(2, i + 3)) * m).shifted(1)};
        };
        steps.push_back(std::move(st));
    }
    {
        DissectionStep st;
        st.key = "T11-4n+3";
        st.description = "OPT_{2r}(4n+3) == 16 7r f2 f4^2 - 16k' f2^9 (mod 32)";
        st.param_names = {"r"};
        st.in_domain = [](const ParamMap& p) { return odd_positive(get(p, "r")); };
        st.default_grid = [] { return grid_of("r", span(1, 15, 2)); };
        st.modulus = [](const ParamMap&) { return std::uint64_t{32}; };
        st.chain = [](const ParamMap& p) {
            const I r = get(p, "r");
            const I kp = 7 * r * (14 * r - 1) * (7 * r - 1) / 3;
            return std::vector<Recipe>{
                Recipe::odd_overpartitions(static_cast<std::uint64_t>(2 * r)).dissected(4, 3),
                eta({{2, 1}, {4, 2}}).scaled(16 * 7 * r) - eta({{2, 9}}).scaled(16 * kp)};
        };
        steps.push_back(std::move(st));
    }
    {
        // The odd part of -4k f4^4/f2^2 (...) is 16k q f4^2 f8^4/f2^2; halving
        // exponents gives 16k f2^2 f4^4/f1^2 == 16k f2 f4^4 (mod 32).
        DissectionStep st = find_in(steps, "T11-4n+3");
        st.key = "T11-4n+3-rederived";
        st.description = "OPT_{2r}(4n+3) == 16 7r f2 f4^4 - 16k' f2^9 (mod 32)";
        st.chain = [](const ParamMap& p) {
            const I r = get(p, "r");
            const I kp = 7 * r * (14 * r - 1) * (7 * r - 1) / 3;
            return std::vector<Recipe>{
                Recipe::odd_overpartitions(static_cast<std::uint64_t>(2 * r)).dissected(4, 3),
                eta({{2, 1}, {4, 4}}).scaled(16 * 7 * r) - eta({{2, 9}}).scaled(16 * kp)};
        };
        steps.push_back(std::move(st));
    }

    std::sort(steps.begin(), steps.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return steps;
}

}  // namespace

const std::vector<DissectionStep>& builtin_steps() {
    static const std::vector<DissectionStep> steps = make_steps();
    return steps;
}

const DissectionStep& find_step(const std::string& key) {
    const auto& steps = builtin_steps();
    const auto it = std::find_if(steps.begin(), steps.end(), [&](const auto& s) { return s.key == key; });
    if (it == steps.end()) {
        throw std::invalid_argument("unknown dissection step \"" + key + "\"");
    }
    return *it;
}

StepReport verify_dissection_step(const DissectionStep& step, const ParamMap& params, std::size_t order) {
    if (order == 0 || order > step_max_order) {
        throw order_budget_exceeded("dissection step order must be in 1.." + std::to_string(step_max_order));
    }
    if (!step.in_domain(params)) {
        throw parameter_out_of_domain(step.key + ": parameters " + to_string(params) + " outside the domain");
    }
    StepReport report;
    report.key = step.key;
    report.params = params;
    report.modulus = step.modulus(params);
    report.order = order;
    try {
        const Ring ring = Ring::modular(report.modulus);
        const auto chain = step.chain(params);
        const Series first = chain.front().evaluate(ring, order);
        for (std::size_t link = 1; link < chain.size() && report.status == CheckStatus::pass; ++link) {
            const Series other = chain[link].evaluate(ring, order);
            const auto a = first.residues();
            const auto b = other.residues();
            for (std::size_t n = 0; n < order; ++n) {
                if (a[n] != b[n]) {
                    report.status = CheckStatus::fail;
                    report.failing_link = link;
                    report.first_mismatch = Mismatch{n, Integer(a[n]), Integer(b[n])};
                    break;
                }
            }
        }
    } catch (const std::exception& e) {
        report.status = CheckStatus::error;
        report.error = e.what();
    }
    return report;
}

StepReport verify_dissection_step(const std::string& key, const ParamMap& params, std::size_t order) {
    return verify_dissection_step(find_step(key), params, order);
}

std::vector<StepReport> verify_all_steps(std::size_t order, unsigned jobs) {
    std::vector<std::pair<const DissectionStep*, ParamMap>> work;
    for (const auto& step : builtin_steps()) {
        for (auto& p : step.default_grid()) {
            work.emplace_back(&step, std::move(p));
        }
    }
    std::vector<std::optional<StepReport>> slots(work.size());
    parallel_for(work.size(), jobs,
                 [&](std::size_t i) { slots[i] = verify_dissection_step(*work[i].first, work[i].second, order); });
    std::vector<StepReport> out;
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace ovp
