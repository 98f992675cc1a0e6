#include "ovp/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

namespace ovp {

namespace {

std::uint64_t ipow(std::uint64_t base, std::int64_t e) {
    std::uint64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        r *= base;
    }
    return r;
}

std::int64_t at(const ParamMap& p, const char* name) {
    const auto it = p.find(name);
    if (it == p.end()) {
        throw parameter_out_of_domain(std::string("missing parameter '") + name + "'");
    }
    return it->second;
}

std::vector<std::int64_t> range(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v;
    for (std::int64_t x = lo; x <= hi; ++x) {
        v.push_back(x);
    }
    return v;
}

template <typename Pred>
std::vector<std::int64_t> range_if(std::int64_t lo, std::int64_t hi, Pred pred) {
    std::vector<std::int64_t> v;
    for (std::int64_t x = lo; x <= hi; ++x) {
        if (pred(x)) {
            v.push_back(x);
        }
    }
    return v;
}

bool coprime6(std::int64_t k) { return k >= 1 && k % 2 != 0 && k % 3 != 0; }

// Parameter specs shared by the registry.
ParamSpec t_from(std::int64_t lo) {
    return {"t", "t >= " + std::to_string(lo), [lo](const GridConfig& c) { return range(lo, c.t_max); }};
}
ParamSpec t_mod4_023() {
    return {"t", "t = 4s, 4s+2 or 4s+3", [](const GridConfig& c) {
                return range_if(0, c.t_max, [](std::int64_t t) { return t % 4 != 1; });
            }};
}
ParamSpec alpha_spec() {
    return {"alpha", "alpha >= 0", [](const GridConfig& c) { return range(0, c.alpha_max); }};
}
ParamSpec i_spec() {
    return {"i", "i >= 1", [](const GridConfig& c) { return range(1, c.i_max); }};
}
ParamSpec j_spec() {
    return {"j", "j >= 1", [](const GridConfig& c) { return range(1, c.j_max); }};
}
ParamSpec r_spec() {
    return {"r", "r odd, r >= 1",
            [](const GridConfig& c) { return range_if(1, c.r_max, [](std::int64_t r) { return r % 2 != 0; }); }};
}
ParamSpec k_spec() {
    return {"k", "k >= 1, not a multiple of 2 or 3", [](const GridConfig& c) { return range_if(1, c.k_max, coprime6); }};
}
ParamSpec ell_strict_spec() {
    return {"ell", "ell odd, not divisible by 3, ell != 1", [](const GridConfig& c) {
                return range_if(2, c.ell_max, coprime6);
            }};
}
ParamSpec ell_odd_spec() {
    return {"ell", "ell odd, not divisible by 3", [](const GridConfig& c) { return range_if(1, c.ell_max, coprime6); }};
}

CongruenceFamily pbar_family(std::string key, std::string statement, std::uint64_t a, std::uint64_t b,
                             std::uint64_t m, std::vector<std::string> groups, std::int64_t t_min = 0) {
    CongruenceFamily f;
    f.key = std::move(key);
    f.statement = std::move(statement);
    f.groups = std::move(groups);
    f.gf = GfKind::overpartition;
    f.gf_parameter_expr = "t";
    f.progression_expr = std::to_string(a) + "n+" + std::to_string(b);
    f.modulus_expr = std::to_string(m);
    f.params = {t_from(t_min)};
    f.gf_parameter = [](const ParamMap& p) { return static_cast<std::uint64_t>(at(p, "t")); };
    f.progression = [a, b](const ParamMap&) { return Progression{a, b}; };
    f.modulus = [m](const ParamMap&) { return m; };
    f.in_domain = [t_min](const ParamMap& p) { return at(p, "t") >= t_min; };
    return f;
}

// pbar_t(2^{2 alpha + a_shift} n + b_mult * 2^{2 alpha}) == 0 (mod 4)
CongruenceFamily pbar_alpha_family(std::string key, std::string statement, std::string prog_expr,
                                   std::int64_t a_shift, std::uint64_t b_mult, std::int64_t b_shift) {
    CongruenceFamily f;
    f.key = std::move(key);
    f.statement = std::move(statement);
    f.groups = {"pbar-theorems"};
    f.gf = GfKind::overpartition;
    f.gf_parameter_expr = "t";
    f.progression_expr = std::move(prog_expr);
    f.modulus_expr = "4";
    f.params = {t_from(0), alpha_spec()};
    f.gf_parameter = [](const ParamMap& p) { return static_cast<std::uint64_t>(at(p, "t")); };
    f.progression = [a_shift, b_mult, b_shift](const ParamMap& p) {
        const std::int64_t alpha = at(p, "alpha");
        return Progression{ipow(2, 2 * alpha + a_shift), b_mult * ipow(2, 2 * alpha + b_shift)};
    };
    f.modulus = [](const ParamMap&) { return std::uint64_t{4}; };
    f.in_domain = [](const ParamMap& p) { return at(p, "t") >= 0 && at(p, "alpha") >= 0; };
    return f;
}

CongruenceFamily opt_family(std::string key, std::string statement, std::string gf_expr, std::string prog_expr,
                            std::string mod_expr, std::vector<ParamSpec> params, std::string group,
                            std::function<std::uint64_t(const ParamMap&)> gf_param, Progression prog,
                            std::function<std::uint64_t(const ParamMap&)> modulus,
                            std::function<bool(const ParamMap&)> domain, FamilyStatus status) {
    CongruenceFamily f;
    f.key = std::move(key);
    f.statement = std::move(statement);
    f.groups = {std::move(group)};
    f.gf = GfKind::opt;
    f.gf_parameter_expr = std::move(gf_expr);
    f.progression_expr = std::move(prog_expr);
    f.modulus_expr = std::move(mod_expr);
    f.params = std::move(params);
    f.status = status;
    f.gf_parameter = std::move(gf_param);
    f.progression = [prog](const ParamMap&) { return prog; };
    f.modulus = std::move(modulus);
    f.in_domain = std::move(domain);
    return f;
}

EtaQuotient unit_quotient(GfKind kind) {
    return kind == GfKind::overpartition ? overpartition_quotient(1) : opt_quotient(1);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

std::string to_string(const ParamMap& params) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : params) {
        if (!first) {
            os << ';';
        }
        first = false;
        os << name << '=' << value;
    }
    return os.str();
}

std::string to_string(GfKind kind) { return kind == GfKind::overpartition ? "overpartition" : "opt"; }

std::string to_string(FamilyStatus status) {
    return status == FamilyStatus::theorem ? "theorem" : "conjecture-only";
}

std::string to_string(ReportStatus status) {
    switch (status) {
        case ReportStatus::pass: return "pass";
        case ReportStatus::fail: return "fail";
        case ReportStatus::conjecture_pass: return "conjecture-pass";
        case ReportStatus::conjecture_fail: return "conjecture-fail";
    }
    return "?";
}

bool is_triangular(std::uint64_t n) {
    // n = m(m+1)/2 with m near sqrt(2n); 128-bit to stay exact for any n
    __extension__ using u128 = unsigned __int128;
    const auto tri = [](u128 m) { return m * (m + 1) / 2; };
    u128 m = static_cast<u128>(std::sqrt(2.0L * static_cast<long double>(n)));
    while (m > 0 && tri(m) > n) {
        --m;
    }
    while (tri(m + 1) <= n) {
        ++m;
    }
    return tri(m) == n;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t CongruenceFamily::expected(const ParamMap& params, std::size_t n) const {
    if (triangular_residue && at(params, "t") % 2 != 0 && is_triangular(n)) {
        return 2;
    }
    return 0;
}

std::vector<ParamMap> CongruenceFamily::default_grid(const GridConfig& config) const {
    std::vector<ParamMap> grid{ParamMap{}};
    for (const auto& spec : params) {
        auto values = spec.values(config);
        if (prime_restrictable && config.primes_only && spec.name == "t") {
            std::erase_if(values, [](std::int64_t t) { return !is_prime(static_cast<std::uint64_t>(t)); });
        }
        std::vector<ParamMap> next;
        for (const auto& partial : grid) {
            for (std::int64_t v : values) {
                ParamMap p = partial;
                p[spec.name] = v;
                next.push_back(std::move(p));
            }
        }
        grid = std::move(next);
    }
    std::erase_if(grid, [this](const ParamMap& p) { return !in_domain(p); });
    return grid;
}

std::vector<CongruenceFamily> builtin_families() {
    std::vector<CongruenceFamily> out;
    const std::vector<std::string> theorems{"pbar-theorems"};
    const std::vector<std::string> all_t{"pbar-8n-all-t"};
    const std::vector<std::string> both{"pbar-theorems", "pbar-8n-all-t"};

    out.push_back(pbar_family("pbar-n+1-mod2", "pbar_t(n) == 0 (mod 2) for n >= 1", 1, 1, 2, theorems));

    out.push_back(pbar_alpha_family("pbar-2^{2alpha+2}n+2^{2alpha+1}-mod4",
                                    "pbar_t(2^(2alpha+2) n + 2^(2alpha+1)) == 0 (mod 4)",
                                    "2^{2alpha+2}n+2^{2alpha+1}", 2, 1, 1));
    out.push_back(pbar_alpha_family("pbar-2^{2alpha+2}n+3*2^{2alpha}-mod4",
                                    "pbar_t(2^(2alpha+2) n + 3*2^(2alpha)) == 0 (mod 4)",
                                    "2^{2alpha+2}n+3*2^{2alpha}", 2, 3, 0));
    out.push_back(pbar_alpha_family("pbar-2^{2alpha+3}n+5*2^{2alpha}-mod4",
                                    "pbar_t(2^(2alpha+3) n + 5*2^(2alpha)) == 0 (mod 4)",
                                    "2^{2alpha+3}n+5*2^{2alpha}", 3, 5, 0));
    {
        auto f = pbar_alpha_family("pbar-2^{2alpha+3}n+2^{2alpha}-mod4-triangular",
                                   "pbar_t(2^(2alpha+3) n + 2^(2alpha)) == 2 (mod 4) if t odd and n = s(s+1)/2, "
                                   "else 0 (mod 4)",
                                   "2^{2alpha+3}n+2^{2alpha}", 3, 1, 0);
        f.triangular_residue = true;
        out.push_back(std::move(f));
    }

    out.push_back(pbar_family("pbar-8n+5-mod8", "pbar_t(8n+5) == 0 (mod 8)", 8, 5, 8, both));
    out.push_back(pbar_family("pbar-8n+6-mod8", "pbar_t(8n+6) == 0 (mod 8)", 8, 6, 8, both));
    out.push_back(pbar_family("pbar-16n+10-mod8", "pbar_t(16n+10) == 0 (mod 8)", 16, 10, 8, theorems));
    out.push_back(pbar_family("pbar-4n+3-mod8", "pbar_t(4n+3) == 0 (mod 8)", 4, 3, 8, theorems));
    for (auto [key, stmt, a, b] :
         {std::tuple{"pbar-4n+3-mod16", "pbar_t(4n+3) == 0 (mod 16) for t = 4s, 4s+2, 4s+3", 4, 3},
          std::tuple{"pbar-8n+6-mod16", "pbar_t(8n+6) == 0 (mod 16) for t = 4s, 4s+2, 4s+3", 8, 6}}) {
        auto f = pbar_family(key, stmt, a, b, 16, theorems);
        f.params = {t_mod4_023()};
        f.in_domain = [](const ParamMap& p) { return at(p, "t") >= 0 && at(p, "t") % 4 != 1; };
        out.push_back(std::move(f));
    }
    out.push_back(pbar_family("pbar-16n+14-mod16", "pbar_t(16n+14) == 0 (mod 16)", 16, 14, 16, theorems));
    out.push_back(pbar_family("pbar-8n+7-mod32", "pbar_t(8n+7) == 0 (mod 32)", 8, 7, 32, both));

    out.push_back(pbar_family("pbar-8n+1-mod2", "pbar_t(8n+1) == 0 (mod 2)", 8, 1, 2, all_t, 1));
    out.push_back(pbar_family("pbar-8n+2-mod4", "pbar_t(8n+2) == 0 (mod 4)", 8, 2, 4, all_t, 1));
    out.push_back(pbar_family("pbar-8n+3-mod8", "pbar_t(8n+3) == 0 (mod 8)", 8, 3, 8, all_t, 1));
    out.push_back(pbar_family("pbar-8n+4-mod2", "pbar_t(8n+4) == 0 (mod 2)", 8, 4, 2, all_t, 1));
    for (auto& f : out) {
        if (std::find(f.groups.begin(), f.groups.end(), "pbar-8n-all-t") != f.groups.end()) {
            f.prime_restrictable = true;
        }
    }

    const auto two_i_r = [](const ParamMap& p) { return ipow(2, at(p, "i")) * static_cast<std::uint64_t>(at(p, "r")); };
    const auto two_adic_domain = [](const ParamMap& p) { return at(p, "i") >= 1 && at(p, "r") >= 1 && at(p, "r") % 2 != 0; };

    out.push_back(opt_family("opt-8n+7-mod-2^{i+4}", "OPT_{2^i r}(8n+7) == 0 (mod 2^(i+4)), i >= 1, r odd", "2^i*r",
                             "8n+7", "2^{i+4}", {i_spec(), r_spec()}, "opt-2adic", two_i_r, {8, 7},
                             [](const ParamMap& p) { return ipow(2, at(p, "i") + 4); }, two_adic_domain,
                             FamilyStatus::theorem));

    struct Open {
        const char* key;
        const char* statement;
        std::uint64_t b;
        const char* mod_expr;
        std::int64_t mult;
        std::int64_t add;
    };
    for (const Open& o : {Open{"opt-8n+2-mod-2^{2i+1}", "OPT_{2^i r}(8n+2) == 0 (mod 2^(2i+1))", 2, "2^{2i+1}", 2, 1},
                          Open{"opt-8n+4-mod-2^{2i+4}", "OPT_{2^i r}(8n+4) == 0 (mod 2^(2i+4))", 4, "2^{2i+4}", 2, 4},
                          Open{"opt-8n+6-mod-2^{2i+3}", "OPT_{2^i r}(8n+6) == 0 (mod 2^(2i+3))", 6, "2^{2i+3}", 2, 3}}) {
        const std::int64_t mult = o.mult;
        const std::int64_t add = o.add;
        out.push_back(opt_family(o.key, o.statement, "2^i*r", "8n+" + std::to_string(o.b), o.mod_expr,
                                 {i_spec(), r_spec()}, "opt-conjecture", two_i_r, {8, o.b},
                                 [mult, add](const ParamMap& p) { return ipow(2, mult * at(p, "i") + add); },
                                 two_adic_domain, FamilyStatus::conjecture_only));
    }

    const auto three_two_k = [](const ParamMap& p) {
        return ipow(3, at(p, "i")) * ipow(2, at(p, "j")) * static_cast<std::uint64_t>(at(p, "k"));
    };
    const auto three_two_domain = [](const ParamMap& p) {
        return at(p, "i") >= 1 && at(p, "j") >= 1 && coprime6(at(p, "k"));
    };
    out.push_back(opt_family("opt-3n+2-mod-3^{i+1}2^{j+2}",
                             "OPT_{3^i 2^j k}(3n+2) == 0 (mod 3^(i+1) 2^(j+2)), i, j >= 1, gcd(k, 6) = 1",
                             "3^i*2^j*k", "3n+2", "3^{i+1}*2^{j+2}", {i_spec(), j_spec(), k_spec()}, "opt-3adic",
                             three_two_k, {3, 2},
                             [](const ParamMap& p) { return ipow(3, at(p, "i") + 1) * ipow(2, at(p, "j") + 2); },
                             three_two_domain, FamilyStatus::theorem));
    out.push_back(opt_family("opt-3n+1-mod-3^i2^{j+1}",
                             "OPT_{3^i 2^j k}(3n+1) == 0 (mod 3^i 2^(j+1)), i, j >= 1, gcd(k, 6) = 1",
                             "3^i*2^j*k", "3n+1", "3^i*2^{j+1}", {i_spec(), j_spec(), k_spec()}, "opt-3adic",
                             three_two_k, {3, 1},
                             [](const ParamMap& p) { return ipow(3, at(p, "i")) * ipow(2, at(p, "j") + 1); },
                             three_two_domain, FamilyStatus::theorem));

    // Two readings of the multiplier's domain: odd, prime to 3 and != 1
    // (the proved statement), or odd and prime to 3 with ell = 1 allowed.
    const auto three_ell = [](const ParamMap& p) { return ipow(3, at(p, "i")) * static_cast<std::uint64_t>(at(p, "ell")); };
    const auto ell_strict = [](const ParamMap& p) { return at(p, "i") >= 1 && at(p, "ell") != 1 && coprime6(at(p, "ell")); };
    const auto ell_odd = [](const ParamMap& p) { return at(p, "i") >= 1 && coprime6(at(p, "ell")); };
    const auto mod_3i1_2 = [](const ParamMap& p) { return ipow(3, at(p, "i") + 1) * 2; };
    const auto mod_3i_2 = [](const ParamMap& p) { return ipow(3, at(p, "i")) * 2; };

    out.push_back(opt_family("opt-3n+2-mod-3^{i+1}2", "OPT_{3^i ell}(3n+2) == 0 (mod 3^(i+1) 2), ell odd, 3 !| ell, ell != 1",
                             "3^i*ell", "3n+2", "3^{i+1}*2", {i_spec(), ell_strict_spec()}, "opt-3adic", three_ell,
                             {3, 2}, mod_3i1_2, ell_strict, FamilyStatus::theorem));
    out.push_back(opt_family("opt-3n+1-mod-3^i2", "OPT_{3^i ell}(3n+1) == 0 (mod 3^i 2), ell odd, 3 !| ell, ell != 1",
                             "3^i*ell", "3n+1", "3^i*2", {i_spec(), ell_strict_spec()}, "opt-3adic", three_ell, {3, 1},
                             mod_3i_2, ell_strict, FamilyStatus::theorem));
    out.push_back(opt_family("opt-3n+2-mod-3^{i+1}2-ell-odd",
                             "OPT_{3^i ell}(3n+2) == 0 (mod 3^(i+1) 2), ell odd, 3 !| ell (ell = 1 allowed)", "3^i*ell",
                             "3n+2", "3^{i+1}*2", {i_spec(), ell_odd_spec()}, "opt-3adic-alt", three_ell, {3, 2},
                             mod_3i1_2, ell_odd, FamilyStatus::conjecture_only));
    out.push_back(opt_family("opt-3n+1-mod-3^i2-ell-odd",
                             "OPT_{3^i ell}(3n+1) == 0 (mod 3^i 2), ell odd, 3 !| ell (ell = 1 allowed)", "3^i*ell",
                             "3n+1", "3^i*2", {i_spec(), ell_odd_spec()}, "opt-3adic-alt", three_ell, {3, 1}, mod_3i_2,
                             ell_odd, FamilyStatus::conjecture_only));

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

const CongruenceFamily& find_family(const std::vector<CongruenceFamily>& families, const std::string& key) {
    const auto it = std::find_if(families.begin(), families.end(), [&](const auto& f) { return f.key == key; });
    if (it == families.end()) {
        throw std::invalid_argument("unknown congruence family \"" + key + "\"");
    }
    return *it;
}

std::size_t required_order(const CongruenceFamily& family, const ParamMap& params, std::size_t n_max) {
    const Progression p = family.progression(params);
    return static_cast<std::size_t>(p.a) * n_max + static_cast<std::size_t>(p.b) + 1;
}

VerificationReport check_family(const CongruenceFamily& family, const std::vector<ParamMap>& grid, std::size_t n_max,
                                const CheckOptions& options) {
    struct Point {
        const ParamMap* params;
        std::uint64_t gf_param;
        Progression prog;
        std::uint64_t modulus;
    };

    VerificationReport report;
    report.key = family.key;

    std::vector<Point> points;
    std::size_t order = 1;
    for (const auto& params : grid) {
        if (!family.in_domain(params)) {
            throw parameter_out_of_domain(family.key + ": parameters " + to_string(params) + " outside the domain");
        }
        points.push_back({&params, family.gf_parameter(params), family.progression(params), family.modulus(params)});
        order = std::max(order, required_order(family, params, n_max));
    }
    if (order > options.max_order) {
        throw order_budget_exceeded(family.key + ": needs order " + std::to_string(order) + ", budget is " +
                                    std::to_string(options.max_order));
    }
    report.order = order;
    report.params_tried = points.size();

    // Same modulus and ascending parameter lets each series extend the last.
    std::vector<std::size_t> schedule(points.size());
    std::iota(schedule.begin(), schedule.end(), 0);
    std::stable_sort(schedule.begin(), schedule.end(), [&](std::size_t x, std::size_t y) {
        return std::tie(points[x].modulus, points[x].gf_param) < std::tie(points[y].modulus, points[y].gf_param);
    });

    std::vector<bool> exact_sample(points.size(), false);
    if (options.exact_samples > 0 && !points.empty()) {
        std::vector<std::size_t> idx(points.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::mt19937_64 rng(options.seed ^ fnv1a(family.key));
        std::shuffle(idx.begin(), idx.end(), rng);
        for (std::size_t s = 0; s < std::min(options.exact_samples, idx.size()); ++s) {
            exact_sample[idx[s]] = true;
        }
    }

    const EtaQuotient unit = unit_quotient(family.gf);
    std::optional<Series> current;
    std::uint64_t current_param = 0;

    for (const std::size_t idx : schedule) {
        const Point& pt = points[idx];
        const Ring ring = Ring::modular(pt.modulus);
        if (current && current->ring() == ring && current_param <= pt.gf_param) {
            if (current_param < pt.gf_param) {
                const auto delta = static_cast<std::int64_t>(pt.gf_param - current_param);
                current = multiply_by_eta_quotient(*current, unit.raised(delta));
            }
        } else {
            current = expand_eta_quotient(unit.raised(static_cast<std::int64_t>(pt.gf_param)), ring, order);
        }
        current_param = pt.gf_param;

        const Series slice = dissect(*current, pt.prog.a, pt.prog.b % pt.prog.a);
        const std::size_t offset = pt.prog.b / pt.prog.a;
        const auto residues = slice.residues();
        for (std::size_t n = 0; n <= n_max; ++n) {
            const std::uint64_t value = residues[n + offset];
            const std::uint64_t want = family.expected(*pt.params, n) % pt.modulus;
            ++report.coefficients_checked;
            if (value != want) {
                ++report.failures;
                report.witnesses.push_back({*pt.params, n, value, pt.modulus, want, "modular"});
            }
        }

        if (exact_sample[idx]) {
            const std::size_t exact_order = std::min(order, options.exact_order_cap);
            const Series exact =
                expand_eta_quotient(unit.raised(static_cast<std::int64_t>(pt.gf_param)), Ring::exact(), exact_order);
            const Series reduced = reduce_ring(exact, pt.modulus);
            const auto mine = current->residues();
            const auto theirs = reduced.residues();
            ++report.exact_cross_checks;
            for (std::size_t c = 0; c < exact_order; ++c) {
                if (mine[c] != theirs[c]) {
                    ++report.failures;
                    report.witnesses.push_back({*pt.params, c, theirs[c], pt.modulus, mine[c], "exact"});
                    break;
                }
            }
        }
    }

    std::sort(report.witnesses.begin(), report.witnesses.end(), [](const Witness& x, const Witness& y) {
        return std::tie(x.params, x.n, x.source) < std::tie(y.params, y.n, y.source);
    });
    if (report.witnesses.size() > options.witness_limit) {
        report.witnesses.resize(options.witness_limit);
    }

    const bool ok = report.failures == 0;
    if (family.status == FamilyStatus::theorem) {
        report.status = ok ? ReportStatus::pass : ReportStatus::fail;
    } else {
        report.status = ok ? ReportStatus::conjecture_pass : ReportStatus::conjecture_fail;
    }
    return report;
}

}  // namespace ovp
