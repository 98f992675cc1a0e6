// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ovp/binomial_tables.hpp"
#include "ovp/congruence.hpp"
#include "ovp/identities.hpp"
#include "ovp/oracle.hpp"
#include "properties.hpp"

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Criterion = std::function<Outcome()>;

bool in_group(const ovp::CongruenceFamily& f, const std::string& group) {
    return std::find(f.groups.begin(), f.groups.end(), group) != f.groups.end();
}

// Runs the families of a group and summarises points, coefficients and any
// failing family.
Outcome run_families(const std::vector<const ovp::CongruenceFamily*>& families, const ovp::GridConfig& cfg,
                     std::size_t n_max, const std::function<bool(const ovp::ParamMap&)>& keep = nullptr) {
    Outcome out;
    std::size_t points = 0;
    std::size_t coefficients = 0;
    std::vector<std::string> failed;
    for (const auto* f : families) {
        auto grid = f->default_grid(cfg);
        if (keep) {
            std::erase_if(grid, [&](const auto& p) { return !keep(p); });
        }
        const auto report = ovp::check_family(*f, grid, n_max);
        points += report.params_tried;
        coefficients += report.coefficients_checked;
        if (report.status != ovp::ReportStatus::pass) {
            std::ostringstream os;
            os << f->key;
            if (!report.witnesses.empty()) {
                const auto& w = report.witnesses.front();
                os << " [" << ovp::to_string(w.params) << "] n=" << w.n << " value " << w.value << " mod "
                   << w.modulus;
            }
            failed.push_back(os.str());
        }
    }
    std::ostringstream os;
    os << families.size() << " families, " << points << " parameter points, " << coefficients << " coefficients";
    for (const auto& f : failed) {
        os << "; failed " << f;
    }
    out.ok = failed.empty() && !families.empty();
    out.detail = os.str();
    return out;
}

Outcome criterion_identities() {
    const auto reports = ovp::verify_identities(ovp::builtin_identities(), 500);
    Outcome out;
    std::vector<std::string> bad;
    for (const auto& r : reports) {
        if (r.status != ovp::CheckStatus::pass) {
            std::ostringstream os;
            os << r.key << " " << ovp::to_string(r.status);
            if (r.first_mismatch) {
                os << " at q^" << r.first_mismatch->exponent << ": " << r.first_mismatch->lhs << " vs "
                   << r.first_mismatch->rhs;
            }
            if (!r.error.empty()) {
                os << ": " << r.error;
            }
            bad.push_back(os.str());
        }
    }
    out.ok = bad.empty() && reports.size() == 17;
    out.detail = std::to_string(reports.size() - bad.size()) + "/" + std::to_string(reports.size()) +
                 " pass at order 500";
    for (const auto& b : bad) {
        out.detail += "; " + b;
    }
    return out;
}

std::vector<const ovp::CongruenceFamily*> group(const std::vector<ovp::CongruenceFamily>& all, const std::string& g,
                                                bool theorems_only = true) {
    std::vector<const ovp::CongruenceFamily*> out;
    for (const auto& f : all) {
        if (in_group(f, g) && (!theorems_only || f.status == ovp::FamilyStatus::theorem)) {
            out.push_back(&f);
        }
    }
    return out;
}

Outcome criterion_pbar_theorems(const std::vector<ovp::CongruenceFamily>& all) {
    ovp::GridConfig cfg;
    cfg.t_max = 64;
    cfg.alpha_max = 2;
    auto out = run_families(group(all, "pbar-theorems"), cfg, 200);
    // the residue-2 structure must actually occur, not just zeros
    const auto& tri = ovp::find_family(all, "pbar-2^{2alpha+3}n+2^{2alpha}-mod4-triangular");
    const auto series = ovp::overpartition_gf(1, ovp::Ring::modular(4), 8 * 10 + 2);
    const bool seen = series.coeff(1) == 2 && series.coeff(9) == 2 && series.coeff(17) == 0 && tri.triangular_residue;
    out.ok = out.ok && seen;
    if (!seen) {
        out.detail += "; residue-2 pattern missing";
    }
    return out;
}

Outcome criterion_all_t(const std::vector<ovp::CongruenceFamily>& all) {
    ovp::GridConfig cfg;
    cfg.t_max = 64;
    return run_families(group(all, "pbar-8n-all-t"), cfg, 200, [](const auto& p) { return p.at("t") >= 1; });
}

Outcome criterion_opt_2adic(const std::vector<ovp::CongruenceFamily>& all) {
    ovp::GridConfig cfg;
    cfg.i_max = 3;
    cfg.r_max = 15;
    return run_families({&ovp::find_family(all, "opt-8n+7-mod-2^{i+4}")}, cfg, 100);
}

Outcome criterion_opt_3adic(const std::vector<ovp::CongruenceFamily>& all) {
    ovp::GridConfig cfg;
    cfg.i_max = 3;
    cfg.j_max = 3;
    cfg.k_max = 13;
    cfg.ell_max = 13;
    return run_families(group(all, "opt-3adic"), cfg, 100);
}

Outcome criterion_tables() {
    Outcome out;
    std::size_t rows = 0;
    for (unsigned w : {16U, 32U}) {
        const auto r = ovp::replay_binomial_tables(w);
        for (const auto& row : r.rows) {
            ++rows;
            if (!row.ok()) {
                out.ok = false;
                out.detail += "width " + std::to_string(w) + " row " + std::to_string(row.residue) + " differs; ";
            }
        }
        out.ok = out.ok && r.rows.size() == (w == 16 ? 8U : 16U);
    }
    out.detail += std::to_string(rows) + " rows replayed";
    return out;
}

Outcome criterion_oracle() {
    Outcome out;
    const ovp::Ring z = ovp::Ring::exact();
    constexpr std::size_t upto = 60;
    std::size_t compared = 0;
    for (std::uint64_t p = 0; p <= 6; ++p) {
        const auto over = ovp::oracle::count_overpartition_tuples(p, upto);
        const auto opt = ovp::oracle::count_opt_tuples(p, upto);
        const auto gf_over = ovp::overpartition_gf(p, z, upto + 1);
        const auto gf_opt = ovp::opt_gf(p, z, upto + 1);
        for (std::size_t n = 0; n <= upto; ++n) {
            compared += 2;
            if (over.counts[n] != gf_over.coeff(n) || opt.counts[n] != gf_opt.coeff(n)) {
                out.ok = false;
                out.detail += "parameter " + std::to_string(p) + " n=" + std::to_string(n) + " differs; ";
            }
        }
    }
    for (unsigned t = 0; t <= 2; ++t) {
        const auto over = ovp::oracle::count_overpartition_tuples(t, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            ++compared;
            if (mpz_class(static_cast<unsigned long>(ovp::oracle::enumerate_tiny(t, n))) != over.counts[n]) {
                out.ok = false;
                out.detail += "enumeration t=" + std::to_string(t) + " n=" + std::to_string(n) + " differs; ";
            }
        }
    }
    const auto p1 = ovp::oracle::count_overpartition_tuples(1, 4).counts;
    const bool frozen = p1 == std::vector<mpz_class>{1, 2, 4, 8, 14};
    out.ok = out.ok && frozen;
    out.detail += std::to_string(compared) + " values compared" + (frozen ? "" : "; p1(0..4) wrong");
    return out;
}

Outcome criterion_properties() {
    using namespace ovp::testing;
    constexpr std::size_t cases = 1000;
    Outcome out;
    std::vector<PropertyResult> results{check_ring_axioms(1, cases), check_dissection_reconstruction(2, cases),
                                        check_reduction_homomorphism(3, cases), check_pow_additivity(4, cases)};
    std::vector<std::string> parts;
    for (const auto& r : results) {
        out.ok = out.ok && r.ok() && r.cases == cases;
        parts.push_back(r.name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases));
        if (!r.ok()) {
            parts.back() += " (" + r.first_failure + ")";
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out.detail += (i ? ", " : "") + parts[i];
    }
    return out;
}

Outcome criterion_performance() {
    const auto start = std::chrono::steady_clock::now();
    const auto s = ovp::overpartition_gf(64, ovp::Ring::modular(32), 2000);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", secs);
    Outcome out;
    out.ok = secs < 10.0 && s.order() == 2000 && s.coeff(0) == 1;
    out.detail = std::string("overpartition_gf(64) mod 32 to order 2000 in ") + buf;
    return out;
}

}  // namespace

int main() {
    const auto families = ovp::builtin_families();
    const std::vector<std::pair<const char*, Criterion>> criteria{
        {"identity suite", criterion_identities},
        {"overpartition theorem families", [&] { return criterion_pbar_theorems(families); }},
        {"8n+b families for all t", [&] { return criterion_all_t(families); }},
        {"odd-part 8n+7 family", [&] { return criterion_opt_2adic(families); }},
        {"odd-part 3n+1 and 3n+2 families", [&] { return criterion_opt_3adic(families); }},
        {"binomial table replay", criterion_tables},
        {"oracle equivalence", criterion_oracle},
        {"property suites", criterion_properties},
        {"performance sanity", criterion_performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failures += o.ok ? 0 : 1;
        std::cout << "criterion " << (i + 1) << " " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failures == 0 ? 0 : 1;
}
