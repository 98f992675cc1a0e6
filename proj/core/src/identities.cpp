#include "ovp/identities.hpp"

#include <algorithm>

#include "ovp/parallel.hpp"

namespace ovp {

std::string to_string(IdentityMode mode) { return mode == IdentityMode::exact ? "exact" : "congruence"; }

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::error: return "ERROR";
    }
    return "?";
}

IdentityReport verify_identity(const IdentityCase& c, std::size_t order) {
    if (order == 0) {
        throw std::invalid_argument("verify_identity: order must be >= 1");
    }
    IdentityReport report{c.key, c.mode, c.modulus, order, CheckStatus::pass, std::nullopt, {}};
    try {
        const Ring ring = c.mode == IdentityMode::exact ? Ring::exact() : Ring::modular(c.modulus);
        const Series lhs = c.lhs.evaluate(ring, order);
        const Series rhs = c.rhs.evaluate(ring, order);
        for (std::size_t n = 0; n < order; ++n) {
            Integer l = lhs.coeff(n);
            Integer r = rhs.coeff(n);
            if (l != r) {
                report.status = CheckStatus::fail;
                report.first_mismatch = Mismatch{n, std::move(l), std::move(r)};
                break;
            }
        }
    } catch (const std::exception& e) {
        report.status = CheckStatus::error;
        report.error = e.what();
    }
    return report;
}

std::vector<IdentityCase> builtin_identities() {
    std::vector<IdentityCase> cases;

    for (std::uint64_t p : {2U, 3U}) {
        std::uint64_t pk = 1;
        for (int k = 1; k <= 5; ++k) {
            const std::uint64_t prev = pk;
            pk *= p;
            IdentityCase c{"B1-p" + std::to_string(p) + "-k" + std::to_string(k),
                           Recipe::eta(EtaQuotient{{1, static_cast<std::int64_t>(pk)}}),
                           Recipe::eta(EtaQuotient{{p, static_cast<std::int64_t>(prev)}}), IdentityMode::congruence,
                           pk};
            cases.push_back(std::move(c));
        }
    }

    const auto eta = [](std::string_view text) { return Recipe::eta(text); };
    const auto theta3 = [](ThetaName n) { return Recipe::theta(n).at_power(3); };

    cases.push_back({"D1", eta("f1^2"),
                     eta("f2 * f8^5 * f4^-2 * f16^-2") - eta("f2 * f16^2 * f8^-1").scaled(2).shifted(1)});

    // square of the previous line divided by f_2^2
    cases.push_back({"D1-SQ", eta("f1^4 * f2^-2"),
                     eta("f8^10 * f4^-4 * f16^-4") - eta("f8^4 * f4^-2").scaled(4).shifted(1) +
                         eta("f16^4 * f8^-2").scaled(4).shifted(2)});

    cases.push_back({"D2", eta("f1^3"), theta3(ThetaName::h) - theta3(ThetaName::m).scaled(3).shifted(1)});

    cases.push_back({"D3", eta("f1^2 * f2^-1"), theta3(ThetaName::d) - theta3(ThetaName::g).scaled(2).shifted(1)});

    cases.push_back({"D4", eta("f1^-3"), theta3(ThetaName::a) + theta3(ThetaName::b).scaled(3).shifted(1) +
                                             theta3(ThetaName::c).scaled(9).shifted(2)});

    cases.push_back({"JACOBI", eta("f1^3"), Recipe::jacobi_triangular()});

    cases.push_back({"R13", eta("f3^4 * f2 * f12 * f4^-1 * f6^-1") + eta("f1^2 * f6^8 * f2^-2 * f3^-2 * f12^-2"),
                     eta("f3^6 * f1^-2").scaled(2)});

    std::sort(cases.begin(), cases.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return cases;
}

std::vector<IdentityReport> verify_identities(const std::vector<IdentityCase>& cases, std::size_t order,
                                              unsigned jobs) {
    std::vector<std::optional<IdentityReport>> slots(cases.size());
    parallel_for(cases.size(), jobs, [&](std::size_t i) { slots[i] = verify_identity(cases[i], order); });
    std::vector<IdentityReport> out;
    out.reserve(slots.size());
    for (auto& s : slots) {
        out.push_back(std::move(*s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
    return out;
}

}  // namespace ovp
