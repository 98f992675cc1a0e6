#include "ovp/theta.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ovp/eta.hpp"

namespace ovp {

Series borwein_A(const Ring& ring, std::size_t order) {
    if (order == 0) {
        return Series::one(ring, order);  // throws
    }
    // j^2 + jk + k^2 >= 3/4 max(j,k)^2, so |j|,|k| <= 2 sqrt(n/3) covers q^n.
    const auto bound =
        static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(order) / 3.0))) + 1;
    std::vector<std::int64_t> counts(order, 0);
    for (std::int64_t j = -bound; j <= bound; ++j) {
        for (std::int64_t k = -bound; k <= bound; ++k) {
            const std::int64_t v = j * j + j * k + k * k;
            if (v < static_cast<std::int64_t>(order)) {
                ++counts[static_cast<std::size_t>(v)];
            }
        }
    }
    return make_series(ring, counts, order);
}

Series jacobi_triangular_series(const Ring& ring, std::size_t order) {
    if (order == 0) {
        return Series::one(ring, order);  // throws
    }
    std::vector<std::int64_t> c(order, 0);
    for (std::int64_t k = 0;; ++k) {
        const std::int64_t tri = k * (k + 1) / 2;
        if (tri >= static_cast<std::int64_t>(order)) {
            break;
        }
        c[static_cast<std::size_t>(tri)] = (k % 2 == 0 ? 1 : -1) * (2 * k + 1);
    }
    return make_series(ring, c, order);
}

ThetaName parse_theta_name(std::string_view name) {
    if (name == "A") return ThetaName::A;
    if (name == "a") return ThetaName::a;
    if (name == "b") return ThetaName::b;
    if (name == "c") return ThetaName::c;
    if (name == "d") return ThetaName::d;
    if (name == "g") return ThetaName::g;
    if (name == "h") return ThetaName::h;
    if (name == "m") return ThetaName::m;
    throw std::invalid_argument("unknown theta component \"" + std::string(name) + "\"");
}

std::string to_string(ThetaName name) {
    switch (name) {
        case ThetaName::A: return "A";
        case ThetaName::a: return "a";
        case ThetaName::b: return "b";
        case ThetaName::c: return "c";
        case ThetaName::d: return "d";
        case ThetaName::g: return "g";
        case ThetaName::h: return "h";
        case ThetaName::m: return "m";
    }
    return "?";
}

Series theta_component(ThetaName name, const Ring& ring, std::size_t order) {
    switch (name) {
        case ThetaName::A:
            return borwein_A(ring, order);
        case ThetaName::a: {
            const Series A = borwein_A(ring, order);
            return multiply_by_eta_quotient(mul(A, A), EtaQuotient{{3, 3}, {1, -10}});
        }
        case ThetaName::b:
            return multiply_by_eta_quotient(borwein_A(ring, order), EtaQuotient{{3, 6}, {1, -11}});
        case ThetaName::c:
            return expand_eta_quotient(EtaQuotient{{3, 9}, {1, -12}}, ring, order);
        case ThetaName::d:
            return expand_eta_quotient(EtaQuotient{{3, 2}, {6, -1}}, ring, order);
        case ThetaName::g:
            return expand_eta_quotient(EtaQuotient{{1, 1}, {6, 2}, {2, -1}, {3, -1}}, ring, order);
        case ThetaName::h:
            return multiply_by_eta_quotient(borwein_A(ring, order), EtaQuotient{{1, 1}});
        case ThetaName::m:
            return expand_eta_quotient(EtaQuotient{{3, 3}}, ring, order);
    }
    throw std::invalid_argument("unknown theta component");
}

}  // namespace ovp
