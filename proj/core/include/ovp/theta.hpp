#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ovp/series.hpp"

namespace ovp {

/// Borwein cubic theta function A(q) = sum_{j,k in Z} q^{j^2 + jk + k^2},
/// computed by direct lattice enumeration (no eta identities involved).
Series borwein_A(const Ring& ring, std::size_t order);

/// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}, built from triangular numbers.
Series jacobi_triangular_series(const Ring& ring, std::size_t order);

/// Components of the 2- and 3-dissections of f_1^2, 1/f_1^3, f_1^2/f_2 and
/// f_1^3, in terms of A and Euler products:
///
///   a = A^2 f_3^3 / f_1^10     d = f_3^2 / f_6
///   b = A f_3^6 / f_1^11       g = f_1 f_6^2 / (f_2 f_3)
///   c = f_3^9 / f_1^12         h = A f_1
///                              m = f_3^3
///
/// `A` names the double sum itself.
enum class ThetaName { A, a, b, c, d, g, h, m };

/// Throws std::invalid_argument for an unknown name.
ThetaName parse_theta_name(std::string_view name);
std::string to_string(ThetaName name);

Series theta_component(ThetaName name, const Ring& ring, std::size_t order);

}  // namespace ovp
