#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "ovp/eta.hpp"
#include "ovp/series.hpp"
#include "ovp/theta.hpp"

namespace ovp {

/// Immutable expression tree describing how to build a series from eta
/// quotients, theta components and generating functions. A recipe is pure
/// data: it can be printed, compared by text and evaluated in any ring at
/// any truncation order.
class Recipe {
public:
    static Recipe eta(EtaQuotient eq);
    /// Shorthand for eta(EtaQuotient::parse(text)).
    static Recipe eta(std::string_view text);
    static Recipe theta(ThetaName name);
    /// sum_{k>=0} (-1)^k (2k+1) q^{k(k+1)/2}
    static Recipe jacobi_triangular();
    static Recipe overpartitions(std::uint64_t t);
    static Recipe odd_overpartitions(std::uint64_t k);
    static Recipe constant(Integer c);

    /// q -> q^k
    Recipe at_power(std::size_t k) const;
    /// q^j * this
    Recipe shifted(std::size_t j) const;
    /// Coefficients at m n + r as a series in n.
    Recipe dissected(std::size_t m, std::size_t r) const;
    Recipe pow(std::int64_t e) const;
    Recipe scaled(Integer c) const;

    friend Recipe operator+(const Recipe& a, const Recipe& b);
    friend Recipe operator-(const Recipe& a, const Recipe& b);
    friend Recipe operator*(const Recipe& a, const Recipe& b);

    /// Evaluates to exactly `order` coefficients. Child orders are chosen so
    /// that no unknown coefficient is ever used.
    Series evaluate(const Ring& ring, std::size_t order) const;

    std::string to_string() const;

    struct Node;

private:
    explicit Recipe(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

}  // namespace ovp
