#include "ovp/recipe.hpp"

#include <sstream>
#include <variant>

namespace ovp {

namespace {

struct EtaLeaf {
    EtaQuotient eq;
};
struct ThetaLeaf {
    ThetaName name;
};
struct JacobiLeaf {};
struct OverpartitionLeaf {
    std::uint64_t t;
};
struct OddOverpartitionLeaf {
    std::uint64_t k;
};
struct ConstantLeaf {
    Integer c;
};
struct AtPower {
    std::size_t k;
};
struct Shift {
    std::size_t j;
};
struct Dissect {
    std::size_t m;
    std::size_t r;
};
struct Power {
    std::int64_t e;
};
struct Scale {
    Integer c;
};
struct Sum {};
struct Difference {};
struct Product {};

using Op = std::variant<EtaLeaf, ThetaLeaf, JacobiLeaf, OverpartitionLeaf, OddOverpartitionLeaf, ConstantLeaf, AtPower,
                        Shift, Dissect, Power, Scale, Sum, Difference, Product>;

}  // namespace

struct Recipe::Node {
    Op op;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Recipe::Node>;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    return std::make_shared<const Recipe::Node>(Recipe::Node{std::move(op), std::move(lhs), std::move(rhs)});
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Series eval(const NodePtr& node, const Ring& ring, std::size_t order);

Series eval_product(const Recipe::Node& node, const Ring& ring, std::size_t order) {
    // an eta factor is applied to the other operand directly
    if (const auto* leaf = std::get_if<EtaLeaf>(&node.rhs->op)) {
        return multiply_by_eta_quotient(eval(node.lhs, ring, order), leaf->eq);
    }
    if (const auto* leaf = std::get_if<EtaLeaf>(&node.lhs->op)) {
        return multiply_by_eta_quotient(eval(node.rhs, ring, order), leaf->eq);
    }
    return mul(eval(node.lhs, ring, order), eval(node.rhs, ring, order));
}

Series eval(const NodePtr& node, const Ring& ring, std::size_t order) {
    return std::visit(
        overloaded{
            [&](const EtaLeaf& x) { return expand_eta_quotient(x.eq, ring, order); },
            [&](const ThetaLeaf& x) { return theta_component(x.name, ring, order); },
            [&](const JacobiLeaf&) { return jacobi_triangular_series(ring, order); },
            [&](const OverpartitionLeaf& x) { return overpartition_gf(x.t, ring, order); },
            [&](const OddOverpartitionLeaf& x) { return opt_gf(x.k, ring, order); },
            [&](const ConstantLeaf& x) { return scale(Series::one(ring, order), x.c); },
            [&](const AtPower& x) {
                const std::size_t inner = (order + x.k - 1) / x.k;
                return substitute_power(eval(node->lhs, ring, inner), x.k, order);
            },
            [&](const Shift& x) { return shift(eval(node->lhs, ring, order), x.j); },
            [&](const Dissect& x) { return dissect(eval(node->lhs, ring, x.m * (order - 1) + x.r + 1), x.m, x.r); },
            [&](const Power& x) { return ovp::pow(eval(node->lhs, ring, order), x.e); },
            [&](const Scale& x) { return scale(eval(node->lhs, ring, order), x.c); },
            [&](const Sum&) { return add(eval(node->lhs, ring, order), eval(node->rhs, ring, order)); },
            [&](const Difference&) { return sub(eval(node->lhs, ring, order), eval(node->rhs, ring, order)); },
            [&](const Product&) { return eval_product(*node, ring, order); },
        },
        node->op);
}

bool is_additive(const NodePtr& node) {
    return std::holds_alternative<Sum>(node->op) || std::holds_alternative<Difference>(node->op);
}

bool is_leaf(const NodePtr& node) { return node->lhs == nullptr; }

void render(std::ostream& os, const NodePtr& node);

void render_grouped(std::ostream& os, const NodePtr& node) {
    if (is_leaf(node) && !std::holds_alternative<EtaLeaf>(node->op)) {
        render(os, node);
        return;
    }
    os << '(';
    render(os, node);
    os << ')';
}

void render(std::ostream& os, const NodePtr& node) {
    std::visit(overloaded{
                   [&](const EtaLeaf& x) { os << x.eq.to_string(); },
                   [&](const ThetaLeaf& x) { os << to_string(x.name); },
                   [&](const JacobiLeaf&) { os << "sum_k (-1)^k (2k+1) q^(k(k+1)/2)"; },
                   [&](const OverpartitionLeaf& x) { os << "PBAR_" << x.t; },
                   [&](const OddOverpartitionLeaf& x) { os << "OPT_" << x.k; },
                   [&](const ConstantLeaf& x) { os << x.c.get_str(); },
                   [&](const AtPower& x) {
                       render_grouped(os, node->lhs);
                       os << "(q^" << x.k << ')';
                   },
                   [&](const Shift& x) {
                       os << "q^" << x.j << '*';
                       render_grouped(os, node->lhs);
                   },
                   [&](const Dissect& x) {
                       os << "[q^(" << x.m << "n+" << x.r << ")]";
                       render_grouped(os, node->lhs);
                   },
                   [&](const Power& x) {
                       render_grouped(os, node->lhs);
                       os << '^' << x.e;
                   },
                   [&](const Scale& x) {
                       os << x.c.get_str() << '*';
                       render_grouped(os, node->lhs);
                   },
                   [&](const Sum&) {
                       render(os, node->lhs);
                       os << " + ";
                       render(os, node->rhs);
                   },
                   [&](const Difference&) {
                       render(os, node->lhs);
                       os << " - ";
                       if (is_additive(node->rhs)) {
                           os << '(';
                           render(os, node->rhs);
                           os << ')';
                       } else {
                           render(os, node->rhs);
                       }
                   },
                   [&](const Product&) {
                       render_grouped(os, node->lhs);
                       os << " * ";
                       render_grouped(os, node->rhs);
                   },
               },
               node->op);
}

}  // namespace

Recipe Recipe::eta(EtaQuotient eq) { return Recipe(make(EtaLeaf{std::move(eq)})); }
Recipe Recipe::eta(std::string_view text) { return eta(EtaQuotient::parse(text)); }
Recipe Recipe::theta(ThetaName name) { return Recipe(make(ThetaLeaf{name})); }
Recipe Recipe::jacobi_triangular() { return Recipe(make(JacobiLeaf{})); }
Recipe Recipe::overpartitions(std::uint64_t t) { return Recipe(make(OverpartitionLeaf{t})); }
Recipe Recipe::odd_overpartitions(std::uint64_t k) { return Recipe(make(OddOverpartitionLeaf{k})); }
Recipe Recipe::constant(Integer c) { return Recipe(make(ConstantLeaf{std::move(c)})); }

Recipe Recipe::at_power(std::size_t k) const {
    if (k == 0) {
        throw std::invalid_argument("at_power: k must be >= 1");
    }
    return Recipe(make(AtPower{k}, node_));
}

Recipe Recipe::shifted(std::size_t j) const { return Recipe(make(Shift{j}, node_)); }

Recipe Recipe::dissected(std::size_t m, std::size_t r) const {
    if (m == 0 || r >= m) {
        throw std::invalid_argument("dissected: need 0 <= r < m");
    }
    return Recipe(make(Dissect{m, r}, node_));
}

Recipe Recipe::pow(std::int64_t e) const { return Recipe(make(Power{e}, node_)); }
Recipe Recipe::scaled(Integer c) const { return Recipe(make(Scale{std::move(c)}, node_)); }

Recipe operator+(const Recipe& a, const Recipe& b) { return Recipe(make(Sum{}, a.node_, b.node_)); }
Recipe operator-(const Recipe& a, const Recipe& b) { return Recipe(make(Difference{}, a.node_, b.node_)); }
Recipe operator*(const Recipe& a, const Recipe& b) { return Recipe(make(Product{}, a.node_, b.node_)); }

Series Recipe::evaluate(const Ring& ring, std::size_t order) const {
    if (order == 0) {
        throw std::invalid_argument("recipe order must be >= 1");
    }
    return eval(node_, ring, order);
}

std::string Recipe::to_string() const {
    std::ostringstream os;
    render(os, node_);
    return os.str();
}

}  // namespace ovp
