#include "ovp/eta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace ovp {

namespace {

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, const std::string& what) {
    throw std::invalid_argument("eta quotient \"" + std::string(text) + "\" at " + std::to_string(pos) + ": " +
                                what);
}

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }
    bool at_end() {
        skip_ws();
        return pos_ == text_.size();
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    template <typename T>
    T number() {
        skip_ws();
        T value{};
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{}) {
            parse_error(text_, pos_, "expected an integer");
        }
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    std::size_t pos() const { return pos_; }
    std::string_view text() const { return text_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::size_t approx_term_count(std::size_t order, std::uint64_t k) {
    const double reach = static_cast<double>(order) / static_cast<double>(k);
    return static_cast<std::size_t>(2.0 * std::sqrt(2.0 * reach / 3.0)) + 1;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Rough operation counts for the two ways of applying f_k^e at `order`.
bool prefer_sparse(std::size_t order, std::uint64_t k, std::int64_t e) {
    const double n = static_cast<double>(order);
    const double mag = static_cast<double>(e < 0 ? -e : e);
    const double sparse = mag * n * static_cast<double>(approx_term_count(order, k));
    const double reduced = static_cast<double>(ceil_div(order, static_cast<std::size_t>(std::min<std::uint64_t>(k, order))));
    const double squarings = 2.0 * std::log2(mag + 1.0);
    const double dense = (squarings + (e < 0 ? 1.0 : 0.0)) * reduced * reduced / 2.0 + n * n / 2.0;
    return sparse <= dense;
}

}  // namespace

EtaQuotient::EtaQuotient(std::initializer_list<EtaFactor> factors) {
    for (const auto& f : factors) {
        times(f.scale, f.exponent);
    }
}

EtaQuotient EtaQuotient::parse(std::string_view text) {
    Cursor cur(text);
    EtaQuotient out;
    if (cur.at_end()) {
        parse_error(text, 0, "empty input");
    }
    {
        // the empty product
        Cursor probe(text);
        if (probe.accept('1') && probe.at_end()) {
            return out;
        }
    }
    do {
        if (!cur.accept('f')) {
            parse_error(text, cur.pos(), "expected 'f'");
        }
        const auto scale = cur.number<std::uint64_t>();
        if (scale == 0) {
            parse_error(text, cur.pos(), "scale must be >= 1");
        }
        std::int64_t exponent = 1;
        if (cur.accept('^')) {
            exponent = cur.number<std::int64_t>();
        }
        out.times(scale, exponent);
    } while (cur.accept('*'));
    if (!cur.at_end()) {
        parse_error(text, cur.pos(), "unexpected trailing input");
    }
    return out;
}

std::string EtaQuotient::to_string() const {
    if (factors_.empty()) {
        return "1";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i != 0) {
            os << " * ";
        }
        os << 'f' << factors_[i].scale << '^' << factors_[i].exponent;
    }
    return os.str();
}

std::int64_t EtaQuotient::exponent_of(std::uint64_t scale) const noexcept {
    for (const auto& f : factors_) {
        if (f.scale == scale) {
            return f.exponent;
        }
    }
    return 0;
}

EtaQuotient& EtaQuotient::times(std::uint64_t scale, std::int64_t exponent) {
    if (scale == 0) {
        throw std::invalid_argument("eta factor scale must be >= 1");
    }
    for (auto& f : factors_) {
        if (f.scale == scale) {
            f.exponent += exponent;
            return *this;
        }
    }
    factors_.push_back({scale, exponent});
    return *this;
}

EtaQuotient& EtaQuotient::operator*=(const EtaQuotient& other) {
    for (const auto& f : other.factors_) {
        times(f.scale, f.exponent);
    }
    return *this;
}

EtaQuotient EtaQuotient::raised(std::int64_t n) const {
    EtaQuotient out = *this;
    for (auto& f : out.factors_) {
        f.exponent *= n;
    }
    return out;
}

EtaQuotient EtaQuotient::canonical() const {
    EtaQuotient out;
    for (const auto& f : factors_) {
        if (f.exponent != 0) {
            out.factors_.push_back(f);
        }
    }
    std::sort(out.factors_.begin(), out.factors_.end(),
              [](const EtaFactor& a, const EtaFactor& b) { return a.scale < b.scale; });
    return out;
}

std::vector<kernels::SparseTerm> euler_terms(std::uint64_t k, std::size_t order) {
    if (k == 0) {
        throw std::invalid_argument("Euler product scale must be >= 1");
    }
    std::vector<kernels::SparseTerm> terms;
    for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t lo = k * (j * (3 * j - 1) / 2);
        if (lo >= order) {
            break;
        }
        const int sign = (j % 2 == 0) ? 1 : -1;
        terms.push_back({static_cast<std::size_t>(lo), sign});
        const std::uint64_t hi = k * (j * (3 * j + 1) / 2);
        if (hi < order) {
            terms.push_back({static_cast<std::size_t>(hi), sign});
        }
    }
    return terms;
}

Series euler_product(std::uint64_t k, const Ring& ring, std::size_t order) {
    const auto terms = euler_terms(k, order);
    if (order == 0) {
        return Series::one(ring, order);  // throws
    }
    std::vector<std::int64_t> dense(order, 0);
    dense[0] = 1;
    for (const auto& t : terms) {
        dense[t.offset] = t.sign;
    }
    return make_series(ring, dense, order);
}

Series apply_euler_power(const Series& s, std::uint64_t k, std::int64_t e) {
    if (e == 0) {
        return s;
    }
    const auto terms = euler_terms(k, s.order());
    const std::int64_t passes = e < 0 ? -e : e;
    if (s.ring().is_modular()) {
        const auto m = s.ring().modulus();
        auto c = std::vector<std::uint64_t>(s.residues().begin(), s.residues().end());
        for (std::int64_t i = 0; i < passes; ++i) {
            if (e > 0) {
                kernels::multiply_sparse(c, terms, m);
            } else {
                kernels::divide_sparse(c, terms, m);
            }
        }
        return Series::from_residues(s.ring(), std::move(c));
    }
    auto c = std::vector<Integer>(s.integers().begin(), s.integers().end());
    for (std::int64_t i = 0; i < passes; ++i) {
        if (e > 0) {
            kernels::multiply_sparse(c, terms);
        } else {
            kernels::divide_sparse(c, terms);
        }
    }
    return Series::from_integers(std::move(c));
}

Series multiply_by_eta_quotient(const Series& s, const EtaQuotient& eq) {
    const std::size_t order = s.order();
    Series acc = s;
    const EtaQuotient canon = eq.canonical();
    for (const auto& f : canon.factors()) {
        if (prefer_sparse(order, f.scale, f.exponent)) {
            acc = apply_euler_power(acc, f.scale, f.exponent);
            continue;
        }
        // f_k^e == (f_1^e)(q^k): the power is only needed to ceil(order/k).
        const std::size_t reduced = ceil_div(order, static_cast<std::size_t>(std::min<std::uint64_t>(f.scale, order)));
        const Series base = pow(euler_product(1, s.ring(), reduced), f.exponent);
        const Series factor = f.scale == 1 ? base : substitute_power(base, f.scale, order);
        acc = mul(acc, factor);
    }
    return acc;
}

Series expand_eta_quotient(const EtaQuotient& eq, const Ring& ring, std::size_t order) {
    return multiply_by_eta_quotient(Series::one(ring, order), eq);
}

Series expand_eta_quotient_reference(const EtaQuotient& eq, const Ring& ring, std::size_t order) {
    Series acc = Series::one(ring, order);
    const EtaQuotient canon = eq.canonical();
    for (const auto& f : canon.factors()) {
        acc = mul_baseline(acc, pow(euler_product(f.scale, ring, order), f.exponent));
    }
    return acc;
}

EtaQuotient overpartition_quotient(std::uint64_t t) {
    const auto e = static_cast<std::int64_t>(t);
    return EtaQuotient{{2, e}, {1, -2 * e}};
}

EtaQuotient opt_quotient(std::uint64_t k) {
    const auto e = static_cast<std::int64_t>(k);
    return EtaQuotient{{2, 3 * e}, {1, -2 * e}, {4, -e}};
}

Series overpartition_gf(std::uint64_t t, const Ring& ring, std::size_t order) {
    return expand_eta_quotient(overpartition_quotient(t), ring, order);
}

Series opt_gf(std::uint64_t k, const Ring& ring, std::size_t order) {
    return expand_eta_quotient(opt_quotient(k), ring, order);
}

}  // namespace ovp
