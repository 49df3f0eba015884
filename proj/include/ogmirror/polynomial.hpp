/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with arbitrary-precision integer
 * coefficients, in Pluecker variables p[tau], torus variables a[i,j] and the
 * quantum parameter q.
 *
 * Terms are kept in a std::map keyed by monomial, so the canonical order is
 * structural: variables compare as Quantum < Torus (by (i,j)) < Pluecker (by
 * diagram), and monomials compare lexicographically as sorted
 * (variable, exponent) sequences.
 */
#pragma once

#include "ogmirror/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ogmirror {

using Integer = boost::multiprecision::cpp_int;

enum class VarKind : std::uint8_t { Quantum = 0, Torus = 1, Plucker = 2 };

class Variable {
public:
    static Variable quantum() { return Variable(VarKind::Quantum, 0, 0, {}); }
    static Variable torus(int i, int j) { return Variable(VarKind::Torus, i, j, {}); }
    static Variable plucker(const Diagram& d) {
        auto r = d.rows();
        return Variable(VarKind::Plucker, 0, 0, std::vector<int>(r.begin(), r.end()));
    }

    [[nodiscard]] VarKind kind() const noexcept { return kind_; }
    [[nodiscard]] int i() const noexcept { return i_; }
    [[nodiscard]] int j() const noexcept { return j_; }
    /// Row vector of a Pluecker variable's diagram; empty for other kinds.
    [[nodiscard]] const std::vector<int>& rows() const noexcept { return rows_; }
    [[nodiscard]] Diagram diagram() const {
        return Diagram::from_rows(rows_, Rank(static_cast<int>(rows_.size())));
    }

    /// `q`, `a[3,2]` or `p[1,2,0,0]`.
    [[nodiscard]] std::string name() const {
        switch (kind_) {
        case VarKind::Quantum:
            return "q";
        case VarKind::Torus:
            return "a[" + std::to_string(i_) + "," + std::to_string(j_) + "]";
        case VarKind::Plucker: {
            std::string s = "p[";
            for (std::size_t k = 0; k < rows_.size(); ++k) {
                if (k) s += ',';
                s += std::to_string(rows_[k]);
            }
            return s + "]";
        }
        }
        return {};
    }

    [[nodiscard]] std::string latex() const {
        switch (kind_) {
        case VarKind::Quantum:
            return "q";
        case VarKind::Torus:
            return "a_{" + std::to_string(i_) + "," + std::to_string(j_) + "}";
        case VarKind::Plucker:
            return "p_{" + plucker_subscript() + "}";
        }
        return {};
    }

    /// Row tuple with trailing zeros dropped, `\varnothing` for the empty diagram.
    [[nodiscard]] std::string plucker_subscript() const {
        std::size_t len = rows_.size();
        while (len > 0 && rows_[len - 1] == 0) --len;
        if (len == 0) return "\\varnothing";
        std::string s = "(";
        for (std::size_t k = 0; k < len; ++k) {
            if (k) s += ',';
            s += std::to_string(rows_[k]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Variable&, const Variable&) = default;
    friend bool operator==(const Variable&, const Variable&) = default;

private:
    Variable(VarKind k, int i, int j, std::vector<int> rows)
        : kind_(k), i_(i), j_(j), rows_(std::move(rows)) {}

    // Member order fixes the comparison order.
    VarKind kind_;
    int i_;
    int j_;
    std::vector<int> rows_;
};

/// A power product of variables; exponents are always positive.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    explicit Monomial(const Variable& v, int exponent = 1) {
        if (exponent > 0) factors_.emplace_back(v, exponent);
    }

    [[nodiscard]] const std::vector<Factor>& factors() const noexcept { return factors_; }
    [[nodiscard]] bool is_one() const noexcept { return factors_.empty(); }

    [[nodiscard]] int degree(VarKind kind) const noexcept {
        int d = 0;
        for (const auto& [v, e] : factors_) {
            if (v.kind() == kind) d += e;
        }
        return d;
    }
    [[nodiscard]] int total_degree() const noexcept {
        int d = 0;
        for (const auto& f : factors_) d += f.second;
        return d;
    }
    [[nodiscard]] int exponent(const Variable& v) const {
        for (const auto& [w, e] : factors_) {
            if (w == v) return e;
        }
        return 0;
    }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        Monomial out;
        out.factors_.reserve(x.factors_.size() + y.factors_.size());
        auto a = x.factors_.begin();
        auto b = y.factors_.begin();
        while (a != x.factors_.end() && b != y.factors_.end()) {
            if (a->first < b->first) {
                out.factors_.push_back(*a++);
            } else if (b->first < a->first) {
                out.factors_.push_back(*b++);
            } else {
                out.factors_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.factors_.insert(out.factors_.end(), a, x.factors_.end());
        out.factors_.insert(out.factors_.end(), b, y.factors_.end());
        return out;
    }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Integer>;

    Polynomial() = default;
    Polynomial(const Variable& v) { terms_.emplace(Monomial(v), Integer(1)); }  // NOLINT
    Polynomial(const Monomial& m, Integer c = 1) {
        if (c != 0) terms_.emplace(m, std::move(c));
    }

    static Polynomial constant(Integer c) { return Polynomial(Monomial(), std::move(c)); }
    static Polynomial one() { return constant(1); }
    static Polynomial plucker(const Diagram& d) { return Variable::plucker(d); }
    static Polynomial torus(int i, int j) { return Variable::torus(i, j); }
    static Polynomial quantum() { return Variable::quantum(); }

    [[nodiscard]] const TermMap& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of m, zero when absent.
    [[nodiscard]] Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    [[nodiscard]] bool contains_kind(VarKind kind) const {
        for (const auto& [m, c] : terms_) {
            if (m.degree(kind) > 0) return true;
        }
        return false;
    }

    Polynomial& add_term(const Monomial& m, const Integer& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }

    friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
    friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
    friend Polynomial operator-(Polynomial x) {
        for (auto& [m, c] : x.terms_) c = -c;
        return x;
    }
    friend Polynomial operator*(const Polynomial& x, const Polynomial& y) {
        Polynomial out;
        for (const auto& [mx, cx] : x.terms_) {
            for (const auto& [my, cy] : y.terms_) {
                out.add_term(mx * my, cx * cy);
            }
        }
        return out;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Multiplies every term by the monomial m.
    [[nodiscard]] Polynomial times(const Monomial& m) const {
        Polynomial out;
        for (const auto& [mx, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mx * m, c);
        return out;
    }

    [[nodiscard]] Polynomial pow(int e) const {
        Polynomial out = one();
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return out;
    }

    /// Replaces each variable by a polynomial; powers are computed once per variable.
    [[nodiscard]] Polynomial substitute(const std::function<Polynomial(const Variable&)>& image) const {
        std::map<Variable, std::map<int, Polynomial>> cache;
        auto power = [&](const Variable& v, int e) -> const Polynomial& {
            auto& slot = cache[v];
            auto it = slot.find(e);
            if (it == slot.end()) it = slot.emplace(e, image(v).pow(e)).first;
            return it->second;
        };
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(c);
            for (const auto& [v, e] : m.factors()) t *= power(v, e);
            out += t;
        }
        return out;
    }

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] std::string to_latex() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;

private:
    TermMap terms_;
};

/// Common Pluecker degree of a polynomial homogeneous in Pluecker variables.
[[nodiscard]] inline int degree_in_pluckers(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::domain_error("the zero polynomial has no Pluecker degree");
    }
    std::optional<int> deg;
    for (const auto& [m, c] : p.terms()) {
        const int d = m.degree(VarKind::Plucker);
        if (deg && *deg != d) {
            throw std::domain_error("polynomial is not homogeneous in Pluecker variables");
        }
        deg = d;
    }
    return *deg;
}

/// A quotient of polynomials, never reduced. Equality is by cross-multiplication.
struct RationalExpression {
    Polynomial numerator;
    Polynomial denominator;

    RationalExpression(Polynomial num, Polynomial den)
        : numerator(std::move(num)), denominator(std::move(den)) {
        if (denominator.is_zero()) {
            throw std::domain_error("rational expression with zero denominator");
        }
    }

    friend RationalExpression operator+(const RationalExpression& x, const RationalExpression& y) {
        if (x.denominator == y.denominator) {
            return {x.numerator + y.numerator, x.denominator};
        }
        return {x.numerator * y.denominator + y.numerator * x.denominator,
                x.denominator * y.denominator};
    }
};

[[nodiscard]] inline bool rational_equals(const RationalExpression& f, const RationalExpression& g) {
    return f.numerator * g.denominator == g.numerator * f.denominator;
}

namespace detail {

inline std::string monomial_text(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        if (!s.empty()) s += '*';
        s += v.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string monomial_latex(const Monomial& m) {
    std::string s;
    for (const auto& [v, e] : m.factors()) {
        s += v.latex();
        if (e != 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

template <class RenderMonomial>
std::string render_terms(const Polynomial::TermMap& terms, RenderMonomial&& render, const char* times) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (first) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (m.is_one()) {
            s += mag.str();
        } else {
            if (mag != 1) s += mag.str() + times;
            s += render(m);
        }
    }
    return s;
}

}  // namespace detail

/// e.g. `a[5,1]*a[3,1] + 2*a[5,3]^2 - q`.
inline std::string Polynomial::to_text() const {
    return detail::render_terms(terms_, detail::monomial_text, "*");
}

inline std::string Polynomial::to_latex() const {
    return detail::render_terms(terms_, detail::monomial_latex, " ");
}

/// Array of {"coefficient", "exponents"} records in canonical term order.
/// Coefficients that fit in 64 bits are JSON integers, others decimal strings.
inline nlohmann::ordered_json Polynomial::to_json() const {
    auto out = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
        nlohmann::ordered_json rec;
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
            rec["coefficient"] = c.convert_to<std::int64_t>();
        } else {
            rec["coefficient"] = c.str();
        }
        auto ex = nlohmann::ordered_json::object();
        for (const auto& [v, e] : m.factors()) ex[v.name()] = e;
        rec["exponents"] = std::move(ex);
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace ogmirror
