#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alpert/rational.hpp"

namespace alpert {

// Multi-index exponent vector; represents the monic monomial x^alpha.
struct Monomial {
    std::vector<int> exp;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exp(std::move(e)) {
        for (int a : exp)
            if (a < 0) throw std::invalid_argument("Monomial: negative exponent");
    }
    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial var(int nvars, int i, int e = 1) {
        std::vector<int> v(nvars, 0);
        v.at(i) = e;
        return Monomial(std::move(v));
    }

    int nvars() const { return static_cast<int>(exp.size()); }
    int degree() const {
        int d = 0;
        for (int a : exp) d += a;
        return d;
    }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& v) const {
        if (v.nvars() != nvars()) throw std::invalid_argument("divides: dimension mismatch");
        for (int i = 0; i < nvars(); ++i)
            if (exp[i] > v.exp[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& o) const {
        if (o.nvars() != nvars()) throw std::invalid_argument("monomial mul: dimension mismatch");
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) r.exp[i] += o.exp[i];
        return r;
    }

    // this / d, assuming d divides this.
    Monomial quotient(const Monomial& d) const {
        Monomial r = *this;
        for (int i = 0; i < nvars(); ++i) {
            r.exp[i] -= d.exp[i];
            if (r.exp[i] < 0) throw std::invalid_argument("quotient: not divisible");
        }
        return r;
    }

    // Bitmask of variables with positive exponent (nvars <= 16 in practice).
    unsigned support_mask() const {
        unsigned m = 0;
        for (int i = 0; i < nvars(); ++i)
            if (exp[i] > 0) m |= 1u << i;
        return m;
    }

    bool operator==(const Monomial&) const = default;
    // Container ordering only; monomial-order comparisons go through MonomialOrder.
    auto operator<=>(const Monomial&) const = default;
};

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw std::invalid_argument("lcm: dimension mismatch");
    Monomial r = u;
    for (int i = 0; i < u.nvars(); ++i) r.exp[i] = std::max(u.exp[i], v.exp[i]);
    return r;
}

enum class OrderKind { grlex, grevlex };

// Graded monomial orders with the fixed tie-break x1 > x2 > ... > xn.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int nvars = 0;

    MonomialOrder() = default;
    MonomialOrder(OrderKind kind_, int nvars_) : kind(kind_), nvars(nvars_) {
        if (nvars < 1) throw std::invalid_argument("MonomialOrder: nvars < 1");
    }

    bool is_graded() const { return true; }

    // -1 if u < v, 0 if equal, +1 if u > v.
    int compare(const Monomial& u, const Monomial& v) const {
        if (u.nvars() != nvars || v.nvars() != nvars)
            throw std::invalid_argument("compare: dimension mismatch");
        int du = u.degree(), dv = v.degree();
        if (du != dv) return du < dv ? -1 : 1;
        if (kind == OrderKind::grlex) {
            for (int i = 0; i < nvars; ++i)
                if (u.exp[i] != v.exp[i]) return u.exp[i] < v.exp[i] ? -1 : 1;
        } else {
            // grevlex: at the last differing variable the smaller exponent wins
            for (int i = nvars - 1; i >= 0; --i)
                if (u.exp[i] != v.exp[i]) return u.exp[i] < v.exp[i] ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }

    bool operator==(const MonomialOrder&) const = default;
};

inline std::string order_name(OrderKind k) {
    return k == OrderKind::grlex ? "grlex" : "grevlex";
}

inline OrderKind parse_order_kind(const std::string& s) {
    if (s == "grlex") return OrderKind::grlex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial order: '" + s + "'");
}

namespace detail {
template <class T> struct coeff_traits;
template <> struct coeff_traits<Rational> {
    static Rational from_rational(const Rational& r) { return r; }
    static bool is_zero(const Rational& c) { return c == 0; }
    static std::string to_string(const Rational& c) { return format_rational(c); }
};
template <> struct coeff_traits<double> {
    static double from_rational(const Rational& r) { return to_double(r); }
    static bool is_zero(double c) { return c == 0.0; }
    static std::string to_string(double c) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", c);
        return buf;
    }
};
} // namespace detail

// Multivariate polynomial in canonical form: a term map with no zero
// coefficients. T is Rational for all exact work, double for normalized
// basis functions.
template <class T>
class PolynomialT {
public:
    using Terms = std::map<Monomial, T>;

    PolynomialT() = default;
    explicit PolynomialT(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw std::invalid_argument("Polynomial: nvars < 1");
    }

    static PolynomialT zero(int nvars) { return PolynomialT(nvars); }
    static PolynomialT constant(int nvars, T c) {
        PolynomialT p(nvars);
        p.add_term(Monomial::one(nvars), std::move(c));
        return p;
    }
    static PolynomialT one(int nvars) { return constant(nvars, T(1)); }
    static PolynomialT variable(int nvars, int i) {
        PolynomialT p(nvars);
        p.add_term(Monomial::var(nvars, i), T(1));
        return p;
    }
    static PolynomialT term(int nvars, Monomial m, T c) {
        if (m.nvars() != nvars) throw std::invalid_argument("term: dimension mismatch");
        PolynomialT p(nvars);
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d; // -1 for the zero polynomial
    }

    void add_term(Monomial m, T c) {
        if (detail::coeff_traits<T>::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (detail::coeff_traits<T>::is_zero(it->second)) terms_.erase(it);
        }
    }

    T coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? T(0) : it->second;
    }

    PolynomialT& operator+=(const PolynomialT& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PolynomialT& operator-=(const PolynomialT& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    PolynomialT& operator*=(const T& s) {
        if (detail::coeff_traits<T>::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend PolynomialT operator+(PolynomialT a, const PolynomialT& b) { return a += b; }
    friend PolynomialT operator-(PolynomialT a, const PolynomialT& b) { return a -= b; }
    friend PolynomialT operator*(PolynomialT a, const T& s) { return a *= s; }
    friend PolynomialT operator*(const T& s, PolynomialT a) { return a *= s; }
    friend PolynomialT operator-(PolynomialT a) { return a *= T(-1); }

    friend PolynomialT operator*(const PolynomialT& a, const PolynomialT& b) {
        a.check_same(b);
        PolynomialT r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    bool operator==(const PolynomialT&) const = default;

    T evaluate(std::span<const T> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluate: dimension mismatch");
        T acc(0);
        for (const auto& [m, c] : terms_) {
            T t = c;
            for (int i = 0; i < nvars_; ++i)
                for (int e = 0; e < m.exp[i]; ++e) t *= point[i];
            acc += t;
        }
        return acc;
    }
    T evaluate(const std::vector<T>& point) const {
        return evaluate(std::span<const T>(point));
    }

    // Greatest monomial under the order, with its coefficient.
    std::pair<Monomial, T> leading_term(const MonomialOrder& order) const {
        if (terms_.empty()) throw std::domain_error("leading_term: zero polynomial");
        if (order.nvars != nvars_)
            throw std::invalid_argument("leading_term: dimension mismatch");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    Monomial leading_monomial(const MonomialOrder& order) const {
        return leading_term(order).first;
    }

    // Terms in descending order, coefficients as "p/q", variables as x1..xn.
    std::string to_string(const MonomialOrder& order) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, T>*> sorted;
        sorted.reserve(terms_.size());
        for (const auto& t : terms_) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(),
                  [&](auto* a, auto* b) { return order.less(b->first, a->first); });
        std::string out;
        bool first = true;
        for (auto* t : sorted) {
            std::string c = detail::coeff_traits<T>::to_string(t->second);
            bool neg = !c.empty() && c[0] == '-';
            if (neg) c.erase(0, 1);
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string mono = monomial_string(t->first);
            if (mono.empty()) {
                out += c;
            } else if (c == "1") {
                out += mono;
            } else {
                out += c + "*" + mono;
            }
        }
        return out;
    }
    std::string to_string() const {
        return to_string(MonomialOrder(OrderKind::grevlex, nvars_));
    }

    template <class U>
    PolynomialT<U> convert() const {
        PolynomialT<U> r(nvars_);
        for (const auto& [m, c] : terms_)
            r.add_term(m, detail::coeff_traits<U>::from_rational(c));
        return r;
    }

private:
    static std::string monomial_string(const Monomial& m) {
        std::string s;
        for (int i = 0; i < m.nvars(); ++i) {
            if (m.exp[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i + 1);
            if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
        }
        return s;
    }

    void check_same(const PolynomialT& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("polynomial: dimension mismatch");
    }

    int nvars_ = 1;
    Terms terms_;
};

using Polynomial  = PolynomialT<Rational>;
using PolynomialD = PolynomialT<double>;

// F^n_k: all monomials in n variables of degree < k, ascending in the order.
inline std::vector<Monomial> f_n_k(int n, int k, const MonomialOrder& order) {
    if (n < 1) throw std::invalid_argument("f_n_k: n < 1");
    if (k < 0) throw std::invalid_argument("f_n_k: k < 0");
    if (order.nvars != n) throw std::invalid_argument("f_n_k: order dimension mismatch");
    std::vector<Monomial> out;
    std::vector<int> exp(n, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == n) {
            out.push_back(Monomial(exp));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exp[var] = e;
            self(self, var + 1, remaining - e);
        }
        exp[var] = 0;
    };
    if (k > 0) rec(rec, 0, k - 1);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });
    return out;
}

inline std::vector<Monomial> f_n_k(int n, int k) {
    return f_n_k(n, k, MonomialOrder(OrderKind::grevlex, n));
}

namespace detail {

// Recursive-descent parser for the term-sum format "1/2*x1^2 - x2 + 3".
class PolyParser {
public:
    PolyParser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    Polynomial parse() {
        Polynomial p(nvars_);
        skip_ws();
        bool negative = consume_sign();
        p += parse_term(negative);
        skip_ws();
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c != '+' && c != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            p += parse_term(c == '-');
            skip_ws();
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at position " +
                                    std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool consume_sign() {
        bool neg = false;
        while (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            if (s_[pos_] == '-') neg = !neg;
            ++pos_;
            skip_ws();
        }
        return neg;
    }

    Integer parse_uint() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Integer(s_.substr(start, pos_ - start));
    }

    // term := factor ('*' factor)* ; factor := rational | var('^'uint)?
    Polynomial parse_term(bool negative) {
        Rational coeff = negative ? Rational(-1) : Rational(1);
        Monomial mono = Monomial::one(nvars_);
        bool any = false;
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Integer num = parse_uint();
                Integer den(1);
                if (pos_ < s_.size() && s_[pos_] == '/') {
                    ++pos_;
                    den = parse_uint();
                    if (den == 0) fail("zero denominator");
                }
                coeff *= Rational(num, den);
                any = true;
            } else if (pos_ < s_.size() && s_[pos_] == 'x') {
                ++pos_;
                Integer idx = parse_uint();
                if (idx < 1 || idx > nvars_) fail("variable index out of range");
                int e = 1;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '^') {
                    ++pos_;
                    skip_ws();
                    Integer ei = parse_uint();
                    if (ei > 1000) fail("exponent too large");
                    e = ei.convert_to<int>();
                }
                mono = mono * Monomial::var(nvars_, idx.convert_to<int>() - 1, e);
                any = true;
            } else {
                fail("expected coefficient or variable");
            }
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any) fail("empty term");
        return Polynomial::term(nvars_, std::move(mono), std::move(coeff));
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const std::string& text, int nvars) {
    return detail::PolyParser(text, nvars).parse();
}

} // namespace alpert
