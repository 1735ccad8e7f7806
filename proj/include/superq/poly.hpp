#pragma once

// Sparse multivariate polynomials with Scalar coefficients. Variables are named
// (b1, c3, t2, ...); a monomial maps variable name -> positive exponent.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "superq/error.hpp"
#include "superq/scalar.hpp"

namespace superq {

using Monomial = std::map<std::string, unsigned>;
using Assignment = std::map<std::string, Scalar>;

namespace detail {

inline unsigned total_degree(const Monomial& m)
{
    unsigned d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

// Lexicographic monomial order with variables ordered by name (b1 > b2 > c3 ...).
// Returns <0, 0, >0.
inline int lex_compare(const Monomial& a, const Monomial& b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) return 1;
        if (ia == a.end() || ib->first < ia->first) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (const auto& [v, e] : b) r[v] += e;
    return r;
}

inline std::optional<Monomial> monomial_quotient(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (const auto& [v, e] : b) {
        auto it = r.find(v);
        if (it == r.end() || it->second < e) return std::nullopt;
        it->second -= e;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

} // namespace detail

class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c) // NOLINT: constants embed implicitly
    {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    Poly(int c) : Poly(Scalar(c)) {} // NOLINT

    static Poly var(const std::string& name)
    {
        Poly p;
        p.terms_.emplace(Monomial{{name, 1u}}, Scalar(1));
        return p;
    }

    static Poly term(const Scalar& c, Monomial m)
    {
        Poly p;
        if (!c.is_zero()) {
            for (auto it = m.begin(); it != m.end();)
                it = it->second == 0 ? m.erase(it) : std::next(it);
            p.terms_.emplace(std::move(m), c);
        }
        return p;
    }

    const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept
    {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Scalar constant_term() const
    {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    std::set<std::string> variables() const
    {
        std::set<std::string> vs;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m) vs.insert(v);
        return vs;
    }

    unsigned degree() const
    {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, detail::total_degree(m));
        return d;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Poly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(detail::monomial_product(ma, mb), ca * cb);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly pow(unsigned k) const
    {
        Poly r(1);
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// Full evaluation. Throws if a variable of p has no value.
    Scalar eval(const Assignment& values) const
    {
        Scalar total;
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) throw Error("missing value for parameter '" + v + "'");
                for (unsigned k = 0; k < e; ++k) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    /// Partial substitution of polynomial values for some variables.
    Poly substitute(const std::map<std::string, Poly>& values) const
    {
        Poly total;
        for (const auto& [m, c] : terms_) {
            Poly t(c);
            Monomial rest;
            for (const auto& [v, e] : m) {
                auto it = values.find(v);
                if (it == values.end()) {
                    rest[v] = e;
                    continue;
                }
                t *= it->second.pow(e);
            }
            total += t * Poly::term(Scalar(1), rest);
        }
        return total;
    }

    Poly substitute(const Assignment& values) const
    {
        std::map<std::string, Poly> pv;
        for (const auto& [k, v] : values) pv.emplace(k, Poly(v));
        return substitute(pv);
    }

    Poly rename(const std::map<std::string, std::string>& names) const
    {
        std::map<std::string, Poly> pv;
        for (const auto& [k, v] : names) pv.emplace(k, Poly::var(v));
        return substitute(pv);
    }

    /// Leading term under lex order on variable names.
    std::pair<Monomial, Scalar> leading_term() const
    {
        if (is_zero()) throw Error("leading term of zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (detail::lex_compare(it->first, best->first) > 0) best = it;
        return *best;
    }

    /// Exact quotient p / q, or nullopt when q does not divide p.
    std::optional<Poly> divide_exact(const Poly& q) const
    {
        if (q.is_zero()) throw Error("polynomial division by zero");
        auto [lm_q, lc_q] = q.leading_term();
        Poly rem = *this;
        Poly quot;
        while (!rem.is_zero()) {
            auto [lm, lc] = rem.leading_term();
            auto m = detail::monomial_quotient(lm, lm_q);
            if (!m) return std::nullopt;
            Poly t = Poly::term(lc / lc_q, *m);
            quot += t;
            rem -= t * q;
        }
        return quot;
    }

    /// Human-readable form, terms sorted by descending degree then lex order.
    std::string str() const
    {
        if (is_zero()) return "0";
        std::vector<std::pair<Monomial, Scalar>> ts(terms_.begin(), terms_.end());
        std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            unsigned da = detail::total_degree(a.first), db = detail::total_degree(b.first);
            if (da != db) return da > db;
            return detail::lex_compare(a.first, b.first) > 0;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : ts) {
            std::string coeff = c.str();
            bool negative = c.is_rational() && sgn(c.rational_part()) < 0;
            if (!c.is_rational()) coeff = "(" + coeff + ")";
            if (!first) os << (negative ? " - " : " + ");
            else if (negative) os << "-";
            if (negative) coeff = (-c).str();
            first = false;
            bool unit = coeff == "1" && !m.empty();
            if (!unit) os << coeff;
            bool need_star = !unit;
            for (const auto& [v, e] : m) {
                if (need_star) os << "*";
                os << v;
                if (e > 1) os << "^" << e;
                need_star = true;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    void add_term(const Monomial& m, const Scalar& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Monomial, Scalar> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

} // namespace superq
