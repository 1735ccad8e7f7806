#pragma once

// Exact arithmetic in Q(sqrt 2). A value is a + b*sqrt(2) with a, b arbitrary
// precision rationals kept in lowest terms, so equality is structural.

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "superq/error.hpp"

namespace superq {

using Rational = mpq_class;

namespace detail {

inline Rational make_rational(const mpz_class& num, const mpz_class& den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r)
{
    return r.get_str(10);
}

} // namespace detail

class Scalar {
public:
    Scalar() : rat_(0), sqrt2_(0) {}
    Scalar(long v) : rat_(v), sqrt2_(0) {}   // NOLINT: integers embed implicitly
    Scalar(int v) : rat_(v), sqrt2_(0) {}    // NOLINT
    explicit Scalar(Rational rat, Rational sqrt2 = Rational(0))
        : rat_(std::move(rat)), sqrt2_(std::move(sqrt2))
    {
        rat_.canonicalize();
        sqrt2_.canonicalize();
    }

    static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }
    static Scalar fraction(long num, long den)
    {
        if (den == 0) throw ParseError("zero denominator");
        return Scalar(detail::make_rational(num, den));
    }

    const Rational& rational_part() const noexcept { return rat_; }
    const Rational& sqrt2_part() const noexcept { return sqrt2_; }

    bool is_zero() const { return sgn(rat_) == 0 && sgn(sqrt2_) == 0; }
    bool is_rational() const { return sgn(sqrt2_) == 0; }
    bool is_one() const { return rat_ == 1 && sgn(sqrt2_) == 0; }

    Scalar operator-() const { return Scalar(Rational(-rat_), Rational(-sqrt2_)); }

    Scalar& operator+=(const Scalar& o)
    {
        rat_ += o.rat_;
        sqrt2_ += o.sqrt2_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o)
    {
        rat_ -= o.rat_;
        sqrt2_ -= o.sqrt2_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o)
    {
        if (o.is_rational() && is_rational()) {
            rat_ *= o.rat_;
            return *this;
        }
        Rational a = rat_ * o.rat_ + 2 * sqrt2_ * o.sqrt2_;
        Rational b = rat_ * o.sqrt2_ + sqrt2_ * o.rat_;
        rat_ = std::move(a);
        sqrt2_ = std::move(b);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.rat_ == b.rat_ && a.sqrt2_ == b.sqrt2_;
    }

    /// Total order on the representation (not the real order); used for sorting only.
    friend std::strong_ordering representation_order(const Scalar& a, const Scalar& b)
    {
        int c = cmp(a.rat_, b.rat_);
        if (c == 0) c = cmp(a.sqrt2_, b.sqrt2_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// (a - b sqrt2) / (a^2 - 2 b^2); the norm never vanishes for nonzero input over Q.
    Scalar inverse() const
    {
        if (is_zero()) throw Error("division by zero in Q(sqrt2)");
        if (is_rational()) return Scalar(Rational(1 / rat_));
        Rational norm = rat_ * rat_ - 2 * sqrt2_ * sqrt2_;
        return Scalar(Rational(rat_ / norm), Rational(-sqrt2_ / norm));
    }

    /// Text form following the grammar  S ::= R | R "+" R "√2" | R "√2".
    std::string str() const
    {
        if (is_rational()) return detail::rational_str(rat_);
        if (sgn(rat_) == 0) return detail::rational_str(sqrt2_) + "√2";
        return detail::rational_str(rat_) + "+" + detail::rational_str(sqrt2_) + "√2";
    }

    /// JSON-safe form: rat, or rat "+(" rat ")(s2)".
    std::string json_str() const
    {
        if (is_rational()) return detail::rational_str(rat_);
        return detail::rational_str(rat_) + "+(" + detail::rational_str(sqrt2_) + ")(s2)";
    }

    static Scalar parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    Rational rat_;
    Rational sqrt2_;
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text)
    {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    Scalar run()
    {
        if (s_.empty()) fail("empty literal");
        if (peek() == '(') {
            Rational r = paren_rational();
            expect_s2();
            finish();
            return Scalar(Rational(0), r);
        }
        Rational first = rational();
        if (at_end()) return Scalar(first);
        if (try_sqrt2()) {
            finish();
            return Scalar(Rational(0), first);
        }
        if (peek() != '+') fail("expected '+' or end of literal");
        ++pos_;
        Rational second;
        if (!at_end() && peek() == '(') {
            second = paren_rational();
            expect_s2();
        } else {
            second = rational();
            if (!try_sqrt2()) fail("expected sqrt2 marker after second rational");
        }
        finish();
        return Scalar(first, second);
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("malformed scalar literal '" + s_ + "': " + why);
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    void finish() const
    {
        if (!at_end()) fail("trailing characters");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return s_.substr(start, pos_ - start);
    }

    Rational rational()
    {
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            ++pos_;
        }
        mpz_class num(digits(), 10);
        mpz_class den(1);
        if (!at_end() && peek() == '/') {
            ++pos_;
            den = mpz_class(digits(), 10);
            if (den == 0) throw ParseError("zero denominator in scalar literal '" + s_ + "'");
        }
        if (negative) num = -num;
        return make_rational(num, den);
    }

    Rational paren_rational()
    {
        ++pos_; // '('
        Rational r = rational();
        if (at_end() || peek() != ')') fail("expected ')'");
        ++pos_;
        return r;
    }

    bool try_sqrt2()
    {
        static constexpr std::string_view kRadical = "√2";
        if (std::string_view(s_).substr(pos_).starts_with(kRadical)) {
            pos_ += kRadical.size();
            return true;
        }
        return false;
    }

    void expect_s2()
    {
        static constexpr std::string_view kMarker = "(s2)";
        if (!std::string_view(s_).substr(pos_).starts_with(kMarker)) fail("expected '(s2)'");
        pos_ += kMarker.size();
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Scalar Scalar::parse(std::string_view text)
{
    return detail::ScalarParser(text).run();
}

} // namespace superq
