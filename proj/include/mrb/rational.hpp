#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "mrb/errors.hpp"

namespace mrb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational coefficient field. Always reduced, denominator > 0,
// no rounding anywhere. Wraps boost's cpp_rational, which maintains the
// canonical form; the wrapper owns parsing and the p/q display format.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long long v) : v_(v) {}
    explicit Rational(BigInt v) : v_(std::move(v)) {}

    Rational(BigInt num, BigInt den) {
        if (den == 0) throw invalid_input_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        v_ = boost::multiprecision::cpp_rational(num, den);
    }

    // Accepts "p", "-p", "p/q" with optional sign on either part.
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos)
                return Rational(BigInt(std::string(text)));
            BigInt num{std::string(text.substr(0, slash))};
            BigInt den{std::string(text.substr(slash + 1))};
            return Rational(std::move(num), std::move(den));
        } catch (const std::exception&) {
            throw invalid_input_error("malformed rational literal: '" + std::string(text) + "'");
        }
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return v_ < 0; }

    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw invalid_input_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational pow(int e) const {
        if (e == 0) return Rational(1);
        if (e < 0) {
            if (is_zero()) throw invalid_input_error("zero to a negative power");
            return Rational(denominator(), numerator()).pow(-e);
        }
        Rational acc(1), base(*this);
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    // "p/q", with "/q" omitted for integers.
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt acc = 1;
    for (int i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1; // exact: product of j consecutive integers is divisible by j!
    }
    return acc;
}

} // namespace mrb
