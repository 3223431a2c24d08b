#pragma once

// Exact integers and rationals used for every distance and length.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace magh {

using Integer = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Rendered as "p/q", or "p" when the denominator is 1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(int value) : value_(static_cast<long>(value)) {}
    explicit Rational(Integer const& value) : value_(value) {}

    Rational(Integer const& num, Integer const& den)
    {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class value) : value_(std::move(value))
    {
        value_.canonicalize();
    }

    /// Parses "p", "-p", "p/q". Whitespace is not accepted.
    static Rational parse(std::string_view text)
    {
        auto const slash = text.find('/');
        auto const parse_int = [&](std::string_view s) {
            if (s.empty())
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
            if (i == s.size())
                throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9')
                    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
            std::string digits(s[0] == '+' ? s.substr(1) : s);
            return Integer(digits, 10);
        };
        if (slash == std::string_view::npos)
            return Rational(parse_int(text));
        auto const den = parse_int(text.substr(slash + 1));
        if (den <= 0)
            throw std::invalid_argument("rational denominator must be positive in '" +
                                        std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash)), den);
    }

    /// Parses a plain decimal literal such as "1.0471975" or "2e-3" exactly.
    static Rational parse_decimal(std::string_view text)
    {
        std::string s(text);
        if (s.empty())
            throw std::invalid_argument("empty decimal");
        long exponent = 0;
        auto const e = s.find_first_of("eE");
        if (e != std::string::npos) {
            try {
                exponent = std::stol(s.substr(e + 1));
            } catch (std::exception const&) {
                throw std::invalid_argument("malformed decimal '" + s + "'");
            }
            s.resize(e);
        }
        bool negative = false;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            negative = s[0] == '-';
            s.erase(0, 1);
        }
        std::string digits;
        bool seen_point = false, seen_digit = false;
        for (char c : s) {
            if (c == '.' && !seen_point) {
                seen_point = true;
            } else if (c >= '0' && c <= '9') {
                digits.push_back(c);
                seen_digit = true;
                if (seen_point)
                    --exponent;
            } else {
                throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
            }
        }
        if (!seen_digit)
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        Integer mantissa(digits, 10);
        if (negative)
            mantissa = -mantissa;
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
        return exponent < 0 ? Rational(mantissa, scale) : Rational(Integer(mantissa * scale));
    }

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    mpq_class const& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }

    std::string str() const
    {
        if (value_.get_den() == 1)
            return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    double to_double() const { return value_.get_d(); }

    Rational& operator+=(Rational const& o) { value_ += o.value_; return *this; }
    Rational& operator-=(Rational const& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(Rational const& o) { value_ *= o.value_; return *this; }

    friend Rational operator+(Rational a, Rational const& b) { return a += b; }
    friend Rational operator-(Rational a, Rational const& b) { return a -= b; }
    friend Rational operator*(Rational a, Rational const& b) { return a *= b; }
    friend Rational operator-(Rational const& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(Rational const& a, Rational const& b) { return a.value_ == b.value_; }
    friend bool operator!=(Rational const& a, Rational const& b) { return a.value_ != b.value_; }
    friend bool operator<(Rational const& a, Rational const& b) { return a.value_ < b.value_; }
    friend bool operator>(Rational const& a, Rational const& b) { return a.value_ > b.value_; }
    friend bool operator<=(Rational const& a, Rational const& b) { return a.value_ <= b.value_; }
    friend bool operator>=(Rational const& a, Rational const& b) { return a.value_ >= b.value_; }

private:
    mpq_class value_{0};
};

/// Rounds value·q to the nearest integer, ties toward zero, and returns it
/// as a multiple of 1/q.
inline Rational snap_to_grid(Rational const& value, Integer const& q)
{
    mpq_class scaled = value.raw() * mpq_class(q);
    Integer twice_num = 2 * scaled.get_num();
    Integer den = scaled.get_den();
    // nearest integer to num/den, ties toward zero: floor((2num + den - 1) / 2den) for nonneg
    Integer abs_twice = abs(twice_num);
    Integer rounded;
    mpz_cdiv_q(rounded.get_mpz_t(), Integer(abs_twice - den).get_mpz_t(), Integer(2 * den).get_mpz_t());
    if (abs_twice < den)
        rounded = 0;
    if (twice_num < 0)
        rounded = -rounded;
    return Rational(rounded, q);
}

} // namespace magh

template <>
struct std::hash<magh::Rational> {
    std::size_t operator()(magh::Rational const& r) const noexcept
    {
        auto const& q = r.raw();
        std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 1000003u;
        return h ^ (mpz_get_ui(q.get_den_mpz_t()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};
