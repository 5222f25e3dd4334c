#pragma once

/*
 * Exact rational numbers over arbitrary precision integers.
 *
 * A Rational is always stored reduced: gcd(|num|, den) = 1, den >= 1 and
 * zero is 0/1. Every operation is exact; nothing in this library rounds
 * except to_decimal(), which exists only for human-readable output.
 *
 * Canonical text form is "p/q", the sign carried by the numerator. The
 * parser also accepts a bare integer ("3", "-7", "+2").
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "sepcont/errors.hpp"

namespace sepcont {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {} // NOLINT: implicit by design of the numeric tower
    Rational(BigInt n) : num_(std::move(n)), den_(1) {} // NOLINT

    // p/q in lowest terms; q == 0 throws invalid_input.
    Rational(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }

    static Rational from_fraction(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return num_.sign(); }

    // Largest integer <= *this.
    BigInt floor() const {
        BigInt q, r;
        boost::multiprecision::divide_qr(num_, den_, q, r);
        if (r.sign() < 0)
            --q;
        return q;
    }

    Rational reciprocal() const {
        if (num_.is_zero())
            throw invalid_input("reciprocal of zero");
        return Rational(den_, num_);
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == o.den_) {
            num_ += o.num_;
            if (den_ != 1)
                reduce();
            return *this;
        }
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }

    Rational& operator-=(const Rational& o) {
        if (den_ == o.den_) {
            num_ -= o.num_;
            if (den_ != 1)
                reduce();
            return *this;
        }
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ *= o.den_;
        reduce();
        return *this;
    }

    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        if (den_ != 1)
            reduce();
        return *this;
    }

    Rational& operator/=(const Rational& o) {
        if (o.num_.is_zero())
            throw invalid_input("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c;
        if (a.den_ == b.den_)
            c = a.num_.compare(b.num_);
        else
            c = BigInt(a.num_ * b.den_).compare(b.num_ * a.den_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    std::string str() const { return num_.str() + "/" + den_.str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_.is_zero())
            throw invalid_input("zero denominator");
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        reduce();
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

// normalize(p, q): the reduced fraction p/q.
inline Rational normalize(const BigInt& p, const BigInt& q) { return Rational(p, q); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

} // namespace detail

// Accepts [+-]digits[/digits] with a positive denominator.
inline Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num_part = s;
    std::string_view den_part = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!detail::all_digits(num_part) || !detail::all_digits(den_part))
        throw invalid_input("malformed rational: '" + std::string(text) + "'");
    BigInt p{std::string(num_part)};
    BigInt q{std::string(den_part)};
    if (q.is_zero())
        throw invalid_input("zero denominator: '" + std::string(text) + "'");
    if (negative)
        p = -p;
    return Rational(std::move(p), std::move(q));
}

inline std::string to_string(const Rational& r) { return r.str(); }

// Decimal approximation with a fixed number of significant digits, rounded
// to nearest (ties to even). Plain notation for exponents in [-20, 20),
// scientific otherwise. Zero prints as "0".
inline std::string to_decimal(const Rational& r, int significant = 20) {
    if (significant < 1)
        throw invalid_input("significant digits must be positive");
    if (r.is_zero())
        return "0";
    BigInt n = boost::multiprecision::abs(r.num());
    const BigInt& d = r.den();

    auto pow10 = [](long e) {
        BigInt p = 1;
        for (long i = 0; i < e; ++i)
            p *= 10;
        return p;
    };

    // e = floor(log10(n/d)), starting from a digit-count estimate.
    long e = static_cast<long>(n.str().size()) - static_cast<long>(d.str().size());
    auto at_least = [&](long k) { // n/d >= 10^k
        return k >= 0 ? n >= d * pow10(k) : n * pow10(-k) >= d;
    };
    while (!at_least(e))
        --e;
    while (at_least(e + 1))
        ++e;

    long shift = significant - 1 - e;
    BigInt top = shift >= 0 ? BigInt(n * pow10(shift)) : n;
    BigInt bottom = shift >= 0 ? d : BigInt(d * pow10(-shift));
    BigInt q, rem;
    boost::multiprecision::divide_qr(top, bottom, q, rem);
    BigInt twice = rem * 2;
    if (twice > bottom || (twice == bottom && (q & 1) != 0))
        ++q;
    if (q == pow10(significant)) {
        q /= 10;
        ++e;
    }

    std::string digits = q.str();
    std::string out = r.sign() < 0 ? "-" : "";
    if (e >= 0 && e < 20) {
        if (e + 1 >= significant) {
            out += digits + std::string(static_cast<std::size_t>(e + 1 - significant), '0');
        } else {
            out += digits.substr(0, static_cast<std::size_t>(e + 1));
            out += '.';
            out += digits.substr(static_cast<std::size_t>(e + 1));
        }
    } else if (e < 0 && e >= -20) {
        out += "0.";
        out += std::string(static_cast<std::size_t>(-e - 1), '0');
        out += digits;
    } else {
        out += digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::string(e < 0 ? "-" : "+") + std::to_string(e < 0 ? -e : e);
    }
    return out;
}

} // namespace sepcont

template <>
struct std::hash<sepcont::Rational> {
    std::size_t operator()(const sepcont::Rational& r) const noexcept {
        std::size_t h = boost::multiprecision::hash_value(r.num());
        std::size_t k = boost::multiprecision::hash_value(r.den());
        return h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};
