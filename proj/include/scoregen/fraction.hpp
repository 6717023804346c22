#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "scoregen/error.hpp"

namespace scoregen {

// Exact rational arithmetic for quarter-length durations and offsets.
// Always normalized: den > 0, gcd(|num|, den) = 1.
class Fraction {
public:
    constexpr Fraction() = default;
    constexpr Fraction(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
    Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw ValidationError("fraction with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_integer() const { return den_ == 1; }

    Fraction operator+(const Fraction& o) const {
        return from_wide(wide(num_) * o.den_ + wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Fraction operator-(const Fraction& o) const {
        return from_wide(wide(num_) * o.den_ - wide(o.num_) * den_, wide(den_) * o.den_);
    }
    Fraction operator*(const Fraction& o) const {
        return from_wide(wide(num_) * o.num_, wide(den_) * o.den_);
    }
    Fraction operator/(const Fraction& o) const {
        if (o.num_ == 0) throw NumericError("fraction division by zero");
        return from_wide(wide(num_) * o.den_, wide(den_) * o.num_);
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }

    bool operator==(const Fraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    std::strong_ordering operator<=>(const Fraction& o) const {
        return wide(num_) * o.den_ <=> wide(o.num_) * den_;
    }

    // "3/2" for non-integers, plain "3" otherwise.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "3", "3/2" and decimal forms like "0.5".
    static Fraction parse(std::string_view text);

private:
    using wide = __int128;

    static Fraction from_wide(wide num, wide den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        wide g = gcd_wide(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr wide lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi)
            throw NumericError("fraction overflow");
        Fraction f;
        f.num_ = static_cast<std::int64_t>(num);
        f.den_ = static_cast<std::int64_t>(den);
        return f;
    }

    static wide gcd_wide(wide a, wide b) {
        while (b != 0) {
            wide t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Fraction Fraction::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty fraction");
    auto parse_int = [](std::string_view s) -> std::int64_t {
        if (s.empty()) throw ParseError("empty integer in fraction");
        bool neg = s.front() == '-';
        if (neg || s.front() == '+') s.remove_prefix(1);
        if (s.empty()) throw ParseError("sign without digits in fraction");
        std::int64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw ParseError(std::string("bad digit in fraction: '") + c + "'");
            v = v * 10 + (c - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        std::int64_t n = parse_int(text.substr(0, slash));
        std::int64_t d = parse_int(text.substr(slash + 1));
        if (d == 0) throw ParseError("fraction with zero denominator");
        return Fraction(n, d);
    }
    auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (fp.size() > 9) throw ParseError("too many decimal digits in fraction");
        bool neg = !ip.empty() && ip.front() == '-';
        std::int64_t whole = ip.empty() || ip == "-" || ip == "+" ? 0 : parse_int(ip);
        if (whole < 0) whole = -whole;
        std::int64_t den = 1;
        std::int64_t frac = 0;
        for (char c : fp) {
            if (c < '0' || c > '9') throw ParseError(std::string("bad digit in fraction: '") + c + "'");
            frac = frac * 10 + (c - '0');
            den *= 10;
        }
        std::int64_t num = whole * den + frac;
        return Fraction(neg ? -num : num, den);
    }
    return Fraction(parse_int(text));
}

}  // namespace scoregen
