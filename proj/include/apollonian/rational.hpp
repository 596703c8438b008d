#pragma once

#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>

namespace apollonian {

// Exact rational on int64.  Denominators stay tiny here (window corners,
// circle centres z/b, inverse Gram denominators dividing 8), so int64 is
// comfortable; normalization keeps den > 0 and gcd(num, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    constexpr Rational() = default;
    constexpr Rational(long long n) : num(n), den(1) {}
    constexpr Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    constexpr void normalize() {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;

    constexpr bool is_zero() const { return num == 0; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

constexpr Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
constexpr Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
constexpr Rational operator-(Rational a) { return {-a.num, a.den}; }
constexpr Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
constexpr Rational operator/(Rational a, Rational b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return {a.num * b.den, a.den * b.num};
}

constexpr std::strong_ordering operator<=>(Rational a, Rational b) {
    return a.num * b.den <=> b.num * a.den;
}

constexpr Rational rat_abs(Rational a) { return a.num < 0 ? -a : a; }
constexpr Rational rat_max(Rational a, Rational b) { return a < b ? b : a; }
constexpr Rational rat_min(Rational a, Rational b) { return a < b ? a : b; }

inline std::string to_string(Rational a) {
    if (a.den == 1) return std::to_string(a.num);
    return std::to_string(a.num) + "/" + std::to_string(a.den);
}

// Axis-aligned closed rectangle with rational corners, x0 < x1, y0 < y1.
struct RationalRect {
    Rational x0, y0, x1, y1;

    constexpr bool valid() const { return x0 < x1 && y0 < y1; }

    constexpr RationalRect inflated(Rational d) const {
        return {x0 - d, y0 - d, x1 + d, y1 + d};
    }

    constexpr bool contains(Rational x, Rational y) const {
        return x0 <= x && x <= x1 && y0 <= y && y <= y1;
    }
};

// Squared distance from a point to a closed rectangle (0 if inside).
constexpr Rational dist2_point_rect(Rational x, Rational y, const RationalRect& r) {
    Rational dx = rat_max(rat_max(r.x0 - x, Rational(0)), x - r.x1);
    Rational dy = rat_max(rat_max(r.y0 - y, Rational(0)), y - r.y1);
    return dx * dx + dy * dy;
}

// Squared distance from a point to the farthest rectangle corner.
constexpr Rational far_dist2_point_rect(Rational x, Rational y, const RationalRect& r) {
    Rational dx = rat_max(rat_abs(x - r.x0), rat_abs(x - r.x1));
    Rational dy = rat_max(rat_abs(y - r.y0), rat_abs(y - r.y1));
    return dx * dx + dy * dy;
}

}  // namespace apollonian
