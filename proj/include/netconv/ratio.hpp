#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace netconv {

// Exact rational used for counting ratios |A n D_b| / |D_b|.  Counts at desk
// scale stay far below 2^31, so plain int64 cross-multiplication is exact.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Ratio() = default;
    Ratio(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        normalize();
    }

    void normalize() {
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

    bool operator==(const Ratio& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }
    bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Ratio& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Ratio& o) const { return o < *this; }
    bool operator>=(const Ratio& o) const { return o <= *this; }

    Ratio operator+(const Ratio& o) const { return Ratio(num * o.den + o.num * den, den * o.den); }
    Ratio operator-(const Ratio& o) const { return Ratio(num * o.den - o.num * den, den * o.den); }

    // 1 - r, for the complement identity.
    Ratio complement() const { return Ratio(den - num, den); }

    static Ratio zero() { return Ratio(0, 1); }
    static Ratio one() { return Ratio(1, 1); }
};

} // namespace netconv
