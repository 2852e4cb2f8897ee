#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gainspec {

// A unit-modulus gain exp(i*pi*num/den), stored as the exact rational angle
// num/den in half-turns. Normal form: den >= 1, 0 <= num < 2*den,
// gcd(num, den) = 1 (num = 0 forces den = 1). All gain arithmetic is exact
// integer arithmetic on these angles, so equality tests against roots of
// unity (balance, cycle types) never involve a float tolerance.
class GainAngle {
public:
    GainAngle() : num_(0), den_(1) {}

    GainAngle(std::int64_t num, std::int64_t den) {
        if (den <= 0) throw std::invalid_argument("GainAngle: denominator must be positive");
        if (num == INT64_MIN || den > INT64_MAX / 2)
            throw std::overflow_error("GainAngle: angle out of range");
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num %= 2 * den;
        if (num < 0) num += 2 * den;
        if (num == 0) den = 1;
        num_ = num;
        den_ = den;
    }

    static GainAngle one() { return GainAngle(); }
    static GainAngle minus_one() { return GainAngle(1, 1); }
    static GainAngle imaginary_unit() { return GainAngle(1, 2); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    // exp(i*pi*num/den)
    std::complex<double> value() const {
        const double t = M_PI * static_cast<double>(num_) / static_cast<double>(den_);
        return {std::cos(t), std::sin(t)};
    }

    // Angle in [0, 2*pi).
    double radians() const {
        return M_PI * static_cast<double>(num_) / static_cast<double>(den_);
    }

    // Inverse gain; equals the complex conjugate on the unit circle.
    GainAngle conjugate() const { return GainAngle(-num_, den_); }

    // Gain product = angle sum.
    friend GainAngle operator*(const GainAngle& a, const GainAngle& b) {
        const __int128 num = static_cast<__int128>(a.num_) * b.den_ +
                             static_cast<__int128>(b.num_) * a.den_;
        const __int128 den = static_cast<__int128>(a.den_) * b.den_;
        __int128 g = gcd128(num < 0 ? -num : num, den);
        if (g == 0) g = 1;
        const __int128 rn = num / g, rd = den / g;
        if (rd > INT64_MAX || rn > INT64_MAX || rn < INT64_MIN)
            throw std::overflow_error("GainAngle: angle denominator overflow");
        return GainAngle(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd));
    }

    // Multiplication by -1 (half-turn).
    GainAngle negated() const { return *this * minus_one(); }

    bool is_one() const { return num_ == 0; }
    bool is_minus_one() const { return num_ == 1 && den_ == 1; }
    bool is_real() const { return den_ == 1; }

    // Exact sign of Re(value()): cos(pi*x) with x = num/den in [0, 2) is zero
    // iff x is 1/2 or 3/2, positive iff x < 1/2 or x > 3/2.
    int real_sign() const {
        const std::int64_t twice = 2 * num_;
        if (twice == den_ || twice == 3 * den_) return 0;
        if (twice < den_ || twice > 3 * den_) return 1;
        return -1;
    }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const GainAngle& a, const GainAngle& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const GainAngle& a, const GainAngle& b) { return !(a == b); }

private:
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { const __int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace gainspec
