#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gainspec {

// Exact rational p/q with q > 0, always reduced. Theorem bounds are kept in
// this form so that integer measurements (multiplicities, ranks) can be
// compared against them without any float tolerance.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// k <= p/q and friends, exact (denominators are positive).
inline bool int_leq(std::int64_t k, const Rational& r) {
    return static_cast<__int128>(k) * r.den() <= static_cast<__int128>(r.num());
}
inline bool int_geq(std::int64_t k, const Rational& r) {
    return static_cast<__int128>(k) * r.den() >= static_cast<__int128>(r.num());
}
inline bool int_eq(std::int64_t k, const Rational& r) {
    return static_cast<__int128>(k) * r.den() == static_cast<__int128>(r.num());
}

} // namespace gainspec
