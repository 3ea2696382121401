#pragma once

// Minimal exact rational type for the closed-form signature computations.
// Denominators stay positive and fractions are always normalized.

#include <numeric>
#include <stdexcept>

#include "mcg/surface.hpp"

namespace mcg {

struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n) {}
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                        checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return *this + Rational(-o.num, o.den);
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
    }

    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace mcg
