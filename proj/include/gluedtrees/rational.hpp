// rational.hpp — exact fractions over __int128, for identity checks and
// enumeration results. Values are kept reduced; operands are sized so that
// cross products fit in 128 bits (denominators stay below 2^62).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gluedtrees {

class Fraction {
public:
    constexpr Fraction() = default;
    Fraction(long long num, long long den = 1) : n_(num), d_(den) { normalize(); }

    // 2^k, k in [-62, 62]
    static Fraction pow2(int k) {
        if (k < -62 || k > 62) throw std::domain_error("Fraction::pow2 exponent out of range");
        Fraction f;
        if (k >= 0) {
            f.n_ = __int128(1) << k;
            f.d_ = 1;
        } else {
            f.n_ = 1;
            f.d_ = __int128(1) << (-k);
        }
        return f;
    }

    long long num() const { return to_ll(n_); }
    long long den() const { return to_ll(d_); }
    double to_double() const { return double(n_) / double(d_); }
    bool is_zero() const { return n_ == 0; }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return make(a.n_ * b.d_ + b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return make(a.n_ * b.d_ - b.n_ * a.d_, a.d_ * b.d_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return make(a.n_ * b.n_, a.d_ * b.d_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.n_ == 0) throw std::domain_error("Fraction division by zero");
        return make(a.n_ * b.d_, a.d_ * b.n_);
    }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Fraction& a, const Fraction& b) { return !(a == b); }
    friend bool operator<(const Fraction& a, const Fraction& b) { return a.n_ * b.d_ < b.n_ * a.d_; }
    friend bool operator<=(const Fraction& a, const Fraction& b) { return a.n_ * b.d_ <= b.n_ * a.d_; }
    friend bool operator>(const Fraction& a, const Fraction& b) { return b < a; }
    friend bool operator>=(const Fraction& a, const Fraction& b) { return b <= a; }

    std::string str() const { return std::to_string(num()) + "/" + std::to_string(den()); }

private:
    __int128 n_ = 0;
    __int128 d_ = 1;

    static Fraction make(__int128 n, __int128 d) {
        Fraction f;
        f.n_ = n;
        f.d_ = d;
        f.normalize();
        return f;
    }

    static __int128 iabs(__int128 x) { return x < 0 ? -x : x; }

    static __int128 gcd128(__int128 a, __int128 b) {
        a = iabs(a);
        b = iabs(b);
        while (b != 0) {
            const __int128 r = a % b;
            a = b;
            b = r;
        }
        return a;
    }

    static long long to_ll(__int128 x) {
        if (x > __int128(INT64_MAX) || x < __int128(INT64_MIN))
            throw std::overflow_error("Fraction component exceeds 64 bits");
        return static_cast<long long>(x);
    }

    void normalize() {
        if (d_ == 0) throw std::domain_error("Fraction with zero denominator");
        if (d_ < 0) {
            d_ = -d_;
            n_ = -n_;
        }
        if (n_ == 0) {
            d_ = 1;
            return;
        }
        const __int128 g = gcd128(n_, d_);
        n_ /= g;
        d_ /= g;
        // operands must stay small enough that cross products fit __int128
        if (iabs(n_) >= (__int128(1) << 62) || d_ >= (__int128(1) << 62))
            throw std::overflow_error("Fraction out of supported range");
    }
};

}  // namespace gluedtrees
