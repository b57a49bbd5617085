#ifndef BERGE_RATIONAL_HPP
#define BERGE_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace berge {

// Exact rational arithmetic on 64-bit integers.  Average degrees, density
// bounds and inequality ledgers are all compared exactly; floating point
// would corrupt the equality analysis that drives the extremal structure
// checks.  Magnitudes stay tiny at desk scale; intermediate products use
// 128-bit to be safe.
class Rational {
public:
    constexpr Rational() = default;
    Rational(long long numerator, long long denominator) { assign(numerator, denominator); }
    // intentional implicit: integers are rationals throughout the ledgers
    Rational(long long value) : num_(value), den_(1) {}   // NOLINT
    Rational(int value) : num_(value), den_(1) {}         // NOLINT

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(cross(a.num_, b.den_) + cross(b.num_, a.den_), a.den_ * b.den_, from_i128{});
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(cross(a.num_, b.den_) - cross(b.num_, a.den_), a.den_ * b.den_, from_i128{});
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(static_cast<__int128>(a.num_) * b.num_,
                        static_cast<__int128>(a.den_) * b.den_, from_i128{});
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return Rational(static_cast<__int128>(a.num_) * b.den_,
                        static_cast<__int128>(a.den_) * b.num_, from_i128{});
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cross(a.num_, b.den_) < cross(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct from_i128 {};
    Rational(__int128 n, __int128 d, from_i128) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = static_cast<long long>(n);
        den_ = static_cast<long long>(d);
    }
    void assign(long long n, long long d) { *this = Rational(static_cast<__int128>(n), static_cast<__int128>(d), from_i128{}); }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }
    static __int128 cross(long long a, long long b) {
        return static_cast<__int128>(a) * b;
    }

    long long num_{0};
    long long den_{1};
};

} // namespace berge

#endif
