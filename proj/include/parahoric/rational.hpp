#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace parahoric {

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always stored normalized: gcd(num, den) = 1, den > 0.  Intermediate
/// products are carried in 128-bit arithmetic and an overflow_error is
/// thrown if a result does not fit back into 64 bits; stability margins
/// and Laurent coefficients at desk scale stay far below that.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1) {}
    Rational(long long n) noexcept : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(long n) noexcept : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(int n) noexcept : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    long long numerator() const noexcept { return num_; }
    long long denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return den_ == 1; }

    /// Parses "n", "n/d" or "-n/d"; throws invalid_argument on junk.
    static Rational from_string(const std::string& s);

    /// Renders "n" for integers, "n/d" otherwise.
    std::string str() const;

    long long floor() const noexcept {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }
    long long ceil() const noexcept {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ > 0) ++q;
        return q;
    }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        return assign_checked(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator-=(const Rational& o) {
        return assign_checked(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator*=(const Rational& o) {
        return assign_checked(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return assign_checked(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) noexcept { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) noexcept {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) noexcept { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) noexcept { return !(a < b); }

    /// Sign as -1, 0, +1.
    int sign() const noexcept { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    using i128 = __int128;

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Rational& assign_checked(i128 num, i128 den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 a = num < 0 ? -num : num;
        i128 g = gcd128(a, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = std::numeric_limits<long long>::min();
        constexpr i128 hi = std::numeric_limits<long long>::max();
        if (num < lo || num > hi || den > hi)
            throw std::overflow_error("Rational: 64-bit overflow");
        num_ = static_cast<long long>(num);
        den_ = static_cast<long long>(den);
        return *this;
    }

    static i128 gcd128(i128 a, i128 b) noexcept {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    long long num_;
    long long den_;
};

inline Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        std::size_t pos = 0;
        if (slash == std::string::npos) {
            long long n = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("");
            return Rational(n);
        }
        long long n = std::stoll(s.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("");
        long long d = std::stoll(s.substr(slash + 1), &pos);
        if (pos != s.size() - slash - 1) throw std::invalid_argument("");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("Rational: out of range \"" + s + "\"");
    }
}

inline std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace parahoric

namespace Eigen {

template <>
struct NumTraits<parahoric::Rational> : GenericNumTraits<parahoric::Rational> {
    using Real = parahoric::Rational;
    using NonInteger = parahoric::Rational;
    using Nested = parahoric::Rational;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 8,
        MulCost = 8,
    };
    static inline Real epsilon() { return parahoric::Rational(0); }
    static inline Real dummy_precision() { return parahoric::Rational(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
