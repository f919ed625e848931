#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace starlock {

// Exact rational number. Always stored reduced with positive denominator;
// zero is 0/1. The only coefficient domain in this library.
class Ratio {
public:
    Ratio() : v_(0) {}
    Ratio(long n) : v_(n) {}
    Ratio(long num, long den);
    explicit Ratio(mpq_class v);
    explicit Ratio(const mpz_class& n) : v_(n) {}

    // Parses "p" or "p/q" with optional leading sign.
    static Ratio parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const;

    Ratio operator-() const { return Ratio(mpq_class(-v_)); }
    Ratio& operator+=(const Ratio& o) { v_ += o.v_; return *this; }
    Ratio& operator-=(const Ratio& o) { v_ -= o.v_; return *this; }
    Ratio& operator*=(const Ratio& o) { v_ *= o.v_; return *this; }
    Ratio& operator/=(const Ratio& o);

    friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
    friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
    friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
    friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return a.v_ != b.v_; }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return a.v_ >= b.v_; }

    Ratio inv() const;
    Ratio pow(long e) const;  // integer exponent, e < 0 allowed for nonzero values
    Ratio abs() const { return Ratio(mpq_class(::abs(v_))); }

    // Exact rational n-th root if one exists.
    bool nth_root(long n, Ratio& out) const;

private:
    mpq_class v_;  // canonical at all times
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

}  // namespace starlock
