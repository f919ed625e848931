#include "starlock/ratio.hpp"

#include <ostream>
#include <stdexcept>

namespace starlock {

Ratio::Ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Ratio::Ratio(mpq_class v) : v_(std::move(v)) {
    if (v_.get_den() == 0) throw std::invalid_argument("Ratio: zero denominator");
    v_.canonicalize();
}

Ratio Ratio::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Ratio: empty string");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("Ratio: bad character in '" + s + "'");
    }
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("Ratio: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("Ratio: zero denominator in '" + s + "'");
    v.canonicalize();
    return Ratio(std::move(v));
}

std::string Ratio::str() const { return v_.get_str(); }

Ratio& Ratio::operator/=(const Ratio& o) {
    if (o.is_zero()) throw std::invalid_argument("Ratio: division by zero");
    v_ /= o.v_;
    return *this;
}

Ratio Ratio::inv() const {
    if (is_zero()) throw std::invalid_argument("Ratio: inverse of zero");
    return Ratio(mpq_class(1) / v_);
}

Ratio Ratio::pow(long e) const {
    if (e == 0) return Ratio(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Ratio: negative power of zero");
        return Ratio(0);
    }
    mpq_class base = e < 0 ? mpq_class(1) / v_ : v_;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), n);
    return Ratio(std::move(out));
}

bool Ratio::nth_root(long n, Ratio& out) const {
    if (n <= 0) throw std::invalid_argument("Ratio: nth_root needs n >= 1");
    if (n == 1) { out = *this; return true; }
    if (is_zero()) { out = Ratio(0); return true; }
    bool negative = sign() < 0;
    if (negative && n % 2 == 0) return false;
    mpz_class num = ::abs(numerator());
    mpz_class den = denominator();
    mpz_class rn, rd;
    int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
    int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(n));
    if (!exact_n || !exact_d) return false;
    mpq_class r(negative ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    out = Ratio(std::move(r));
    return true;
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

}  // namespace starlock
