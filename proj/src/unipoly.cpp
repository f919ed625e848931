#include "starlock/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace starlock {

UniPoly::UniPoly(std::vector<Ratio> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Ratio& c) { return UniPoly(std::vector<Ratio>{c}); }

UniPoly UniPoly::monomial(int deg, const Ratio& c) {
    std::vector<Ratio> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Ratio UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Ratio(0);
    return c_[i];
}

Ratio UniPoly::leading() const { return c_.empty() ? Ratio(0) : c_.back(); }

UniPoly UniPoly::operator-() const {
    std::vector<Ratio> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Ratio> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Ratio> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Ratio& s) const {
    if (s.is_zero()) return UniPoly();
    std::vector<Ratio> v(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("UniPoly: negative power");
    UniPoly r = constant(Ratio(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Ratio UniPoly::eval(const Ratio& x) const {
    Ratio v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Ratio> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Ratio(static_cast<long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return UniPoly();
    return scaled(leading().inv());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("UniPoly: division by zero polynomial");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly(), r};
    std::vector<Ratio> q(r.degree() - d.degree() + 1);
    Ratio lead_inv = d.leading().inv();
    while (!r.is_zero() && r.degree() >= d.degree()) {
        int k = r.degree() - d.degree();
        Ratio f = r.leading() * lead_inv;
        q[k] = f;
        for (int i = 0; i <= d.degree(); ++i) r.c_[k + i] -= f * d.c_[i];
        r.trim();
    }
    return {UniPoly(std::move(q)), r};
}

bool UniPoly::divisible_by(const UniPoly& d) const { return divmod(d).second.is_zero(); }

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Ratio c = c_[i];
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != Ratio(1)) os << c.str();
        if (i > 0) {
            if (c != Ratio(1)) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

UniPoly UniFactorization::expand() const {
    UniPoly p = UniPoly::constant(content);
    for (const auto& [f, m] : factors) p = p * f.pow(m);
    return p;
}

UniFactorization squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    UniFactorization out;
    out.content = p.leading();
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    // Yun over the rationals, all intermediate polynomials monic.
    UniPoly g = gcd(f, f.derivative());
    UniPoly b = f.divmod(g).first;
    UniPoly c = f.derivative().divmod(g).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) out.factors.emplace_back(a, i);
        b = b.divmod(a).first;
        c = d.divmod(a).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

// --- integer helpers for root finding and the Kronecker search ---

std::vector<mpz_class> to_integer_primitive(const UniPoly& p, Ratio* content) {
    mpz_class den_lcm = 1;
    for (const Ratio& c : p.coeffs()) {
        mpz_class d = c.denominator();
        den_lcm = den_lcm / ::gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> z(p.coeffs().size());
    mpz_class content_z = 0;
    for (size_t i = 0; i < z.size(); ++i) {
        mpq_class scaled = p.coeffs()[i].raw() * den_lcm;
        z[i] = scaled.get_num();
        content_z = ::gcd(content_z, z[i]);
    }
    if (content_z == 0) content_z = 1;
    if (z.back() < 0) content_z = -content_z;
    for (auto& v : z) v /= content_z;
    if (content) {
        mpq_class c(content_z, den_lcm);
        c.canonicalize();
        *content = Ratio(c);
    }
    return z;
}

mpz_class eval_int(const std::vector<mpz_class>& p, long x) {
    mpz_class v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

// All positive divisors; trial division is plenty for the coefficient
// heights that reach this code, and we refuse huge inputs instead of
// silently stalling.
std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    if (n == 0) throw std::invalid_argument("divisors of zero");
    if (n > mpz_class("1000000000000000000"))
        throw std::runtime_error("univariate_factor: coefficient too large to factor exactly");
    std::vector<std::pair<mpz_class, int>> primes;
    mpz_class m = n;
    for (mpz_class p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            primes.emplace_back(p, e);
        }
    }
    if (m > 1) primes.emplace_back(m, 1);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : primes) {
        size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Strips all rational roots of an integer-primitive polynomial, recording
// (root, multiplicity); the cofactor is returned monic over Q.
UniPoly strip_rational_roots(const UniPoly& monic_p, std::vector<std::pair<Ratio, int>>& roots) {
    UniPoly f = monic_p;
    // Root zero first.
    int zero_mult = 0;
    while (!f.is_zero() && f.coeff(0).is_zero() && f.degree() > 0) {
        std::vector<Ratio> v(f.coeffs().begin() + 1, f.coeffs().end());
        f = UniPoly(std::move(v));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Ratio(0), zero_mult);
    if (f.degree() < 1) return f;
    std::vector<mpz_class> z = to_integer_primitive(f, nullptr);
    std::vector<mpz_class> ps = positive_divisors(z.front());
    std::vector<mpz_class> qs = positive_divisors(z.back());
    std::vector<Ratio> candidates;
    for (const mpz_class& num : ps)
        for (const mpz_class& den : qs)
            if (::gcd(num, den) == 1) {
                mpq_class q1(num, den);
                q1.canonicalize();
                candidates.push_back(Ratio(q1));
                candidates.push_back(Ratio(mpq_class(-q1)));
            }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const Ratio& r : candidates) {
        if (f.degree() < 1) break;
        if (!f.eval(r).is_zero()) continue;
        UniPoly lin(std::vector<Ratio>{-r, Ratio(1)});
        int mult = 0;
        for (;;) {
            auto [q, rem] = f.divmod(lin);
            if (!rem.is_zero()) break;
            f = q;
            ++mult;
        }
        roots.emplace_back(r, mult);
    }
    return f;
}

// Kronecker search: returns a monic irreducible factor of degree k if one
// exists (f monic, no rational roots, deg f >= 2k).
bool kronecker_factor(const UniPoly& f, int k, UniPoly& out) {
    Ratio content;
    std::vector<mpz_class> z = to_integer_primitive(f, &content);
    // Sample points 0, 1, -1, 2, -2, ...
    std::vector<long> xs;
    for (long i = 0; static_cast<int>(xs.size()) < k + 1; ++i) {
        if (i == 0) xs.push_back(0);
        else { xs.push_back(i); if (static_cast<int>(xs.size()) < k + 1) xs.push_back(-i); }
    }
    std::vector<std::vector<mpz_class>> divisor_sets;
    for (long x : xs) {
        mpz_class v = eval_int(z, x);
        if (v == 0) throw std::logic_error("kronecker_factor: unexpected integer root");
        divisor_sets.push_back(positive_divisors(v));
    }
    // Odometer over divisor tuples with independent signs.
    std::vector<size_t> idx(k + 1, 0);
    std::vector<int> sign(k + 1, 1);
    auto advance = [&]() -> bool {
        for (int i = 0; i <= k; ++i) {
            if (sign[i] == 1) { sign[i] = -1; return true; }
            sign[i] = 1;
            if (++idx[i] < divisor_sets[i].size()) return true;
            idx[i] = 0;
        }
        return false;
    };
    do {
        // Lagrange interpolation through (xs[i], sign[i]*divisor).
        UniPoly g;
        for (int i = 0; i <= k; ++i) {
            UniPoly basis = UniPoly::constant(Ratio(1));
            Ratio denom(1);
            for (int j = 0; j <= k; ++j) {
                if (j == i) continue;
                basis = basis * UniPoly(std::vector<Ratio>{Ratio(-xs[j]), Ratio(1)});
                denom *= Ratio(xs[i] - xs[j]);
            }
            mpq_class y(sign[i] * divisor_sets[i][idx[i]]);
            g = g + basis.scaled(Ratio(y) / denom);
        }
        if (g.degree() != k) continue;
        bool integral = true;
        for (const Ratio& c : g.coeffs())
            if (!c.is_integer()) { integral = false; break; }
        if (!integral) continue;
        if (f.divisible_by(g)) {
            out = g.monic();
            return true;
        }
    } while (advance());
    return false;
}

// Factors a monic squarefree polynomial into monic irreducibles.
std::vector<UniPoly> factor_squarefree(const UniPoly& p) {
    std::vector<UniPoly> out;
    std::vector<std::pair<Ratio, int>> roots;
    UniPoly f = strip_rational_roots(p, roots);
    for (const auto& [r, m] : roots)
        for (int i = 0; i < m; ++i)  // squarefree input: m is 1, kept general
            out.push_back(UniPoly(std::vector<Ratio>{-r, Ratio(1)}));
    int k = 2;
    while (f.degree() >= 2 * k) {
        UniPoly g;
        if (kronecker_factor(f, k, g)) {
            out.push_back(g);
            f = f.divmod(g).first;
        } else {
            ++k;
        }
    }
    if (f.degree() > 0) out.push_back(f.monic());
    return out;
}

}  // namespace

UniFactorization univariate_factor(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("univariate_factor: zero polynomial");
    UniFactorization sqf = squarefree_decomposition(p);
    UniFactorization out;
    out.content = sqf.content;
    for (const auto& [part, mult] : sqf.factors)
        for (const UniPoly& irr : factor_squarefree(part)) out.factors.emplace_back(irr, mult);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
                  if (a.second != b.second) return a.second < b.second;
                  for (int i = a.first.degree(); i >= 0; --i) {
                      if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
                  }
                  return false;
              });
    return out;
}

std::vector<std::pair<Ratio, int>> rational_roots(const UniFactorization& f) {
    std::vector<std::pair<Ratio, int>> out;
    for (const auto& [factor, mult] : f.factors)
        if (factor.degree() == 1) out.emplace_back(-factor.coeff(0), mult);
    return out;
}

}  // namespace starlock
