#pragma once

#include <string>
#include <utility>
#include <vector>

#include "starlock/ratio.hpp"

namespace starlock {

// Dense univariate polynomial over Ratio; coefficient of t^i at index i,
// no trailing zeros, zero polynomial has an empty coefficient vector.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Ratio> coeffs);
    static UniPoly constant(const Ratio& c);
    static UniPoly monomial(int deg, const Ratio& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Ratio>& coeffs() const { return c_; }
    Ratio coeff(int i) const;
    Ratio leading() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Ratio& c) const;
    UniPoly pow(int e) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    Ratio eval(const Ratio& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Exact Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    bool divisible_by(const UniPoly& d) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Ratio> c_;
    void trim();
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic, gcd(0,0) = 0

// content * prod factors[i].first ^ factors[i].second reproduces the input;
// factors are monic, squarefree, irreducible over the rationals, pairwise
// coprime, sorted by (degree, coefficients).
struct UniFactorization {
    Ratio content;
    std::vector<std::pair<UniPoly, int>> factors;

    UniPoly expand() const;
};

// Yun's algorithm; factors monic and squarefree, content separate.
UniFactorization squarefree_decomposition(const UniPoly& p);

// Full irreducible factorization over the rationals (rational roots plus
// a Kronecker divisor search for higher-degree factors). Intended for the
// small degrees and coefficient heights this library produces.
UniFactorization univariate_factor(const UniPoly& p);

std::vector<std::pair<Ratio, int>> rational_roots(const UniFactorization& f);

}  // namespace starlock
