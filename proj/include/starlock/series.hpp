#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starlock/hpoly.hpp"
#include "starlock/ratio.hpp"

namespace starlock {

// Multivariate formal power series truncated at total degree < T. Products
// and compositions drop everything of degree >= T; the truncation order is
// part of the value and must agree between operands.
class TruncSeries {
public:
    TruncSeries() : nvars_(0), trunc_(1) {}
    TruncSeries(int nvars, int trunc);
    TruncSeries(int nvars, int trunc, TermMap terms);

    static TruncSeries constant(int nvars, int trunc, const Ratio& c);
    static TruncSeries variable(int nvars, int trunc, int i);

    int nvars() const { return nvars_; }
    int truncation_order() const { return trunc_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& e, const Ratio& c);  // drops degree >= T
    Ratio coeff(const Exponents& e) const;
    Ratio constant_term() const;

    // Minimal total degree of a nonzero term; nullopt when the series is
    // zero up to truncation (the Overflow outcome).
    std::optional<int> order() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Ratio& c) const;
    TruncSeries pow(int e) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.nvars_ == b.nvars_ && a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }

    // Composition: variable i is replaced by images[i]. Every image must
    // have zero constant term, otherwise truncation would lose low-order
    // contributions from the dropped tail.
    TruncSeries substitute(const std::vector<TruncSeries>& images) const;

    // Homogeneous part of the given total degree.
    TruncSeries homogeneous_part(int deg) const;
    TruncSeries truncated(int new_trunc) const;

    // Restriction to the listed variables: true iff every term has zero
    // exponents outside of them.
    bool supported_on(const std::vector<int>& vars) const;

    std::string str() const;

private:
    int nvars_;
    int trunc_;
    TermMap terms_;
};

// r with r^n = u modulo truncation. Requires a unit constant term with an
// exact rational n-th root.
TruncSeries series_nth_root(const TruncSeries& u, long n);

// Dehomogenization of a form onto the affine chart X_chart = 1; remaining
// variables keep their relative order.
TruncSeries dehomogenize_to_series(const HPoly& p, int chart, int trunc);

// Dehomogenization of a binary form F(s,u): t -> F(1, t). The degree drop
// equals the multiplicity of the root (0:1).
UniPoly dehomogenize_binary(const HPoly& binary_form);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);

}  // namespace starlock
