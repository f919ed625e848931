#pragma once

#include <map>
#include <string>
#include <vector>

#include "starlock/matrix.hpp"
#include "starlock/ratio.hpp"

namespace starlock {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order with X0 most significant. Maps iterate
// ascending; canonical emission walks them in reverse (descending).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

using TermMap = std::map<Exponents, Ratio, GradedLexLess>;

// Sparse homogeneous polynomial over Ratio. Every stored coefficient is
// nonzero and all exponent vectors of a nonzero polynomial share one total
// degree; violating either is a programming error and throws.
class HPoly {
public:
    HPoly() : nvars_(0) {}
    explicit HPoly(int nvars) : nvars_(nvars) {}
    HPoly(int nvars, TermMap terms);

    static HPoly monomial(int nvars, const Exponents& e, const Ratio& c);
    static HPoly variable(int nvars, int i, int power = 1);
    static HPoly constant(int nvars, const Ratio& c);
    static HPoly linear_form(const std::vector<Ratio>& coeffs);

    int nvars() const { return nvars_; }
    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    // Accumulates c * X^e, erasing the slot if the sum cancels.
    void add_term(const Exponents& e, const Ratio& c);

    Ratio coeff(const Exponents& e) const;
    Ratio leading_coeff() const;  // of the graded-lex largest monomial

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly scaled(const Ratio& c) const;
    HPoly pow(int e) const;

    friend bool operator==(const HPoly& a, const HPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    HPoly derivative(int var) const;
    Ratio eval(const std::vector<Ratio>& x) const;

    // Replaces each variable by the corresponding image polynomial; all
    // images live in one ring and are homogeneous of one common degree.
    HPoly substitute(const std::vector<HPoly>& images) const;

    // p(M x): variable X_i is replaced by the linear form sum_j M(i,j) X_j.
    HPoly substitute_linear(const RatMatrix& m) const;

    // True iff no term has a positive exponent on any of the given variables.
    bool independent_of(const std::vector<int>& vars) const;

    // Degree of the exact largest power of the linear form dividing *this
    // (-1 if *this is zero); also reports the cofactor.
    int linear_form_multiplicity(const std::vector<Ratio>& ell, HPoly* cofactor = nullptr) const;

    std::string str() const;  // canonical text, graded-lex descending

private:
    int nvars_;
    TermMap terms_;
};

// Parsed expression over variables X0..XN (case-insensitive) with + - * ^
// and integer or p/q literals. Not necessarily homogeneous.
struct ParsedPoly {
    int nvars = 0;
    TermMap terms;
};

// nvars < 0 infers the variable count from the highest index used.
ParsedPoly parse_poly(const std::string& text, int nvars = -1);

// Throws if the parsed polynomial is not homogeneous.
HPoly to_hpoly(const ParsedPoly& p);
HPoly parse_hpoly(const std::string& text, int nvars = -1);

std::ostream& operator<<(std::ostream& os, const HPoly& p);

}  // namespace starlock
