#include "starlock/hpoly.hpp"

#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace starlock {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // X0 most significant: a < b iff at the first differing slot a has the
    // smaller exponent.
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

HPoly::HPoly(int nvars, TermMap terms) : nvars_(nvars), terms_(std::move(terms)) {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("HPoly: bad exponent length");
        if (c.is_zero()) throw std::invalid_argument("HPoly: zero coefficient stored");
        int d = total_degree(e);
        if (deg < 0) deg = d;
        else if (d != deg) throw std::invalid_argument("HPoly: inhomogeneous terms");
    }
}

HPoly HPoly::monomial(int nvars, const Exponents& e, const Ratio& c) {
    HPoly p(nvars);
    p.add_term(e, c);
    return p;
}

HPoly HPoly::variable(int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("HPoly: variable index out of range");
    Exponents e(nvars, 0);
    e[i] = power;
    return monomial(nvars, e, Ratio(1));
}

HPoly HPoly::constant(int nvars, const Ratio& c) {
    return monomial(nvars, Exponents(nvars, 0), c);
}

HPoly HPoly::linear_form(const std::vector<Ratio>& coeffs) {
    HPoly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

int HPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

void HPoly::add_term(const Exponents& e, const Ratio& c) {
    if (c.is_zero()) return;
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("HPoly: bad exponent length");
    if (!terms_.empty() && total_degree(e) != degree())
        throw std::invalid_argument("HPoly: inhomogeneous term");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Ratio HPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Ratio(0) : it->second;
}

Ratio HPoly::leading_coeff() const {
    if (terms_.empty()) return Ratio(0);
    return terms_.rbegin()->second;
}

HPoly HPoly::operator-() const {
    HPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("HPoly: variable count mismatch");
    if (!is_zero() && !o.is_zero() && degree() != o.degree())
        throw std::invalid_argument("HPoly: sum of different degrees");
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) { return *this += -o; }

HPoly operator*(const HPoly& a, const HPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::invalid_argument("HPoly: variable count mismatch");
    HPoly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            auto it = p.terms_.find(e);
            if (it == p.terms_.end()) {
                p.terms_.emplace(std::move(e), ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) p.terms_.erase(it);
            }
        }
    }
    return p;
}

HPoly HPoly::scaled(const Ratio& c) const {
    HPoly p(nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

HPoly HPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("HPoly: negative power");
    HPoly r = constant(nvars_, Ratio(1));
    HPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

HPoly HPoly::derivative(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("HPoly: variable index out of range");
    HPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        p.terms_.emplace(std::move(d), c * Ratio(e[var]));
    }
    return p;
}

Ratio HPoly::eval(const std::vector<Ratio>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("HPoly: bad point size");
    Ratio sum;
    for (const auto& [e, c] : terms_) {
        Ratio t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t *= x[i].pow(e[i]);
        sum += t;
    }
    return sum;
}

HPoly HPoly::substitute(const std::vector<HPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("HPoly: need one image per variable");
    if (is_zero()) {
        int target = images.empty() ? 0 : images[0].nvars();
        return HPoly(target);
    }
    int target = images[0].nvars();
    int img_deg = -1;
    for (const auto& im : images) {
        if (im.nvars() != target) throw std::invalid_argument("HPoly: images in different rings");
        if (!im.is_zero()) {
            if (img_deg < 0) img_deg = im.degree();
            else if (im.degree() != img_deg)
                throw std::invalid_argument("HPoly: images of different degrees");
        }
    }
    // Power tables keep repeated exponents cheap.
    std::vector<int> maxexp(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) maxexp[i] = std::max(maxexp[i], e[i]);
    std::vector<std::vector<HPoly>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pows[i].push_back(HPoly::constant(target, Ratio(1)));
        for (int k = 1; k <= maxexp[i]; ++k) pows[i].push_back(pows[i].back() * images[i]);
    }
    HPoly out(target);
    for (const auto& [e, c] : terms_) {
        HPoly t = HPoly::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * pows[i][e[i]];
        if (t.is_zero()) continue;
        if (out.is_zero()) out = std::move(t);
        else out += t;
    }
    return out;
}

HPoly HPoly::substitute_linear(const RatMatrix& m) const {
    if (m.rows() != nvars_ || m.cols() != nvars_)
        throw std::invalid_argument("HPoly: transform dimension mismatch");
    std::vector<HPoly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) images.push_back(HPoly::linear_form(m.row(i)));
    return substitute(images);
}

bool HPoly::independent_of(const std::vector<int>& vars) const {
    for (const auto& [e, c] : terms_)
        for (int v : vars)
            if (e[v] > 0) return false;
    return true;
}

int HPoly::linear_form_multiplicity(const std::vector<Ratio>& ell, HPoly* cofactor) const {
    if (static_cast<int>(ell.size()) != nvars_) throw std::invalid_argument("HPoly: bad form size");
    if (is_zero_vector(ell)) throw std::invalid_argument("HPoly: zero linear form");
    if (is_zero()) return -1;
    // Change coordinates so the form becomes Y0, count the minimal Y0
    // exponent, then map the cofactor back.
    RatMatrix rows(0, nvars_);
    rows.append_row(ell);
    RatMatrix ker = rows.kernel();
    RatMatrix basis(0, nvars_);
    // First column: any vector with ell(v) = 1.
    int piv = 0;
    while (ell[piv].is_zero()) ++piv;
    std::vector<Ratio> v0(nvars_);
    v0[piv] = ell[piv].inv();
    basis.append_row(v0);
    for (int r = 0; r < ker.rows(); ++r) basis.append_row(ker.row(r));
    RatMatrix c = basis.transposed();  // columns are the new basis vectors
    HPoly q = substitute_linear(c);
    int m = q.degree();
    for (const auto& [e, cf] : q.terms()) m = std::min(m, e[0]);
    if (cofactor) {
        HPoly shifted(nvars_);
        for (const auto& [e, cf] : q.terms()) {
            Exponents d = e;
            d[0] -= m;
            shifted.add_term(d, cf);
        }
        *cofactor = shifted.substitute_linear(c.inverse());
    }
    return m;
}

std::string HPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Exponents& e = it->first;
        Ratio c = it->second;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        bool coeff_shown = !(c == Ratio(1) && has_vars);
        if (coeff_shown) os << c.str();
        bool need_star = coeff_shown;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << "X" << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Text parser
// ---------------------------------------------------------------------------

namespace {

struct RawPoly {
    int nvars;
    TermMap terms;

    void add(const Exponents& e, const Ratio& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

RawPoly raw_constant(int nvars, const Ratio& c) {
    RawPoly p{nvars, {}};
    p.add(Exponents(nvars, 0), c);
    return p;
}

RawPoly raw_add(const RawPoly& a, const RawPoly& b) {
    RawPoly p = a;
    for (const auto& [e, c] : b.terms) p.add(e, c);
    return p;
}

RawPoly raw_neg(const RawPoly& a) {
    RawPoly p{a.nvars, {}};
    for (const auto& [e, c] : a.terms) p.terms.emplace(e, -c);
    return p;
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
    RawPoly p{a.nvars, {}};
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Exponents e(a.nvars);
            for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
            p.add(e, ca * cb);
        }
    return p;
}

RawPoly raw_pow(const RawPoly& a, int e) {
    RawPoly r = raw_constant(a.nvars, Ratio(1));
    RawPoly base = a;
    while (e > 0) {
        if (e & 1) r = raw_mul(r, base);
        base = raw_mul(base, base);
        e >>= 1;
    }
    return r;
}

class Parser {
public:
    Parser(const std::string& s, int nvars) : s_(s), nvars_(nvars) {}

    RawPoly run() {
        RawPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    const std::string& s_;
    int nvars_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    long integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected number");
        return std::stol(s_.substr(start, pos_ - start));
    }

    RawPoly expr() {
        RawPoly p = eat('-') ? raw_neg(term()) : term();
        for (;;) {
            if (eat('+')) p = raw_add(p, term());
            else if (eat('-')) p = raw_add(p, raw_neg(term()));
            else return p;
        }
    }

    RawPoly term() {
        RawPoly p = unary();
        while (eat('*')) p = raw_mul(p, unary());
        return p;
    }

    RawPoly unary() {
        if (eat('-')) return raw_neg(unary());
        return power();
    }

    RawPoly power() {
        RawPoly base = atom();
        if (eat('^')) {
            long e = integer();
            if (e < 0) fail("negative exponent");
            return raw_pow(base, static_cast<int>(e));
        }
        return base;
    }

    RawPoly atom() {
        char c = peek();
        if (c == '(') {
            eat('(');
            RawPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            long idx = integer();
            if (idx >= nvars_) fail("variable index out of range");
            RawPoly p{nvars_, {}};
            Exponents e(nvars_, 0);
            e[idx] = 1;
            p.add(e, Ratio(1));
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            if (eat('/')) {
                long den = integer();
                if (den == 0) fail("zero denominator");
                return raw_constant(nvars_, Ratio(num, den));
            }
            return raw_constant(nvars_, Ratio(num));
        }
        fail("expected atom");
    }
};

int scan_max_var(const std::string& s) {
    int mx = -1;
    for (size_t i = 0; i < s.size(); ++i) {
        if ((s[i] == 'X' || s[i] == 'x') && i + 1 < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            size_t j = i + 1;
            int idx = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                idx = idx * 10 + (s[j] - '0');
                ++j;
            }
            mx = std::max(mx, idx);
            i = j - 1;
        }
    }
    return mx;
}

}  // namespace

ParsedPoly parse_poly(const std::string& text, int nvars) {
    if (nvars < 0) nvars = scan_max_var(text) + 1;
    if (nvars == 0) nvars = 1;
    Parser parser(text, nvars);
    RawPoly raw = parser.run();
    return ParsedPoly{nvars, std::move(raw.terms)};
}

HPoly to_hpoly(const ParsedPoly& p) { return HPoly(p.nvars, p.terms); }

HPoly parse_hpoly(const std::string& text, int nvars) { return to_hpoly(parse_poly(text, nvars)); }

}  // namespace starlock
