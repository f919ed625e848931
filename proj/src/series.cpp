#include "starlock/series.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "starlock/unipoly.hpp"

namespace starlock {

TruncSeries::TruncSeries(int nvars, int trunc) : nvars_(nvars), trunc_(trunc) {
    if (trunc < 1) throw std::invalid_argument("TruncSeries: truncation order must be >= 1");
}

TruncSeries::TruncSeries(int nvars, int trunc, TermMap terms) : TruncSeries(nvars, trunc) {
    for (auto& [e, c] : terms) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("TruncSeries: bad exponent length");
        if (total_degree(e) >= trunc_ || c.is_zero()) continue;
        terms_.emplace(e, c);
    }
}

TruncSeries TruncSeries::constant(int nvars, int trunc, const Ratio& c) {
    TruncSeries s(nvars, trunc);
    s.add_term(Exponents(nvars, 0), c);
    return s;
}

TruncSeries TruncSeries::variable(int nvars, int trunc, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("TruncSeries: variable index out of range");
    TruncSeries s(nvars, trunc);
    Exponents e(nvars, 0);
    e[i] = 1;
    s.add_term(e, Ratio(1));
    return s;
}

void TruncSeries::add_term(const Exponents& e, const Ratio& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw std::invalid_argument("TruncSeries: bad exponent length");
    if (c.is_zero() || total_degree(e) >= trunc_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Ratio TruncSeries::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Ratio(0) : it->second;
}

Ratio TruncSeries::constant_term() const { return coeff(Exponents(nvars_, 0)); }

std::optional<int> TruncSeries::order() const {
    if (terms_.empty()) return std::nullopt;
    return total_degree(terms_.begin()->first);
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries s(nvars_, trunc_);
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (nvars_ != o.nvars_ || trunc_ != o.trunc_)
        throw std::invalid_argument("TruncSeries: ring mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this += -o; }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.nvars_ != b.nvars_ || a.trunc_ != b.trunc_)
        throw std::invalid_argument("TruncSeries: ring mismatch");
    TruncSeries p(a.nvars_, a.trunc_);
    for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        for (const auto& [eb, cb] : b.terms_) {
            if (da + total_degree(eb) >= a.trunc_) continue;
            Exponents e(a.nvars_);
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

TruncSeries TruncSeries::scaled(const Ratio& c) const {
    TruncSeries s(nvars_, trunc_);
    if (c.is_zero()) return s;
    for (const auto& [e, v] : terms_) s.terms_.emplace(e, v * c);
    return s;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("TruncSeries: negative power");
    TruncSeries r = constant(nvars_, trunc_, Ratio(1));
    TruncSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TruncSeries TruncSeries::substitute(const std::vector<TruncSeries>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("TruncSeries: need one image per variable");
    int target = nvars_;
    for (const auto& im : images) {
        if (im.truncation_order() != trunc_)
            throw std::invalid_argument("TruncSeries: image truncation mismatch");
        if (!im.constant_term().is_zero())
            throw std::invalid_argument("TruncSeries: image has nonzero constant term");
        target = im.nvars();
    }
    std::vector<int> maxexp(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) maxexp[i] = std::max(maxexp[i], e[i]);
    std::vector<std::vector<TruncSeries>> pows(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pows[i].push_back(TruncSeries::constant(target, trunc_, Ratio(1)));
        for (int k = 1; k <= maxexp[i]; ++k) pows[i].push_back(pows[i].back() * images[i]);
    }
    TruncSeries out(target, trunc_);
    for (const auto& [e, c] : terms_) {
        TruncSeries t = TruncSeries::constant(target, trunc_, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * pows[i][e[i]];
        out += t;
    }
    return out;
}

TruncSeries TruncSeries::homogeneous_part(int deg) const {
    TruncSeries s(nvars_, trunc_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == deg) s.terms_.emplace(e, c);
    return s;
}

TruncSeries TruncSeries::truncated(int new_trunc) const {
    TruncSeries s(nvars_, new_trunc);
    for (const auto& [e, c] : terms_) s.add_term(e, c);
    return s;
}

bool TruncSeries::supported_on(const std::vector<int>& vars) const {
    std::vector<bool> ok(nvars_, false);
    for (int v : vars) ok[v] = true;
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0 && !ok[i]) return false;
    return true;
}

std::string TruncSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c0] : terms_) {
        Ratio c = c0;
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
            os << "x" << i;
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

TruncSeries series_nth_root(const TruncSeries& u, long n) {
    if (n < 1) throw std::invalid_argument("series_nth_root: n must be >= 1");
    Ratio c0 = u.constant_term();
    if (c0.is_zero()) throw std::invalid_argument("non-unit series");
    Ratio root;
    if (!c0.nth_root(n, root)) throw std::invalid_argument("root not in coefficient field");
    if (n == 1) return u;
    // u = c0 (1 + v); result = root * sum_k binom(1/n, k) v^k.
    TruncSeries v = u.scaled(c0.inv());
    v.add_term(Exponents(u.nvars(), 0), Ratio(-1));
    TruncSeries acc = TruncSeries::constant(u.nvars(), u.truncation_order(), Ratio(1));
    TruncSeries vk = acc;  // v^k
    Ratio binom(1);        // binom(1/n, k)
    Ratio alpha(1, n);
    for (int k = 1; k < u.truncation_order(); ++k) {
        vk = vk * v;
        if (vk.is_zero()) break;
        binom *= (alpha - Ratio(k - 1)) / Ratio(k);
        acc += vk.scaled(binom);
    }
    return acc.scaled(root);
}

TruncSeries dehomogenize_to_series(const HPoly& p, int chart, int trunc) {
    if (chart < 0 || chart >= p.nvars()) throw std::invalid_argument("dehomogenize: bad chart");
    TruncSeries s(p.nvars() - 1, trunc);
    for (const auto& [e, c] : p.terms()) {
        Exponents local;
        local.reserve(p.nvars() - 1);
        for (int i = 0; i < p.nvars(); ++i)
            if (i != chart) local.push_back(e[i]);
        s.add_term(local, c);
    }
    return s;
}

UniPoly dehomogenize_binary(const HPoly& binary_form) {
    if (binary_form.nvars() != 2) throw std::invalid_argument("dehomogenize_binary: need 2 variables");
    if (binary_form.is_zero()) return UniPoly();
    std::vector<Ratio> coeffs(binary_form.degree() + 1);
    for (const auto& [e, c] : binary_form.terms()) coeffs[e[1]] = c;
    return UniPoly(std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) { return os << s.str(); }

}  // namespace starlock
