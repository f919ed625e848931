#include "starlock/matrix.hpp"

#include <stdexcept>

namespace starlock {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Ratio(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Ratio>>& rows) {
    if (rows.empty()) return RatMatrix();
    RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != m.cols_)
            throw std::invalid_argument("RatMatrix: ragged rows");
        for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

std::vector<Ratio> RatMatrix::row(int r) const {
    std::vector<Ratio> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Ratio> RatMatrix::col(int c) const {
    std::vector<Ratio> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void RatMatrix::append_row(const std::vector<Ratio>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
    if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("RatMatrix: bad row size");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return p;
}

std::vector<Ratio> RatMatrix::apply(const std::vector<Ratio>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("RatMatrix: size mismatch");
    std::vector<Ratio> y(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
    return y;
}

namespace {

// In-place Gauss-Jordan; returns pivot columns.
std::vector<int> gauss_jordan(RatMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Ratio inv = m.at(r, c).inv();
        for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Ratio f = m.at(i, c);
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RatMatrix RatMatrix::rref() const {
    RatMatrix m = *this;
    std::vector<int> pivots = gauss_jordan(m);
    RatMatrix out(static_cast<int>(pivots.size()), cols_);
    for (int r = 0; r < out.rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = m.at(r, c);
    return out;
}

int RatMatrix::rank() const {
    RatMatrix m = *this;
    return static_cast<int>(gauss_jordan(m).size());
}

Ratio RatMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: det of non-square matrix");
    RatMatrix m = *this;
    Ratio d(1);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) return Ratio(0);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Ratio inv = m.at(c, c).inv();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            Ratio f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMatrix: inverse of non-square matrix");
    RatMatrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = Ratio(1);
    }
    std::vector<int> pivots = gauss_jordan(aug);
    if (static_cast<int>(pivots.size()) != rows_)
        throw std::invalid_argument("non-invertible transform");
    RatMatrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

RatMatrix RatMatrix::kernel() const {
    RatMatrix m = *this;
    std::vector<int> pivots = gauss_jordan(m);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMatrix ker(0, cols_);
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Ratio> v(cols_);
        v[c] = Ratio(1);
        for (int r = 0; r < static_cast<int>(pivots.size()); ++r) v[pivots[r]] = -m.at(r, c);
        ker.append_row(v);
    }
    return ker.rref();
}

std::optional<std::vector<Ratio>> RatMatrix::solve(const std::vector<Ratio>& b) const {
    if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("RatMatrix: size mismatch");
    RatMatrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_) = b[r];
    }
    std::vector<int> pivots = gauss_jordan(aug);
    for (int c : pivots)
        if (c == cols_) return std::nullopt;  // inconsistent
    std::vector<Ratio> x(cols_);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Ratio dot(const std::vector<Ratio>& a, const std::vector<Ratio>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Ratio s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_zero_vector(const std::vector<Ratio>& v) {
    for (const Ratio& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace starlock
