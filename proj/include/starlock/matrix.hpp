#pragma once

#include <optional>
#include <vector>

#include "starlock/ratio.hpp"

namespace starlock {

// Dense matrix over Ratio. Small sizes only (ambient dimension N+1 <= 6
// in practice); all elimination is exact.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RatMatrix identity(int n);
    static RatMatrix from_rows(const std::vector<std::vector<Ratio>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Ratio& at(int r, int c) { return a_[r * cols_ + c]; }
    const Ratio& at(int r, int c) const { return a_[r * cols_ + c]; }

    std::vector<Ratio> row(int r) const;
    std::vector<Ratio> col(int c) const;
    void append_row(const std::vector<Ratio>& r);

    RatMatrix transposed() const;
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    std::vector<Ratio> apply(const std::vector<Ratio>& x) const;  // this * x

    // Reduced row echelon form; returns rank. Zero rows are dropped.
    RatMatrix rref() const;
    int rank() const;
    Ratio det() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    RatMatrix inverse() const;  // throws on singular input

    // Basis of { x : A x = 0 }, rows in RREF.
    RatMatrix kernel() const;
    // Solves A x = b exactly; nullopt if inconsistent. Requires unique
    // solution on the column space (full column rank).
    std::optional<std::vector<Ratio>> solve(const std::vector<Ratio>& b) const;

    friend bool operator==(const RatMatrix& a, const RatMatrix& b);

private:
    int rows_, cols_;
    std::vector<Ratio> a_;
};

Ratio dot(const std::vector<Ratio>& a, const std::vector<Ratio>& b);
bool is_zero_vector(const std::vector<Ratio>& v);

}  // namespace starlock
