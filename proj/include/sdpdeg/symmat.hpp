#pragma once

#include <cstddef>
#include <vector>

namespace sdpdeg {

/// Dense symmetric matrix of doubles, stored fully (row-major n*n).
class SymMat {
  public:
    SymMat() = default;
    explicit SymMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    /// Builds from row-major data, rejecting asymmetry beyond tol * scale
    /// and storing the symmetrized average.
    static SymMat from_row_major(int n, const std::vector<double>& data,
                                 double tol = 1e-12);
    static SymMat identity(int n);

    int size() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    void set_sym(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }

    double trace() const;
    double max_abs() const;
    double frobenius() const;
    bool all_finite() const;

    SymMat& operator+=(const SymMat& o);
    SymMat& operator-=(const SymMat& o);
    SymMat& operator*=(double s);
    friend SymMat operator+(SymMat a, const SymMat& b) { return a += b; }
    friend SymMat operator-(SymMat a, const SymMat& b) { return a -= b; }
    friend SymMat operator*(SymMat a, double s) { return a *= s; }

  private:
    int n_ = 0;
    std::vector<double> a_;
};

/// Frobenius inner product A . B = trace(A B) = sum_ij a_ij b_ij.
double dot(const SymMat& a, const SymMat& b);

}  // namespace sdpdeg
