#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace jacobi {

/// Symmetric tridiagonal matrix stored as its diagonal (length n) and
/// off-diagonal (length n - 1). No dense form is ever built.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;

    SymTridiag() = default;
    SymTridiag(std::vector<double> diag, std::vector<double> off);

    std::size_t size() const { return diag.size(); }
    /// Maximum absolute row sum.
    double inf_norm() const;
};

enum class Provenance { random, deterministic, transformed };

std::string_view to_string(Provenance p);

/// Non-empty, ascending list of eigenvalues or polynomial roots.
class Spectrum {
public:
    Spectrum(std::vector<double> values, Provenance provenance);

    std::span<const double> values() const& { return values_; }
    // Rvalue overload so `for (double v : f().values())` owns its data.
    std::vector<double> values() && { return std::move(values_); }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    Provenance provenance() const { return provenance_; }

    std::vector<double> take() && { return std::move(values_); }

private:
    std::vector<double> values_;
    Provenance provenance_;
};

/// Row-major dense real matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

/// A Aᵀ for a wide matrix A (n x m), returned as n x n.
Matrix gram_rows(const Matrix& a);

/// Square symmetric matrix. Construction checks symmetry to 1e-12 relative
/// and then mirrors the lower triangle, which is authoritative.
class DenseSym {
public:
    explicit DenseSym(Matrix m);

    std::size_t size() const { return m_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    const Matrix& matrix() const { return m_; }
    double frobenius_norm() const;

private:
    Matrix m_;
};

}  // namespace jacobi
