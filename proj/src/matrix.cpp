#include "jacobi/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jacobi/errors.hpp"

namespace jacobi {

SymTridiag::SymTridiag(std::vector<double> d, std::vector<double> e) : diag(std::move(d)), off(std::move(e)) {
    detail::require(!diag.empty(), "tridiagonal matrix must have n >= 1");
    detail::require(off.size() + 1 == diag.size(), "off-diagonal length must be n - 1");
}

double SymTridiag::inf_norm() const {
    const std::size_t n = diag.size();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(off[i - 1]);
        if (i + 1 < n) row += std::abs(off[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

std::string_view to_string(Provenance p) {
    switch (p) {
        case Provenance::random: return "random";
        case Provenance::deterministic: return "deterministic";
        case Provenance::transformed: return "transformed";
    }
    return "unknown";
}

Spectrum::Spectrum(std::vector<double> values, Provenance provenance)
    : values_(std::move(values)), provenance_(provenance) {
    detail::require(!values_.empty(), "spectrum must be non-empty");
    if (!std::is_sorted(values_.begin(), values_.end())) std::sort(values_.begin(), values_.end());
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    detail::require(a.cols() == b.rows(), "matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            auto bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix gram_rows(const Matrix& a) {
    const std::size_t n = a.rows();
    Matrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto ri = a.row(i);
        for (std::size_t j = 0; j <= i; ++j) {
            auto rj = a.row(j);
            double s = 0.0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += ri[k] * rj[k];
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

DenseSym::DenseSym(Matrix m) : m_(std::move(m)) {
    detail::require(m_.rows() == m_.cols() && m_.rows() > 0, "symmetric matrix must be square and non-empty");
    const std::size_t n = m_.rows();
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(m_(i, j)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs(m_(i, j) - m_(j, i)) > 1e-12 * scale)
                throw ParameterError("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
            m_(j, i) = m_(i, j);
        }
    }
}

double DenseSym::frobenius_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < size(); ++i)
        for (double v : m_.row(i)) s += v * v;
    return std::sqrt(s);
}

}  // namespace jacobi
