#include "jacobi/trieig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "jacobi/errors.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi {
namespace {

struct SturmContext {
    const SymTridiag& t;
    std::vector<double> off_sq;
    double pivmin;
};

SturmContext make_context(const SymTridiag& t) {
    SturmContext ctx{t, {}, 0.0};
    ctx.off_sq.resize(t.off.size());
    double max_sq = 1.0;
    for (std::size_t i = 0; i < t.off.size(); ++i) {
        ctx.off_sq[i] = t.off[i] * t.off[i];
        max_sq = std::max(max_sq, ctx.off_sq[i]);
    }
    ctx.pivmin = std::numeric_limits<double>::min() * max_sq;
    return ctx;
}

std::size_t count_below(const SturmContext& ctx, double x) {
    const auto& d = ctx.t.diag;
    std::size_t count = 0;
    double q = d[0] - x;
    if (std::abs(q) < ctx.pivmin) q = -ctx.pivmin;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = (d[i] - x) - ctx.off_sq[i - 1] / q;
        if (std::abs(q) < ctx.pivmin) q = -ctx.pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

struct Interval {
    double lo;
    double hi;
    std::size_t count_lo;
    std::size_t count_hi;
};

// Locates eigenvalues with indices in [first, last). Every eigenvalue follows
// the same dyadic refinement of [lo, hi] no matter which neighbours are
// tracked alongside it, so chunking the index range cannot change the output.
void bisect_indices(const SturmContext& ctx, Interval root, double tol, std::size_t first, std::size_t last,
                    std::vector<double>& out) {
    std::vector<Interval> stack{root};
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        const std::size_t lo_idx = std::max(iv.count_lo, first);
        const std::size_t hi_idx = std::min(iv.count_hi, last);
        if (lo_idx >= hi_idx) continue;
        const double mid = 0.5 * (iv.lo + iv.hi);
        if (iv.hi - iv.lo <= tol || mid <= iv.lo || mid >= iv.hi) {
            for (std::size_t k = lo_idx; k < hi_idx; ++k) out[k] = mid;
            continue;
        }
        const std::size_t c = std::clamp(count_below(ctx, mid), iv.count_lo, iv.count_hi);
        stack.push_back({mid, iv.hi, c, iv.count_hi});
        stack.push_back({iv.lo, mid, iv.count_lo, c});
    }
}

}  // namespace

std::size_t sturm_count(const SymTridiag& t, double x) { return count_below(make_context(t), x); }

Spectrum eig_tridiag(const SymTridiag& t, double rel_tol, unsigned threads) {
    detail::require(rel_tol >= 1e-14, "eig_tridiag rel_tol must be >= 1e-14");
    const std::size_t n = t.size();
    detail::require(n >= 1 && t.off.size() + 1 == n, "malformed tridiagonal matrix");

    double gl = std::numeric_limits<double>::infinity();
    double gu = -gl;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off[i - 1]);
        if (i + 1 < n) radius += std::abs(t.off[i]);
        gl = std::min(gl, t.diag[i] - radius);
        gu = std::max(gu, t.diag[i] + radius);
    }
    const double tol = rel_tol * t.inf_norm() + 1e-30;
    const double pad = 2.0 * tol + 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(gl), std::abs(gu));
    gl -= pad;
    gu += pad;

    const SturmContext ctx = make_context(t);
    const Interval root{gl, gu, 0, n};
    std::vector<double> values(n);

    constexpr std::size_t kChunk = 64;
    const std::size_t chunks = (n + kChunk - 1) / kChunk;
    const unsigned workers = threads == 0 ? resolve_threads(0) : threads;
    parallel_for(chunks, workers, [&](std::size_t c) {
        bisect_indices(ctx, root, tol, c * kChunk, std::min(n, (c + 1) * kChunk), values);
    });
    return Spectrum(std::move(values), Provenance::random);
}

double charpoly_eval(const SymTridiag& t, double x) {
    const std::size_t n = t.size();
    double prev = 1.0;  // G_{k-2}
    double cur = x - t.diag[0];  // G_1
    if (n == 1) return cur;
    for (std::size_t k = 1; k < n; ++k) {
        const double next = (x - t.diag[k]) * cur - t.off[k - 1] * t.off[k - 1] * prev;
        prev = cur;
        cur = next;
    }
    if (!std::isfinite(cur))
        throw NumericalError("characteristic polynomial overflowed at x = " + std::to_string(x) +
                             " (n = " + std::to_string(n) + "); evaluate a scaled matrix instead");
    return cur;
}

Spectrum eig_dense_sym(const DenseSym& input, double tol) {
    const std::size_t n = input.size();
    detail::require(n <= kDenseLimit, "dense eigensolver is limited to n <= " + std::to_string(kDenseLimit) +
                                          ", got n = " + std::to_string(n));
    Matrix a = input.matrix();
    const double target = tol * input.frobenius_norm();

    auto off_mass = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    constexpr int kMaxSweeps = 50;
    int sweep = 0;
    while (off_mass() > target) {
        if (++sweep > kMaxSweeps) throw NumericalError("Jacobi rotations did not converge in 50 sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double tan = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::hypot(1.0, tan);
                const double s = tan * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    return Spectrum(std::move(values), Provenance::deterministic);
}

Matrix cholesky(const DenseSym& a) {
    const std::size_t n = a.size();
    Matrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = a(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
        if (!(pivot > 0.0))
            throw DegenerateSampleError("matrix is not positive definite (pivot " + std::to_string(j) + ")");
        const double ljj = std::sqrt(pivot);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / ljj;
        }
    }
    return l;
}

namespace {

// Solves L X = B in place for lower-triangular L.
void forward_solve(const Matrix& l, Matrix& b) {
    const std::size_t n = l.rows();
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = b(i, col);
            for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b(k, col);
            b(i, col) = s / l(i, i);
        }
    }
}

}  // namespace

Spectrum eig_generalized_sym(const DenseSym& a, const DenseSym& b, double tol) {
    detail::require(a.size() == b.size(), "pencil matrices must have equal size");
    const Matrix l = cholesky(b);
    Matrix w = a.matrix();
    forward_solve(l, w);       // W = L⁻¹ A
    Matrix c = transpose(w);   // Wᵀ = A L⁻ᵀ
    forward_solve(l, c);       // C = L⁻¹ A L⁻ᵀ
    const std::size_t n = c.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const double avg = 0.5 * (c(i, j) + c(j, i));
            c(i, j) = avg;
            c(j, i) = avg;
        }
    return eig_dense_sym(DenseSym(std::move(c)), tol);
}

}  // namespace jacobi
