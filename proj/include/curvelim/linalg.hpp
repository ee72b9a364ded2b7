#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "curvelim/matrix.hpp"

namespace curvelim {

/// Full-column-rank basis matrix of a subspace of an ambient space.
template <class S>
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    Matrix<S> basis;  // ambient_dim x dim, full column rank

    std::size_t dim() const { return basis.cols(); }
};

namespace detail {

inline Eigen::MatrixXcd to_eigen(const FloatMatrix& a) {
    Eigen::MatrixXcd m(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    return m;
}

inline FloatMatrix from_eigen(const Eigen::MatrixXcd& m) {
    FloatMatrix a(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) a(r, c) = m(r, c);
    return a;
}

/// Numerical-rank cutoff: max(rows,cols) * eps * sigma_max, the standard
/// convention; the exact backend never consults it.
inline double default_rank_tol(const Eigen::MatrixXcd& m, double sigma_max) {
    return static_cast<double>(std::max(m.rows(), m.cols())) *
           std::numeric_limits<double>::epsilon() * sigma_max;
}

/// In-place reduced row echelon form over the rationals. Returns pivot
/// columns in increasing order.
inline std::vector<std::size_t> rref(ExactMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pr = lead;
        while (pr < a.rows() && a(pr, col).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(lead, c), a(pr, c));
        ExactScalar inv = ExactScalar(1) / a(lead, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(lead, c) = inv * a(lead, c);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, col).is_zero()) continue;
            ExactScalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

}  // namespace detail

template <class S>
std::size_t rank(const Matrix<S>& a, std::optional<double> tol = std::nullopt) {
    if (a.empty()) return 0;
    if constexpr (scalar_traits<S>::is_exact) {
        ExactMatrix w = a;
        return detail::rref(w).size();
    } else {
        Eigen::MatrixXcd m = detail::to_eigen(a);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const auto& sv = svd.singularValues();
        if (sv.size() == 0) return 0;
        double cut = tol.value_or(detail::default_rank_tol(m, sv(0)));
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > cut) ++r;
        return r;
    }
}

/// Canonical right-kernel basis. Exact backend: RREF-based canonical form
/// (each column has a unit leading entry at its free position, free
/// positions increasing), reproducible across runs. Float backend: right
/// singular vectors below the rank cutoff.
template <class S>
SubspaceBasis<S> kernel_basis(const Matrix<S>& a, std::optional<double> tol = std::nullopt) {
    SubspaceBasis<S> out;
    out.ambient_dim = a.cols();
    if (a.rows() == 0 || a.cols() == 0) {
        out.basis = Matrix<S>::identity(a.cols());
        return out;
    }
    if constexpr (scalar_traits<S>::is_exact) {
        ExactMatrix w = a;
        std::vector<std::size_t> pivots = detail::rref(w);
        std::vector<bool> is_pivot(a.cols(), false);
        for (auto p : pivots) is_pivot[p] = true;
        std::size_t nfree = a.cols() - pivots.size();
        ExactMatrix basis(a.cols(), nfree);
        std::size_t k = 0;
        for (std::size_t f = 0; f < a.cols(); ++f) {
            if (is_pivot[f]) continue;
            basis(f, k) = ExactScalar(1);
            for (std::size_t pi = 0; pi < pivots.size(); ++pi) basis(pivots[pi], k) = -w(pi, f);
            ++k;
        }
        out.basis = basis;
    } else {
        Eigen::MatrixXcd m = detail::to_eigen(a);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        double cut = sv.size() ? tol.value_or(detail::default_rank_tol(m, sv(0))) : 0.0;
        std::size_t r = 0;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > cut) ++r;
        Eigen::MatrixXcd v = svd.matrixV();
        out.basis = detail::from_eigen(v.rightCols(v.cols() - static_cast<Eigen::Index>(r)));
    }
    return out;
}

/// Determinant: fraction-free Bareiss on the exact backend, pivoted LU on
/// the float backend.
template <class S>
S det(const Matrix<S>& a) {
    if (a.rows() != a.cols()) throw shape_error("det of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return scalar_traits<S>::one();
    if constexpr (scalar_traits<S>::is_exact) {
        ExactMatrix w = a;
        ExactScalar prev(1);
        ExactScalar sign(1);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (w(k, k).is_zero()) {
                std::size_t pr = k + 1;
                while (pr < n && w(pr, k).is_zero()) ++pr;
                if (pr == n) return ExactScalar(0);
                for (std::size_t c = 0; c < n; ++c) std::swap(w(k, c), w(pr, c));
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
            prev = w(k, k);
        }
        return sign * w(n - 1, n - 1);
    } else {
        return detail::to_eigen(a).partialPivLu().determinant();
    }
}

/// Coordinates c with basis*c = v; throws not_in_span when inconsistent.
/// Exact backend asserts a zero residual, float backend a residual below
/// tol (relative to the data scale).
template <class S>
std::vector<S> solve_in_span(const SubspaceBasis<S>& span, const std::vector<S>& v,
                             double tol = 1e-9) {
    if (v.size() != span.ambient_dim) throw shape_error("solve_in_span arity mismatch");
    const Matrix<S>& b = span.basis;
    if constexpr (scalar_traits<S>::is_exact) {
        // eliminate on [basis | v]
        ExactMatrix aug = hstack(b, Matrix<S>::column(v));
        std::vector<std::size_t> pivots = detail::rref(aug);
        std::vector<S> c(b.cols(), scalar_traits<S>::zero());
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            if (pivots[pi] == b.cols())
                throw not_in_span("vector is not in the span of the basis");
            c[pivots[pi]] = aug(pi, b.cols());
        }
        // full column rank means every basis column is a pivot; residual is
        // exactly zero by construction, re-checked here.
        for (std::size_t r = 0; r < b.rows(); ++r) {
            S acc = scalar_traits<S>::zero();
            for (std::size_t j = 0; j < b.cols(); ++j) acc += b(r, j) * c[j];
            if (acc != v[r]) throw not_in_span("residual nonzero after span solve");
        }
        return c;
    } else {
        Eigen::MatrixXcd bm = detail::to_eigen(b);
        Eigen::VectorXcd vm(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) vm(i) = v[i];
        Eigen::VectorXcd c = bm.completeOrthogonalDecomposition().solve(vm);
        double scale = std::max(1.0, vm.norm());
        if ((bm * c - vm).norm() > tol * scale)
            throw not_in_span("residual above tolerance in span solve");
        std::vector<S> out(c.size());
        for (Eigen::Index i = 0; i < c.size(); ++i) out[i] = c(i);
        return out;
    }
}

/// Compression Q^T * A * Q of a bilinear form onto a subspace basis.
/// Plain transpose: the elimination identities are bilinear, and the
/// exact fixtures are real, where this coincides with Q*.
template <class S>
Matrix<S> compress_form(const Matrix<S>& a, const SubspaceBasis<S>& sub) {
    return sub.basis.transpose() * a * sub.basis;
}

}  // namespace curvelim
