#pragma once

// Shared test utilities: seeded random inputs and an independent
// row-reduction rank oracle (deliberately written differently from the
// library's elimination).

#include <random>

#include "curvelim/curvelim.hpp"

namespace testutil {

using namespace curvelim;

inline std::mt19937& rng() {
    static std::mt19937 gen(12345);
    return gen;
}

inline ExactScalar rand_int_scalar(long lo = -5, long hi = 5) {
    std::uniform_int_distribution<long> d(lo, hi);
    return ExactScalar(d(rng()));
}

inline ExactMatrix rand_matrix(std::size_t r, std::size_t c, long lo = -5, long hi = 5) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_int_scalar(lo, hi);
    return m;
}

inline ExactMatrix rand_invertible(std::size_t n) {
    for (;;) {
        ExactMatrix m = rand_matrix(n, n);
        if (!det(m).is_zero()) return m;
    }
}

inline UniPoly rand_unipoly(unsigned degree, bool monic_tail = false) {
    std::vector<ExactScalar> c(degree + 1);
    for (auto& v : c) v = rand_int_scalar();
    if (monic_tail || c.back().is_zero()) c.back() = ExactScalar(1);
    return UniPoly(std::move(c));
}

inline HomPoly3 rand_hompoly(unsigned degree) {
    MonomialOrder order(degree);
    HomPoly3 p(degree);
    for (const auto& m : order.list()) p.set(m, rand_int_scalar());
    if (p.is_zero()) p.set(order.at(0), ExactScalar(1));
    return p;
}

/// Independent rank oracle: plain forward elimination with partial
/// pivoting by first nonzero entry, no back substitution.
inline std::size_t rank_oracle(ExactMatrix a) {
    std::size_t rk = 0;
    for (std::size_t col = 0; col < a.cols(); ++col) {
        std::size_t piv = rk;
        while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(rk, c), a(piv, c));
        for (std::size_t r = rk + 1; r < a.rows(); ++r) {
            if (a(r, col).is_zero()) continue;
            ExactScalar f = a(r, col) / a(rk, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(rk, c);
        }
        ++rk;
    }
    return rk;
}

/// Inverse of a small exact matrix via the library kernel-free route:
/// solve A X = I column by column with the rank oracle style elimination.
inline ExactMatrix inverse(const ExactMatrix& a) {
    std::size_t n = a.rows();
    ExactMatrix aug = hstack(a, ExactMatrix::identity(n));
    // full Gauss-Jordan
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug(piv, col).is_zero()) ++piv;
        if (piv == n) throw error("singular matrix in test inverse");
        for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(col, c), aug(piv, c));
        ExactScalar inv = ExactScalar(1) / aug(col, col);
        for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col).is_zero()) continue;
            ExactScalar f = aug(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
        }
    }
    ExactMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

}  // namespace testutil
