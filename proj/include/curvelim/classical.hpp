#pragma once

#include <cstddef>
#include <vector>

#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"

namespace curvelim {

/// Order-k Vandermonde vector at x: entry i is the k-th derivative of x^i,
/// i.e. i(i-1)...(i-k+1) * x^(i-k), zero below index k.
template <class S>
std::vector<S> vandermonde(const S& x, std::size_t n, unsigned k = 0) {
    std::vector<S> v(n, scalar_traits<S>::zero());
    for (std::size_t i = k; i < n; ++i) {
        S c = scalar_traits<S>::one();
        for (unsigned j = 0; j < k; ++j) c = c * detail::to_point_scalar<S>(ExactScalar(long(i - j)));
        v[i] = c * detail::ipow(x, static_cast<unsigned>(i) - k);
    }
    return v;
}

/// Matrix of shifts of p (declared degree n): n x 2n, row k holds the
/// coefficients of x^k * p(x) over degrees 0..2n-1.
inline ExactMatrix shift_matrix(const UniPoly& p) {
    std::size_t n = p.degree();
    if (n < 1) throw shape_error("shift_matrix wants degree >= 1");
    if (p.leading_vanishes()) warn("shift_matrix: leading coefficient vanishes below the declared degree");
    ExactMatrix t(n, 2 * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= n; ++j) t(k, k + j) = p.coeff(static_cast<unsigned>(j));
    return t;
}

/// Sylvester matrix: shifts of p stacked over shifts of q (2n x 2n).
inline ExactMatrix sylvester(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != q.degree()) throw shape_error("sylvester wants equal declared degrees");
    return vstack(shift_matrix(p), shift_matrix(q));
}

inline ExactScalar resultant(const UniPoly& p, const UniPoly& q) { return det(sylvester(p, q)); }

namespace detail {

/// Bezout coefficients by dividing p(x)q(y) - q(x)p(y) by (x - y) in x
/// (synthetic division; the remainder must vanish identically). Used as
/// the independent second construction path.
inline ExactMatrix bezout_by_division(const UniPoly& p, const UniPoly& q) {
    std::size_t n = p.degree();
    // f = sum_a F_a(y) x^a with F_a(y) = sum_b (p_a q_b - q_a p_b) y^b
    std::vector<std::vector<ExactScalar>> f(n + 1, std::vector<ExactScalar>(n + 1));
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b)
            f[a][b] = p.coeff(static_cast<unsigned>(a)) * q.coeff(static_cast<unsigned>(b)) -
                      q.coeff(static_cast<unsigned>(a)) * p.coeff(static_cast<unsigned>(b));
    // quotient Q_a(y), a = n-1 .. 0: Q_{n-1} = F_n, Q_{a-1} = F_a + y*Q_a
    std::vector<std::vector<ExactScalar>> quo(n, std::vector<ExactScalar>(n + 1, ExactScalar(0)));
    for (std::size_t b = 0; b <= n; ++b) quo[n - 1][b] = f[n][b];
    for (std::size_t a = n - 1; a >= 1; --a) {
        for (std::size_t b = 0; b <= n; ++b) quo[a - 1][b] = f[a][b];
        for (std::size_t b = 0; b < n; ++b) quo[a - 1][b + 1] += quo[a][b];
    }
    // the quotient is the Bezoutian, y-degree <= n-1; remainder F_0 + y*Q_0
    // must vanish identically
    for (std::size_t a = 0; a < n; ++a)
        if (!quo[a][n].is_zero())
            throw disagreement_detected("Bezout division overflowed the expected y-degree");
    for (std::size_t b = 0; b <= n; ++b) {
        ExactScalar r = f[0][b] + (b > 0 ? quo[0][b - 1] : ExactScalar(0));
        if (!r.is_zero()) throw disagreement_detected("nonzero remainder in Bezout division");
    }
    ExactMatrix bz(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) bz(i, j) = quo[i][j];
    return bz;
}

}  // namespace detail

/// Bezout matrix: the unique n x n symmetric B with
///   p(x)q(y) - q(x)p(y) = sum b_ij x^i (x - y) y^j.
/// Built by solving the coefficient-matching linear system, then
/// cross-checked against the division construction.
inline ExactMatrix bezout(const UniPoly& p, const UniPoly& q) {
    if (p.degree() != q.degree()) throw shape_error("bezout wants equal declared degrees");
    std::size_t n = p.degree();
    if (n < 1) throw shape_error("bezout wants degree >= 1");
    // unknown column (i,j): x^i(x-y)y^j contributes +1 at monomial
    // x^(i+1) y^j and -1 at x^i y^(j+1); rows indexed by (a,b), a,b <= n.
    std::size_t rows = (n + 1) * (n + 1);
    SubspaceBasis<ExactScalar> sys;
    sys.ambient_dim = rows;
    sys.basis = ExactMatrix(rows, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t col = i * n + j;
            sys.basis((i + 1) * (n + 1) + j, col) = ExactScalar(1);
            sys.basis(i * (n + 1) + (j + 1), col) = ExactScalar(-1);
        }
    std::vector<ExactScalar> lhs(rows);
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b)
            lhs[a * (n + 1) + b] =
                p.coeff(static_cast<unsigned>(a)) * q.coeff(static_cast<unsigned>(b)) -
                q.coeff(static_cast<unsigned>(a)) * p.coeff(static_cast<unsigned>(b));
    std::vector<ExactScalar> c = solve_in_span(sys, lhs);
    ExactMatrix bz(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) bz(i, j) = c[i * n + j];
    if (bz != bz.transpose()) throw disagreement_detected("Bezout solution not symmetric");
    if (bz != detail::bezout_by_division(p, q))
        throw disagreement_detected("Bezout construction paths disagree");
    return bz;
}

/// The Sylvester/Bezout connecting identity: for any p, q, f, g of one
/// declared degree,
///   S^T(p,q) [[0,-B(f,g)],[B(f,g),0]] S(p,q)
///     = S^T(f,g) [[0,-B(p,q)],[B(p,q),0]] S(f,g).
/// Both sides carry the same block signs; specializing f = 1, g = x^n
/// recovers the antidiagonal-unit form (B(1, x^n) = -J_n).
inline bool kravitsky_check(const UniPoly& p, const UniPoly& q, const UniPoly& f,
                            const UniPoly& g) {
    if (p.degree() != q.degree() || p.degree() != f.degree() || p.degree() != g.degree())
        throw shape_error("kravitsky_check wants four equal declared degrees");
    auto side = [](const ExactMatrix& s, const ExactMatrix& b) {
        return s.transpose() * antidiag_blocks(-b, b) * s;
    };
    return side(sylvester(p, q), bezout(f, g)) == side(sylvester(f, g), bezout(p, q));
}

/// Determinantal representation of the image of a line under the rational
/// map x -> (p0(x), p1(x), p2(x)): det(x0*M0 + x1*M1 + x2*M2) vanishes on
/// the image, with the cyclic slot assignment M0 = B(p1,p2),
/// M1 = B(p2,p0), M2 = B(p0,p1) (fixed by the vanishing test on the
/// Pythagorean parametrization).
struct LinePencil {
    ExactMatrix m0, m1, m2;
};

inline LinePencil line_image_pencil(const UniPoly& p0, const UniPoly& p1, const UniPoly& p2) {
    if (p0.degree() != p1.degree() || p0.degree() != p2.degree())
        throw shape_error("line_image_pencil wants equal declared degrees");
    if (p0.is_zero() && p1.is_zero() && p2.is_zero())
        throw error("line_image_pencil: all three forms vanish");
    return LinePencil{bezout(p1, p2), bezout(p2, p0), bezout(p0, p1)};
}

}  // namespace curvelim
