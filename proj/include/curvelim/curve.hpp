#pragma once

#include <array>
#include <map>
#include <utility>
#include <vector>

#include "curvelim/detrep.hpp"
#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"

namespace curvelim {

/// Blown space W_n: coordinates indexed by (degree-(n-1) monomial, fiber),
/// monomial-major in the canonical order.
inline std::size_t blown_dim(unsigned n, std::size_t m) { return m * n * (n + 1) / 2; }

/// Principal subspace V_n of W_n: the joint kernel of the shift
/// compatibility constraints D0*w_{j+e0} + D1*w_{j+e1} + D2*w_{j+e2} = 0
/// over |j| = n-2. Its dimension is always n*m; anything else aborts.
struct PrincipalSubspace {
    unsigned n = 0;
    std::size_t m = 0;
    SubspaceBasis<ExactScalar> basis;
};

inline PrincipalSubspace principal_subspace(const ExactDetRep& d, unsigned n) {
    if (n < 1) throw shape_error("principal_subspace wants n >= 1");
    PrincipalSubspace out;
    out.n = n;
    out.m = d.m;
    std::size_t wdim = blown_dim(n, d.m);
    if (n == 1) {
        out.basis = SubspaceBasis<ExactScalar>{wdim, ExactMatrix::identity(wdim)};
        return out;
    }
    MonomialOrder rows_order(n - 2), cols_order(n - 1);
    ExactMatrix c(d.m * rows_order.size(), wdim);
    for (std::size_t jj = 0; jj < rows_order.size(); ++jj) {
        for (std::size_t k = 0; k < 3; ++k) {
            std::size_t colblk = cols_order.index_of(rows_order.at(jj).plus(k));
            for (std::size_t r = 0; r < d.m; ++r)
                for (std::size_t cc = 0; cc < d.m; ++cc)
                    c(jj * d.m + r, colblk * d.m + cc) += d.d(k)(r, cc);
        }
    }
    out.basis = kernel_basis(c);
    if (out.basis.dim() != n * d.m)
        throw theorem_violation("principal subspace dimension differs from n*m");
    return out;
}

/// Order-0 Vandermonde vector on the curve: blocks x^i * e over |i| = n-1.
template <class S>
std::vector<S> curve_vandermonde(const PointWithKernel<S>& pk, unsigned n) {
    MonomialOrder order(n - 1);
    std::size_t m = pk.e.size();
    std::vector<S> v(order.size() * m, scalar_traits<S>::zero());
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
        const MultiIndex3& mi = order.at(ii);
        S mono = detail::ipow(pk.point[0], mi.i0) * detail::ipow(pk.point[1], mi.i1) *
                 detail::ipow(pk.point[2], mi.i2);
        for (std::size_t f = 0; f < m; ++f) v[ii * m + f] = mono * pk.e[f];
    }
    return v;
}

namespace detail {

inline HomPoly3 partial(const HomPoly3& p, std::size_t var) {
    if (p.degree() == 0) return HomPoly3(0);
    HomPoly3 out(p.degree() - 1);
    for (const auto& [m, c] : p.coeffs())
        if (m[var] > 0) out.add_to(m.minus(var), ExactScalar(long(m[var])) * c);
    return out;
}

}  // namespace detail

/// Order-1 Vandermonde vector at a smooth point, float backend: numeric
/// derivative of t -> (x(t)^i e(t)) along a local parametrization of the
/// curve. Used for multiplicity demonstrations only.
inline std::vector<FloatScalar> curve_vandermonde_order1(const ExactDetRep& d,
                                                         const PointWithKernel<FloatScalar>& pk,
                                                         unsigned n, double tol = 1e-9) {
    if (pk.multi_dim) throw unsupported("order-1 Vandermonde vector at a singular point");
    HomPoly3 delta = det_poly(d);
    const std::array<FloatScalar, 3>& x = pk.point;
    // chart: hold the largest coordinate fixed, move in the other two
    std::size_t fixed = 0;
    for (std::size_t k = 1; k < 3; ++k)
        if (std::abs(x[k]) > std::abs(x[fixed])) fixed = k;
    std::array<FloatScalar, 3> grad;
    for (std::size_t k = 0; k < 3; ++k) grad[k] = detail::partial(delta, k).evaluate(x);
    std::array<std::size_t, 2> free{};
    for (std::size_t k = 0, t = 0; k < 3; ++k)
        if (k != fixed) free[t++] = k;
    if (std::abs(grad[free[0]]) + std::abs(grad[free[1]]) <= tol)
        throw unsupported("order-1 Vandermonde vector at a singular point");
    std::array<FloatScalar, 3> xdot{};
    xdot[free[0]] = -grad[free[1]];
    xdot[free[1]] = grad[free[0]];
    // differentiate (sum_k x_k D_k) e = 0: M(x) edot = -(sum_k xdot_k D_k) e
    FloatDetRep df = to_float(d);
    FloatMatrix pen = pencil_at(df, x);
    FloatMatrix dpen = pencil_at(df, xdot);
    Eigen::MatrixXcd m = detail::to_eigen(pen);
    Eigen::VectorXcd rhs(d.m);
    for (std::size_t r = 0; r < d.m; ++r) {
        FloatScalar acc = 0;
        for (std::size_t c = 0; c < d.m; ++c) acc += dpen(r, c) * pk.e[c];
        rhs(static_cast<Eigen::Index>(r)) = -acc;
    }
    Eigen::VectorXcd edot = m.completeOrthogonalDecomposition().solve(rhs);
    // fix the kernel component by e* . edot = 0
    FloatScalar num = 0, den = 0;
    for (std::size_t r = 0; r < d.m; ++r) {
        num += std::conj(pk.e[r]) * edot(static_cast<Eigen::Index>(r));
        den += std::conj(pk.e[r]) * pk.e[r];
    }
    for (std::size_t r = 0; r < d.m; ++r) edot(static_cast<Eigen::Index>(r)) -= num / den * pk.e[r];

    MonomialOrder order(n - 1);
    std::vector<FloatScalar> v(order.size() * d.m, 0.0);
    for (std::size_t ii = 0; ii < order.size(); ++ii) {
        const MultiIndex3& mi = order.at(ii);
        auto mono = [&](const std::array<FloatScalar, 3>& y) {
            return detail::ipow(y[0], mi.i0) * detail::ipow(y[1], mi.i1) *
                   detail::ipow(y[2], mi.i2);
        };
        FloatScalar mval = mono(x);
        FloatScalar mdot = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            if (mi[k] == 0) continue;
            FloatScalar part = FloatScalar(double(mi[k])) * xdot[k];
            for (std::size_t l = 0; l < 3; ++l) {
                unsigned e = mi[l] - (l == k ? 1 : 0);
                part *= detail::ipow(x[l], e);
            }
            mdot += part;
        }
        for (std::size_t f = 0; f < d.m; ++f)
            v[ii * d.m + f] = mdot * pk.e[f] + mval * edot(static_cast<Eigen::Index>(f));
    }
    return v;
}

/// Matrix of shifts of a degree-n form: row at |i| = n-1 is the
/// coefficient string of x^i * p over the degree-(2n-1) monomials.
inline ExactMatrix trivariate_shift_matrix(const HomPoly3& p) {
    unsigned n = p.degree();
    if (n < 1) throw shape_error("trivariate_shift_matrix wants degree >= 1");
    MonomialOrder rows(n - 1), cols(2 * n - 1);
    ExactMatrix t(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [m, c] : p.coeffs()) t(r, cols.index_of(rows.at(r) + m)) = c;
    return t;
}

/// Generalized shift T'(p): the blown shift kron(T(p), I_m) compressed
/// from the V_2n basis to the V_n basis (an nm x 2nm matrix).
inline ExactMatrix generalized_shift(const ExactDetRep& d, const HomPoly3& p) {
    unsigned n = p.degree();
    PrincipalSubspace vn = principal_subspace(d, n);
    PrincipalSubspace v2n = principal_subspace(d, 2 * n);
    ExactMatrix tbar = kron(trivariate_shift_matrix(p), ExactMatrix::identity(d.m));
    ExactMatrix out(vn.basis.dim(), v2n.basis.dim());
    for (std::size_t col = 0; col < v2n.basis.dim(); ++col) {
        ExactMatrix w = tbar * v2n.basis.basis.col(col);
        std::vector<ExactScalar> c;
        try {
            c = solve_in_span(vn.basis, w.col_vec(0));
        } catch (const not_in_span&) {
            throw theorem_violation("blown shift image left the principal subspace");
        }
        for (std::size_t r = 0; r < c.size(); ++r) out(r, col) = c[r];
    }
    if (!p.is_zero() && rank(out) != n * d.m)
        warn("generalized shift rank below n*m; the form may vanish on the curve");
    return out;
}

/// Sylvester matrix along the curve: T'(p) stacked over T'(q) (2nm square).
inline ExactMatrix generalized_sylvester(const ExactDetRep& d, const HomPoly3& p,
                                         const HomPoly3& q) {
    if (p.degree() != q.degree()) throw shape_error("generalized_sylvester wants equal degrees");
    return vstack(generalized_shift(d, p), generalized_shift(d, q));
}

/// Number of common zeros of p and q on the curve, with multiplicity.
inline std::size_t count_common_zeros_sylvester(const ExactDetRep& d, const HomPoly3& p,
                                                const HomPoly3& q) {
    ExactMatrix s = generalized_sylvester(d, p, q);
    return s.rows() - rank(s);
}

/// Decomposition of p(x)q(y) - q(x)p(y) over the three line-pair kernels:
///   p(x)q(y) - q(x)p(y) = sum b10_ij x^i (x1y0 - x0y1) y^j
///                       + sum b20_ij x^i (x2y0 - x0y2) y^j
///                       + sum b12_ij x^i (x1y2 - x2y1) y^j,  |i| = |j| = n-1.
struct BezoutTriple {
    unsigned n = 0;
    ExactMatrix b10, b20, b12;
};

namespace detail {

using BiIndex = std::pair<MultiIndex3, MultiIndex3>;
using BiPoly = std::map<BiIndex, ExactScalar>;

inline void bi_add(BiPoly& f, const BiIndex& k, const ExactScalar& c) {
    auto it = f.find(k);
    if (it == f.end()) {
        if (!c.is_zero()) f.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) f.erase(it);
}

inline BiPoly antisym_product(const HomPoly3& p, const HomPoly3& q) {
    BiPoly f;
    for (const auto& [mp, cp] : p.coeffs())
        for (const auto& [mq, cq] : q.coeffs()) {
            bi_add(f, {mp, mq}, cp * cq);
            bi_add(f, {mq, mp}, -(cp * cq));
        }
    return f;
}

}  // namespace detail

namespace detail {

/// One emitted kernel term: sign * x^i K_slot y^j.
struct KernelTerm {
    long sign;
    MultiIndex3 i, j;
    std::size_t slot;
};

/// Telescoping decomposition of the antisymmetrized monomial pair
/// x^k y^l - x^l y^k over the cyclic kernels K0 = x1y2 - x2y1,
/// K1 = x2y0 - x0y2, K2 = x0y1 - x1y0:
///   x^k y^l - x^l y^k = s * x^(k-e_u) K y^(l-e_v)
///                     + x^(e_v) (x^(k-e_u) y^(l-e_v) - x^(l-e_v) y^(k-e_u)) y^(e_u)
/// with u the first index where k exceeds l and v the first where l
/// exceeds k; the degree drops by one each level, so it terminates.
inline void decomp_pair(const MultiIndex3& k, const MultiIndex3& l,
                        std::vector<KernelTerm>& out) {
    if (k == l) return;
    std::size_t u = 3, v = 3;
    for (std::size_t a = 0; a < 3; ++a) {
        if (u == 3 && k[a] > l[a]) u = a;
        if (v == 3 && l[a] > k[a]) v = a;
    }
    auto kernel_slot = [](std::size_t a, std::size_t b) {
        // K_{ab} = x_a y_b - x_b y_a expressed against the cyclic kernels
        if (a == 1 && b == 2) return std::pair<std::size_t, long>{0, 1};
        if (a == 2 && b == 1) return std::pair<std::size_t, long>{0, -1};
        if (a == 2 && b == 0) return std::pair<std::size_t, long>{1, 1};
        if (a == 0 && b == 2) return std::pair<std::size_t, long>{1, -1};
        if (a == 0 && b == 1) return std::pair<std::size_t, long>{2, 1};
        return std::pair<std::size_t, long>{2, -1};  // (1,0)
    };
    auto [slot, sign] = kernel_slot(u, v);
    MultiIndex3 ku = k.minus(u), lv = l.minus(v);
    out.push_back({sign, ku, lv, slot});
    std::size_t mark = out.size();
    decomp_pair(ku, lv, out);
    for (std::size_t t = mark; t < out.size(); ++t) {
        out[t].i = out[t].i.plus(v);
        out[t].j = out[t].j.plus(u);
    }
}

}  // namespace detail

inline BezoutTriple hom_bezout_decomposition(const HomPoly3& p, const HomPoly3& q) {
    unsigned n = p.degree();
    if (q.degree() != n) throw shape_error("hom_bezout_decomposition wants equal degrees");
    MonomialOrder order(n - 1);
    std::size_t nn = order.size();
    std::array<ExactMatrix, 3> gamma = {ExactMatrix(nn, nn), ExactMatrix(nn, nn),
                                        ExactMatrix(nn, nn)};
    std::vector<detail::KernelTerm> terms;
    for (const auto& [mp, cp] : p.coeffs())
        for (const auto& [mq, cq] : q.coeffs()) {
            terms.clear();
            detail::decomp_pair(mp, mq, terms);
            for (const auto& t : terms)
                gamma[t.slot](order.index_of(t.i), order.index_of(t.j)) +=
                    ExactScalar(t.sign) * cp * cq;
        }
    ExactScalar half(1, 2);
    for (auto& g : gamma) g = half * (g + g.transpose());
    // re-verify the identity by symbolic expansion
    detail::BiPoly check = detail::antisym_product(p, q);
    auto subtract_kernel = [&](const ExactMatrix& g, std::size_t u, std::size_t v) {
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) {
                if (g(i, j).is_zero()) continue;
                detail::bi_add(check, {order.at(i).plus(u), order.at(j).plus(v)}, -g(i, j));
                detail::bi_add(check, {order.at(i).plus(v), order.at(j).plus(u)}, g(i, j));
            }
    };
    subtract_kernel(gamma[0], 1, 2);
    subtract_kernel(gamma[1], 2, 0);
    subtract_kernel(gamma[2], 0, 1);
    if (!check.empty())
        throw theorem_violation("kernel decomposition identity failed verification");
    BezoutTriple out;
    out.n = n;
    out.b12 = gamma[0];
    out.b20 = gamma[1];
    out.b10 = ExactScalar(-1) * gamma[2];  // spec kernel x1y0 - x0y1 = -K2
    return out;
}

/// Blown Bezout matrix on W_n. The kernel-to-pencil pairing is cyclic:
/// the coefficient of (x1y2 - x2y1) rides with D0, of (x2y0 - x0y2) with
/// D1, of (x0y1 - x1y0) with D2 (fixed by the n = 1 identity-map check).
inline ExactMatrix blown_bezout(const ExactDetRep& d, const HomPoly3& p, const HomPoly3& q) {
    BezoutTriple t = hom_bezout_decomposition(p, q);
    return kron(t.b12, d.d0) + kron(t.b20, d.d1) + kron(ExactScalar(-1) * t.b10, d.d2);
}

/// Bezout matrix along the curve: blown Bezout compressed to the
/// principal-subspace basis (nm square).
inline ExactMatrix restricted_bezout(const ExactDetRep& d, const HomPoly3& p, const HomPoly3& q) {
    PrincipalSubspace vn = principal_subspace(d, p.degree());
    return compress_form(blown_bezout(d, p, q), vn.basis);
}

inline std::size_t count_common_zeros_bezout(const ExactDetRep& d, const HomPoly3& p,
                                             const HomPoly3& q) {
    ExactMatrix b = restricted_bezout(d, p, q);
    return b.rows() - rank(b);
}

/// The pairing [e,h]_{x,y}: the common value of
///   e^T D0 h / (x1y2 - x2y1) = e^T D1 h / (x2y0 - x0y2)
///     = e^T D2 h / (x0y1 - x1y0).
/// Every expression with a nonzero denominator is evaluated and their
/// agreement asserted.
template <class S>
S pairing(const DetRep<S>& d, const PointWithKernel<S>& pk1, const PointWithKernel<S>& pk2,
          double tol = 1e-9) {
    const auto& x = pk1.point;
    const auto& y = pk2.point;
    std::array<S, 3> dens = {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2],
                             x[0] * y[1] - x[1] * y[0]};
    double scale = 0;
    for (std::size_t k = 0; k < 3; ++k)
        scale = std::max(scale, scalar_traits<S>::abs_approx(dens[k]));
    std::vector<S> values;
    for (std::size_t k = 0; k < 3; ++k) {
        bool nonzero = scalar_traits<S>::is_exact
                           ? !scalar_traits<S>::is_zero(dens[k])
                           : scalar_traits<S>::abs_approx(dens[k]) > tol * std::max(1.0, scale);
        if (!nonzero) continue;
        S num = scalar_traits<S>::zero();
        for (std::size_t r = 0; r < pk1.e.size(); ++r)
            for (std::size_t c = 0; c < pk2.e.size(); ++c) num += pk1.e[r] * d.d(k)(r, c) * pk2.e[c];
        values.push_back(num / dens[k]);
    }
    if (values.empty())
        throw all_denominators_zero("pairing undefined: the two points coincide projectively");
    for (std::size_t i = 1; i < values.size(); ++i) {
        bool agree;
        if constexpr (scalar_traits<S>::is_exact)
            agree = values[i] == values[0];
        else {
            double ref = std::max(1.0, std::abs(values[0]));
            agree = std::abs(values[i] - values[0]) <= tol * ref;
        }
        if (!agree) throw disagreement_detected("pairing expressions disagree across slots");
    }
    return values[0];
}

/// V^T(x,e) B'(p,q) V(y,h) = (p(x)q(y) - q(x)p(y)) [e,h]_{x,y}, checked
/// exactly in the ambient blown space (both Vandermonde vectors lie in
/// V_n, where the ambient and compressed forms agree).
inline bool bezout_vandermonde_identity_check(const ExactDetRep& d, const HomPoly3& p,
                                              const HomPoly3& q,
                                              const PointWithKernel<ExactScalar>& pk1,
                                              const PointWithKernel<ExactScalar>& pk2) {
    unsigned n = p.degree();
    ExactMatrix b = blown_bezout(d, p, q);
    std::vector<ExactScalar> vx = curve_vandermonde(pk1, n);
    std::vector<ExactScalar> vy = curve_vandermonde(pk2, n);
    ExactScalar lhs(0);
    for (std::size_t r = 0; r < vx.size(); ++r)
        for (std::size_t c = 0; c < vy.size(); ++c) lhs += vx[r] * b(r, c) * vy[c];
    ExactScalar px = p.evaluate(pk1.point), qx = q.evaluate(pk1.point);
    ExactScalar py = p.evaluate(pk2.point), qy = q.evaluate(pk2.point);
    ExactScalar rhs = (px * qy - qx * py) * pairing(d, pk1, pk2);
    return lhs == rhs;
}

/// The connecting identity along the curve, same block signs on both
/// sides (as in the classical case):
///   S'(p,q)^T [[0,-B'(f,g)],[B'(f,g),0]] S'(p,q)
///     = S'(f,g)^T [[0,-B'(p,q)],[B'(p,q),0]] S'(f,g).
inline bool generalized_kravitsky_check(const ExactDetRep& d, const HomPoly3& p, const HomPoly3& q,
                                        const HomPoly3& f, const HomPoly3& g) {
    if (p.degree() != q.degree() || p.degree() != f.degree() || p.degree() != g.degree())
        throw shape_error("generalized_kravitsky_check wants four equal degrees");
    auto side = [&](const HomPoly3& a, const HomPoly3& b, const HomPoly3& u, const HomPoly3& v) {
        ExactMatrix s = generalized_sylvester(d, a, b);
        ExactMatrix bz = restricted_bezout(d, u, v);
        return s.transpose() * antidiag_blocks(ExactScalar(-1) * bz, bz) * s;
    };
    return side(p, q, f, g) == side(f, g, p, q);
}

/// Vandermonde vectors at the intersection points of n lines with the
/// curve generate V_n: the nm vectors must be distinct-point, rank nm,
/// and each must lie in the principal subspace.
inline bool vandermonde_generation_check(const ExactDetRep& d,
                                         const std::vector<std::array<ExactScalar, 3>>& lines) {
    unsigned n = static_cast<unsigned>(lines.size());
    if (n < 1) throw shape_error("vandermonde_generation_check wants at least one line");
    std::vector<std::array<ExactScalar, 3>> pts;
    for (const auto& line : lines)
        for (const auto& x : sample_points(d, line)) pts.push_back(x);
    if (pts.size() != n * d.m)
        throw error("lines do not meet the curve in n*m rational points");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw error("lines share an intersection point");
    PrincipalSubspace vn = principal_subspace(d, n);
    ExactMatrix vander(blown_dim(n, d.m), pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) {
        PointWithKernel<ExactScalar> pk = kernel_at(d, pts[j]);
        std::vector<ExactScalar> v = curve_vandermonde(pk, n);
        try {
            solve_in_span(vn.basis, v);
        } catch (const not_in_span&) {
            return false;
        }
        for (std::size_t r = 0; r < v.size(); ++r) vander(r, j) = v[r];
    }
    return rank(vander) == n * d.m;
}

}  // namespace curvelim
