#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"

namespace curvelim {

/// Determinantal representation: the pencil x0*D0 + x1*D1 + x2*D2 whose
/// determinant cuts out a plane curve of degree m.
template <class S>
struct DetRep {
    std::size_t m = 0;
    Matrix<S> d0, d1, d2;
    bool hermitian = false;

    DetRep() = default;
    DetRep(Matrix<S> a0, Matrix<S> a1, Matrix<S> a2, bool herm = false)
        : m(a0.rows()), d0(std::move(a0)), d1(std::move(a1)), d2(std::move(a2)), hermitian(herm) {
        if (d0.cols() != m || d1.rows() != m || d1.cols() != m || d2.rows() != m || d2.cols() != m)
            throw shape_error("DetRep wants three equal square matrices");
    }

    const Matrix<S>& d(std::size_t k) const { return k == 0 ? d0 : (k == 1 ? d1 : d2); }
};

using ExactDetRep = DetRep<ExactScalar>;
using FloatDetRep = DetRep<FloatScalar>;

inline FloatDetRep to_float(const ExactDetRep& d) {
    auto conv = [](const ExactMatrix& a) {
        FloatMatrix f(a.rows(), a.cols());
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c) f(r, c) = a(r, c).to_complex();
        return f;
    };
    return FloatDetRep(conv(d.d0), conv(d.d1), conv(d.d2), d.hermitian);
}

/// Pencil evaluated at a point (same scalar backend as the pencil).
template <class S>
Matrix<S> pencil_at(const DetRep<S>& d, const std::array<S, 3>& x) {
    return x[0] * d.d0 + x[1] * d.d1 + x[2] * d.d2;
}

namespace detail {

/// Laplace expansion along the first column of a matrix of forms.
inline HomPoly3 poly_det(const std::vector<std::vector<HomPoly3>>& a) {
    std::size_t n = a.size();
    if (n == 1) return a[0][0];
    unsigned deg = a[0][0].degree();
    HomPoly3 acc(deg * static_cast<unsigned>(n));
    for (std::size_t r = 0; r < n; ++r) {
        if (a[r][0].is_zero()) continue;
        std::vector<std::vector<HomPoly3>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r) continue;
            minor.emplace_back(a[i].begin() + 1, a[i].end());
        }
        HomPoly3 term = a[r][0] * poly_det(minor);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Exact symbolic determinant of the pencil, a homogeneous form of
/// degree m; identically zero pencils are rejected.
inline HomPoly3 det_poly(const ExactDetRep& d) {
    if (d.m < 1) throw shape_error("det_poly wants m >= 1");
    std::vector<std::vector<HomPoly3>> entries(d.m, std::vector<HomPoly3>(d.m, HomPoly3(1)));
    for (std::size_t r = 0; r < d.m; ++r)
        for (std::size_t c = 0; c < d.m; ++c)
            for (std::size_t k = 0; k < 3; ++k)
                entries[r][c].add_to(MultiIndex3{}.plus(k), d.d(k)(r, c));
    HomPoly3 p = detail::poly_det(entries);
    if (p.is_zero()) throw degenerate_pencil("pencil determinant vanishes identically");
    return p;
}

namespace detail {

template <class S>
bool approx_zero(const S& v, double tol, double scale) {
    if constexpr (scalar_traits<S>::is_exact)
        return scalar_traits<S>::is_zero(v);
    else
        return std::abs(v) <= tol * std::max(1.0, scale);
}

}  // namespace detail

/// On-curve test: det of the evaluated pencil vanishes (exactly, or within
/// tol relative to the point's scale on the float backend).
template <class S>
bool on_curve(const DetRep<S>& d, const std::array<S, 3>& x, double tol = 1e-9) {
    double scale = 1.0;
    if constexpr (!scalar_traits<S>::is_exact) {
        double mx = std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2])});
        scale = std::pow(std::max(1.0, mx), static_cast<double>(d.m));
        double me = 0;
        for (std::size_t k = 0; k < 3; ++k)
            for (const auto& e : d.d(k).entries()) me = std::max(me, std::abs(e));
        scale *= std::pow(std::max(1.0, me), static_cast<double>(d.m));
    }
    return detail::approx_zero(det(pencil_at(d, x)), tol, scale);
}

/// Projective normalization: first (numerically) nonzero coordinate -> 1.
template <class S>
std::array<S, 3> normalize_point(std::array<S, 3> x, double tol = 1e-9) {
    double mx = std::max({scalar_traits<S>::abs_approx(x[0]), scalar_traits<S>::abs_approx(x[1]),
                          scalar_traits<S>::abs_approx(x[2])});
    if (mx == 0) throw error("zero vector is not a projective point");
    for (std::size_t k = 0; k < 3; ++k) {
        bool nonzero = scalar_traits<S>::is_exact ? !scalar_traits<S>::is_zero(x[k])
                                                  : scalar_traits<S>::abs_approx(x[k]) > tol * mx;
        if (nonzero) {
            S inv = scalar_traits<S>::one() / x[k];
            return {x[0] * inv, x[1] * inv, x[2] * inv};
        }
    }
    throw error("zero vector is not a projective point");
}

/// A curve point together with a kernel vector of the pencil there. At
/// singular points the kernel basis has more than one column and
/// multi_dim is set; e is always the first basis column, scaled so its
/// first nonzero entry is 1.
template <class S>
struct PointWithKernel {
    std::array<S, 3> point;
    std::vector<S> e;
    Matrix<S> kernel;  // m x (kernel dimension)
    bool multi_dim = false;
};

template <class S>
PointWithKernel<S> kernel_at(const DetRep<S>& d, const std::array<S, 3>& point_in,
                             double tol = 1e-9) {
    std::array<S, 3> x = normalize_point(point_in, tol);
    if (!on_curve(d, x, tol)) throw point_not_on_curve("pencil determinant nonzero at the point");
    Matrix<S> pen = pencil_at(d, x);
    std::optional<double> cutoff;
    if constexpr (!scalar_traits<S>::is_exact) {
        // the point is on the curve only to within tol, so the near-null
        // singular value sits around tol * scale, far above machine epsilon
        double scale = 0;
        for (const auto& e : pen.entries()) scale = std::max(scale, std::abs(e));
        cutoff = std::sqrt(tol) * std::max(1.0, scale);
    }
    SubspaceBasis<S> ker = kernel_basis(pen, cutoff);
    if (ker.dim() == 0)
        throw point_not_on_curve("pencil kernel trivial despite vanishing determinant");
    PointWithKernel<S> out;
    out.point = x;
    out.kernel = ker.basis;
    out.multi_dim = ker.dim() > 1;
    std::vector<S> e = ker.basis.col_vec(0);
    double mx = 0;
    for (const auto& v : e) mx = std::max(mx, scalar_traits<S>::abs_approx(v));
    for (std::size_t i = 0; i < e.size(); ++i) {
        bool nonzero = scalar_traits<S>::is_exact ? !scalar_traits<S>::is_zero(e[i])
                                                  : scalar_traits<S>::abs_approx(e[i]) > tol * mx;
        if (nonzero) {
            S inv = scalar_traits<S>::one() / e[i];
            for (auto& v : e) v = v * inv;
            break;
        }
    }
    out.e = std::move(e);
    return out;
}

/// Equivalence transform D_i -> P * D_i * P^*; the determinant scales by
/// det(P) * conj(det(P)), asserted on the exact backend.
template <class S>
DetRep<S> transform(const DetRep<S>& d, const Matrix<S>& p) {
    if (p.rows() != d.m || p.cols() != d.m) throw shape_error("transform wants an m x m matrix");
    S dp = det(p);
    if (scalar_traits<S>::is_zero(dp)) throw error("singular transform matrix");
    Matrix<S> ps = conj_transpose(p);
    DetRep<S> out(p * d.d0 * ps, p * d.d1 * ps, p * d.d2 * ps, d.hermitian);
    if constexpr (scalar_traits<S>::is_exact) {
        ExactScalar scale = dp * scalar_traits<S>::conj(dp);
        if (!(det_poly(out) == scale * det_poly(d)))
            throw theorem_violation("transformed determinant did not scale by det(P)conj(det(P))");
    }
    return out;
}

namespace detail {

/// Restriction of a degree-m form to the line l.x = 0, parametrized by
/// s*a + t*b where a, b span the line. Returns coefficients of s^i t^(m-i).
inline std::vector<ExactScalar> line_restriction(const HomPoly3& delta,
                                                 const std::array<ExactScalar, 3>& line,
                                                 std::array<std::vector<ExactScalar>, 2>& span_out) {
    ExactMatrix lrow(1, 3);
    for (std::size_t k = 0; k < 3; ++k) lrow(0, k) = line[k];
    if (lrow.is_zero()) throw error("line form vanishes identically");
    SubspaceBasis<ExactScalar> ker = kernel_basis(lrow);
    span_out[0] = ker.basis.col_vec(0);
    span_out[1] = ker.basis.col_vec(1);
    unsigned m = delta.degree();
    // restrict: x_k = s*a_k + t*b_k; expand per monomial
    std::vector<ExactScalar> coeffs(m + 1, ExactScalar(0));
    // binomial-free expansion: build (a_k s + b_k t)^e iteratively as a
    // coefficient vector over s-degree
    for (const auto& [mi, co] : delta.coeffs()) {
        std::vector<ExactScalar> acc{ExactScalar(1)};
        for (std::size_t k = 0; k < 3; ++k)
            for (unsigned e = 0; e < mi[k]; ++e) {
                std::vector<ExactScalar> nxt(acc.size() + 1, ExactScalar(0));
                for (std::size_t i = 0; i < acc.size(); ++i) {
                    nxt[i + 1] += acc[i] * span_out[0][k];
                    nxt[i] += acc[i] * span_out[1][k];
                }
                acc = std::move(nxt);
            }
        for (std::size_t i = 0; i < acc.size(); ++i) coeffs[i] += co * acc[i];
    }
    return coeffs;
}

/// All rational roots of an exact univariate coefficient vector (constant
/// first), found by the rational-root theorem after integer scaling.
inline std::vector<ExactScalar> rational_roots(std::vector<ExactScalar> c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw error("zero polynomial has every root");
    std::vector<ExactScalar> roots;
    // strip roots at zero
    std::size_t lead0 = 0;
    while (lead0 < c.size() && c[lead0].is_zero()) ++lead0;
    if (lead0 > 0) {
        roots.emplace_back(0);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(lead0));
    }
    if (c.size() <= 1) return roots;
    // common denominator -> integer coefficients
    mpz_class den(1);
    for (const auto& v : c) {
        if (!v.is_real()) throw unsupported("rational root search over Gaussian coefficients");
        den = lcm(den, v.real().get_den());
    }
    std::vector<mpz_class> ic(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        mpq_class scaled = c[i].real() * den;
        scaled.canonicalize();
        ic[i] = scaled.get_num();
    }
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> out;
        v = abs(v);
        for (mpz_class d(1); d * d <= v; ++d)
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        return out;
    };
    auto eval = [&](const mpq_class& x) {
        mpq_class acc(0);
        for (std::size_t i = ic.size(); i-- > 0;) acc = acc * x + mpq_class(ic[i]);
        return acc;
    };
    for (const mpz_class& num : divisors(ic.front()))
        for (const mpz_class& dnm : divisors(ic.back()))
            for (int sign : {1, -1}) {
                mpq_class cand(sign * num, dnm);
                cand.canonicalize();
                if (eval(cand) == 0) {
                    ExactScalar r(cand);
                    bool seen = false;
                    for (const auto& v : roots) seen = seen || v == r;
                    if (!seen) roots.push_back(r);
                }
            }
    return roots;
}

}  // namespace detail

/// Intersections of the curve with a line (exact backend: rational points
/// only). The line is parametrized by the canonical kernel basis of its
/// coefficient row; the degree-m restriction is solved for rational roots
/// and the point at parameter infinity is included when the leading
/// coefficient vanishes.
inline std::vector<std::array<ExactScalar, 3>> sample_points(
    const ExactDetRep& d, const std::array<ExactScalar, 3>& line) {
    HomPoly3 delta = det_poly(d);
    std::array<std::vector<ExactScalar>, 2> span;
    std::vector<ExactScalar> coeffs = detail::line_restriction(delta, line, span);
    bool all_zero = true;
    for (const auto& v : coeffs) all_zero = all_zero && v.is_zero();
    if (all_zero) throw error("line lies inside the curve");
    auto point_of = [&](const ExactScalar& s, const ExactScalar& t) {
        std::array<ExactScalar, 3> x;
        for (std::size_t k = 0; k < 3; ++k) x[k] = s * span[0][k] + t * span[1][k];
        return normalize_point(x);
    };
    std::vector<std::array<ExactScalar, 3>> pts;
    for (const auto& r : detail::rational_roots(coeffs)) pts.push_back(point_of(r, ExactScalar(1)));
    if (coeffs.back().is_zero()) pts.push_back(point_of(ExactScalar(1), ExactScalar(0)));
    for (const auto& x : pts)
        if (!on_curve(d, x)) throw theorem_violation("sampled point failed the on-curve check");
    return pts;
}

/// Float-backend version: all m complex intersection points via the
/// companion matrix of the restriction.
inline std::vector<std::array<FloatScalar, 3>> sample_points_float(
    const ExactDetRep& d, const std::array<ExactScalar, 3>& line, double tol = 1e-9) {
    HomPoly3 delta = det_poly(d);
    std::array<std::vector<ExactScalar>, 2> span;
    std::vector<ExactScalar> coeffs = detail::line_restriction(delta, line, span);
    std::size_t deg = coeffs.size();
    while (deg > 0 && coeffs[deg - 1].is_zero()) --deg;
    if (deg == 0) throw error("line lies inside the curve");
    --deg;  // polynomial degree after trimming
    auto point_of = [&](const FloatScalar& s, const FloatScalar& t) {
        std::array<FloatScalar, 3> x;
        for (std::size_t k = 0; k < 3; ++k)
            x[k] = s * span[0][k].to_complex() + t * span[1][k].to_complex();
        return normalize_point(x, tol);
    };
    std::vector<std::array<FloatScalar, 3>> pts;
    if (deg > 0) {
        Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
        FloatScalar lead = coeffs[deg].to_complex();
        for (std::size_t i = 0; i < deg; ++i) {
            if (i + 1 < deg) comp(i + 1, i) = 1.0;
            comp(i, deg - 1) = -coeffs[i].to_complex() / lead;
        }
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            pts.push_back(point_of(es.eigenvalues()(i), FloatScalar(1.0)));
    }
    for (std::size_t i = deg; i + 1 < coeffs.size(); ++i)
        pts.push_back(point_of(FloatScalar(1.0), FloatScalar(0.0)));
    FloatDetRep df = to_float(d);
    for (const auto& x : pts)
        if (!on_curve(df, x, 1e-7))
            throw theorem_violation("sampled point failed the on-curve check");
    return pts;
}

namespace detail {

/// Heuristic reducibility warning: search small-integer linear forms that
/// divide the determinant (a linear form divides iff the restriction to
/// its zero line vanishes identically).
inline void warn_if_linear_factor(const HomPoly3& delta) {
    if (delta.degree() < 2) return;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                std::array<ExactScalar, 3> line = {ExactScalar(a), ExactScalar(b), ExactScalar(c)};
                std::array<std::vector<ExactScalar>, 2> span;
                std::vector<ExactScalar> coeffs = line_restriction(delta, line, span);
                bool all_zero = true;
                for (const auto& v : coeffs) all_zero = all_zero && v.is_zero();
                if (all_zero) {
                    warn("pencil determinant has a small-integer linear factor; curve may be reducible");
                    return;
                }
            }
}

}  // namespace detail

/// Structural validation: shapes, nonzero determinant, hermitian flag
/// consistency (warning only), reducibility heuristic (warning only).
template <class S>
HomPoly3 validate_rep(const DetRep<S>& d) {
    auto is_herm = [](const Matrix<S>& a) { return a == conj_transpose(a); };
    if (!(is_herm(d.d0) && is_herm(d.d1) && is_herm(d.d2))) {
        if (d.hermitian) warn("pencil flagged hermitian but matrices are not");
    }
    if constexpr (scalar_traits<S>::is_exact) {
        HomPoly3 delta = det_poly(d);
        detail::warn_if_linear_factor(delta);
        return delta;
    } else {
        throw unsupported("validate_rep needs the exact backend");
    }
}

/// Standard test fixtures: a rational conic (m = 2) and an irreducible
/// smooth cubic (m = 3) with small integer symmetric matrices.
inline ExactDetRep conic_fixture() {
    ExactMatrix d0 = ExactMatrix::identity(2);
    ExactMatrix d1 = {{ExactScalar(1), ExactScalar(0)}, {ExactScalar(0), ExactScalar(-1)}};
    ExactMatrix d2 = {{ExactScalar(0), ExactScalar(1)}, {ExactScalar(1), ExactScalar(0)}};
    return ExactDetRep(d0, d1, d2, true);
}

/// Rational point (s^2 + t^2, 2st, s^2 - t^2) on the conic fixture.
inline std::array<ExactScalar, 3> conic_point(const ExactScalar& s, const ExactScalar& t) {
    return {s * s + t * t, ExactScalar(2) * s * t, s * s - t * t};
}

inline ExactDetRep cubic_fixture() {
    ExactMatrix d0 = {{ExactScalar(0), ExactScalar(-1), ExactScalar(1)},
                      {ExactScalar(-1), ExactScalar(-2), ExactScalar(-2)},
                      {ExactScalar(1), ExactScalar(-2), ExactScalar(2)}};
    ExactMatrix d1 = {{ExactScalar(-2), ExactScalar(0), ExactScalar(2)},
                      {ExactScalar(0), ExactScalar(-2), ExactScalar(2)},
                      {ExactScalar(2), ExactScalar(2), ExactScalar(-1)}};
    ExactMatrix d2 = {{ExactScalar(-2), ExactScalar(-2), ExactScalar(1)},
                      {ExactScalar(-2), ExactScalar(1), ExactScalar(-2)},
                      {ExactScalar(1), ExactScalar(-2), ExactScalar(-1)}};
    return ExactDetRep(d0, d1, d2, true);
}

}  // namespace curvelim
