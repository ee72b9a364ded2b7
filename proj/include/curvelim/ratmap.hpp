#pragma once

#include <array>
#include <random>
#include <vector>

#include "curvelim/curve.hpp"
#include "curvelim/detrep.hpp"

namespace curvelim {

/// Rational self-map of the plane restricted to the curve:
/// x -> (p0(x), p1(x), p2(x)), with the common zeros of all three forms
/// on the curve declared by the caller as basepoints.
struct RationalMap {
    std::array<HomPoly3, 3> p;
    std::vector<std::array<ExactScalar, 3>> basepoints;

    RationalMap(HomPoly3 p0, HomPoly3 p1, HomPoly3 p2,
                std::vector<std::array<ExactScalar, 3>> bps = {})
        : p{std::move(p0), std::move(p1), std::move(p2)}, basepoints(std::move(bps)) {
        if (p[0].degree() != p[1].degree() || p[0].degree() != p[2].degree())
            throw shape_error("rational map wants three forms of one degree");
    }

    unsigned degree() const { return p[0].degree(); }

    std::array<ExactScalar, 3> apply(const std::array<ExactScalar, 3>& x) const {
        return {p[0].evaluate(x), p[1].evaluate(x), p[2].evaluate(x)};
    }
    std::array<FloatScalar, 3> apply(const std::array<FloatScalar, 3>& x) const {
        return {p[0].evaluate(x), p[1].evaluate(x), p[2].evaluate(x)};
    }

    bool is_basepoint(const std::array<ExactScalar, 3>& x) const {
        std::array<ExactScalar, 3> nx = normalize_point(x);
        for (const auto& b : basepoints)
            if (normalize_point(b) == nx) return true;
        return false;
    }
};

/// Checks the map's preconditions against the source representation:
/// forms not all proportional, declared basepoints on the curve and
/// annihilating all three forms; warns when pairwise common-zero counts
/// hint at undeclared basepoints.
inline void validate_map(const ExactDetRep& d, const RationalMap& r) {
    // proportional forms iff all pairwise antisymmetric products vanish
    bool all_prop = true;
    for (std::size_t i = 0; i < 3 && all_prop; ++i)
        for (std::size_t j = i + 1; j < 3 && all_prop; ++j)
            all_prop = detail::antisym_product(r.p[i], r.p[j]).empty();
    if (all_prop) throw error("rational map collapses to a point (proportional forms)");
    for (const auto& b : r.basepoints) {
        if (!on_curve(d, b)) throw error("declared basepoint is not on the curve");
        for (const auto& form : r.p)
            if (!form.evaluate(b).is_zero())
                throw error("declared basepoint does not annihilate all three forms");
    }
    std::size_t min_pair = count_common_zeros_sylvester(d, r.p[0], r.p[1]);
    min_pair = std::min(min_pair, count_common_zeros_sylvester(d, r.p[0], r.p[2]));
    min_pair = std::min(min_pair, count_common_zeros_sylvester(d, r.p[1], r.p[2]));
    if (min_pair > r.basepoints.size())
        warn("pairwise common-zero counts exceed the declared basepoints; "
             "the map may have undeclared basepoints");
}

/// Basis (in V_n coordinates) of the orthogonal complement, inside V_n,
/// of the basepoint Vandermonde vectors, under the standard inner product
/// on the blown space.
inline SubspaceBasis<ExactScalar> reduced_subspace(const ExactDetRep& d, const RationalMap& r,
                                                   const PrincipalSubspace& vn) {
    if (r.basepoints.empty())
        return SubspaceBasis<ExactScalar>{vn.basis.dim(),
                                          ExactMatrix::identity(vn.basis.dim())};
    ExactMatrix vb(blown_dim(vn.n, d.m), r.basepoints.size());
    for (std::size_t j = 0; j < r.basepoints.size(); ++j) {
        PointWithKernel<ExactScalar> pk = kernel_at(d, r.basepoints[j]);
        std::vector<ExactScalar> v = curve_vandermonde(pk, vn.n);
        for (std::size_t i = 0; i < v.size(); ++i) vb(i, j) = v[i];
    }
    return kernel_basis(conj_transpose(vb) * vn.basis.basis);
}

/// Determinantal representation of the image curve r(C):
/// det(x0 * B(p1,p2) + x1 * B(p2,p0) + x2 * B(p0,p1)) after compressing
/// each curve Bezout matrix to the reduced subspace.
struct ImagePencil {
    ExactDetRep pencil;
    std::size_t reduced_dim = 0;
};

inline ImagePencil image_pencil(const ExactDetRep& d, const RationalMap& r) {
    validate_map(d, r);
    unsigned n = r.degree();
    PrincipalSubspace vn = principal_subspace(d, n);
    SubspaceBasis<ExactScalar> red = reduced_subspace(d, r, vn);
    auto slot = [&](std::size_t i, std::size_t j) {
        return compress_form(compress_form(blown_bezout(d, r.p[i], r.p[j]), vn.basis), red);
    };
    ImagePencil out;
    out.reduced_dim = red.dim();
    out.pencil = ExactDetRep(slot(1, 2), slot(2, 0), slot(0, 1));
    det_poly(out.pencil);  // rejects identically-zero determinants
    return out;
}

/// The annihilation behind the image theorem: the matrix
/// p0(x) B'(p1,p2) + p1(x) B'(p2,p0) + p2(x) B'(p0,p1) kills the
/// Vandermonde vector at every curve point x.
inline bool vanishing_combination_check(const ExactDetRep& d, const RationalMap& r,
                                        const PointWithKernel<ExactScalar>& pk) {
    unsigned n = r.degree();
    PrincipalSubspace vn = principal_subspace(d, n);
    std::array<ExactScalar, 3> w = r.apply(pk.point);
    ExactMatrix combo =
        w[0] * compress_form(blown_bezout(d, r.p[1], r.p[2]), vn.basis) +
        w[1] * compress_form(blown_bezout(d, r.p[2], r.p[0]), vn.basis) +
        w[2] * compress_form(blown_bezout(d, r.p[0], r.p[1]), vn.basis);
    std::vector<ExactScalar> coords = solve_in_span(vn.basis, curve_vandermonde(pk, n));
    return (combo * ExactMatrix::column(coords)).is_zero();
}

struct VerifyReport {
    std::size_t points_tested = 0;
    std::size_t failures = 0;
    double max_residual = 0.0;
    bool ok() const { return failures == 0 && points_tested > 0; }
};

/// Samples curve points on seeded random lines, pushes them through the
/// map, and checks the image-pencil determinant vanishes there.
inline VerifyReport verify_image(const ExactDetRep& d, const RationalMap& r,
                                 const ImagePencil& img, std::size_t samples, unsigned seed = 0,
                                 bool use_float = false, double tol = 1e-8) {
    VerifyReport rep;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> coeff(-9, 9);
    FloatDetRep imgf = to_float(img.pencil);
    double mscale = 0;
    for (std::size_t k = 0; k < 3; ++k)
        for (const auto& e : imgf.d(k).entries()) mscale = std::max(mscale, std::abs(e));
    std::size_t attempts = 0;
    while (rep.points_tested < samples && attempts < 50 * (samples + 1)) {
        ++attempts;
        std::array<ExactScalar, 3> line = {ExactScalar(coeff(rng)), ExactScalar(coeff(rng)),
                                           ExactScalar(coeff(rng))};
        if (line[0].is_zero() && line[1].is_zero() && line[2].is_zero()) continue;
        if (!use_float) {
            std::vector<std::array<ExactScalar, 3>> pts;
            try {
                pts = sample_points(d, line);
            } catch (const error&) {
                continue;
            }
            for (const auto& x : pts) {
                if (rep.points_tested >= samples) break;
                if (r.is_basepoint(x)) continue;
                std::array<ExactScalar, 3> w = r.apply(x);
                if (w[0].is_zero() && w[1].is_zero() && w[2].is_zero()) continue;
                ++rep.points_tested;
                if (!det(pencil_at(img.pencil, w)).is_zero()) ++rep.failures;
            }
        } else {
            std::vector<std::array<FloatScalar, 3>> pts;
            try {
                pts = sample_points_float(d, line);
            } catch (const error&) {
                continue;
            }
            for (const auto& x : pts) {
                if (rep.points_tested >= samples) break;
                std::array<FloatScalar, 3> w = r.apply(x);
                double wmax = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
                if (wmax == 0) continue;
                ++rep.points_tested;
                double scale = std::pow(std::max(1.0, mscale) * std::max(1.0, wmax),
                                        static_cast<double>(img.pencil.m));
                double res = std::abs(det(pencil_at(imgf, w))) / scale;
                rep.max_residual = std::max(rep.max_residual, res);
                if (res > tol) ++rep.failures;
            }
        }
    }
    return rep;
}

/// First-nonzero-coefficient normalization; two forms are proportional
/// iff the normalized coefficient maps are equal.
inline bool proportional_forms(const HomPoly3& a, const HomPoly3& b) {
    if (a.degree() != b.degree()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    ExactScalar ca = a.coeffs().begin()->second;
    ExactScalar cb = b.coeffs().begin()->second;
    if (!(a.coeffs().begin()->first == b.coeffs().begin()->first)) return false;
    return (ExactScalar(1) / ca) * a == (ExactScalar(1) / cb) * b;
}

struct ComposeReport {
    bool proportional = false;
    bool tau_checked = false;
    bool tau_ok = false;
    HomPoly3 det_direct{0}, det_staged{0};
};

/// Compares the two constructions of a representation of s(r(C)):
/// (a) directly on C from the composite forms s o r (degree n*k), and
/// (b) on the image representation of r(C) from s (degree k); their
/// determinants must agree up to one nonzero scalar. For n = k = 1 the
/// compression between the two constructions is trivial and the stronger
/// matrix identity B_C(s_i o r, s_j o r) = B_{r(C)}(s_i, s_j) is checked
/// exactly.
inline ComposeReport compose_check(const ExactDetRep& d, const RationalMap& r,
                                   const RationalMap& s, bool check_tau = false) {
    ComposeReport rep;
    RationalMap composite(s.p[0].substitute(r.p), s.p[1].substitute(r.p),
                          s.p[2].substitute(r.p));
    ImagePencil direct = image_pencil(d, composite);
    ImagePencil stage1 = image_pencil(d, r);
    ImagePencil staged = image_pencil(stage1.pencil, s);
    rep.det_direct = det_poly(direct.pencil);
    rep.det_staged = det_poly(staged.pencil);
    rep.proportional = proportional_forms(rep.det_direct, rep.det_staged);
    if (check_tau) {
        if (r.degree() != 1 || s.degree() != 1)
            throw unsupported("the compression identity is implemented for degree-1 maps only");
        rep.tau_checked = true;
        rep.tau_ok = true;
        for (std::size_t i = 0; i < 3 && rep.tau_ok; ++i)
            for (std::size_t j = i + 1; j < 3 && rep.tau_ok; ++j) {
                ExactMatrix lhs = restricted_bezout(d, composite.p[i], composite.p[j]);
                ExactMatrix rhs = restricted_bezout(stage1.pencil, s.p[i], s.p[j]);
                rep.tau_ok = (lhs == rhs);
            }
    }
    return rep;
}

struct EquivalenceReport {
    bool proportional = false;
    HomPoly3 det_original{0}, det_transformed{0};
};

/// Equivalent source representations produce image pencils with
/// proportional determinants.
inline EquivalenceReport equivalence_preservation_check(const ExactDetRep& d,
                                                        const ExactMatrix& p,
                                                        const RationalMap& r) {
    EquivalenceReport rep;
    rep.det_original = det_poly(image_pencil(d, r).pencil);
    rep.det_transformed = det_poly(image_pencil(transform(d, p), r).pencil);
    rep.proportional = proportional_forms(rep.det_original, rep.det_transformed);
    return rep;
}

}  // namespace curvelim
