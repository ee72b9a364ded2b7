#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "curvelim/linalg.hpp"
#include "curvelim/matrix.hpp"
#include "curvelim/multi_index.hpp"
#include "curvelim/scalar.hpp"

namespace curvelim {

namespace detail {
template <class T>
T to_point_scalar(const ExactScalar& c) {
    if constexpr (std::is_same_v<T, ExactScalar>)
        return c;
    else
        return c.to_complex();
}
template <class T>
T ipow(const T& base, unsigned e) {
    T acc = scalar_traits<T>::one();
    for (unsigned k = 0; k < e; ++k) acc = acc * base;
    return acc;
}
}  // namespace detail

/// Univariate polynomial with a declared degree; trailing zero
/// coefficients are kept (shift/Sylvester shapes depend on the declared
/// degree, not the support).
class UniPoly {
public:
    UniPoly() : coeffs_(1, ExactScalar(0)) {}
    explicit UniPoly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(ExactScalar(0));
    }
    static UniPoly zero(unsigned declared_degree) {
        return UniPoly(std::vector<ExactScalar>(declared_degree + 1, ExactScalar(0)));
    }

    unsigned degree() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const ExactScalar& coeff(unsigned i) const { return coeffs_[i]; }
    ExactScalar& coeff(unsigned i) { return coeffs_[i]; }
    const std::vector<ExactScalar>& coeffs() const { return coeffs_; }

    bool leading_vanishes() const { return coeffs_.back().is_zero(); }
    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Re-declare at a higher degree (zero padding).
    UniPoly padded(unsigned declared_degree) const {
        std::vector<ExactScalar> c = coeffs_;
        c.resize(declared_degree + 1, ExactScalar(0));
        return UniPoly(std::move(c));
    }

    template <class T>
    T evaluate(const T& x) const {
        T acc = scalar_traits<T>::zero();
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * x + detail::to_point_scalar<T>(coeffs_[i]);
        return acc;
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        std::vector<ExactScalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, ExactScalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<ExactScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()), ExactScalar(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return UniPoly(std::move(c));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<ExactScalar> coeffs_;
};

class AffinePoly2;

/// Homogeneous trivariate polynomial of a declared degree; only nonzero
/// coefficients are stored, keyed by exponent triple in canonical order.
class HomPoly3 {
public:
    explicit HomPoly3(unsigned degree) : degree_(degree) {}
    HomPoly3(unsigned degree, std::map<MultiIndex3, ExactScalar> coeffs)
        : degree_(degree), c_(std::move(coeffs)) {
        for (auto it = c_.begin(); it != c_.end();) {
            if (it->first.degree() != degree_) throw error("coefficient of wrong degree in HomPoly3");
            it = it->second.is_zero() ? c_.erase(it) : std::next(it);
        }
    }

    static HomPoly3 monomial(const MultiIndex3& m, ExactScalar c = ExactScalar(1)) {
        HomPoly3 p(m.degree());
        p.set(m, std::move(c));
        return p;
    }
    static HomPoly3 variable(std::size_t var) {
        return monomial(MultiIndex3{}.plus(var));
    }

    unsigned degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<MultiIndex3, ExactScalar>& coeffs() const { return c_; }

    ExactScalar coeff(const MultiIndex3& m) const {
        auto it = c_.find(m);
        return it == c_.end() ? ExactScalar(0) : it->second;
    }
    void set(const MultiIndex3& m, ExactScalar v) {
        if (m.degree() != degree_) throw error("exponent degree mismatch in HomPoly3::set");
        if (v.is_zero())
            c_.erase(m);
        else
            c_[m] = std::move(v);
    }
    void add_to(const MultiIndex3& m, const ExactScalar& v) { set(m, coeff(m) + v); }

    template <class T>
    T evaluate(const std::array<T, 3>& x) const {
        T acc = scalar_traits<T>::zero();
        for (const auto& [m, co] : c_)
            acc += detail::to_point_scalar<T>(co) * detail::ipow(x[0], m.i0) *
                   detail::ipow(x[1], m.i1) * detail::ipow(x[2], m.i2);
        return acc;
    }

    /// Coefficient string in the canonical order; length (n+1)(n+2)/2.
    std::vector<ExactScalar> coefficient_vector(const MonomialOrder& order) const {
        if (order.degree() != degree_) throw shape_error("MonomialOrder degree mismatch");
        std::vector<ExactScalar> v(order.size(), ExactScalar(0));
        for (const auto& [m, co] : c_) v[order.index_of(m)] = co;
        return v;
    }

    friend HomPoly3 operator*(const HomPoly3& a, const HomPoly3& b) {
        HomPoly3 p(a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.c_)
            for (const auto& [mb, cb] : b.c_) p.add_to(ma + mb, ca * cb);
        return p;
    }
    friend HomPoly3 operator*(const ExactScalar& s, const HomPoly3& a) {
        HomPoly3 p(a.degree_);
        for (const auto& [m, co] : a.c_) p.set(m, s * co);
        return p;
    }
    friend HomPoly3 operator+(const HomPoly3& a, const HomPoly3& b) {
        if (a.degree_ != b.degree_) throw shape_error("degree mismatch in HomPoly3 sum");
        HomPoly3 p = a;
        for (const auto& [m, co] : b.c_) p.add_to(m, co);
        return p;
    }
    friend HomPoly3 operator-(const HomPoly3& a, const HomPoly3& b) {
        return a + (ExactScalar(-1) * b);
    }
    friend bool operator==(const HomPoly3& a, const HomPoly3& b) {
        return a.degree_ == b.degree_ && a.c_ == b.c_;
    }

    /// p composed with x <- A*x for an invertible 3x3 matrix A.
    HomPoly3 linear_change(const ExactMatrix& a) const;

    /// Substitute three degree-n forms for the variables; result has
    /// degree n * degree(this).
    HomPoly3 substitute(const std::array<HomPoly3, 3>& forms) const {
        unsigned n = forms[0].degree();
        if (forms[1].degree() != n || forms[2].degree() != n)
            throw shape_error("substitution forms of unequal degree");
        HomPoly3 out(degree_ * n);
        for (const auto& [m, co] : c_) {
            HomPoly3 term(0);
            term.set(MultiIndex3{0, 0, 0}, co);
            for (std::size_t var = 0; var < 3; ++var)
                for (unsigned k = 0; k < m[var]; ++k) term = term * forms[var];
            out = out + term;
        }
        return out;
    }

    AffinePoly2 dehomogenize() const;

private:
    unsigned degree_;
    std::map<MultiIndex3, ExactScalar> c_;
};

/// Affine bivariate polynomial in x1, x2 with a total degree bound.
class AffinePoly2 {
public:
    explicit AffinePoly2(unsigned degree_bound) : bound_(degree_bound) {}

    unsigned degree_bound() const { return bound_; }
    const std::map<std::pair<unsigned, unsigned>, ExactScalar>& coeffs() const { return c_; }

    ExactScalar coeff(unsigned i1, unsigned i2) const {
        auto it = c_.find({i1, i2});
        return it == c_.end() ? ExactScalar(0) : it->second;
    }
    void set(unsigned i1, unsigned i2, ExactScalar v) {
        if (i1 + i2 > bound_) throw error("bidegree exceeds bound in AffinePoly2::set");
        if (v.is_zero())
            c_.erase({i1, i2});
        else
            c_[{i1, i2}] = std::move(v);
    }

    template <class T>
    T evaluate(const std::array<T, 2>& x) const {
        T acc = scalar_traits<T>::zero();
        for (const auto& [m, co] : c_)
            acc += detail::to_point_scalar<T>(co) * detail::ipow(x[0], m.first) *
                   detail::ipow(x[1], m.second);
        return acc;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, co] : c_) d = std::max(d, m.first + m.second);
        return d;
    }

    /// x0-homogenization of declared degree n (n must cover the support).
    HomPoly3 homogenize(unsigned n) const {
        if (n < total_degree()) throw error("homogenization degree below total degree");
        HomPoly3 p(n);
        for (const auto& [m, co] : c_)
            p.set(MultiIndex3{n - m.first - m.second, m.first, m.second}, co);
        return p;
    }

    friend bool operator==(const AffinePoly2& a, const AffinePoly2& b) {
        return a.bound_ == b.bound_ && a.c_ == b.c_;
    }

private:
    unsigned bound_;
    std::map<std::pair<unsigned, unsigned>, ExactScalar> c_;
};

inline AffinePoly2 HomPoly3::dehomogenize() const {
    AffinePoly2 p(degree_);
    for (const auto& [m, co] : c_) p.set(m.i1, m.i2, co);
    return p;
}

inline HomPoly3 HomPoly3::linear_change(const ExactMatrix& a) const {
    if (a.rows() != 3 || a.cols() != 3) throw shape_error("linear_change wants a 3x3 matrix");
    if (det(a).is_zero()) throw error("singular substitution matrix");
    std::array<HomPoly3, 3> forms = {HomPoly3(1), HomPoly3(1), HomPoly3(1)};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            forms[i].add_to(MultiIndex3{}.plus(j), a(i, j));
    return substitute(forms);
}

}  // namespace curvelim
