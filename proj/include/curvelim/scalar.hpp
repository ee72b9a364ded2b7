#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "curvelim/errors.hpp"

namespace curvelim {

/// Exact Gaussian-rational scalar: re + im*i with big-rational parts.
/// The imaginary part is zero unless the Gaussian extension is actually
/// used, so plain rational arithmetic and formats are the default.
class ExactScalar {
public:
    ExactScalar() : re_(0), im_(0) {}
    ExactScalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
    ExactScalar(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
    explicit ExactScalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static ExactScalar i() { return ExactScalar(0, mpq_class(1)); }
    static ExactScalar from_rational(long num, long den) { return {num, den}; }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ExactScalar conj() const { return ExactScalar(re_, -im_); }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re_ + b.re_), mpq_class(a.im_ + b.im_));
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re_ - b.re_), mpq_class(a.im_ - b.im_));
    }
    friend ExactScalar operator-(const ExactScalar& a) {
        return ExactScalar(mpq_class(-a.re_), mpq_class(-a.im_));
    }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return ExactScalar(mpq_class(a.re_ * b.re_ - a.im_ * b.im_),
                           mpq_class(a.re_ * b.im_ + a.im_ * b.re_));
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        if (b.is_zero()) throw error("division by zero ExactScalar");
        mpq_class n(b.re_ * b.re_ + b.im_ * b.im_);
        return ExactScalar(mpq_class((a.re_ * b.re_ + a.im_ * b.im_) / n),
                           mpq_class((a.im_ * b.re_ - a.re_ * b.im_) / n));
    }
    ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
    ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
    ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
    ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    /// Total order for canonical/deterministic choices (not a field order).
    friend bool operator<(const ExactScalar& a, const ExactScalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        return a.im_ < b.im_;
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    /// Serialization: "a" when denominator 1 and imag 0, else "a/b",
    /// with "+c/d*i" appended for a nonzero imaginary part.
    std::string str() const {
        if (im_ == 0) return rat_str(re_);
        std::string s = rat_str(re_);
        std::string t = rat_str(im_);
        if (t[0] != '-') s += '+';
        return s + t + "*i";
    }

private:
    static std::string rat_str(const mpq_class& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

    mpq_class re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

/// Float backend scalar.
using FloatScalar = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<ExactScalar> {
    static constexpr bool is_exact = true;
    static ExactScalar zero() { return ExactScalar(0); }
    static ExactScalar one() { return ExactScalar(1); }
    static bool is_zero(const ExactScalar& v) { return v.is_zero(); }
    static ExactScalar conj(const ExactScalar& v) { return v.conj(); }
    static double abs_approx(const ExactScalar& v) { return std::abs(v.to_complex()); }
};

template <>
struct scalar_traits<FloatScalar> {
    static constexpr bool is_exact = false;
    static FloatScalar zero() { return {0.0, 0.0}; }
    static FloatScalar one() { return {1.0, 0.0}; }
    static bool is_zero(const FloatScalar& v) { return v == FloatScalar{0.0, 0.0}; }
    static FloatScalar conj(const FloatScalar& v) { return std::conj(v); }
    static double abs_approx(const FloatScalar& v) { return std::abs(v); }
};

}  // namespace curvelim
