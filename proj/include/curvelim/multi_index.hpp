#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "curvelim/errors.hpp"

namespace curvelim {

/// Exponent triple of a trivariate monomial x0^i0 * x1^i1 * x2^i2.
struct MultiIndex3 {
    unsigned i0 = 0, i1 = 0, i2 = 0;

    unsigned degree() const { return i0 + i1 + i2; }

    unsigned operator[](std::size_t k) const { return k == 0 ? i0 : (k == 1 ? i1 : i2); }

    MultiIndex3 plus(std::size_t var, unsigned amount = 1) const {
        MultiIndex3 r = *this;
        (var == 0 ? r.i0 : var == 1 ? r.i1 : r.i2) += amount;
        return r;
    }
    MultiIndex3 minus(std::size_t var, unsigned amount = 1) const {
        MultiIndex3 r = *this;
        unsigned& e = (var == 0 ? r.i0 : var == 1 ? r.i1 : r.i2);
        if (e < amount) throw error("negative exponent in MultiIndex3::minus");
        e -= amount;
        return r;
    }
    friend MultiIndex3 operator+(const MultiIndex3& a, const MultiIndex3& b) {
        return {a.i0 + b.i0, a.i1 + b.i1, a.i2 + b.i2};
    }

    friend bool operator==(const MultiIndex3& a, const MultiIndex3& b) {
        return a.i0 == b.i0 && a.i1 == b.i1 && a.i2 == b.i2;
    }
    friend bool operator!=(const MultiIndex3& a, const MultiIndex3& b) { return !(a == b); }

    /// Canonical order: i0 strictly descending, ties by i1 strictly
    /// descending (the row layout of the displayed curve Vandermonde
    /// vector). i2 breaks ties only across mixed degrees.
    friend bool operator<(const MultiIndex3& a, const MultiIndex3& b) {
        if (a.i0 != b.i0) return a.i0 > b.i0;
        if (a.i1 != b.i1) return a.i1 > b.i1;
        return a.i2 > b.i2;
    }
};

/// All degree-d exponent triples in canonical order; (d+1)(d+2)/2 of them.
class MonomialOrder {
public:
    explicit MonomialOrder(unsigned degree) : degree_(degree) {
        for (unsigned i0 = degree + 1; i0-- > 0;)
            for (unsigned i1 = degree - i0 + 1; i1-- > 0;) {
                MultiIndex3 m{i0, i1, degree - i0 - i1};
                pos_[m] = list_.size();
                list_.push_back(m);
            }
    }

    unsigned degree() const { return degree_; }
    std::size_t size() const { return list_.size(); }
    const std::vector<MultiIndex3>& list() const { return list_; }
    const MultiIndex3& at(std::size_t k) const { return list_[k]; }

    std::size_t index_of(const MultiIndex3& m) const {
        auto it = pos_.find(m);
        if (it == pos_.end()) throw error("multi-index not of this order's degree");
        return it->second;
    }

private:
    unsigned degree_;
    std::vector<MultiIndex3> list_;
    std::map<MultiIndex3, std::size_t> pos_;
};

}  // namespace curvelim
