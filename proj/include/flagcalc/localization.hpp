#pragma once

#include <vector>

#include "flagcalc/charring.hpp"
#include "flagcalc/ktheory.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// Restrictions of a class to every torus-fixed point e_w, indexed by
/// WeylElement::index(). Arithmetic is componentwise.
class FixedPointVector {
   public:
    FixedPointVector() = default;
    explicit FixedPointVector(std::size_t order) : values_(order) {}

    std::size_t size() const noexcept { return values_.size(); }
    const LaurentPolynomial& at(const WeylElement& w) const { return values_.at(w.index()); }
    LaurentPolynomial& at(const WeylElement& w) { return values_.at(w.index()); }
    const LaurentPolynomial& operator[](std::size_t k) const { return values_[k]; }
    LaurentPolynomial& operator[](std::size_t k) { return values_[k]; }
    bool is_zero() const;

    FixedPointVector& operator+=(const FixedPointVector& o);
    FixedPointVector& operator-=(const FixedPointVector& o);
    friend FixedPointVector operator+(FixedPointVector a, const FixedPointVector& b) { return a += b; }
    friend FixedPointVector operator-(FixedPointVector a, const FixedPointVector& b) { return a -= b; }
    /// Pointwise product.
    friend FixedPointVector operator*(const FixedPointVector& a, const FixedPointVector& b);
    friend FixedPointVector operator*(const LaurentPolynomial& s, const FixedPointVector& a);

    bool operator==(const FixedPointVector&) const = default;

   private:
    std::vector<LaurentPolynomial> values_;
};

/// (d f)_w = (f_w - e^{w(alpha_i)} f_{w s_i}) / (1 - e^{w(alpha_i)}).
/// Throws OracleInconsistency when a division is not exact.
FixedPointVector localized_demazure(const WeylGroup& g, int i, const FixedPointVector& f);

/// Restriction of [L(alpha)]: e^{w(alpha)} at e_w.
FixedPointVector line_bundle_restriction(const WeylGroup& g, const Weight& alpha);

/// Fixed-point restrictions of the Schubert basis, built once per group:
/// [O_id] restricts to prod_{beta>0} (1 - e^beta) at id and 0 elsewhere,
/// and [O_{w s_i}] = localized_demazure(i, [O_w]) along canonical words.
class RestrictionTable {
   public:
    explicit RestrictionTable(const WeylGroup& g);

    const WeylGroup& group() const noexcept { return *g_; }
    const FixedPointVector& of(const WeylElement& w) const { return table_.at(w.index()); }

    FixedPointVector restrict(const KClass& u) const;
    /// Inverse of restrict by triangular elimination. Throws NotInSpan.
    KClass expand(const FixedPointVector& v) const;

   private:
    const WeylGroup* g_;
    std::vector<FixedPointVector> table_;
};

}  // namespace flagcalc
