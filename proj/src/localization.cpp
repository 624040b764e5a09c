#include "flagcalc/localization.hpp"

#include <algorithm>

#include "flagcalc/errors.hpp"

namespace flagcalc {

bool FixedPointVector::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.is_zero(); });
}

FixedPointVector& FixedPointVector::operator+=(const FixedPointVector& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
    return *this;
}

FixedPointVector& FixedPointVector::operator-=(const FixedPointVector& o) {
    for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
    return *this;
}

FixedPointVector operator*(const FixedPointVector& a, const FixedPointVector& b) {
    FixedPointVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.values_[k] = a.values_[k] * b.values_[k];
    return r;
}

FixedPointVector operator*(const LaurentPolynomial& s, const FixedPointVector& a) {
    FixedPointVector r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r.values_[k] = s * a.values_[k];
    return r;
}

FixedPointVector localized_demazure(const WeylGroup& g, int i, const FixedPointVector& f) {
    const Weight ai = g.root_system().alpha(i);
    const LaurentPolynomial one = LaurentPolynomial::constant(g.rank(), 1);
    FixedPointVector r(g.order());
    for (const auto& w : g.elements()) {
        const LaurentPolynomial e = LaurentPolynomial::monomial(w(ai));
        const LaurentPolynomial num = f.at(w) - e * f.at(g.right_mul(w, i));
        auto q = divide_exact(num, one - e);
        if (!q) throw OracleInconsistency("localized Demazure division is not exact");
        r.at(w) = std::move(*q);
    }
    return r;
}

FixedPointVector line_bundle_restriction(const WeylGroup& g, const Weight& alpha) {
    FixedPointVector r(g.order());
    for (const auto& w : g.elements()) r.at(w) = LaurentPolynomial::monomial(w(alpha));
    return r;
}

RestrictionTable::RestrictionTable(const WeylGroup& g) : g_(&g) {
    const std::size_t n = g.rank();
    LaurentPolynomial euler = LaurentPolynomial::constant(n, 1);
    for (const auto& beta : g.root_system().positive_roots())
        euler = euler * (LaurentPolynomial::constant(n, 1) - LaurentPolynomial::monomial(beta.weight));

    table_.reserve(g.order());
    for (const auto& w : g.elements()) {
        if (w.is_identity()) {
            FixedPointVector v(g.order());
            v.at(w) = euler;
            table_.push_back(std::move(v));
            continue;
        }
        const int last = w.word().back();
        const WeylElement& shorter = g.right_mul(w, last);
        table_.push_back(localized_demazure(g, last, table_.at(shorter.index())));
    }
}

FixedPointVector RestrictionTable::restrict(const KClass& u) const {
    FixedPointVector r(g_->order());
    for (const auto& [w, a] : u.terms()) r += a * of(w);
    return r;
}

KClass RestrictionTable::expand(const FixedPointVector& v) const {
    if (v.size() != g_->order()) throw NotInSpan("fixed-point vector has the wrong size");
    FixedPointVector rem = v;
    KClass out;
    const auto& elems = g_->elements();
    for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
        const WeylElement& w = *it;
        if (rem.at(w).is_zero()) continue;
        const LaurentPolynomial& diag = of(w).at(w);
        auto a = divide_exact(rem.at(w), diag);
        if (!a) throw NotInSpan("restriction at " + format_word(w.word()) + " is not divisible by the diagonal");
        rem -= *a * of(w);
        out.add_term(w, *a);
    }
    if (!rem.is_zero()) throw NotInSpan("fixed-point vector is not in the span of the Schubert basis");
    return out;
}

}  // namespace flagcalc
