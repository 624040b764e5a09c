#pragma once

#include <cstdint>
#include <vector>

#include "flagcalc/ktheory.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// Demazure-Lusztig operator T_i = d_i + y [L(alpha_i)] d_i - id.
KClass dl_op(const WeylGroup& g, int i, const KClass& u);

/// Motivic Chern class of the Schubert cell of w, folding T_i along the
/// canonical word of w starting from [O_id]. The first letter is applied
/// first, so that T_i MC(w) = MC(w s_i) on ascents.
KClass mc(const WeylGroup& g, const WeylElement& w);
/// Same along an arbitrary reduced word. Throws NotReduced.
KClass mc_word(const WeylGroup& g, const Word& word);
/// mc(w) for every w, indexed by WeylElement::index().
std::vector<KClass> mc_all(const WeylGroup& g);

/// Evaluate every coefficient at y = v.
KClass specialize_y(const KClass& u, std::int64_t v);

/// I_w = MC_0(X_w).
KClass ideal_class(const WeylGroup& g, const WeylElement& w);
/// iota_w = MC_{-1}(X_w).
KClass fixed_class(const WeylGroup& g, const WeylElement& w);

enum class Basis { Schubert, Ideal, Fixed };

/// A family {b_w} with b_w = c_w [O_w] + (terms of smaller index), c_w != 0.
/// Coordinates are found by exact triangular solve over R(T)[y].
class BasisChange {
   public:
    BasisChange(const WeylGroup& g, std::vector<KClass> classes);
    static BasisChange of(const WeylGroup& g, Basis b);

    const WeylGroup& group() const noexcept { return *g_; }
    const KClass& element(const WeylElement& w) const { return classes_.at(w.index()); }
    /// Coordinates of u in this basis. Throws NotInSpan.
    KClass express(const KClass& u) const;
    /// sum_w a_w b_w
    KClass to_schubert(const KClass& coords) const;

   private:
    const WeylGroup* g_;
    std::vector<KClass> classes_;
};

/// Matrix of s_i^K in the given basis, by expressing s_i^K(b_w) back in the basis.
BasisMatrix<LaurentPolynomial> si_k_matrix_in(const WeylGroup& g, int i, Basis b);
BasisMatrix<LaurentPolynomial> si_k_matrix_in(const BasisChange& basis, int i);
BasisMatrix<LaurentPolynomial> ideal_basis_matrix(const WeylGroup& g, int i);
BasisMatrix<LaurentPolynomial> fixed_basis_matrix(const WeylGroup& g, int i);

/// s_i^K(I_w) by the two-branch rule: (1 - [L(-alpha_i)]) I_{w s_i} + I_w on
/// ascents, [L(-alpha_i)] I_w otherwise. Returned in the Schubert basis.
KClass ideal_action_closed(const WeylGroup& g, int i, const WeylElement& w);
/// Same, reading I_w from a prebuilt ideal basis.
KClass ideal_action_closed(const BasisChange& ideal, int i, const WeylElement& w);
/// s_i^K(iota_w) = -e^{w(alpha_i)} iota_{w s_i}: signed monomial matrix.
BasisMatrix<LaurentPolynomial> fixed_basis_matrix_closed(const WeylGroup& g, int i);

}  // namespace flagcalc
