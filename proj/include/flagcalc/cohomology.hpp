#pragma once

#include "flagcalc/combination.hpp"
#include "flagcalc/sympoly.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// sum_w f_w [X_w] in equivariant cohomology, f_w in S.
using CohClass = Combination<SymPolynomial>;

/// BGG operator: [X_w] -> [X_{w s_i}] on ascents, 0 otherwise; S-linear.
CohClass bgg(const WeylGroup& g, int i, const CohClass& c);

/// c_1(L(alpha)) * c. Off-diagonal terms run over positive beta with
/// l(w s_beta) = l(w) - 1.
CohClass chevalley_coh(const WeylGroup& g, const Weight& alpha, const CohClass& c);

/// s_i = id + c_1(L(alpha_i)) * bgg_i. Asserts integral output coefficients.
CohClass si_coh(const WeylGroup& g, int i, const CohClass& c);

BasisMatrix<SymPolynomial> si_coh_matrix(const WeylGroup& g, int i);

}  // namespace flagcalc
