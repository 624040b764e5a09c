#pragma once

#include "flagcalc/charring.hpp"
#include "flagcalc/combination.hpp"
#include "flagcalc/weyl.hpp"

namespace flagcalc {

/// sum_w a_w [O_w] in K_T(G/B)[y], a_w in R(T)[y].
using KClass = Combination<LaurentPolynomial>;

/// a * [O_w]
KClass schubert_class(const WeylElement& w, const LaurentPolynomial& a);
/// 1 * [O_w]
KClass schubert_class(const WeylGroup& g, const WeylElement& w);

/// Demazure operator: [O_w] -> [O_{w s_i}] on ascents, [O_w] otherwise.
KClass demazure_k(const WeylGroup& g, int i, const KClass& u);

/// [L(alpha)] * u by the K-theoretic Chevalley formula along canonical words.
KClass line_bundle_mult(const WeylGroup& g, const Weight& alpha, const KClass& u);

/// [L(alpha)] * [O_w] with w = from_word(word), computed along the given
/// reduced word. Throws NotReduced when it is not reduced.
KClass line_bundle_mult_word(const WeylGroup& g, const Weight& alpha, const Word& word);

/// Reference form of the Chevalley formula: depth-first over all 2^n masks,
/// with no merging. Exponential; meant for cross-checks on short words.
KClass line_bundle_mult_enumerate(const WeylGroup& g, const Weight& alpha, const Word& word);

/// s_i^K(u) = [L(-alpha_i)] (u - d_i u) + d_i u.
KClass si_k(const WeylGroup& g, int i, const KClass& u);

BasisMatrix<LaurentPolynomial> si_k_matrix(const WeylGroup& g, int i);

/// Closed-form terms of length >= l(w) of s_i^K[O_w] in type A.
/// Requires type A and l(w s_i) > l(w).
KClass sln_si_leading(const WeylGroup& g, const WeylElement& w, int i);

}  // namespace flagcalc
