#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagcalc/charring.hpp"
#include "flagcalc/cohomology.hpp"
#include "flagcalc/errors.hpp"
#include "flagcalc/ktheory.hpp"
#include "flagcalc/localization.hpp"
#include "flagcalc/motivic.hpp"
#include "flagcalc/sympoly.hpp"

namespace flagcalc {

// Canonical text forms.
//
//   y-polynomial   2, -y, 3y^2, (1+2y)
//   weight         e[1,1] in simple-root coordinates, ef[1,0] when not in the root lattice
//   Laurent        1-e[1,1], (1+y)*e[-1], -e[1,0]+2*e[0,1]
//   K-class        -e[1,0]*O[1] - O[2] + (1-e[1,1])*O[2,1]
//   coh class      (a1+a2)*X[1] + X[]    with a_k the simple roots
//
// Laurent monomials are ordered by height (scaled to be integral), then by
// coordinates; class terms follow the group order.

/// Terms in print order: Laurent monomials by height, then coordinates;
/// polynomial terms (in simple-root variables) by degree, then exponents.
std::vector<std::pair<Weight, YPolynomial>> canonical_terms(const RootSystem& rs, const LaurentPolynomial& f);
std::vector<std::pair<Exponent, Rational>> canonical_terms(const RootSystem& rs, const SymPolynomial& f);

std::string format_ypoly(const YPolynomial& p);
std::string format_weight(const RootSystem& rs, const Weight& w);
std::string format_laurent(const RootSystem& rs, const LaurentPolynomial& f);
/// Polynomial in the simple-root variables a1..an.
std::string format_sym(const RootSystem& rs, const SymPolynomial& f);

/// "O", "I" or "FP".
std::string basis_symbol(Basis b);
std::string format_kclass(const RootSystem& rs, const KClass& u, Basis b = Basis::Schubert);
std::string format_cohclass(const RootSystem& rs, const CohClass& c);
/// One "label: value" line per fixed point, labels "id", "s1", "s1s2", ...
std::string format_restriction(const WeylGroup& g, const FixedPointVector& v);

/// x_j (fundamental weights) rewritten in the simple-root variables a_k.
SymPolynomial to_simple_variables(const RootSystem& rs, const SymPolynomial& f);
/// Inverse of to_simple_variables.
SymPolynomial from_simple_variables(const RootSystem& rs, const SymPolynomial& f);

struct ParsedKClass {
    Basis basis = Basis::Schubert;
    /// Coordinates in `basis`.
    KClass coords;
};

/// Grammar (whitespace-insensitive):
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' '-'? int)?
///   atom   := int | 'y' | 'e[' ints ']' | 'ef[' ints ']' | '(' expr ')' | sym '[' word ']'
/// with sym one of O, I, FP; every basis symbol in one expression must agree.
/// Throws ParseError carrying the offending character offset.
ParsedKClass parse_kclass(const WeylGroup& g, std::string_view text);

/// Same grammar with atoms int, p/q, a_k or ak (simple roots), w_k or wk
/// (fundamental weights) and basis symbol X.
CohClass parse_cohclass(const WeylGroup& g, std::string_view text);

/// Scalar-only forms of the above.
LaurentPolynomial parse_laurent(const RootSystem& rs, std::string_view text);
SymPolynomial parse_sym(const RootSystem& rs, std::string_view text);

/// Message plus a caret line under the offending position.
std::string render_parse_error(std::string_view text, const ParseError& e);

}  // namespace flagcalc
