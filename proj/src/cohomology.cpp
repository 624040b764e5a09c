#include "flagcalc/cohomology.hpp"

#include "flagcalc/errors.hpp"

namespace flagcalc {

CohClass bgg(const WeylGroup& g, int i, const CohClass& c) {
    CohClass r;
    for (const auto& [w, f] : c.terms())
        if (g.is_ascent(w, i)) r.add_term(g.right_mul(w, i), f);
    return r;
}

CohClass chevalley_coh(const WeylGroup& g, const Weight& alpha, const CohClass& c) {
    const RootSystem& rs = g.root_system();
    CohClass r;
    for (const auto& [w, f] : c.terms()) {
        r.add_term(w, f * SymPolynomial::linear_form(w(alpha)));
        for (const auto& beta : rs.positive_roots()) {
            const WeylElement& wb = g.multiply(w, g.reflection(beta));
            if (wb.length() != w.length() - 1) continue;
            const int p = rs.pairing(alpha, beta);
            if (p != 0) r.add_term(wb, Rational(-p) * f);
        }
    }
    return r;
}

CohClass si_coh(const WeylGroup& g, int i, const CohClass& c) {
    CohClass r = c + chevalley_coh(g, g.root_system().alpha(i), bgg(g, i, c));
    for (const auto& [w, f] : r.terms())
        if (!f.is_integral()) throw InternalError("s_i^coh produced a non-integral Schubert coefficient");
    return r;
}

BasisMatrix<SymPolynomial> si_coh_matrix(const WeylGroup& g, int i) {
    g.generator(i);
    return matrix_from_columns<SymPolynomial>(g, [&](const WeylElement& w) {
        return si_coh(g, i, CohClass::basis(w, SymPolynomial::constant(1)));
    });
}

}  // namespace flagcalc
