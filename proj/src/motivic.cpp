#include "flagcalc/motivic.hpp"

#include "flagcalc/errors.hpp"

namespace flagcalc {

KClass dl_op(const WeylGroup& g, int i, const KClass& u) {
    const KClass d = demazure_k(g, i, u);
    const KClass yl = line_bundle_mult(g, g.root_system().alpha(i), d);
    const LaurentPolynomial y = LaurentPolynomial::constant(g.rank(), YPolynomial::y());
    return d + y * yl - u;
}

namespace {

KClass fold(const WeylGroup& g, const Word& word) {
    KClass u = schubert_class(g, g.identity());
    for (int i : word) u = dl_op(g, i, u);
    return u;
}

}  // namespace

KClass mc(const WeylGroup& g, const WeylElement& w) { return fold(g, w.word()); }

KClass mc_word(const WeylGroup& g, const Word& word) {
    if (!g.is_reduced(word)) throw NotReduced("word " + format_word(word) + " is not reduced");
    return fold(g, word);
}

std::vector<KClass> mc_all(const WeylGroup& g) {
    // Canonical words are prefix-closed, so each class extends a shorter one.
    std::vector<KClass> out(g.order());
    for (const auto& w : g.elements()) {
        if (w.is_identity()) {
            out[w.index()] = schubert_class(g, w);
            continue;
        }
        const int last = w.word().back();
        out[w.index()] = dl_op(g, last, out[g.right_mul(w, last).index()]);
    }
    return out;
}

KClass specialize_y(const KClass& u, std::int64_t v) {
    KClass r;
    for (const auto& [w, a] : u.terms()) r.add_term(w, a.specialize_y(v));
    return r;
}

KClass ideal_class(const WeylGroup& g, const WeylElement& w) { return specialize_y(mc(g, w), 0); }

KClass fixed_class(const WeylGroup& g, const WeylElement& w) { return specialize_y(mc(g, w), -1); }

BasisChange::BasisChange(const WeylGroup& g, std::vector<KClass> classes)
    : g_(&g), classes_(std::move(classes)) {
    if (classes_.size() != g.order()) throw PreconditionViolated("basis needs one class per Weyl element");
    for (const auto& w : g.elements()) {
        const KClass& b = classes_[w.index()];
        if (b.coefficient(w).is_zero()) throw NotInSpan("basis class " + format_word(w.word()) + " has no leading term");
        for (const auto& [v, a] : b.terms())
            if (v.index() > w.index()) throw NotInSpan("basis class " + format_word(w.word()) + " is not triangular");
    }
}

BasisChange BasisChange::of(const WeylGroup& g, Basis b) {
    std::vector<KClass> classes;
    switch (b) {
        case Basis::Schubert:
            for (const auto& w : g.elements()) classes.push_back(schubert_class(g, w));
            break;
        case Basis::Ideal:
        case Basis::Fixed:
            classes = mc_all(g);
            for (auto& c : classes) c = specialize_y(c, b == Basis::Ideal ? 0 : -1);
            break;
    }
    return BasisChange(g, std::move(classes));
}

KClass BasisChange::express(const KClass& u) const {
    KClass rem = u;
    KClass coords;
    const auto& elems = g_->elements();
    for (auto it = elems.rbegin(); it != elems.rend() && !rem.is_zero(); ++it) {
        const LaurentPolynomial c = rem.coefficient(*it);
        if (c.is_zero()) continue;
        auto a = divide_exact(c, classes_[it->index()].coefficient(*it));
        if (!a) throw NotInSpan("coefficient of O[" + format_word(it->word()) + "] is not divisible by the basis leading term");
        rem -= *a * classes_[it->index()];
        coords.add_term(*it, *a);
    }
    if (!rem.is_zero()) throw InternalError("triangular solve left a remainder");
    return coords;
}

KClass BasisChange::to_schubert(const KClass& coords) const {
    KClass r;
    for (const auto& [w, a] : coords.terms()) r += a * classes_[w.index()];
    return r;
}

BasisMatrix<LaurentPolynomial> si_k_matrix_in(const WeylGroup& g, int i, Basis b) {
    if (b == Basis::Schubert) return si_k_matrix(g, i);
    g.generator(i);
    return si_k_matrix_in(BasisChange::of(g, b), i);
}

BasisMatrix<LaurentPolynomial> si_k_matrix_in(const BasisChange& basis, int i) {
    const WeylGroup& g = basis.group();
    g.generator(i);
    return matrix_from_columns<LaurentPolynomial>(
        g, [&](const WeylElement& w) { return basis.express(si_k(g, i, basis.element(w))); });
}

BasisMatrix<LaurentPolynomial> ideal_basis_matrix(const WeylGroup& g, int i) { return si_k_matrix_in(g, i, Basis::Ideal); }

BasisMatrix<LaurentPolynomial> fixed_basis_matrix(const WeylGroup& g, int i) { return si_k_matrix_in(g, i, Basis::Fixed); }

KClass ideal_action_closed(const WeylGroup& g, int i, const WeylElement& w) {
    return ideal_action_closed(BasisChange::of(g, Basis::Ideal), i, w);
}

KClass ideal_action_closed(const BasisChange& ideal, int i, const WeylElement& w) {
    const WeylGroup& g = ideal.group();
    const Weight minus_ai = -g.root_system().alpha(i);
    if (g.is_ascent(w, i)) {
        const KClass& next = ideal.element(g.right_mul(w, i));
        return next - line_bundle_mult(g, minus_ai, next) + ideal.element(w);
    }
    return line_bundle_mult(g, minus_ai, ideal.element(w));
}

BasisMatrix<LaurentPolynomial> fixed_basis_matrix_closed(const WeylGroup& g, int i) {
    const Weight ai = g.root_system().alpha(i);
    return matrix_from_columns<LaurentPolynomial>(g, [&](const WeylElement& w) {
        return KClass::basis(g.right_mul(w, i), -LaurentPolynomial::monomial(w(ai)));
    });
}

}  // namespace flagcalc
