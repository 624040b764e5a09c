#include "flagcalc/ktheory.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "flagcalc/errors.hpp"

namespace flagcalc {

namespace {

LaurentPolynomial one(const WeylGroup& g) { return LaurentPolynomial::constant(g.rank(), 1); }

// Sum over eps in {0,1}^n of T^{eps_1}_{-a_{i_1}} ... T^{eps_n}_{-a_{i_n}}(e^alpha) [O_{x(eps)}].
// Bits are consumed right to left; partial sums with equal partial Demazure
// product are merged, since every later step is linear in the value and
// depends on the product alone. Zero branches are dropped.
KClass chevalley_along(const WeylGroup& g, const Weight& alpha, const Word& word) {
    const RootSystem& rs = g.root_system();
    std::map<std::size_t, LaurentPolynomial> states;
    states.emplace(0, LaurentPolynomial::monomial(alpha));
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const int i = *it;
        const Root beta = -rs.simple_root(i);
        std::map<std::size_t, LaurentPolynomial> next;
        for (const auto& [x, value] : states) {
            const WeylElement& xe = g.at(x);
            const WeylElement& sx = g.left_mul(i, xe);
            const std::size_t x1 = sx.length() > xe.length() ? sx.index() : x;

            LaurentPolynomial v1 = t_operator(rs, beta, 1, value);
            if (!v1.is_zero()) {
                auto& slot = next[x1];
                slot += v1;
                if (slot.is_zero()) next.erase(x1);
            }
            LaurentPolynomial v0 = t_operator(rs, beta, 0, value);
            if (!v0.is_zero()) {
                auto& slot = next[x];
                slot += v0;
                if (slot.is_zero()) next.erase(x);
            }
        }
        states = std::move(next);
    }
    KClass r;
    for (const auto& [x, value] : states) r.add_term(g.at(x), value);
    return r;
}

// [L(alpha)][O_w] along canonical words, memoised per group. Entries of a
// destroyed group are dropped the next time its address is reused.
class ChevalleyCache {
   public:
    KClass get(const WeylGroup& g, const Weight& alpha, const WeylElement& w) {
        const Key key{alpha, w.index()};
        {
            std::lock_guard lock(mu_);
            Slot& slot = slot_for(g);
            if (auto it = slot.products.find(key); it != slot.products.end()) return it->second;
        }
        KClass r = chevalley_along(g, alpha, w.word());
        std::lock_guard lock(mu_);
        slot_for(g).products.emplace(key, r);
        return r;
    }

   private:
    using Key = std::pair<Weight, std::size_t>;
    struct Slot {
        std::weak_ptr<const int> owner;
        std::map<Key, KClass> products;
    };

    Slot& slot_for(const WeylGroup& g) {
        Slot& slot = slots_[g.token().get()];
        if (slot.owner.expired()) {
            slot.products.clear();
            slot.owner = g.token();
        }
        return slot;
    }

    std::mutex mu_;
    std::unordered_map<const int*, Slot> slots_;
};

ChevalleyCache& cache() {
    static ChevalleyCache c;
    return c;
}

}  // namespace

KClass schubert_class(const WeylElement& w, const LaurentPolynomial& a) { return KClass::basis(w, a); }

KClass schubert_class(const WeylGroup& g, const WeylElement& w) { return KClass::basis(w, one(g)); }

KClass demazure_k(const WeylGroup& g, int i, const KClass& u) {
    KClass r;
    for (const auto& [w, a] : u.terms()) r.add_term(g.is_ascent(w, i) ? g.right_mul(w, i) : w, a);
    return r;
}

KClass line_bundle_mult(const WeylGroup& g, const Weight& alpha, const KClass& u) {
    KClass r;
    for (const auto& [w, a] : u.terms()) r += a * cache().get(g, alpha, w);
    return r;
}

KClass line_bundle_mult_word(const WeylGroup& g, const Weight& alpha, const Word& word) {
    if (!g.is_reduced(word)) throw NotReduced("word " + format_word(word) + " is not reduced");
    return chevalley_along(g, alpha, word);
}

KClass line_bundle_mult_enumerate(const WeylGroup& g, const Weight& alpha, const Word& word) {
    if (!g.is_reduced(word)) throw NotReduced("word " + format_word(word) + " is not reduced");
    const RootSystem& rs = g.root_system();
    const std::size_t n = word.size();
    std::vector<bool> mask(n);
    KClass r;
    // Position k (0-based) is decided after positions k+1..n-1.
    std::function<void(std::size_t, const LaurentPolynomial&)> go = [&](std::size_t remaining, const LaurentPolynomial& value) {
        if (value.is_zero()) return;
        if (remaining == 0) {
            r.add_term(g.subword_mask(word, mask), value);
            return;
        }
        const std::size_t k = remaining - 1;
        const Root beta = -rs.simple_root(word[k]);
        for (int eps : {0, 1}) {
            mask[k] = eps == 1;
            go(k, t_operator(rs, beta, eps, value));
        }
        mask[k] = false;
    };
    go(n, LaurentPolynomial::monomial(alpha));
    return r;
}

KClass si_k(const WeylGroup& g, int i, const KClass& u) {
    const KClass d = demazure_k(g, i, u);
    return line_bundle_mult(g, -g.root_system().alpha(i), u - d) + d;
}

BasisMatrix<LaurentPolynomial> si_k_matrix(const WeylGroup& g, int i) {
    g.generator(i);
    return matrix_from_columns<LaurentPolynomial>(
        g, [&](const WeylElement& w) { return si_k(g, i, schubert_class(g, w)); });
}

KClass sln_si_leading(const WeylGroup& g, const WeylElement& w, int i) {
    const RootSystem& rs = g.root_system();
    if (rs.type().family != Family::A) throw PreconditionViolated("sln_si_leading requires type A");
    if (!g.is_ascent(w, i)) throw PreconditionViolated("sln_si_leading requires l(w s_i) > l(w)");
    const Weight ai = rs.alpha(i);
    const Weight w_ai = w(ai);
    const WeylElement& ws = g.right_mul(w, i);

    KClass r;
    r.add_term(ws, one(g) - LaurentPolynomial::monomial(w_ai));
    r.add_term(w, -one(g));
    for (const auto& beta : g.support_set_C(w, i)) {
        const WeylElement& target = g.multiply(ws, g.reflection(beta));
        if (rs.inner_sign(ai, beta.weight) > 0)
            r.add_term(target, -LaurentPolynomial::monomial(-target(ai)));
        else
            r.add_term(target, LaurentPolynomial::monomial(w_ai));
    }
    return r;
}

}  // namespace flagcalc
