#include "flagcalc/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "flagcalc/cohomology.hpp"
#include "flagcalc/ktheory.hpp"
#include "flagcalc/localization.hpp"
#include "flagcalc/motivic.hpp"
#include "flagcalc/textio.hpp"

namespace flagcalc {

std::optional<Suite> parse_suite(std::string_view name) {
    for (Suite s : {Suite::All, Suite::Involution, Suite::Braid, Suite::Chevalley, Suite::Oracle, Suite::Theorem41,
                    Suite::Sln, Suite::Motivic})
        if (suite_name(s) == name) return s;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Involution: return "involution";
        case Suite::Braid: return "braid";
        case Suite::Chevalley: return "chevalley";
        case Suite::Oracle: return "oracle";
        case Suite::Theorem41: return "theorem41";
        case Suite::Sln: return "sln";
        case Suite::Motivic: return "motivic";
    }
    return "all";
}

namespace {

class Check {
   public:
    explicit Check(std::string name) { r_.name = std::move(name); }

    // `describe` is evaluated only for the first failure.
    void expect(bool ok, const std::function<std::string()>& describe) {
        ++r_.cases;
        if (ok || !r_.passed) {
            if (!ok) r_.passed = false;
            return;
        }
        r_.passed = false;
        r_.counterexample = describe();
    }
    void note(std::string n) { r_.note = std::move(n); }
    CheckResult done() { return std::move(r_); }

   private:
    CheckResult r_;
};

CheckResult skipped(std::string name, std::string why) {
    CheckResult r;
    r.name = std::move(name);
    r.skipped = true;
    r.note = std::move(why);
    return r;
}

std::string obj(const WeylElement& w, const char* sym = "O") {
    std::string s = std::string(sym) + "[";
    for (std::size_t k = 0; k < w.word().size(); ++k) s += (k ? "," : "") + std::to_string(w.word()[k]);
    return s + "]";
}

struct Ctx {
    const WeylGroup& g;
    const RootSystem& rs;
    const VerifyOptions& opt;
    int n;
    LaurentPolynomial one;

    Ctx(const WeylGroup& group, const VerifyOptions& o)
        : g(group), rs(group.root_system()), opt(o), n(static_cast<int>(group.rank())),
          one(LaurentPolynomial::constant(group.rank(), 1)) {}

    std::string k(const KClass& u, Basis b = Basis::Schubert) const { return format_kclass(rs, u, b); }
    std::string c(const CohClass& u) const { return format_cohclass(rs, u); }
    std::string l(const LaurentPolynomial& f) const { return format_laurent(rs, f); }
    KClass O(const WeylElement& w) const { return schubert_class(g, w); }
    CohClass X(const WeylElement& w) const { return CohClass::basis(w, SymPolynomial::constant(1)); }

    // Line bundles exercised by the Chevalley and oracle checks.
    std::vector<Weight> weights() const {
        std::vector<Weight> out;
        for (int i = 1; i <= n; ++i) {
            out.push_back(rs.alpha(i));
            out.push_back(-rs.alpha(i));
            out.push_back(rs.fundamental_weight(i));
        }
        out.push_back(rs.highest_root().weight);
        out.push_back(-rs.highest_root().weight);
        return out;
    }
};

// ---------------------------------------------------------------------------

void involution(const Ctx& c, std::vector<CheckResult>& out) {
    Check k("involution.k");
    Check h("involution.coh");
    for (int i = 1; i <= c.n; ++i)
        for (const auto& w : c.g.elements()) {
            const KClass u = si_k(c.g, i, si_k(c.g, i, c.O(w)));
            k.expect(u == c.O(w), [&] {
                return "s" + std::to_string(i) + "(s" + std::to_string(i) + "(" + obj(w) + ")) = " + c.k(u);
            });
            const CohClass v = si_coh(c.g, i, si_coh(c.g, i, c.X(w)));
            h.expect(v == c.X(w), [&] {
                return "s" + std::to_string(i) + "(s" + std::to_string(i) + "(" + obj(w, "X") + ")) = " + c.c(v);
            });
        }
    out.push_back(k.done());
    out.push_back(h.done());

    for (Basis b : {Basis::Ideal, Basis::Fixed}) {
        Check m(std::string("involution.") + (b == Basis::Ideal ? "ideal" : "fixed") + "_matrix");
        const BasisChange basis = BasisChange::of(c.g, b);
        for (int i = 1; i <= c.n; ++i) {
            const auto mat = si_k_matrix_in(basis, i);
            m.expect(is_identity(multiply(mat, mat), c.one),
                     [&] { return "M(s" + std::to_string(i) + ")^2 != id in basis " + basis_symbol(b); });
        }
        out.push_back(m.done());
    }
}

void braid(const Ctx& c, std::vector<CheckResult>& out) {
    Check words("braid.words");
    Check k("braid.k");
    Check h("braid.coh");
    for (int i = 1; i <= c.n; ++i)
        for (int j = i + 1; j <= c.n; ++j) {
            const int m = c.rs.coxeter_order(i, j);
            Word a, b;
            for (int t = 0; t < m; ++t) {
                a.push_back(t % 2 ? j : i);
                b.push_back(t % 2 ? i : j);
            }
            words.expect(c.g.from_word(a) == c.g.from_word(b),
                         [&] { return format_word(a) + " and " + format_word(b) + " differ"; });
            for (const auto& w : c.g.elements()) {
                KClass u = c.O(w);
                CohClass v = c.X(w);
                for (int t = 0; t < m; ++t) {
                    u = si_k(c.g, i, si_k(c.g, j, u));
                    v = si_coh(c.g, i, si_coh(c.g, j, v));
                }
                k.expect(u == c.O(w), [&] {
                    return "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^" + std::to_string(m) + "(" +
                           obj(w) + ") = " + c.k(u);
                });
                h.expect(v == c.X(w), [&] {
                    return "(s" + std::to_string(i) + " s" + std::to_string(j) + ")^" + std::to_string(m) + "(" +
                           obj(w, "X") + ") = " + c.c(v);
                });
            }
        }
    out.push_back(words.done());
    out.push_back(k.done());
    out.push_back(h.done());
}

void chevalley(const Ctx& c, std::vector<CheckResult>& out) {
    if (c.rs.type() == CartanType{Family::A, 1}) {
        Check s("chevalley.sl2");
        const RestrictionTable rt(c.g);
        const WeylElement& id = c.g.identity();
        const WeylElement& s1 = c.g.generator(1);
        const Weight a = c.rs.alpha(1);
        const LaurentPolynomial ea = LaurentPolynomial::monomial(a);
        const LaurentPolynomial ema = LaurentPolynomial::monomial(-a);
        const KClass want_id = KClass::basis(id, ea);
        KClass want_s1 = KClass::basis(s1, ema);
        want_s1.add_term(id, -(c.one + ema));
        const FixedPointVector la = line_bundle_restriction(c.g, a);

        struct Case {
            const char* how;
            KClass got_id, got_s1;
        };
        const Case cases[] = {
            {"Chevalley formula", line_bundle_mult(c.g, a, c.O(id)), line_bundle_mult(c.g, a, c.O(s1))},
            {"mask enumeration", line_bundle_mult_enumerate(c.g, a, id.word()),
             line_bundle_mult_enumerate(c.g, a, s1.word())},
            {"localization", rt.expand(la * rt.of(id)), rt.expand(la * rt.of(s1))},
        };
        for (const auto& cs : cases) {
            s.expect(cs.got_id == want_id,
                     [&] { return std::string("L(a1)*O[] via ") + cs.how + " = " + c.k(cs.got_id); });
            s.expect(cs.got_s1 == want_s1,
                     [&] { return std::string("L(a1)*O[1] via ") + cs.how + " = " + c.k(cs.got_s1); });
        }
        const std::pair<const FixedPointVector*, std::pair<LaurentPolynomial, LaurentPolynomial>> table[] = {
            {&rt.of(id), {c.one - ea, LaurentPolynomial()}},
            {&rt.of(s1), {c.one, c.one}},
        };
        for (const auto& [v, want] : table) {
            s.expect(v->at(id) == want.first && v->at(s1) == want.second,
                     [&] { return "restriction table: " + c.l(v->at(id)) + " / " + c.l(v->at(s1)); });
        }
        out.push_back(s.done());
    }

    Check e("chevalley.enumeration");
    std::size_t skipped_long = 0;
    for (const auto& w : c.g.elements()) {
        if (w.length() > c.opt.enumeration_max_length) {
            ++skipped_long;
            continue;
        }
        for (const Weight& a : c.weights()) {
            const KClass fast = line_bundle_mult(c.g, a, c.O(w));
            const KClass slow = line_bundle_mult_enumerate(c.g, a, w.word());
            e.expect(fast == slow, [&] {
                return "L(" + format_weight(c.rs, a) + ")*" + obj(w) + ": " + c.k(fast) + " vs enumeration " + c.k(slow);
            });
        }
    }
    if (skipped_long) e.note(std::to_string(skipped_long) + " elements longer than " +
                             std::to_string(c.opt.enumeration_max_length) + " not enumerated");
    out.push_back(e.done());

    Check wi("chevalley.word_independence");
    for (const auto& w : c.g.elements()) {
        const auto words = c.g.reduced_words(w, c.opt.word_limit);
        for (const Weight& a : {c.rs.fundamental_weight(1), -c.rs.alpha(c.n), c.rs.highest_root().weight}) {
            const KClass ref = line_bundle_mult_word(c.g, a, words.front());
            for (std::size_t t = 1; t < words.size(); ++t) {
                const KClass other = line_bundle_mult_word(c.g, a, words[t]);
                wi.expect(other == ref, [&] {
                    return "L(" + format_weight(c.rs, a) + ")*" + obj(w) + " along " + format_word(words[t]) + " = " +
                           c.k(other) + ", along " + format_word(words.front()) + " = " + c.k(ref);
                });
            }
        }
    }
    out.push_back(wi.done());

    // Cohomological Chevalley: diagonal w(alpha), off-diagonal constants on length-one drops.
    Check h("chevalley.coh");
    for (const auto& w : c.g.elements())
        for (int j = 1; j <= c.n; ++j) {
            const Weight a = c.rs.fundamental_weight(j);
            const CohClass r = chevalley_coh(c.g, a, c.X(w));
            bool ok = r.coefficient(w) == SymPolynomial::linear_form(w(a));
            for (const auto& [v, f] : r.terms()) {
                if (v == w) continue;
                ok = ok && v.length() == w.length() - 1 && f.degree() == 0;
            }
            h.expect(ok, [&] { return "c1(L(" + format_weight(c.rs, a) + "))*" + obj(w, "X") + " = " + c.c(r); });
        }
    out.push_back(h.done());
}

void oracle(const Ctx& c, std::vector<CheckResult>& out) {
    const RestrictionTable rt(c.g);
    Check lb("oracle.line_bundle");
    Check dz("oracle.demazure");
    Check sp("oracle.si_permutes_fixed_points");
    Check tri("oracle.triangularity");
    Check rtp("oracle.round_trip");

    for (const auto& w : c.g.elements()) {
        const FixedPointVector r = rt.of(w);
        for (const Weight& a : c.weights()) {
            const FixedPointVector lhs = rt.restrict(line_bundle_mult(c.g, a, c.O(w)));
            lb.expect(lhs == line_bundle_restriction(c.g, a) * r,
                      [&] { return "restrict(L(" + format_weight(c.rs, a) + ")*" + obj(w) + ") != e^{x(a)} restrict(" + obj(w) + ")"; });
        }
        for (int i = 1; i <= c.n; ++i) {
            dz.expect(rt.restrict(demazure_k(c.g, i, c.O(w))) == localized_demazure(c.g, i, r),
                      [&] { return "restrict(D" + std::to_string(i) + "(" + obj(w) + ")) != localized Demazure"; });
            const FixedPointVector s = rt.restrict(si_k(c.g, i, c.O(w)));
            bool ok = true;
            for (const auto& x : c.g.elements()) ok = ok && s.at(x) == r.at(c.g.right_mul(x, i));
            sp.expect(ok, [&] { return "restrict(s" + std::to_string(i) + "(" + obj(w) + ")) is not r(x s_i)"; });
        }
        for (const auto& x : c.g.elements()) {
            const bool below = c.g.bruhat_leq(x, w);
            const bool ok = x == w ? !r.at(x).is_zero() : (below || r.at(x).is_zero());
            tri.expect(ok, [&] { return "restrict(" + obj(w) + ") at " + format_word(x.word()) + " = " + c.l(r.at(x)); });
        }
        const KClass back = rt.expand(r);
        rtp.expect(back == c.O(w), [&] { return "expand(restrict(" + obj(w) + ")) = " + c.k(back); });
    }

    std::mt19937_64 rng(c.opt.seed);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, c.g.order() - 1);
    const auto& roots = c.rs.positive_roots();
    std::uniform_int_distribution<std::size_t> root_pick(0, roots.size() - 1);
    for (std::size_t t = 0; t < c.opt.random_cases; ++t) {
        KClass u;
        for (int terms = 0; terms < 3; ++terms) {
            LaurentPolynomial a = LaurentPolynomial::constant(c.g.rank(), coef(rng));
            a.add_term(roots[root_pick(rng)].weight, YPolynomial({coef(rng), coef(rng)}));
            a.add_term(-roots[root_pick(rng)].weight, coef(rng));
            u.add_term(c.g.at(pick(rng)), a);
        }
        const KClass back = rt.expand(rt.restrict(u));
        rtp.expect(back == u, [&] { return "expand(restrict(" + c.k(u) + ")) = " + c.k(back); });
    }

    out.push_back(lb.done());
    out.push_back(dz.done());
    out.push_back(sp.done());
    out.push_back(tri.done());
    out.push_back(rtp.done());
}

void theorem41(const Ctx& c, std::vector<CheckResult>& out) {
    Check sup("theorem41.support");
    Check lead("theorem41.leading");
    Check nz("theorem41.nonzero");
    Check desc("theorem41.descent");
    for (const auto& w : c.g.elements())
        for (int i = 1; i <= c.n; ++i) {
            const KClass v = si_k(c.g, i, c.O(w));
            const std::string what = "s" + std::to_string(i) + "(" + obj(w) + ") = " + c.k(v);
            if (!c.g.is_ascent(w, i)) {
                desc.expect(v == c.O(w), [&] { return what; });
                continue;
            }
            const WeylElement& ws = c.g.right_mul(w, i);
            std::vector<std::size_t> allowed{w.index()};
            for (const Root& b : c.g.support_set_C(w, i)) {
                const WeylElement& target = c.g.multiply(ws, c.g.reflection(b));
                allowed.push_back(target.index());
                nz.expect(!v.coefficient(target).is_zero(), [&] { return what + "; no " + obj(target) + " term"; });
            }
            nz.expect(!v.coefficient(ws).is_zero(), [&] { return what; });
            for (const auto& [x, a] : v.terms()) {
                if (x.length() != w.length()) continue;
                const bool ok = std::find(allowed.begin(), allowed.end(), x.index()) != allowed.end();
                sup.expect(ok, [&] { return what + "; unexpected " + obj(x); });
            }
            lead.expect(v.coefficient(ws) == c.one - LaurentPolynomial::monomial(w(c.rs.alpha(i))),
                        [&] { return what; });
            for (const auto& [x, a] : v.terms())
                lead.expect(x.length() <= ws.length(), [&] { return what + "; term above l(w s_i)"; });
        }
    out.push_back(sup.done());
    out.push_back(lead.done());
    out.push_back(nz.done());
    out.push_back(desc.done());
}

void sln(const Ctx& c, std::vector<CheckResult>& out) {
    if (c.rs.type().family != Family::A) {
        out.push_back(skipped("sln", "closed form applies to type A only"));
        return;
    }
    Check lead("sln.leading_terms");
    Check aw("sln.a_w");
    for (const auto& w : c.g.elements())
        for (int i = 1; i <= c.n; ++i) {
            if (!c.g.is_ascent(w, i)) continue;
            const KClass v = si_k(c.g, i, c.O(w));
            KClass high;
            for (const auto& [x, a] : v.terms())
                if (x.length() >= w.length()) high.add_term(x, a);
            const KClass closed = sln_si_leading(c.g, w, i);
            lead.expect(high == closed, [&] {
                return "s" + std::to_string(i) + "(" + obj(w) + ") leading part " + c.k(high) + ", closed form " + c.k(closed);
            });
            aw.expect(v.coefficient(w) == -c.one, [&] { return "coefficient of " + obj(w) + " is " + c.l(v.coefficient(w)); });
        }
    out.push_back(lead.done());
    out.push_back(aw.done());
}

void motivic(const Ctx& c, std::vector<CheckResult>& out) {
    const LaurentPolynomial y = LaurentPolynomial::constant(c.g.rank(), YPolynomial::y());
    const std::vector<KClass> mcs = mc_all(c.g);
    const RestrictionTable rt(c.g);

    Check hecke("motivic.hecke");
    Check rec("motivic.recursion");
    for (int i = 1; i <= c.n; ++i)
        for (const auto& w : c.g.elements()) {
            const KClass u = c.O(w);
            const KClass t = dl_op(c.g, i, u);
            const KClass tt = dl_op(c.g, i, t);
            const KClass want = (-(c.one + y)) * t - y * u;
            hecke.expect(tt == want, [&] { return "T" + std::to_string(i) + "^2(" + obj(w) + ") = " + c.k(tt); });

            const KClass& m = mcs[w.index()];
            const WeylElement& ws = c.g.right_mul(w, i);
            const KClass got = dl_op(c.g, i, m);
            const KClass expect = c.g.is_ascent(w, i) ? mcs[ws.index()]
                                                      : (-(c.one + y)) * m - y * mcs[ws.index()];
            rec.expect(got == expect, [&] { return "T" + std::to_string(i) + "(MC(" + obj(w) + ")) = " + c.k(got); });
        }
    out.push_back(hecke.done());
    out.push_back(rec.done());

    Check wi("motivic.word_independence");
    for (const auto& w : c.g.elements())
        for (const Word& word : c.g.reduced_words(w, c.opt.word_limit)) {
            const KClass m = mc_word(c.g, word);
            wi.expect(m == mcs[w.index()], [&] { return "MC along " + format_word(word) + " = " + c.k(m); });
        }
    out.push_back(wi.done());

    Check fs("motivic.fixed_support");
    for (const auto& w : c.g.elements()) {
        const FixedPointVector r = rt.restrict(specialize_y(mcs[w.index()], -1));
        for (const auto& x : c.g.elements())
            fs.expect((x == w) != r.at(x).is_zero(), [&] {
                return "restrict(MC_-1(" + obj(w) + ")) at " + format_word(x.word()) + " = " + c.l(r.at(x));
            });
    }
    out.push_back(fs.done());

    Check fm("motivic.fixed_matrix");
    Check ia("motivic.ideal_action");
    std::vector<KClass> fixed_classes, ideal_classes;
    for (const auto& m : mcs) {
        fixed_classes.push_back(specialize_y(m, -1));
        ideal_classes.push_back(specialize_y(m, 0));
    }
    const BasisChange fixed(c.g, std::move(fixed_classes));
    const BasisChange ideal(c.g, std::move(ideal_classes));
    for (int i = 1; i <= c.n; ++i) {
        const auto got = si_k_matrix_in(fixed, i);
        const auto want = fixed_basis_matrix_closed(c.g, i);
        for (std::size_t col = 0; col < got.size(); ++col)
            for (std::size_t row = 0; row < got.size(); ++row)
                fm.expect(got(row, col) == want(row, col), [&] {
                    return "s" + std::to_string(i) + " on " + obj(c.g.at(col), "FP") + " has " + c.l(got(row, col)) +
                           " at " + obj(c.g.at(row), "FP") + ", expected " + c.l(want(row, col));
                });
        for (const auto& w : c.g.elements()) {
            const KClass lhs = si_k(c.g, i, ideal.element(w));
            const KClass rhs = ideal_action_closed(ideal, i, w);
            ia.expect(lhs == rhs, [&] { return "s" + std::to_string(i) + "(" + obj(w, "I") + ") = " + c.k(lhs) + " vs " + c.k(rhs); });
        }
    }
    out.push_back(fm.done());
    out.push_back(ia.done());

    Check tel("motivic.ideal_telescoping");
    for (const auto& w : c.g.elements()) {
        KClass sum;
        for (const auto& v : c.g.elements())
            if (c.g.bruhat_leq(v, w)) sum += specialize_y(mcs[v.index()], 0);
        tel.expect(sum == c.O(w), [&] { return "sum of I[v], v <= " + obj(w) + ", is " + c.k(sum); });
    }
    out.push_back(tel.done());
}

}  // namespace

std::vector<CheckResult> run_suite(const WeylGroup& g, Suite s, const VerifyOptions& opt) {
    const Ctx c(g, opt);
    std::vector<CheckResult> out;
    const bool all = s == Suite::All;
    if (all || s == Suite::Involution) involution(c, out);
    if (all || s == Suite::Braid) braid(c, out);
    if (all || s == Suite::Chevalley) chevalley(c, out);
    if (all || s == Suite::Oracle) oracle(c, out);
    if (all || s == Suite::Theorem41) theorem41(c, out);
    if (all || s == Suite::Sln) sln(c, out);
    if (all || s == Suite::Motivic) motivic(c, out);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

std::string format_results(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const auto& r : results) {
        if (r.skipped) {
            os << "SKIP " << r.name << ": " << r.note << '\n';
            continue;
        }
        os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.note.empty()) os << " [" << r.note << "]";
        if (!r.passed) os << "\n  first counterexample: " << r.counterexample;
        os << '\n';
    }
    return os.str();
}

}  // namespace flagcalc
