#include <doctest.h>

#include <set>

#include "flagcalc/errors.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

/// Subword criterion checked against every reduced word of w.
bool bruhat_brute(const WeylGroup& g, const WeylElement& u, const WeylElement& w) {
    const Word word = w.word();
    const std::size_t n = word.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Word sub;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) sub.push_back(word[k]);
        if (g.from_word(sub) == u) return true;
    }
    return false;
}

Word without(const Word& w, std::size_t k) {
    Word r = w;
    r.erase(r.begin() + static_cast<long>(k - 1));
    return r;
}

}  // namespace

TEST_SUITE("weyl") {
    TEST_CASE("from_word") {
        const auto g = group('A', 2);
        CHECK(g.from_word({}).is_identity());
        CHECK(g.from_word({1, 2, 1}) == g.from_word({2, 1, 2}));
        CHECK(g.from_word({1, 2, 1}).length() == 3);
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'B', 2}, {'G', 2}, {'D', 4}})
            for (int i = 1; i <= n; ++i) CHECK(group(t, n).from_word({i, i}).is_identity());
        CHECK_THROWS_AS(g.from_word({3}), BadIndex);
        CHECK_THROWS_AS(g.from_word({0}), BadIndex);
    }

    TEST_CASE("group orders and lengths") {
        CHECK(group('A', 1).order() == 2);
        CHECK(group('A', 2).order() == 6);
        CHECK(group('B', 2).order() == 8);
        CHECK(group('G', 2).order() == 12);
        CHECK(group('A', 4).order() == 120);
        CHECK(group('D', 4).order() == 192);
        const auto b2 = group('B', 2);
        CHECK(b2.longest().length() == 4);
        CHECK(static_cast<std::size_t>(group('D', 4).longest().length()) ==
              group('D', 4).root_system().positive_roots().size());
    }

    TEST_CASE("length counts inversions") {
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'G', 2}}) {
            const auto g = group(t, n);
            for (const auto& w : g.elements()) {
                int inv = 0;
                for (const auto& r : g.root_system().positive_roots())
                    if (!g.root_system().is_positive_root(w(r.weight))) ++inv;
                CHECK(inv == w.length());
                CHECK(w.word().size() == static_cast<std::size_t>(w.length()));
                CHECK(g.from_word(w.word()) == w);
            }
        }
    }

    TEST_CASE("canonical order and words") {
        const auto g = group('A', 2);
        std::vector<std::string> words;
        for (const auto& w : g.elements()) words.push_back(format_word(w.word()));
        CHECK(words == std::vector<std::string>{"e", "1", "2", "1,2", "2,1", "1,2,1"});
        CHECK(g.from_word({2, 1, 2}).word() == Word{1, 2, 1});
        CHECK(g.from_word({1}).word() == Word{1});
        CHECK(g.identity().word().empty());
    }

    TEST_CASE("canonical word is the lexicographically smallest reduced word") {
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'G', 2}}) {
            const auto g = group(t, n);
            for (const auto& w : g.elements()) {
                const auto all = g.reduced_words(w);
                REQUIRE_FALSE(all.empty());
                CHECK(all.front() == w.word());
                for (const auto& r : all) CHECK(g.from_word(r) == w);
            }
        }
        const auto a2 = group('A', 2);
        CHECK(a2.reduced_words(a2.longest()).size() == 2);
        const auto b2 = group('B', 2);
        CHECK(b2.reduced_words(b2.longest()).size() == 2);
    }

    TEST_CASE("word parsing") {
        CHECK(parse_word("e").empty());
        CHECK(parse_word("").empty());
        CHECK(parse_word("1,2,1") == Word{1, 2, 1});
        CHECK(format_word({}) == "e");
        CHECK(format_word({2, 1}) == "2,1");
    }

    TEST_CASE("demazure_product") {
        const auto g = group('A', 2);
        CHECK(g.demazure_product({1, 1}) == g.generator(1));
        CHECK(g.demazure_product({1, 2, 1}) == g.longest());
        CHECK(g.demazure_product({1, 2, 1, 2}) == g.longest());
        const auto a3 = group('A', 3);
        for (const auto& w : a3.elements())
            for (int i = 1; i <= 3; ++i) {
                Word ext = w.word();
                ext.push_back(i);
                const auto& d = a3.demazure_product(ext);
                const bool same = d == a3.demazure_product(w.word());
                const bool up = d == a3.right_mul(w, i) && d.length() == w.length() + 1;
                CHECK((same || up));
            }
    }

    TEST_CASE("subword_mask") {
        const auto g = group('A', 3);
        CHECK(g.subword_mask({1, 2, 3}, {true, false, true}) == g.from_word({1, 3}));
        CHECK(g.subword_mask({1, 2, 3}, {false, false, false}).is_identity());
        CHECK(g.subword_mask({1, 2, 3}, {true, true, true}) == g.from_word({1, 2, 3}));
        CHECK_THROWS_AS(g.subword_mask({1, 2}, {true}), BadMask);
    }

    TEST_CASE("deletion_reflection") {
        const auto g = group('A', 2);
        const auto& rs = g.root_system();
        CHECK(g.deletion_reflection({1}, 1).weight == rs.alpha(1));
        CHECK(g.deletion_reflection({1, 2}, 1).weight == rs.alpha(1) + rs.alpha(2));
        CHECK(g.deletion_reflection({1, 2, 1}, 2).weight == rs.alpha(1) + rs.alpha(2));
        CHECK_THROWS_AS(g.deletion_reflection({1, 1}, 1), NotReduced);
    }

    TEST_CASE("deletions: distinct elements, inversion set, covers") {
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 2}}) {
            const auto g = group(t, n);
            const auto& rs = g.root_system();
            for (const auto& w : g.elements()) {
                std::set<Weight> inversions, covers;
                for (const auto& b : rs.positive_roots()) {
                    if (!rs.is_positive_root(w(b.weight))) inversions.insert(b.weight);
                    if (g.multiply(w, g.reflection(b)).length() == w.length() - 1) covers.insert(b.weight);
                }
                for (const auto& word : g.reduced_words(w)) {
                    std::set<std::size_t> deleted;
                    std::set<Weight> betas, reduced_betas;
                    for (std::size_t k = 1; k <= word.size(); ++k) {
                        const Word rest = without(word, k);
                        const auto& d = g.from_word(rest);
                        deleted.insert(d.index());
                        const Root beta = g.deletion_reflection(word, k);
                        CHECK(g.multiply(w, g.reflection(beta)) == d);
                        betas.insert(beta.weight);
                        if (g.is_reduced(rest)) reduced_betas.insert(beta.weight);
                    }
                    CHECK(deleted.size() == word.size());
                    CHECK(betas.size() == word.size());
                    CHECK(betas == inversions);
                    CHECK(reduced_betas == covers);
                }
            }
        }
    }

    TEST_CASE("sign identity for deletions") {
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'G', 2}}) {
            const auto g = group(t, n);
            const auto& rs = g.root_system();
            for (const auto& w : g.elements())
                for (const auto& word : g.reduced_words(w, 4))
                    for (std::size_t k = 1; k <= word.size(); ++k) {
                        const Word tail(word.begin() + static_cast<long>(k), word.end());
                        Word rev(tail.rbegin(), tail.rend());
                        const auto& wprime = g.from_word(rev);  // s_{i_n} ... s_{i_{k+1}}
                        const Root beta = g.deletion_reflection(word, k);
                        const Root& ak = rs.simple_root(word[k - 1]);
                        for (const auto& a : rs.positive_roots())
                            for (const Weight& alpha : {a.weight, -a.weight}) {
                                const int p = rs.pairing(g.inverse(wprime)(alpha), ak);
                                CHECK(((p > 0) - (p < 0)) == rs.inner_sign(beta.weight, alpha));
                            }
                    }
        }
    }

    TEST_CASE("support_set_C") {
        const auto g = group('A', 2);
        const auto& rs = g.root_system();
        CHECK(g.support_set_C(g.identity(), 1).empty());
        CHECK(g.support_set_C(g.identity(), 2).empty());
        auto c = g.support_set_C(g.generator(2), 1);
        REQUIRE(c.size() == 1);
        CHECK(c[0].weight == rs.alpha(1) + rs.alpha(2));
        c = g.support_set_C(g.from_word({1, 2}), 1);
        REQUIRE(c.size() == 1);
        CHECK(c[0].weight == rs.alpha(2));
        CHECK_THROWS_AS(g.support_set_C(g.generator(1), 1), PreconditionViolated);
    }

    TEST_CASE("bruhat order") {
        const auto g = group('A', 2);
        CHECK(g.bruhat_leq(g.identity(), g.longest()));
        CHECK_FALSE(g.bruhat_leq(g.longest(), g.generator(1)));
        CHECK(g.bruhat_leq(g.generator(2), g.from_word({1, 2})));
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}, {'G', 2}}) {
            const auto gg = group(t, n);
            for (const auto& u : gg.elements())
                for (const auto& w : gg.elements()) CHECK(gg.bruhat_leq(u, w) == bruhat_brute(gg, u, w));
        }
    }

    TEST_CASE("braid relations") {
        for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'D', 4}}) {
            const auto g = group(t, n);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    const int m = g.root_system().coxeter_order(i, j);
                    Word a, b;
                    for (int k = 0; k < m; ++k) {
                        a.push_back(k % 2 ? j : i);
                        b.push_back(k % 2 ? i : j);
                    }
                    CHECK(g.from_word(a) == g.from_word(b));
                }
        }
    }

    TEST_CASE("multiplication tables agree with matrices") {
        const auto g = group('B', 2);
        for (const auto& w : g.elements())
            for (int i = 1; i <= 2; ++i) {
                CHECK(g.right_mul(w, i) == g.multiply(w, g.generator(i)));
                CHECK(g.left_mul(i, w) == g.multiply(g.generator(i), w));
                CHECK(g.is_ascent(w, i) == (g.right_mul(w, i).length() > w.length()));
                CHECK(g.multiply(w, g.inverse(w)).is_identity());
            }
    }
}
