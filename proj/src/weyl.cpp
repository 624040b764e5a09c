#include "flagcalc/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

std::string format_word(const Word& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(w[k]);
    }
    return out;
}

Word parse_word(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
        while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    Word w;
    if (text.empty() || text == "e") return w;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = trim(text.substr(start, end - start));
        int v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
            throw ParseError("bad letter '" + std::string(tok) + "' in word", start);
        w.push_back(v);
        start = end + 1;
    }
    return w;
}

WeylMatrix WeylMatrix::identity(std::size_t n) {
    WeylMatrix m;
    m.n_ = n;
    for (std::size_t i = 0; i < n; ++i) m.a_[i * kMaxRank + i] = 1;
    return m;
}

WeylMatrix WeylMatrix::simple_reflection(const RootSystem& rs, int i) {
    return reflection(rs, rs.simple_root(i));
}

// s_beta(lambda) = lambda - <lambda, beta^vee> beta; column j is the image of e_j.
WeylMatrix WeylMatrix::reflection(const RootSystem& rs, const Root& beta) {
    const std::size_t n = rs.rank();
    WeylMatrix m = identity(n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) m.a_[r * kMaxRank + j] -= beta.coroot[j] * beta.weight[r];
    return m;
}

Weight WeylMatrix::apply(const Weight& w) const {
    Weight out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        int s = 0;
        for (std::size_t c = 0; c < n_; ++c) s += a_[r * kMaxRank + c] * w[c];
        out[r] = s;
    }
    return out;
}

WeylMatrix operator*(const WeylMatrix& x, const WeylMatrix& y) {
    WeylMatrix z;
    z.n_ = x.n_;
    for (std::size_t r = 0; r < x.n_; ++r)
        for (std::size_t c = 0; c < x.n_; ++c) {
            int s = 0;
            for (std::size_t k = 0; k < x.n_; ++k) s += x.at(r, k) * y.at(k, c);
            z.a_[r * kMaxRank + c] = s;
        }
    return z;
}

std::size_t WeylMatrix::hash() const noexcept {
    std::size_t h = n_;
    for (int v : a_) h = h * 1000003u ^ static_cast<std::size_t>(v + 64);
    return h;
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    const std::size_t n = rs_.rank();
    std::vector<WeylMatrix> gens;
    for (int i = 1; i <= static_cast<int>(n); ++i) gens.push_back(WeylMatrix::simple_reflection(rs_, i));

    // Enumerate by breadth-first right multiplication.
    std::vector<WeylMatrix> mats{WeylMatrix::identity(n)};
    std::unordered_map<WeylMatrix, std::size_t, MatrixHash> tmp{{mats[0], 0}};
    for (std::size_t k = 0; k < mats.size(); ++k) {
        for (const auto& g : gens) {
            WeylMatrix p = mats[k] * g;
            if (tmp.emplace(p, mats.size()).second) mats.push_back(p);
        }
    }
    const std::size_t order = mats.size();

    std::set<Weight> positive;
    for (const auto& r : rs_.positive_roots()) positive.insert(r.weight);
    std::vector<int> len(order);
    for (std::size_t k = 0; k < order; ++k) {
        int l = 0;
        for (const auto& r : rs_.positive_roots())
            if (positive.count(-mats[k].apply(r.weight))) ++l;
        len[k] = l;
    }

    std::vector<std::size_t> lm(order * n);
    for (std::size_t k = 0; k < order; ++k)
        for (std::size_t i = 0; i < n; ++i) lm[k * n + i] = tmp.at(gens[i] * mats[k]);

    // Lex-minimal reduced word: smallest left descent, then recurse.
    std::vector<std::size_t> by_len(order);
    std::iota(by_len.begin(), by_len.end(), 0);
    std::stable_sort(by_len.begin(), by_len.end(),
                     [&](std::size_t a, std::size_t b) { return len[a] < len[b]; });
    std::vector<Word> words(order);
    for (std::size_t k : by_len) {
        if (len[k] == 0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t s = lm[k * n + i];
            if (len[s] < len[k]) {
                words[k].push_back(static_cast<int>(i + 1));
                words[k].insert(words[k].end(), words[s].begin(), words[s].end());
                break;
            }
        }
    }

    std::vector<std::size_t> perm(order);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        if (len[a] != len[b]) return len[a] < len[b];
        return words[a] < words[b];
    });
    std::vector<std::size_t> newpos(order);
    for (std::size_t k = 0; k < order; ++k) newpos[perm[k]] = k;

    elements_.resize(order);
    rmul_.resize(order * n);
    lmul_.resize(order * n);
    for (std::size_t k = 0; k < order; ++k) {
        std::size_t old = perm[k];
        WeylElement& e = elements_[k];
        e.matrix_ = mats[old];
        e.length_ = len[old];
        e.word_ = words[old];
        e.index_ = k;
        lookup_.emplace(e.matrix_, k);
        for (std::size_t i = 0; i < n; ++i) {
            rmul_[k * n + i] = newpos[tmp.at(mats[old] * gens[i])];
            lmul_[k * n + i] = newpos[lm[old * n + i]];
        }
    }
}

std::size_t WeylGroup::checked(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > rank())
        throw BadIndex("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(rank()));
    return static_cast<std::size_t>(i - 1);
}

const WeylElement& WeylGroup::generator(int i) const {
    return elements_[rmul_[0 * rank() + checked(i)]];
}

const WeylElement& WeylGroup::from_word(const Word& w) const {
    std::size_t k = 0;
    for (int i : w) k = rmul_[k * rank() + checked(i)];
    return elements_[k];
}

const WeylElement& WeylGroup::from_matrix(const WeylMatrix& m) const {
    auto it = lookup_.find(m);
    if (it == lookup_.end()) throw PreconditionViolated("matrix is not an element of the Weyl group");
    return elements_[it->second];
}

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
    std::size_t k = a.index();
    for (int i : b.word()) k = rmul_[k * rank() + static_cast<std::size_t>(i - 1)];
    return elements_[k];
}

const WeylElement& WeylGroup::inverse(const WeylElement& w) const {
    std::size_t k = 0;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it)
        k = rmul_[k * rank() + static_cast<std::size_t>(*it - 1)];
    return elements_[k];
}

const WeylElement& WeylGroup::right_mul(const WeylElement& w, int i) const {
    return elements_[rmul_[w.index() * rank() + checked(i)]];
}

const WeylElement& WeylGroup::left_mul(int i, const WeylElement& w) const {
    return elements_[lmul_[w.index() * rank() + checked(i)]];
}

bool WeylGroup::is_ascent(const WeylElement& w, int i) const {
    return right_mul(w, i).length() > w.length();
}

const WeylElement& WeylGroup::reflection(const Root& beta) const {
    return from_matrix(WeylMatrix::reflection(rs_, beta));
}

bool WeylGroup::is_reduced(const Word& w) const {
    return from_word(w).length() == static_cast<int>(w.size());
}

const WeylElement& WeylGroup::demazure_product(const Word& w) const {
    std::size_t k = 0;
    for (int i : w) {
        std::size_t next = rmul_[k * rank() + checked(i)];
        if (elements_[next].length() > elements_[k].length()) k = next;
    }
    return elements_[k];
}

const WeylElement& WeylGroup::subword_mask(const Word& w, const std::vector<bool>& mask) const {
    if (mask.size() != w.size())
        throw BadMask("mask has " + std::to_string(mask.size()) + " bits for a word of length " +
                      std::to_string(w.size()));
    Word picked;
    for (std::size_t k = 0; k < w.size(); ++k)
        if (mask[k]) picked.push_back(w[k]);
    return demazure_product(picked);
}

// beta = s_{i_n} ... s_{i_{k+1}} (alpha_{i_k})
Root WeylGroup::deletion_reflection(const Word& w, std::size_t k) const {
    if (k < 1 || k > w.size()) throw BadIndex("deletion position out of range");
    if (!is_reduced(w)) throw NotReduced("word " + format_word(w) + " is not reduced");
    Weight beta = rs_.alpha(w[k - 1]);
    for (std::size_t j = k; j < w.size(); ++j) beta = rs_.reflect(beta, rs_.simple_root(w[j]));
    Root r = rs_.root(beta);
    if (!r.positive) throw InternalError("deletion reflection produced a negative root");
    return r;
}

std::vector<Root> WeylGroup::support_set_C(const WeylElement& w, int i) const {
    if (!is_ascent(w, i))
        throw PreconditionViolated("support_set_C requires l(w s_i) > l(w)");
    const WeylElement& ws = right_mul(w, i);
    const Weight ai = rs_.alpha(i);
    std::vector<Root> out;
    for (const auto& g : rs_.positive_roots()) {
        if (g.weight == ai) continue;
        if (multiply(ws, reflection(g)).length() != w.length()) continue;
        if (rs_.inner_sign(ai, g.weight) == 0) continue;
        out.push_back(g);
    }
    return out;
}

// Lifting property: for s a right descent of w, u <= w iff min(u, us) <= ws.
bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
    std::size_t uk = u.index();
    std::size_t wk = w.index();
    while (true) {
        const auto& we = elements_[wk];
        const auto& ue = elements_[uk];
        if (ue.length() > we.length()) return false;
        if (we.length() == 0) return ue.length() == 0;
        const std::size_t s = static_cast<std::size_t>(we.word().back() - 1);
        std::size_t us = rmul_[uk * rank() + s];
        if (elements_[us].length() < ue.length()) uk = us;
        wk = rmul_[wk * rank() + s];
    }
}

std::vector<Word> WeylGroup::reduced_words(const WeylElement& w, std::size_t limit) const {
    std::vector<Word> out;
    Word prefix;
    // Extend prefixes by left descents of what remains.
    std::function<void(const WeylElement&)> go = [&](const WeylElement& rest) {
        if (out.size() >= limit) return;
        if (rest.is_identity()) {
            out.push_back(prefix);
            return;
        }
        for (int i = 1; i <= static_cast<int>(rank()); ++i) {
            const WeylElement& shorter = left_mul(i, rest);
            if (shorter.length() >= rest.length()) continue;
            prefix.push_back(i);
            go(shorter);
            prefix.pop_back();
        }
    };
    go(w);
    return out;
}

}  // namespace flagcalc
