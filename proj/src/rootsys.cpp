#include "flagcalc/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "flagcalc/errors.hpp"

namespace flagcalc {

Weight::Weight(std::size_t rank) : rank_(static_cast<std::uint8_t>(rank)) {
    if (rank > kMaxRank) throw UnsupportedType("rank exceeds kMaxRank");
}

Weight::Weight(std::initializer_list<int> coords) : Weight(coords.size()) {
    std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight Weight::from_span(std::span<const int> coords) {
    Weight w(coords.size());
    std::copy(coords.begin(), coords.end(), w.c_.begin());
    return w;
}

bool Weight::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < kMaxRank; ++i) c_[i] += o.c_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < kMaxRank; ++i) c_[i] -= o.c_[i];
    return *this;
}

Weight& Weight::operator*=(int k) {
    for (auto& x : c_) x *= k;
    return *this;
}

int Root::height() const noexcept { return std::accumulate(simple.begin(), simple.end(), 0); }

Root Root::operator-() const {
    Root r = *this;
    r.weight = -weight;
    r.coroot = -coroot;
    for (auto& m : r.simple) m = -m;
    r.positive = !positive;
    return r;
}

char CartanType::letter() const noexcept {
    switch (family) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::G: return 'G';
    }
    return '?';
}

std::string CartanType::name() const { return std::string(1, letter()) + std::to_string(rank); }

namespace {

long cofactor_det(const std::vector<long>& m, std::size_t k) {
    if (k == 1) return m[0];
    long det = 0;
    std::vector<long> minor((k - 1) * (k - 1));
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t idx = 0;
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t c = 0; c < k; ++c)
                if (c != col) minor[idx++] = m[r * k + c];
        long sub = cofactor_det(minor, k - 1);
        det += (col % 2 == 0 ? 1 : -1) * m[col] * sub;
    }
    return det;
}

// adj[j][i] = (-1)^{i+j} * minor(i, j)
std::vector<long> adjugate(const std::vector<long>& m, std::size_t k) {
    std::vector<long> adj(k * k);
    if (k == 1) {
        adj[0] = 1;
        return adj;
    }
    std::vector<long> minor((k - 1) * (k - 1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t idx = 0;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0; c < k; ++c)
                    if (c != j) minor[idx++] = m[r * k + c];
            }
            long cof = ((i + j) % 2 == 0 ? 1 : -1) * cofactor_det(minor, k - 1);
            adj[j * k + i] = cof;
        }
    }
    return adj;
}

std::vector<int> cartan_matrix(Family f, int n) {
    std::vector<int> c(static_cast<std::size_t>(n * n), 0);
    auto at = [&](int i, int j) -> int& { return c[static_cast<std::size_t>(i * n + j)]; };
    for (int i = 0; i < n; ++i) at(i, i) = 2;
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) at(i, i + 1) = at(i + 1, i) = -1;
            break;
        case Family::B:  // alpha_1 long, alpha_2 short
            at(0, 1) = -1;
            at(1, 0) = -2;
            break;
        case Family::C:  // alpha_1 short, alpha_2 long
            at(0, 1) = -2;
            at(1, 0) = -1;
            break;
        case Family::G:  // alpha_1 short, alpha_2 long
            at(0, 1) = -3;
            at(1, 0) = -1;
            break;
        case Family::D:  // node 2 is the branch point
            for (int leaf : {0, 2, 3}) at(1, leaf) = at(leaf, 1) = -1;
            break;
    }
    return c;
}

std::vector<int> symmetrizer_for(Family f, int n) {
    switch (f) {
        case Family::B: return {2, 1};
        case Family::C: return {1, 2};
        case Family::G: return {1, 3};
        default: return std::vector<int>(static_cast<std::size_t>(n), 1);
    }
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
    Family f;
    bool ok = false;
    switch (type) {
        case 'A': case 'a': f = Family::A; ok = rank >= 1 && rank <= 5; break;
        case 'B': case 'b': f = Family::B; ok = rank == 2; break;
        case 'C': case 'c': f = Family::C; ok = rank == 2; break;
        case 'G': case 'g': f = Family::G; ok = rank == 2; break;
        case 'D': case 'd': f = Family::D; ok = rank == 4; break;
        default: f = Family::A; break;
    }
    if (!ok) {
        std::ostringstream os;
        os << "unsupported Cartan type " << type << rank
           << " (supported: A1..A5, B2, C2, G2, D4)";
        throw UnsupportedType(os.str());
    }

    RootSystem rs;
    rs.type_ = CartanType{f, rank};
    rs.n_ = static_cast<std::size_t>(rank);
    rs.cartan_ = cartan_matrix(f, rank);
    rs.sym_ = symmetrizer_for(f, rank);
    const std::size_t n = rs.n_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rs.sym_[i] * rs.cartan(i, j) != rs.sym_[j] * rs.cartan(j, i))
                throw InternalError("symmetrizer does not symmetrize the Cartan matrix");

    std::vector<long> cl(rs.cartan_.begin(), rs.cartan_.end());
    rs.det_ = cofactor_det(cl, n);
    rs.adj_ = adjugate(cl, n);
    if (rs.det_ <= 0) throw InternalError("Cartan matrix must have positive determinant");

    for (std::size_t j = 0; j < n; ++j) {
        Weight a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = rs.cartan(i, j);
        rs.simple_.push_back(rs.make_root(a));
    }

    // Closure of the simple roots under simple reflections gives all roots.
    std::set<Weight> all;
    std::vector<Weight> frontier;
    for (const auto& r : rs.simple_) {
        all.insert(r.weight);
        frontier.push_back(r.weight);
    }
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier) {
            for (std::size_t i = 0; i < n; ++i) {
                Weight s = w - w[i] * rs.simple_[i].weight;
                if (all.insert(s).second) next.push_back(s);
            }
        }
        frontier = std::move(next);
    }
    for (const auto& w : all) {
        Root r = rs.make_root(w);
        if (r.positive) rs.positive_.push_back(r);
    }
    std::sort(rs.positive_.begin(), rs.positive_.end(), [n](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return std::lexicographical_compare(a.simple.begin(), a.simple.begin() + n,
                                            b.simple.begin(), b.simple.begin() + n);
    });
    return rs;
}

Root RootSystem::make_root(const Weight& w) const {
    auto m = to_simple_coords(w);
    if (!m) throw PreconditionViolated("weight is not in the root lattice");
    Root r;
    r.weight = w;
    r.simple = *m;
    bool nonneg = true, nonpos = true;
    long norm = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        nonneg = nonneg && (*m)[j] >= 0;
        nonpos = nonpos && (*m)[j] <= 0;
        norm += static_cast<long>((*m)[j]) * sym_[j] * w[j];
    }
    if (!(nonneg || nonpos) || norm <= 0) throw PreconditionViolated("weight is not a root");
    r.positive = nonneg;
    r.coroot = Weight(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        long num = 2L * (*m)[j] * sym_[j];
        if (num % norm != 0) throw InternalError("coroot is not integral");
        r.coroot[j] = static_cast<int>(num / norm);
    }
    return r;
}

const Root& RootSystem::simple_root(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > n_)
        throw BadIndex("simple index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(n_));
    return simple_[static_cast<std::size_t>(i - 1)];
}

int RootSystem::coxeter_order(int i, int j) const {
    if (i == j) return 1;
    simple_root(i);
    simple_root(j);
    int p = cartan(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) *
            cartan(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1));
    switch (p) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw InternalError("not a finite Cartan matrix");
    }
}

std::optional<Root> RootSystem::find_root(const Weight& w) const {
    for (const auto& r : positive_) {
        if (r.weight == w) return r;
        if (r.weight == -w) return -r;
    }
    return std::nullopt;
}

Root RootSystem::root(const Weight& w) const {
    auto r = find_root(w);
    if (!r) throw PreconditionViolated("weight is not a root of " + type_.name());
    return *r;
}

int RootSystem::pairing(const Weight& lambda, const Root& beta) const {
    int s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += beta.coroot[j] * lambda[j];
    return s;
}

Weight RootSystem::reflect(const Weight& lambda, const Root& beta) const {
    return lambda - pairing(lambda, beta) * beta.weight;
}

long RootSystem::scaled_form(const Weight& a, const Weight& b) const {
    SimpleCoords m = scaled_simple_coords(b);
    long s = 0;
    for (std::size_t j = 0; j < n_; ++j) s += static_cast<long>(m[j]) * sym_[j] * a[j];
    return s;
}

int RootSystem::inner_sign(const Weight& a, const Weight& b) const {
    long s = scaled_form(a, b);
    return (s > 0) - (s < 0);
}

SimpleCoords RootSystem::scaled_simple_coords(const Weight& w) const {
    SimpleCoords m{};
    for (std::size_t i = 0; i < n_; ++i) {
        long s = 0;
        for (std::size_t j = 0; j < n_; ++j) s += adj_[i * n_ + j] * w[j];
        m[i] = static_cast<int>(s);
    }
    return m;
}

std::optional<SimpleCoords> RootSystem::to_simple_coords(const Weight& w) const {
    SimpleCoords m = scaled_simple_coords(w);
    for (std::size_t i = 0; i < n_; ++i) {
        if (m[i] % det_ != 0) return std::nullopt;
        m[i] = static_cast<int>(m[i] / det_);
    }
    return m;
}

Weight RootSystem::from_simple_coords(std::span<const int> m) const {
    if (m.size() != n_) throw BadIndex("expected " + std::to_string(n_) + " simple-root coordinates");
    Weight w(n_);
    for (std::size_t j = 0; j < n_; ++j) w += m[j] * simple_[j].weight;
    return w;
}

Weight RootSystem::fundamental_weight(int i) const {
    simple_root(i);
    Weight w(n_);
    w[static_cast<std::size_t>(i - 1)] = 1;
    return w;
}

bool RootSystem::is_positive_root(const Weight& w) const {
    return std::any_of(positive_.begin(), positive_.end(),
                       [&](const Root& r) { return r.weight == w; });
}

}  // namespace flagcalc
