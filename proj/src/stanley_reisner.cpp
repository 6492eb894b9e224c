#include "lexrank/stanley_reisner.hpp"

#include "lexrank/linalg.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lexrank {

namespace {

bool is_face(const MonomialIdeal& I, std::uint64_t subset) {
    return !I.contains_support(subset);
}

}  // namespace

SimplicialComplex complex_of(const MonomialIdeal& I) {
    if (I.is_unit())
        throw std::invalid_argument("complex_of: unit ideal has no Stanley-Reisner complex");
    const int n = I.n();
    SimplicialComplex D;
    D.n = n;
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::vector<std::uint64_t> faces;
    for (std::uint64_t s = 0; ; ++s) {
        if (is_face(I, s)) faces.push_back(s);
        if (s == full) break;
    }
    for (std::uint64_t f : faces) {
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            std::uint64_t g = f | (std::uint64_t{1} << v);
            if (g != f && is_face(I, g)) maximal = false;
        }
        if (maximal) D.facets.push_back(f);
    }
    std::sort(D.facets.begin(), D.facets.end());
    return D;
}

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
    auto D = complex_of(I);
    const std::uint64_t full =
        (D.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << D.n) - 1);
    std::vector<std::vector<int>> primes;
    for (std::uint64_t f : D.facets) {
        std::uint64_t comp = full & ~f;
        std::vector<int> p;
        for (std::uint64_t m = comp; m != 0; m &= m - 1) p.push_back(std::countr_zero(m) + 1);
        primes.push_back(std::move(p));
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

int height_of(const MonomialIdeal& I) {
    if (I.is_zero()) return 0;
    auto primes = minimal_primes(I);
    std::size_t h = static_cast<std::size_t>(I.n());
    for (const auto& p : primes) h = std::min(h, p.size());
    return static_cast<int>(h);
}

bool skeleton1_connected(const MonomialIdeal& I) {
    const int n = I.n();
    if (auto d = I.indeg(); d && *d < 2)
        throw std::invalid_argument("skeleton1_connected: ideal has generators of degree < 2");
    if (n == 1) return true;
    // adjacency: {a,b} is an edge of the complex iff x_a x_b not in I
    std::vector<int> comp(n, -1);
    std::vector<int> stack{0};
    comp[0] = 0;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < n; ++b) {
            if (b == a || comp[b] >= 0) continue;
            std::uint64_t edge = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            if (!I.contains_support(edge)) {
                comp[b] = 0;
                stack.push_back(b);
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool taylor_minimal(const MonomialIdeal& I) {
    const auto& G = I.gens();
    for (std::size_t a = 0; a < G.size(); ++a) {
        std::uint64_t others = 0;
        for (std::size_t b = 0; b < G.size(); ++b)
            if (b != a) others |= G[b].mask();
        if ((G[a].mask() & ~others) == 0) return false;  // no private variable
    }
    return true;
}

long long BettiTable::beta(int i, int d) const {
    auto it = entries.find({i, d});
    return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [id, b] : entries)
        if (id.first == i) t += b;
    return t;
}

int BettiTable::projdim() const {
    int p = 0;
    for (const auto& [id, b] : entries)
        if (b != 0) p = std::max(p, id.first);
    return p;
}

int BettiTable::reg_ideal() const {
    int r = 0;  // max over d - i for i >= 1
    bool any = false;
    for (const auto& [id, b] : entries) {
        if (id.first < 1 || b == 0) continue;
        any = true;
        r = std::max(r, id.second - id.first);
    }
    return any ? r + 1 : 1;
}

namespace {

// Reduced homology dimensions of the restriction of the complex to sigma,
// accumulated into the Betti table: beta_{i,d} += dim H~_{|sigma|-i-1}.
// Faces include the empty set, so H~_{-1} of the "only empty face" complex
// contributes beta_{0,0} (and degree-1 generators are handled uniformly).
template <class F>
void accumulate_sigma(const F& K, const MonomialIdeal& I, std::uint64_t sigma,
                      std::map<std::pair<int, int>, long long>& entries) {
    const int d = std::popcount(sigma);

    // enumerate faces of the restriction, grouped by cardinality
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(d) + 1);
    for (std::uint64_t sub = sigma;; sub = (sub - 1) & sigma) {
        if (!I.contains_support(sub)) faces[static_cast<std::size_t>(std::popcount(sub))].push_back(sub);
        if (sub == 0) break;
    }
    if (faces[0].empty()) return;  // void complex (possible when sigma = {} never happens; safety)
    for (auto& fs : faces) std::sort(fs.begin(), fs.end());

    // rank of each boundary map d_s : C_{s-1 faces of card s} -> C_{card s-1}
    std::vector<int> rank(static_cast<std::size_t>(d) + 2, 0);
    for (int s = 1; s <= d; ++s) {
        const auto& dom = faces[static_cast<std::size_t>(s)];
        const auto& cod = faces[static_cast<std::size_t>(s - 1)];
        if (dom.empty() || cod.empty()) continue;
        std::vector<std::vector<typename F::Elem>> M(
            dom.size(), std::vector<typename F::Elem>(cod.size(), K.zero()));
        for (std::size_t c = 0; c < dom.size(); ++c) {
            int pos = 0;
            for (std::uint64_t m = dom[c]; m != 0; m &= m - 1, ++pos) {
                std::uint64_t face = dom[c] & ~(m & (~m + 1));  // drop lowest set bit of m
                auto it = std::lower_bound(cod.begin(), cod.end(), face);
                std::size_t r = static_cast<std::size_t>(it - cod.begin());
                M[c][r] = (pos % 2 == 0) ? K.one() : K.neg(K.one());
            }
        }
        rank[static_cast<std::size_t>(s)] = matrix_rank(K, std::move(M));
    }

    // dim H~_{q} with q = s-1 for card s: #faces - rank in - rank out
    for (int s = 0; s <= d; ++s) {
        long long h = static_cast<long long>(faces[static_cast<std::size_t>(s)].size()) -
                      rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1];
        if (h > 0) {
            int i = d - s;  // homological degree: |sigma| - q - 1, q = s - 1
            entries[{i, d}] += h;
        }
    }
}

}  // namespace

BettiTable hochster_betti(const MonomialIdeal& I, const FieldSpec& field, int max_n) {
    const int n = I.n();
    if (n > max_n)
        throw std::invalid_argument("hochster_betti: n = " + std::to_string(n) +
                                    " exceeds oracle limit " + std::to_string(max_n));
    if (I.is_unit()) throw std::invalid_argument("hochster_betti: unit ideal");

    BettiTable T;
    T.field = field.name();
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    with_field(field, [&](auto K) {
        for (std::uint64_t sigma = 0;; ++sigma) {
            accumulate_sigma(K, I, sigma, T.entries);
            if (sigma == full) break;
        }
    });
    // drop explicit zeros, if any
    for (auto it = T.entries.begin(); it != T.entries.end();)
        it = (it->second == 0) ? T.entries.erase(it) : std::next(it);
    return T;
}

OracleInvariants oracle_invariants(const MonomialIdeal& I, const FieldSpec& field, int max_n) {
    OracleInvariants r;
    auto D = complex_of(I);
    int dim = 0;
    for (std::uint64_t f : D.facets) dim = std::max(dim, std::popcount(f));
    r.dim = dim;
    r.height = height_of(I);
    auto T = hochster_betti(I, field, max_n);
    r.projdim = T.projdim();
    r.depth = I.n() - r.projdim;
    r.reg = T.reg_ideal();
    return r;
}

}  // namespace lexrank
