#include "lexrank/lexsegment.hpp"

#include <algorithm>
#include <stdexcept>

namespace lexrank {

std::vector<SquarefreeMonomial> build_segment(int n, const SquarefreeMonomial& u,
                                              const SquarefreeMonomial& v) {
    if (n < 2) throw std::invalid_argument("build_segment: need n >= 2");
    if (u.n() != n || v.n() != n) throw std::invalid_argument("build_segment: ambient mismatch");
    if (u.degree() != 2 || v.degree() != 2)
        throw std::invalid_argument("build_segment: u, v must have degree 2");
    if (lex_less(u, v)) throw std::invalid_argument("build_segment: u <lex v");
    if (!u.contains(1))
        throw std::invalid_argument("build_segment: expected normalized u (x1 | u)");

    std::vector<SquarefreeMonomial> gens;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            auto w = SquarefreeMonomial::edge(n, a, b);
            if (lex_geq(u, w) && lex_geq(w, v)) gens.push_back(w);
        }
    std::sort(gens.begin(), gens.end(),
              [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
                  return lex_greater(a, b);
              });
    return gens;
}

LexSegmentIdeal normalize(int n, const SquarefreeMonomial& u, const SquarefreeMonomial& v) {
    if (n < 2) throw std::invalid_argument("normalize: need n >= 2");
    if (u.n() != n || v.n() != n) throw std::invalid_argument("normalize: ambient mismatch");
    if (u.degree() != 2 || v.degree() != 2)
        throw std::invalid_argument("normalize: u, v must have degree 2, got " + u.str() + ", " +
                                    v.str());
    if (lex_less(u, v)) throw std::invalid_argument("normalize: u <lex v");

    // x_1..x_{l-1} with l = min(u) divide no segment member; drop them
    int shift = u.min_var() - 1;
    int nn = n - shift;
    if (nn < 2) throw std::invalid_argument("normalize: degenerate segment");

    LexSegmentIdeal L;
    L.n = nn;
    L.shift = shift;
    L.u = SquarefreeMonomial::from_mask(nn, u.mask() >> shift);
    L.v = SquarefreeMonomial::from_mask(nn, v.mask() >> shift);
    auto uv = L.u.vars();
    auto vv = L.v.vars();
    L.i = uv[1];
    L.j = vv[0];
    L.k = vv[1];
    L.ideal = MonomialIdeal(nn, build_segment(nn, L.u, L.v));
    return L;
}

const char* witness_case_name(WitnessCase c) {
    switch (c) {
        case WitnessCase::Single: return "SINGLE";
        case WitnessCase::J1: return "J1";
        case WitnessCase::PdN1: return "PD_N1";
        case WitnessCase::Case1: return "CASE1";
        case WitnessCase::Case2: return "CASE2";
        case WitnessCase::J2Taylor: return "J2_TAYLOR";
        case WitnessCase::J2BigRowI3: return "J2_BIGROW_I3";
        case WitnessCase::J2BigRowIGt3: return "J2_BIGROW_IGT3";
    }
    return "?";
}

SegmentClass classify(const LexSegmentIdeal& L) {
    const int n = L.n, i = L.i, j = L.j, k = L.k;
    SegmentClass c;
    c.is_single = (L.u == L.v);
    c.is_initial = (i == 2);
    c.is_final = (j == n - 1 && k == n);
    c.is_full = c.is_initial && c.is_final;
    c.is_completely = (j >= i - 2);

    auto xin = SquarefreeMonomial::edge(n, i - 1, n);  // x_{i-1} x_n
    if (c.is_single) {
        c.witness_case = WitnessCase::Single;
    } else if (j == 1) {
        c.witness_case = WitnessCase::J1;
    } else if (lex_geq(xin, L.v)) {
        c.witness_case = WitnessCase::PdN1;
    } else if (j >= 3) {
        // v >lex x_{i-1} x_n here, which forces j <= i-1
        auto xii = SquarefreeMonomial::edge(n, i - 1, i);
        if (i == 4 || lex_geq(xii, L.v))
            c.witness_case = WitnessCase::Case1;  // j = i-1
        else
            c.witness_case = WitnessCase::Case2;  // j <= i-2, i >= 5
    } else {  // j == 2
        if (k < i)
            c.witness_case = WitnessCase::J2Taylor;
        else
            c.witness_case = (i == 3) ? WitnessCase::J2BigRowI3 : WitnessCase::J2BigRowIGt3;
    }
    return c;
}

InvariantReport invariants(const LexSegmentIdeal& L) {
    const int n = L.n, i = L.i, j = L.j, k = L.k;
    const auto cls = classify(L);
    InvariantReport r;

    if (cls.is_full) {
        r.dim = 1;
        r.depth = 1;
    } else if (j == 1) {  // includes u = v (k = i)
        r.dim = n - 1;
        r.depth = n - k + i - 1;
    } else {
        r.dim = cls.is_final ? 2 : n - j;
        if (lex_geq(SquarefreeMonomial::edge(n, i - 1, n), L.v))
            r.depth = 1;
        else if (j >= 3)
            r.depth = 2;
        else  // j == 2
            r.depth = (k >= i) ? 2 : i + 1 - k;
    }

    r.projdim = n - r.depth;  // Auslander-Buchsbaum
    r.ara = r.projdim;
    r.height = n - r.dim;

    if (L.mu() == 1 || j == 1)
        r.reg = 2;
    else
        r.reg = (i >= j + 2 && k != n) ? 3 : 2;

    r.cm = (r.dim == r.depth);
    r.stci = r.cm;
    r.linear_resolution = (r.reg == 2 && L.mu() >= 2);
    return r;
}

InvariantReport with_ambient_shift(InvariantReport r, int shift) {
    r.dim += shift;
    r.depth += shift;
    return r;
}

std::vector<std::pair<SquarefreeMonomial, SquarefreeMonomial>> cm_classification_table(int n) {
    std::vector<std::pair<SquarefreeMonomial, SquarefreeMonomial>> out;
    if (n < 3) return out;
    auto edge = [n](int a, int b) { return SquarefreeMonomial::edge(n, a, b); };
    auto push = [&](SquarefreeMonomial u, SquarefreeMonomial v) {
        if (u == v) return;
        for (const auto& [pu, pv] : out)
            if (pu == u && pv == v) return;
        out.emplace_back(u, v);
    };
    // full I_{n,2}
    push(edge(1, 2), edge(n - 1, n));
    // u = x1 xn branch (needs n >= 4 so that u != v and the v's make sense)
    if (n >= 4) {
        push(edge(1, n), edge(2, 3));
        push(edge(1, n), edge(n - 2, n - 1));
        push(edge(1, n), edge(n - 2, n));
    }
    // u = x1 x_{n-1}, v = x_{n-2} x_{n-1}
    if (n >= 3 && 1 < n - 1 && n - 2 >= 1 && n - 2 != n - 1)
        push(edge(1, n - 1), edge(n - 2, n - 1));
    return out;
}

}  // namespace lexrank
