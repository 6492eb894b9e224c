#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexrank {

// Squarefree monomial in K[x_1..x_n], stored as a bitmask (bit b <=> x_{b+1}
// divides the monomial). Indices are 1-based throughout; n is capped at 64.
class SquarefreeMonomial {
public:
    SquarefreeMonomial() = default;

    SquarefreeMonomial(int n, const std::vector<int>& vars);

    static SquarefreeMonomial unit(int n) { return from_mask(n, 0); }
    static SquarefreeMonomial from_mask(int n, std::uint64_t mask);
    // degree-2 convenience: x_a * x_b
    static SquarefreeMonomial edge(int n, int a, int b);

    int n() const { return n_; }
    int degree() const;
    std::uint64_t mask() const { return mask_; }
    bool is_unit() const { return mask_ == 0; }

    bool contains(int var) const;
    std::vector<int> vars() const;
    int min_var() const;  // 0 for the unit
    int max_var() const;  // 0 for the unit

    // divisibility = support inclusion (both squarefree, same ambient n)
    bool divides(const SquarefreeMonomial& other) const;

    std::string str() const;  // "x1x3", unit prints "1"

    friend bool operator==(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }
    friend bool operator!=(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
        return !(a == b);
    }

private:
    std::uint64_t mask_ = 0;
    int n_ = 0;
};

enum class LexOrder { LT, EQ, GT };

// Pure lexicographic order on exponent vectors with x_1 > x_2 > ... > x_n:
// first index where the exponents differ decides, larger exponent wins.
// For equal degrees this is "smaller first differing index wins"; across
// degrees e.g. x1 < x1x2 and the unit is smallest.
LexOrder lex_compare(const SquarefreeMonomial& a, const SquarefreeMonomial& b);

inline bool lex_greater(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return lex_compare(a, b) == LexOrder::GT;
}
inline bool lex_less(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return lex_compare(a, b) == LexOrder::LT;
}
inline bool lex_geq(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return lex_compare(a, b) != LexOrder::LT;
}
inline bool lex_leq(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    return lex_compare(a, b) != LexOrder::GT;
}

// Accepts "x1x3", "x1*x3", "[1,3]"; "1" / "[]" denote the unit.
SquarefreeMonomial parse_monomial(const std::string& text, int n);

// Relabel x_m -> x_{m+shift} into K[x_1..x_{new_n}].
SquarefreeMonomial shifted(const SquarefreeMonomial& m, int shift, int new_n);

// Squarefree monomial ideal given by its (minimalized) generators, held as an
// antichain sorted in decreasing lex order.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n);  // zero ideal
    MonomialIdeal(int n, std::vector<SquarefreeMonomial> gens);

    int n() const { return n_; }
    const std::vector<SquarefreeMonomial>& gens() const { return gens_; }
    std::size_t mu() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }

    // smallest generator degree, nullopt for the zero ideal
    std::optional<int> indeg() const;

    bool contains(const SquarefreeMonomial& m) const;
    // membership of a (possibly non-squarefree) monomial given by its support
    bool contains_support(std::uint64_t support_mask) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
        return !(a == b);
    }

private:
    int n_ = 0;
    std::vector<SquarefreeMonomial> gens_;
};

// Drop duplicates and generators divisible by another; sort decreasing lex.
MonomialIdeal minimalize(int n, std::vector<SquarefreeMonomial> gens);

MonomialIdeal shifted(const MonomialIdeal& I, int shift, int new_n);

}  // namespace lexrank
