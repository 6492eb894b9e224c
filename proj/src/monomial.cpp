#include "lexrank/monomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

namespace lexrank {

namespace {

void check_n(int n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("ambient variable count must satisfy 1 <= n <= 64, got " +
                                    std::to_string(n));
}

}  // namespace

SquarefreeMonomial::SquarefreeMonomial(int n, const std::vector<int>& vars) : n_(n) {
    check_n(n);
    for (int v : vars) {
        if (v < 1 || v > n)
            throw std::invalid_argument("variable index " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        std::uint64_t bit = std::uint64_t{1} << (v - 1);
        if (mask_ & bit)
            throw std::invalid_argument("repeated variable x" + std::to_string(v) +
                                        " in squarefree monomial");
        mask_ |= bit;
    }
}

SquarefreeMonomial SquarefreeMonomial::from_mask(int n, std::uint64_t mask) {
    check_n(n);
    if (n < 64 && (mask >> n) != 0)
        throw std::invalid_argument("monomial mask exceeds ambient n");
    SquarefreeMonomial m;
    m.n_ = n;
    m.mask_ = mask;
    return m;
}

SquarefreeMonomial SquarefreeMonomial::edge(int n, int a, int b) {
    if (a == b) throw std::invalid_argument("edge monomial needs distinct indices");
    return SquarefreeMonomial(n, {a, b});
}

int SquarefreeMonomial::degree() const { return std::popcount(mask_); }

bool SquarefreeMonomial::contains(int var) const {
    if (var < 1 || var > n_) return false;
    return (mask_ >> (var - 1)) & 1;
}

std::vector<int> SquarefreeMonomial::vars() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
        out.push_back(std::countr_zero(m) + 1);
    return out;
}

int SquarefreeMonomial::min_var() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
}

int SquarefreeMonomial::max_var() const {
    return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_);
}

bool SquarefreeMonomial::divides(const SquarefreeMonomial& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("divides: ambient mismatch");
    return (mask_ & ~other.mask_) == 0;
}

std::string SquarefreeMonomial::str() const {
    if (mask_ == 0) return "1";
    std::string s;
    for (int v : vars()) {
        s += 'x';
        s += std::to_string(v);
    }
    return s;
}

LexOrder lex_compare(const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("lex_compare: ambient mismatch");
    if (a.mask() == b.mask()) return LexOrder::EQ;
    // first index where the supports differ; whoever holds it has the larger
    // exponent there and wins
    std::uint64_t diff = a.mask() ^ b.mask();
    int low = std::countr_zero(diff);
    return ((a.mask() >> low) & 1) ? LexOrder::GT : LexOrder::LT;
}

SquarefreeMonomial parse_monomial(const std::string& text, int n) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty monomial");

    std::vector<int> vars;
    if (s == "1") return SquarefreeMonomial::unit(n);
    if (s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated '[' in monomial '" + text + "'");
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) throw std::invalid_argument("empty index in monomial '" + text + "'");
            try {
                vars.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad index '" + item + "' in monomial '" + text + "'");
            }
        }
        return SquarefreeMonomial(n, vars);
    }

    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == '*') {
            ++pos;
            continue;
        }
        if (s[pos] != 'x' && s[pos] != 'X')
            throw std::invalid_argument("expected 'x' at position " + std::to_string(pos) +
                                        " of monomial '" + text + "'");
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("missing variable index in monomial '" + text + "'");
        vars.push_back(std::stoi(s.substr(start, pos - start)));
    }
    return SquarefreeMonomial(n, vars);
}

SquarefreeMonomial shifted(const SquarefreeMonomial& m, int shift, int new_n) {
    if (shift < 0 || m.max_var() + shift > new_n)
        throw std::invalid_argument("shifted: target ambient too small");
    return SquarefreeMonomial::from_mask(new_n, m.mask() << shift);
}

MonomialIdeal::MonomialIdeal(int n) : n_(n) { check_n(n); }

MonomialIdeal::MonomialIdeal(int n, std::vector<SquarefreeMonomial> gens) : n_(n) {
    check_n(n);
    for (const auto& g : gens)
        if (g.n() != n) throw std::invalid_argument("MonomialIdeal: ambient mismatch");

    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& h : gens) {
            if (h.mask() == g.mask()) continue;
            if (h.divides(g)) {  // strict divisor kills g
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        bool dup = false;
        for (const auto& h : gens_)
            if (h.mask() == g.mask()) { dup = true; break; }
        if (!dup) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const SquarefreeMonomial& a, const SquarefreeMonomial& b) {
                  return lex_greater(a, b);
              });
}

std::optional<int> MonomialIdeal::indeg() const {
    if (gens_.empty()) return std::nullopt;
    int d = gens_[0].degree();
    for (const auto& g : gens_) d = std::min(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const SquarefreeMonomial& m) const {
    if (m.n() != n_) throw std::invalid_argument("contains: ambient mismatch");
    return contains_support(m.mask());
}

bool MonomialIdeal::contains_support(std::uint64_t support_mask) const {
    for (const auto& g : gens_)
        if ((g.mask() & ~support_mask) == 0) return true;
    return false;
}

MonomialIdeal minimalize(int n, std::vector<SquarefreeMonomial> gens) {
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal shifted(const MonomialIdeal& I, int shift, int new_n) {
    std::vector<SquarefreeMonomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(shifted(g, shift, new_n));
    return MonomialIdeal(new_n, std::move(gens));
}

}  // namespace lexrank
