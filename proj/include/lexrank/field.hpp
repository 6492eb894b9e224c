#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lexrank {

using Rational = boost::multiprecision::cpp_rational;

// Prime field Z/p for p < 2^31 (products fit in uint64 without overflow).
class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw std::invalid_argument("PrimeField: modulus out of range");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == one(); }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt; newt = tmp;
            tmp = r - q * newr;
            r = newr; newr = tmp;
        }
        if (r != 1) throw std::domain_error("PrimeField: non-invertible element");
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_rational(const Rational& q) const {
        using boost::multiprecision::cpp_int;
        cpp_int num = boost::multiprecision::numerator(q) % p_;
        cpp_int den = boost::multiprecision::denominator(q) % p_;
        if (num < 0) num += p_;
        if (den == 0)
            throw std::domain_error("PrimeField: denominator divisible by modulus");
        return mul(static_cast<Elem>(num), inv(static_cast<Elem>(den)));
    }

    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_;
};

// Exact rationals (boost::multiprecision), presented with the same interface.
class RationalField {
public:
    using Elem = Rational;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    Elem from_int(long long v) const { return Elem(v); }
    Elem from_rational(const Rational& q) const { return q; }

    std::string to_string(const Elem& a) const { return a.str(); }
};

enum class FieldKind { prime, rational };

// Runtime field selection. Tags: "gf2", "gf<p>" (e.g. "gf32003"), "q".
struct FieldSpec {
    FieldKind kind = FieldKind::prime;
    std::uint64_t p = 2;

    static FieldSpec gf2() { return {FieldKind::prime, 2}; }
    static FieldSpec gfp(std::uint64_t p) { return {FieldKind::prime, p}; }
    static FieldSpec rationals() { return {FieldKind::rational, 0}; }

    static FieldSpec parse(const std::string& tag);
    std::string name() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind == FieldKind::rational || a.p == b.p);
    }
};

inline FieldSpec FieldSpec::parse(const std::string& tag) {
    if (tag == "q" || tag == "Q" || tag == "rationals") return rationals();
    if (tag.rfind("gf", 0) == 0 && tag.size() > 2) {
        try {
            return gfp(std::stoull(tag.substr(2)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad field tag '" + tag + "'");
        }
    }
    throw std::invalid_argument("bad field tag '" + tag + "' (expected gf<p> or q)");
}

inline std::string FieldSpec::name() const {
    return kind == FieldKind::rational ? "q" : "gf" + std::to_string(p);
}

// Dispatch a callable templated on the concrete field type.
template <class Fn>
decltype(auto) with_field(const FieldSpec& fs, Fn&& fn) {
    if (fs.kind == FieldKind::rational) return fn(RationalField{});
    return fn(PrimeField{fs.p});
}

}  // namespace lexrank
