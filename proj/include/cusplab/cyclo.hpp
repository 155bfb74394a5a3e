#ifndef CUSPLAB_CYCLO_HPP
#define CUSPLAB_CYCLO_HPP

// Exact arithmetic in Q and in the cyclotomic field Q(eps), where eps is a
// primitive cube root of unity: eps^2 + eps + 1 = 0. Every element is stored
// uniquely on the basis {1, eps}, so equality is structural.

#include <complex>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cusplab/errors.hpp"

namespace cusplab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int int_numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int int_denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Exact square root of a rational, when it is a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    const Int num = int_numerator(r), den = int_denominator(r);
    Int sn = boost::multiprecision::sqrt(num);
    Int sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

inline std::optional<Int> int_cbrt(const Int& n) {
    if (n < 0) {
        auto r = int_cbrt(-n);
        if (r) return -*r;
        return std::nullopt;
    }
    Int lo = 0, hi = 1;
    while (hi * hi * hi < n) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (mid * mid * mid < n) lo = mid + 1;
        else hi = mid;
    }
    if (lo * lo * lo == n) return lo;
    return std::nullopt;
}

// Exact cube root of a rational, when it is a perfect cube.
inline std::optional<Rational> rational_cbrt(const Rational& r) {
    const auto cn = int_cbrt(int_numerator(r));
    const auto cd = int_cbrt(int_denominator(r));
    if (!cn || !cd) return std::nullopt;
    return Rational(*cn, *cd);
}

struct Cyclo {
    Rational re;  // coefficient of 1
    Rational ep;  // coefficient of eps

    Cyclo() = default;
    Cyclo(int v) : re(v) {}                                   // NOLINT(runtime/explicit)
    Cyclo(Rational v) : re(std::move(v)) {}                   // NOLINT(runtime/explicit)
    Cyclo(Rational a, Rational b) : re(std::move(a)), ep(std::move(b)) {}

    static Cyclo eps() { return Cyclo(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && ep == 0; }
    bool is_rational() const { return ep == 0; }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        return a.re == b.re && a.ep == b.ep;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
        return Cyclo(a.re + b.re, a.ep + b.ep);
    }
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
        return Cyclo(a.re - b.re, a.ep - b.ep);
    }
    friend Cyclo operator-(const Cyclo& a) { return Cyclo(-a.re, -a.ep); }

    // (a+b eps)(c+d eps) = (ac - bd) + (ad + bc - bd) eps, via eps^2 = -1-eps.
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        Rational bd = a.ep * b.ep;
        return Cyclo(a.re * b.re - bd, a.re * b.ep + a.ep * b.re - bd);
    }

    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
};

// Field norm N(a+b eps) = a^2 - ab + b^2 (= x * conj(x)); positive unless x = 0.
inline Rational norm(const Cyclo& x) {
    return x.re * x.re - x.re * x.ep + x.ep * x.ep;
}

// Galois conjugate eps -> eps^2: a + b eps -> (a-b) - b eps.
inline Cyclo conj(const Cyclo& x) { return Cyclo(x.re - x.ep, -x.ep); }

inline Cyclo inverse(const Cyclo& x) {
    if (x.is_zero()) throw DivisionByZero();
    const Rational n = norm(x);
    return Cyclo((x.re - x.ep) / n, -x.ep / n);
}

inline Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * inverse(b); }

inline Cyclo pow(const Cyclo& x, long long e) {
    if (e < 0) return pow(inverse(x), -e);
    Cyclo acc(1), base = x;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Image under eps -> (-1 + i sqrt(3))/2, in double precision.
inline std::complex<double> embed(const Cyclo& x) {
    static const double half_sqrt3 = 0.86602540378443864676;
    const double a = static_cast<double>(x.re), b = static_cast<double>(x.ep);
    return {a - 0.5 * b, half_sqrt3 * b};
}

// Square root inside Q(eps), when one exists. Uses norm and trace: if r^2 = c
// then N(r)^2 = N(c) and T(r)^2 = T(c) + 2 N(r), which pins r = (c + N(r))/T(r)
// unless T(r) = 0, in which case r is a rational multiple of 1 + 2 eps
// (the square root of -3).
inline std::optional<Cyclo> sqrt_in_field(const Cyclo& c) {
    if (c.is_zero()) return Cyclo(0);
    const auto n = rational_sqrt(norm(c));
    if (!n) return std::nullopt;
    const Rational trace = 2 * c.re - c.ep;
    const auto u = rational_sqrt(trace + 2 * *n);
    if (u && *u != 0) {
        Cyclo r = Cyclo(c.re + *n, c.ep) * Cyclo(Rational(1) / *u);
        if (r * r == c) return r;
    }
    if (c.ep == 0) {
        if (const auto p = rational_sqrt(-c.re / 3)) {
            Cyclo r(*p, 2 * *p);  // p (1 + 2 eps), square -3 p^2
            if (r * r == c) return r;
        }
    }
    return std::nullopt;
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << int_numerator(r);
    if (int_denominator(r) != 1) os << "/" << int_denominator(r);
    return os.str();
}

// Prints "a", "b*eps" or "a+b*eps"; parseable by the expression grammar.
inline std::string to_string(const Cyclo& x) {
    if (x.ep == 0) return to_string(x.re);
    std::string eps_part;
    if (x.ep == 1) eps_part = "eps";
    else if (x.ep == -1) eps_part = "-eps";
    else eps_part = to_string(x.ep) + "*eps";
    if (x.re == 0) return eps_part;
    if (x.ep > 0) return to_string(x.re) + "+" + eps_part;
    return to_string(x.re) + "-" + (x.ep == -1 ? std::string("eps")
                                               : to_string(-x.ep) + "*eps");
}

}  // namespace cusplab

#endif
