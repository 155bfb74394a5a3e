#ifndef CUSPLAB_ROOTS_HPP
#define CUSPLAB_ROOTS_HPP

// Univariate root finding, exact and numeric.
//
// Exact scope: complete splitting over Q(eps) via linear-factor search.
// Candidates are u * eps^k with rational u from a rational-root scan (the
// scan runs on the rational component polynomials of the eps^k-twisted
// input), quadratics go through the field square root. Anything the search
// cannot split raises ExactFactorizationFailed; callers fall back to the
// companion-matrix solver.

#include <algorithm>
#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <boost/multiprecision/miller_rabin.hpp>

#include "cusplab/cyclo.hpp"
#include "cusplab/poly.hpp"

namespace cusplab {

namespace detail {

// All positive divisors, or failure when the factorization is out of reach.
inline bool all_divisors(Int n, std::vector<Int>& out) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    std::map<Int, int> fac;
    for (Int p = 2; p * p <= n && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (n % p == 0) { ++fac[p]; n /= p; }
    }
    if (n > 1) {
        if (n < Int(10000000000LL) ||
            boost::multiprecision::miller_rabin_test(n, 24)) {
            ++fac[n];
        } else {
            return false;  // big composite cofactor; give up
        }
    }
    out = {Int(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t sz = out.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
        if (out.size() > 4096) return false;
    }
    return true;
}

inline Cyclo eval_coeffs(const std::vector<Cyclo>& c, const Cyclo& x) {
    Cyclo acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Exact synthetic division of a monic-coefficient list by (y - r); the
// remainder must vanish.
inline std::vector<Cyclo> deflate(const std::vector<Cyclo>& c, const Cyclo& r) {
    std::vector<Cyclo> q(c.size() - 1, Cyclo(0));
    Cyclo carry = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = c[i] + carry * r;
    }
    if (!carry.is_zero()) throw Error("deflation by a non-root");
    return q;
}

// Rational roots of a polynomial with coefficients in Q(eps): a rational u
// must be a common root of both rational component polynomials.
inline std::vector<Rational> rational_roots(const std::vector<Cyclo>& c) {
    // pick the component (re or ep) that is not identically zero
    std::vector<Rational> a;
    bool use_ep = true;
    for (const auto& x : c)
        if (x.re != 0) { use_ep = false; break; }
    for (const auto& x : c) a.push_back(use_ep ? x.ep : x.re);

    // clear denominators to a primitive integer polynomial
    Int lcm = 1;
    for (const auto& r : a) {
        Int d = int_denominator(r);
        lcm = boost::multiprecision::lcm(lcm, d);
    }
    std::vector<Int> ai;
    for (const auto& r : a) ai.push_back(int_numerator(r) * (lcm / int_denominator(r)));

    std::size_t low = 0;
    while (low < ai.size() && ai[low] == 0) ++low;
    std::vector<Rational> roots;
    if (low == ai.size()) return roots;  // component identically zero: no info
    if (low > 0) roots.push_back(Rational(0));
    std::size_t high = ai.size() - 1;
    while (ai[high] == 0) --high;  // the component may drop degree

    std::vector<Int> divs_p, divs_q;
    if (!all_divisors(ai[low], divs_p) || !all_divisors(ai[high], divs_q))
        throw ExactFactorizationFailed("divisor enumeration out of reach");
    for (const auto& p : divs_p) {
        for (const auto& q : divs_q) {
            for (int sign : {1, -1}) {
                Rational cand(sign * p, q);
                if (eval_coeffs(c, Cyclo(cand)).is_zero())
                    roots.push_back(cand);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

inline std::optional<Cyclo> find_special_root(const std::vector<Cyclo>& c) {
    for (int k = 0; k < 3; ++k) {
        const Cyclo ek = pow(Cyclo::eps(), k);
        std::vector<Cyclo> twisted(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) twisted[i] = c[i] * pow(ek, i);
        for (const auto& u : rational_roots(twisted)) {
            const Cyclo r = Cyclo(u) * ek;
            if (eval_coeffs(c, r).is_zero()) return r;
        }
    }
    return std::nullopt;
}

}  // namespace detail

// Cube root inside Q(eps), when one exists. If r^3 = c then the norm of r is
// the rational cube root of N(c) and the trace of r is a rational root of
// T^3 - 3 N(r) T - T(c); together they pin r down.
inline std::optional<Cyclo> cbrt_in_field(const Cyclo& c) {
    if (c.is_zero()) return Cyclo(0);
    const auto n = rational_cbrt(norm(c));
    if (!n) return std::nullopt;
    const Rational trace_c = 2 * c.re - c.ep;
    const std::vector<Cyclo> trace_poly{Cyclo(-trace_c), Cyclo(-3 * *n), Cyclo(0), Cyclo(1)};
    for (const auto& tau : detail::rational_roots(trace_poly)) {
        const Rational denom = tau * tau - *n;
        if (denom != 0) {
            const Cyclo r = (c + Cyclo(tau * *n)) * Cyclo(Rational(1) / denom);
            if (r * r * r == c) return r;
        } else if (const auto d = sqrt_in_field(Cyclo(tau * tau - 4 * *n))) {
            for (const Cyclo& root :
                 {(Cyclo(tau) + *d) * Cyclo(Rational(1, 2)),
                  (Cyclo(tau) - *d) * Cyclo(Rational(1, 2))}) {
                if (root * root * root == c) return root;
            }
        }
    }
    return std::nullopt;
}

// Roots with multiplicity of a univariate polynomial over Q(eps); throws
// ExactFactorizationFailed when the polynomial does not split by the
// supported search.
inline std::vector<std::pair<Cyclo, int>> exact_roots(const Polynomial& p,
                                                      const std::string& var) {
    const auto v = p.table()->index(var);
    for (std::size_t i = 0; i < p.table()->size(); ++i)
        if (i != v && p.depends_on(i))
            throw Error("exact_roots requires a univariate polynomial");
    if (p.is_zero()) throw Error("exact_roots of the zero polynomial");
    if (p.min_exponent(v) < 0)
        throw Error("exact_roots requires an honest polynomial");

    std::vector<Cyclo> c(static_cast<std::size_t>(p.degree_in(v)) + 1, Cyclo(0));
    for (const auto& [m, coef] : p.terms()) c[m.e[v]] = coef;

    std::vector<Cyclo> cur = c;
    // normalize monic
    {
        const Cyclo inv = inverse(cur.back());
        for (auto& x : cur) x *= inv;
    }
    std::vector<Cyclo> flat;
    while (cur.size() > 1) {
        const std::size_t deg = cur.size() - 1;
        if (deg == 1) {
            flat.push_back(-cur[0]);
            break;
        }
        if (deg == 2) {
            const Cyclo disc = cur[1] * cur[1] - Cyclo(4) * cur[0];
            const auto sq = sqrt_in_field(disc);
            if (!sq) throw ExactFactorizationFailed("quadratic discriminant is not a square in Q(eps)");
            const Cyclo half = Cyclo(Rational(1, 2));
            flat.push_back((-cur[1] + *sq) * half);
            flat.push_back((-cur[1] - *sq) * half);
            break;
        }
        auto r = detail::find_special_root(cur);
        if (!r && deg == 3 && cur[2].is_zero() && cur[1].is_zero()) {
            // pure cube y^3 = -c0: take one field cube root, the rest follow
            if (const auto cr = cbrt_in_field(-cur[0])) r = cr;
        }
        if (!r) throw ExactFactorizationFailed("no linear factor of the form u*eps^k found");
        flat.push_back(*r);
        cur = detail::deflate(cur, *r);
    }

    std::vector<std::pair<Cyclo, int>> out;
    for (const auto& r : flat) {
        bool found = false;
        for (auto& [root, mult] : out)
            if (root == r) { ++mult; found = true; break; }
        if (!found) out.emplace_back(r, 1);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Numeric fallback: companion-matrix eigenvalues, Newton polish, clustering.

struct NumericRoot {
    std::complex<double> value;
    int multiplicity;
};

inline std::vector<std::complex<double>> companion_roots(
    const std::vector<std::complex<double>>& coeffs) {
    // coeffs[i] multiplies y^i; leading coefficient must be nonzero
    const std::size_t d = coeffs.size() - 1;
    if (d == 0) return {};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    const std::complex<double> lead = coeffs.back();
    for (std::size_t i = 0; i < d; ++i) m(i, d - 1) = -coeffs[i] / lead;
    for (std::size_t i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
    std::vector<std::complex<double>> roots(d);
    for (std::size_t i = 0; i < d; ++i) roots[i] = solver.eigenvalues()(i);

    auto eval = [&](std::complex<double> x, std::complex<double>& f,
                    std::complex<double>& df) {
        f = 0; df = 0;
        for (std::size_t i = coeffs.size(); i-- > 0;) {
            df = df * x + f;
            f = f * x + coeffs[i];
        }
    };
    for (auto& r : roots) {
        for (int it = 0; it < 3; ++it) {
            std::complex<double> f, df;
            eval(r, f, df);
            if (std::abs(df) < 1e-14) break;
            r -= f / df;
        }
    }
    return roots;
}

namespace detail {

inline std::vector<std::vector<std::complex<double>>> group_within(
    const std::vector<std::complex<double>>& points, double tol) {
    std::vector<std::vector<std::complex<double>>> groups;
    std::vector<bool> used(points.size(), false);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::complex<double>> g{points[i]};
        used[i] = true;
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (!used[j] && std::abs(points[j] - points[i]) < tol) {
                g.push_back(points[j]);
                used[j] = true;
            }
        groups.push_back(std::move(g));
    }
    return groups;
}

// Decides whether a cluster is a genuine m-fold root. The center is refined
// on the nearest root of the (m-1)-st derivative; the cluster must then sit
// inside the splitting radius (eps * |p| / |p^(m)(c)/m!|)^(1/m) that
// roundoff inflicts on a true m-fold root. Distinct roots spread wider than
// that radius are not a multiple root.
inline bool validate_multiple_root(const std::vector<std::complex<double>>& coeffs,
                                   std::complex<double>& center,
                                   const std::vector<std::complex<double>>& members,
                                   int mult) {
    std::vector<std::vector<std::complex<double>>> derivs{coeffs};
    for (int k = 1; k <= mult; ++k) {
        const auto& d = derivs.back();
        std::vector<std::complex<double>> nd(d.size() > 1 ? d.size() - 1 : 0);
        for (std::size_t t = 1; t < d.size(); ++t) nd[t - 1] = d[t] * static_cast<double>(t);
        derivs.push_back(std::move(nd));
    }
    if (derivs[mult - 1].size() > 1) {
        std::complex<double> best = center;
        double bd = 1e300;
        for (const auto& r : companion_roots(derivs[mult - 1])) {
            const double dist = std::abs(r - center);
            if (dist < bd) { bd = dist; best = r; }
        }
        if (bd < 1e-2) center = best;
    }
    auto value_at = [&](const std::vector<std::complex<double>>& d) {
        std::complex<double> acc = 0;
        for (std::size_t t = d.size(); t-- > 0;) acc = acc * center + d[t];
        return acc;
    };
    double factorial = 1;
    for (int k = 2; k <= mult; ++k) factorial *= k;
    const double lead_m = std::abs(value_at(derivs[mult])) / factorial;
    const double grow = std::max(1.0, std::abs(center));
    double scale = 1.0, g = 1.0;
    for (const auto& c : coeffs) {
        scale = std::max(scale, std::abs(c) * g);
        g *= grow;
    }
    const double radius =
        std::pow(1e-13 * scale / std::max(lead_m, 1e-300), 1.0 / mult);
    for (const auto& r : members)
        if (std::abs(r - center) > radius) return false;
    return true;
}

}  // namespace detail

// Clusters companion roots. Roots within the multiplicity-detection radius
// collapse to one multiple root only when the splitting-radius test confirms
// a genuine multiple root; otherwise they stay separate. Root groups jammed
// below the separation threshold without multiple-root structure raise
// ToleranceAmbiguity rather than being merged.
inline std::vector<NumericRoot> numeric_roots_clustered(
    const std::vector<std::complex<double>>& coeffs, double cluster_tol = 1e-4,
    double separation_tol = 1e-6) {
    const auto roots = companion_roots(coeffs);

    // groups below the separation threshold must behave like multiple roots,
    // otherwise the input sits on the unresolvable boundary
    std::vector<NumericRoot> fine;
    for (const auto& g : detail::group_within(roots, separation_tol)) {
        std::complex<double> center = 0;
        for (const auto& r : g) center += r;
        center /= static_cast<double>(g.size());
        if (g.size() > 1 &&
            !detail::validate_multiple_root(coeffs, center, g,
                                            static_cast<int>(g.size())))
            throw ToleranceAmbiguity();
        fine.push_back({center, static_cast<int>(g.size())});
    }

    // merge nearby representatives only when a genuine multiple root confirms
    std::vector<std::complex<double>> reps;
    for (const auto& r : fine) reps.push_back(r.value);
    std::vector<NumericRoot> out;
    std::vector<bool> used(fine.size(), false);
    for (std::size_t i = 0; i < fine.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> group{i};
        for (std::size_t j = i + 1; j < fine.size(); ++j)
            if (!used[j] && std::abs(reps[j] - reps[i]) < cluster_tol) group.push_back(j);
        if (group.size() > 1) {
            std::complex<double> center = 0;
            int total = 0;
            std::vector<std::complex<double>> members;
            for (auto j : group) {
                center += reps[j] * static_cast<double>(fine[j].multiplicity);
                total += fine[j].multiplicity;
                members.push_back(reps[j]);
            }
            center /= static_cast<double>(total);
            if (detail::validate_multiple_root(coeffs, center, members, total)) {
                for (auto j : group) used[j] = true;
                out.push_back({center, total});
                continue;
            }
        }
        used[i] = true;
        out.push_back(fine[i]);
    }
    // survivors must stay resolvable against each other
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j)
            if (std::abs(out[i].value - out[j].value) < separation_tol)
                throw ToleranceAmbiguity();
    return out;
}

}  // namespace cusplab

#endif
