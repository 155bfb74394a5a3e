#ifndef CUSPLAB_TESTS_SUPPORT_HPP
#define CUSPLAB_TESTS_SUPPORT_HPP

// Shared helpers for the test suite: seeded generators for small exact
// values, and an independent numeric oracle for the singular-locus solver
// (companion matrix built by hand, residuals checked on the raw conditions).

#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "cusplab/cyclo.hpp"
#include "cusplab/poly.hpp"

namespace testsupport {

using cusplab::Cyclo;
using cusplab::Rational;

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational rand_rational(std::mt19937_64& rng, int num = 6, int den = 3) {
    return Rational(rand_int(rng, -num, num), rand_int(rng, 1, den));
}

inline Cyclo rand_cyclo(std::mt19937_64& rng) {
    Cyclo c(rand_rational(rng));
    if (rng() % 2) c.ep = rand_rational(rng);
    return c;
}

inline Cyclo rand_nonzero_cyclo(std::mt19937_64& rng) {
    for (;;) {
        Cyclo c = rand_cyclo(rng);
        if (!c.is_zero()) return c;
    }
}

inline cusplab::Polynomial rand_polynomial(std::mt19937_64& rng,
                                           const cusplab::VarTablePtr& table,
                                           int max_terms = 4, int max_exp = 3) {
    cusplab::Polynomial p(table);
    const int terms = rand_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        cusplab::Monomial m(table->size());
        for (std::size_t i = 0; i < table->size(); ++i)
            m.e[i] = rand_int(rng, 0, max_exp);
        p.add_term(m, rand_cyclo(rng));
    }
    return p;
}

// Independent oracle: singular points of the fiber over (l, m, n, s) in the
// stored-sign convention, solved with a hand-built companion matrix and
// residual checks on the three raw conditions. No library solver involved.
inline std::vector<std::pair<std::complex<double>, std::complex<double>>>
oracle_singular_points(std::complex<double> l, std::complex<double> m,
                       std::complex<double> n, std::complex<double> s) {
    using C = std::complex<double>;
    std::vector<std::pair<C, C>> candidates;
    if (std::abs(s) > 1e-12) {
        // 3 s y^3 - 6 n y^2 + m s y + (2 m n + 3 l s) = 0
        const C c3 = 3.0 * s, c2 = -6.0 * n, c1 = m * s, c0 = 2.0 * m * n + 3.0 * l * s;
        Eigen::Matrix3cd comp = Eigen::Matrix3cd::Zero();
        comp(0, 2) = -c0 / c3;
        comp(1, 2) = -c1 / c3;
        comp(2, 2) = -c2 / c3;
        comp(1, 0) = 1.0;
        comp(2, 1) = 1.0;
        Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(comp, false);
        for (int i = 0; i < 3; ++i) {
            const C y = solver.eigenvalues()(i);
            candidates.emplace_back(y, (3.0 * y * y - m) / s);
        }
    } else {
        std::vector<C> ys{std::sqrt(m / 3.0), -std::sqrt(m / 3.0)};
        std::vector<C> ws{std::sqrt(n / 3.0), -std::sqrt(n / 3.0)};
        for (const auto& y : ys)
            for (const auto& w : ws) candidates.emplace_back(y, w);
    }
    std::vector<std::pair<C, C>> out;
    const double scale = std::max({1.0, std::abs(l), std::abs(m), std::abs(n), std::abs(s)});
    for (auto [y, w] : candidates) {
        // one Newton step on the y-cubic sharpens eigenvalue roots
        if (std::abs(s) > 1e-12) {
            const C f = 3.0 * s * y * y * y - 6.0 * n * y * y + m * s * y +
                        (2.0 * m * n + 3.0 * l * s);
            const C df = 9.0 * s * y * y - 12.0 * n * y + m * s;
            if (std::abs(df) > 1e-12) y -= f / df;
            w = (3.0 * y * y - m) / s;
        }
        const C r1 = 3.0 * y * y - s * w - m;
        const C r2 = 3.0 * w * w + s * y - n;
        const C r3 = s * y * w + 2.0 * m * y - 2.0 * n * w + 3.0 * l;
        if (std::abs(r1) > 1e-9 * scale || std::abs(r2) > 1e-9 * scale ||
            std::abs(r3) > 1e-9 * scale)
            continue;
        bool dup = false;
        for (const auto& [py, pw] : out)
            if (std::abs(py - y) + std::abs(pw - w) < 1e-6) dup = true;
        if (!dup) out.emplace_back(y, w);
    }
    return out;
}

}  // namespace testsupport

#endif
