#ifndef CUSPLAB_LOCUS_HPP
#define CUSPLAB_LOCUS_HPP

// Singular-locus solving for fibers of the miniversal family of the
// threefold cusp,
//
//   F_L : x^2 - y^3 - z^2 + w^3 + l + m y - n w + s y w ,
//
// in three modes: exact points of Q(eps), points carrying one symbolic scale
// parameter, and a complex-float fallback. The stored tuple (l, m, n, s)
// holds n as the coefficient that appears with a minus sign in the family;
// the deformation-space tuple is (l, m, -n, s).

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusplab/roots.hpp"
#include "cusplab/singularity.hpp"

namespace cusplab {

struct DeformationPoint {
    // polynomials over a shared parameter table; constants in the exact case
    Polynomial lambda, mu, nu, sigma;

    static DeformationPoint exact(const Cyclo& l, const Cyclo& m, const Cyclo& n,
                                  const Cyclo& s) {
        auto t = VarTable::make({"s"});
        return {Polynomial::constant(t, l), Polynomial::constant(t, m),
                Polynomial::constant(t, n), Polynomial::constant(t, s)};
    }

    bool is_exact() const {
        return lambda.is_constant() && mu.is_constant() && nu.is_constant() &&
               sigma.is_constant();
    }

    std::array<Cyclo, 4> exact_values() const {
        return {lambda.constant_value(), mu.constant_value(), nu.constant_value(),
                sigma.constant_value()};
    }

    // (l, m, -n, s): the tuple convention of the deformation space
    std::array<Polynomial, 4> space_tuple() const { return {lambda, mu, -nu, sigma}; }

    // the variable carrying a symbolic scale, if any
    std::optional<std::string> scale_variable() const {
        const auto& t = lambda.table();
        std::optional<std::string> found;
        for (std::size_t i = 0; i < t->size(); ++i) {
            const bool used = lambda.depends_on(i) || mu.depends_on(i) ||
                              nu.depends_on(i) || sigma.depends_on(i);
            if (!used) continue;
            if (found) throw Error("deformation point depends on several parameters");
            found = t->name(i);
        }
        return found;
    }

    friend bool operator==(const DeformationPoint& a, const DeformationPoint& b) {
        return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu && a.sigma == b.sigma;
    }
};

// The fiber polynomial F_L over germ table + parameter table of the point.
inline Polynomial fiber_polynomial(const DeformationPoint& L) {
    std::vector<std::string> names{"x", "y", "z", "w"};
    for (const auto& nm : L.lambda.table()->names())
        if (nm != "x" && nm != "y" && nm != "z" && nm != "w") names.push_back(nm);
    auto t = VarTable::make(names);
    const auto y = Polynomial::variable(t, "y"), w = Polynomial::variable(t, "w");
    return cusp_polynomial(t) + retable(L.lambda, t) + retable(L.mu, t) * y -
           retable(L.nu, t) * w + retable(L.sigma, t) * y * w;
}

enum class SolveMode { Exact, Numeric };

struct SingularPointRecord {
    bool numeric = false;
    std::array<Polynomial, 4> coords;                      // exact / symbolic mode
    std::array<std::complex<double>, 4> coords_numeric{};  // numeric mode
    int hessian_rank = 0;
    Polynomial corank_cubic;
    SingularityClass klass = SingularityClass::DegenerateOther;
    int multiplicity = 1;  // root multiplicity of the eliminated cubic
};

namespace detail {

constexpr double kResidualTol = 1e-9;
constexpr double kSeparationTol = 1e-6;
constexpr double kClusterTol = 1e-4;
constexpr double kRankTol = 1e-7;

inline SingularPointRecord make_exact_record(const DeformationPoint& L,
                                             const Polynomial& y_val,
                                             const Polynomial& w_val, int multiplicity) {
    const Polynomial family = fiber_polynomial(L);
    const auto& t = family.table();
    SingularPointRecord rec;
    rec.coords = {Polynomial::zero(L.lambda.table()), retable(y_val, L.lambda.table()),
                  Polynomial::zero(L.lambda.table()), retable(w_val, L.lambda.table())};
    rec.multiplicity = multiplicity;
    std::map<std::string, Polynomial> pt{
        {"x", Polynomial::zero(t)},
        {"y", retable(y_val, t)},
        {"z", Polynomial::zero(t)},
        {"w", retable(w_val, t)}};
    auto cls = classify_singularity(family, {"x", "y", "z", "w"}, pt);
    rec.hessian_rank = cls.hessian_rank;
    rec.corank_cubic = cls.corank_cubic;
    rec.klass = cls.klass;
    return rec;
}

// exact path, sigma = 0: the two quadratic conditions plus the linear one
inline std::vector<SingularPointRecord> exact_locus_sigma0(const DeformationPoint& L) {
    const auto [l, m, n, s] = L.exact_values();
    auto roots_of_square = [](const Cyclo& rhs,
                              const char* what) -> std::vector<Cyclo> {
        if (rhs.is_zero()) return {Cyclo(0)};
        const auto r = sqrt_in_field(rhs);
        if (!r) throw ExactFactorizationFailed(std::string(what) +
                                               " is not a square in Q(eps)");
        return {*r, -*r};
    };
    const auto ys = roots_of_square(m * Cyclo(Rational(1, 3)), "m/3");
    const auto ws = roots_of_square(n * Cyclo(Rational(1, 3)), "n/3");
    std::vector<SingularPointRecord> out;
    const auto ptab = L.lambda.table();
    for (const auto& y : ys)
        for (const auto& w : ws) {
            const Cyclo cond3 = Cyclo(2) * m * y - Cyclo(2) * n * w + Cyclo(3) * l;
            if (!cond3.is_zero()) continue;
            out.push_back(make_exact_record(L, Polynomial::constant(ptab, y),
                                            Polynomial::constant(ptab, w), 1));
        }
    return out;
}

inline std::vector<SingularPointRecord> exact_locus_concrete(const DeformationPoint& L) {
    const auto [l, m, n, s] = L.exact_values();
    if (s.is_zero()) return exact_locus_sigma0(L);

    // eliminate w = (3y^2 - m)/s; candidates are roots of the cubic
    // 3 s y^3 - 6 n y^2 + m s y + (2 m n + 3 l s)
    auto yt = VarTable::make({"y"});
    auto yv = Polynomial::variable(yt, "y");
    const Polynomial cubic = Polynomial::constant(yt, Cyclo(3) * s) * yv * yv * yv -
                             Polynomial::constant(yt, Cyclo(6) * n) * yv * yv +
                             Polynomial::constant(yt, m * s) * yv +
                             Polynomial::constant(yt, Cyclo(2) * m * n + Cyclo(3) * l * s);
    std::vector<SingularPointRecord> out;
    const auto ptab = L.lambda.table();
    for (const auto& [y, mult] : exact_roots(cubic, "y")) {
        const Cyclo w = (Cyclo(3) * y * y - m) / s;
        const Cyclo cond2 = Cyclo(3) * w * w + s * y - n;
        if (!cond2.is_zero()) continue;
        out.push_back(make_exact_record(L, Polynomial::constant(ptab, y),
                                        Polynomial::constant(ptab, w), mult));
    }
    return out;
}

// symbolic path: every coordinate is a polynomial in one scale parameter and
// the eliminated cubic factors through roots of the shape (q eps^k) * scale
inline std::vector<SingularPointRecord> exact_locus_symbolic(
    const DeformationPoint& L, const std::string& scale) {
    const auto ptab = L.lambda.table();
    if (L.sigma.is_zero())
        throw ExactFactorizationFailed("symbolic scale with sigma = 0 is unsupported");

    std::vector<std::string> names{"y"};
    for (const auto& nm : ptab->names()) names.push_back(nm);
    auto t = VarTable::make(names);
    const auto y = Polynomial::variable(t, "y");
    const Polynomial l = retable(L.lambda, t), m = retable(L.mu, t),
                     n = retable(L.nu, t), s = retable(L.sigma, t);
    const Cyclo three(3), six(6), two(2);
    const Polynomial cubic = Polynomial::constant(t, three) * s * y * y * y -
                             Polynomial::constant(t, six) * n * y * y + m * s * y +
                             two * m * n + three * l * s;

    std::vector<std::pair<Polynomial, int>> roots;  // (root in scale var, multiplicity)
    Polynomial rest = cubic;
    const Polynomial scale_poly = Polynomial::variable(t, scale);
    for (const Rational& q :
         {Rational(1, 3), Rational(-1, 3), Rational(1, 6), Rational(-1, 6),
          Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2)}) {
        for (int e = 0; e < 3; ++e) {
            const Polynomial cand =
                Polynomial::constant(t, Cyclo(q) * pow(Cyclo::eps(), e)) * scale_poly;
            int mult = 0;
            while (substitute(rest, {{"y", cand}}).is_zero()) {
                auto [quot, rem] = univariate_division(rest, y - cand, "y");
                if (!rem.is_zero()) break;
                rest = quot;
                ++mult;
            }
            if (mult > 0) roots.emplace_back(cand, mult);
        }
    }
    if (rest.degree_in(t->index("y")) > 0)
        throw ExactFactorizationFailed("symbolic cubic does not split over the "
                                       "structured candidate set");

    std::vector<SingularPointRecord> out;
    for (const auto& [yroot, mult] : roots) {
        // w = (3 y^2 - m) / s must divide exactly
        const Polynomial num = three * yroot * yroot - m;
        auto [wpoly, rem] = univariate_division(num, s, scale);
        if (!rem.is_zero()) continue;
        const Polynomial cond2 = three * wpoly * wpoly + s * yroot - n;
        if (!cond2.is_zero()) continue;
        out.push_back(make_exact_record(L, retable(yroot, ptab), retable(wpoly, ptab), mult));
    }
    return out;
}

}  // namespace detail

// Numeric singular locus for arbitrary complex parameters (l, m, n, s), the
// stored-sign convention. Residuals of the three defining conditions are
// accepted below 1e-9 after normalizing each condition to unit coefficient
// size; accepted points closer than 1e-6 raise ToleranceAmbiguity.
inline std::vector<SingularPointRecord> singular_locus_numeric(
    const std::array<std::complex<double>, 4>& L) {
    using C = std::complex<double>;
    const C l = L[0], m = L[1], n = L[2], s = L[3];

    struct Cand { C y, w; int mult; };
    std::vector<Cand> cands;
    if (std::abs(s) > 1e-12) {
        const std::vector<C> cubic{2.0 * m * n + 3.0 * l * s, m * s, -6.0 * n, 3.0 * s};
        for (const auto& r : numeric_roots_clustered(cubic, detail::kClusterTol))
            cands.push_back({r.value, (3.0 * r.value * r.value - m) / s, r.multiplicity});
    } else {
        std::vector<C> ys = std::abs(m) < 1e-12
                                ? std::vector<C>{0.0}
                                : std::vector<C>{std::sqrt(m / 3.0), -std::sqrt(m / 3.0)};
        std::vector<C> ws = std::abs(n) < 1e-12
                                ? std::vector<C>{0.0}
                                : std::vector<C>{std::sqrt(n / 3.0), -std::sqrt(n / 3.0)};
        for (const auto& y : ys)
            for (const auto& w : ws) cands.push_back({y, w, 1});
    }

    const double sc1 = std::max({1.0, std::abs(s), std::abs(m)});
    const double sc2 = std::max({1.0, std::abs(s), std::abs(n)});
    const double sc3 =
        std::max({1.0, std::abs(s), 2 * std::abs(m), 2 * std::abs(n), 3 * std::abs(l)});

    std::vector<SingularPointRecord> out;
    for (const auto& c : cands) {
        const C c1 = 3.0 * c.y * c.y - s * c.w - m;
        const C c2 = 3.0 * c.w * c.w + s * c.y - n;
        const C c3 = s * c.y * c.w + 2.0 * m * c.y - 2.0 * n * c.w + 3.0 * l;
        if (std::abs(c1) / sc1 > detail::kResidualTol ||
            std::abs(c2) / sc2 > detail::kResidualTol ||
            std::abs(c3) / sc3 > detail::kResidualTol)
            continue;
        SingularPointRecord rec;
        rec.numeric = true;
        rec.coords_numeric = {C(0), c.y, C(0), c.w};
        rec.multiplicity = c.mult;
        // Hessian of the fiber at (0, y, 0, w): x and z contribute full rank;
        // the (y, w) block is [[-6y, s], [s, 6w]].
        const C det2 = -36.0 * c.y * c.w - s * s;
        const double block_norm =
            std::max({6 * std::abs(c.y), 6 * std::abs(c.w), std::abs(s)});
        const double block_scale = std::max(1.0, block_norm);
        if (std::abs(det2) > detail::kRankTol * block_scale * block_scale) {
            rec.hessian_rank = 4;
            rec.klass = SingularityClass::Node;
        } else if (block_norm > detail::kRankTol) {
            rec.hessian_rank = 3;
            // kernel of the rank-1 block; cubic part is -y^3 + w^3
            C ky = s, kw = 6.0 * c.y;
            if (std::max(std::abs(ky), std::abs(kw)) < detail::kRankTol) {
                ky = 1.0;  // first row vanished; the kernel is the y-axis
                kw = 0.0;
            }
            const double kn = std::max(std::abs(ky), std::abs(kw));
            ky /= kn;
            kw /= kn;
            const C cub = -ky * ky * ky + kw * kw * kw;
            rec.klass = std::abs(cub) > detail::kRankTol
                            ? SingularityClass::I1xII
                            : SingularityClass::DegenerateOther;
        } else {
            rec.hessian_rank = 2;
            rec.klass = SingularityClass::IIxII;  // pure cubes -y^3, +w^3
        }
        out.push_back(rec);
    }

    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = i + 1; j < out.size(); ++j) {
            const double d =
                std::abs(out[i].coords_numeric[1] - out[j].coords_numeric[1]) +
                std::abs(out[i].coords_numeric[3] - out[j].coords_numeric[3]);
            if (d < detail::kSeparationTol) throw ToleranceAmbiguity();
        }
    return out;
}

// Singular points of the fiber of F_L, each record verified to satisfy the
// fiber equation and all four partials. At most three records are possible.
inline std::vector<SingularPointRecord> singular_locus(const DeformationPoint& L,
                                                       SolveMode mode) {
    if (mode == SolveMode::Numeric) {
        const auto vals = L.is_exact()
                              ? L.exact_values()
                              : throw Error("numeric mode needs concrete parameters; "
                                            "substitute the scale first");
        return singular_locus_numeric(
            {embed(vals[0]), embed(vals[1]), embed(vals[2]), embed(vals[3])});
    }
    if (L.is_exact()) return detail::exact_locus_concrete(L);
    const auto scale = L.scale_variable();
    return detail::exact_locus_symbolic(L, *scale);
}

// -----------------------------------------------------------------------
// Singular locus of the fiber product {X^2 - Y^3 - B(t) = 0, U^2 - V^3 -
// B(t) = 0}: the points (0,0,0,0,t0) over the roots t0 of B, each carrying
// the vanishing order of B (the least i with nonzero i-th derivative).

struct FiberProductPoint {
    bool exact = true;
    Cyclo t_exact;
    std::complex<double> t_numeric{};
    int vanishing_order = 1;
};

inline std::vector<FiberProductPoint> fiber_product_singular_locus(
    const Polynomial& B, const std::string& var) {
    if (B.is_zero()) throw Error("B must not vanish identically");
    const auto v = B.table()->index(var);
    for (std::size_t i = 0; i < B.table()->size(); ++i)
        if (i != v && B.depends_on(i)) throw Error("B must be univariate in " + var);
    if (B.degree_in(v) > 6) throw Error("B must have degree at most 6");
    if (B.min_exponent(v) < 0) throw Error("B must be an honest polynomial");

    std::vector<FiberProductPoint> out;
    try {
        for (const auto& [root, mult] : exact_roots(B, var)) {
            FiberProductPoint p;
            p.exact = true;
            p.t_exact = root;
            p.t_numeric = embed(root);
            p.vanishing_order = mult;
            // vanishing order check against the derivatives of B
            Polynomial d = B;
            for (int i = 0; i < mult; ++i) {
                if (!evaluate(d, {{var, root}}).is_zero())
                    throw SymbolicMismatch("vanishing order of a fiber-product point");
                d = derivative(d, var);
            }
            if (evaluate(d, {{var, root}}).is_zero())
                throw SymbolicMismatch("vanishing order of a fiber-product point");
            out.push_back(p);
        }
        return out;
    } catch (const ExactFactorizationFailed&) {
        // numeric fallback
    }
    std::vector<std::complex<double>> coeffs(B.degree_in(v) + 1, 0.0);
    for (const auto& [mon, c] : B.terms()) coeffs[mon.e[v]] = embed(c);
    for (const auto& r : numeric_roots_clustered(coeffs)) {
        FiberProductPoint p;
        p.exact = false;
        p.t_numeric = r.value;
        p.vanishing_order = r.multiplicity;
        out.push_back(p);
    }
    return out;
}

}  // namespace cusplab

#endif
