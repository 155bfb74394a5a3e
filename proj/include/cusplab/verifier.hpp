#ifndef CUSPLAB_VERIFIER_HPP
#define CUSPLAB_VERIFIER_HPP

// Mechanized derivations around the deformation space of the threefold cusp:
// the induced image hyperplane S = {s = 0}, the three-node locus and the
// curve C = {s^3 - 27 l = m = n = 0}, the factored family F_a with its three
// singular points and the composite map g, and the dimension bookkeeping of
// the localization diagram. Every identity is an exact term-map equality;
// any failure raises SymbolicMismatch and signals an implementation bug.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cusplab/locus.hpp"
#include "cusplab/singularity.hpp"

namespace cusplab {

namespace detail {

// c with a == c * b for a nonzero constant c, if any.
inline std::optional<Cyclo> constant_ratio(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [mono, cb] = *b.terms().begin();
    const Cyclo ca = a.coefficient(mono);
    if (ca.is_zero()) return std::nullopt;
    const Cyclo c = ca * inverse(cb);
    if (a == Polynomial::constant(a.table(), c) * b) return c;
    return std::nullopt;
}

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw SymbolicMismatch(what);
}

}  // namespace detail

// -----------------------------------------------------------------------
// Loci inside the deformation space, in the stored coordinates (l, m, n, s).

struct LocusDescription {
    struct Parametrization {
        std::string name;
        DeformationPoint point;
    };
    std::vector<Polynomial> equations;  // over a table containing l, m, n, s
    std::vector<Parametrization> parametrizations;

    // every parametrization must kill every equation identically
    void verify() const {
        for (const auto& pz : parametrizations) {
            for (const auto& eq : equations) {
                std::map<std::string, Polynomial> sub{{"l", pz.point.lambda},
                                                      {"m", pz.point.mu},
                                                      {"n", pz.point.nu},
                                                      {"s", pz.point.sigma}};
                detail::expect(substitute(eq, sub).is_zero(),
                               "parametrization " + pz.name + " does not satisfy " +
                                   to_string(eq));
            }
        }
    }
};

inline VarTablePtr deformation_space_table() {
    return VarTable::make({"l", "m", "n", "s"});
}

// -----------------------------------------------------------------------
// The hyperplane S: deformations induced by deforming the two elliptic
// factors independently. Their difference is
//   (x^2 - y^3 + l1 + m y) - (z^2 - w^3 + l2 + n w),
// which lands on (l1 - l2, m, -n, 0) in the deformation space.

inline DeformationPoint induced_deformation(const Cyclo& l1, const Cyclo& m,
                                            const Cyclo& l2, const Cyclo& n) {
    return DeformationPoint::exact(l1 - l2, m, n, Cyclo(0));
}

inline LocusDescription induced_image_S() {
    auto t = VarTable::make({"x", "y", "z", "w", "l1", "m", "l2", "n"});
    auto v = [&](const char* nm) { return Polynomial::variable(t, nm); };
    const Polynomial first = v("x") * v("x") - pow(v("y"), 3) + v("l1") + v("m") * v("y");
    const Polynomial second = v("z") * v("z") - pow(v("w"), 3) + v("l2") + v("n") * v("w");
    const Polynomial glued = first - second;

    // rewrite against F + l + m y - n w + s y w
    const Polynomial expected = cusp_polynomial(t) + (v("l1") - v("l2")) +
                                v("m") * v("y") - v("n") * v("w");
    detail::expect(glued == expected, "product-induced deformation shape");

    // the y*w coefficient vanishes identically: the image sits inside s = 0
    Monomial yw(t->size());
    yw.e[t->index("y")] = 1;
    yw.e[t->index("w")] = 1;
    detail::expect((glued - cusp_polynomial(t)).coefficient(yw).is_zero(),
                   "sigma coordinate of the induced image");

    LocusDescription S;
    auto dt = deformation_space_table();
    S.equations.push_back(Polynomial::variable(dt, "s"));
    return S;
}

// -----------------------------------------------------------------------
// The three-node locus: elimination, division remainder, the four solution
// families, and the curve C.

struct ThreeNodeLocus {
    Polynomial r1, r2;                   // eliminated conditions, over (y,w,l,m,n,s)
    Polynomial quotient, remainder;      // division of r1 by r2 in y
    std::vector<Polynomial> conditions3; // cleared of s-powers, over (l,m,n,s)
    std::vector<DeformationPoint> solutions;  // the four families over {"s"}
    Polynomial lambda1_cubic;            // 3 s (y - s/6)^3
    Polynomial lambda0_cubic;            // 3 s (y + s/3)(y + eps s/3)(y + eps^2 s/3)
    LocusDescription curve_C;
};

inline ThreeNodeLocus three_node_locus() {
    const Cyclo eps = Cyclo::eps();
    auto t = VarTable::make({"y", "w", "l", "m", "n", "s"}, {"s"});
    auto v = [&](const char* nm) { return Polynomial::variable(t, nm); };
    auto c = [&](const Rational& q) { return Polynomial::constant(t, Cyclo(q)); };
    const Polynomial y = v("y"), w = v("w"), l = v("l"), m = v("m"), n = v("n"),
                     s = v("s");

    // the defining conditions of the singular locus over x = z = 0
    const Polynomial cond1 = c(3) * y * y - s * w - m;
    const Polynomial cond2 = c(3) * w * w + s * y - n;
    const Polynomial cond3 = s * y * w + c(2) * m * y - c(2) * n * w + c(3) * l;

    ThreeNodeLocus out;

    // eliminate w = (3 y^2 - m)/s and clear the s-denominators
    const Polynomial w_elim = (c(3) * y * y - m) * Polynomial::variable(t, "s", -1);
    detail::expect(substitute(cond1, {{"w", w_elim}}).is_zero(),
                   "w-elimination solves the first condition");
    out.r1 = strip_power(substitute(cond2, {{"w", w_elim}}), t->index("s"));
    out.r2 = strip_power(substitute(cond3, {{"w", w_elim}}), t->index("s"));

    const Polynomial r1_displayed =
        c(27) * pow(y, 4) - c(18) * m * y * y + pow(s, 3) * y + c(3) * m * m - n * s * s;
    const Polynomial r2_displayed =
        c(3) * s * pow(y, 3) - c(6) * n * y * y + m * s * y + c(2) * m * n + c(3) * l * s;
    detail::expect(out.r1 == r1_displayed, "eliminated condition R1");
    detail::expect(out.r2 == r2_displayed, "eliminated condition R2");

    // remainder of R1 by R2 in y
    auto division = univariate_division(out.r1, out.r2, "y");
    out.quotient = division.quotient;
    out.remainder = division.remainder;
    detail::expect(out.quotient * out.r2 + out.remainder == out.r1,
                   "division contract for R1 = q R2 + r");

    const Polynomial s_inv = Polynomial::variable(t, "s", -1);
    const Polynomial rem_displayed =
        c(27) * s_inv * s_inv * (c(4) * n * n - m * s * s) * y * y +
        s_inv * (pow(s, 4) - c(36) * m * n - c(27) * l * s) * y +
        s_inv * s_inv *
            (c(3) * m * m * s * s - n * pow(s, 4) - c(36) * m * n * n -
             c(54) * l * n * s);
    detail::expect(out.remainder == rem_displayed, "displayed remainder of R1 / R2");

    // the remainder coefficients, cleared of s-powers, are the displayed
    // conditions up to constant units
    const std::vector<Polynomial> displayed_conditions{
        c(4) * n * n - m * s * s,
        pow(s, 4) - c(36) * m * n - c(27) * l * s,
        c(3) * m * m * s * s - n * pow(s, 4) - c(36) * m * n * n - c(54) * l * n * s};
    for (int k = 2; k >= 0; --k) {
        const Polynomial cleared =
            strip_power(coefficient_in(out.remainder, t->index("y"), k), t->index("s"));
        const auto ratio = detail::constant_ratio(cleared, displayed_conditions[2 - k]);
        detail::expect(ratio.has_value(),
                       "remainder coefficient of y^" + std::to_string(k));
    }
    auto dt = deformation_space_table();
    for (const auto& cond : displayed_conditions)
        out.conditions3.push_back(retable(cond, dt));

    // solving the conditions: m = 4 n^2 / s^2, l = s^3/27 - 16 n^3 / (3 s^3),
    // and n ranges over the roots of n (4n - s^2)(4n - eps s^2)(4n - eps^2 s^2)
    const Polynomial m_sub = c(4) * n * n * s_inv * s_inv;
    const Polynomial l_sub =
        c(Rational(1, 27)) * pow(s, 3) - c(Rational(16, 3)) * pow(n, 3) * pow(s_inv, 3);
    {
        const Polynomial second = substitute(displayed_conditions[1], {{"m", m_sub}});
        detail::expect(substitute(second, {{"l", l_sub}}).is_zero(),
                       "lambda elimination in the second condition");
        const Polynomial third = substitute(
            substitute(displayed_conditions[2], {{"m", m_sub}}), {{"l", l_sub}});
        const Polynomial eps1 = Polynomial::constant(t, eps);
        const Polynomial eps2 = Polynomial::constant(t, eps * eps);
        const Polynomial factored =
            c(3) * s_inv * s_inv * n * (c(4) * n - s * s) * (c(4) * n - eps1 * s * s) *
            (c(4) * n - eps2 * s * s);
        detail::expect(third == factored, "factorization of the third condition");
    }

    // the four families
    auto st = VarTable::make({"s"});
    const Polynomial ss = Polynomial::variable(st, "s");
    auto sc = [&](const Cyclo& q) { return Polynomial::constant(st, q); };
    auto family_from_n = [&](const Cyclo& n_coef) {
        // n = n_coef s^2, m = 4 n^2/s^2, l = s^3/27 - 16 n^3/(3 s^3)
        const Polynomial nn = sc(n_coef) * ss * ss;
        const Polynomial mm = sc(Cyclo(4) * n_coef * n_coef) * ss * ss;
        const Polynomial ll =
            sc(Cyclo(Rational(1, 27)) - Cyclo(Rational(16, 3)) * pow(n_coef, 3)) * pow(ss, 3);
        return DeformationPoint{ll, mm, nn, ss};
    };
    out.solutions = {family_from_n(Cyclo(0)), family_from_n(Cyclo(Rational(1, 4))),
                     family_from_n(Cyclo(Rational(1, 4)) * eps),
                     family_from_n(Cyclo(Rational(1, 4)) * eps * eps)};

    // displayed forms: L0 = (s^3/27, 0, 0, s), L1 = (-5s^3/108, s^2/4, s^2/4, s),
    // L2 = (-5s^3/108, eps^2 s^2/4, eps s^2/4, s), L3 with eps and eps^2 swapped
    {
        const Cyclo q14(Rational(1, 4));
        const std::array<std::array<Cyclo, 3>, 4> displayed{{
            {Cyclo(Rational(1, 27)), Cyclo(0), Cyclo(0)},
            {Cyclo(Rational(-5, 108)), q14, q14},
            {Cyclo(Rational(-5, 108)), q14 * eps * eps, q14 * eps},
            {Cyclo(Rational(-5, 108)), q14 * eps, q14 * eps * eps},
        }};
        for (std::size_t i = 0; i < 4; ++i) {
            detail::expect(out.solutions[i].lambda == sc(displayed[i][0]) * pow(ss, 3),
                           "lambda of solution " + std::to_string(i));
            detail::expect(out.solutions[i].mu == sc(displayed[i][1]) * ss * ss,
                           "mu of solution " + std::to_string(i));
            detail::expect(out.solutions[i].nu == sc(displayed[i][2]) * ss * ss,
                           "nu of solution " + std::to_string(i));
            detail::expect(out.solutions[i].sigma == ss,
                           "sigma of solution " + std::to_string(i));
        }
        // each family satisfies the three conditions identically
        for (const auto& sol : out.solutions) {
            for (const auto& cond : out.conditions3) {
                std::map<std::string, Polynomial> sub{{"l", sol.lambda},
                                                      {"m", sol.mu},
                                                      {"n", sol.nu},
                                                      {"s", sol.sigma}};
                detail::expect(substitute(cond, sub).is_zero(),
                               "solution family satisfies the cleared conditions");
            }
        }
    }

    // cubic collapse at L1 and the split at L0, over (y, s)
    auto yt = VarTable::make({"y", "s"});
    const Polynomial yy = Polynomial::variable(yt, "y"), sy = Polynomial::variable(yt, "s");
    auto yc = [&](const Cyclo& q) { return Polynomial::constant(yt, q); };
    auto cubic_at = [&](const DeformationPoint& L) {
        return substitute(out.r2, {{"l", retable(L.lambda, yt)},
                                   {"m", retable(L.mu, yt)},
                                   {"n", retable(L.nu, yt)},
                                   {"s", retable(L.sigma, yt)},
                                   {"y", yy},
                                   {"w", Polynomial::zero(yt)}});
    };
    out.lambda1_cubic = cubic_at(out.solutions[1]);
    detail::expect(out.lambda1_cubic ==
                       yc(Cyclo(3)) * sy *
                           pow(yy - yc(Cyclo(Rational(1, 6))) * sy, 3),
                   "cubic of L1 equals 3 s (y - s/6)^3");
    out.lambda0_cubic = cubic_at(out.solutions[0]);
    const Polynomial third3 = yc(Cyclo(Rational(1, 3))) * sy;
    detail::expect(out.lambda0_cubic ==
                       yc(Cyclo(3)) * sy * (yy + third3) *
                           (yy + yc(eps * Cyclo(Rational(1, 3))) * sy) *
                           (yy + yc(eps * eps * Cyclo(Rational(1, 3))) * sy),
                   "cubic of L0 splits into the three displayed linear factors");
    detail::expect(out.lambda0_cubic ==
                       yc(Cyclo(3)) * sy *
                           (pow(yy, 3) + yc(Cyclo(Rational(1, 27))) * pow(sy, 3)),
                   "cubic of L0 equals 3 s (y^3 + s^3/27)");

    // L2 and L3 reduce to L1 under y -> eps y, w -> eps^2 w (and the square)
    {
        auto twist_family = [&](const DeformationPoint& L, const Cyclo& ty, const Cyclo& tw) {
            const Polynomial f = fiber_polynomial(L);
            const auto ft = f.table();
            return substitute(
                f, {{"y", Polynomial::constant(ft, ty) * Polynomial::variable(ft, "y")},
                    {"w", Polynomial::constant(ft, tw) * Polynomial::variable(ft, "w")}});
        };
        const Polynomial f1 = fiber_polynomial(out.solutions[1]);
        detail::expect(twist_family(out.solutions[2], eps, eps * eps) == f1,
                       "L2 reduces to L1 under (y, w) -> (eps y, eps^2 w)");
        detail::expect(twist_family(out.solutions[3], eps * eps, eps) == f1,
                       "L3 reduces to L1 under (y, w) -> (eps^2 y, eps w)");
        auto twist_cubic = [&](const DeformationPoint& L, const Cyclo& ty) {
            return substitute(cubic_at(L),
                              {{"y", Polynomial::constant(yt, ty) * yy}});
        };
        detail::expect(twist_cubic(out.solutions[2], eps) == out.lambda1_cubic,
                       "cubic of L2 matches L1 after y -> eps y");
        detail::expect(twist_cubic(out.solutions[3], eps * eps) == out.lambda1_cubic,
                       "cubic of L3 matches L1 after y -> eps^2 y");
    }

    // the curve C = { s^3 - 27 l = m = n = 0 }, parameterized by L0
    {
        auto dtv = [&](const char* nm) { return Polynomial::variable(dt, nm); };
        out.curve_C.equations = {pow(dtv("s"), 3) - Polynomial::constant(dt, Cyclo(27)) * dtv("l"),
                                 dtv("m"), dtv("n")};
        out.curve_C.parametrizations.push_back({"L0", out.solutions[0]});
        out.curve_C.verify();
        // meeting S: setting s = 0 forces l = m = n = 0
        std::map<std::string, Polynomial> kill_s{{"s", Polynomial::zero(dt)}};
        std::vector<Polynomial> at_s0;
        for (const auto& eq : out.curve_C.equations) {
            Polynomial r = substitute(eq, kill_s);
            if (!r.is_zero()) at_s0.push_back(r);
        }
        for (const char* nm : {"l", "m", "n"}) {
            bool pinned = false;
            for (const auto& r : at_s0)
                if (detail::constant_ratio(r, dtv(nm))) pinned = true;
            detail::expect(pinned, std::string("C meets {s=0} only at the origin (") +
                                        nm + " unpinned)");
        }
    }

    return out;
}

// Tangent of the L0 parametrization at s = 0 and its position against S.
struct TransversalityReport {
    std::array<Cyclo, 4> tangent;   // in stored coordinates
    Cyclo s_equation_at_tangent;
    bool transversal;
};

inline TransversalityReport curve_C_transversality() {
    const auto locus = three_node_locus();
    const auto& L0 = locus.solutions[0];
    auto d_at_0 = [](const Polynomial& p) {
        return evaluate(derivative(p, "s"), {{"s", Cyclo(0)}});
    };
    TransversalityReport rep;
    rep.tangent = {d_at_0(L0.lambda), d_at_0(L0.mu), d_at_0(L0.nu), d_at_0(L0.sigma)};
    detail::expect(rep.tangent[0].is_zero() && rep.tangent[1].is_zero() &&
                       rep.tangent[2].is_zero() && rep.tangent[3] == Cyclo(1),
                   "tangent of L0 at the origin is (0,0,0,1)");
    rep.s_equation_at_tangent = rep.tangent[3];  // S is cut by the s-coordinate
    rep.transversal = !rep.s_equation_at_tangent.is_zero();
    return rep;
}

// -----------------------------------------------------------------------
// The factored family F_a and the map g.

struct FaParameters {
    std::optional<Cyclo> alpha, beta, gamma;  // nullopt: stay symbolic
    std::optional<Cyclo> xi, upsilon;         // removed by the translation
    Cyclo k{1};

    bool concrete() const { return alpha && beta && gamma; }
};

inline VarTablePtr fa_table() {
    return VarTable::make({"X", "Y", "U", "V", "alpha", "beta", "gamma"});
}

// The displayed expansion F - (a+b+c) Y^2 - (a+e^2 b+e c) V^2 - ... over fa_table.
inline Polynomial fa_displayed(const VarTablePtr& t) {
    const Cyclo e = Cyclo::eps(), e2 = Cyclo::eps() * Cyclo::eps();
    auto v = [&](const char* nm) { return Polynomial::variable(t, nm); };
    auto C = [&](const Cyclo& q) { return Polynomial::constant(t, q); };
    const Polynomial X = v("X"), Y = v("Y"), U = v("U"), V = v("V"), a = v("alpha"),
                     b = v("beta"), g = v("gamma");
    const Polynomial F = X * X - U * U - pow(Y, 3) + pow(V, 3);
    return F - (a + b + g) * Y * Y - (a + C(e2) * b + C(e) * g) * V * V -
           (a + C(e) * b + C(e2) * g) * Y * V - (a * g + a * b + b * g) * Y +
           (b * g + C(e) * a * g + C(e2) * a * b) * V - a * b * g;
}

// Expands the factored deformation, applies the translation killing xi and
// upsilon, checks the displayed expansion, and substitutes any concrete
// parameter values.
inline Polynomial fa_family(const FaParameters& p) {
    const Cyclo e = Cyclo::eps(), e2 = Cyclo::eps() * Cyclo::eps();
    auto big = VarTable::make({"X", "Y", "U", "V", "alpha", "beta", "gamma", "xi", "ups"});
    auto v = [&](const char* nm) { return Polynomial::variable(big, nm); };
    auto C = [&](const Cyclo& q) { return Polynomial::constant(big, q); };
    const Polynomial lhs = (v("X") - v("U") + v("xi")) * (v("X") + v("U") + v("ups"));
    const Polynomial rhs = (v("Y") - v("V") + v("alpha")) *
                           (v("Y") - C(e) * v("V") + v("beta")) *
                           (v("Y") - C(e2) * v("V") + v("gamma"));
    Polynomial G = lhs - rhs;

    const Cyclo half(Rational(1, 2));
    G = substitute(G, {{"X", v("X") - C(half) * (v("xi") + v("ups"))},
                       {"U", v("U") + C(half) * (v("xi") - v("ups"))}});
    detail::expect(!G.depends_on(big->index("xi")) && !G.depends_on(big->index("ups")),
                   "translation removes xi and upsilon");

    auto t = fa_table();
    Polynomial fa = retable(G, t);
    detail::expect(fa == fa_displayed(t), "expansion of the factored family");

    std::map<std::string, Polynomial> concrete;
    if (p.alpha) concrete.emplace("alpha", Polynomial::constant(t, *p.alpha));
    if (p.beta) concrete.emplace("beta", Polynomial::constant(t, *p.beta));
    if (p.gamma) concrete.emplace("gamma", Polynomial::constant(t, *p.gamma));
    if (!concrete.empty()) fa = substitute(fa, concrete);
    return fa;
}

// s = alpha + eps beta + eps^2 gamma; the plane pi is {s = 0}
inline Cyclo fa_plane_value(const Cyclo& a, const Cyclo& b, const Cyclo& g) {
    const Cyclo e = Cyclo::eps();
    return a + e * b + e * e * g;
}

struct FaPoint {
    Polynomial Y, V;  // over (alpha, beta, gamma); constants when concrete
    std::optional<Classification> cls;
};

struct FaSingularPoints {
    bool symbolic = true;
    bool coincident = false;  // concrete mode with s = 0
    std::vector<FaPoint> points;
};

inline FaSingularPoints fa_singular_points(const FaParameters& p) {
    const Cyclo e = Cyclo::eps(), e2 = Cyclo::eps() * Cyclo::eps();
    auto pt = VarTable::make({"alpha", "beta", "gamma"});
    auto v = [&](const char* nm) { return Polynomial::variable(pt, nm); };
    auto C = [&](const Cyclo& q) { return Polynomial::constant(pt, q); };
    const Polynomial a = v("alpha"), b = v("beta"), g = v("gamma");

    const Cyclo inv_1me = inverse(Cyclo(1) - e);          // 1/(1-eps)
    const Cyclo inv_e1me = inverse(e * (Cyclo(1) - e));   // 1/(eps (1-eps))
    const Cyclo inv_1me2 = inverse(Cyclo(1) - e2);        // 1/(1-eps^2)

    // the displayed closed forms of the three singular points (0, Y, 0, V)
    std::array<std::pair<Polynomial, Polynomial>, 3> closed{{
        {C(inv_1me) * (C(e) * b - g), C(inv_e1me) * (b - g)},
        {C(inv_1me2) * (C(e2) * a - g), C(inv_1me2) * (a - g)},
        {C(inv_1me) * (C(e) * a - b), C(inv_1me) * (a - b)},
    }};

    // verify each kills the restricted system F_a(0,Y,0,V) and its Y-, V-partials
    {
        auto t = fa_table();
        const Polynomial fa = fa_family(FaParameters{});
        std::map<std::string, Polynomial> on_axis{{"X", Polynomial::zero(t)},
                                                  {"U", Polynomial::zero(t)}};
        const Polynomial restricted = substitute(fa, on_axis);
        const std::array<Polynomial, 3> system{restricted, derivative(restricted, "Y"),
                                               derivative(restricted, "V")};
        for (const auto& [Yc, Vc] : closed) {
            for (const auto& eq : system) {
                const Polynomial val = substitute(
                    eq, {{"Y", retable(Yc, pt)}, {"V", retable(Vc, pt)},
                         {"X", Polynomial::zero(pt)}, {"U", Polynomial::zero(pt)}});
                detail::expect(val.is_zero(), "closed-form point solves the system");
            }
        }
        // pairwise differences are nonzero constant multiples of
        // s = alpha + eps beta + eps^2 gamma: distinct exactly off the plane pi
        const Polynomial s_poly = a + C(e) * b + C(e2) * g;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i + 1; j < 3; ++j) {
                detail::expect(
                    detail::constant_ratio(closed[i].first - closed[j].first, s_poly)
                        .has_value(),
                    "Y-coordinate difference proportional to the plane form");
                detail::expect(
                    detail::constant_ratio(closed[i].second - closed[j].second, s_poly)
                        .has_value(),
                    "V-coordinate difference proportional to the plane form");
            }
    }

    FaSingularPoints out;
    if (!p.concrete()) {
        out.symbolic = true;
        for (const auto& [Yc, Vc] : closed) out.points.push_back({Yc, Vc, std::nullopt});
        return out;
    }

    out.symbolic = false;
    const Cyclo s_val = fa_plane_value(*p.alpha, *p.beta, *p.gamma);
    const Polynomial fa = fa_family(p);  // over fa_table with parameters substituted
    auto germ_table = fa.table();
    std::map<std::string, Polynomial> vals{{"alpha", Polynomial::constant(pt, *p.alpha)},
                                           {"beta", Polynomial::constant(pt, *p.beta)},
                                           {"gamma", Polynomial::constant(pt, *p.gamma)}};
    auto value_of = [&](const Polynomial& q) {
        return substitute(q, vals).constant_value();
    };
    std::vector<std::pair<Cyclo, Cyclo>> pts;
    for (const auto& [Yc, Vc] : closed)
        pts.emplace_back(value_of(Yc), value_of(Vc));

    out.coincident = s_val.is_zero();
    const std::size_t how_many = out.coincident ? 1 : 3;
    for (std::size_t i = 0; i < how_many; ++i) {
        std::map<std::string, Cyclo> point{
            {"X", Cyclo(0)}, {"Y", pts[i].first}, {"U", Cyclo(0)}, {"V", pts[i].second}};
        auto cls = classify_singularity(fa, {"X", "Y", "U", "V"}, point);
        out.points.push_back({Polynomial::constant(pt, pts[i].first),
                              Polynomial::constant(pt, pts[i].second), cls});
    }
    if (out.coincident) {
        detail::expect(pts[0] == pts[1] && pts[1] == pts[2],
                       "coincident points on the plane pi");
        detail::expect(out.points[0].cls->klass == SingularityClass::IIxII,
                       "the coincident point is still a threefold cusp shape");
    } else {
        detail::expect(pts[0] != pts[1] && pts[1] != pts[2] && pts[0] != pts[2],
                       "three distinct singular points off the plane pi");
    }
    return out;
}

// The composite g = i . p: p is the rank-1 matrix k [[1,e,e^2],[e^2,1,e],
// [e,e^2,1]], i reads the family coefficients off the factored deformation.
// Symbolically the image is (-k^3 s^3, 0, 0, -3 k s) and lies on C.
struct MapG {
    DeformationPoint symbolic;  // over (alpha, beta, gamma, k)
    std::optional<DeformationPoint> value;  // concrete parameters, if given
};

inline MapG map_g(const FaParameters& p) {
    if (p.concrete() && p.k.is_zero()) throw ZeroScale();
    const Cyclo e = Cyclo::eps(), e2 = Cyclo::eps() * Cyclo::eps();
    auto t = VarTable::make({"alpha", "beta", "gamma", "k"});
    auto v = [&](const char* nm) { return Polynomial::variable(t, nm); };
    auto C = [&](const Cyclo& q) { return Polynomial::constant(t, q); };
    const Polynomial a = v("alpha"), b = v("beta"), g = v("gamma"), k = v("k");

    const Polynomial a1 = k * (a + C(e) * b + C(e2) * g);
    const Polynomial b1 = k * (C(e2) * a + b + C(e) * g);
    const Polynomial g1 = k * (C(e) * a + C(e2) * b + g);

    DeformationPoint img{
        -(a1 * b1 * g1),
        -(a1 * g1 + a1 * b1 + b1 * g1),
        -(b1 * g1 + C(e) * a1 * g1 + C(e2) * a1 * b1),
        -(a1 + C(e) * b1 + C(e2) * g1)};

    const Polynomial s_poly = a + C(e) * b + C(e2) * g;
    detail::expect(img.lambda == -(pow(k, 3) * pow(s_poly, 3)),
                   "lambda component of g equals -k^3 s^3");
    detail::expect(img.mu.is_zero(), "mu component of g vanishes");
    detail::expect(img.nu.is_zero(), "nu component of g vanishes");
    detail::expect(img.sigma == C(Cyclo(-3)) * k * s_poly,
                   "sigma component of g equals -3 k s");

    // image on C: 27 lambda = sigma^3 identically, and mu = nu = 0; hence the
    // image meets the hyperplane {sigma = 0} only in the origin
    detail::expect(C(Cyclo(27)) * img.lambda == pow(img.sigma, 3),
                   "image of g satisfies sigma^3 - 27 lambda = 0");

    MapG out{img, std::nullopt};
    if (p.concrete()) {
        std::map<std::string, Polynomial> vals{
            {"alpha", Polynomial::constant(t, *p.alpha)},
            {"beta", Polynomial::constant(t, *p.beta)},
            {"gamma", Polynomial::constant(t, *p.gamma)},
            {"k", Polynomial::constant(t, p.k)}};
        const Cyclo s_val = fa_plane_value(*p.alpha, *p.beta, *p.gamma);
        out.value = DeformationPoint::exact(
            -pow(p.k, 3) * pow(s_val, 3), Cyclo(0), Cyclo(0), Cyclo(-3) * p.k * s_val);
        // consistency with the substituted symbolic image
        detail::expect(substitute(img.lambda, vals).constant_value() ==
                               out.value->lambda.constant_value() &&
                           substitute(img.sigma, vals).constant_value() ==
                               out.value->sigma.constant_value(),
                       "concrete image of g");
    }
    return out;
}

// -----------------------------------------------------------------------
// Dimension bookkeeping of the localization diagram.

struct FriedmanReport {
    int dimdef_X = 0;
    int dimdef_Xhat = 0;
    int h12_tilde = 0;
    int h11_tilde = 0;
    int h12_hat = 0;
    int h11_hat = 0;
    int t1_local_total = 0;
    int t1_X = 0;
    std::vector<std::pair<std::string, int>> row_exactness;
};

inline FriedmanReport friedman_report() {
    // input dimensions: the moduli of an elliptic pencil in the plane, the
    // sextic sections on the line, the automorphisms of the base, the Hodge
    // number corrections of the resolution, and the local data of the cusps
    constexpr int moduli_of_pencil = 8;
    constexpr int sextic_sections = 7;   // h^0(O(6)) on the line
    constexpr int dim_gl2 = 4;
    constexpr int hodge_gap_12 = 16;
    constexpr int hodge_gap_11 = 2;
    constexpr int cusp_count = 6;
    constexpr int tjurina_per_cusp = 4;
    constexpr int local_resolution_dims = 1;  // one-dimensional Kuranishi space upstairs

    FriedmanReport r;
    r.dimdef_X = 2 * moduli_of_pencil + sextic_sections - dim_gl2;
    r.h12_tilde = r.dimdef_X;  // the smoothing is a Calabi-Yau with chi = 0
    r.h11_tilde = r.h12_tilde;
    r.h12_hat = r.h12_tilde - hodge_gap_12;
    r.dimdef_Xhat = r.h12_hat;
    r.h11_hat = r.h11_tilde + hodge_gap_11;
    r.t1_local_total = cusp_count * tjurina_per_cusp;
    r.t1_X = r.t1_local_total;

    const int upstairs_local = cusp_count * local_resolution_dims;  // 6
    // h^2(Theta_X) comes out of the bottom-row exactness
    const int h2_theta_X = r.dimdef_Xhat - r.dimdef_X + r.t1_X + r.h12_tilde;  // 27
    // top row: h^1(R phi Theta) = h^1(Theta) -> upstairs local -> h^2 -> h^11
    const int top = r.h12_hat - r.dimdef_Xhat + upstairs_local - h2_theta_X + r.h11_hat;
    const int bottom = r.dimdef_Xhat - r.dimdef_X + r.t1_X - h2_theta_X + r.h12_tilde;
    r.row_exactness.emplace_back("top", top);
    r.row_exactness.emplace_back("bottom", bottom);
    // with the upstairs localization map trivial, the middle of the top row
    // splits: h^2 = upstairs_local + h11_hat
    detail::expect(h2_theta_X == upstairs_local + r.h11_hat,
                   "top row splits as 27 = 6 + 21");
    return r;
}

}  // namespace cusplab

#endif
