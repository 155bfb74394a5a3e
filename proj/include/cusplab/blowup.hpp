#ifndef CUSPLAB_BLOWUP_HPP
#define CUSPLAB_BLOWUP_HPP

// Blow-ups of codimension-2 coordinate-linear centers, strict transforms and
// Jacobian smoothness checks. A chart variety keeps the incidence relations
// of previous blow-ups separate from the strict equations of the variety
// itself; only the latter are eligible for transformation, so blowing up an
// exhausted center raises NothingToTransform.
//
// Conventions for center {v1 = v2 = 0} with homogeneous pair (h0 : h1):
// incidence h1*v1 = h0*v2, chart h0 = 1 carries v2 = h1*v1 (v1 is the
// exceptional coordinate), chart h1 = 1 carries v1 = h0*v2.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cusplab/linalg.hpp"
#include "cusplab/poly.hpp"

namespace cusplab {

struct ProjectiveFactor {
    std::string h0, h1;
    int affine = -1;  // -1: both coordinates live; 0/1: that one was set to 1
};

struct ChartVariety {
    VarTablePtr vars;
    std::vector<Polynomial> equations;   // strict equations
    std::vector<Polynomial> incidences;  // blow-up incidence relations
    std::vector<ProjectiveFactor> factors;
    std::string label;

    std::vector<Polynomial> all_equations() const {
        std::vector<Polynomial> out = incidences;
        out.insert(out.end(), equations.begin(), equations.end());
        return out;
    }
};

struct BlowupCenter {
    Polynomial form1, form2;  // independent degree-1 coordinate forms
};

namespace detail {

// A supported center form is a nonzero scalar multiple of a single variable.
inline std::string center_variable(const Polynomial& form) {
    if (form.terms().size() != 1) throw CenterNotLinear();
    const auto& [m, c] = *form.terms().begin();
    std::string found;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (m.e[i] != 1 || !found.empty()) throw CenterNotLinear();
        found = form.table()->name(i);
    }
    if (found.empty()) throw CenterNotLinear();
    return found;
}

// Rewrites h0^a h1^b T^c into h-coordinates times center variables by
// trading each T against one h factor.
inline Polynomial absorb_radial(const Polynomial& p, std::size_t iT, std::size_t ih0,
                                std::size_t ih1, std::size_t iv1, std::size_t iv2) {
    Polynomial out(p.table());
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        std::int32_t t = q.e[iT];
        const std::int32_t d0 = std::min(q.e[ih0], t);
        q.e[ih0] -= d0;
        q.e[iv1] += d0;
        t -= d0;
        const std::int32_t d1 = std::min(q.e[ih1], t);
        q.e[ih1] -= d1;
        q.e[iv2] += d1;
        t -= d1;
        if (t != 0) throw Error("radial coordinate cannot be absorbed");
        q.e[iT] = 0;
        out.add_term(q, c);
    }
    return out;
}

}  // namespace detail

struct BlowupResult {
    ChartVariety global;  // bi-homogeneous description with the new incidence
    ChartVariety chart0;  // h0 = 1
    ChartVariety chart1;  // h1 = 1
};

inline BlowupResult blowup_strict_transform(const ChartVariety& v, const BlowupCenter& c,
                                            const std::string& h0, const std::string& h1) {
    const std::string v1 = detail::center_variable(c.form1);
    const std::string v2 = detail::center_variable(c.form2);
    if (v1 == v2) throw CenterNotLinear();
    if (!v.vars->has(v1) || !v.vars->has(v2)) throw UnknownVariable(v1 + "," + v2);

    // which strict equations vanish on the center
    std::map<std::string, Polynomial> kill{
        {v1, Polynomial::zero(v.vars)}, {v2, Polynomial::zero(v.vars)}};
    std::vector<bool> vanishes;
    bool any = false;
    for (const auto& e : v.equations) {
        const bool z = substitute(e, kill).is_zero();
        vanishes.push_back(z);
        any = any || z;
    }
    if (!any) throw NothingToTransform();

    const std::string center_tag = "bl{" + v1 + "," + v2 + "}";

    // ---- global bi-homogeneous description
    BlowupResult out;
    {
        std::vector<std::string> names = v.vars->names();
        names.push_back(h0);
        names.push_back(h1);
        names.push_back("_T");
        auto tmp = VarTable::make(names);
        names.pop_back();
        auto global_table = VarTable::make(names);

        const auto T = Polynomial::variable(tmp, "_T");
        std::map<std::string, Polynomial> radial{
            {v1, Polynomial::variable(tmp, h0) * T},
            {v2, Polynomial::variable(tmp, h1) * T}};

        out.global.vars = global_table;
        out.global.factors = v.factors;
        out.global.factors.push_back({h0, h1, -1});
        out.global.label = (v.label.empty() ? "" : v.label + "/") + center_tag;
        for (const auto& inc : v.incidences)
            out.global.incidences.push_back(retable(inc, global_table));
        out.global.incidences.push_back(
            Polynomial::variable(global_table, h1) * Polynomial::variable(global_table, v1) -
            Polynomial::variable(global_table, h0) * Polynomial::variable(global_table, v2));
        for (std::size_t i = 0; i < v.equations.size(); ++i) {
            if (!vanishes[i]) {
                out.global.equations.push_back(retable(v.equations[i], global_table));
                continue;
            }
            Polynomial s = substitute(v.equations[i], radial);
            s = strip_power(s, tmp->index("_T"));
            s = detail::absorb_radial(s, tmp->index("_T"), tmp->index(h0), tmp->index(h1),
                                      tmp->index(v1), tmp->index(v2));
            out.global.equations.push_back(retable(s, global_table));
        }
    }

    // ---- affine charts
    auto make_chart = [&](int which) {
        const std::string& slope = which == 0 ? h1 : h0;
        const std::string& exc = which == 0 ? v1 : v2;
        const std::string& other = which == 0 ? v2 : v1;

        // the substituted variable leaves the chart: other = exc * slope
        std::vector<std::string> names;
        for (const auto& nm : v.vars->names())
            if (nm != other) names.push_back(nm);
        names.push_back(slope);
        auto table = VarTable::make(names);

        std::map<std::string, Polynomial> sub{
            {other, Polynomial::variable(table, exc) * Polynomial::variable(table, slope)}};

        ChartVariety chart;
        chart.vars = table;
        chart.factors = v.factors;
        chart.factors.push_back({h0, h1, which});
        chart.label = (v.label.empty() ? "" : v.label + "/") + center_tag + ":[" +
                      (which == 0 ? h0 : h1) + "=1]";
        for (const auto& inc : v.incidences)
            chart.incidences.push_back(substitute(inc, sub));
        for (std::size_t i = 0; i < v.equations.size(); ++i) {
            Polynomial s = substitute(v.equations[i], sub);
            if (vanishes[i]) s = strip_power(s, table->index(exc));
            chart.equations.push_back(s);
        }
        return chart;
    };
    out.chart0 = make_chart(0);
    out.chart1 = make_chart(1);
    return out;
}

// Sets one homogeneous coordinate of a projective factor to 1.
inline ChartVariety affine_chart(const ChartVariety& v, const std::string& hvar) {
    if (!v.vars->has(hvar)) throw UnknownVariable(hvar);
    std::vector<std::string> names;
    for (const auto& nm : v.vars->names())
        if (nm != hvar) names.push_back(nm);
    auto table = VarTable::make(names);

    ChartVariety out;
    out.vars = table;
    out.label = v.label + ":[" + hvar + "=1]";
    out.factors = v.factors;
    bool matched = false;
    for (auto& f : out.factors) {
        if (f.h0 == hvar && f.affine == -1) { f.affine = 0; matched = true; }
        else if (f.h1 == hvar && f.affine == -1) { f.affine = 1; matched = true; }
    }
    if (!matched) throw UnknownVariable(hvar + " (not a live projective coordinate)");

    auto dehom = [&](const Polynomial& p) {
        std::map<std::string, Polynomial> m;
        m.emplace(hvar, Polynomial::constant(table, Cyclo(1)));
        return substitute(p, m);
    };
    for (const auto& e : v.incidences) out.incidences.push_back(dehom(e));
    for (const auto& e : v.equations) out.equations.push_back(dehom(e));
    return out;
}

// Jacobian criterion at an exact point of a fully affine chart: smooth iff
// the Jacobian of all equations has rank equal to their number (the systems
// here are complete intersections).
inline bool is_smooth_at(const ChartVariety& v, const std::map<std::string, Cyclo>& point) {
    for (const auto& f : v.factors)
        if (f.affine == -1)
            throw Error("dehomogenize every projective factor before the smoothness test");
    const auto eqs = v.all_equations();
    for (const auto& e : eqs)
        if (!evaluate(e, point).is_zero()) throw PointNotOnVariety();
    std::vector<std::vector<Cyclo>> jac;
    for (const auto& e : eqs) {
        std::vector<Cyclo> row;
        for (const auto& nm : v.vars->names()) row.push_back(evaluate(derivative(e, nm), point));
        jac.push_back(row);
    }
    return cyclo_rank(jac) == static_cast<int>(eqs.size());
}

// -----------------------------------------------------------------------
// Exceptional fiber of the resolved chart over a base point.

struct ExceptionalFiber {
    Polynomial equation;                  // e.g. the bilinear monomial h0 * h0'
    std::vector<std::string> components;  // one homogeneous coordinate per component
    std::vector<std::pair<std::string, std::string>> intersection;  // vanishing coords
};

// Substitutes the base point into the system and reads off the fiber inside
// the product of projective lines. Supported shape: a single surviving
// monomial equation in live homogeneous coordinates.
inline ExceptionalFiber exceptional_fiber(const ChartVariety& v,
                                          const std::map<std::string, Cyclo>& base_point) {
    std::map<std::string, Polynomial> sub;
    for (const auto& [nm, val] : base_point)
        sub.emplace(nm, Polynomial::constant(v.vars, val));
    std::vector<Polynomial> survivors;
    for (const auto& e : v.all_equations()) {
        Polynomial r = substitute(e, sub);
        if (!r.is_zero()) survivors.push_back(r);
    }
    if (survivors.size() != 1)
        throw Error("fiber is not cut by a single equation; unsupported shape");

    ExceptionalFiber out;
    out.equation = survivors[0];
    if (out.equation.terms().size() != 1)
        throw Error("fiber equation is not a monomial; unsupported shape");
    const auto& mono = out.equation.terms().begin()->first;
    for (std::size_t i = 0; i < mono.e.size(); ++i)
        if (mono.e[i] > 0) out.components.push_back(out.equation.table()->name(i));
    for (std::size_t a = 0; a < out.components.size(); ++a)
        for (std::size_t b = a + 1; b < out.components.size(); ++b)
            out.intersection.emplace_back(out.components[a], out.components[b]);
    return out;
}

// -----------------------------------------------------------------------
// The three displayed flop centers for the factored cusp equation
// x y = u v [(1+eps) v - eps u], with the index offset of the resolution
// each center produces.

inline ChartVariety cusp_product_chart() {
    auto t = VarTable::make({"x", "y", "u", "v"});
    const auto x = Polynomial::variable(t, "x"), y = Polynomial::variable(t, "y");
    const auto u = Polynomial::variable(t, "u"), vv = Polynomial::variable(t, "v");
    const Cyclo e = Cyclo::eps();
    ChartVariety chart;
    chart.vars = t;
    chart.label = "cusp";
    chart.equations.push_back(x * y - u * vv * ((Cyclo(1) + e) * vv - e * u));
    return chart;
}

struct FlopCenterEntry {
    int offset;
    BlowupCenter center;
    BlowupResult transform;
    bool small_fiber;  // fiber over the singular point is one projective line
};

inline std::vector<FlopCenterEntry> flop_center_table() {
    const ChartVariety cusp = cusp_product_chart();
    const auto t = cusp.vars;
    auto var = [&](const char* nm) { return Polynomial::variable(t, nm); };
    const std::vector<std::pair<int, std::pair<const char*, const char*>>> centers{
        {0, {"x", "u"}}, {2, {"x", "v"}}, {3, {"y", "u"}}};
    std::vector<FlopCenterEntry> out;
    for (const auto& [offset, pr] : centers) {
        FlopCenterEntry entry{offset, {var(pr.first), var(pr.second)}, {}, false};
        entry.transform =
            blowup_strict_transform(cusp, entry.center, "m0", "m1");
        // small partial resolution: every equation vanishes at the origin, so
        // the fiber over the singular point is the whole exceptional line
        bool all_vanish = true;
        std::map<std::string, Polynomial> origin;
        const auto& g = entry.transform.global;
        for (const auto& nm : t->names())
            origin.emplace(nm, Polynomial::zero(g.vars));
        for (const auto& e : g.all_equations())
            if (!substitute(e, origin).is_zero()) all_vanish = false;
        entry.small_fiber = all_vanish;
        out.push_back(entry);
    }
    return out;
}

}  // namespace cusplab

#endif
