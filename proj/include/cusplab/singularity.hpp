#ifndef CUSPLAB_SINGULARITY_HPP
#define CUSPLAB_SINGULARITY_HPP

// Tjurina algebras, miniversal families and singularity classification for
// germs whose ideal (f) + J_f reduces to monomial generators after unit
// scaling. The threefold cusp x^2 - y^3 - z^2 + w^3 and every germ displayed
// alongside it are in this class; anything else raises NotMonomialReducible.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cusplab/linalg.hpp"
#include "cusplab/poly.hpp"

namespace cusplab {

inline VarTablePtr cusp_table() { return VarTable::make({"x", "y", "z", "w"}); }

// x^2 - y^3 - z^2 + w^3
inline Polynomial cusp_polynomial(const VarTablePtr& t) {
    auto v = [&](const char* nm, int k) { return Polynomial::variable(t, nm, k); };
    return v("x", 2) - v("y", 3) - v("z", 2) + v("w", 3);
}

struct GermPresentation {
    Polynomial f;
    std::vector<std::string> vars;
    std::vector<Cyclo> base_point;  // empty = origin

    GermPresentation(Polynomial poly, std::vector<std::string> germ_vars,
                     std::vector<Cyclo> base = {})
        : f(std::move(poly)), vars(std::move(germ_vars)), base_point(std::move(base)) {
        if (!base_point.empty() && base_point.size() != vars.size())
            throw Error("base point dimension mismatch");
    }
};

namespace detail {

inline Polynomial translate_to_origin(const GermPresentation& g) {
    if (g.base_point.empty()) return g.f;
    std::map<std::string, Polynomial> shift;
    for (std::size_t i = 0; i < g.vars.size(); ++i) {
        if (g.base_point[i].is_zero()) continue;
        shift.emplace(g.vars[i],
                      Polynomial::variable(g.f.table(), g.vars[i]) +
                          Polynomial::constant(g.f.table(), g.base_point[i]));
    }
    return shift.empty() ? g.f : substitute(g.f, shift);
}

}  // namespace detail

// Monomial basis of C{vars}/((f) + J_f), in graded order; the length is the
// Tjurina number. An empty list means the germ is smooth (unit ideal).
inline std::vector<Monomial> tjurina_basis(const GermPresentation& g) {
    const Polynomial f = detail::translate_to_origin(g);
    const auto& table = f.table();

    std::vector<Polynomial> gens{f};
    for (const auto& v : g.vars) gens.push_back(derivative(f, v));

    std::vector<Monomial> monomial_gens;
    std::vector<Polynomial> pending;
    for (auto& p : gens) {
        if (p.is_zero()) continue;
        if (p.terms().size() == 1)
            monomial_gens.push_back(p.terms().begin()->first);
        else
            pending.push_back(p);
    }

    // Reduce the non-monomial generators modulo the monomial ones: a term
    // divisible by a monomial generator lies in the ideal and can be dropped.
    bool progress = true;
    while (progress) {
        progress = false;
        std::vector<Polynomial> still;
        for (const auto& p : pending) {
            Polynomial residue(table);
            for (const auto& [m, c] : p.terms()) {
                bool killed = false;
                for (const auto& gmon : monomial_gens)
                    if (gmon.divides(m)) { killed = true; break; }
                if (!killed) residue.add_term(m, c);
            }
            if (residue.is_zero()) {
                progress = true;
            } else if (residue.terms().size() == 1) {
                monomial_gens.push_back(residue.terms().begin()->first);
                progress = true;
            } else {
                still.push_back(residue);
            }
        }
        pending = std::move(still);
    }
    if (!pending.empty()) throw NotMonomialReducible();

    // A constant generator means the ideal is the unit ideal: smooth germ.
    for (const auto& m : monomial_gens)
        if (m.is_one()) return {};

    return monomial_quotient_basis(monomial_gens, table, g.vars);
}

// f + one fresh parameter per basis monomial. Parameters are named l, m, n,
// s, t4, t5, ... in basis order; for the cusp itself the parameters follow
// the deformation-space convention l + m*y - n*w + s*y*w.
inline Polynomial miniversal_family(const GermPresentation& g) {
    const auto basis = tjurina_basis(g);
    const Polynomial f0 = detail::translate_to_origin(g);
    if (basis.empty()) return f0;

    const auto& old_table = f0.table();

    const bool is_cusp = *old_table == *cusp_table() && f0 == cusp_polynomial(old_table);

    std::vector<std::string> names = old_table->names();
    std::vector<std::string> param_names;
    static const char* first_four[] = {"l", "m", "n", "s"};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string nm = i < 4 ? first_four[i] : "t" + std::to_string(i);
        while (old_table->has(nm)) nm += "_";
        param_names.push_back(nm);
        names.push_back(nm);
    }
    auto table = VarTable::make(names);
    Polynomial family = retable(f0, table);

    std::vector<Monomial> ordered = basis;
    if (is_cusp) {
        // parameter order follows the family convention: 1, y, w, yw
        Monomial one(old_table->size()), my(old_table->size()), mw(old_table->size()),
            myw(old_table->size());
        my.e[old_table->index("y")] = 1;
        mw.e[old_table->index("w")] = 1;
        myw.e[old_table->index("y")] = 1;
        myw.e[old_table->index("w")] = 1;
        ordered = {one, my, mw, myw};
    }

    for (std::size_t i = 0; i < ordered.size(); ++i) {
        Monomial ext(table->size());
        for (std::size_t j = 0; j < old_table->size(); ++j) ext.e[j] = ordered[i].e[j];
        Polynomial term = Polynomial::variable(table, param_names[i]) *
                          Polynomial::term(table, Cyclo(1), ext);
        // the w-parameter of the cusp enters with a minus sign
        if (is_cusp && i == 2) family -= term;
        else family += term;
    }
    return family;
}

// -----------------------------------------------------------------------
// Classification of a critical point by its Hessian and the cubic part.

enum class SingularityClass { Node, I1xII, IIxII, DegenerateOther };

inline std::string to_string(SingularityClass k) {
    switch (k) {
        case SingularityClass::Node: return "Node";
        case SingularityClass::I1xII: return "cA2_I1xII";
        case SingularityClass::IIxII: return "cA2_IIxII";
        default: return "DegenerateOther";
    }
}

struct Classification {
    int hessian_rank = 0;
    Polynomial corank_cubic;  // in kernel coordinates t1 (and t2 for corank 2)
    SingularityClass klass = SingularityClass::DegenerateOther;
};

// Point entries may be exact constants or polynomials in parameter variables
// of f's table; the germ variables themselves must not appear in them.
inline Classification classify_singularity(
    const Polynomial& f, const std::vector<std::string>& germ_vars,
    const std::map<std::string, Polynomial>& point) {
    const auto& table = f.table();
    const std::size_t n = germ_vars.size();

    std::map<std::string, Polynomial> at_point;
    for (const auto& v : germ_vars) {
        auto it = point.find(v);
        if (it == point.end()) throw Error("point misses germ variable " + v);
        for (const auto& w : germ_vars)
            if (it->second.depends_on(table->index(w)))
                throw Error("point coordinates must not involve germ variables");
        at_point[v] = it->second;
    }

    // criticality: f and all germ partials vanish at the point
    if (!substitute(f, at_point).is_zero()) throw NotACriticalPoint();
    for (const auto& v : germ_vars)
        if (!substitute(derivative(f, v), at_point).is_zero())
            throw NotACriticalPoint();

    // translate the point to the origin
    std::map<std::string, Polynomial> shift;
    for (const auto& v : germ_vars)
        shift.emplace(v, Polynomial::variable(table, v) + at_point.at(v));
    const Polynomial g = substitute(f, shift);

    std::map<std::string, Polynomial> origin;
    for (const auto& v : germ_vars) origin.emplace(v, Polynomial::zero(table));

    PolyMatrix hess(n, std::vector<Polynomial>(n, Polynomial::zero(table)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Polynomial hij =
                substitute(derivative(derivative(g, germ_vars[i]), germ_vars[j]), origin);
            hess[i][j] = hij;
            hess[j][i] = hij;
        }

    Classification out;
    out.hessian_rank = poly_rank(hess);

    // cubic part in the germ variables
    Polynomial cubic(table);
    for (const auto& [m, c] : g.terms()) {
        std::int64_t d = 0;
        for (const auto& v : germ_vars) d += m.e[table->index(v)];
        if (d == 3) cubic.add_term(m, c);
    }

    if (out.hessian_rank == static_cast<int>(n)) {
        out.klass = SingularityClass::Node;
        out.corank_cubic = Polynomial::zero(table);
        return out;
    }

    if (out.hessian_rank == static_cast<int>(n) - 1) {
        const auto kernel = poly_kernel_vector(hess);
        std::vector<std::string> knames = table->names();
        std::string tname = "t1";
        while (table->has(tname)) tname += "_";
        knames.push_back(tname);
        auto ktable = VarTable::make(knames);
        std::map<std::string, Polynomial> restrict_map;
        const Polynomial t1 = Polynomial::variable(ktable, tname);
        for (std::size_t i = 0; i < n; ++i)
            restrict_map.emplace(germ_vars[i], retable(kernel[i], ktable) * t1);
        out.corank_cubic = substitute(cubic, restrict_map);
        out.klass = out.corank_cubic.is_zero() ? SingularityClass::DegenerateOther
                                               : SingularityClass::I1xII;
        return out;
    }

    if (out.hessian_rank == static_cast<int>(n) - 2) {
        std::vector<std::size_t> zero_rows;
        for (std::size_t i = 0; i < n; ++i) {
            bool all_zero = true;
            for (std::size_t j = 0; j < n; ++j)
                if (!hess[i][j].is_zero()) { all_zero = false; break; }
            if (all_zero) zero_rows.push_back(i);
        }
        if (zero_rows.size() == 2) {
            std::vector<std::string> knames = table->names();
            std::string t1n = "t1", t2n = "t2";
            while (table->has(t1n)) t1n += "_";
            while (table->has(t2n)) t2n += "_";
            knames.push_back(t1n);
            knames.push_back(t2n);
            auto ktable = VarTable::make(knames);
            std::map<std::string, Polynomial> restrict_map;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == zero_rows[0])
                    restrict_map.emplace(germ_vars[i], Polynomial::variable(ktable, t1n));
                else if (i == zero_rows[1])
                    restrict_map.emplace(germ_vars[i], Polynomial::variable(ktable, t2n));
                else
                    restrict_map.emplace(germ_vars[i], Polynomial::zero(ktable));
            }
            out.corank_cubic = substitute(cubic, restrict_map);
            // each kernel variable must carry a nonzero pure cube
            Monomial c1(ktable->size()), c2(ktable->size());
            c1.e[ktable->index(t1n)] = 3;
            c2.e[ktable->index(t2n)] = 3;
            if (!out.corank_cubic.coefficient(c1).is_zero() &&
                !out.corank_cubic.coefficient(c2).is_zero()) {
                out.klass = SingularityClass::IIxII;
                return out;
            }
        }
        out.klass = SingularityClass::DegenerateOther;
        return out;
    }

    out.klass = SingularityClass::DegenerateOther;
    out.corank_cubic = Polynomial::zero(table);
    return out;
}

inline Classification classify_singularity(const Polynomial& f,
                                           const std::vector<std::string>& germ_vars,
                                           const std::map<std::string, Cyclo>& point) {
    std::map<std::string, Polynomial> p;
    for (const auto& [nm, c] : point)
        p.emplace(nm, Polynomial::constant(f.table(), c));
    return classify_singularity(f, germ_vars, p);
}

}  // namespace cusplab

#endif
