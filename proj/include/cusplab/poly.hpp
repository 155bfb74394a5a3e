#ifndef CUSPLAB_POLY_HPP
#define CUSPLAB_POLY_HPP

// Sparse multivariate polynomials over Q(eps), with per-variable Laurent
// flags (negative exponents) so that denominators which are powers of a
// designated parameter stay inside the ring. Canonical form: no stored zero
// coefficients, terms ordered graded-lexicographically over the table order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cusplab/cyclo.hpp"
#include "cusplab/errors.hpp"

namespace cusplab {

class VarTable {
public:
    static std::shared_ptr<const VarTable> make(
        std::vector<std::string> names, std::vector<std::string> laurent = {}) {
        auto t = std::shared_ptr<VarTable>(new VarTable());
        for (auto& nm : names) t->push(nm, false);
        for (auto& nm : laurent) {
            auto it = t->index_.find(nm);
            if (it == t->index_.end()) throw UnknownVariable(nm);
            t->laurent_[it->second] = true;
        }
        return t;
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    bool laurent(std::size_t i) const { return laurent_[i]; }

    bool has(const std::string& nm) const { return index_.count(nm) != 0; }
    std::size_t index(const std::string& nm) const {
        auto it = index_.find(nm);
        if (it == index_.end()) throw UnknownVariable(nm);
        return it->second;
    }

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.names_ == b.names_ && a.laurent_ == b.laurent_;
    }

private:
    VarTable() = default;
    void push(const std::string& nm, bool laurent) {
        if (nm.empty() || nm == "eps" || index_.count(nm))
            throw Error("bad or duplicate variable name: " + nm);
        index_[nm] = names_.size();
        names_.push_back(nm);
        laurent_.push_back(laurent);
    }

    std::vector<std::string> names_;
    std::vector<bool> laurent_;
    std::map<std::string, std::size_t> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
    return a == b || (a && b && *a == *b);
}

struct Monomial {
    std::vector<std::int32_t> e;

    explicit Monomial(std::size_t n = 0) : e(n, 0) {}

    std::int64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::int64_t{0});
    }
    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded lexicographic: total degree first, then lex over the table order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return std::lexicographical_compare(a.e.begin(), a.e.end(),
                                            b.e.begin(), b.e.end());
    }
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Cyclo, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(VarTablePtr table) : table_(std::move(table)) {}

    static Polynomial zero(VarTablePtr table) { return Polynomial(std::move(table)); }

    static Polynomial constant(VarTablePtr table, Cyclo c) {
        Polynomial p(std::move(table));
        if (!c.is_zero()) p.terms_[Monomial(p.table_->size())] = std::move(c);
        return p;
    }

    static Polynomial variable(VarTablePtr table, const std::string& name,
                               std::int32_t power = 1) {
        Polynomial p(table);
        const auto i = table->index(name);
        if (power < 0 && !table->laurent(i)) throw UnknownVariable(name + " (not laurent)");
        if (power == 0) return constant(std::move(table), Cyclo(1));
        Monomial m(table->size());
        m.e[i] = power;
        p.terms_[m] = Cyclo(1);
        return p;
    }

    static Polynomial term(VarTablePtr table, Cyclo c, Monomial m) {
        Polynomial p(std::move(table));
        if (!c.is_zero()) p.terms_[std::move(m)] = std::move(c);
        return p;
    }

    const VarTablePtr& table() const { return table_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    Cyclo constant_value() const {
        if (terms_.empty()) return Cyclo(0);
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }

    Cyclo coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Cyclo(0) : it->second;
    }

    // Degree in a single variable (0 for the zero polynomial).
    std::int32_t degree_in(std::size_t var) const {
        std::int32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
        return d;
    }
    std::int32_t min_exponent(std::size_t var) const {
        std::int32_t d = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            d = first ? m.e[var] : std::min(d, m.e[var]);
            first = false;
        }
        return d;
    }
    std::int64_t total_degree() const {
        std::int64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& [m, c] : terms_)
            if (m.e[var] != 0) return true;
        return false;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) throw TableMismatch();
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) throw TableMismatch();
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + (-b);
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (!same_table(a.table_, b.table_)) throw TableMismatch();
        Polynomial r(a.table_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.e.size());
                for (std::size_t i = 0; i < m.e.size(); ++i) {
                    const std::int64_t s = std::int64_t{ma.e[i]} + mb.e[i];
                    if (s > INT32_MAX || s < INT32_MIN) throw Error("exponent overflow");
                    m.e[i] = static_cast<std::int32_t>(s);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(const Cyclo& c, const Polynomial& a) {
        Polynomial r(a.table_);
        if (c.is_zero()) return r;
        for (const auto& [m, coef] : a.terms_) r.terms_[m] = c * coef;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { *this = *this + o; return *this; }
    Polynomial& operator-=(const Polynomial& o) { *this = *this - o; return *this; }
    Polynomial& operator*=(const Polynomial& o) { *this = *this * o; return *this; }

    void add_term(const Monomial& m, const Cyclo& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // A unit of the coefficient ring: one term whose support lies entirely
    // in laurent-flagged variables.
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const auto& m = terms_.begin()->first;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0 && !table_->laurent(i)) return false;
        return true;
    }
    Polynomial unit_inverse() const {
        if (!is_unit()) throw NonUnitLeadingCoefficient();
        const auto& [m, c] = *terms_.begin();
        Monomial mi(m.e.size());
        for (std::size_t i = 0; i < m.e.size(); ++i) mi.e[i] = -m.e[i];
        return term(table_, inverse(c), mi);
    }

private:
    VarTablePtr table_;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& p, long long e) {
    if (e < 0) return pow(p.unit_inverse(), -e);
    Polynomial acc = Polynomial::constant(p.table(), Cyclo(1)), base = p;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

inline Polynomial derivative(const Polynomial& f, const std::string& var) {
    const auto i = f.table()->index(var);
    Polynomial r(f.table());
    for (const auto& [m, c] : f.terms()) {
        if (m.e[i] == 0) continue;
        Monomial d = m;
        const std::int32_t k = d.e[i];
        d.e[i] = k - 1;
        r.add_term(d, Cyclo(Rational(k)) * c);
    }
    return r;
}

// Exact composition. Bindings are polynomials over a common target table;
// unbound variables must exist in the target table and bind to themselves.
inline Polynomial substitute(const Polynomial& f,
                             const std::map<std::string, Polynomial>& bindings) {
    VarTablePtr target = f.table();
    for (const auto& [nm, p] : bindings) {
        if (!f.table()->has(nm)) throw UnknownVariable(nm);
        target = p.table();
    }
    for (const auto& [nm, p] : bindings)
        if (!same_table(p.table(), target)) throw TableMismatch();

    Polynomial result(target);
    std::vector<const Polynomial*> bound(f.table()->size(), nullptr);
    std::vector<Polynomial> self;
    self.reserve(f.table()->size());
    for (std::size_t i = 0; i < f.table()->size(); ++i) {
        auto it = bindings.find(f.table()->name(i));
        if (it != bindings.end()) {
            bound[i] = &it->second;
        } else {
            if (!target->has(f.table()->name(i)))
                throw UnknownVariable(f.table()->name(i));
            self.push_back(Polynomial::variable(target, f.table()->name(i)));
            bound[i] = &self.back();
        }
    }
    for (const auto& [m, c] : f.terms()) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (m.e[i] < 0 && !bound[i]->is_unit())
                throw NonUnitLaurentSubstitution(f.table()->name(i));
            t *= pow(*bound[i], m.e[i]);
        }
        result += t;
    }
    return result;
}

inline Cyclo evaluate(const Polynomial& f, const std::map<std::string, Cyclo>& point) {
    for (std::size_t i = 0; i < f.table()->size(); ++i)
        if (!point.count(f.table()->name(i))) throw UnboundVariable(f.table()->name(i));
    Cyclo acc(0);
    for (const auto& [m, c] : f.terms()) {
        Cyclo t = c;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            t *= pow(point.at(f.table()->name(i)), m.e[i]);
        }
        acc += t;
    }
    return acc;
}

inline std::complex<double> evaluate_numeric(
    const Polynomial& f, const std::map<std::string, std::complex<double>>& point) {
    std::complex<double> acc = 0;
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> t = embed(c);
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            auto it = point.find(f.table()->name(i));
            if (it == point.end()) throw UnboundVariable(f.table()->name(i));
            t *= std::pow(it->second, m.e[i]);
        }
        acc += t;
    }
    return acc;
}

// Divides out the largest common power of one variable (for laurent
// variables this clears denominators).
inline Polynomial strip_power(const Polynomial& p, std::size_t var) {
    const std::int32_t k = p.min_exponent(var);
    if (k == 0 || p.is_zero()) return p;
    Polynomial out(p.table());
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        q.e[var] -= k;
        out.add_term(q, c);
    }
    return out;
}

// Re-express over another table; variables with nonzero exponents must exist
// in the target with a compatible laurent flag, unused ones may be dropped.
inline Polynomial retable(const Polynomial& p, const VarTablePtr& target) {
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        Monomial q(target->size());
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            const auto j = target->index(p.table()->name(i));
            if (m.e[i] < 0 && !target->laurent(j))
                throw UnknownVariable(p.table()->name(i) + " (not laurent)");
            q.e[j] = m.e[i];
        }
        r.add_term(q, c);
    }
    return r;
}

// Coefficient of main^k, as a polynomial with the main-exponent stripped.
inline Polynomial coefficient_in(const Polynomial& f, std::size_t var, std::int32_t k) {
    Polynomial r(f.table());
    for (const auto& [m, c] : f.terms()) {
        if (m.e[var] != k) continue;
        Monomial q = m;
        q.e[var] = 0;
        r.add_term(q, c);
    }
    return r;
}

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

// Division with remainder viewing f, g in R[main], where R is the coefficient
// ring spanned by the remaining (possibly laurent) variables. Requires the
// leading coefficient of g to be a unit of R. Guarantees f = q*g + r with
// deg_main(r) < deg_main(g).
inline DivisionResult univariate_division(const Polynomial& f, const Polynomial& g,
                                          const std::string& main) {
    if (!same_table(f.table(), g.table())) throw TableMismatch();
    if (g.is_zero()) throw ZeroDivisor();
    const auto v = f.table()->index(main);
    if (f.min_exponent(v) < 0 || g.min_exponent(v) < 0)
        throw Error("main variable of a division must not carry negative exponents");
    const std::int32_t dg = g.degree_in(v);
    if (dg == 0) {
        // degree-0 divisor: g itself must be a unit of the coefficient ring
        return {f * g.unit_inverse(), Polynomial::zero(f.table())};
    }
    const Polynomial lead_g = coefficient_in(g, v, dg);
    if (!lead_g.is_unit()) throw NonUnitLeadingCoefficient();
    const Polynomial lead_g_inv = lead_g.unit_inverse();

    Polynomial q(f.table()), r = f;
    while (!r.is_zero()) {
        const std::int32_t dr = r.degree_in(v);
        if (dr < dg) break;
        const Polynomial t = coefficient_in(r, v, dr) * lead_g_inv *
                             Polynomial::variable(f.table(), main, dr - dg);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

// All monomials in the restricted variables divisible by no generator, in
// graded order. Finite precisely when every restricted variable is bounded
// by a pure-power generator.
inline std::vector<Monomial> monomial_quotient_basis(
    const std::vector<Monomial>& generators, const VarTablePtr& table,
    const std::vector<std::string>& restricted_vars) {
    for (const auto& g : generators)
        for (auto e : g.e)
            if (e < 0) throw Error("laurent monomial cannot generate a quotient ideal");

    std::vector<std::size_t> vars;
    for (const auto& nm : restricted_vars) vars.push_back(table->index(nm));

    std::vector<std::int32_t> bound(vars.size(), -1);
    for (std::size_t j = 0; j < vars.size(); ++j) {
        for (const auto& g : generators) {
            bool pure = g.e[vars[j]] > 0;
            for (std::size_t i = 0; pure && i < g.e.size(); ++i)
                if (i != vars[j] && g.e[i] != 0) pure = false;
            if (pure && (bound[j] < 0 || g.e[vars[j]] < bound[j])) bound[j] = g.e[vars[j]];
        }
        if (bound[j] < 0) throw InfiniteQuotient(table->name(vars[j]));
    }

    std::vector<Monomial> basis;
    Monomial m(table->size());
    // odometer over the box prod [0, bound_j)
    std::vector<std::int32_t> idx(vars.size(), 0);
    for (;;) {
        for (std::size_t j = 0; j < vars.size(); ++j) m.e[vars[j]] = idx[j];
        bool divisible = false;
        for (const auto& g : generators)
            if (g.divides(m)) { divisible = true; break; }
        if (!divisible) basis.push_back(m);
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] >= bound[j]) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    std::sort(basis.begin(), basis.end(), GrlexLess{});
    return basis;
}

inline std::string monomial_to_string(const Monomial& m, const VarTablePtr& table) {
    std::string s;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += table->name(i);
        if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

// Deterministic printing: descending graded-lex, grammar-compatible.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        bool negate = false;
        Cyclo disp = c;
        if (c.re != 0 ? c.re < 0 : c.ep < 0) {
            negate = true;
            disp = -c;
        }
        out += out.empty() ? (negate ? "-" : "") : (negate ? " - " : " + ");
        const bool compound = disp.re != 0 && disp.ep != 0;
        std::string cs = to_string(disp);
        if (m.is_one()) {
            out += compound ? "(" + cs + ")" : cs;
        } else {
            if (compound) out += "(" + cs + ")*";
            else if (disp != Cyclo(1)) out += cs + "*";
            out += monomial_to_string(m, p.table());
        }
    }
    return out;
}

}  // namespace cusplab

#endif
