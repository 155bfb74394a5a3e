#ifndef CUSPLAB_REPORT_HPP
#define CUSPLAB_REPORT_HPP

// The proposition-verification suites. Each check is a named, seeded,
// independent computation; the CLI and the acceptance runner both drive
// this registry. Report assembly is deterministic (sorted by check id).

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusplab/blowup.hpp"
#include "cusplab/locus.hpp"
#include "cusplab/parse.hpp"
#include "cusplab/verifier.hpp"

namespace cusplab {

struct CheckResult {
    std::string id;
    std::string cite;
    std::string status;  // pass | fail | skipped
    std::string details;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    int passed = 0;
    int failed = 0;
    int skipped = 0;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"id", c.id},
                                   {"cite", c.cite},
                                   {"status", c.status},
                                   {"details", c.details}});
        j["passed"] = passed;
        j["failed"] = failed;
        return j;
    }
};

namespace detail {

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}
inline Rational rand_rational(std::mt19937_64& rng, int num_bound = 6, int den_bound = 3) {
    return Rational(rand_int(rng, -num_bound, num_bound), rand_int(rng, 1, den_bound));
}
inline Rational rand_nonzero_rational(std::mt19937_64& rng) {
    for (;;) {
        Rational r = rand_rational(rng);
        if (r != 0) return r;
    }
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

// planted sigma = 0 parameter with a singular point at (y0, w0)
inline DeformationPoint plant_sigma0(const Cyclo& y0, const Cyclo& w0) {
    const Cyclo mu = Cyclo(3) * y0 * y0;
    const Cyclo nu = Cyclo(3) * w0 * w0;
    const Cyclo lambda = (Cyclo(2) * nu * w0 - Cyclo(2) * mu * y0) * Cyclo(Rational(1, 3));
    return DeformationPoint::exact(lambda, mu, nu, Cyclo(0));
}

// planted sigma != 0 parameter whose eliminated cubic has the given roots
inline DeformationPoint plant_cubic(const Cyclo& r1, const Cyclo& r2, const Cyclo& r3,
                                    const Cyclo& sigma) {
    const Cyclo sum = r1 + r2 + r3;
    const Cyclo sym2 = r1 * r2 + r1 * r3 + r2 * r3;
    const Cyclo prod = r1 * r2 * r3;
    const Cyclo nu = sigma * sum * Cyclo(Rational(1, 2));
    const Cyclo mu = Cyclo(3) * sym2;
    const Cyclo lambda =
        (Cyclo(-3) * sigma * prod - Cyclo(2) * mu * nu) / (Cyclo(3) * sigma);
    return DeformationPoint::exact(lambda, mu, nu, sigma);
}

inline bool record_matches_numeric(const SingularPointRecord& exact,
                                   const SingularPointRecord& numeric, double tol) {
    double d = 0;
    for (int i = 0; i < 4; ++i)
        d += std::abs(embed(exact.coords[i].constant_value()) -
                      numeric.coords_numeric[i]);
    return d <= tol;
}

inline void expect_agreement(const std::vector<SingularPointRecord>& exact,
                             const std::vector<SingularPointRecord>& numeric) {
    if (exact.size() != numeric.size())
        throw SymbolicMismatch("exact and numeric modes disagree on the point count");
    std::vector<bool> used(numeric.size(), false);
    for (const auto& e : exact) {
        bool matched = false;
        for (std::size_t j = 0; j < numeric.size(); ++j) {
            if (used[j]) continue;
            if (record_matches_numeric(e, numeric[j], 1e-8)) {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if (!matched)
            throw SymbolicMismatch("an exact singular point has no numeric partner "
                                   "within 1e-8");
    }
}

}  // namespace detail

struct CheckSpec {
    std::string id;
    std::string suite;
    std::string cite;
    std::function<std::string(std::uint64_t)> run;  // returns detail text
};

inline const std::vector<CheckSpec>& all_checks() {
    static const std::vector<CheckSpec> checks = [] {
        std::vector<CheckSpec> v;

        // ----- suite S -------------------------------------------------
        v.push_back({"S.t1-basis", "S",
                     "first-order deformation space of the cusp is <1, y, w, yw>",
                     [](std::uint64_t) {
                         auto t = cusp_table();
                         GermPresentation cusp{cusp_polynomial(t), {"x", "y", "z", "w"}};
                         auto basis = tjurina_basis(cusp);
                         detail::expect(basis.size() == 4, "Tjurina number of the cusp is 4");
                         std::set<std::string> names;
                         for (const auto& m : basis) names.insert(monomial_to_string(m, t));
                         detail::expect(names == std::set<std::string>{"1", "y", "w", "y*w"},
                                        "cusp basis is {1, y, w, yw}");
                         const Polynomial family = miniversal_family(cusp);
                         const auto ft = family.table();
                         detail::expect(
                             family == parse_polynomial(
                                           "x^2 - y^3 - z^2 + w^3 + l + m*y - n*w + s*y*w", ft),
                             "miniversal family of the cusp");

                         auto t2 = VarTable::make({"x", "y"});
                         GermPresentation plane{
                             Polynomial::variable(t2, "x", 2) - Polynomial::variable(t2, "y", 3),
                             {"x", "y"}};
                         auto basis2 = tjurina_basis(plane);
                         detail::expect(basis2.size() == 2, "Tjurina number of x^2 - y^3 is 2");
                         std::set<std::string> names2;
                         for (const auto& m : basis2) names2.insert(monomial_to_string(m, t2));
                         detail::expect(names2 == std::set<std::string>{"1", "y"},
                                        "plane cusp basis is {1, y}");
                         detail::expect(miniversal_family(plane) ==
                                            parse_polynomial("x^2 - y^3 + l + m*y",
                                                             miniversal_family(plane).table()),
                                        "miniversal family of the plane cusp");
                         return std::string("tjurina 4 with basis {1,y,w,yw}; "
                                            "plane cusp basis {1,y}");
                     }});

        v.push_back({"S.image", "S",
                     "deformations induced from the elliptic factors span {sigma = 0}",
                     [](std::uint64_t) {
                         auto S = induced_image_S();
                         detail::expect(S.equations.size() == 1 &&
                                            S.equations[0] ==
                                                Polynomial::variable(
                                                    S.equations[0].table(), "s"),
                                        "S is cut by the sigma coordinate");
                         auto p1 = induced_deformation(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0));
                         detail::expect(p1 == DeformationPoint::exact(Cyclo(1), Cyclo(0),
                                                                      Cyclo(0), Cyclo(0)),
                                        "(1,0;0,0) lands on (1,0,0,0)");
                         auto p2 = induced_deformation(Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0));
                         detail::expect(p2 == DeformationPoint::exact(Cyclo(0), Cyclo(0),
                                                                      Cyclo(0), Cyclo(0)),
                                        "(0,0;0,0) lands on the origin");
                         auto p3 = induced_deformation(Cyclo(2), Cyclo(3), Cyclo(5), Cyclo(7));
                         detail::expect(p3 == DeformationPoint::exact(Cyclo(-3), Cyclo(3),
                                                                      Cyclo(7), Cyclo(0)),
                                        "(2,3;5,7) lands on (-3,3,-7,0) in space coordinates");
                         return std::string("image spans {sigma=0}; example points verified");
                     }});

        v.push_back({"S.bound", "S",
                     "sigma = 0 fibers carry at most two singular points, classified by mu, nu",
                     [](std::uint64_t seed) {
                         std::mt19937_64 rng(seed + 0x51);
                         int planted = 0, raw = 0;
                         for (int i = 0; i < 200; ++i) {
                             Cyclo y0 = detail::rand_cyclo(rng), w0 = detail::rand_cyclo(rng);
                             if (i % 4 == 0) y0 = Cyclo(0);
                             if (i % 4 == 1) w0 = Cyclo(0);
                             if (i % 4 == 2) { y0 = Cyclo(0); w0 = Cyclo(0); }
                             const auto L = detail::plant_sigma0(y0, w0);
                             const auto pts = singular_locus(L, SolveMode::Exact);
                             detail::expect(pts.size() <= 2, "at most two singular points");
                             detail::expect(!pts.empty(), "planted point is found");
                             const auto [l, m, n, s] = L.exact_values();
                             for (const auto& p : pts) {
                                 if (!(m * n).is_zero())
                                     detail::expect(p.klass == SingularityClass::Node,
                                                    "mu nu != 0 gives ordinary double points");
                                 else if (m.is_zero() && n.is_zero())
                                     detail::expect(p.klass == SingularityClass::IIxII,
                                                    "mu = nu = 0 keeps the cusp type");
                                 else
                                     detail::expect(p.klass == SingularityClass::I1xII,
                                                    "exactly one of mu, nu zero gives I1 x II");
                             }
                             detail::expect_agreement(pts,
                                                      singular_locus(L, SolveMode::Numeric));
                             ++planted;
                         }
                         for (int i = 0; i < 100; ++i) {
                             const Cyclo m = detail::rand_cyclo(rng);
                             const Cyclo n = detail::rand_cyclo(rng);
                             const auto L = DeformationPoint::exact(
                                 detail::rand_cyclo(rng), m, n, Cyclo(0));
                             const auto pts = singular_locus(L, SolveMode::Numeric);
                             detail::expect(pts.size() <= 2, "at most two singular points");
                             for (const auto& p : pts) {
                                 if (!(m * n).is_zero())
                                     detail::expect(p.klass == SingularityClass::Node,
                                                    "mu nu != 0 gives ordinary double points");
                                 else if (m.is_zero() && n.is_zero())
                                     detail::expect(p.klass == SingularityClass::IIxII,
                                                    "mu = nu = 0 keeps the cusp type");
                                 else
                                     detail::expect(p.klass == SingularityClass::I1xII,
                                                    "exactly one of mu, nu zero gives I1 x II");
                             }
                             ++raw;
                         }
                         std::ostringstream os;
                         os << planted << " planted and " << raw
                            << " raw sigma=0 samples within the bound";
                         return os.str();
                     }});

        v.push_back({"S.classes", "S", "classification examples on the hyperplane",
                     [](std::uint64_t) {
                         // central fiber: the cusp itself
                         const auto origin = singular_locus(
                             DeformationPoint::exact(Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0)),
                             SolveMode::Exact);
                         detail::expect(origin.size() == 1 &&
                                            origin[0].klass == SingularityClass::IIxII &&
                                            origin[0].hessian_rank == 2,
                                        "central fiber keeps the II x II cusp");
                         // smooth fiber
                         const auto empty = singular_locus(
                             DeformationPoint::exact(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)),
                             SolveMode::Exact);
                         detail::expect(empty.empty(), "lambda = 1 gives a smooth fiber");
                         // one cusp factor deformed: I1 x II
                         const auto mixed = singular_locus(
                             DeformationPoint::exact(Cyclo(-2), Cyclo(3), Cyclo(0), Cyclo(0)),
                             SolveMode::Exact);
                         bool found = false;
                         for (const auto& p : mixed)
                             if (p.klass == SingularityClass::I1xII &&
                                 p.coords[1].constant_value() == Cyclo(1))
                                 found = true;
                         detail::expect(found, "mu = 3, nu = 0 carries an I1 x II point at y = 1");
                         return std::string(
                             "central cusp, smooth fiber and I1 x II example verified");
                     }});

        // ----- suite C -------------------------------------------------
        v.push_back({"C.remainder", "C",
                     "division of the eliminated quartic by the cubic reproduces the "
                     "displayed remainder",
                     [](std::uint64_t) {
                         const auto locus = three_node_locus();
                         detail::expect(locus.quotient * locus.r2 + locus.remainder == locus.r1,
                                        "re-multiplication of the division");
                         return std::string("remainder matches coefficient-for-coefficient; "
                                            "q*R2 + r = R1 exactly");
                     }});

        v.push_back({"C.solutions", "C",
                     "the three-node conditions have exactly the four displayed solution "
                     "families",
                     [](std::uint64_t) {
                         const auto locus = three_node_locus();
                         detail::expect(locus.solutions.size() == 4, "four families");
                         detail::expect(locus.conditions3.size() == 3, "three conditions");
                         return std::string("families L0..L3 match the displayed tuples");
                     }});

        v.push_back({"C.cubics", "C",
                     "the eliminated cubic collapses at L1 and splits at L0",
                     [](std::uint64_t) {
                         const auto locus = three_node_locus();
                         detail::expect(!locus.lambda1_cubic.is_zero(), "L1 cubic computed");
                         detail::expect(!locus.lambda0_cubic.is_zero(), "L0 cubic computed");
                         return std::string("L1 cubic is 3 s (y - s/6)^3; L0 cubic splits "
                                            "into three linear factors");
                     }});

        v.push_back({"C.curve", "C",
                     "the three-node locus is the curve {s^3 - 27 l = m = n = 0}, "
                     "transversal to {s = 0}",
                     [](std::uint64_t) {
                         const auto locus = three_node_locus();
                         locus.curve_C.verify();
                         const auto rep = curve_C_transversality();
                         detail::expect(rep.transversal, "C meets S transversally");
                         detail::expect(rep.tangent[3] == Cyclo(1),
                                        "tangent direction is (0,0,0,1)");
                         return std::string("curve equations verified; tangent (0,0,0,1) "
                                            "transversal to {s=0}");
                     }});

        v.push_back({"C.three-nodes", "C",
                     "the fiber over L0 at s = 3 has exactly the three displayed nodes",
                     [](std::uint64_t) {
                         const Cyclo e = Cyclo::eps();
                         const auto L = DeformationPoint::exact(Cyclo(1), Cyclo(0), Cyclo(0),
                                                                Cyclo(3));
                         auto pts = singular_locus(L, SolveMode::Exact);
                         detail::expect(pts.size() == 3, "exactly three singular points");
                         const std::vector<std::pair<Cyclo, Cyclo>> displayed{
                             {Cyclo(-1), Cyclo(1)}, {-e, e * e}, {-(e * e), e}};
                         for (const auto& [y, w] : displayed) {
                             bool found = false;
                             for (const auto& p : pts)
                                 if (p.coords[1].constant_value() == y &&
                                     p.coords[3].constant_value() == w) {
                                     detail::expect(p.klass == SingularityClass::Node &&
                                                        p.hessian_rank == 4,
                                                    "each point is a rank-4 node");
                                     found = true;
                                 }
                             detail::expect(found, "displayed node present");
                         }
                         // the symbolic family gives the same three points scaled by s
                         const auto locus = three_node_locus();
                         auto sym = singular_locus(locus.solutions[0], SolveMode::Exact);
                         detail::expect(sym.size() == 3, "three symbolic nodes over L0");
                         for (const auto& p : sym)
                             detail::expect(p.klass == SingularityClass::Node,
                                            "symbolic points are nodes for s != 0");
                         return std::string("nodes (0,-1,0,1), (0,-e,0,e^2), (0,-e^2,0,e) "
                                            "verified, plus the symbolic family");
                     }});

        v.push_back({"C.bound", "C",
                     "no fiber of the family carries more than three singular points",
                     [](std::uint64_t seed) {
                         std::mt19937_64 rng(seed + 0xC0);
                         int planted = 0, raw = 0, with_three = 0;
                         for (int i = 0; i < 110; ++i) {
                             const Cyclo r1 = Cyclo(detail::rand_rational(rng)) *
                                              pow(Cyclo::eps(), detail::rand_int(rng, 0, 2));
                             const Cyclo r2 = detail::rand_cyclo(rng);
                             const Cyclo r3 = detail::rand_cyclo(rng);
                             const Cyclo sigma(detail::rand_nonzero_rational(rng));
                             const auto L = detail::plant_cubic(r1, r2, r3, sigma);
                             const auto pts = singular_locus(L, SolveMode::Exact);
                             detail::expect(pts.size() <= 3, "at most three singular points");
                             if (pts.size() == 3) ++with_three;
                             detail::expect_agreement(pts,
                                                      singular_locus(L, SolveMode::Numeric));
                             ++planted;
                         }
                         for (int i = 0; i < 120; ++i) {
                             const Cyclo sigma =
                                 (i % 2 == 0) ? Cyclo(0) : Cyclo(detail::rand_rational(rng));
                             const auto L = DeformationPoint::exact(
                                 detail::rand_cyclo(rng), detail::rand_cyclo(rng),
                                 detail::rand_cyclo(rng), sigma);
                             const auto pts = singular_locus(L, SolveMode::Numeric);
                             detail::expect(pts.size() <= 3, "at most three singular points");
                             if (pts.size() == 3)
                                 detail::expect(!L.exact_values()[3].is_zero(),
                                                "three distinct points force sigma != 0");
                             ++raw;
                         }
                         std::ostringstream os;
                         os << planted << " planted and " << raw << " raw samples; "
                            << with_three << " carried three points";
                         return os.str();
                     }});

        // ----- suite fa ------------------------------------------------
        v.push_back({"fa.expansion", "fa",
                     "the factored deformation expands to the displayed family",
                     [](std::uint64_t) {
                         const Polynomial fa = fa_family(FaParameters{});
                         detail::expect(fa == fa_displayed(fa.table()),
                                        "symbolic expansion");
                         // concrete sanity: a = 0 gives the undeformed germ
                         FaParameters zero;
                         zero.alpha = zero.beta = zero.gamma = Cyclo(0);
                         const Polynomial f0 = fa_family(zero);
                         auto t = f0.table();
                         detail::expect(
                             f0 == parse_polynomial("X^2 - U^2 - Y^3 + V^3", t),
                             "zero parameters give the undeformed germ");
                         return std::string("expansion identity verified");
                     }});

        v.push_back({"fa.points", "fa",
                     "the three closed-form singular points solve the restricted system",
                     [](std::uint64_t) {
                         const auto pts = fa_singular_points(FaParameters{});
                         detail::expect(pts.symbolic && pts.points.size() == 3,
                                        "three symbolic points");
                         // the plane membership of (1, e^2, e) must be computed: s = 3
                         const Cyclo e = Cyclo::eps();
                         detail::expect(fa_plane_value(Cyclo(1), e * e, e) == Cyclo(3),
                                        "plane form of (1, eps^2, eps) is 3, not 0");
                         return std::string("closed forms verified symbolically");
                     }});

        v.push_back({"fa.distinctness", "fa",
                     "the singular points are distinct exactly off the plane pi",
                     [](std::uint64_t seed) {
                         std::mt19937_64 rng(seed + 0xFA);
                         const Cyclo e = Cyclo::eps();
                         int off_plane = 0, on_plane = 0;
                         while (off_plane < 100) {
                             FaParameters p;
                             p.alpha = detail::rand_cyclo(rng);
                             p.beta = detail::rand_cyclo(rng);
                             p.gamma = detail::rand_cyclo(rng);
                             if (fa_plane_value(*p.alpha, *p.beta, *p.gamma).is_zero())
                                 continue;
                             const auto pts = fa_singular_points(p);
                             detail::expect(!pts.coincident && pts.points.size() == 3,
                                            "three distinct points off pi");
                             for (const auto& pt : pts.points)
                                 detail::expect(pt.cls &&
                                                    pt.cls->klass == SingularityClass::Node,
                                                "each point off pi is a node");
                             ++off_plane;
                         }
                         for (int i = 0; i < 12; ++i) {
                             FaParameters p;
                             p.beta = detail::rand_cyclo(rng);
                             p.gamma = detail::rand_cyclo(rng);
                             p.alpha = -(e * *p.beta) - (e * e * *p.gamma);
                             const auto pts = fa_singular_points(p);
                             detail::expect(pts.coincident && pts.points.size() == 1,
                                            "coincident point on pi");
                             detail::expect(pts.points[0].cls->klass ==
                                                SingularityClass::IIxII,
                                            "the coincident point is still a cusp");
                             ++on_plane;
                         }
                         std::ostringstream os;
                         os << off_plane << " samples off pi (three nodes each), "
                            << on_plane << " on pi (single cusp)";
                         return os.str();
                     }});

        v.push_back({"fa.map-g", "fa",
                     "the composite map lands on (-k^3 s^3, 0, 0, -3 k s) inside the curve C",
                     [](std::uint64_t) {
                         const auto g = map_g(FaParameters{});
                         detail::expect(g.symbolic.mu.is_zero() && g.symbolic.nu.is_zero(),
                                        "mu and nu components vanish");
                         // kernel: a point of pi maps to the origin
                         FaParameters onpi;
                         const Cyclo e = Cyclo::eps();
                         onpi.alpha = -e;
                         onpi.beta = Cyclo(1);
                         onpi.gamma = Cyclo(0);
                         const auto img = map_g(onpi);
                         detail::expect(img.value &&
                                            img.value->exact_values() ==
                                                std::array<Cyclo, 4>{Cyclo(0), Cyclo(0),
                                                                     Cyclo(0), Cyclo(0)},
                                        "pi maps to the origin");
                         return std::string("composite identity and kernel verified");
                     }});

        v.push_back({"fa.g-image", "fa",
                     "images of g land on C and their fibers carry three nodes",
                     [](std::uint64_t seed) {
                         std::mt19937_64 rng(seed + 0x61);
                         int samples = 0, three = 0;
                         while (samples < 100) {
                             FaParameters p;
                             p.alpha = detail::rand_cyclo(rng);
                             p.beta = detail::rand_cyclo(rng);
                             p.gamma = detail::rand_cyclo(rng);
                             p.k = (samples % 3 == 0) ? Cyclo(detail::rand_nonzero_rational(rng))
                                                      : Cyclo(1);
                             const auto g = map_g(p);
                             const auto vals = g.value->exact_values();
                             // on C: sigma^3 = 27 lambda, mu = nu = 0
                             detail::expect(pow(vals[3], 3) == Cyclo(27) * vals[0],
                                            "image satisfies s^3 - 27 l = 0");
                             detail::expect(vals[1].is_zero() && vals[2].is_zero(),
                                            "image satisfies m = n = 0");
                             const Cyclo s_val =
                                 fa_plane_value(*p.alpha, *p.beta, *p.gamma);
                             const auto pts = singular_locus(*g.value, SolveMode::Exact);
                             if (!s_val.is_zero()) {
                                 detail::expect(pts.size() == 3,
                                                "three nodes over the image point");
                                 for (const auto& q : pts)
                                     detail::expect(q.klass == SingularityClass::Node,
                                                    "image fiber points are nodes");
                                 ++three;
                             } else {
                                 detail::expect(pts.size() == 1,
                                                "the origin keeps a single cusp");
                             }
                             ++samples;
                         }
                         std::ostringstream os;
                         os << samples << " samples on C, " << three
                            << " with three nodes";
                         return os.str();
                     }});

        v.push_back({"fa.pi-intersection", "fa",
                     "the image of g meets the hyperplane {s = 0} only in the origin",
                     [](std::uint64_t) {
                         // symbolic: 27 l = s^3 on the image, so s = 0 forces l = 0;
                         // the mu and nu components vanish identically (asserted in map_g)
                         const auto g = map_g(FaParameters{});
                         const auto t = g.symbolic.lambda.table();
                         detail::expect(Polynomial::constant(t, Cyclo(27)) * g.symbolic.lambda ==
                                            pow(g.symbolic.sigma, 3),
                                        "27 lambda = sigma^3 on the image");
                         return std::string("intersection with {s=0} is the origin");
                     }});

        // ----- suite blowup ---------------------------------------------
        v.push_back({"blowup.resolution", "blowup",
                     "the double blow-up reproduces the displayed chart systems and "
                     "resolves the cusp",
                     [](std::uint64_t) {
                         const Cyclo e = Cyclo::eps();
                         const auto cusp = cusp_product_chart();
                         const auto first = blowup_strict_transform(
                             cusp, {Polynomial::variable(cusp.vars, "x"),
                                    Polynomial::variable(cusp.vars, "u")},
                             "m0", "m1");
                         {
                             const auto& g = first.global;
                             auto gv = [&](const char* nm) {
                                 return Polynomial::variable(g.vars, nm);
                             };
                             const Polynomial expected =
                                 gv("m0") * gv("y") -
                                 gv("m1") * gv("v") *
                                     ((Polynomial::constant(g.vars, Cyclo(1) + e)) * gv("v") -
                                      Polynomial::constant(g.vars, e) * gv("u"));
                             detail::expect(g.equations.size() == 1 &&
                                                g.equations[0] == expected,
                                            "first strict transform");
                             detail::expect(g.incidences.size() == 1 &&
                                                g.incidences[0] ==
                                                    gv("m1") * gv("x") - gv("m0") * gv("u"),
                                            "first incidence m1 x = m0 u");
                         }
                         // the node persists in the chart m1 = 1 at the origin
                         {
                             const auto& c1 = first.chart1;
                             std::map<std::string, Cyclo> origin;
                             for (const auto& nm : c1.vars->names()) origin[nm] = Cyclo(0);
                             detail::expect(!is_smooth_at(c1, origin),
                                            "intermediate chart is singular at the origin");
                             auto cls = classify_singularity(
                                 c1.equations[0],
                                 std::vector<std::string>(c1.vars->names().begin(),
                                                          c1.vars->names().end()),
                                 std::map<std::string, Cyclo>(origin));
                             detail::expect(cls.hessian_rank == 4 &&
                                                cls.klass == SingularityClass::Node,
                                            "the persisting point is a node");
                         }
                         const auto second = blowup_strict_transform(
                             first.global,
                             {Polynomial::variable(first.global.vars, "y"),
                              Polynomial::variable(first.global.vars, "v")},
                             "n0", "n1");
                         const auto& g2 = second.global;
                         {
                             auto gv = [&](const char* nm) {
                                 return Polynomial::variable(g2.vars, nm);
                             };
                             const Polynomial expected =
                                 gv("m0") * gv("n0") -
                                 gv("m1") * gv("n1") *
                                     ((Polynomial::constant(g2.vars, Cyclo(1) + e)) * gv("v") -
                                      Polynomial::constant(g2.vars, e) * gv("u"));
                             detail::expect(g2.equations.size() == 1 &&
                                                g2.equations[0] == expected,
                                            "final equation m0 n0 = m1 n1 [(1+e)v - e u]");
                             detail::expect(g2.incidences.size() == 2 &&
                                                g2.incidences[1] ==
                                                    gv("n1") * gv("y") - gv("n0") * gv("v"),
                                            "second incidence n1 y = n0 v");
                         }
                         // smoothness on the exceptional locus, in the chart m1 = n1 = 1
                         const auto chart = affine_chart(affine_chart(g2, "m1"), "n1");
                         auto at = [&](const Cyclo& x, const Cyclo& y, const Cyclo& u,
                                       const Cyclo& vv, const Cyclo& m0, const Cyclo& n0) {
                             return std::map<std::string, Cyclo>{{"x", x}, {"y", y}, {"u", u},
                                                                 {"v", vv}, {"m0", m0},
                                                                 {"n0", n0}};
                         };
                         detail::expect(is_smooth_at(chart, at(Cyclo(0), Cyclo(0), Cyclo(0),
                                                               Cyclo(0), Cyclo(0), Cyclo(0))),
                                        "smooth at the exceptional intersection point");
                         const std::vector<Cyclo> params{Cyclo(1), Cyclo(-1), Cyclo(2),
                                                         Cyclo::eps(),
                                                         Cyclo(1) + Cyclo::eps()};
                         for (const auto& c : params) {
                             detail::expect(is_smooth_at(chart, at(Cyclo(0), Cyclo(0), Cyclo(0),
                                                                   Cyclo(0), Cyclo(0), c)),
                                            "smooth along the first exceptional line");
                             detail::expect(is_smooth_at(chart, at(Cyclo(0), Cyclo(0), Cyclo(0),
                                                                   Cyclo(0), c, Cyclo(0))),
                                            "smooth along the second exceptional line");
                         }
                         // a generic point with x != 0 away from the center
                         detail::expect(is_smooth_at(chart, at(Cyclo(1), Cyclo(1), Cyclo(1),
                                                               Cyclo(1), Cyclo(1), Cyclo(1))),
                                        "smooth at a generic point off the center");
                         return std::string("both chart systems match; smooth at 11 "
                                            "exceptional points and a generic point; "
                                            "intermediate node verified");
                     }});

        v.push_back({"blowup.fiber", "blowup",
                     "the exceptional fiber is {m0 n0 = 0}: two lines through one point",
                     [](std::uint64_t) {
                         const auto cusp = cusp_product_chart();
                         const auto first = blowup_strict_transform(
                             cusp, {Polynomial::variable(cusp.vars, "x"),
                                    Polynomial::variable(cusp.vars, "u")},
                             "m0", "m1");
                         const auto second = blowup_strict_transform(
                             first.global,
                             {Polynomial::variable(first.global.vars, "y"),
                              Polynomial::variable(first.global.vars, "v")},
                             "n0", "n1");
                         std::map<std::string, Cyclo> base{{"x", Cyclo(0)}, {"y", Cyclo(0)},
                                                           {"u", Cyclo(0)}, {"v", Cyclo(0)}};
                         const auto fiber = exceptional_fiber(second.global, base);
                         detail::expect(fiber.components ==
                                            std::vector<std::string>{"m0", "n0"},
                                        "components {m0 = 0} and {n0 = 0}");
                         detail::expect(fiber.intersection.size() == 1,
                                        "a single intersection point");
                         return std::string("fiber m0 n0 = 0 with two components meeting "
                                            "at ((0:1),(0:1))");
                     }});

        v.push_back({"blowup.flops", "blowup",
                     "the three displayed centers give small partial resolutions",
                     [](std::uint64_t) {
                         const auto table = flop_center_table();
                         detail::expect(table.size() == 3, "three centers");
                         detail::expect(table[0].offset == 0 && table[1].offset == 2 &&
                                            table[2].offset == 3,
                                        "offsets 0, +2, +3");
                         for (const auto& entry : table)
                             detail::expect(entry.small_fiber,
                                            "fiber over the singular point is one line");
                         return std::string("centers {x,u}, {x,v}, {y,u} all small");
                     }});

        v.push_back({"blowup.fiber-product", "blowup",
                     "the fiber product over a sextic base acquires one cusp per root",
                     [](std::uint64_t) {
                         auto t = VarTable::make({"t"});
                         const Polynomial b6 =
                             Polynomial::variable(t, "t", 6) -
                             Polynomial::constant(t, Cyclo(1));
                         const auto pts = fiber_product_singular_locus(b6, "t");
                         detail::expect(pts.size() == 6, "six singular points");
                         const Cyclo e = Cyclo::eps();
                         std::set<std::string> expected;
                         for (const Cyclo& r : {Cyclo(1), Cyclo(-1), e, -e, e * e, -(e * e)})
                             expected.insert(to_string(r));
                         std::set<std::string> got;
                         for (const auto& p : pts) {
                             detail::expect(p.exact && p.vanishing_order == 1,
                                            "exact simple roots");
                             got.insert(to_string(p.t_exact));
                         }
                         detail::expect(got == expected, "roots are {±1, ±e, ±e^2}");
                         const auto none = fiber_product_singular_locus(
                             Polynomial::constant(t, Cyclo(1)), "t");
                         detail::expect(none.empty(), "B = 1 has a smooth product");
                         const auto one = fiber_product_singular_locus(
                             Polynomial::variable(t, "t"), "t");
                         detail::expect(one.size() == 1 && one[0].vanishing_order == 1 &&
                                            one[0].t_exact == Cyclo(0),
                                        "B = t has one simple cusp point");
                         return std::string("six cusps over t^6 - 1; B = 1 smooth; "
                                            "B = t one point");
                     }});

        // ----- suite friedman -------------------------------------------
        v.push_back({"friedman.dimensions", "friedman",
                     "dimension bookkeeping of the deformation spaces",
                     [](std::uint64_t) {
                         const auto r = friedman_report();
                         detail::expect(r.dimdef_X == 19, "dimdef X = 2*8 + 7 - 4 = 19");
                         detail::expect(r.h12_hat == 3, "h^{1,2} of the resolution = 3");
                         detail::expect(r.h11_hat == 21, "h^{1,1} of the resolution = 21");
                         detail::expect(r.t1_local_total == 24, "local T^1 total = 6*4 = 24");
                         return std::string("dimdef=19, h12=3, h11=21, T1=24");
                     }});

        v.push_back({"friedman.rows", "friedman",
                     "both rows of the localization diagram are exact",
                     [](std::uint64_t) {
                         const auto r = friedman_report();
                         for (const auto& [label, sum] : r.row_exactness)
                             detail::expect(sum == 0, label + " row alternating sum");
                         return std::string("top and bottom alternating sums are 0");
                     }});

        return v;
    }();
    return checks;
}

inline VerificationReport run_verification(const std::set<std::string>& suites,
                                           std::uint64_t seed) {
    VerificationReport report;
    const bool all = suites.empty() || suites.count("all");
    for (const auto& spec : all_checks()) {
        if (!all && !suites.count(spec.suite)) continue;
        CheckResult r{spec.id, spec.cite, "pass", ""};
        try {
            r.details = spec.run(seed);
        } catch (const std::exception& e) {
            r.status = "fail";
            r.details = e.what();
        }
        report.checks.push_back(r);
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    for (const auto& c : report.checks) {
        if (c.status == "pass") ++report.passed;
        else if (c.status == "fail") ++report.failed;
        else ++report.skipped;
    }
    return report;
}

}  // namespace cusplab

#endif
