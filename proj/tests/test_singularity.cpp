#include <catch2/catch_amalgamated.hpp>

#include "cusplab/locus.hpp"
#include "cusplab/parse.hpp"
#include "cusplab/singularity.hpp"
#include "support.hpp"

using namespace cusplab;

namespace {
const Cyclo kEps = Cyclo::eps();
}

TEST_CASE("tjurina basis of the threefold cusp") {
    auto t = cusp_table();
    GermPresentation g{cusp_polynomial(t), {"x", "y", "z", "w"}};
    const auto basis = tjurina_basis(g);
    REQUIRE(basis.size() == 4);
    std::set<std::string> names;
    for (const auto& m : basis) names.insert(monomial_to_string(m, t));
    REQUIRE(names == std::set<std::string>{"1", "y", "w", "y*w"});
}

TEST_CASE("tjurina basis of the plane cusp and of a smooth germ") {
    auto t = VarTable::make({"x", "y"});
    GermPresentation plane{parse_polynomial("x^2 - y^3", t), {"x", "y"}};
    const auto basis = tjurina_basis(plane);
    REQUIRE(basis.size() == 2);
    std::set<std::string> names;
    for (const auto& m : basis) names.insert(monomial_to_string(m, t));
    REQUIRE(names == std::set<std::string>{"1", "y"});

    auto t1 = VarTable::make({"x"});
    GermPresentation smooth{Polynomial::variable(t1, "x"), {"x"}};
    REQUIRE(tjurina_basis(smooth).empty());
}

TEST_CASE("germs outside the supported class are refused") {
    auto t = VarTable::make({"x", "y"});
    GermPresentation bad{parse_polynomial("x^2 + x*y + y^5", t), {"x", "y"}};
    REQUIRE_THROWS_AS(tjurina_basis(bad), NotMonomialReducible);
    // non-isolated: f = x^2 y has an unbounded quotient
    GermPresentation nonisolated{parse_polynomial("x^2*y", t), {"x", "y"}};
    REQUIRE_THROWS_AS(tjurina_basis(nonisolated), InfiniteQuotient);
}

TEST_CASE("germ presented at a nonzero base point") {
    auto t = VarTable::make({"x", "y"});
    // x^2 - (y - 1)^3 is the plane cusp centered at (0, 1)
    GermPresentation g{parse_polynomial("x^2 - (y - 1)^3", t), {"x", "y"},
                       {Cyclo(0), Cyclo(1)}};
    REQUIRE(tjurina_basis(g).size() == 2);
}

TEST_CASE("miniversal families") {
    auto t = cusp_table();
    GermPresentation cusp{cusp_polynomial(t), {"x", "y", "z", "w"}};
    const Polynomial family = miniversal_family(cusp);
    REQUIRE(family ==
            parse_polynomial("x^2 - y^3 - z^2 + w^3 + l + m*y - n*w + s*y*w",
                             family.table()));

    auto t2 = VarTable::make({"x", "y"});
    GermPresentation plane{parse_polynomial("x^2 - y^3", t2), {"x", "y"}};
    const Polynomial f2 = miniversal_family(plane);
    REQUIRE(f2 == parse_polynomial("x^2 - y^3 + l + m*y", f2.table()));

    auto t1 = VarTable::make({"x"});
    GermPresentation smooth{Polynomial::variable(t1, "x"), {"x"}};
    REQUIRE(miniversal_family(smooth) == Polynomial::variable(t1, "x"));
}

TEST_CASE("classification of the displayed germs") {
    auto t = cusp_table();
    const Polynomial F = cusp_polynomial(t);
    std::map<std::string, Cyclo> origin{
        {"x", Cyclo(0)}, {"y", Cyclo(0)}, {"z", Cyclo(0)}, {"w", Cyclo(0)}};

    auto cls = classify_singularity(F, {"x", "y", "z", "w"}, origin);
    REQUIRE(cls.hessian_rank == 2);
    REQUIRE(cls.klass == SingularityClass::IIxII);

    // mu = 3, nu = 0, sigma = 0, lambda = -2: the I1 x II case at (0,1,0,0)
    const Polynomial FL =
        parse_polynomial("x^2 - y^3 - z^2 + w^3 - 2 + 3y", t);
    std::map<std::string, Cyclo> p{{"x", Cyclo(0)}, {"y", Cyclo(1)}, {"z", Cyclo(0)},
                                   {"w", Cyclo(0)}};
    auto cls2 = classify_singularity(FL, {"x", "y", "z", "w"}, p);
    REQUIRE(cls2.hessian_rank == 3);
    REQUIRE(cls2.klass == SingularityClass::I1xII);

    // the node on the fiber over L0 at s = 3
    const Polynomial F0 = parse_polynomial("x^2 - y^3 - z^2 + w^3 + 1 + 3y*w", t);
    std::map<std::string, Cyclo> node{{"x", Cyclo(0)}, {"y", Cyclo(-1)}, {"z", Cyclo(0)},
                                      {"w", Cyclo(1)}};
    auto cls3 = classify_singularity(F0, {"x", "y", "z", "w"}, node);
    REQUIRE(cls3.hessian_rank == 4);
    REQUIRE(cls3.klass == SingularityClass::Node);

    REQUIRE_THROWS_AS(classify_singularity(
                          F, {"x", "y", "z", "w"},
                          std::map<std::string, Cyclo>{{"x", Cyclo(1)}, {"y", Cyclo(0)},
                                                       {"z", Cyclo(0)}, {"w", Cyclo(0)}}),
                      NotACriticalPoint);
}

TEST_CASE("singular locus over L0 at s = 3: three exact nodes") {
    const auto L = DeformationPoint::exact(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(3));
    const auto pts = singular_locus(L, SolveMode::Exact);
    REQUIRE(pts.size() == 3);
    const std::vector<std::pair<Cyclo, Cyclo>> displayed{
        {Cyclo(-1), Cyclo(1)}, {-kEps, kEps * kEps}, {-(kEps * kEps), kEps}};
    for (const auto& [y, w] : displayed) {
        bool found = false;
        for (const auto& p : pts) {
            if (p.coords[1].constant_value() == y && p.coords[3].constant_value() == w) {
                REQUIRE(p.coords[0].constant_value().is_zero());
                REQUIRE(p.coords[2].constant_value().is_zero());
                REQUIRE(p.klass == SingularityClass::Node);
                REQUIRE(p.hessian_rank == 4);
                REQUIRE(p.multiplicity == 1);
                found = true;
            }
        }
        REQUIRE(found);
    }
}

TEST_CASE("central fiber and smooth fiber") {
    const auto cusp = singular_locus(
        DeformationPoint::exact(Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0)), SolveMode::Exact);
    REQUIRE(cusp.size() == 1);
    REQUIRE(cusp[0].klass == SingularityClass::IIxII);
    for (const auto& c : cusp[0].coords) REQUIRE(c.is_zero());

    const auto empty = singular_locus(
        DeformationPoint::exact(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)), SolveMode::Exact);
    REQUIRE(empty.empty());
    // independent numeric oracle agrees that the fiber is smooth
    REQUIRE(testsupport::oracle_singular_points(1.0, 0.0, 0.0, 0.0).empty());
}

TEST_CASE("the collapsed fiber over L1 at s = 6") {
    // stored coordinates (-10, 9, 9, 6): the space tuple is (-10, 9, -9, 6)
    const auto L = DeformationPoint::exact(Cyclo(-10), Cyclo(9), Cyclo(9), Cyclo(6));
    const auto pts = singular_locus(L, SolveMode::Exact);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].coords[1].constant_value() == Cyclo(1));
    REQUIRE(pts[0].coords[3].constant_value() == Cyclo(-1));
    REQUIRE(pts[0].multiplicity == 3);
    REQUIRE(pts[0].klass != SingularityClass::Node);
    // polynomial-level data: rank 3 with a vanishing kernel cubic
    REQUIRE(pts[0].hessian_rank == 3);
    REQUIRE(pts[0].corank_cubic.is_zero());
    REQUIRE(pts[0].klass == SingularityClass::DegenerateOther);
}

TEST_CASE("exact against the independent numeric oracle on planted fibers") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 40; ++i) {
        const Cyclo r1 = Cyclo(testsupport::rand_rational(rng)) *
                         pow(kEps, testsupport::rand_int(rng, 0, 2));
        const Cyclo r2 = testsupport::rand_cyclo(rng);
        const Cyclo r3 = testsupport::rand_cyclo(rng);
        Cyclo sigma;
        do { sigma = Cyclo(testsupport::rand_rational(rng)); } while (sigma.is_zero());

        const Cyclo sum = r1 + r2 + r3;
        const Cyclo sym2 = r1 * r2 + r1 * r3 + r2 * r3;
        const Cyclo prod = r1 * r2 * r3;
        const Cyclo nu = sigma * sum * Cyclo(Rational(1, 2));
        const Cyclo mu = Cyclo(3) * sym2;
        const Cyclo lambda =
            (Cyclo(-3) * sigma * prod - Cyclo(2) * mu * nu) / (Cyclo(3) * sigma);
        const auto L = DeformationPoint::exact(lambda, mu, nu, sigma);

        const auto exact = singular_locus(L, SolveMode::Exact);
        REQUIRE(exact.size() <= 3);
        const auto oracle = testsupport::oracle_singular_points(
            embed(lambda), embed(mu), embed(nu), embed(sigma));
        REQUIRE(exact.size() == oracle.size());
        for (const auto& p : exact) {
            const auto py = embed(p.coords[1].constant_value());
            const auto pw = embed(p.coords[3].constant_value());
            bool matched = false;
            for (const auto& [oy, ow] : oracle)
                if (std::abs(py - oy) + std::abs(pw - ow) < 1e-8) matched = true;
            REQUIRE(matched);
        }
    }
}

TEST_CASE("numeric mode reports the collapsed triple point") {
    // stored (-10, 9, 9, 6): the unique singular point with the collapsed cubic
    const auto pts = singular_locus_numeric({-10.0, 9.0, 9.0, 6.0});
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].multiplicity == 3);
    REQUIRE(std::abs(pts[0].coords_numeric[1] - 1.0) < 1e-8);
    REQUIRE(std::abs(pts[0].coords_numeric[3] + 1.0) < 1e-8);
    REQUIRE(pts[0].klass == SingularityClass::DegenerateOther);
}

TEST_CASE("indistinguishable singular points raise the ambiguity error") {
    // cubic roots 0, 0.98e-6 and 1: the first two are closer than the
    // separation threshold yet incompatible with a double root
    const double d = 0.98e-6;
    const double sum = 1.0 + d, sym2 = d, prod = 0.0;
    const double s = 1.0;
    const double n = s * sum / 2.0, m = 3.0 * sym2;
    const double l = (-3.0 * s * prod - 2.0 * m * n) / (3.0 * s);
    REQUIRE_THROWS_AS(singular_locus_numeric({l, m, n, s}), ToleranceAmbiguity);
}

TEST_CASE("numeric mode on raw draws stays within the count bounds") {
    std::mt19937_64 rng(59);
    for (int i = 0; i < 80; ++i) {
        const Cyclo sigma = (i % 2 == 0) ? Cyclo(0) : testsupport::rand_cyclo(rng);
        const auto L = DeformationPoint::exact(testsupport::rand_cyclo(rng),
                                               testsupport::rand_cyclo(rng),
                                               testsupport::rand_cyclo(rng), sigma);
        const auto pts = singular_locus(L, SolveMode::Numeric);
        REQUIRE(pts.size() <= 3);
        if (sigma.is_zero()) REQUIRE(pts.size() <= 2);
        if (pts.size() == 3) REQUIRE_FALSE(sigma.is_zero());
        for (const auto& p : pts) {
            REQUIRE((p.klass == SingularityClass::Node ? p.hessian_rank == 4
                                                       : p.hessian_rank < 4));
        }
    }
}

TEST_CASE("symbolic singular locus of the solution families") {
    // L0: lambda = s^3/27, sigma = s. Three nodes scaled by s.
    auto st = VarTable::make({"s"});
    const Polynomial s = Polynomial::variable(st, "s");
    auto c = [&](const Cyclo& q) { return Polynomial::constant(st, q); };
    DeformationPoint L0{c(Cyclo(Rational(1, 27))) * pow(s, 3), Polynomial::zero(st),
                        Polynomial::zero(st), s};
    const auto pts = singular_locus(L0, SolveMode::Exact);
    REQUIRE(pts.size() == 3);
    const Cyclo third(Rational(1, 3));
    std::set<std::string> ys;
    for (const auto& p : pts) {
        REQUIRE(p.klass == SingularityClass::Node);
        ys.insert(to_string(p.coords[1]));
        // w = -y^2 * 3 / s ... for L0 the points satisfy w = 3y^2/s
        REQUIRE(p.coords[3] ==
                univariate_division(Polynomial::constant(st, Cyclo(3)) * p.coords[1] *
                                        p.coords[1],
                                    s, "s")
                    .quotient);
    }
    REQUIRE(ys == std::set<std::string>{to_string(c(-third) * s),
                                        to_string(c(-third * kEps) * s),
                                        to_string(c(-third * kEps * kEps) * s)});

    // L1: the triple point (0, s/6, 0, -s/6), not a node
    DeformationPoint L1{c(Cyclo(Rational(-5, 108))) * pow(s, 3),
                        c(Cyclo(Rational(1, 4))) * s * s,
                        c(Cyclo(Rational(1, 4))) * s * s, s};
    const auto pts1 = singular_locus(L1, SolveMode::Exact);
    REQUIRE(pts1.size() == 1);
    REQUIRE(pts1[0].multiplicity == 3);
    REQUIRE(pts1[0].coords[1] == c(Cyclo(Rational(1, 6))) * s);
    REQUIRE(pts1[0].coords[3] == c(Cyclo(Rational(-1, 6))) * s);
    REQUIRE(pts1[0].klass != SingularityClass::Node);
}

TEST_CASE("degenerate classifier shapes") {
    auto t = cusp_table();
    std::map<std::string, Cyclo> origin{
        {"x", Cyclo(0)}, {"y", Cyclo(0)}, {"z", Cyclo(0)}, {"w", Cyclo(0)}};
    // rank 3 with a vanishing kernel cubic
    const auto flat = classify_singularity(parse_polynomial("x^2 + y^2 + z^2", t),
                                           {"x", "y", "z", "w"}, origin);
    REQUIRE(flat.hessian_rank == 3);
    REQUIRE(flat.corank_cubic.is_zero());
    REQUIRE(flat.klass == SingularityClass::DegenerateOther);
    // rank below the supported corank range
    const auto line = classify_singularity(parse_polynomial("x^2", t),
                                           {"x", "y", "z", "w"}, origin);
    REQUIRE(line.hessian_rank == 1);
    REQUIRE(line.klass == SingularityClass::DegenerateOther);
    // rank 2 whose kernel cubes are not both pure
    const auto mixed = classify_singularity(parse_polynomial("x^2 - z^2 + w^3", t),
                                            {"x", "y", "z", "w"}, origin);
    REQUIRE(mixed.hessian_rank == 2);
    REQUIRE(mixed.klass == SingularityClass::DegenerateOther);
}

TEST_CASE("symbolic locus of the twisted families") {
    // L2 = (-5 s^3/108, eps^2 s^2/4, eps s^2/4, s): the collapsed point
    // twists by a cube root of unity
    auto st = VarTable::make({"s"});
    const Polynomial s = Polynomial::variable(st, "s");
    auto c = [&](const Cyclo& q) { return Polynomial::constant(st, q); };
    DeformationPoint L2{c(Cyclo(Rational(-5, 108))) * pow(s, 3),
                        c(Cyclo(Rational(1, 4)) * kEps * kEps) * s * s,
                        c(Cyclo(Rational(1, 4)) * kEps) * s * s, s};
    const auto pts = singular_locus(L2, SolveMode::Exact);
    REQUIRE(pts.size() == 1);
    REQUIRE(pts[0].multiplicity == 3);
    REQUIRE(pts[0].coords[1] == c(Cyclo(Rational(1, 6)) * kEps) * s);
    REQUIRE(pts[0].klass == SingularityClass::DegenerateOther);
}

TEST_CASE("deformation points depending on several parameters are refused") {
    auto pt = VarTable::make({"s", "k"});
    DeformationPoint bad{Polynomial::variable(pt, "k"), Polynomial::zero(pt),
                         Polynomial::zero(pt), Polynomial::variable(pt, "s")};
    REQUIRE_THROWS_AS(singular_locus(bad, SolveMode::Exact), Error);
}

TEST_CASE("planted vanishing orders of the fiber product") {
    std::mt19937_64 rng(73);
    auto t = VarTable::make({"t"});
    const Polynomial tv = Polynomial::variable(t, "t");
    for (int i = 0; i < 25; ++i) {
        // distinct special-form roots with multiplicities summing to <= 6
        std::vector<std::pair<Cyclo, int>> plan;
        int degree_left = 6;
        while (degree_left > 0 && plan.size() < 3) {
            const Cyclo r = Cyclo(testsupport::rand_rational(rng, 3, 2)) *
                            pow(kEps, testsupport::rand_int(rng, 0, 2));
            bool dup = false;
            for (const auto& [q, mm] : plan)
                if (q == r) dup = true;
            if (dup) continue;
            const int m = testsupport::rand_int(rng, 1, std::min(degree_left, 3));
            plan.emplace_back(r, m);
            degree_left -= m;
        }
        Polynomial B = Polynomial::constant(t, Cyclo(1));
        for (const auto& [r, m] : plan)
            B *= pow(tv - Polynomial::constant(t, r), m);
        const auto pts = fiber_product_singular_locus(B, "t");
        REQUIRE(pts.size() == plan.size());
        for (const auto& [r, m] : plan) {
            bool found = false;
            for (const auto& p : pts)
                if (p.exact && p.t_exact == r && p.vanishing_order == m) found = true;
            REQUIRE(found);
        }
    }
}

TEST_CASE("each exact record satisfies the fiber equation and its partials") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; ++i) {
        const Cyclo y0 = testsupport::rand_cyclo(rng);
        const Cyclo w0 = testsupport::rand_cyclo(rng);
        const Cyclo mu = Cyclo(3) * y0 * y0, nu = Cyclo(3) * w0 * w0;
        const Cyclo lambda =
            (Cyclo(2) * nu * w0 - Cyclo(2) * mu * y0) * Cyclo(Rational(1, 3));
        const auto L = DeformationPoint::exact(lambda, mu, nu, Cyclo(0));
        const auto pts = singular_locus(L, SolveMode::Exact);
        REQUIRE(!pts.empty());
        const Polynomial f = fiber_polynomial(L);
        for (const auto& p : pts) {
            std::map<std::string, Cyclo> at;
            for (const auto& nm : f.table()->names()) at[nm] = Cyclo(0);
            at["y"] = p.coords[1].constant_value();
            at["w"] = p.coords[3].constant_value();
            REQUIRE(evaluate(f, at).is_zero());
            for (const char* v : {"x", "y", "z", "w"})
                REQUIRE(evaluate(derivative(f, v), at).is_zero());
        }
    }
}

TEST_CASE("fiber product singular locus over a sextic") {
    auto t = VarTable::make({"t"});
    const Polynomial b6 =
        Polynomial::variable(t, "t", 6) - Polynomial::constant(t, Cyclo(1));
    const auto pts = fiber_product_singular_locus(b6, "t");
    REQUIRE(pts.size() == 6);
    std::set<std::string> roots;
    for (const auto& p : pts) {
        REQUIRE(p.exact);
        REQUIRE(p.vanishing_order == 1);
        roots.insert(to_string(p.t_exact));
    }
    std::set<std::string> expected;
    for (const Cyclo& r :
         {Cyclo(1), Cyclo(-1), kEps, -kEps, kEps * kEps, -(kEps * kEps)})
        expected.insert(to_string(r));
    REQUIRE(roots == expected);
}

TEST_CASE("fiber product edge cases") {
    auto t = VarTable::make({"t"});
    REQUIRE(fiber_product_singular_locus(Polynomial::constant(t, Cyclo(1)), "t").empty());

    const auto one = fiber_product_singular_locus(Polynomial::variable(t, "t"), "t");
    REQUIRE(one.size() == 1);
    REQUIRE(one[0].t_exact == Cyclo(0));
    REQUIRE(one[0].vanishing_order == 1);

    // a double root raises the vanishing order
    const auto dbl = fiber_product_singular_locus(
        parse_polynomial("t^2 (t - 1)", t), "t");
    REQUIRE(dbl.size() == 2);
    for (const auto& p : dbl) {
        if (p.t_exact == Cyclo(0)) REQUIRE(p.vanishing_order == 2);
        else REQUIRE((p.t_exact == Cyclo(1) && p.vanishing_order == 1));
    }

    REQUIRE_THROWS_AS(fiber_product_singular_locus(Polynomial::zero(t), "t"), Error);
    REQUIRE_THROWS_AS(
        fiber_product_singular_locus(Polynomial::variable(t, "t", 7), "t"), Error);
}

TEST_CASE("numeric fallback of the fiber product") {
    auto t = VarTable::make({"t"});
    // t^2 - 2 does not split over the field; the numeric path reports both roots
    const auto pts = fiber_product_singular_locus(parse_polynomial("t^2 - 2", t), "t");
    REQUIRE(pts.size() == 2);
    for (const auto& p : pts) {
        REQUIRE_FALSE(p.exact);
        REQUIRE(std::abs(std::abs(p.t_numeric.real()) - std::sqrt(2.0)) < 1e-9);
    }
}
