#include <catch2/catch_amalgamated.hpp>

#include "cusplab/parse.hpp"
#include "cusplab/report.hpp"
#include "cusplab/verifier.hpp"
#include "support.hpp"

using namespace cusplab;

namespace {
const Cyclo kEps = Cyclo::eps();
}

TEST_CASE("induced image is the hyperplane {s = 0}") {
    const auto S = induced_image_S();
    REQUIRE(S.equations.size() == 1);
    REQUIRE(S.equations[0] == Polynomial::variable(S.equations[0].table(), "s"));

    REQUIRE(induced_deformation(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)) ==
            DeformationPoint::exact(Cyclo(1), Cyclo(0), Cyclo(0), Cyclo(0)));
    REQUIRE(induced_deformation(Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0)) ==
            DeformationPoint::exact(Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(0)));
    // (2,3;5,7) -> (-3, 3, -7, 0) as a deformation-space tuple
    const auto p = induced_deformation(Cyclo(2), Cyclo(3), Cyclo(5), Cyclo(7));
    REQUIRE(p.lambda.constant_value() == Cyclo(-3));
    REQUIRE(p.mu.constant_value() == Cyclo(3));
    REQUIRE(p.nu.constant_value() == Cyclo(7));  // stored with the family sign
    REQUIRE(p.space_tuple()[2].constant_value() == Cyclo(-7));
    REQUIRE(p.sigma.constant_value().is_zero());
}

TEST_CASE("three-node locus reproduces every displayed identity") {
    const auto locus = three_node_locus();

    // R1, R2 and the remainder shape
    const auto t = locus.r1.table();
    REQUIRE(locus.r1 ==
            parse_polynomial("27y^4 - 18m*y^2 + s^3*y + 3m^2 - n*s^2", t));
    REQUIRE(locus.r2 ==
            parse_polynomial("3s*y^3 - 6n*y^2 + m*s*y + 2m*n + 3l*s", t));
    REQUIRE(locus.quotient * locus.r2 + locus.remainder == locus.r1);
    REQUIRE(locus.conditions3.size() == 3);

    // the four families in stored coordinates
    REQUIRE(locus.solutions.size() == 4);
    auto st = locus.solutions[0].lambda.table();
    const Polynomial s = Polynomial::variable(st, "s");
    auto c = [&](const Cyclo& q) { return Polynomial::constant(st, q); };
    REQUIRE(locus.solutions[0].lambda == c(Cyclo(Rational(1, 27))) * pow(s, 3));
    REQUIRE(locus.solutions[0].mu.is_zero());
    REQUIRE(locus.solutions[0].nu.is_zero());
    REQUIRE(locus.solutions[1].lambda == c(Cyclo(Rational(-5, 108))) * pow(s, 3));
    REQUIRE(locus.solutions[1].mu == c(Cyclo(Rational(1, 4))) * s * s);
    REQUIRE(locus.solutions[1].nu == c(Cyclo(Rational(1, 4))) * s * s);
    REQUIRE(locus.solutions[2].mu == c(Cyclo(Rational(1, 4)) * kEps * kEps) * s * s);
    REQUIRE(locus.solutions[2].nu == c(Cyclo(Rational(1, 4)) * kEps) * s * s);
    REQUIRE(locus.solutions[3].mu == c(Cyclo(Rational(1, 4)) * kEps) * s * s);
    REQUIRE(locus.solutions[3].nu == c(Cyclo(Rational(1, 4)) * kEps * kEps) * s * s);

    // the collapsed cubic and the split cubic
    auto yt = locus.lambda1_cubic.table();
    const Polynomial yy = Polynomial::variable(yt, "y");
    const Polynomial sy = Polynomial::variable(yt, "s");
    auto yc = [&](const Cyclo& q) { return Polynomial::constant(yt, q); };
    REQUIRE(locus.lambda1_cubic ==
            yc(Cyclo(3)) * sy * pow(yy - yc(Cyclo(Rational(1, 6))) * sy, 3));
    REQUIRE(locus.lambda0_cubic ==
            yc(Cyclo(3)) * sy *
                (pow(yy, 3) + yc(Cyclo(Rational(1, 27))) * pow(sy, 3)));

    // curve C meets S only at the origin
    REQUIRE(locus.curve_C.equations.size() == 3);
    locus.curve_C.verify();
}

TEST_CASE("transversality of C against S") {
    const auto rep = curve_C_transversality();
    REQUIRE(rep.tangent ==
            std::array<Cyclo, 4>{Cyclo(0), Cyclo(0), Cyclo(0), Cyclo(1)});
    REQUIRE(rep.s_equation_at_tangent == Cyclo(1));
    REQUIRE(rep.transversal);
}

TEST_CASE("factored family expands to the displayed polynomial") {
    const Polynomial fa = fa_family(FaParameters{});
    REQUIRE(fa == fa_displayed(fa.table()));

    FaParameters zero;
    zero.alpha = zero.beta = zero.gamma = Cyclo(0);
    const Polynomial f0 = fa_family(zero);
    REQUIRE(f0 == parse_polynomial("X^2 - U^2 - Y^3 + V^3", f0.table()));

    // nonzero xi, upsilon disappear into the translation
    FaParameters with_xi;
    with_xi.xi = Cyclo(5);
    with_xi.upsilon = Cyclo(-7);
    REQUIRE(fa_family(with_xi) == fa_displayed(fa.table()));
}

TEST_CASE("plane membership is computed, never assumed") {
    REQUIRE(fa_plane_value(Cyclo(1), kEps * kEps, kEps) == Cyclo(3));
    REQUIRE(fa_plane_value(-kEps, Cyclo(1), Cyclo(0)).is_zero());
}

TEST_CASE("closed-form singular points of the factored family") {
    const auto sym = fa_singular_points(FaParameters{});
    REQUIRE(sym.symbolic);
    REQUIRE(sym.points.size() == 3);

    // concrete off the plane: three distinct nodes
    FaParameters p;
    p.alpha = Cyclo(1);
    p.beta = Cyclo(0);
    p.gamma = Cyclo(0);
    const auto off = fa_singular_points(p);
    REQUIRE_FALSE(off.coincident);
    REQUIRE(off.points.size() == 3);
    for (const auto& pt : off.points) {
        REQUIRE(pt.cls.has_value());
        REQUIRE(pt.cls->klass == SingularityClass::Node);
    }

    // concrete on the plane: a single coincident cusp
    FaParameters q;
    q.alpha = -kEps;
    q.beta = Cyclo(1);
    q.gamma = Cyclo(0);
    const auto on = fa_singular_points(q);
    REQUIRE(on.coincident);
    REQUIRE(on.points.size() == 1);
    REQUIRE(on.points[0].cls->klass == SingularityClass::IIxII);

    // the central fiber: all parameters zero, the cusp at the origin
    FaParameters z;
    z.alpha = z.beta = z.gamma = Cyclo(0);
    const auto central = fa_singular_points(z);
    REQUIRE(central.coincident);
    REQUIRE(central.points.size() == 1);
    REQUIRE(central.points[0].Y.is_zero());
    REQUIRE(central.points[0].V.is_zero());
    REQUIRE(central.points[0].cls->klass == SingularityClass::IIxII);
}

TEST_CASE("map g lands on the curve C") {
    const auto g = map_g(FaParameters{});
    REQUIRE(g.symbolic.mu.is_zero());
    REQUIRE(g.symbolic.nu.is_zero());

    // a point of the plane pi maps to the origin
    FaParameters onpi;
    onpi.alpha = -kEps;
    onpi.beta = Cyclo(1);
    onpi.gamma = Cyclo(0);
    const auto img = map_g(onpi);
    REQUIRE(img.value.has_value());
    for (const auto& c : img.value->exact_values()) REQUIRE(c.is_zero());

    // zero scale is refused
    FaParameters zk;
    zk.alpha = Cyclo(1);
    zk.beta = Cyclo(0);
    zk.gamma = Cyclo(0);
    zk.k = Cyclo(0);
    REQUIRE_THROWS_AS(map_g(zk), ZeroScale);

    // random exact parameters: the image satisfies the curve equations
    std::mt19937_64 rng(67);
    for (int i = 0; i < 30; ++i) {
        FaParameters r;
        r.alpha = testsupport::rand_cyclo(rng);
        r.beta = testsupport::rand_cyclo(rng);
        r.gamma = testsupport::rand_cyclo(rng);
        const auto gi = map_g(r);
        const auto vals = gi.value->exact_values();
        REQUIRE(pow(vals[3], 3) == Cyclo(27) * vals[0]);
        REQUIRE(vals[1].is_zero());
        REQUIRE(vals[2].is_zero());
    }
}

TEST_CASE("cross-module: fibers over the image of g") {
    std::mt19937_64 rng(71);
    int three = 0;
    for (int i = 0; i < 25; ++i) {
        FaParameters r;
        r.alpha = testsupport::rand_cyclo(rng);
        r.beta = testsupport::rand_cyclo(rng);
        r.gamma = testsupport::rand_cyclo(rng);
        const auto gi = map_g(r);
        const Cyclo s = fa_plane_value(*r.alpha, *r.beta, *r.gamma);
        const auto pts = singular_locus(*gi.value, SolveMode::Exact);
        if (s.is_zero()) {
            REQUIRE(pts.size() == 1);
        } else {
            REQUIRE(pts.size() == 3);
            for (const auto& p : pts) REQUIRE(p.klass == SingularityClass::Node);
            ++three;
        }
    }
    REQUIRE(three >= 20);
}

TEST_CASE("dimension bookkeeping") {
    const auto r = friedman_report();
    REQUIRE(r.dimdef_X == 19);
    REQUIRE(r.dimdef_Xhat == 3);
    REQUIRE(r.h12_tilde == 19);
    REQUIRE(r.h11_tilde == 19);
    REQUIRE(r.h12_hat == 3);
    REQUIRE(r.h11_hat == 21);
    REQUIRE(r.t1_local_total == 24);
    REQUIRE(r.t1_X == 24);
    REQUIRE(r.row_exactness.size() == 2);
    for (const auto& [label, sum] : r.row_exactness) REQUIRE(sum == 0);
}

TEST_CASE("verification suites are green end to end") {
    const auto report = run_verification({}, 0);
    REQUIRE(report.failed == 0);
    REQUIRE(report.passed == static_cast<int>(report.checks.size()));
    // ids are unique and sorted
    for (std::size_t i = 1; i < report.checks.size(); ++i)
        REQUIRE(report.checks[i - 1].id < report.checks[i].id);
}
