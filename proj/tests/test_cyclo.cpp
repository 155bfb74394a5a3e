#include <catch2/catch_amalgamated.hpp>

#include "cusplab/cyclo.hpp"
#include "support.hpp"

using namespace cusplab;

TEST_CASE("eps satisfies the reduction rule") {
    const Cyclo e = Cyclo::eps();
    REQUIRE(e * e == Cyclo(Rational(-1), Rational(-1)));  // eps^2 = -1 - eps
    REQUIRE(e * (Cyclo(-1) - e) == Cyclo(1));             // eps * eps^2 = 1
    REQUIRE(Cyclo(1) + e + e * e == Cyclo(0));
    REQUIRE(pow(e, 3) == Cyclo(1));
}

TEST_CASE("product of the displayed factors is 3") {
    const Cyclo e = Cyclo::eps();
    const Cyclo lhs = (Cyclo(1) - e) * (Cyclo(1) - e * e);
    REQUIRE(lhs == Cyclo(3));
    // independent oracle: evaluate both sides in floating complex arithmetic
    const auto z = (std::complex<double>(1, 0) - embed(e)) *
                   (std::complex<double>(1, 0) - embed(e * e));
    REQUIRE(std::abs(z - std::complex<double>(3, 0)) < 1e-12);
}

TEST_CASE("inverses") {
    const Cyclo e = Cyclo::eps();
    REQUIRE(inverse(Cyclo(1)) == Cyclo(1));
    REQUIRE(inverse(e) == Cyclo(-1) - e);  // eps^-1 = eps^2
    const Cyclo x = Cyclo(1) - e;
    const Cyclo xi = inverse(x);
    REQUIRE(xi == Cyclo(Rational(2, 3), Rational(1, 3)));  // (2+eps)/3
    REQUIRE(x * xi == Cyclo(1));
    REQUIRE_THROWS_AS(inverse(Cyclo(0)), DivisionByZero);
}

TEST_CASE("embedding values") {
    const Cyclo e = Cyclo::eps();
    REQUIRE(embed(Cyclo(0)) == std::complex<double>(0, 0));
    REQUIRE(std::abs(embed(e) - std::complex<double>(-0.5, 0.86602540378443865)) < 1e-15);
    REQUIRE(std::abs(embed(Cyclo(1) + e) - std::complex<double>(0.5, 0.86602540378443865)) <
            1e-15);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Cyclo a = testsupport::rand_cyclo(rng);
        const Cyclo b = testsupport::rand_cyclo(rng);
        const Cyclo c = testsupport::rand_cyclo(rng);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) REQUIRE(a * inverse(a) == Cyclo(1));
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const Cyclo a = testsupport::rand_cyclo(rng);
        const Cyclo b = testsupport::rand_cyclo(rng);
        REQUIRE(std::abs(embed(a + b) - (embed(a) + embed(b))) < 1e-12);
        REQUIRE(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-12);
    }
}

TEST_CASE("norm and conjugate") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 50; ++i) {
        const Cyclo a = testsupport::rand_cyclo(rng);
        REQUIRE(a * conj(a) == Cyclo(norm(a)));
        REQUIRE(norm(a) >= 0);
    }
}

TEST_CASE("square roots in the field") {
    const auto r = sqrt_in_field(Cyclo(-3));
    REQUIRE(r.has_value());
    REQUIRE(*r * *r == Cyclo(-3));  // 1 + 2 eps squares to -3
    REQUIRE_FALSE(sqrt_in_field(Cyclo(2)).has_value());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        const Cyclo a = testsupport::rand_cyclo(rng);
        const auto s = sqrt_in_field(a * a);
        REQUIRE(s.has_value());
        REQUIRE(*s * *s == a * a);
    }
}
