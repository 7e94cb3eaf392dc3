#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btinv/cyclotomic.hpp"
#include "btinv/rational.hpp"
#include "btinv/series_rings.hpp"

using namespace btinv;

TEST_CASE("rational parse/print") {
    CHECK(rat_parse("3/6") == rat_of(1, 2));
    CHECK(rat_str(rat_of(-7, 3)) == "-7/3");
    CHECK(rat_parse("-4") == rat_of(-4));
    CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<Rational>{1, 0, 0, 0, 1});
}

TEST_CASE("Q(zeta_m) arithmetic") {
    for (int m : {1, 2, 3, 4, 6, 8}) {
        CAPTURE(m);
        Cyclo z = Cyclo::zeta_pow(m, 1);
        // zeta^m = 1
        Cyclo p = Cyclo::one(m);
        for (int i = 0; i < m; ++i) p = p * z;
        CHECK(p == Cyclo::one(m));
        // inverse
        Cyclo s = z + Cyclo::one(m) * rat_of(2);
        CHECK(s * s.inverse() == Cyclo::one(m));
        // galois involution fixes rationals and inverts zeta
        CHECK(z.galois(m - 1) == Cyclo::zeta_pow(m, -1));
    }
    // primitive 6th root: z^2 = z - 1
    Cyclo z6 = Cyclo::zeta_pow(6, 1);
    CHECK(z6 * z6 == z6 - Cyclo::one(6));
    // sum of all m-th roots of unity vanishes
    Cyclo sum = Cyclo::zero(6);
    for (int k = 0; k < 6; ++k) sum += Cyclo::zeta_pow(6, k);
    CHECK(sum.is_zero());
}

TEST_CASE("poly and truncated series") {
    using P = Poly<Cyclo>;
    auto c = [](long v) { return Cyclo(4, rat_of(v)); };
    P x = P::monomial(c(1), 1);
    P p = x * x + P::constant(c(2));
    CHECK(p.a.at(2) == c(1));
    CHECK(p.a.at(0) == c(2));

    Trunc<Rational> t(3);
    t.c = {1, 1, 0, 0};  // 1 + h
    auto sq = t * t;
    CHECK(sq.c == std::vector<Rational>{1, 2, 1, 0});

    Mat<Rational> m = Mat<Rational>::identity(2, 0, 1);
    m.at(0, 1) = 5;
    auto mm = m * m;
    CHECK(mm.at(0, 1) == rat_of(10));
    auto kr = m.kron(Mat<Rational>::identity(2, 0, 1));
    CHECK(kr.rows == 4);
    CHECK(kr.at(0, 2) == rat_of(5));
}
