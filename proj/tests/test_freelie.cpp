#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "btinv/freelie.hpp"

using namespace btinv;

namespace {
FreeSeries rand_lie(int alphabet, int cap, std::mt19937& rng) {
    FreeSeries x(alphabet, cap);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int d = 1; d <= cap; ++d)
        for (auto& lw : lyndon_basis(alphabet, d)) {
            int c = coef(rng);
            if (!c) continue;
            for (auto& [w, e] : lw.expansion) x.add_to(w, e * c);
        }
    return x;
}
}  // namespace

TEST_CASE("lyndon word counts follow Witt's formula") {
    // alphabet 2: degrees 1..6 -> 2,1,2,3,6,9 ; alphabet 3: 3,3,8,18,48,116
    int w2[] = {2, 1, 2, 3, 6, 9};
    int w3[] = {3, 3, 8, 18, 48, 116};
    for (int d = 1; d <= 6; ++d) {
        CHECK((int)lyndon_basis(2, d).size() == w2[d - 1]);
        CHECK((int)lyndon_basis(3, d).size() == w3[d - 1]);
    }
    auto l2 = lyndon_basis(2, 2);
    REQUIRE(l2.size() == 1);
    CHECK(l2[0].word == std::string({0, 1}));
    // [a,b] = ab - ba
    CHECK(l2[0].expansion.at(std::string({0, 1})) == Rational(1));
    CHECK(l2[0].expansion.at(std::string({1, 0})) == Rational(-1));
    auto l3 = lyndon_basis(2, 3);
    REQUIRE(l3.size() == 2);
    CHECK(l3[0].word == std::string({0, 0, 1}));
    CHECK(l3[1].word == std::string({0, 1, 1}));
}

TEST_CASE("exp and log are mutually inverse") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        int alphabet = 2 + (trial % 2);
        int cap = 1 + trial % 4;
        FreeSeries x(alphabet, cap);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int d = 1; d <= cap; ++d) {
            // random associative (not merely Lie) positive-degree element
            int nwords = 3;
            for (int j = 0; j < nwords; ++j) {
                std::string w;
                for (int i = 0; i < d; ++i) w.push_back((char)(rng() % alphabet));
                x.add_to(w, coef(rng));
            }
        }
        CHECK(series_log(series_exp(x)) == x);
    }
}

TEST_CASE("exp basics") {
    FreeSeries a = FreeSeries::letter(2, 3, 0), b = FreeSeries::letter(2, 3, 1);
    CHECK(series_exp(a) * series_exp(a) == series_exp(a.scaled(2)));
    FreeSeries br = commutator(a, b);
    FreeSeries e = series_exp(br);
    CHECK(e.coeff(std::string({0, 1})) == Rational(1));
    CHECK(e.coeff(std::string({1, 0})) == Rational(-1));
    FreeSeries g = series_inverse(series_exp(a));
    CHECK(g == series_exp(a.scaled(-1)));
}

TEST_CASE("group-like detection") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        FreeSeries L = rand_lie(2 + trial % 2, 1 + trial % 4, rng);
        CHECK(is_group_like(series_exp(L)).ok);
    }
    // 1 + ab is not group-like
    FreeSeries bad = FreeSeries::unit(2, 2);
    bad.add_to(std::string({0, 1}), 1);
    auto rep = is_group_like(bad);
    CHECK_FALSE(rep.ok);
    CHECK(rep.failing_degree == 2);
    CHECK(is_group_like(FreeSeries::unit(2, 3)).ok);
}

TEST_CASE("substitution is an algebra map") {
    // target: the same free algebra, images of degree >= 1
    AlgebraOps<FreeSeries> ops{
        FreeSeries::unit(2, 4),
        [](const FreeSeries& x, const FreeSeries& y) { return x * y; },
        [](const FreeSeries& x, const FreeSeries& y) { return x + y; },
        [](const FreeSeries& x, const Rational& r) { return x.scaled(r); }};
    std::mt19937 rng(3);
    std::vector<FreeSeries> images = {rand_lie(2, 4, rng), rand_lie(2, 4, rng)};
    for (int trial = 0; trial < 10; ++trial) {
        FreeSeries f = series_exp(rand_lie(2, 4, rng)), g = series_exp(rand_lie(2, 4, rng));
        auto sf = substitute(f, images, ops), sg = substitute(g, images, ops);
        auto sfg = substitute(f * g, images, ops);
        CHECK(sfg == sf * sg);
    }
    CHECK(substitute(FreeSeries::unit(2, 4), images, ops) == ops.unit);
}

TEST_CASE("series text round-trip") {
    std::mt19937 rng(5);
    FreeSeries f = series_exp(rand_lie(3, 3, rng));
    CHECK(freeseries_parse(freeseries_str(f), 3, 3) == f);
}
