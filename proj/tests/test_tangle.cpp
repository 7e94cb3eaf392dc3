#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "btinv/tangle.hpp"

using namespace btinv;

TEST_CASE("parser accepts the basic words") {
    auto t = parse_tangle_word("obj *+ ;\nT + ;\n");
    CHECK(t.pole);
    CHECK(t.source == std::vector<int>{1});
    REQUIRE(t.slices.size() == 1);
    CHECK(t.slices[0].kind == SliceKind::PoleLoop);

    auto t2 = parse_tangle_word("obj ++ ;\nX 1 + ;\nX 1 - ;\n");
    CHECK_FALSE(t2.pole);
    CHECK(t2.slices.size() == 2);

    // arity violation: crossing needs two non-pole strands
    CHECK_THROWS_AS(parse_tangle_word("obj *+ ;\nX 1 + ;\n"), ParseError);
    CHECK_THROWS_AS(parse_tangle_word("obj + ;\nT + ;\n"), ParseError);  // no pole
    CHECK_THROWS_AS(parse_tangle_word("obj ++ ;\nA 1 ;\n"), ParseError); // (+,+) cap
    CHECK_THROWS_AS(parse_tangle_word("obj + \nX 1 + ;\n"), ParseError); // missing ';'
    CHECK_THROWS_AS(parse_tangle_word("obj +*+ ;\n"), ParseError);       // pole not first
}

TEST_CASE("round-trip parse(serialize) = id") {
    auto t = parse_tangle_word(
        "obj *++ ;\n# a comment\nT + ;\nX 1 - ;\nU 2 lr ;\nA 2 ;\nX 1 + ;\n");
    CHECK(parse_tangle_word(serialize(t)) == t);
}

TEST_CASE("compose and tensor") {
    auto id = identity_word(true, {1});
    auto tau = parse_tangle_word("obj *+ ;\nT + ;\n");
    CHECK(compose(id, tau) == tau);
    CHECK(compose(tau, id) == tau);

    auto x = parse_tangle_word("obj ++ ;\nX 1 + ;\n");
    auto xi = parse_tangle_word("obj ++ ;\nX 1 - ;\n");
    auto both = compose(x, xi);
    CHECK(both.slices.size() == 2);
    CHECK_FALSE(both == identity_word(false, {1, 1}));  // not syntactically equal

    CHECK_THROWS_AS(compose(parse_tangle_word("obj +- ;\n"), parse_tangle_word("obj -+ ;\n")),
                    TangleError);

    // tensor: pole word with a 2-strand crossing
    auto tb = tensor(tau, x);
    CHECK(tb.source == std::vector<int>{1, 1, 1});
    REQUIRE(tb.slices.size() == 2);
    CHECK(tb.slices[0].kind == SliceKind::PoleLoop);
    CHECK(tb.slices[1].kind == SliceKind::Cross);
    CHECK(tb.slices[1].pos == 2);

    CHECK_THROWS_AS(tensor(tau, tau), TangleError);
    auto empty = identity_word(false, {});
    CHECK(tensor(tau, empty) == tau);
}

TEST_CASE("skeleton tracing") {
    // closed unknot around nothing: U then A
    auto k = parse_tangle_word("obj ;\nU 1 lr ;\nA 1 ;\n");
    REQUIRE(k.skel.comps.size() == 1);
    CHECK(k.skel.comps[0].circle);

    auto t = parse_tangle_word("obj *+ ;\nT + ;\n");
    REQUIRE(t.skel.comps.size() == 1);
    CHECK_FALSE(t.skel.comps[0].circle);
    CHECK(t.skel.comps[0].begin == BEnd{0, 1});
    CHECK(t.skel.comps[0].finish == BEnd{1, 1});
}

TEST_CASE("resolve_singular") {
    auto s = parse_tangle_word("obj ++ ;\nS 1 ;\n");
    auto c = resolve_singular(s, 1);
    REQUIRE(c.terms.size() == 2);
    for (auto& [k, tw] : c.terms) {
        CHECK(tw.first.slices.size() == 1);
        CHECK(tw.second == Rational(tw.first.slices[0].sign));
    }

    auto sp = parse_tangle_word("obj *+ ;\nS0 ;\n");
    auto c1 = resolve_singular(sp, 1);
    REQUIRE(c1.terms.size() == 2);
    auto c3 = resolve_singular(sp, 3);
    bool found3 = false;
    for (auto& [k, tw] : c3.terms)
        if (tw.first.slices.size() == 3) {
            found3 = true;
            CHECK(tw.second == Rational(1));
            for (auto& sl : tw.first.slices) CHECK(sl.kind == SliceKind::PoleLoop);
        }
    CHECK(found3);
    CHECK_THROWS_AS(resolve_singular(sp, 0), TangleError);

    // multilinearity: 2 singular slices -> 4 terms
    auto s2 = parse_tangle_word("obj *++ ;\nS0 ;\nS 1 ;\n");
    CHECK(resolve_singular(s2, 2).terms.size() == 4);
}

TEST_CASE("winding and twist") {
    auto id = identity_word(true, {1});
    auto wt0 = winding_and_twist(id);
    REQUIRE(wt0.size() == 1);
    CHECK(wt0[0].winding == 0);
    CHECK(wt0[0].twist == 0);

    // single curls on one strand: the under-crossing variant is the
    // positive kink with this sign convention
    auto curlp = parse_tangle_word("obj + ;\nU 1 rl ;\nX 2 - ;\nA 2 ;\n");
    auto wt1 = winding_and_twist(curlp);
    REQUIRE(wt1.size() == 1);
    CHECK(wt1[0].twist == 1);
    CHECK(wt1[0].winding == 0);
    auto curlm = parse_tangle_word("obj + ;\nU 1 rl ;\nX 2 + ;\nA 2 ;\n");
    CHECK(winding_and_twist(curlm)[0].twist == -1);

    // loop around the pole on a downward strand
    auto tau = parse_tangle_word("obj *+ ;\nT + ;\n");
    CHECK(winding_and_twist(tau)[0].winding == 1);
    auto taum = parse_tangle_word("obj *- ;\nT + ;\n");
    CHECK(winding_and_twist(taum)[0].winding == -1);
}

TEST_CASE("moves preserve boundary and change/restore words") {
    auto t = parse_tangle_word("obj *++ ;\nT + ;\nX 1 + ;\nT + ;\nX 1 + ;\nX 1 - ;\n");
    // reflection at site 0
    auto r = apply_move(t, {MoveId::Reflection, 0});
    CHECK(r.slices[0].kind == SliceKind::Cross);
    auto back = apply_move(r, {MoveId::Reflection, 0});
    CHECK(back == t);

    // R2 insert/delete
    auto t2 = apply_move(t, {MoveId::R2Insert, 2, 1, 1});
    CHECK(t2.slices.size() == t.slices.size() + 2);
    CHECK(apply_move(t2, {MoveId::R2Delete, 2}) == t);

    // kink pair
    auto t3 = apply_move(t, {MoveId::KinkPairInsert, 0, 2, 1});
    CHECK(t3.slices.size() == t.slices.size() + 6);
    CHECK(apply_move(t3, {MoveId::KinkPairDelete, 0}) == t);

    // zigzag
    auto t4 = apply_move(t, {MoveId::ZigzagInsert, 1, 1, 1, 1, 0});
    CHECK(t4.slices.size() == t.slices.size() + 2);
    CHECK(apply_move(t4, {MoveId::ZigzagDelete, 1}) == t);

    for (auto& m : enumerate_moves(t)) {
        auto u = apply_move(t, m);
        CHECK(u.levels.front() == t.levels.front());
        CHECK(u.levels.back() == t.levels.back());
    }
}

TEST_CASE("winding and twist invariant under moves") {
    std::mt19937 rng(17);
    auto t = parse_tangle_word("obj *+ ;\nU 2 lr ;\nX 1 - ;\nX 1 + ;\nA 2 ;\nT + ;\n");
    for (int step = 0; step < 60; ++step) {
        auto moves = enumerate_moves(t);
        REQUIRE(!moves.empty());
        auto m = moves[rng() % moves.size()];
        auto u = apply_move(t, m);
        auto a = winding_and_twist(t), b = winding_and_twist(u);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].winding == b[i].winding);
            CHECK(a[i].twist == b[i].twist);
        }
        if (u.slices.size() < 14) t = u;
    }
}
