#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btinv/diagram.hpp"

using namespace btinv;

namespace {
Skeleton wsk(const std::string& w) {
    bool pole;
    auto v = word_parse(w, &pole);
    return Skeleton::identity(pole, v);
}
}  // namespace

TEST_CASE("identity and generators") {
    auto sp = wsk("*+");
    auto id = identity_diagram(sp, 2);
    CHECK(id.deg == 0);
    CHECK(id.key() == identity_diagram(sp, 2).key());

    // degree-1 pole chord t0
    auto t0 = generator_chord(sp, 2, 0, 1);
    CHECK(t0.deg == 1);
    CHECK(t0.pole_ev.size() == 1);

    // chord with both endpoints on the pole is rejected
    std::vector<std::vector<int>> lab = {{0}};
    CHECK_THROWS_AS(make_diagram(sp, 2, {{Endpoint{-1, 0}, Endpoint{-1, 1}}}, lab, {0}),
                    DiagramError);

    // labels on two arcs around the pole chord
    auto s2 = wsk("*++");
    auto t12 = generator_chord(s2, 3, 1, 2);
    CHECK(t12.deg == 1);
    CHECK(t12.ev[0].size() == 1);
    CHECK(t12.ev[1].size() == 1);
}

TEST_CASE("compose: identity laws and degree additivity") {
    auto s = wsk("*++");
    auto id = identity_diagram(s, 2);
    auto t01 = generator_chord(s, 2, 0, 1);
    CHECK(compose_diagrams(id, t01) == t01);
    CHECK(compose_diagrams(t01, id) == t01);
    auto t02 = generator_chord(s, 2, 0, 2);
    auto p = compose_diagrams(t01, t02);
    CHECK(p.deg == 2);
    // pole order matters: t01 then t02 differs from t02 then t01
    CHECK_FALSE(compose_diagrams(t01, t02) == compose_diagrams(t02, t01));
    // ordinary chords on disjoint strands commute as diagrams
    auto s4 = wsk("++++");
    auto a = generator_chord(s4, 1, 1, 2);
    auto b = generator_chord(s4, 1, 3, 4);
    CHECK(compose_diagrams(a, b) == compose_diagrams(b, a));
    // associativity
    auto x = compose_diagrams(compose_diagrams(t01, t02), t01);
    auto y = compose_diagrams(t01, compose_diagrams(t02, t01));
    CHECK(x == y);
}

TEST_CASE("labels add along glued arcs") {
    auto s = wsk("*+");
    auto la = generator_label(s, 3, 1, 1);
    auto lb = generator_label(s, 3, 1, 2);
    auto sum = compose_diagrams(la, lb);
    CHECK(sum.deg == 0);
    CHECK(sum == identity_diagram(s, 3));  // 1+2 = 0 mod 3
    auto sum2 = compose_diagrams(la, la);
    CHECK(sum2 == generator_label(s, 3, 1, 2));
}

TEST_CASE("residue composition: transposed closing arcs give residue 1") {
    // two residue-0 arcs closing into a circle while transposing endpoints.
    // sigma: the permutation diagram ++ -> ++ with crossed components.
    Skeleton sigma;
    sigma.pole = false;
    sigma.source = {1, 1};
    sigma.target = {1, 1};
    sigma.comps.push_back({false, BEnd{0, 1}, BEnd{1, 2}});
    sigma.comps.push_back({false, BEnd{0, 2}, BEnd{1, 1}});
    sigma.sort_comps();
    auto ds = identity_diagram(sigma, 1);

    // cup: creates two strands (component from target 1 to target 2)
    Skeleton cup;
    cup.pole = false;
    cup.source = {};
    cup.target = {1, -1};
    cup.comps.push_back({false, BEnd{1, 1}, BEnd{1, 2}});
    auto dcup = identity_diagram(cup, 1);

    Skeleton cap;
    cap.pole = false;
    cap.source = {1, -1};
    cap.target = {};
    cap.comps.push_back({false, BEnd{0, 1}, BEnd{0, 2}});
    auto dcap = identity_diagram(cap, 1);

    // cup then cap: a circle with residue 0
    auto circ0 = compose_diagrams(dcup, dcap);
    REQUIRE(circ0.skeleton().comps.size() == 1);
    CHECK(circ0.skeleton().comps[0].circle);
    CHECK(circ0.res[0] == 0);

    // cup, then sigma-like crossing of + and - strands, then cap:
    // the two cup/cap arcs interlace, residue 1
    Skeleton sigpm;
    sigpm.pole = false;
    sigpm.source = {1, -1};
    sigpm.target = {-1, 1};
    sigpm.comps.push_back({false, BEnd{0, 1}, BEnd{1, 2}});
    sigpm.comps.push_back({false, BEnd{1, 1}, BEnd{0, 2}});
    sigpm.sort_comps();
    auto dsig = identity_diagram(sigpm, 1);

    Skeleton cap2;
    cap2.pole = false;
    cap2.source = {-1, 1};
    cap2.target = {};
    cap2.comps.push_back({false, BEnd{0, 2}, BEnd{0, 1}});
    auto dcap2 = identity_diagram(cap2, 1);

    auto kink = compose_diagrams(compose_diagrams(dcup, dsig), dcap2);
    REQUIRE(kink.skeleton().comps.size() == 1);
    CHECK(kink.skeleton().comps[0].circle);
    CHECK(kink.res[0] == 1);

    // composing with identity never changes residues
    auto idpm = identity_diagram(Skeleton::identity(false, {1, -1}), 1);
    auto again = compose_diagrams(dcup, idpm);
    CHECK(again.res[0] == 0);
}

TEST_CASE("tensor diagrams") {
    auto sp = wsk("*+");
    auto t0 = generator_chord(sp, 2, 0, 1);
    auto idp = identity_diagram(wsk("+"), 2);
    auto t = tensor_diagrams(t0, idp);
    CHECK(t.deg == 1);
    CHECK(t.skeleton().source == std::vector<int>{1, 1});
    // pole on the right operand is rejected
    CHECK_THROWS_AS(tensor_diagrams(idp, t0), DiagramError);
    // d tensor empty = d
    auto empty = identity_diagram(Skeleton::identity(false, {}), 2);
    CHECK(tensor_diagrams(t0, empty) == t0);
}

TEST_CASE("series arithmetic") {
    auto s = wsk("*++");
    int N = 2, cap = 3;
    auto t01 = DiagramSeries::of(generator_chord(s, N, 0, 1), cap);
    auto t12 = DiagramSeries::of(generator_chord(s, N, 1, 2), cap);
    auto e1 = series_exp(t01);
    auto e2 = series_exp(t01.scaled(-1));
    CHECK((e1 * e2) == DiagramSeries::unit(s, N, cap));
    CHECK(series_inverse(e1) == e2);
    CHECK(series_log(e1) == t01);
    // non-commuting exponentials
    CHECK_FALSE((series_exp(t01) * series_exp(t12)) == series_exp(t01 + t12));
}

TEST_CASE("diagram and series text round-trip") {
    auto s = wsk("*++");
    auto d = compose_diagrams(generator_chord(s, 2, 0, 1),
                              compose_diagrams(generator_label(s, 2, 1, 1),
                                               generator_chord(s, 2, 1, 2)));
    auto d2 = diagram_file_parse(diagram_file_str(d));
    CHECK(d2 == d);
    CHECK(diagram_file_str(d2) == diagram_file_str(d));

    auto ser = series_exp(DiagramSeries::of(d, 3));
    auto ser2 = series_file_parse(series_file_str(ser));
    CHECK(ser2 == ser);
    CHECK(series_file_str(ser2) == series_file_str(ser));
}

TEST_CASE("realize: basic cases") {
    auto sp = wsk("*+");
    // identity diagram -> identity word
    auto idw = realize(identity_diagram(sp, 1), 1);
    CHECK(idw.slices.empty());

    // degree-1 pole chord -> word with one S0
    auto t0 = generator_chord(sp, 1, 0, 1);
    auto w = realize(t0, 1);
    int nsing = 0;
    for (auto& sl : w.slices)
        if (sl.kind == SliceKind::SingPole) ++nsing;
    CHECK(nsing == 1);

    // one ordinary chord between the two strands of ++ -> word with one S
    auto s2 = wsk("++");
    auto ch = generator_chord(s2, 1, 1, 2);
    auto w2 = realize(ch, 1);
    int ns = 0;
    for (auto& sl : w2.slices)
        if (sl.kind == SliceKind::SingCross) ++ns;
    CHECK(ns == 1);

    // label: realized with pole loops; winding matches the label
    auto lab = generator_label(sp, 3, 1, 2);
    auto w3 = realize(lab, 3);
    CHECK_FALSE(w3.singular());
    auto wt = winding_and_twist(w3);
    CHECK(((wt[0].winding % 3) + 3) % 3 == 2);

    // residue-1 identity on one strand: a curl appears
    auto r1 = make_diagram(sp, 1, {}, {{0}}, {1});
    auto w4 = realize(r1, 1);
    auto wt4 = winding_and_twist(w4);
    CHECK((wt4[0].twist - wt4[0].winding) % 2 != 0);
}

TEST_CASE("realize: opposed pole order needs a fold") {
    // strand visits chords A then B; pole visits B then A
    auto sp = wsk("*+");
    std::vector<std::pair<Endpoint, Endpoint>> chords = {
        {Endpoint{-1, 1}, Endpoint{0, 0}},   // chord 0: pole slot 1, strand slot 0
        {Endpoint{-1, 0}, Endpoint{0, 1}}};  // chord 1: pole slot 0, strand slot 1
    auto d = make_diagram(sp, 1, chords, {{0, 0, 0}}, {0});
    auto w = realize(d, 1);
    int ns = 0;
    for (auto& sl : w.slices)
        if (sl.kind == SliceKind::SingPole) ++ns;
    CHECK(ns == 2);
    CHECK(w.skel == d.skeleton());
}

TEST_CASE("realize on circles") {
    Skeleton knot = Skeleton::closed_knot(true, 1);
    // circle with one pole chord and one self-ish structure: degree 2
    std::vector<std::pair<Endpoint, Endpoint>> chords = {
        {Endpoint{-1, 0}, Endpoint{0, 0}}, {Endpoint{0, 1}, Endpoint{0, 2}}};
    auto d = make_diagram(knot, 2, chords, {{1, 0, 0}}, {0});
    auto w = realize(d, 2);
    CHECK(w.skel == d.skeleton());
    int ns = 0, np = 0;
    for (auto& sl : w.slices) {
        if (sl.kind == SliceKind::SingCross) ++ns;
        if (sl.kind == SliceKind::SingPole) ++np;
    }
    CHECK(ns == 1);
    CHECK(np == 1);
}
