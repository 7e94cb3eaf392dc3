#include "btinv/tangle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>

namespace btinv {

namespace {

struct UnionFind {
    std::vector<int> p;
    int make() {
        p.push_back((int)p.size());
        return (int)p.size() - 1;
    }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool TangleWord::singular() const {
    for (auto& s : slices)
        if (s.kind == SliceKind::SingCross || s.kind == SliceKind::SingPole) return true;
    return false;
}

void TangleWord::validate() {
    levels.clear();
    piece_at.clear();
    piece_comp.clear();

    UnionFind uf;
    std::vector<int> cur = source;
    std::vector<int> curp;
    for (size_t i = 0; i < cur.size(); ++i) curp.push_back(uf.make());
    std::vector<int> boundary_piece_src = curp;

    levels.push_back(cur);
    piece_at.push_back(curp);

    struct CrossEv {
        int pa, pb, sign, oa, ob;
    };
    struct LoopEv {
        int piece, sign, orient;
    };
    std::vector<CrossEv> crossings;
    std::vector<LoopEv> loops;
    std::vector<int> circle_classes;  // root ids at closure, in closure order

    for (size_t k = 0; k < slices.size(); ++k) {
        const Slice& s = slices[k];
        int w = (int)cur.size();
        auto fail = [&](const std::string& msg) {
            throw TangleError("slice " + std::to_string(k + 1) + ": " + msg + " (word " +
                              word_str(pole, cur) + ")");
        };
        switch (s.kind) {
            case SliceKind::Cross:
            case SliceKind::SingCross: {
                if (s.pos < 1 || s.pos + 1 > w) fail("crossing needs two non-pole strands");
                int i = s.pos - 1;
                if (s.kind == SliceKind::Cross)
                    crossings.push_back({curp[i], curp[i + 1], s.sign, cur[i], cur[i + 1]});
                std::swap(cur[i], cur[i + 1]);
                std::swap(curp[i], curp[i + 1]);
                break;
            }
            case SliceKind::PoleLoop:
            case SliceKind::SingPole: {
                if (!pole) fail("pole loop in a tangle without pole");
                if (w < 1) fail("pole loop needs a strand at position 1");
                if (s.pos != 1) fail("pole loop only acts at position 1");
                if (s.kind == SliceKind::PoleLoop) loops.push_back({curp[0], s.sign, cur[0]});
                break;
            }
            case SliceKind::Cup: {
                if (s.pos < 1 || s.pos > w + 1) fail("cup position out of range");
                int np = uf.make();
                int l1 = s.sign > 0 ? -1 : 1;  // lr creates (-,+), rl creates (+,-)
                cur.insert(cur.begin() + (s.pos - 1), {l1, -l1});
                curp.insert(curp.begin() + (s.pos - 1), {np, np});
                break;
            }
            case SliceKind::Cap: {
                if (s.pos < 1 || s.pos + 1 > w) fail("cap needs two strands");
                int i = s.pos - 1;
                if (cur[i] != -cur[i + 1]) fail("cap orientation mismatch");
                int a = uf.find(curp[i]), b = uf.find(curp[i + 1]);
                if (a == b)
                    circle_classes.push_back(a);
                else
                    uf.unite(a, b);
                cur.erase(cur.begin() + i, cur.begin() + i + 2);
                curp.erase(curp.begin() + i, curp.begin() + i + 2);
                break;
            }
        }
        levels.push_back(cur);
        piece_at.push_back(curp);
    }

    // assemble skeleton components
    struct Ends {
        std::vector<std::pair<BEnd, int>> ends;  // (end, letter)
    };
    std::map<int, Ends> open;
    for (size_t i = 0; i < boundary_piece_src.size(); ++i)
        open[uf.find(boundary_piece_src[i])].ends.push_back({{0, (int)i + 1}, source[i]});
    for (size_t i = 0; i < curp.size(); ++i)
        open[uf.find(curp[i])].ends.push_back({{1, (int)i + 1}, cur[i]});

    skel = Skeleton{};
    skel.pole = pole;
    skel.source = source;
    skel.target = cur;
    std::map<int, int> class_to_comp;
    std::vector<SkelComp> comps;
    for (auto& [cls, e] : open) {
        if (e.ends.size() != 2)
            throw TangleError("internal: open component with " + std::to_string(e.ends.size()) +
                              " ends");
        SkelComp c;
        c.circle = false;
        // a component begins where it enters the diagram: source with letter +
        // or target with letter -
        auto is_begin = [](const std::pair<BEnd, int>& p) {
            return (p.first.side == 0) == (p.second > 0);
        };
        if (is_begin(e.ends[0]) == is_begin(e.ends[1]))
            throw TangleError("internal: inconsistent component orientation");
        c.begin = is_begin(e.ends[0]) ? e.ends[0].first : e.ends[1].first;
        c.finish = is_begin(e.ends[0]) ? e.ends[1].first : e.ends[0].first;
        class_to_comp[cls] = (int)comps.size();
        comps.push_back(c);
    }
    for (int cls : circle_classes) {
        SkelComp c;
        c.circle = true;
        class_to_comp[cls] = (int)comps.size();
        comps.push_back(c);
    }
    // canonical order: intervals by begin end, circles after (closure order)
    std::vector<int> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (comps[a].circle != comps[b].circle) return !comps[a].circle;
        if (comps[a].circle) return false;
        return comps[a].begin < comps[b].begin;
    });
    std::vector<int> rank(comps.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = (int)i;
    for (int i : order) skel.comps.push_back(comps[i]);

    piece_comp.assign(uf.p.size(), -1);
    for (size_t pid = 0; pid < uf.p.size(); ++pid) {
        auto it = class_to_comp.find(uf.find((int)pid));
        if (it != class_to_comp.end()) piece_comp[pid] = rank[it->second];
    }

    // stash framing events for winding_and_twist
    wt_cache_.assign(skel.comps.size(), WindingTwist{});
    for (auto& ev : loops) {
        int c = piece_comp[ev.piece];
        wt_cache_[c].winding += ev.sign * ev.orient;
    }
    for (auto& ev : crossings) {
        int ca = piece_comp[ev.pa], cb = piece_comp[ev.pb];
        if (ca == cb) wt_cache_[ca].twist += ev.sign * ev.oa * ev.ob;
    }
}

std::vector<WindingTwist> winding_and_twist(const TangleWord& t) {
    if (t.singular()) throw TangleError("winding_and_twist: singular word");
    TangleWord u = t;
    u.validate();
    return u.wt_cache_;
}

TangleWord identity_word(bool pole, const std::vector<int>& word) {
    TangleWord t;
    t.pole = pole;
    t.source = word;
    t.validate();
    return t;
}

// ---- DSL --------------------------------------------------------------

TangleWord parse_tangle_word(const std::string& text) {
    TangleWord t;
    bool have_obj = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string stripped = line;
        size_t h = stripped.find_first_not_of(" \t\r");
        if (h == std::string::npos) continue;
        if (stripped[h] == '#') continue;
        size_t sc = stripped.find(';');
        if (sc == std::string::npos) throw ParseError(lineno, "missing ';'");
        if (stripped.find_first_not_of(" \t\r", sc + 1) != std::string::npos)
            throw ParseError(lineno, "text after ';'");
        std::istringstream ls(stripped.substr(0, sc));
        std::string op;
        ls >> op;
        auto need = [&](bool ok, const std::string& m) {
            if (!ok) throw ParseError(lineno, m);
        };
        if (op == "obj") {
            need(!have_obj, "duplicate obj statement");
            std::string w;  // empty word = closed tangle source
            ls >> w;
            try {
                t.source = word_parse(w, &t.pole);
            } catch (const std::exception& e) {
                throw ParseError(lineno, e.what());
            }
            have_obj = true;
        } else {
            need(have_obj, "statement before obj");
            Slice s;
            if (op == "X" || op == "S") {
                int i;
                need((bool)(ls >> i), op + " needs a position");
                s.pos = i;
                if (op == "X") {
                    std::string sg;
                    need((bool)(ls >> sg) && (sg == "+" || sg == "-"), "X needs sign + or -");
                    s.sign = sg == "+" ? 1 : -1;
                    s.kind = SliceKind::Cross;
                } else
                    s.kind = SliceKind::SingCross;
            } else if (op == "T") {
                std::string sg;
                need((bool)(ls >> sg) && (sg == "+" || sg == "-"), "T needs sign + or -");
                s.kind = SliceKind::PoleLoop;
                s.sign = sg == "+" ? 1 : -1;
                s.pos = 1;
            } else if (op == "U") {
                int i;
                std::string o;
                need((bool)(ls >> i >> o) && (o == "lr" || o == "rl"), "U needs position and lr|rl");
                s.kind = SliceKind::Cup;
                s.pos = i;
                s.sign = o == "lr" ? 1 : -1;
            } else if (op == "A") {
                int i;
                need((bool)(ls >> i), "A needs a position");
                s.kind = SliceKind::Cap;
                s.pos = i;
            } else if (op == "S0") {
                s.kind = SliceKind::SingPole;
                s.pos = 1;
            } else
                throw ParseError(lineno, "unknown statement '" + op + "'");
            std::string extra;
            need(!(ls >> extra), "unexpected token '" + extra + "'");
            t.slices.push_back(s);
        }
    }
    if (!have_obj) throw ParseError(lineno, "missing obj statement");
    try {
        t.validate();
    } catch (const TangleError& e) {
        throw ParseError(lineno, e.what());
    }
    return t;
}

std::string serialize(const TangleWord& t) {
    std::ostringstream os;
    os << "obj " << word_str(t.pole, t.source) << " ;\n";
    for (auto& s : t.slices) {
        switch (s.kind) {
            case SliceKind::Cross:
                os << "X " << s.pos << " " << (s.sign > 0 ? "+" : "-") << " ;\n";
                break;
            case SliceKind::SingCross:
                os << "S " << s.pos << " ;\n";
                break;
            case SliceKind::PoleLoop:
                os << "T " << (s.sign > 0 ? "+" : "-") << " ;\n";
                break;
            case SliceKind::SingPole:
                os << "S0 ;\n";
                break;
            case SliceKind::Cup:
                os << "U " << s.pos << " " << (s.sign > 0 ? "lr" : "rl") << " ;\n";
                break;
            case SliceKind::Cap:
                os << "A " << s.pos << " ;\n";
                break;
        }
    }
    return os.str();
}

// ---- composition ------------------------------------------------------

TangleWord compose(const TangleWord& t1, const TangleWord& t2) {
    if (t1.pole != t2.pole) throw TangleError("compose: pole flags differ");
    if (t1.levels.back() != t2.source)
        throw TangleError("compose: target " + word_str(t1.pole, t1.levels.back()) +
                          " != source " + word_str(t2.pole, t2.source));
    TangleWord r;
    r.pole = t1.pole;
    r.source = t1.source;
    r.slices = t1.slices;
    r.slices.insert(r.slices.end(), t2.slices.begin(), t2.slices.end());
    r.validate();
    return r;
}

TangleWord tensor(const TangleWord& bt, const TangleWord& t) {
    if (t.pole) throw TangleError("tensor: right factor carries the pole");
    TangleWord r;
    r.pole = bt.pole;
    r.source = bt.source;
    r.source.insert(r.source.end(), t.source.begin(), t.source.end());
    size_t n = std::max(bt.slices.size(), t.slices.size());
    for (size_t i = 0; i < n; ++i) {
        if (i < bt.slices.size()) r.slices.push_back(bt.slices[i]);
        if (i < t.slices.size()) {
            Slice s = t.slices[i];
            size_t lvl = std::min(i + 1, bt.slices.size());
            s.pos += (int)bt.levels[lvl].size();
            r.slices.push_back(s);
        }
    }
    r.validate();
    return r;
}

void TangleCombination::add(const TangleWord& t, const Rational& c) {
    std::string k = serialize(t);
    auto it = terms.find(k);
    if (it == terms.end()) {
        if (!is_zero(c)) terms[k] = {t, c};
    } else {
        it->second.second += c;
        if (is_zero(it->second.second)) terms.erase(it);
    }
}

TangleCombination resolve_singular(const TangleWord& st, int N) {
    if (N < 1) throw TangleError("resolve_singular: N must be >= 1");
    TangleCombination out;
    std::vector<Slice> acc;
    std::function<void(size_t, Rational)> go = [&](size_t k, Rational coef) {
        if (k == st.slices.size()) {
            TangleWord t;
            t.pole = st.pole;
            t.source = st.source;
            t.slices = acc;
            t.validate();
            out.add(t, coef);
            return;
        }
        const Slice& s = st.slices[k];
        if (s.kind == SliceKind::SingCross) {
            for (int sg : {1, -1}) {
                acc.push_back({SliceKind::Cross, s.pos, sg});
                go(k + 1, coef * sg);
                acc.pop_back();
            }
        } else if (s.kind == SliceKind::SingPole) {
            for (int j = 0; j < N; ++j) acc.push_back({SliceKind::PoleLoop, 1, 1});
            go(k + 1, coef);
            for (int j = 0; j < N; ++j) acc.pop_back();
            go(k + 1, -coef);
        } else {
            acc.push_back(s);
            go(k + 1, coef);
            acc.pop_back();
        }
    };
    go(0, Rational(1));
    return out;
}

// ---- moves ------------------------------------------------------------

namespace {

struct SliceSpan {
    int lo, hi;     // affected positions in the word the slice acts on
    int delta;      // width change
};

SliceSpan span_of(const Slice& s) {
    switch (s.kind) {
        case SliceKind::Cross:
        case SliceKind::SingCross:
            return {s.pos, s.pos + 1, 0};
        case SliceKind::Cup:
            return {s.pos, s.pos + 1, +2};
        case SliceKind::Cap:
            return {s.pos, s.pos + 1, -2};
        case SliceKind::PoleLoop:
        case SliceKind::SingPole:
            return {1, 1, 0};
    }
    return {1, 1, 0};
}

[[noreturn]] void mismatch(const std::string& what) {
    throw TangleError("move pattern mismatch: " + what);
}

bool is_cross(const Slice& s) { return s.kind == SliceKind::Cross; }

// curl pattern on strand p with letter x: 3 slices
std::vector<Slice> curl_slices(int p, int letter, int sign) {
    int cup_orient = letter > 0 ? -1 : 1;  // rl for +, lr for -
    return {{SliceKind::Cup, p, cup_orient},
            {SliceKind::Cross, p + 1, sign},
            {SliceKind::Cap, p + 1, 0 /*sign unused*/}};
}

}  // namespace

TangleWord apply_move(const TangleWord& t0, const Move& m) {
    TangleWord t = t0;
    auto& S = t.slices;
    size_t site = (size_t)m.site;
    auto have = [&](size_t n) { return site + n <= S.size(); };
    auto word_at = [&](size_t lvl) { return t0.levels[lvl]; };

    switch (m.id) {
        case MoveId::SlideFar: {
            if (!have(2)) mismatch("SlideFar needs two slices");
            Slice a = S[site], b = S[site + 1];
            SliceSpan sa = span_of(a), sb = span_of(b);
            if (sb.lo > sa.hi && sb.lo - sa.delta > sa.hi) {
                Slice b2 = b;
                b2.pos -= sa.delta;
                S[site] = b2;
                S[site + 1] = a;
            } else if (sb.hi < sa.lo) {
                Slice a2 = a;
                a2.pos += sb.delta;
                S[site] = b;
                S[site + 1] = a2;
            } else
                mismatch("slices interact");
            break;
        }
        case MoveId::R2Insert: {
            if (m.pos + 1 > (int)word_at(site).size()) mismatch("R2Insert out of range");
            S.insert(S.begin() + site, {Slice{SliceKind::Cross, m.pos, m.sign},
                                        Slice{SliceKind::Cross, m.pos, -m.sign}});
            break;
        }
        case MoveId::R2Delete: {
            if (!have(2) || !is_cross(S[site]) || !is_cross(S[site + 1]) ||
                S[site].pos != S[site + 1].pos || S[site].sign != -S[site + 1].sign)
                mismatch("R2Delete");
            S.erase(S.begin() + site, S.begin() + site + 2);
            break;
        }
        case MoveId::R3: {
            if (!have(3) || !is_cross(S[site]) || !is_cross(S[site + 1]) || !is_cross(S[site + 2]))
                mismatch("R3");
            int p = S[site].pos, s = S[site].sign;
            if (S[site + 1].sign != s || S[site + 2].sign != s) mismatch("R3 signs");
            if (S[site + 1].pos == p + 1 && S[site + 2].pos == p) {
                S[site].pos = p + 1;
                S[site + 1].pos = p;
                S[site + 2].pos = p + 1;
            } else if (S[site + 1].pos == p - 1 && S[site + 2].pos == p) {
                S[site].pos = p - 1;
                S[site + 1].pos = p;
                S[site + 2].pos = p - 1;
            } else
                mismatch("R3 shape");
            break;
        }
        case MoveId::ZigzagInsert: {
            auto w = word_at(site);
            if (m.pos < 1 || m.pos > (int)w.size()) mismatch("ZigzagInsert position");
            int x = w[m.pos - 1];
            std::vector<Slice> z;
            if (m.variant == 0)  // [U(p+1,o), A(p)]
                z = {{SliceKind::Cup, m.pos + 1, x > 0 ? 1 : -1}, {SliceKind::Cap, m.pos, 0}};
            else  // [U(p,o), A(p+1)]
                z = {{SliceKind::Cup, m.pos, x > 0 ? -1 : 1}, {SliceKind::Cap, m.pos + 1, 0}};
            S.insert(S.begin() + site, z.begin(), z.end());
            break;
        }
        case MoveId::ZigzagDelete: {
            if (!have(2) || S[site].kind != SliceKind::Cup || S[site + 1].kind != SliceKind::Cap)
                mismatch("ZigzagDelete");
            int q = S[site].pos, p = S[site + 1].pos;
            if (q != p + 1 && p != q + 1) mismatch("ZigzagDelete shape");
            S.erase(S.begin() + site, S.begin() + site + 2);
            break;
        }
        case MoveId::CupSlide: {
            if (!have(2) || S[site].kind != SliceKind::Cup || !is_cross(S[site + 1]))
                mismatch("CupSlide");
            int q = S[site].pos, xp = S[site + 1].pos;
            if (xp == q + 1) {
                S[site].pos = q + 1;
                S[site + 1].pos = q;
                S[site + 1].sign = -S[site + 1].sign;
            } else if (xp == q - 1) {
                S[site].pos = q - 1;
                S[site + 1].pos = q;
                S[site + 1].sign = -S[site + 1].sign;
            } else
                mismatch("CupSlide shape");
            break;
        }
        case MoveId::CapSlide: {
            if (m.variant == 0) {
                if (!have(3) || !is_cross(S[site]) || !is_cross(S[site + 1]) ||
                    S[site + 2].kind != SliceKind::Cap)
                    mismatch("CapSlide");
                int s = S[site].sign;
                if (S[site + 1].sign != s) mismatch("CapSlide signs");
                int p1 = S[site].pos, p2 = S[site + 1].pos, pc = S[site + 2].pos;
                if (p1 == p2 + 1 && pc == p2 + 1) {
                    // [X(p+1,s), X(p,s), A(p+1)] -> [A(p)]
                    S.erase(S.begin() + site, S.begin() + site + 2);
                    S[site] = {SliceKind::Cap, p2, 0};
                } else if (p1 + 1 == p2 && pc == p1) {
                    // mirror: [X(p,s), X(p+1,s), A(p)] -> [A(p+1)]
                    S.erase(S.begin() + site, S.begin() + site + 2);
                    S[site] = {SliceKind::Cap, p1 + 1, 0};
                } else
                    mismatch("CapSlide shape");
            } else {
                if (!have(1) || S[site].kind != SliceKind::Cap) mismatch("CapSlide insert");
                int p = S[site].pos;
                if (m.variant == 1) {
                    // [A(p)] -> [X(p+1,s), X(p,s), A(p+1)]
                    int w = (int)word_at(site).size();
                    if (p + 2 > w) mismatch("CapSlide insert range");
                    S[site] = {SliceKind::Cap, p + 1, 0};
                    S.insert(S.begin() + site, {Slice{SliceKind::Cross, p + 1, m.sign},
                                                Slice{SliceKind::Cross, p, m.sign}});
                } else {
                    // [A(p)] -> [X(p-1,s), X(p,s), A(p-1)]
                    if (p < 2) mismatch("CapSlide insert range");
                    S[site] = {SliceKind::Cap, p - 1, 0};
                    S.insert(S.begin() + site, {Slice{SliceKind::Cross, p - 1, m.sign},
                                                Slice{SliceKind::Cross, p, m.sign}});
                }
            }
            break;
        }
        case MoveId::KinkPairInsert: {
            auto w = word_at(site);
            if (m.pos < 1 || m.pos > (int)w.size()) mismatch("KinkPairInsert position");
            int x = w[m.pos - 1];
            auto c1 = curl_slices(m.pos, x, m.sign);
            auto c2 = curl_slices(m.pos, x, -m.sign);
            c1.insert(c1.end(), c2.begin(), c2.end());
            S.insert(S.begin() + site, c1.begin(), c1.end());
            break;
        }
        case MoveId::KinkPairDelete: {
            if (!have(6)) mismatch("KinkPairDelete needs six slices");
            auto w = word_at(site);
            bool ok = false;
            for (int sg : {1, -1}) {
                for (int p = 1; p <= (int)w.size(); ++p) {
                    auto c1 = curl_slices(p, w[p - 1], sg);
                    auto c2 = curl_slices(p, w[p - 1], -sg);
                    c1.insert(c1.end(), c2.begin(), c2.end());
                    bool match = true;
                    for (int j = 0; j < 6; ++j)
                        if (!(S[site + j].kind == c1[j].kind && S[site + j].pos == c1[j].pos &&
                              (c1[j].kind == SliceKind::Cap || S[site + j].sign == c1[j].sign)))
                            match = false;
                    if (match) {
                        S.erase(S.begin() + site, S.begin() + site + 6);
                        ok = true;
                        break;
                    }
                }
                if (ok) break;
            }
            if (!ok) mismatch("KinkPairDelete shape");
            break;
        }
        case MoveId::Reflection: {
            if (!have(4)) mismatch("Reflection needs four slices");
            auto isT = [&](const Slice& s) { return s.kind == SliceKind::PoleLoop; };
            auto isX1 = [&](const Slice& s) { return is_cross(s) && s.pos == 1; };
            if (isT(S[site]) && isX1(S[site + 1]) && isT(S[site + 2]) && isX1(S[site + 3]) &&
                S[site].sign == S[site + 2].sign && S[site + 1].sign == S[site + 3].sign &&
                S[site].sign == S[site + 1].sign) {
                std::swap(S[site], S[site + 1]);
                std::swap(S[site + 2], S[site + 3]);
            } else if (isX1(S[site]) && isT(S[site + 1]) && isX1(S[site + 2]) &&
                       isT(S[site + 3]) && S[site].sign == S[site + 2].sign &&
                       S[site + 1].sign == S[site + 3].sign && S[site].sign == S[site + 1].sign) {
                std::swap(S[site], S[site + 1]);
                std::swap(S[site + 2], S[site + 3]);
            } else
                mismatch("Reflection shape");
            break;
        }
        case MoveId::DualityInsert: {
            if (!have(1) || S[site].kind != SliceKind::Cap || S[site].pos != 1)
                mismatch("DualityInsert needs a cap at position 1");
            int a = m.sign;
            std::vector<Slice> pre = {{SliceKind::PoleLoop, 1, a},
                                      {SliceKind::Cross, 1, a},
                                      {SliceKind::PoleLoop, 1, a},
                                      {SliceKind::Cross, 1, -a}};
            S.insert(S.begin() + site, pre.begin(), pre.end());
            break;
        }
        case MoveId::DualityDelete: {
            if (!have(5)) mismatch("DualityDelete needs five slices");
            bool ok = false;
            for (int a : {1, -1}) {
                if (S[site].kind == SliceKind::PoleLoop && S[site].sign == a &&
                    is_cross(S[site + 1]) && S[site + 1].pos == 1 && S[site + 1].sign == a &&
                    S[site + 2].kind == SliceKind::PoleLoop && S[site + 2].sign == a &&
                    is_cross(S[site + 3]) && S[site + 3].pos == 1 && S[site + 3].sign == -a &&
                    S[site + 4].kind == SliceKind::Cap && S[site + 4].pos == 1) {
                    S.erase(S.begin() + site, S.begin() + site + 4);
                    ok = true;
                    break;
                }
            }
            if (!ok) mismatch("DualityDelete shape");
            break;
        }
        case MoveId::DualityCupInsert: {
            if (!have(1) || S[site].kind != SliceKind::Cup || S[site].pos != 1)
                mismatch("DualityCupInsert needs a cup at position 1");
            int a = m.sign;
            std::vector<Slice> post = {{SliceKind::Cross, 1, -a},
                                       {SliceKind::PoleLoop, 1, a},
                                       {SliceKind::Cross, 1, a},
                                       {SliceKind::PoleLoop, 1, a}};
            S.insert(S.begin() + site + 1, post.begin(), post.end());
            break;
        }
        case MoveId::DualityCupDelete: {
            if (!have(5)) mismatch("DualityCupDelete needs five slices");
            bool ok = false;
            for (int a : {1, -1}) {
                if (S[site].kind == SliceKind::Cup && S[site].pos == 1 && is_cross(S[site + 1]) &&
                    S[site + 1].pos == 1 && S[site + 1].sign == -a && S[site + 2].kind ==
                    SliceKind::PoleLoop && S[site + 2].sign == a && is_cross(S[site + 3]) &&
                    S[site + 3].pos == 1 && S[site + 3].sign == a &&
                    S[site + 4].kind == SliceKind::PoleLoop && S[site + 4].sign == a) {
                    S.erase(S.begin() + site + 1, S.begin() + site + 5);
                    ok = true;
                    break;
                }
            }
            if (!ok) mismatch("DualityCupDelete shape");
            break;
        }
    }
    t.validate();
    if (t.levels.front() != t0.levels.front() || t.levels.back() != t0.levels.back() ||
        t.pole != t0.pole)
        throw TangleError("internal: move changed the boundary");
    return t;
}

std::vector<Move> enumerate_moves(const TangleWord& t, bool include_inserting) {
    std::vector<Move> out;
    auto tryadd = [&](Move m) {
        try {
            apply_move(t, m);
            out.push_back(m);
        } catch (const TangleError&) {
        }
    };
    int n = (int)t.slices.size();
    for (int i = 0; i < n; ++i) {
        tryadd({MoveId::SlideFar, i});
        tryadd({MoveId::R2Delete, i});
        tryadd({MoveId::R3, i});
        tryadd({MoveId::ZigzagDelete, i});
        tryadd({MoveId::CupSlide, i});
        tryadd({MoveId::CapSlide, i, 1, 1, 1, 0});
        tryadd({MoveId::KinkPairDelete, i});
        tryadd({MoveId::Reflection, i});
        tryadd({MoveId::DualityDelete, i});
        tryadd({MoveId::DualityCupDelete, i});
    }
    if (include_inserting) {
        for (int i = 0; i <= n; ++i) {
            int w = (int)t.levels[i].size();
            for (int p = 1; p <= w; ++p) {
                for (int s : {1, -1}) {
                    if (p + 1 <= w) tryadd({MoveId::R2Insert, i, p, s});
                    tryadd({MoveId::KinkPairInsert, i, p, s});
                }
                tryadd({MoveId::ZigzagInsert, i, p, 1, 1, 0});
                tryadd({MoveId::ZigzagInsert, i, p, 1, 1, 1});
            }
        }
        for (int i = 0; i < n; ++i) {
            for (int s : {1, -1}) {
                tryadd({MoveId::DualityInsert, i, 1, s});
                tryadd({MoveId::DualityCupInsert, i, 1, s});
                tryadd({MoveId::CapSlide, i, 1, s, 1, 1});
                tryadd({MoveId::CapSlide, i, 1, s, 1, 2});
            }
        }
    }
    return out;
}

}  // namespace btinv
