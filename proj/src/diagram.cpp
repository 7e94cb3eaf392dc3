#include "btinv/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace btinv {

// ---- skeleton interning -------------------------------------------------

namespace {
struct SkelPool {
    std::unordered_map<std::string, int> ids;
    std::vector<Skeleton> pool;
    std::mutex mu;
};
SkelPool& skel_pool() {
    static SkelPool* p = new SkelPool;
    return *p;
}
}  // namespace

int skel_id(const Skeleton& s) {
    auto& P = skel_pool();
    std::lock_guard<std::mutex> lk(P.mu);
    std::string k = s.key();
    auto it = P.ids.find(k);
    if (it != P.ids.end()) return it->second;
    P.pool.push_back(s);
    P.ids[k] = (int)P.pool.size() - 1;
    return (int)P.pool.size() - 1;
}

const Skeleton& skel_of(int id) { return skel_pool().pool[id]; }

// ---- NDiagram basics ----------------------------------------------------

int NDiagram::arcs_of(int comp) const {
    const Skeleton& s = skeleton();
    int k = (int)ev[comp].size();
    return s.comps[comp].circle ? std::max(k, 1) : k + 1;
}

bool NDiagram::operator==(const NDiagram& o) const { return key() == o.key(); }

namespace {

void append_int(std::string& s, int v) {
    s += std::to_string(v);
    s += ',';
}

// key under a fixed circle rotation/permutation choice
std::string key_for(const NDiagram& d, const std::vector<int>& comp_order,
                    const std::vector<int>& rot) {
    const Skeleton& s = d.skeleton();
    // chord renumbering by first appearance
    std::vector<int> newid(d.deg, -1);
    int next = 0;
    auto visit = [&](int chord) {
        if (newid[chord] < 0) newid[chord] = next++;
    };
    for (int c : comp_order) {
        int k = (int)d.ev[c].size();
        int r = rot[c];
        for (int j = 0; j < k; ++j) visit(d.ev[c][(j + r) % std::max(k, 1)]);
    }
    for (int ch : d.pole_ev) visit(ch);

    std::string out;
    append_int(out, d.N);
    out += s.key();
    out += '|';
    for (int c : comp_order) {
        const bool circ = s.comps[c].circle;
        int k = (int)d.ev[c].size();
        int r = rot[c];
        out += circ ? 'o' : 'c';
        append_int(out, d.res[c]);
        if (!circ) {
            for (int j = 0; j <= k; ++j) {
                append_int(out, d.lab[c][j]);
                if (j < k) append_int(out, newid[d.ev[c][j]]);
            }
        } else if (k == 0) {
            append_int(out, d.lab[c][0]);
        } else {
            for (int j = 0; j < k; ++j) {
                append_int(out, newid[d.ev[c][(j + r) % k]]);
                append_int(out, d.lab[c][(j + r) % k]);
            }
        }
        out += ';';
    }
    out += 'P';
    for (int ch : d.pole_ev) append_int(out, newid[ch]);
    return out;
}

}  // namespace

std::string NDiagram::key() const {
    const Skeleton& s = skeleton();
    int C = (int)s.comps.size();
    std::vector<int> base(C);
    std::iota(base.begin(), base.end(), 0);
    // circles are interchangeable within the skeleton: minimize over their
    // permutations and rotations
    std::vector<int> circles;
    for (int c = 0; c < C; ++c)
        if (s.comps[c].circle) circles.push_back(c);
    std::string best;
    std::vector<int> perm = circles;
    std::sort(perm.begin(), perm.end());
    do {
        std::vector<int> order = base;
        for (size_t i = 0; i < circles.size(); ++i) order[circles[i]] = perm[i];
        // enumerate rotations per circle (product)
        std::vector<int> rot(C, 0);
        std::function<void(size_t)> go = [&](size_t i) {
            if (i == circles.size()) {
                std::string k = key_for(*this, order, rot);
                if (best.empty() || k < best) best = k;
                return;
            }
            int c = order[circles[i]];
            int m = std::max((int)ev[c].size(), 1);
            for (int r = 0; r < m; ++r) {
                rot[c] = r;
                go(i + 1);
            }
        };
        go(0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

void NDiagram::canonicalize() {
    for (auto& l : lab)
        for (auto& v : l) v = ((v % N) + N) % N;
    for (auto& r : res) r = ((r % 2) + 2) % 2;
}

std::string NDiagram::pretty() const {
    std::ostringstream os;
    os << "deg " << deg << " " << key();
    return os.str();
}

NDiagram make_diagram(const Skeleton& skel, int N,
                      const std::vector<std::pair<Endpoint, Endpoint>>& chords,
                      const std::vector<std::vector<int>>& labels,
                      const std::vector<int>& residues) {
    int C = (int)skel.comps.size();
    NDiagram d;
    d.skel = skel_id(skel);
    d.N = N;
    d.deg = (int)chords.size();
    d.ev.assign(C, {});
    d.lab = labels;
    d.res = residues;

    std::vector<std::vector<std::pair<int, int>>> slots(C);  // (idx, chord)
    std::vector<std::pair<int, int>> pole_slots;
    for (int ch = 0; ch < (int)chords.size(); ++ch) {
        const auto& [a, b] = chords[ch];
        if (a.comp == -1 && b.comp == -1)
            throw DiagramError("chord with both endpoints on the pole");
        for (const Endpoint* e : {&a, &b}) {
            if (e->comp == -1) {
                if (!skel.pole) throw DiagramError("pole endpoint in a pole-free skeleton");
                pole_slots.push_back({e->idx, ch});
            } else {
                if (e->comp < 0 || e->comp >= C) throw DiagramError("endpoint component out of range");
                slots[e->comp].push_back({e->idx, ch});
            }
        }
    }
    for (int c = 0; c < C; ++c) {
        std::sort(slots[c].begin(), slots[c].end());
        for (int j = 0; j < (int)slots[c].size(); ++j) {
            if (slots[c][j].first != j) throw DiagramError("dangling or duplicate endpoint index");
            d.ev[c].push_back(slots[c][j].second);
        }
    }
    std::sort(pole_slots.begin(), pole_slots.end());
    for (int j = 0; j < (int)pole_slots.size(); ++j) {
        if (pole_slots[j].first != j) throw DiagramError("dangling or duplicate pole index");
        d.pole_ev.push_back(pole_slots[j].second);
    }
    if ((int)labels.size() != C || (int)residues.size() != C)
        throw DiagramError("labels/residues arity mismatch");
    for (int c = 0; c < C; ++c)
        if ((int)labels[c].size() != d.arcs_of(c))
            throw DiagramError("label slots mismatch on component " + std::to_string(c));
    d.canonicalize();
    return d;
}

NDiagram identity_diagram(const Skeleton& skel, int N) {
    // no chords: every component has a single label slot
    std::vector<std::vector<int>> lab(skel.comps.size(), std::vector<int>{0});
    std::vector<int> res(skel.comps.size(), 0);
    return make_diagram(skel, N, {}, lab, res);
}

namespace {
// for identity-word skeletons: strand i (1-based) = the component whose begin
// or finish is at source position i / target position i
int strand_comp(const Skeleton& s, int i) {
    for (int c = 0; c < (int)s.comps.size(); ++c) {
        if (s.comps[c].circle) continue;
        if ((s.comps[c].begin == BEnd{0, i}) || (s.comps[c].finish == BEnd{0, i})) return c;
    }
    throw DiagramError("no strand at position " + std::to_string(i));
}
}  // namespace

NDiagram generator_chord(const Skeleton& ws, int N, int i, int j) {
    std::vector<std::vector<int>> lab(ws.comps.size());
    std::vector<int> res(ws.comps.size(), 0);
    Endpoint a, b;
    a = (i == 0) ? Endpoint{-1, 0} : Endpoint{strand_comp(ws, i), 0};
    b = (j == 0) ? Endpoint{-1, 0} : Endpoint{strand_comp(ws, j), 0};
    if (i != 0 && j != 0 && strand_comp(ws, i) == strand_comp(ws, j))
        b.idx = 1;  // self chord on one component
    for (int c = 0; c < (int)ws.comps.size(); ++c) {
        int k = 0;
        if (i != 0 && strand_comp(ws, i) == c) ++k;
        if (j != 0 && strand_comp(ws, j) == c) ++k;
        lab[c].assign(k + 1, 0);
    }
    return make_diagram(ws, N, {{a, b}}, lab, res);
}

NDiagram generator_self_chord(const Skeleton& ws, int N, int i) {
    return generator_chord(ws, N, i, i);
}

NDiagram generator_label(const Skeleton& ws, int N, int i, int a) {
    std::vector<std::vector<int>> lab(ws.comps.size(), std::vector<int>{0});
    std::vector<int> res(ws.comps.size(), 0);
    lab[strand_comp(ws, i)][0] = ((a % N) + N) % N;
    return make_diagram(ws, N, {}, lab, res);
}

// ---- composition --------------------------------------------------------

namespace {

// cyclic boundary position of an interval end within its factor's strip
int cycpos(const BEnd& e, int m_src, int m_tgt) {
    return e.side == 0 ? e.pos : m_src + (m_tgt + 1 - e.pos);
}

bool interlaced(const SkelComp& a, const SkelComp& b, int m_src, int m_tgt) {
    int a1 = cycpos(a.begin, m_src, m_tgt), a2 = cycpos(a.finish, m_src, m_tgt);
    int b1 = cycpos(b.begin, m_src, m_tgt), b2 = cycpos(b.finish, m_src, m_tgt);
    if (a1 > a2) std::swap(a1, a2);
    if (b1 > b2) std::swap(b1, b2);
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

int norm_mod(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

NDiagram compose_diagrams(const NDiagram& d1, const NDiagram& d2) {
    const Skeleton& s1 = d1.skeleton();
    const Skeleton& s2 = d2.skeleton();
    if (d1.N != d2.N) throw DiagramError("compose: N mismatch");
    if (!s1.composable_with(s2)) throw DiagramError("compose: skeleta not composable");
    int N = d1.N;
    int off = d1.deg;  // d2 chord ids shift

    // piece = (factor, comp); walk composite components
    int C1 = (int)s1.comps.size(), C2 = (int)s2.comps.size();
    auto piece_ev = [&](int f, int c) -> const std::vector<int>& {
        return f == 0 ? d1.ev[c] : d2.ev[c];
    };
    auto piece_lab = [&](int f, int c) -> const std::vector<int>& {
        return f == 0 ? d1.lab[c] : d2.lab[c];
    };
    auto piece_res = [&](int f, int c) { return f == 0 ? d1.res[c] : d2.res[c]; };
    auto shift_chord = [&](int f, int ch) { return f == 0 ? ch : ch + off; };

    // interface lookup: d1 end at target pos p <-> d2 end at source pos p
    std::vector<int> d2_at_src((int)s2.source.size() + 1, -1);
    for (int c = 0; c < C2; ++c) {
        if (s2.comps[c].circle) continue;
        if (s2.comps[c].begin.side == 0) d2_at_src[s2.comps[c].begin.pos] = c;
        if (s2.comps[c].finish.side == 0) d2_at_src[s2.comps[c].finish.pos] = c;
    }
    std::vector<int> d1_at_tgt((int)s1.target.size() + 1, -1);
    for (int c = 0; c < C1; ++c) {
        if (s1.comps[c].circle) continue;
        if (s1.comps[c].begin.side == 1) d1_at_tgt[s1.comps[c].begin.pos] = c;
        if (s1.comps[c].finish.side == 1) d1_at_tgt[s1.comps[c].finish.pos] = c;
    }

    std::vector<std::vector<char>> used(2);
    used[0].assign(std::max(C1, 1), 0);
    used[1].assign(std::max(C2, 1), 0);

    struct Built {
        SkelComp sc;
        std::vector<int> ev;
        std::vector<int> lab;
        int res = 0;
        std::vector<std::pair<int, int>> pieces;  // (factor, comp)
    };
    std::vector<Built> built;

    // walk from an entering end
    auto walk = [&](int f0, int c0) {
        Built b;
        int f = f0, c = c0;
        bool circle = false;
        std::vector<int> labacc;  // pending arc label
        int pend = 0;
        bool first = true;
        while (true) {
            used[f][c] = 1;
            b.pieces.push_back({f, c});
            b.res = (b.res + piece_res(f, c)) % 2;
            const auto& pev = piece_ev(f, c);
            const auto& plab = piece_lab(f, c);
            // merge junction label
            if (first) {
                pend = plab[0];
                first = false;
            } else
                pend = norm_mod(pend + plab[0], N);
            for (int j = 0; j < (int)pev.size(); ++j) {
                b.lab.push_back(pend);
                b.ev.push_back(shift_chord(f, pev[j]));
                pend = plab[j + 1];
            }
            const SkelComp& sc = (f == 0 ? s1 : s2).comps[c];
            BEnd fin = sc.finish;
            // does the finish land on the interface?
            bool interface = (f == 0 && fin.side == 1) || (f == 1 && fin.side == 0);
            if (!interface) {
                // composite boundary
                b.sc.circle = false;
                b.sc.finish = (f == 0) ? BEnd{0, fin.pos} : BEnd{1, fin.pos};
                b.lab.push_back(pend);
                return b;
            }
            int nf = 1 - f;
            int nc = (f == 0) ? d2_at_src[fin.pos] : d1_at_tgt[fin.pos];
            assert(nc >= 0);
            if (used[nf][nc]) {
                assert(nf == f0 && nc == c0);
                // closed a circle
                b.sc.circle = true;
                // merge the wrap-around arc into lab[0]
                if (b.ev.empty())
                    b.lab.assign(1, pend);
                else {
                    b.lab.push_back(0);  // placeholder; merge below
                    // arc after last event wraps to before first event: that
                    // leading label was stored as b.lab[0]
                    b.lab.back() = norm_mod(pend + b.lab.front(), N);
                    b.lab.erase(b.lab.begin());
                }
                return b;
            }
            f = nf;
            c = nc;
        }
    };

    // entering ends: d1 begins at composite source, d2 begins at composite target
    for (int c = 0; c < C1; ++c)
        if (!s1.comps[c].circle && !used[0][c] && s1.comps[c].begin.side == 0) {
            Built b = walk(0, c);
            b.sc.begin = {0, s1.comps[c].begin.pos};
            built.push_back(std::move(b));
        }
    for (int c = 0; c < C2; ++c)
        if (!s2.comps[c].circle && !used[1][c] && s2.comps[c].begin.side == 1) {
            Built b = walk(1, c);
            b.sc.begin = {1, s2.comps[c].begin.pos};
            built.push_back(std::move(b));
        }
    // remaining interval pieces form circles
    for (int f = 0; f < 2; ++f)
        for (int c = 0; c < (f == 0 ? C1 : C2); ++c) {
            const SkelComp& sc = (f == 0 ? s1 : s2).comps[c];
            if (sc.circle || used[f][c]) continue;
            Built b = walk(f, c);
            assert(b.sc.circle);
            built.push_back(std::move(b));
        }
    // passthrough circles
    for (int f = 0; f < 2; ++f)
        for (int c = 0; c < (f == 0 ? C1 : C2); ++c) {
            const SkelComp& sc = (f == 0 ? s1 : s2).comps[c];
            if (!sc.circle) continue;
            Built b;
            b.sc.circle = true;
            b.res = piece_res(f, c);
            for (int ch : piece_ev(f, c)) b.ev.push_back(shift_chord(f, ch));
            b.lab = piece_lab(f, c);
            b.pieces.push_back({f, c});
            built.push_back(std::move(b));
        }

    // interlacing residue corrections within each factor
    for (auto& b : built) {
        for (size_t i = 0; i < b.pieces.size(); ++i)
            for (size_t j = i + 1; j < b.pieces.size(); ++j) {
                if (b.pieces[i].first != b.pieces[j].first) continue;
                int f = b.pieces[i].first;
                const Skeleton& s = f == 0 ? s1 : s2;
                const SkelComp& A = s.comps[b.pieces[i].second];
                const SkelComp& B = s.comps[b.pieces[j].second];
                if (A.circle || B.circle) continue;
                if (interlaced(A, B, (int)s.source.size(), (int)s.target.size())) b.res ^= 1;
            }
    }

    // assemble skeleton + diagram in canonical component order
    Skeleton out;
    out.pole = s1.pole;
    out.source = s1.source;
    out.target = s2.target;
    std::vector<int> order((int)built.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (built[a].sc.circle != built[b].sc.circle) return !built[a].sc.circle;
        if (built[a].sc.circle) return false;
        return built[a].sc.begin < built[b].sc.begin;
    });
    NDiagram d;
    d.N = N;
    d.deg = d1.deg + d2.deg;
    for (int i : order) {
        out.comps.push_back(built[i].sc);
        d.ev.push_back(built[i].ev);
        d.lab.push_back(built[i].lab);
        d.res.push_back(built[i].res);
    }
    d.skel = skel_id(out);
    d.pole_ev = d1.pole_ev;
    for (int ch : d2.pole_ev) d.pole_ev.push_back(ch + off);
    d.canonicalize();
    return d;
}

NDiagram tensor_diagrams(const NDiagram& d1, const NDiagram& d2) {
    const Skeleton& s1 = d1.skeleton();
    const Skeleton& s2 = d2.skeleton();
    if (d1.N != d2.N) throw DiagramError("tensor: N mismatch");
    if (s2.pole) throw DiagramError("tensor: pole on the right operand");
    int off = d1.deg;
    Skeleton out;
    out.pole = s1.pole;
    out.source = s1.source;
    out.target = s1.target;
    int ms = (int)s1.source.size(), mt = (int)s1.target.size();
    for (int l : s2.source) out.source.push_back(l);
    for (int l : s2.target) out.target.push_back(l);

    struct Item {
        SkelComp sc;
        std::vector<int> ev, lab;
        int res;
    };
    std::vector<Item> items;
    for (int c = 0; c < (int)s1.comps.size(); ++c)
        items.push_back({s1.comps[c], d1.ev[c], d1.lab[c], d1.res[c]});
    for (int c = 0; c < (int)s2.comps.size(); ++c) {
        SkelComp sc = s2.comps[c];
        if (!sc.circle) {
            sc.begin.pos += sc.begin.side == 0 ? ms : mt;
            sc.finish.pos += sc.finish.side == 0 ? ms : mt;
        }
        std::vector<int> ev;
        for (int ch : d2.ev[c]) ev.push_back(ch + off);
        items.push_back({sc, ev, d2.lab[c], d2.res[c]});
    }
    std::vector<int> order((int)items.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (items[a].sc.circle != items[b].sc.circle) return !items[a].sc.circle;
        if (items[a].sc.circle) return false;
        return items[a].sc.begin < items[b].sc.begin;
    });
    NDiagram d;
    d.N = d1.N;
    d.deg = d1.deg + d2.deg;
    for (int i : order) {
        out.comps.push_back(items[i].sc);
        d.ev.push_back(items[i].ev);
        d.lab.push_back(items[i].lab);
        d.res.push_back(items[i].res);
    }
    d.skel = skel_id(out);
    d.pole_ev = d1.pole_ev;
    d.canonicalize();
    return d;
}

// ---- series -------------------------------------------------------------

DiagramSeries DiagramSeries::unit(const Skeleton& endo, int N, int cap) {
    DiagramSeries s(skel_id(endo), N, cap);
    s.add(identity_diagram(endo, N), 1);
    return s;
}

DiagramSeries DiagramSeries::of(const NDiagram& d, int cap) {
    DiagramSeries s(d.skel, d.N, cap);
    s.add(d, 1);
    return s;
}

bool DiagramSeries::is_zero() const {
    for (auto& m : deg)
        if (!m.empty()) return false;
    return true;
}

void DiagramSeries::add(const NDiagram& d, const Rational& c) {
    if (d.deg > cap || btinv::is_zero(c)) return;
    auto& m = deg[d.deg];
    std::string k = d.key();
    auto it = m.find(k);
    if (it == m.end())
        m.emplace(std::move(k), std::make_pair(d, c));
    else {
        it->second.second += c;
        if (btinv::is_zero(it->second.second)) m.erase(it);
    }
}

DiagramSeries DiagramSeries::operator+(const DiagramSeries& o) const {
    DiagramSeries r = truncated(std::min(cap, o.cap));
    for (int d = 0; d <= r.cap; ++d)
        for (auto& [k, pc] : o.deg[d]) r.add(pc.first, pc.second);
    return r;
}

DiagramSeries DiagramSeries::operator-(const DiagramSeries& o) const {
    return *this + o.scaled(-1);
}

DiagramSeries DiagramSeries::scaled(const Rational& r) const {
    DiagramSeries out(skel, N, cap);
    if (btinv::is_zero(r)) return out;
    for (int d = 0; d <= cap; ++d)
        for (auto& [k, pc] : deg[d]) out.deg[d][k] = {pc.first, pc.second * r};
    return out;
}

DiagramSeries DiagramSeries::operator*(const DiagramSeries& o) const {
    int c = std::min(cap, o.cap);
    // composed skeleton: take it from the first actual product
    DiagramSeries r;
    bool init = false;
    for (int d1v = 0; d1v <= c; ++d1v)
        for (auto& [k1, pc1] : deg[d1v])
            for (int d2v = 0; d1v + d2v <= c; ++d2v)
                for (auto& [k2, pc2] : o.deg[d2v]) {
                    NDiagram prod = compose_diagrams(pc1.first, pc2.first);
                    if (!init) {
                        r = DiagramSeries(prod.skel, N, c);
                        init = true;
                    }
                    r.add(prod, pc1.second * pc2.second);
                }
    if (!init) {
        // zero product: still give it the right skeleton
        const Skeleton &a = skel_of(skel), &b = skel_of(o.skel);
        Skeleton s;
        s.pole = a.pole;
        s.source = a.source;
        s.target = b.target;
        // component structure unknown without diagrams; use empty placeholder
        r = DiagramSeries(skel_id(s), N, c);
    }
    return r;
}

DiagramSeries DiagramSeries::tensor(const DiagramSeries& o) const {
    int c = std::min(cap, o.cap);
    DiagramSeries r;
    bool init = false;
    for (int d1v = 0; d1v <= c; ++d1v)
        for (auto& [k1, pc1] : deg[d1v])
            for (int d2v = 0; d1v + d2v <= c; ++d2v)
                for (auto& [k2, pc2] : o.deg[d2v]) {
                    NDiagram prod = tensor_diagrams(pc1.first, pc2.first);
                    if (!init) {
                        r = DiagramSeries(prod.skel, N, c);
                        init = true;
                    }
                    r.add(prod, pc1.second * pc2.second);
                }
    if (!init) r = DiagramSeries(skel, N, c);
    return r;
}

bool DiagramSeries::operator==(const DiagramSeries& o) const {
    if (cap != o.cap) return false;
    for (int d = 0; d <= cap; ++d) {
        if (deg[d].size() != o.deg[d].size()) return false;
        auto it = deg[d].begin();
        auto jt = o.deg[d].begin();
        for (; it != deg[d].end(); ++it, ++jt)
            if (it->first != jt->first || !(it->second.second == jt->second.second)) return false;
    }
    return true;
}

DiagramSeries DiagramSeries::part(int d) const {
    DiagramSeries r(skel, N, cap);
    if (d <= cap) r.deg[d] = deg[d];
    return r;
}

DiagramSeries DiagramSeries::truncated(int new_cap) const {
    DiagramSeries r(skel, N, new_cap);
    for (int d = 0; d <= std::min(cap, new_cap); ++d) r.deg[d] = deg[d];
    return r;
}

DiagramSeries series_exp(const DiagramSeries& x) {
    if (!x.deg[0].empty()) throw DiagramError("series_exp: nonzero degree-0 part");
    const Skeleton& s = skel_of(x.skel);
    if (!(s.source == s.target)) throw DiagramError("series_exp: skeleton not an endomorphism");
    DiagramSeries acc = DiagramSeries::unit(s, x.N, x.cap);
    DiagramSeries pw = acc;
    Rational fact(1);
    for (int k = 1; k <= x.cap; ++k) {
        pw = pw * x;
        fact *= k;
        acc = acc + pw.scaled(Rational(1) / fact);
    }
    return acc;
}

DiagramSeries series_log(const DiagramSeries& g) {
    const Skeleton& s = skel_of(g.skel);
    DiagramSeries u = g - DiagramSeries::unit(s, g.N, g.cap);
    if (!u.deg[0].empty()) throw DiagramError("series_log: degree-0 part is not the identity");
    DiagramSeries acc(g.skel, g.N, g.cap);
    DiagramSeries pw = DiagramSeries::unit(s, g.N, g.cap);
    for (int k = 1; k <= g.cap; ++k) {
        pw = pw * u;
        acc = acc + pw.scaled(Rational((k % 2) ? 1 : -1) / k);
    }
    return acc;
}

DiagramSeries series_inverse(const DiagramSeries& g) {
    const Skeleton& s = skel_of(g.skel);
    DiagramSeries u = g - DiagramSeries::unit(s, g.N, g.cap);
    if (!u.deg[0].empty()) throw DiagramError("series_inverse: degree-0 part is not the identity");
    DiagramSeries acc = DiagramSeries::unit(s, g.N, g.cap);
    DiagramSeries pw = acc;
    for (int k = 1; k <= g.cap; ++k) {
        pw = pw * u;
        acc = acc + pw.scaled(Rational((k % 2) ? -1 : 1));
    }
    return acc;
}

}  // namespace btinv
