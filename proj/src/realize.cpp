#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>

#include "btinv/diagram.hpp"

// Realization of an N-chord diagram as a singular tangle word. Components
// are laid out as alternating down/up vertical passes joined by cups at the
// top and caps at the bottom; every chord becomes a singular gadget at its
// own level (pole chords in pole order), labels become pole loops on a
// routed strand, and one curl per component fixes the residue parity.

namespace btinv {

namespace {

struct Pass {
    bool down;
    int first_ev, last_ev;  // comp-event index range (inclusive); empty if first>last
};

struct Track {
    int comp;  // -2: none
    int pass;
};

struct Builder {
    const NDiagram& d;
    const Skeleton& s;
    int N;
    std::vector<Slice> out;
    std::vector<Track> tracks;
    std::vector<std::vector<Pass>> passes;      // per comp
    std::vector<int> slot;                      // chord id -> slot
    std::vector<std::vector<int>> emitted;      // per comp, per pass: gadgets done
    std::vector<std::vector<char>> lab_done;    // per comp, per arc
    std::vector<std::pair<int, int>> witness;   // per comp: (level-ish slice count, position)

    explicit Builder(const NDiagram& d_) : d(d_), s(d_.skeleton()), N(d_.N) {}

    int find_track(int comp, int pass) const {
        for (int i = 0; i < (int)tracks.size(); ++i)
            if (tracks[i].comp == comp && tracks[i].pass == pass) return i;
        throw DiagramError("realize internal: track not found");
    }

    // move the track at index `from` so it ends at index `to`
    void route(int from, int to) {
        while (from > to) {
            out.push_back({SliceKind::Cross, from, 1});  // swap positions from, from+1
            std::swap(tracks[from - 1], tracks[from]);
            --from;
        }
        while (from < to) {
            out.push_back({SliceKind::Cross, from + 1, 1});
            std::swap(tracks[from], tracks[from + 1]);
            ++from;
        }
    }

    int letter_of(int comp, int pass) const { return passes[comp][pass].down ? 1 : -1; }

    void plan_passes() {
        int C = (int)s.comps.size();
        passes.resize(C);
        for (int c = 0; c < C; ++c) {
            const SkelComp& sc = s.comps[c];
            bool start_down = sc.circle ? true : (sc.begin.side == 0);
            bool end_down = sc.circle ? false : (sc.finish.side == 1);
            int k = (int)d.ev[c].size();
            std::vector<Pass> ps;
            bool dir = start_down;
            int cur_first = 0;
            int last_slot = -1;
            bool have = false;
            for (int j = 0; j < k; ++j) {
                int sl = slot[d.ev[c][j]];
                bool ok = !have || (dir ? sl > last_slot : sl < last_slot);
                if (!ok) {
                    ps.push_back({dir, cur_first, j - 1});
                    dir = !dir;
                    cur_first = j;
                    have = false;
                }
                last_slot = sl;
                have = true;
            }
            ps.push_back({dir, cur_first, k - 1});
            if ((ps.back().down != end_down)) ps.push_back({!dir, k, k - 1});
            if (sc.circle && (int)ps.size() < 2) ps.push_back({false, k, k - 1});
            assert(ps.back().down == end_down);
            passes[c] = ps;
        }
    }

    void assign_slots() {
        slot.assign(d.deg, -1);
        int next = 0;
        for (int ch : d.pole_ev) slot[ch] = next++;
        for (int ch = 0; ch < d.deg; ++ch)
            if (slot[ch] < 0) slot[ch] = next++;
    }

    int arc_of_label_slot(int c, int j) const {
        // stored label slot j -> "before event i" arc coordinates
        // (circle slot j holds the arc after event j)
        if (!s.comps[c].circle) return j;
        int k = (int)d.ev[c].size();
        if (k == 0) return 0;
        return (j + 1) % k;
    }

    // current arc (in "before event i" coordinates) of a track
    int current_arc(int c, int p) const {
        const Pass& ps = passes[c][p];
        int m = ps.last_ev - ps.first_ev + 1;
        int e = emitted[c][p];
        int arc = (m <= 0) ? ps.first_ev : (ps.down ? ps.first_ev + e : ps.last_ev + 1 - e);
        int k = (int)d.ev[c].size();
        if (s.comps[c].circle && k > 0) arc %= k;
        return arc;
    }

    void flush_labels() {
        int C = (int)s.comps.size();
        for (int c = 0; c < C; ++c) {
            int arcs = d.arcs_of(c);
            for (int j = 0; j < arcs; ++j) {
                if (lab_done[c][j]) continue;
                int arc = arc_of_label_slot(c, j);
                for (int p = 0; p < (int)passes[c].size(); ++p) {
                    if (current_arc(c, p) != arc) continue;
                    // circles: stored slot j is the arc after event j; make
                    // sure we are on the right side for the wrap arc
                    lab_done[c][j] = 1;
                    int or_ = passes[c][p].down ? 1 : -1;
                    int m = ((d.lab[c][j] * or_) % N + N) % N;
                    if (need_bump[c]) {
                        m += N;
                        need_bump[c] = 0;
                    }
                    if (m > 0) {
                        int t = find_track(c, p);
                        route(t, 0);
                        for (int q = 0; q < m; ++q) out.push_back({SliceKind::PoleLoop, 1, 1});
                    }
                    break;
                }
            }
        }
    }

    std::vector<char> need_bump;

    void plan_bumps() {
        int C = (int)s.comps.size();
        need_bump.assign(C, 0);
        if (N % 2 == 0) return;
        for (int c = 0; c < C; ++c) {
            int total = 0;
            int arcs = d.arcs_of(c);
            for (int j = 0; j < arcs; ++j) {
                // emission count parity: lift of +-value mod N
                int v = ((d.lab[c][j]) % N + N) % N;
                total += v;  // sign of direction does not change parity
            }
            if (total % 2) need_bump[c] = 1;
        }
    }

    TangleWord build(const std::vector<char>& curls) {
        out.clear();
        tracks.clear();
        witness.assign(s.comps.size(), {-1, -1});
        int C = (int)s.comps.size();
        emitted.assign(C, {});
        for (int c = 0; c < C; ++c) emitted[c].assign(passes[c].size(), 0);
        lab_done.assign(C, {});
        for (int c = 0; c < C; ++c) lab_done[c].assign(d.arcs_of(c), 0);
        plan_bumps();

        // source-anchored tracks
        tracks.assign(s.source.size(), Track{-2, -1});
        for (int c = 0; c < C; ++c) {
            const SkelComp& sc = s.comps[c];
            if (sc.circle) continue;
            if (sc.begin.side == 0) {
                tracks[sc.begin.pos - 1] = {c, 0};
                witness[c] = {0, sc.begin.pos};
            }
            if (sc.finish.side == 0) tracks[sc.finish.pos - 1] = {c, (int)passes[c].size() - 1};
        }
        for (auto& t : tracks)
            if (t.comp == -2) throw DiagramError("realize internal: unanchored source position");

        // cups for all top turns: (up pass p, down pass p+1), plus the circle
        // closing pair (last, 0)
        for (int c = 0; c < C; ++c) {
            int P = (int)passes[c].size();
            for (int p = 0; p + 1 < P; ++p)
                if (!passes[c][p].down) {
                    out.push_back({SliceKind::Cup, (int)tracks.size() + 1, 1});  // lr: (-,+)
                    tracks.push_back({c, p});
                    tracks.push_back({c, p + 1});
                }
            if (s.comps[c].circle) {
                out.push_back({SliceKind::Cup, (int)tracks.size() + 1, 1});
                tracks.push_back({c, P - 1});
                tracks.push_back({c, 0});
                witness[c] = {(int)out.size(), (int)tracks.size()};  // the down leg
            }
        }

        // residue-fixing curls (one per flagged component, on a down pass)
        for (int c = 0; c < C; ++c) {
            if (!curls[c]) continue;
            int p = -1;
            for (int q = 0; q < (int)passes[c].size(); ++q)
                if (passes[c][q].down) {
                    p = q;
                    break;
                }
            if (p < 0) throw DiagramError("realize internal: no down pass for curl");
            int t = find_track(c, p);
            int pos = t + 1;
            int letter = 1;  // down pass
            out.push_back({SliceKind::Cup, pos, letter > 0 ? -1 : 1});
            out.push_back({SliceKind::Cross, pos + 1, -1});
            out.push_back({SliceKind::Cap, pos + 1, 0});
        }

        flush_labels();

        // gadgets in slot order
        std::vector<int> by_slot(d.deg);
        std::iota(by_slot.begin(), by_slot.end(), 0);
        std::sort(by_slot.begin(), by_slot.end(), [&](int a, int b) { return slot[a] < slot[b]; });
        // feet of each chord on components: (comp, comp-event index)
        std::vector<std::vector<std::pair<int, int>>> feet(d.deg);
        for (int c = 0; c < C; ++c)
            for (int j = 0; j < (int)d.ev[c].size(); ++j) feet[d.ev[c][j]].push_back({c, j});
        std::vector<char> on_pole(d.deg, 0);
        for (int ch : d.pole_ev) on_pole[ch] = 1;

        auto pass_of = [&](int c, int j) {
            for (int p = 0; p < (int)passes[c].size(); ++p)
                if (passes[c][p].first_ev <= j && j <= passes[c][p].last_ev) return p;
            throw DiagramError("realize internal: event without pass");
        };

        for (int ch : by_slot) {
            if (on_pole[ch]) {
                assert(feet[ch].size() == 1);
                auto [c, j] = feet[ch][0];
                int p = pass_of(c, j);
                route(find_track(c, p), 0);
                out.push_back({SliceKind::SingPole, 1, 1});
                emitted[c][p]++;
            } else {
                assert(feet[ch].size() == 2);
                auto [c1, j1] = feet[ch][0];
                auto [c2, j2] = feet[ch][1];
                int p1 = pass_of(c1, j1), p2 = pass_of(c2, j2);
                route(find_track(c1, p1), 0);
                route(find_track(c2, p2), 1);
                out.push_back({SliceKind::SingCross, 1, 1});
                // the singular crossing swaps the two tracks
                std::swap(tracks[0], tracks[1]);
                emitted[c1][p1]++;
                emitted[c2][p2]++;
            }
            flush_labels();
        }

        // caps for bottom turns
        for (int c = 0; c < C; ++c) {
            int P = (int)passes[c].size();
            for (int p = 0; p + 1 < P; ++p)
                if (passes[c][p].down) {
                    route(find_track(c, p), 0);
                    route(find_track(c, p + 1), 1);
                    out.push_back({SliceKind::Cap, 1, 0});
                    tracks.erase(tracks.begin(), tracks.begin() + 2);
                }
            if (s.comps[c].circle) {
                route(find_track(c, P - 1), 0);
                route(find_track(c, 0), 1);
                // cap wants (down, up) or (up, down): pass P-1 is up, pass 0 down
                out.push_back({SliceKind::Cap, 1, 0});
                tracks.erase(tracks.begin(), tracks.begin() + 2);
            }
        }

        // route interval ends to their target positions
        for (int pos = 1; pos <= (int)s.target.size(); ++pos) {
            int want_c = -1, want_p = -1;
            for (int c = 0; c < C; ++c) {
                const SkelComp& sc = s.comps[c];
                if (sc.circle) continue;
                if (sc.begin.side == 1 && sc.begin.pos == pos) {
                    want_c = c;
                    want_p = 0;
                }
                if (sc.finish.side == 1 && sc.finish.pos == pos) {
                    want_c = c;
                    want_p = (int)passes[c].size() - 1;
                }
            }
            if (want_c < 0) throw DiagramError("realize internal: unmatched target position");
            route(find_track(want_c, want_p), pos - 1);
        }

        TangleWord w;
        w.pole = s.pole;
        w.source = s.source;
        w.slices = out;
        w.validate();
        return w;
    }
};

}  // namespace

TangleWord realize(const NDiagram& d0, int N) {
    NDiagram d = d0;
    if (d.N != N) throw DiagramError("realize: N mismatch");
    Builder b(d);
    b.assign_slots();
    b.plan_passes();

    // first build without curls to measure parities
    std::vector<char> curls(b.s.comps.size(), 0);
    TangleWord w0 = b.build(curls);
    if (!(w0.skel == d.skeleton()))
        throw DiagramError("realize internal: skeleton mismatch\n got " + w0.skel.key() +
                           "\nwant " + d.skeleton().key());
    // identify the built component for each diagram component
    // (skeleton comps are sorted identically; circles correspond by witness)
    TangleWord wprobe = w0;
    auto measure = [&](TangleWord& w) {
        w.validate();
        std::vector<WindingTwist> wt(w.skel.comps.size());
        auto all = winding_and_twist(w);
        return all;
    };
    auto wt = measure(wprobe);
    std::vector<int> comp_map(b.s.comps.size());  // diagram comp -> built comp
    {
        std::vector<char> taken(wt.size(), 0);
        for (int c = 0; c < (int)b.s.comps.size(); ++c) {
            if (!b.s.comps[c].circle) {
                for (int k = 0; k < (int)w0.skel.comps.size(); ++k)
                    if (!taken[k] && w0.skel.comps[k] == b.s.comps[c]) {
                        comp_map[c] = k;
                        taken[k] = 1;
                        break;
                    }
            } else {
                auto [lvl, pos] = b.witness[c];
                int piece = w0.piece_at[lvl][pos - 1];
                comp_map[c] = w0.piece_comp[piece];
                taken[comp_map[c]] = 1;
            }
        }
    }
    bool need_rebuild = false;
    for (int c = 0; c < (int)b.s.comps.size(); ++c) {
        int k = comp_map[c];
        int parity = ((d.res[c] + wt[k].winding + wt[k].twist) % 2 + 2) % 2;
        if (parity) {
            curls[c] = 1;
            need_rebuild = true;
        }
    }
    TangleWord w = need_rebuild ? b.build(curls) : w0;
    // final certification: residue = twist - winding (mod 2) on every comp
    auto wt2 = winding_and_twist(w);
    for (int c = 0; c < (int)b.s.comps.size(); ++c) {
        int k = comp_map[c];
        if (((wt2[k].twist - wt2[k].winding) % 2 + 2) % 2 != d.res[c])
            throw DiagramError("realize internal: residue parity failed");
    }
    return w;
}

}  // namespace btinv
