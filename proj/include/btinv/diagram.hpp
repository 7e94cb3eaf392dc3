#pragma once

// N-chord diagrams on a skeleton: chords (no chord may have both feet on the
// pole), per-arc Z/N labels on non-pole components, a Z/2 residue per
// non-pole component. Graded series of diagrams over Q with composition
// (including the strip-interlacing residue rule), tensor, exp/log, and the
// realization of a diagram as a singular tangle word.

#include <map>
#include <string>
#include <vector>

#include "btinv/rational.hpp"
#include "btinv/skeleton.hpp"
#include "btinv/tangle.hpp"

namespace btinv {

struct DiagramError : std::runtime_error {
    explicit DiagramError(const std::string& m) : std::runtime_error(m) {}
};

// interned skeletons
int skel_id(const Skeleton& s);
const Skeleton& skel_of(int id);

// Endpoint address: comp = index of a non-pole component in skeleton order,
// or -1 for the pole; idx = slot along the component's orientation (pole:
// downward).
struct Endpoint {
    int comp = 0;
    int idx = 0;
};

struct NDiagram {
    int skel = -1;
    int N = 1;
    int deg = 0;
    std::vector<std::vector<int>> ev;   // per non-pole comp: chord ids in order
    std::vector<int> pole_ev;           // chord ids along the pole
    std::vector<std::vector<int>> lab;  // per comp: arc labels in Z/N
    std::vector<int> res;               // per comp: residue in Z/2

    const Skeleton& skeleton() const { return skel_of(skel); }
    int arcs_of(int comp) const;  // label slots on a component
    bool operator==(const NDiagram& o) const;
    std::string key() const;  // canonical (renumbered chords, minimized circles)
    void canonicalize();      // in place

    std::string pretty() const;
};

// chords given as endpoint pairs; labels[c] sized for the arcs of comp c
NDiagram make_diagram(const Skeleton& skel, int N,
                      const std::vector<std::pair<Endpoint, Endpoint>>& chords,
                      const std::vector<std::vector<int>>& labels,
                      const std::vector<int>& residues);

NDiagram identity_diagram(const Skeleton& skel, int N);
// single chord between strands i and j of an identity-word skeleton
// (1-based; 0 means the pole)
NDiagram generator_chord(const Skeleton& word_skel, int N, int i, int j);
// label a on strand i of an identity-word skeleton
NDiagram generator_label(const Skeleton& word_skel, int N, int i, int a);
// self-chord on strand i (both feet on one strand, adjacent)
NDiagram generator_self_chord(const Skeleton& word_skel, int N, int i);

NDiagram compose_diagrams(const NDiagram& d1, const NDiagram& d2);
NDiagram tensor_diagrams(const NDiagram& d1, const NDiagram& d2);

// degree-truncated linear combination over Q; all diagrams share a skeleton
struct DiagramSeries {
    int skel = -1;
    int N = 1;
    int cap = 0;
    std::vector<std::map<std::string, std::pair<NDiagram, Rational>>> deg;

    DiagramSeries() : deg(1) {}
    DiagramSeries(int skel_, int N_, int cap_) : skel(skel_), N(N_), cap(cap_), deg(cap_ + 1) {}
    static DiagramSeries unit(const Skeleton& endo_skel, int N, int cap);
    static DiagramSeries of(const NDiagram& d, int cap);

    bool is_zero() const;
    void add(const NDiagram& d, const Rational& c);
    DiagramSeries operator+(const DiagramSeries& o) const;
    DiagramSeries operator-(const DiagramSeries& o) const;
    DiagramSeries scaled(const Rational& r) const;
    DiagramSeries operator*(const DiagramSeries& o) const;  // composition d1 then d2
    DiagramSeries tensor(const DiagramSeries& o) const;
    bool operator==(const DiagramSeries& o) const;
    DiagramSeries part(int d) const;
    DiagramSeries truncated(int new_cap) const;
};

// endomorphism-skeleton series utilities
DiagramSeries series_exp(const DiagramSeries& x);
DiagramSeries series_log(const DiagramSeries& g);
DiagramSeries series_inverse(const DiagramSeries& g);

// Realization: a singular B-tangle word whose skein resolution certifies the
// diagram as the leading term. Supports skeleta made of boundary-to-boundary
// intervals (source pos = target pos, any orientation) and circles.
TangleWord realize(const NDiagram& d, int N);

// text round-trip for diagrams and series
std::string diagram_file_str(const NDiagram& d);
NDiagram diagram_file_parse(const std::string& text);
std::string series_file_str(const DiagramSeries& s);
DiagramSeries series_file_parse(const std::string& text);

}  // namespace btinv
