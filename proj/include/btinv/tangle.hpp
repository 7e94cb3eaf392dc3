#pragma once

// Sliced (Morse) presentations of framed oriented tangles in the solid
// torus, their composition/tensor calculus, the skein resolution of singular
// words, move rewriting, and per-component winding/twist numbers. Framing is
// blackboard throughout; the pole strand is leftmost and immutable.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "btinv/rational.hpp"
#include "btinv/skeleton.hpp"

namespace btinv {

struct TangleError : std::runtime_error {
    explicit TangleError(const std::string& m) : std::runtime_error(m) {}
};
struct ParseError : TangleError {
    int line;
    ParseError(int line_, const std::string& m)
        : TangleError("line " + std::to_string(line_) + ": " + m), line(line_) {}
};

enum class SliceKind { Cross, Cup, Cap, PoleLoop, SingCross, SingPole };

struct WindingTwist {
    int winding = 0;  // class of the component in pi_1(C*) = Z
    int twist = 0;    // blackboard writhe contribution
};

struct Slice {
    SliceKind kind = SliceKind::Cross;
    int pos = 1;   // 1-based among non-pole strands
    int sign = 1;  // Cross/PoleLoop: +-1; Cup: +1 = lr, -1 = rl
    bool operator==(const Slice& o) const {
        return kind == o.kind && pos == o.pos && sign == o.sign;
    }
};

struct TangleWord {
    bool pole = false;
    std::vector<int> source;
    std::vector<Slice> slices;

    // derived, rebuilt by validate(): levels[i] = word after slice i
    std::vector<std::vector<int>> levels;
    Skeleton skel;
    // piece ids per level/position and final component of each piece
    std::vector<std::vector<int>> piece_at;
    std::vector<int> piece_comp;  // piece id -> index into skel.comps (-1: none)
    std::vector<WindingTwist> wt_cache_;

    const std::vector<int>& target() const { return levels.back(); }
    int width(int level) const { return (int)levels[level].size(); }
    bool singular() const;
    void validate();  // throws TangleError; fills all derived data

    bool operator==(const TangleWord& o) const {
        return pole == o.pole && source == o.source && slices == o.slices;
    }
};

TangleWord parse_tangle_word(const std::string& text);
std::string serialize(const TangleWord& t);

TangleWord identity_word(bool pole, const std::vector<int>& word);
TangleWord compose(const TangleWord& t1, const TangleWord& t2);
TangleWord tensor(const TangleWord& bt, const TangleWord& t);

// Formal linear combination of words over one skeleton, keyed by canonical
// serialization.
struct TangleCombination {
    std::map<std::string, std::pair<TangleWord, Rational>> terms;
    void add(const TangleWord& t, const Rational& c);
};

// Skein resolution: ordinary singular crossings resolve to X+ - X-; pole
// singularities to (T+)^N - id.
TangleCombination resolve_singular(const TangleWord& st, int N);

// ---- moves ------------------------------------------------------------

enum class MoveId {
    SlideFar,
    R2Insert,
    R2Delete,
    R3,
    ZigzagInsert,
    ZigzagDelete,
    CupSlide,        // [U(p,o), X(p+1,s)] <-> [U(p+1,o), X(p,-s)]
    CapSlide,        // [X(p+1,s), X(p,s), A(p+1)] <-> [A(p)]
    KinkPairInsert,
    KinkPairDelete,
    Reflection,      // [T a, X1 a, T a, X1 a] <-> [X1 a, T a, X1 a, T a]
    DualityInsert,   // [A(1)] -> [T a, X1 a, T a, X1 -a, A(1)]
    DualityDelete,
    DualityCupInsert,  // upside-down version on a cup
    DualityCupDelete,
};

struct Move {
    MoveId id;
    int site = 0;    // slice index the pattern starts at
    int pos = 1;     // strand position parameter (inserting moves)
    int sign = 1;    // sign parameter
    int orient = 1;  // cup orientation parameter (+1 = lr)
    int variant = 0; // pattern chirality where applicable
};

TangleWord apply_move(const TangleWord& t, const Move& m);
std::vector<Move> enumerate_moves(const TangleWord& t, bool include_inserting = true);

// ---- framing data -----------------------------------------------------

// one record per non-pole skeleton component, in skeleton order
std::vector<WindingTwist> winding_and_twist(const TangleWord& t);

}  // namespace btinv
