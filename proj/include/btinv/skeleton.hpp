#pragma once

#include <string>
#include <vector>

#include "btinv/rational.hpp"

namespace btinv {

// Boundary end of an interval component: side 0 = source word, 1 = target
// word; pos is 1-based within the word (pole excluded).
struct BEnd {
    int side = 0;
    int pos = 0;
    bool operator==(const BEnd& o) const { return side == o.side && pos == o.pos; }
    bool operator<(const BEnd& o) const {
        return side != o.side ? side < o.side : pos < o.pos;
    }
};

// A non-pole component of a skeleton. Intervals run from `begin` (where the
// curve enters the diagram) to `finish`; circles carry no ends.
struct SkelComp {
    bool circle = false;
    BEnd begin, finish;
    bool operator==(const SkelComp& o) const {
        return circle == o.circle && (circle || (begin == o.begin && finish == o.finish));
    }
};

// Oriented skeleton with ordered boundary words over {+1,-1}. A letter is +1
// when the strand runs downward (source at the top) at that boundary
// position. The distinguished pole, when present, is leftmost and carries
// neither letters nor residue.
struct Skeleton {
    bool pole = false;
    std::vector<int> source, target;
    std::vector<SkelComp> comps;

    int num_comps() const { return (int)comps.size(); }
    bool composable_with(const Skeleton& o) const { return pole == o.pole && target == o.source; }
    bool operator==(const Skeleton& o) const {
        return pole == o.pole && source == o.source && target == o.target && comps == o.comps;
    }
    std::string key() const;

    // canonical order: intervals by begin end, then circles
    void sort_comps();

    static Skeleton identity(bool pole, const std::vector<int>& word);
    // pole + a single circle (the closed B-knot skeleton)
    static Skeleton closed_knot(bool pole = true, int ncircles = 1);
};

std::string word_str(bool pole, const std::vector<int>& letters);
std::vector<int> word_parse(const std::string& s, bool* pole);

}  // namespace btinv
