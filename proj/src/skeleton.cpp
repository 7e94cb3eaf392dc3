#include "btinv/skeleton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace btinv {

std::string word_str(bool pole, const std::vector<int>& letters) {
    std::string s;
    if (pole) s += "*";
    for (int l : letters) s += (l > 0 ? '+' : '-');
    return s;
}

std::vector<int> word_parse(const std::string& s, bool* pole) {
    std::vector<int> w;
    bool p = false;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '*') {
            if (i != 0) throw std::runtime_error("'*' only allowed first in object word");
            p = true;
        } else if (c == '+')
            w.push_back(1);
        else if (c == '-')
            w.push_back(-1);
        else
            throw std::runtime_error(std::string("bad object letter '") + c + "'");
    }
    if (pole) *pole = p;
    return w;
}

void Skeleton::sort_comps() {
    std::stable_sort(comps.begin(), comps.end(), [](const SkelComp& a, const SkelComp& b) {
        if (a.circle != b.circle) return !a.circle;
        if (a.circle) return false;
        return a.begin < b.begin;
    });
}

std::string Skeleton::key() const {
    std::ostringstream os;
    os << word_str(pole, source) << ">" << word_str(pole, target) << "|";
    for (auto& c : comps) {
        if (c.circle)
            os << "O";
        else
            os << "I" << c.begin.side << "." << c.begin.pos << "-" << c.finish.side << "."
               << c.finish.pos;
        os << ";";
    }
    return os.str();
}

Skeleton Skeleton::identity(bool pole, const std::vector<int>& word) {
    Skeleton s;
    s.pole = pole;
    s.source = s.target = word;
    for (int i = 0; i < (int)word.size(); ++i) {
        SkelComp c;
        c.circle = false;
        // +1: runs downward, enters at the source
        if (word[i] > 0) {
            c.begin = {0, i + 1};
            c.finish = {1, i + 1};
        } else {
            c.begin = {1, i + 1};
            c.finish = {0, i + 1};
        }
        s.comps.push_back(c);
    }
    s.sort_comps();
    return s;
}

Skeleton Skeleton::closed_knot(bool pole, int ncircles) {
    Skeleton s;
    s.pole = pole;
    for (int i = 0; i < ncircles; ++i) {
        SkelComp c;
        c.circle = true;
        s.comps.push_back(c);
    }
    return s;
}

}  // namespace btinv
