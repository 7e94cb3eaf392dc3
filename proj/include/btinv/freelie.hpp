#pragma once

// Degree-truncated free associative algebra on an alphabet {a, b(0), ..,
// b(N-1)}, with the Lyndon basis of its free Lie part, exp/log, group-like
// detection, and substitution into arbitrary graded algebras.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "btinv/rational.hpp"

namespace btinv {

// Words use byte letters 0..alphabet-1; letter 0 prints as "a", letter k as
// "b<k-1>".
struct FreeSeries {
    int alphabet = 2;
    int cap = 0;
    // per degree d, word (length d) -> coefficient; no zeros stored
    std::vector<std::map<std::string, Rational>> deg;

    FreeSeries() : deg(1) {}
    FreeSeries(int alphabet_, int cap_) : alphabet(alphabet_), cap(cap_), deg(cap_ + 1) {}

    static FreeSeries unit(int alphabet, int cap);
    static FreeSeries letter(int alphabet, int cap, int l);

    bool is_zero() const;
    Rational coeff(const std::string& w) const;
    void set(const std::string& w, const Rational& c);
    void add_to(const std::string& w, const Rational& c);

    FreeSeries truncated(int new_cap) const;
    FreeSeries operator+(const FreeSeries& o) const;
    FreeSeries operator-(const FreeSeries& o) const;
    FreeSeries operator*(const FreeSeries& o) const;
    FreeSeries scaled(const Rational& r) const;
    bool operator==(const FreeSeries& o) const;

    // homogeneous part as a series
    FreeSeries part(int d) const;
};

FreeSeries series_exp(const FreeSeries& x);  // requires zero constant term
FreeSeries series_log(const FreeSeries& g);  // requires constant term 1
FreeSeries series_inverse(const FreeSeries& g);
FreeSeries commutator(const FreeSeries& x, const FreeSeries& y);

struct LyndonWord {
    std::string word;
    int degree = 0;
    // standard factorization bracket, expanded in the associative algebra
    std::map<std::string, Rational> expansion;
};

// All Lyndon words of exactly the given degree, lexicographically sorted.
std::vector<LyndonWord> lyndon_basis(int alphabet, int degree);

// Writes the homogeneous degree-d component of h in the Lyndon bracket
// basis. Returns false (and the offending remainder) if it is not a Lie
// element. Uses the triangularity of bracket expansions wrt lex order.
bool lie_coordinates(const FreeSeries& h, int d, std::vector<Rational>* coords,
                     std::map<std::string, Rational>* remainder);

struct GroupLikeReport {
    bool ok = true;
    int failing_degree = -1;
    std::map<std::string, Rational> non_lie_part;
};
GroupLikeReport is_group_like(const FreeSeries& g);

// Substitution homomorphism: one image per letter, into any graded algebra
// presented by its multiplication/addition/scaling. Images must have no
// degree-0 part (the target truncation handles capping).
template <class T>
struct AlgebraOps {
    T unit;
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&, const T&)> add;
    std::function<T(const T&, const Rational&)> scale;
};

template <class T>
T substitute(const FreeSeries& f, const std::vector<T>& images, const AlgebraOps<T>& ops) {
    if ((int)images.size() != f.alphabet) throw std::runtime_error("substitute: arity mismatch");
    T acc = ops.scale(ops.unit, Rational(0));
    bool acc_set = false;
    // shared-prefix evaluation over all words present
    std::vector<T> prefix;  // prefix[i] = product of first i letters of current word
    std::string cur;
    std::function<void(const std::string&, const Rational&)> addterm =
        [&](const std::string& w, const Rational& c) {
            size_t keep = 0;
            while (keep < cur.size() && keep < w.size() && cur[keep] == w[keep]) ++keep;
            prefix.resize(keep + 1 > prefix.size() ? prefix.size() : keep);
            cur = cur.substr(0, keep);
            while (cur.size() < w.size()) {
                const T& img = images[(unsigned char)w[cur.size()]];
                T next = prefix.empty() ? img : ops.mul(prefix.back(), img);
                prefix.push_back(next);
                cur.push_back(w[cur.size()]);
            }
            T term = prefix.empty() ? ops.unit : prefix.back();
            T scaled = ops.scale(term, c);
            if (!acc_set) {
                acc = scaled;
                acc_set = true;
            } else
                acc = ops.add(acc, scaled);
        };
    for (int d = 0; d <= f.cap; ++d)
        for (auto& [w, c] : f.deg[d]) addterm(w, c);
    if (!acc_set) acc = ops.scale(ops.unit, Rational(0));
    return acc;
}

// Serialization: lines "degree word coeff"; word "1" for the empty word.
std::string freeseries_str(const FreeSeries& f);
FreeSeries freeseries_parse(const std::string& text, int alphabet, int cap);
std::string letter_name(int l);

}  // namespace btinv
