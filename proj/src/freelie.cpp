#include "btinv/freelie.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace btinv {

FreeSeries FreeSeries::unit(int alphabet, int cap) {
    FreeSeries f(alphabet, cap);
    f.deg[0][""] = 1;
    return f;
}

FreeSeries FreeSeries::letter(int alphabet, int cap, int l) {
    FreeSeries f(alphabet, cap);
    if (cap >= 1) f.deg[1][std::string(1, (char)l)] = 1;
    return f;
}

bool FreeSeries::is_zero() const {
    for (auto& m : deg)
        if (!m.empty()) return false;
    return true;
}

Rational FreeSeries::coeff(const std::string& w) const {
    int d = (int)w.size();
    if (d > cap) return 0;
    auto it = deg[d].find(w);
    return it == deg[d].end() ? Rational(0) : it->second;
}

void FreeSeries::set(const std::string& w, const Rational& c) {
    int d = (int)w.size();
    if (d > cap) return;
    if (btinv::is_zero(c))
        deg[d].erase(w);
    else
        deg[d][w] = c;
}

void FreeSeries::add_to(const std::string& w, const Rational& c) {
    int d = (int)w.size();
    if (d > cap) return;
    auto it = deg[d].find(w);
    if (it == deg[d].end()) {
        if (!btinv::is_zero(c)) deg[d][w] = c;
    } else {
        it->second += c;
        if (btinv::is_zero(it->second)) deg[d].erase(it);
    }
}

FreeSeries FreeSeries::truncated(int new_cap) const {
    FreeSeries f(alphabet, new_cap);
    for (int d = 0; d <= std::min(cap, new_cap); ++d) f.deg[d] = deg[d];
    return f;
}

FreeSeries FreeSeries::operator+(const FreeSeries& o) const {
    assert(alphabet == o.alphabet);
    int c = std::min(cap, o.cap);
    FreeSeries f = truncated(c);
    for (int d = 0; d <= c; ++d)
        for (auto& [w, x] : o.deg[d]) f.add_to(w, x);
    return f;
}

FreeSeries FreeSeries::operator-(const FreeSeries& o) const { return *this + o.scaled(-1); }

FreeSeries FreeSeries::operator*(const FreeSeries& o) const {
    assert(alphabet == o.alphabet);
    int c = std::min(cap, o.cap);
    FreeSeries f(alphabet, c);
    for (int d1 = 0; d1 <= c; ++d1) {
        if (d1 > cap) break;
        for (auto& [w1, x1] : deg[d1])
            for (int d2 = 0; d1 + d2 <= c && d2 <= o.cap; ++d2)
                for (auto& [w2, x2] : o.deg[d2]) f.add_to(w1 + w2, x1 * x2);
    }
    return f;
}

FreeSeries FreeSeries::scaled(const Rational& r) const {
    FreeSeries f(alphabet, cap);
    if (btinv::is_zero(r)) return f;
    for (int d = 0; d <= cap; ++d)
        for (auto& [w, x] : deg[d]) f.deg[d][w] = x * r;
    return f;
}

bool FreeSeries::operator==(const FreeSeries& o) const {
    return alphabet == o.alphabet && cap == o.cap && deg == o.deg;
}

FreeSeries FreeSeries::part(int d) const {
    FreeSeries f(alphabet, cap);
    if (d <= cap) f.deg[d] = deg[d];
    return f;
}

FreeSeries series_exp(const FreeSeries& x) {
    if (!x.deg[0].empty()) throw std::runtime_error("exp: nonzero constant term");
    FreeSeries acc = FreeSeries::unit(x.alphabet, x.cap);
    FreeSeries pw = FreeSeries::unit(x.alphabet, x.cap);
    Rational fact(1);
    for (int k = 1; k <= x.cap; ++k) {
        pw = pw * x;
        fact *= k;
        acc = acc + pw.scaled(Rational(1) / fact);
    }
    return acc;
}

FreeSeries series_log(const FreeSeries& g) {
    if (g.coeff("") != 1) throw std::runtime_error("log: constant term not 1");
    FreeSeries u = g - FreeSeries::unit(g.alphabet, g.cap);
    FreeSeries acc(g.alphabet, g.cap);
    FreeSeries pw = FreeSeries::unit(g.alphabet, g.cap);
    for (int k = 1; k <= g.cap; ++k) {
        pw = pw * u;
        Rational c = Rational((k % 2) ? 1 : -1) / k;
        acc = acc + pw.scaled(c);
    }
    return acc;
}

FreeSeries series_inverse(const FreeSeries& g) {
    Rational c0 = g.coeff("");
    if (btinv::is_zero(c0)) throw std::runtime_error("inverse: zero constant term");
    FreeSeries u = FreeSeries::unit(g.alphabet, g.cap).scaled(Rational(1) / c0);
    FreeSeries r = g.scaled(Rational(1) / c0) - FreeSeries::unit(g.alphabet, g.cap);
    FreeSeries acc = FreeSeries::unit(g.alphabet, g.cap);
    FreeSeries pw = FreeSeries::unit(g.alphabet, g.cap);
    for (int k = 1; k <= g.cap; ++k) {
        pw = pw * r;
        acc = acc + pw.scaled(Rational((k % 2) ? -1 : 1));
    }
    return acc * u;
}

FreeSeries commutator(const FreeSeries& x, const FreeSeries& y) { return x * y - y * x; }

namespace {

// Duval's algorithm for Lyndon words of length exactly n.
std::vector<std::string> lyndon_words(int alphabet, int n) {
    std::vector<std::string> out;
    std::string w = std::string(1, (char)0);
    while (!w.empty()) {
        if ((int)w.size() == n) out.push_back(w);
        int k = (int)w.size();
        while ((int)w.size() < n) w.push_back(w[w.size() % k]);
        while (!w.empty() && w.back() == (char)(alphabet - 1)) w.pop_back();
        if (!w.empty()) w.back() = (char)(w.back() + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// right standard factorization: w = uv with v the longest proper Lyndon suffix
std::pair<std::string, std::string> standard_factorization(const std::string& w) {
    assert(w.size() >= 2);
    // longest proper suffix that is Lyndon = the lexicographically smallest
    // proper suffix
    size_t best = 1;
    for (size_t i = 1; i < w.size(); ++i)
        if (w.substr(i) < w.substr(best)) best = i;
    return {w.substr(0, best), w.substr(best)};
}

std::map<std::string, Rational> bracket_expand(const std::string& w) {
    if (w.size() == 1) return {{w, Rational(1)}};
    auto [u, v] = standard_factorization(w);
    auto eu = bracket_expand(u), ev = bracket_expand(v);
    std::map<std::string, Rational> r;
    auto acc = [&r](const std::string& k, const Rational& c) {
        auto it = r.find(k);
        if (it == r.end())
            r[k] = c;
        else {
            it->second += c;
            if (is_zero(it->second)) r.erase(it);
        }
    };
    for (auto& [a, ca] : eu)
        for (auto& [b, cb] : ev) {
            acc(a + b, ca * cb);
            acc(b + a, -(ca * cb));
        }
    return r;
}

}  // namespace

std::vector<LyndonWord> lyndon_basis(int alphabet, int degree) {
    std::vector<LyndonWord> out;
    for (auto& w : lyndon_words(alphabet, degree)) {
        LyndonWord lw;
        lw.word = w;
        lw.degree = degree;
        lw.expansion = bracket_expand(w);
        out.push_back(std::move(lw));
    }
    return out;
}

bool lie_coordinates(const FreeSeries& h, int d, std::vector<Rational>* coords,
                     std::map<std::string, Rational>* remainder) {
    auto basis = lyndon_basis(h.alphabet, d);
    std::map<std::string, Rational> rem;
    if (d <= h.cap) rem = h.deg[d];
    std::vector<Rational> cs(basis.size(), Rational(0));
    // The bracket of a Lyndon word expands as the word itself plus lex-larger
    // words, so peeling in lex order is exact.
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = rem.find(basis[i].word);
        if (it == rem.end()) continue;
        Rational c = it->second;
        cs[i] = c;
        for (auto& [w, x] : basis[i].expansion) {
            auto jt = rem.find(w);
            if (jt == rem.end())
                rem[w] = -c * x;
            else {
                jt->second -= c * x;
                if (is_zero(jt->second)) rem.erase(jt);
            }
        }
    }
    if (coords) *coords = cs;
    if (remainder) *remainder = rem;
    return rem.empty();
}

GroupLikeReport is_group_like(const FreeSeries& g) {
    GroupLikeReport rep;
    if (g.coeff("") != 1) {
        rep.ok = false;
        rep.failing_degree = 0;
        return rep;
    }
    FreeSeries l = series_log(g);
    for (int d = 1; d <= g.cap; ++d) {
        std::map<std::string, Rational> rem;
        if (!lie_coordinates(l, d, nullptr, &rem)) {
            rep.ok = false;
            rep.failing_degree = d;
            rep.non_lie_part = rem;
            return rep;
        }
    }
    return rep;
}

std::string letter_name(int l) {
    if (l == 0) return "a";
    return "b" + std::to_string(l - 1);
}

namespace {
std::string word_name(const std::string& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ".";
        s += letter_name((unsigned char)w[i]);
    }
    return s;
}

int letter_parse(const std::string& tok, int alphabet) {
    if (tok == "a") return 0;
    if (tok.size() >= 2 && tok[0] == 'b') {
        int k = std::stoi(tok.substr(1));
        if (k + 1 >= alphabet) throw std::runtime_error("letter out of alphabet: " + tok);
        return k + 1;
    }
    throw std::runtime_error("bad letter: " + tok);
}
}  // namespace

std::string freeseries_str(const FreeSeries& f) {
    std::ostringstream os;
    for (int d = 0; d <= f.cap; ++d)
        for (auto& [w, c] : f.deg[d]) os << d << " " << word_name(w) << " " << rat_str(c) << "\n";
    return os.str();
}

FreeSeries freeseries_parse(const std::string& text, int alphabet, int cap) {
    FreeSeries f(alphabet, cap);
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int d;
        std::string wname, cstr;
        if (!(ls >> d >> wname >> cstr)) throw std::runtime_error("bad series line: " + line);
        std::string w;
        if (wname != "1") {
            std::istringstream ws(wname);
            std::string tok;
            while (std::getline(ws, tok, '.')) w.push_back((char)letter_parse(tok, alphabet));
        }
        if ((int)w.size() != d) throw std::runtime_error("degree/word mismatch: " + line);
        f.add_to(w, rat_parse(cstr));
    }
    return f;
}

}  // namespace btinv
