#pragma once

// Small ring towers used by the weight-system and quantum modules:
// polynomials in one formal symbol, degree-truncated power series, and
// dense matrices over any of these. Everything exact.

#include <cassert>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace btinv {

template <class C>
struct Poly {
    // exponent -> coefficient, no zeros stored
    std::map<int, C> a;

    Poly() = default;
    static Poly constant(const C& c) {
        Poly p;
        if (!(c == C())) p.a[0] = c;
        return p;
    }
    static Poly monomial(const C& c, int k) {
        Poly p;
        if (!(c == C())) p.a[k] = c;
        return p;
    }
    bool is_zero() const { return a.empty(); }
    Poly operator-() const {
        Poly r;
        for (auto& [k, c] : a) r.a[k] = -c;
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (auto& [k, c] : o.a) {
            auto it = a.find(k);
            if (it == a.end())
                a[k] = c;
            else {
                it->second += c;
                if (it->second == C()) a.erase(it);
            }
        }
        return *this;
    }
    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [k1, c1] : a)
            for (auto& [k2, c2] : o.a) {
                C p = c1 * c2;
                if (p == C()) continue;
                auto it = r.a.find(k1 + k2);
                if (it == r.a.end())
                    r.a[k1 + k2] = p;
                else {
                    it->second += p;
                    if (it->second == C()) r.a.erase(it);
                }
            }
        return r;
    }
    bool operator==(const Poly& o) const { return a == o.a; }
    std::string str(const std::string& var) const {
        if (a.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : a) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (k != 0) {
                os << "*" << var;
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }
};

// Power series in one variable truncated at (and including) degree cap.
template <class C>
struct Trunc {
    int cap = 0;
    std::vector<C> c;  // size cap+1

    Trunc() : c(1) {}
    explicit Trunc(int cap_) : cap(cap_), c(cap_ + 1) {}
    static Trunc constant(int cap, const C& x) {
        Trunc t(cap);
        t.c[0] = x;
        return t;
    }
    static Trunc monomial(int cap, const C& x, int k) {
        Trunc t(cap);
        if (k <= cap) t.c[k] = x;
        return t;
    }
    bool is_zero() const {
        for (auto& x : c)
            if (!(x == C())) return false;
        return true;
    }
    Trunc operator-() const {
        Trunc r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }
    Trunc& operator+=(const Trunc& o) {
        assert(cap == o.cap);
        for (int i = 0; i <= cap; ++i) c[i] += o.c[i];
        return *this;
    }
    Trunc operator+(const Trunc& o) const {
        Trunc r = *this;
        r += o;
        return r;
    }
    Trunc operator-(const Trunc& o) const { return *this + (-o); }
    Trunc operator*(const Trunc& o) const {
        assert(cap == o.cap);
        Trunc r(cap);
        for (int i = 0; i <= cap; ++i) {
            if (c[i] == C()) continue;
            for (int j = 0; i + j <= cap; ++j) {
                if (o.c[j] == C()) continue;
                r.c[i + j] += c[i] * o.c[j];
            }
        }
        return r;
    }
    bool operator==(const Trunc& o) const { return cap == o.cap && c == o.c; }
};

template <class C>
struct Mat {
    int rows = 0, cols = 0;
    std::vector<C> e;  // row major

    Mat() = default;
    Mat(int r, int c, const C& fill) : rows(r), cols(c), e(r * c, fill) {}
    C& at(int i, int j) { return e[i * cols + j]; }
    const C& at(int i, int j) const { return e[i * cols + j]; }

    static Mat identity(int n, const C& zero, const C& one) {
        Mat m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }
    Mat operator*(const Mat& o) const {
        assert(cols == o.rows);
        Mat r(rows, o.cols, C());
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const C& x = at(i, k);
                if (x == C()) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (o.at(k, j) == C()) continue;
                    r.at(i, j) += x * o.at(k, j);
                }
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r = *this;
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = r.e[i] - o.e[i];
        return r;
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool is_zero() const {
        for (auto& x : e)
            if (!(x == C())) return false;
        return true;
    }
    // Kronecker product, this acting on the left factor.
    Mat kron(const Mat& o) const {
        Mat r(rows * o.rows, cols * o.cols, C());
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (at(i, j) == C()) continue;
                for (int k = 0; k < o.rows; ++k)
                    for (int l = 0; l < o.cols; ++l) {
                        if (o.at(k, l) == C()) continue;
                        r.at(i * o.rows + k, j * o.cols + l) = at(i, j) * o.at(k, l);
                    }
            }
        return r;
    }
};

}  // namespace btinv
