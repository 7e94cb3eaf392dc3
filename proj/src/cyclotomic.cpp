#include "btinv/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace btinv {

namespace {

using Poly = std::vector<Rational>;  // dense, low degree first

void trim(Poly& p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// Exact division of polynomials over Q; remainder must come out zero when
// used for cyclotomic factors.
Poly poly_divmod(Poly num, const Poly& den, Poly* rem_out) {
    Poly q(num.size(), Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational f = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = f;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
        trim(num);
        if (num.size() >= den.size() && num.size() && is_zero(num.back())) trim(num);
    }
    if (rem_out) *rem_out = num;
    trim(q);
    return q;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int m) {
    assert(m >= 1);
    // x^m - 1 divided by all proper cyclotomic factors.
    Poly p(m + 1, Rational(0));
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        Poly rem;
        p = poly_divmod(p, cyclotomic_polynomial(d), &rem);
        assert(rem.empty());
    }
    return p;
}

int Cyclo::degree_of(int m) {
    int phi = 0;
    for (int k = 0; k < m; ++k)
        if (std::gcd(k, m) == 1) ++phi;
    return std::max(phi, 1);
}

// Precomputed reduction tables: zeta^k for k in [0, 2*deg-1] expressed in the
// power basis. Shared per modulus.
struct CycloTables {
    int deg;
    std::vector<std::vector<Rational>> pow;  // pow[k] = coords of zeta^k

    explicit CycloTables(int m) {
        auto phi = cyclotomic_polynomial(m);
        deg = (int)phi.size() - 1;
        if (m == 1) deg = 1;  // Q itself, basis {1}
        pow.resize(std::max(2 * deg, m + 1));
        for (auto& v : pow) v.assign(deg, Rational(0));
        pow[0][0] = 1;
        for (size_t k = 1; k < pow.size(); ++k) {
            // multiply pow[k-1] by zeta
            std::vector<Rational> shifted(deg + 1, Rational(0));
            for (int i = 0; i < deg; ++i) shifted[i + 1] = pow[k - 1][i];
            if (m == 1) {
                // zeta = 1
                pow[k] = pow[k - 1];
                continue;
            }
            if (!is_zero(shifted[deg])) {
                Rational f = shifted[deg];
                for (int i = 0; i < deg; ++i) shifted[i] -= f * phi[i];
            }
            for (int i = 0; i < deg; ++i) pow[k][i] = shifted[i];
        }
    }

    static const CycloTables& get(int m) {
        static std::map<int, CycloTables>* cache = new std::map<int, CycloTables>;
        static std::mutex mu;
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache->find(m);
        if (it == cache->end()) it = cache->emplace(m, CycloTables(m)).first;
        return it->second;
    }
};

Cyclo Cyclo::zeta_pow(int m, long k) {
    const auto& T = CycloTables::get(m);
    long kk = ((k % m) + m) % m;
    Cyclo r(m);
    r.c_ = T.pow[kk];
    return r;
}

bool Cyclo::is_zero() const {
    for (auto& x : c_)
        if (!btinv::is_zero(x)) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!btinv::is_zero(c_[i])) return false;
    return true;
}

Rational Cyclo::rational_part() const { return c_[0]; }

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    assert(m_ == o.m_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    assert(m_ == o.m_);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
    Cyclo r = *this;
    r += o;
    return r;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
    Cyclo r = *this;
    r -= o;
    return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
    assert(m_ == o.m_);
    const auto& T = CycloTables::get(m_);
    int deg = (int)c_.size();
    std::vector<Rational> conv(2 * deg - 1, Rational(0));
    for (int i = 0; i < deg; ++i) {
        if (btinv::is_zero(c_[i])) continue;
        for (int j = 0; j < deg; ++j) {
            if (btinv::is_zero(o.c_[j])) continue;
            conv[i + j] += c_[i] * o.c_[j];
        }
    }
    Cyclo r(m_);
    for (int k = 0; k < (int)conv.size(); ++k) {
        if (btinv::is_zero(conv[k])) continue;
        for (int i = 0; i < deg; ++i) r.c_[i] += conv[k] * T.pow[k][i];
    }
    return r;
}

Cyclo Cyclo::operator*(const Rational& r) const {
    Cyclo out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

// Extended Euclid in Q[x] against the cyclotomic minimal polynomial.
Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::runtime_error("division by zero in Q(zeta)");
    if (is_rational()) {
        Cyclo r(m_);
        r.c_[0] = Rational(1) / c_[0];
        return r;
    }
    Poly a = cyclotomic_polynomial(m_);
    Poly b(c_.begin(), c_.end());
    trim(b);
    // Maintain b*t ≡ r (mod a).
    Poly r0 = a, r1 = b;
    Poly t0, t1{Rational(1)};
    while (true) {
        assert(!r1.empty());
        Poly rem;
        Poly q = poly_divmod(r0, r1, &rem);
        if (rem.empty()) break;  // r1 is the gcd (a unit, since Phi_m irreducible)
        // t2 = t0 - q*t1
        Poly t2(std::max(t0.size(), q.size() + t1.size()), Rational(0));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < t1.size(); ++j) t2[i + j] -= q[i] * t1[j];
        trim(t2);
        t0 = t1;
        t1 = t2;
        r0 = r1;
        r1 = rem;
    }
    // r1 = gcd is a nonzero constant c; inverse = t1 / c.
    assert(r1.size() == 1);
    Cyclo out(m_);
    for (size_t i = 0; i < t1.size() && i < out.c_.size(); ++i) out.c_[i] = t1[i] / r1[0];
    assert(t1.size() <= out.c_.size());
    return out;
}

bool Cyclo::operator==(const Cyclo& o) const {
    if (m_ != o.m_) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Cyclo Cyclo::galois(long k) const {
    assert(std::gcd((long)m_, ((k % m_) + m_) % m_) == 1 || m_ == 1);
    Cyclo r(m_);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (btinv::is_zero(c_[i])) continue;
        r += zeta_pow(m_, k * (long)i) * c_[i];
    }
    return r;
}

std::string Cyclo::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (btinv::is_zero(c_[i])) continue;
        Rational v = c_[i];
        if (first) {
            if (sgn(v) < 0) os << "-", v = -v;
        } else {
            os << (sgn(v) < 0 ? " - " : " + ");
            if (sgn(v) < 0) v = -v;
        }
        first = false;
        bool unit_coeff = (v == 1);
        if (i == 0 || !unit_coeff) os << rat_str(v);
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace btinv
