#pragma once

#include <map>
#include <string>
#include <vector>

#include "btinv/rational.hpp"

namespace btinv {

// Monic minimal polynomial of a primitive m-th root of unity, as a
// coefficient vector c[0..deg] with c[deg] = 1.
std::vector<Rational> cyclotomic_polynomial(int m);

// Element of Q(zeta_m), stored as a vector of rational coordinates in the
// power basis 1, zeta, ..., zeta^{phi(m)-1}. All arithmetic is exact.
class Cyclo {
  public:
    Cyclo() : m_(1), c_(1) {}
    explicit Cyclo(int m) : m_(m) { c_.assign(degree_of(m), 0); }
    Cyclo(int m, const Rational& r) : Cyclo(m) { c_[0] = r; }

    static Cyclo zero(int m) { return Cyclo(m); }
    static Cyclo one(int m) { return Cyclo(m, 1); }
    static Cyclo rational(int m, const Rational& r) { return Cyclo(m, r); }
    // zeta_m^k, k arbitrary integer
    static Cyclo zeta_pow(int m, long k);

    int order() const { return m_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_part() const;  // valid when is_rational()

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator*(const Rational& r) const;
    Cyclo inverse() const;
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    // Galois twist zeta -> zeta^k, gcd(k, m) = 1. Used by the mirror toggle.
    Cyclo galois(long k) const;

    const std::vector<Rational>& coords() const { return c_; }
    std::string str() const;  // e.g. "1/2 - z^3" with z = zeta_m
    static int degree_of(int m);

  private:
    int m_;
    std::vector<Rational> c_;
    friend struct CycloTables;
};

}  // namespace btinv
