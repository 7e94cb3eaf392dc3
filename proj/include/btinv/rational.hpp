#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace btinv {

using Rational = mpq_class;

inline Rational rat_of(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", "p/q".
inline Rational rat_parse(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace btinv
